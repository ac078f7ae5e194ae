// SPDX-License-Identifier: Apache-2.0
//
// hrris: secrecy optimization toolkit for hybrid relay-reflecting surfaces
// Copyright (C) 2026 The hrris authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "hrris/beamformer.hpp"

#include <cmath>

namespace hrris
{

namespace
{

bool hermitian_within(const ComplexMatrix &m, double tol)
{
    if(!m.is_square())
        return false;
    const double scale = std::max(m.max_abs(), 1.0);
    for(std::size_t r = 0; r < m.rows(); ++r)
        for(std::size_t c = r; c < m.cols(); ++c)
            if(std::abs(m(r, c) - std::conj(m(c, r))) > tol * scale)
                return false;
    return true;
}

} // namespace

void BeamformingContext::validate() const
{
    if(!l.is_square() || l.rows() != e.rows() || l.cols() != e.cols())
        throw DimensionMismatch("BeamformingContext: l and e must be square and equally sized");
    if(!(p_t > 0.0))
        throw InvalidArgument("BeamformingContext: p_t must be > 0");
    if(!hermitian_within(l, 1e-10) || !hermitian_within(e, 1e-10))
        throw InvalidArgument("BeamformingContext: l and e must be Hermitian");
}

ComplexMatrix snr_form(const ComplexMatrix &h, const ComplexMatrix &q, double noise_power)
{
    ComplexMatrix m = hermitian(h) * (inverse(q) * h);
    m *= 1.0 / noise_power;
    // Symmetrise away round-off so downstream Hermitian checks stay exact.
    for(std::size_t r = 0; r < m.rows(); ++r)
    {
        m(r, r) = m(r, r).real();
        for(std::size_t c = r + 1; c < m.cols(); ++c)
        {
            const Complex avg = 0.5 * (m(r, c) + std::conj(m(c, r)));
            m(r, c) = avg;
            m(c, r) = std::conj(avg);
        }
    }
    return m;
}

BeamformingContext build_context(const LinkPair &links, double p_t, double noise_power)
{
    return {snr_form(links.h_bob, links.q_bob, noise_power), snr_form(links.h_eve, links.q_eve, noise_power), p_t};
}

BeamformingContext build_context(const ChannelSet &channels, const CoefficientVector &coeffs,
                                 const SystemParams &params, const SurfaceConfig &config, EveCsi eve)
{
    return build_context(effective_links(channels, coeffs, config, eve), params.p_t, params.noise_power);
}

double secrecy_ratio(const BeamformingContext &ctx, const ComplexVector &w)
{
    return (1.0 + quadratic_form(ctx.l, w).real()) / (1.0 + quadratic_form(ctx.e, w).real());
}

ComplexVector optimal_beamformer(const BeamformingContext &ctx)
{
    ctx.validate();
    const std::size_t n = ctx.l.rows();
    const ComplexMatrix reg = (1.0 / ctx.p_t) * ComplexMatrix::identity(n);
    // With B = E + I/P_T = G G^H, the pencil (L + I/P_T, B) shares its eigenvectors with
    // G^-1 (L - E) G^-H; the identity shift keeps small P_T from flattening the spectrum.
    const ComplexMatrix g_inv = inverse(cholesky(ctx.e + reg));
    const HermitianEigen eig = hermitian_eigen(g_inv * (ctx.l - ctx.e) * hermitian(g_inv));
    ComplexVector w = hermitian(g_inv) * eig.vectors.column(n - 1);
    canonicalize_phase(w);
    w *= std::sqrt(ctx.p_t) / w.norm();
    return w;
}

} // namespace hrris
