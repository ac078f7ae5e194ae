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

#include "hrris/system.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hrris
{

double dbm_to_watts(double dbm) noexcept { return std::pow(10.0, (dbm - 30.0) / 10.0); }

double watts_to_dbm(double watts) noexcept { return 10.0 * std::log10(watts) + 30.0; }

SurfaceConfig SurfaceConfig::first_k_active(std::size_t n, std::size_t k, double p_max, double noise_power)
{
    SurfaceConfig c{n, {}, p_max, noise_power};
    for(std::size_t i = 0; i < k; ++i)
        c.active_set.push_back(i);
    return c;
}

bool SurfaceConfig::is_active(std::size_t n) const noexcept
{
    return std::find(active_set.begin(), active_set.end(), n) != active_set.end();
}

void SurfaceConfig::validate() const
{
    if(n_elements == 0)
        throw InvalidArgument("SurfaceConfig: n_elements must be >= 1");
    if(active_set.size() > n_elements)
        throw InvalidArgument("SurfaceConfig: more active elements than elements");
    std::vector<std::size_t> sorted = active_set;
    std::sort(sorted.begin(), sorted.end());
    if(std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InvalidArgument("SurfaceConfig: duplicate active element index");
    if(!sorted.empty() && sorted.back() >= n_elements)
        throw InvalidArgument("SurfaceConfig: active element index " + std::to_string(sorted.back()) +
                              " out of range");
    if(!(p_max >= 0.0) || !std::isfinite(p_max))
        throw InvalidArgument("SurfaceConfig: p_max must be finite and >= 0");
    if(!(noise_power > 0.0))
        throw InvalidArgument("SurfaceConfig: noise_power must be > 0");
}

CoefficientVector CoefficientVector::unit(std::size_t n)
{
    return {std::vector<double>(n, 1.0), std::vector<double>(n, 0.0)};
}

std::vector<Complex> CoefficientVector::values() const
{
    std::vector<Complex> out(size());
    for(std::size_t n = 0; n < size(); ++n)
        out[n] = value(n);
    return out;
}

void SystemParams::validate() const
{
    if(!(p_t > 0.0))
        throw InvalidArgument("SystemParams: p_t must be > 0");
    if(!(noise_power > 0.0))
        throw InvalidArgument("SystemParams: noise_power must be > 0");
    if(n_alice == 0 || n_bob == 0 || n_eve == 0)
        throw InvalidArgument("SystemParams: antenna counts must be >= 1");
}

ComplexMatrix effective_channel(const ComplexMatrix &h_direct, const ComplexMatrix &h_out, const ComplexMatrix &h_in,
                                const CoefficientVector &coeffs)
{
    const std::size_t n = coeffs.size();
    if(h_out.cols() != n || h_in.rows() != n || h_direct.rows() != h_out.rows() || h_direct.cols() != h_in.cols())
        throw DimensionMismatch("effective_channel: h_out " + std::to_string(h_out.rows()) + "x" +
                                std::to_string(h_out.cols()) + ", h_in " + std::to_string(h_in.rows()) + "x" +
                                std::to_string(h_in.cols()) + ", direct " + std::to_string(h_direct.rows()) + "x" +
                                std::to_string(h_direct.cols()) + ", " + std::to_string(n) + " coefficients");
    ComplexMatrix h = h_direct;
    for(std::size_t k = 0; k < n; ++k)
    {
        const Complex alpha = coeffs.value(k);
        for(std::size_t r = 0; r < h_out.rows(); ++r)
        {
            const Complex s = h_out(r, k) * alpha;
            for(std::size_t c = 0; c < h_in.cols(); ++c)
                h(r, c) += s * h_in(k, c);
        }
    }
    return h;
}

ComplexMatrix noise_covariance(const ComplexMatrix &h_out, const SurfaceConfig &config,
                               const CoefficientVector &coeffs)
{
    if(h_out.cols() != config.n_elements || coeffs.size() != config.n_elements)
        throw DimensionMismatch("noise_covariance: h_out has " + std::to_string(h_out.cols()) + " columns, " +
                                std::to_string(coeffs.size()) + " coefficients, config N = " +
                                std::to_string(config.n_elements));
    const std::size_t m = h_out.rows();
    ComplexMatrix q = ComplexMatrix::identity(m);
    for(const std::size_t k : config.active_set)
    {
        const double g = coeffs.amplitudes[k] * coeffs.amplitudes[k];
        for(std::size_t r = 0; r < m; ++r)
            for(std::size_t c = 0; c < m; ++c)
                q(r, c) += g * h_out(r, k) * std::conj(h_out(c, k));
    }
    return q;
}

double capacity(const ComplexMatrix &h_eff, const ComplexMatrix &q_noise, const ComplexVector &w, double noise_power)
{
    if(q_noise.rows() != h_eff.rows())
        throw DimensionMismatch("capacity: noise covariance does not match receiver count");
    const ComplexVector g = h_eff * w;
    const ComplexVector x = solve(q_noise, g);
    const double snr = std::max(dot(g, x).real(), 0.0) / noise_power;
    return std::log2(1.0 + snr);
}

SecrecyResult secrecy_capacity(double c_legit, double c_eve)
{
    return {c_legit, c_eve, std::max(c_legit - c_eve, 0.0)};
}

ActivePower active_power(const CoefficientVector &coeffs, const SurfaceConfig &config, const ComplexMatrix &h_ar,
                         const ComplexVector &w)
{
    if(h_ar.rows() != config.n_elements || coeffs.size() != config.n_elements)
        throw DimensionMismatch("active_power: h_ar has " + std::to_string(h_ar.rows()) + " rows, " +
                                std::to_string(coeffs.size()) + " coefficients, config N = " +
                                std::to_string(config.n_elements));
    if(h_ar.cols() != w.size())
        throw DimensionMismatch("active_power: beamformer length does not match h_ar columns");
    ActivePower out;
    out.xi.reserve(config.n_active());
    for(const std::size_t k : config.active_set)
    {
        Complex t = 0.0;
        for(std::size_t c = 0; c < w.size(); ++c)
            t += h_ar(k, c) * w[c];
        const double xi = std::norm(t) + config.noise_power;
        out.xi.push_back(xi);
        out.total += coeffs.amplitudes[k] * coeffs.amplitudes[k] * xi;
    }
    return out;
}

LinkPair effective_links(const ChannelSet &channels, const CoefficientVector &coeffs, const SurfaceConfig &config,
                         EveCsi eve)
{
    const ComplexMatrix &h_re = eve == EveCsi::True ? channels.h_re_true : channels.h_re_est;
    const ComplexMatrix &h_ae = eve == EveCsi::True ? channels.h_ae_true : channels.h_ae_est;
    return {effective_channel(channels.h_ab, channels.h_rb, channels.h_ar, coeffs),
            noise_covariance(channels.h_rb, config, coeffs), effective_channel(h_ae, h_re, channels.h_ar, coeffs),
            noise_covariance(h_re, config, coeffs)};
}

LinkPair direct_links(const ChannelSet &channels, EveCsi eve)
{
    const ComplexMatrix &h_ae = eve == EveCsi::True ? channels.h_ae_true : channels.h_ae_est;
    return {channels.h_ab, ComplexMatrix::identity(channels.n_bob()), h_ae, ComplexMatrix::identity(channels.n_eve())};
}

SecrecyResult evaluate(const LinkPair &links, const ComplexVector &w, double noise_power)
{
    return secrecy_capacity(capacity(links.h_bob, links.q_bob, w, noise_power),
                            capacity(links.h_eve, links.q_eve, w, noise_power));
}

SecrecyResult evaluate(const ChannelSet &channels, const CoefficientVector &coeffs, const ComplexVector &w,
                       const SystemParams &params, const SurfaceConfig &config, EveCsi eve)
{
    return evaluate(effective_links(channels, coeffs, config, eve), w, params.noise_power);
}

} // namespace hrris
