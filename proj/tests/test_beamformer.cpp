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

#include "oracles.hpp"

#include "hrris/beamformer.hpp"
#include "hrris/errors.hpp"

#include <doctest.h>

#include <Eigen/Eigenvalues>

#include <cmath>
#include <numbers>

using namespace hrris;

namespace
{

/// Max of (1 + w^H L w)/(1 + w^H E w) over ||w||^2 = P: top eigenvalue of the pencil (L + I/P, E + I/P).
double pencil_optimum(const BeamformingContext &ctx)
{
    const Eigen::Index n = static_cast<Eigen::Index>(ctx.l.rows());
    const Eigen::MatrixXcd reg = Eigen::MatrixXcd::Identity(n, n) / ctx.p_t;
    const Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXcd> es(oracle::to_eigen(ctx.l) + reg,
                                                                        oracle::to_eigen(ctx.e) + reg);
    return es.eigenvalues()(n - 1);
}

BeamformingContext random_context(Rng &rng, std::size_t n, double p_t, double scale = 1.0)
{
    // Rank-deficient L and E, as for two-antenna receivers.
    const ComplexMatrix hb = oracle::random_matrix(rng, 2, n, scale);
    const ComplexMatrix he = oracle::random_matrix(rng, 2, n, scale);
    return build_context(LinkPair{hb, ComplexMatrix::identity(2), he, ComplexMatrix::identity(2)}, p_t, 1.0);
}

double direction_gap(const ComplexVector &a, const ComplexVector &b)
{
    return 1.0 - std::abs(dot(a, b)) / (a.norm() * b.norm());
}

} // namespace

TEST_SUITE("beamformer")
{

TEST_CASE("context from silent eavesdropper channels has E = 0")
{
    Rng rng(1);
    const ChannelSet ch = oracle::random_channel_set(rng, 4, 2, 2, 6);
    ChannelSet silent = ch;
    silent.h_re_est = ComplexMatrix(2, 6);
    silent.h_ae_est = ComplexMatrix(2, 4);
    const SurfaceConfig cfg = SurfaceConfig::first_k_active(6, 2, 1.0, 1.0);
    const SystemParams params{1.0, 1.0, 4, 2, 2};
    const BeamformingContext ctx = build_context(silent, oracle::random_coeffs(rng, cfg), params, cfg);
    CHECK(ctx.e.max_abs() == 0.0);
    CHECK(ctx.l.max_abs() > 0.0);
}

TEST_CASE("context matrices are Hermitian positive semidefinite")
{
    Rng rng(2);
    const SurfaceConfig cfg = SurfaceConfig::first_k_active(8, 2, 1.0, 1.0);
    const SystemParams params{1.0, 0.7, 4, 2, 2};
    for(int trial = 0; trial < 100; ++trial)
    {
        const ChannelSet ch = oracle::random_channel_set(rng, 4, 2, 2, 8, 0.1);
        const BeamformingContext ctx = build_context(ch, oracle::random_coeffs(rng, cfg), params, cfg);
        CHECK(max_abs_difference(ctx.l, hermitian(ctx.l)) <= 1e-12 * ctx.l.max_abs());
        CHECK(max_abs_difference(ctx.e, hermitian(ctx.e)) <= 1e-12 * ctx.e.max_abs());
        for(const ComplexMatrix *m : {&ctx.l, &ctx.e})
        {
            const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(oracle::to_eigen(*m));
            CHECK(es.eigenvalues()(0) >= -1e-10 * m->max_abs());
        }
    }
}

TEST_CASE("context defaults to the estimated eavesdropper channels")
{
    Rng rng(3);
    const ChannelSet ch = oracle::random_channel_set(rng, 4, 2, 2, 6, 0.5);
    const SurfaceConfig cfg = SurfaceConfig::first_k_active(6, 1, 1.0, 1.0);
    const SystemParams params{1.0, 1.0, 4, 2, 2};
    const CoefficientVector a = oracle::random_coeffs(rng, cfg);
    const BeamformingContext def = build_context(ch, a, params, cfg);
    const BeamformingContext est = build_context(ch, a, params, cfg, EveCsi::Estimated);
    const BeamformingContext tru = build_context(ch, a, params, cfg, EveCsi::True);
    CHECK(def.e == est.e);
    CHECK(!(def.e == tru.e));
}

TEST_CASE("context validation")
{
    BeamformingContext ctx{ComplexMatrix::identity(2), ComplexMatrix::identity(2), 1.0};
    CHECK_NOTHROW(ctx.validate());
    ctx.p_t = 0.0;
    CHECK_THROWS_AS(ctx.validate(), InvalidArgument);
    ctx.p_t = 1.0;
    ctx.l(0, 1) = Complex(0.0, 1.0);
    CHECK_THROWS_AS(ctx.validate(), InvalidArgument);
    ctx.l = ComplexMatrix::identity(3);
    CHECK_THROWS_AS(ctx.validate(), DimensionMismatch);
}

TEST_CASE("maximum ratio transmission when the eavesdropper is silent")
{
    Rng rng(4);
    ComplexVector v = oracle::random_vector(rng, 4);
    v *= 1.0 / v.norm();
    const double p_t = 2.5;
    const BeamformingContext ctx{3.0 * outer(v, v), ComplexMatrix(4, 4), p_t};
    const ComplexVector w = optimal_beamformer(ctx);
    CHECK(w.norm() == doctest::Approx(std::sqrt(p_t)).epsilon(1e-14));
    CHECK(direction_gap(w, v) < 1e-12);
}

TEST_CASE("single transmit antenna")
{
    const BeamformingContext ctx{ComplexMatrix{{2.0}}, ComplexMatrix{{5.0}}, 0.3};
    const ComplexVector w = optimal_beamformer(ctx);
    CHECK(w.size() == 1);
    CHECK(w[0].real() == doctest::Approx(std::sqrt(0.3)).epsilon(1e-14));
    CHECK(w[0].imag() == 0.0);
}

TEST_CASE("beamformer attains the generalized-eigenvalue optimum")
{
    Rng rng(5);
    for(int trial = 0; trial < 200; ++trial)
    {
        const double p_t = std::pow(10.0, -3.0 + 4.0 * (trial % 10) / 9.0);
        const BeamformingContext ctx = random_context(rng, 1 + trial % 8, p_t);
        const ComplexVector w = optimal_beamformer(ctx);
        CHECK(w.norm() == doctest::Approx(std::sqrt(p_t)).epsilon(1e-12));
        CHECK(oracle::rel_err(secrecy_ratio(ctx, w), pencil_optimum(ctx)) < 1e-10);
    }
}

TEST_CASE("beamformer beats random feasible beamformers")
{
    Rng rng(6);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for(int trial = 0; trial < 5; ++trial)
    {
        const BeamformingContext ctx = random_context(rng, 4, 1.0);
        const double best = secrecy_ratio(ctx, optimal_beamformer(ctx));
        double sampled = 0.0;
        for(int i = 0; i < 100000; ++i)
        {
            ComplexVector w = oracle::random_vector(rng, 4);
            w *= std::sqrt(ctx.p_t * u(rng)) / w.norm();
            sampled = std::max(sampled, secrecy_ratio(ctx, w));
        }
        CHECK(best >= sampled * (1.0 - 1e-9));
    }
}

TEST_CASE("phase rotation leaves both capacities unchanged")
{
    Rng rng(7);
    const ChannelSet ch = oracle::random_channel_set(rng, 4, 2, 2, 8, 0.1);
    const SurfaceConfig cfg = SurfaceConfig::first_k_active(8, 2, 1.0, 1.0);
    const SystemParams params{1.0, 1.0, 4, 2, 2};
    const CoefficientVector a = oracle::random_coeffs(rng, cfg);
    const ComplexVector w = optimal_beamformer(build_context(ch, a, params, cfg));
    const ComplexVector rotated = std::polar(1.0, std::numbers::pi / 3.0) * w;
    const SecrecyResult x = evaluate(ch, a, w, params, cfg, EveCsi::True);
    const SecrecyResult y = evaluate(ch, a, rotated, params, cfg, EveCsi::True);
    CHECK(x.c_legit == doctest::Approx(y.c_legit).epsilon(1e-12));
    CHECK(x.c_eve == doctest::Approx(y.c_eve).epsilon(1e-12));
}

TEST_CASE("direction is invariant to scaling L, E and 1/P_T together")
{
    Rng rng(8);
    for(int trial = 0; trial < 20; ++trial)
    {
        const BeamformingContext ctx = random_context(rng, 4, 0.8);
        for(const double c : {0.01, 3.0, 1e4})
        {
            const BeamformingContext scaled{c * ctx.l, c * ctx.e, ctx.p_t / c};
            CHECK(direction_gap(optimal_beamformer(ctx), optimal_beamformer(scaled)) < 1e-8);
        }
    }
}

TEST_CASE("beamformer is deterministic and canonically phased")
{
    Rng rng(9);
    const BeamformingContext ctx = random_context(rng, 5, 0.1);
    const ComplexVector a = optimal_beamformer(ctx);
    const ComplexVector b = optimal_beamformer(ctx);
    CHECK(a == b);
    std::size_t top = 0;
    for(std::size_t i = 1; i < a.size(); ++i)
        if(std::abs(a[i]) > std::abs(a[top]))
            top = i;
    CHECK(a[top].imag() == 0.0);
    CHECK(a[top].real() > 0.0);
}

TEST_CASE("identical legitimate and eavesdropper forms give zero secrecy")
{
    Rng rng(10);
    const ComplexMatrix h = oracle::random_matrix(rng, 2, 4);
    const LinkPair same{h, ComplexMatrix::identity(2), h, ComplexMatrix::identity(2)};
    const BeamformingContext ctx = build_context(same, 1.0, 1.0);
    const ComplexVector w = optimal_beamformer(ctx);
    CHECK(w.norm() == doctest::Approx(1.0));
    CHECK(evaluate(same, w, 1.0).c_secrecy == 0.0);
    CHECK(optimal_beamformer(ctx) == w);
}

TEST_CASE("weak channels at low transmit power still converge")
{
    // I / P_T dominates L and E here, flattening the spectrum of the ratio pencil.
    Rng rng(11);
    for(int trial = 0; trial < 200; ++trial)
    {
        const BeamformingContext ctx = random_context(rng, 4, 1e-3, 0.5);
        ComplexVector w(4);
        REQUIRE_NOTHROW(w = optimal_beamformer(ctx));
        CHECK(oracle::rel_err(secrecy_ratio(ctx, w), pencil_optimum(ctx)) < 1e-12);
    }
}

} // TEST_SUITE
