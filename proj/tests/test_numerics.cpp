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

#include "hrris/errors.hpp"
#include "hrris/numerics.hpp"

#include <doctest.h>

#include <Eigen/Eigenvalues>

#include <cmath>
#include <limits>
#include <numbers>

using namespace hrris;
using oracle::random_matrix;

TEST_SUITE("numerics")
{

TEST_CASE("matrix construction rejects empty and non-finite input")
{
    CHECK_THROWS_AS(ComplexMatrix(0, 3), InvalidArgument);
    CHECK_THROWS_AS(ComplexMatrix(2, 0), InvalidArgument);
    CHECK_THROWS_AS(ComplexVector(std::size_t{0}), InvalidArgument);
    const double nan = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS((ComplexMatrix{{1.0, nan}}), NonFiniteValue);
    CHECK_THROWS_AS((ComplexVector{Complex(std::numeric_limits<double>::infinity(), 0.0)}), NonFiniteValue);
    CHECK_THROWS_AS((ComplexMatrix{{1.0, 2.0}, {3.0}}), DimensionMismatch);
}

TEST_CASE("products overflowing to infinity are rejected")
{
    ComplexMatrix a{{1e200, 1e200}};
    ComplexMatrix b{{1e200}, {1e200}};
    CHECK_THROWS_AS(a * b, NonFiniteValue);
    CHECK_THROWS_AS(a * ComplexMatrix(3, 1), DimensionMismatch);
}

TEST_CASE("hermitian transpose")
{
    const ComplexMatrix s{{Complex(3.0, -2.0)}};
    CHECK(hermitian(s)(0, 0) == Complex(3.0, 2.0));
    CHECK(hermitian(ComplexMatrix::identity(3)) == ComplexMatrix::identity(3));

    Rng rng(11);
    const ComplexMatrix m = random_matrix(rng, 4, 3);
    const ComplexMatrix h = hermitian(m);
    REQUIRE(h.rows() == 3);
    REQUIRE(h.cols() == 4);
    for(std::size_t r = 0; r < 3; ++r)
        for(std::size_t c = 0; c < 4; ++c)
            CHECK(h(r, c) == std::conj(m(c, r)));
    CHECK(hermitian(h) == m);
}

TEST_CASE("inverse examples")
{
    CHECK(max_abs_difference(inverse(ComplexMatrix::identity(4)), ComplexMatrix::identity(4)) == 0.0);

    const ComplexMatrix d{{2.0, 0.0}, {0.0, Complex(0.0, 4.0)}};
    const ComplexMatrix di = inverse(d);
    CHECK(std::abs(di(0, 0) - 0.5) < 1e-15);
    CHECK(std::abs(di(1, 1) - Complex(0.0, -0.25)) < 1e-15);
    CHECK(std::abs(di(0, 1)) == 0.0);
}

TEST_CASE("inverse residual on random well-conditioned matrices")
{
    Rng rng(12);
    for(int trial = 0; trial < 50; ++trial)
    {
        const ComplexMatrix m = random_matrix(rng, 6, 6) + 3.0 * ComplexMatrix::identity(6);
        CHECK(max_abs_difference(m * inverse(m), ComplexMatrix::identity(6)) < 1e-9);
        CHECK(max_abs_difference(inverse(inverse(m)), m) < 1e-8 * m.max_abs());
    }
}

TEST_CASE("inverse and solve flag singular input")
{
    const ComplexMatrix s{{1.0, 2.0}, {2.0, 4.0}};
    CHECK_THROWS_AS(inverse(s), SingularMatrix);
    CHECK_THROWS_AS(solve(s, ComplexVector{1.0, 1.0}), SingularMatrix);
    CHECK(determinant(s) == Complex(0.0));
    CHECK_THROWS_AS(inverse(ComplexMatrix(2, 3)), DimensionMismatch);
}

TEST_CASE("solve agrees with the inverse")
{
    Rng rng(13);
    const ComplexMatrix m = random_matrix(rng, 5, 5) + 2.0 * ComplexMatrix::identity(5);
    const ComplexVector b = oracle::random_vector(rng, 5);
    const ComplexVector x = solve(m, b);
    const ComplexVector r = m * x - b;
    CHECK(r.norm() < 1e-12 * b.norm() * 10);
}

TEST_CASE("determinant examples")
{
    CHECK(determinant(ComplexMatrix::identity(5)) == Complex(1.0));
    const std::vector<Complex> d{2.0, 3.0, -1.0};
    CHECK(std::abs(determinant(ComplexMatrix::diagonal(d)) - Complex(-6.0)) < 1e-15);

    // Triangular input: product of the diagonal, exactly.
    const ComplexMatrix u{{2.0, 5.0, 1.0}, {0.0, Complex(0.0, 3.0), 7.0}, {0.0, 0.0, 0.5}};
    CHECK(determinant(u) == Complex(0.0, 3.0));
}

TEST_CASE("determinant matches the cofactor expansion")
{
    Rng rng(14);
    for(int trial = 0; trial < 50; ++trial)
    {
        const ComplexMatrix m = random_matrix(rng, 5, 5);
        CHECK(oracle::rel_err(determinant(m), oracle::cofactor_det(m)) < 1e-8);
    }
}

TEST_CASE("determinant is multiplicative")
{
    Rng rng(15);
    for(int trial = 0; trial < 50; ++trial)
    {
        const std::size_t n = 1 + trial % 6;
        const ComplexMatrix a = random_matrix(rng, n, n);
        const ComplexMatrix b = random_matrix(rng, n, n);
        CHECK(oracle::rel_err(determinant(a * b), determinant(a) * determinant(b)) < 1e-8);
    }
}

TEST_CASE("Sylvester determinant identity")
{
    Rng rng(16);
    for(std::size_t p = 1; p <= 6; ++p)
        for(std::size_t q = 1; q <= 6; ++q)
        {
            const ComplexMatrix a = random_matrix(rng, p, q);
            const ComplexMatrix b = random_matrix(rng, q, p);
            const Complex lhs = determinant(ComplexMatrix::identity(p) + a * b);
            const Complex rhs = determinant(ComplexMatrix::identity(q) + b * a);
            CHECK(oracle::rel_err(lhs, rhs) < 1e-9);
        }
}

TEST_CASE("dominant eigenvector of a diagonal matrix")
{
    const std::vector<Complex> d{5.0, 1.0, 1.0};
    const EigenPair e = dominant_eigenvector(ComplexMatrix::diagonal(d));
    CHECK(std::abs(e.value - 5.0) < 1e-10);
    CHECK(std::abs(std::abs(e.vector[0]) - 1.0) < 1e-10);
    CHECK(e.vector[0].imag() == 0.0);
    CHECK(e.vector[0].real() > 0.0);
}

TEST_CASE("dominant eigenvector of a projector")
{
    Rng rng(17);
    ComplexVector v = oracle::random_vector(rng, 4);
    v *= 1.0 / v.norm();
    const EigenPair e = dominant_eigenvector(outer(v, v));
    CHECK(std::abs(e.value - 1.0) < 1e-10);
    CHECK(std::abs(std::abs(dot(v, e.vector)) - 1.0) < 1e-10);
}

TEST_CASE("dominant eigenvector matches a full eigendecomposition")
{
    Rng rng(18);
    for(int trial = 0; trial < 20; ++trial)
    {
        const ComplexMatrix m = oracle::random_hpd(rng, 6);
        const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(oracle::to_eigen(m));
        const double top = es.eigenvalues()(5);
        const double second = es.eigenvalues()(4);
        if((top - second) / top < 1e-3)
            continue; // nearly degenerate draws are outside the contract
        const EigenPair e = dominant_eigenvector(m);
        CHECK(std::abs(e.value - top) < 1e-6);
        CHECK(std::abs(e.vector.norm() - 1.0) < 1e-12);
        const ComplexVector r = m * e.vector - e.value * e.vector;
        CHECK(r.norm() < 1e-8 * m.max_abs());
    }
}

TEST_CASE("power-iteration residual decreases across checkpoints")
{
    Rng rng(19);
    PowerIterationOptions opts;
    opts.checkpoint_every = 5;
    for(int trial = 0; trial < 10; ++trial)
    {
        const EigenPair e = dominant_eigenvector(oracle::random_hpd(rng, 6), opts);
        REQUIRE(e.residual_trace.size() >= 2);
        for(std::size_t i = 1; i < e.residual_trace.size(); ++i)
            CHECK(e.residual_trace[i] <= e.residual_trace[i - 1] + 1e-12);
    }
}

TEST_CASE("power iteration on an equal-magnitude spectrum reports no convergence")
{
    // Eigenvalues +i and -i: no dominant eigenvalue.
    const ComplexMatrix rot{{0.0, 1.0}, {-1.0, 0.0}};
    PowerIterationOptions opts;
    opts.max_iterations = 200;
    CHECK_THROWS_AS(dominant_eigenvector(rot, opts), NoConvergence);
}

TEST_CASE("power iteration restarts when the start vector is in the null space")
{
    // All-ones is annihilated; the dominant eigenvector is (1, -1)/sqrt 2.
    const ComplexMatrix m{{1.0, -1.0}, {-1.0, 1.0}};
    const EigenPair e = dominant_eigenvector(m);
    CHECK(std::abs(e.value - 2.0) < 1e-10);
    CHECK(std::abs(std::abs(e.vector[0]) - std::sqrt(0.5)) < 1e-10);
}

TEST_CASE("phase canonicalisation")
{
    ComplexVector v{Complex(0.1, 0.2), Complex(0.0, -3.0), 1.0};
    canonicalize_phase(v);
    CHECK(v[1].imag() == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(v[1].real() == doctest::Approx(3.0));
    CHECK(std::abs(v[0]) == doctest::Approx(std::abs(Complex(0.1, 0.2))));
}

TEST_CASE("cholesky factor reproduces its input")
{
    Rng rng(20);
    const ComplexMatrix m = oracle::random_hpd(rng, 5);
    const ComplexMatrix g = cholesky(m);
    for(std::size_t r = 0; r < 5; ++r)
        for(std::size_t c = r + 1; c < 5; ++c)
            CHECK(g(r, c) == Complex(0.0));
    CHECK(max_abs_difference(g * hermitian(g), m) < 1e-12 * m.max_abs());
    CHECK_THROWS_AS(cholesky(ComplexMatrix{{1.0, 0.0}, {0.0, -1.0}}), SingularMatrix);
}

TEST_CASE("Hermitian eigensolver matches Eigen")
{
    Rng rng(21);
    for(std::size_t n = 1; n <= 8; ++n)
    {
        ComplexMatrix m = oracle::random_hpd(rng, n);
        m -= 2.0 * ComplexMatrix::identity(n); // indefinite
        const HermitianEigen ours = hermitian_eigen(m);
        const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(oracle::to_eigen(m));
        for(std::size_t k = 0; k < n; ++k)
        {
            CHECK(std::abs(ours.values[k] - es.eigenvalues()(static_cast<Eigen::Index>(k))) < 1e-10);
            const ComplexVector v = ours.vectors.column(k);
            CHECK(std::abs(v.norm() - 1.0) < 1e-12);
            CHECK((m * v - ours.values[k] * v).norm() < 1e-10 * std::max(1.0, m.max_abs()));
        }
        for(std::size_t k = 1; k < n; ++k)
            CHECK(ours.values[k - 1] <= ours.values[k]);
    }
}

} // TEST_SUITE
