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

#ifndef HRRIS_NUMERICS_HPP
#define HRRIS_NUMERICS_HPP

#include "hrris/errors.hpp"

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace hrris
{

using Complex = std::complex<double>;

/// Dense complex column vector. Always holds at least one entry.
class ComplexVector
{
public:
    explicit ComplexVector(std::size_t len);
    ComplexVector(std::initializer_list<Complex> entries);
    explicit ComplexVector(std::vector<Complex> entries);

    std::size_t size() const noexcept { return data_.size(); }

    Complex &operator[](std::size_t i) noexcept { return data_[i]; }
    const Complex &operator[](std::size_t i) const noexcept { return data_[i]; }

    std::span<Complex> span() noexcept { return data_; }
    std::span<const Complex> span() const noexcept { return data_; }

    auto begin() noexcept { return data_.begin(); }
    auto end() noexcept { return data_.end(); }
    auto begin() const noexcept { return data_.begin(); }
    auto end() const noexcept { return data_.end(); }

    double norm() const noexcept;
    double squared_norm() const noexcept;
    bool all_finite() const noexcept;

    ComplexVector &operator*=(Complex s) noexcept;
    ComplexVector &operator+=(const ComplexVector &other);
    ComplexVector &operator-=(const ComplexVector &other);

    bool operator==(const ComplexVector &) const = default;

private:
    std::vector<Complex> data_;
};

/// Dense complex matrix stored row-major.
class ComplexMatrix
{
public:
    ComplexMatrix(std::size_t rows, std::size_t cols);
    /// Row-wise literal, e.g. {{1, 2}, {3, 4}}.
    ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

    static ComplexMatrix identity(std::size_t n);
    static ComplexMatrix diagonal(std::span<const Complex> diag);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Complex &operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
    const Complex &operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

    std::span<const Complex> row_span(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }
    ComplexVector column(std::size_t c) const;
    ComplexVector row(std::size_t r) const;

    double max_abs() const noexcept;
    double frobenius_squared() const noexcept;
    bool all_finite() const noexcept;

    ComplexMatrix &operator+=(const ComplexMatrix &other);
    ComplexMatrix &operator-=(const ComplexMatrix &other);
    ComplexMatrix &operator*=(Complex s) noexcept;

    bool operator==(const ComplexMatrix &) const = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b);
ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix operator*(Complex s, ComplexMatrix a);
ComplexVector operator*(const ComplexMatrix &a, const ComplexVector &v);
ComplexVector operator*(Complex s, ComplexVector v);
ComplexVector operator+(ComplexVector a, const ComplexVector &b);
ComplexVector operator-(ComplexVector a, const ComplexVector &b);

ComplexMatrix hermitian(const ComplexMatrix &m);

/// u v^H
ComplexMatrix outer(const ComplexVector &u, const ComplexVector &v);

/// u^H v
Complex dot(const ComplexVector &u, const ComplexVector &v);

/// v^H M v
Complex quadratic_form(const ComplexMatrix &m, const ComplexVector &v);

double max_abs_difference(const ComplexMatrix &a, const ComplexMatrix &b);

// Partial-pivoted LU, P*M = L*U with unit-diagonal L packed below U.
struct LuFactors
{
    ComplexMatrix packed;
    std::vector<std::size_t> permutation; // row i of P*M is row permutation[i] of M
    int sign = 1;                         // parity of the permutation
    bool singular = false;                // a pivot fell below the relative threshold

    Complex pivot(std::size_t i) const { return packed(i, i); }
};

/// Pivots below this fraction of the largest input magnitude count as zero.
inline constexpr double kSingularPivotRatio = 1e-12;

LuFactors lu_factor(const ComplexMatrix &m);

/// Throws SingularMatrix when a pivot vanishes.
ComplexMatrix inverse(const ComplexMatrix &m);

/// Solve m x = b. Throws SingularMatrix when a pivot vanishes.
ComplexVector solve(const ComplexMatrix &m, const ComplexVector &b);

/// Product of LU pivots; returns exactly zero for singular input.
Complex determinant(const ComplexMatrix &m);

struct PowerIterationOptions
{
    std::size_t max_iterations = 10000;
    double tolerance = 1e-12;       // relative Rayleigh-quotient change
    std::size_t checkpoint_every = 0; // 0 disables the residual trace
};

struct EigenPair
{
    Complex value;
    ComplexVector vector;
    std::size_t iterations = 0;
    std::vector<double> residual_trace; // ||M v - lambda v|| at each checkpoint
};

/// Top eigenpair by power iteration. The returned vector has unit norm and its
/// largest-magnitude entry is real and nonnegative.
EigenPair dominant_eigenvector(const ComplexMatrix &m, const PowerIterationOptions &options = {});

/// Rotate v so that its largest-magnitude entry is real and nonnegative.
void canonicalize_phase(ComplexVector &v) noexcept;

/// Lower-triangular G with G G^H = m. Throws SingularMatrix unless m is Hermitian positive definite.
ComplexMatrix cholesky(const ComplexMatrix &m);

struct HermitianEigen
{
    std::vector<double> values; // ascending
    ComplexMatrix vectors;      // column k pairs with values[k]
};

/// Full eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.
HermitianEigen hermitian_eigen(const ComplexMatrix &m);

} // namespace hrris

#endif
