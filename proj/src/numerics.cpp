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

#include "hrris/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

namespace hrris
{

namespace
{

void require_finite(const ComplexMatrix &m, const char *what)
{
    if(!m.all_finite())
        throw NonFiniteValue(std::string(what) + ": result contains NaN or Inf");
}

void require_finite(const ComplexVector &v, const char *what)
{
    if(!v.all_finite())
        throw NonFiniteValue(std::string(what) + ": result contains NaN or Inf");
}

void require_same_shape(const ComplexMatrix &a, const ComplexMatrix &b, const char *what)
{
    if(a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionMismatch(std::string(what) + ": " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                                " vs " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
}

void require_square(const ComplexMatrix &m, const char *what)
{
    if(!m.is_square())
        throw DimensionMismatch(std::string(what) + ": matrix is " + std::to_string(m.rows()) + "x" +
                                std::to_string(m.cols()) + ", expected square");
}

bool finite(Complex z) noexcept { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

} // namespace

// ---------------------------------------------------------------- ComplexVector

ComplexVector::ComplexVector(std::size_t len) : data_(len)
{
    if(len == 0)
        throw InvalidArgument("ComplexVector: length must be >= 1");
}

ComplexVector::ComplexVector(std::initializer_list<Complex> entries) : data_(entries)
{
    if(data_.empty())
        throw InvalidArgument("ComplexVector: length must be >= 1");
    require_finite(*this, "ComplexVector");
}

ComplexVector::ComplexVector(std::vector<Complex> entries) : data_(std::move(entries))
{
    if(data_.empty())
        throw InvalidArgument("ComplexVector: length must be >= 1");
    require_finite(*this, "ComplexVector");
}

double ComplexVector::squared_norm() const noexcept
{
    double s = 0.0;
    for(const auto &z : data_)
        s += std::norm(z);
    return s;
}

double ComplexVector::norm() const noexcept { return std::sqrt(squared_norm()); }

bool ComplexVector::all_finite() const noexcept
{
    return std::all_of(data_.begin(), data_.end(), finite);
}

ComplexVector &ComplexVector::operator*=(Complex s) noexcept
{
    for(auto &z : data_)
        z *= s;
    return *this;
}

ComplexVector &ComplexVector::operator+=(const ComplexVector &other)
{
    if(other.size() != size())
        throw DimensionMismatch("vector +: length " + std::to_string(size()) + " vs " + std::to_string(other.size()));
    for(std::size_t i = 0; i < data_.size(); ++i)
        data_[i] += other.data_[i];
    return *this;
}

ComplexVector &ComplexVector::operator-=(const ComplexVector &other)
{
    if(other.size() != size())
        throw DimensionMismatch("vector -: length " + std::to_string(size()) + " vs " + std::to_string(other.size()));
    for(std::size_t i = 0; i < data_.size(); ++i)
        data_[i] -= other.data_[i];
    return *this;
}

// ---------------------------------------------------------------- ComplexMatrix

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols)
{
    if(rows == 0 || cols == 0)
        throw InvalidArgument("ComplexMatrix: dimensions must be >= 1");
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0)
{
    if(rows_ == 0 || cols_ == 0)
        throw InvalidArgument("ComplexMatrix: dimensions must be >= 1");
    data_.reserve(rows_ * cols_);
    for(const auto &r : rows)
    {
        if(r.size() != cols_)
            throw DimensionMismatch("ComplexMatrix: ragged row literal");
        data_.insert(data_.end(), r.begin(), r.end());
    }
    require_finite(*this, "ComplexMatrix");
}

ComplexMatrix ComplexMatrix::identity(std::size_t n)
{
    ComplexMatrix m(n, n);
    for(std::size_t i = 0; i < n; ++i)
        m(i, i) = 1.0;
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag)
{
    ComplexMatrix m(diag.size(), diag.size());
    for(std::size_t i = 0; i < diag.size(); ++i)
        m(i, i) = diag[i];
    return m;
}

ComplexVector ComplexMatrix::column(std::size_t c) const
{
    ComplexVector v(rows_);
    for(std::size_t r = 0; r < rows_; ++r)
        v[r] = (*this)(r, c);
    return v;
}

ComplexVector ComplexMatrix::row(std::size_t r) const
{
    ComplexVector v(cols_);
    for(std::size_t c = 0; c < cols_; ++c)
        v[c] = (*this)(r, c);
    return v;
}

double ComplexMatrix::max_abs() const noexcept
{
    double m = 0.0;
    for(const auto &z : data_)
        m = std::max(m, std::abs(z));
    return m;
}

double ComplexMatrix::frobenius_squared() const noexcept
{
    double s = 0.0;
    for(const auto &z : data_)
        s += std::norm(z);
    return s;
}

bool ComplexMatrix::all_finite() const noexcept { return std::all_of(data_.begin(), data_.end(), finite); }

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &other)
{
    require_same_shape(*this, other, "matrix +");
    for(std::size_t i = 0; i < data_.size(); ++i)
        data_[i] += other.data_[i];
    return *this;
}

ComplexMatrix &ComplexMatrix::operator-=(const ComplexMatrix &other)
{
    require_same_shape(*this, other, "matrix -");
    for(std::size_t i = 0; i < data_.size(); ++i)
        data_[i] -= other.data_[i];
    return *this;
}

ComplexMatrix &ComplexMatrix::operator*=(Complex s) noexcept
{
    for(auto &z : data_)
        z *= s;
    return *this;
}

// ---------------------------------------------------------------- free functions

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix &b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix &b) { return a -= b; }
ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
ComplexVector operator*(Complex s, ComplexVector v) { return v *= s; }
ComplexVector operator+(ComplexVector a, const ComplexVector &b) { return a += b; }
ComplexVector operator-(ComplexVector a, const ComplexVector &b) { return a -= b; }

ComplexMatrix operator*(const ComplexMatrix &a, const ComplexMatrix &b)
{
    if(a.cols() != b.rows())
        throw DimensionMismatch("matrix *: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " times " +
                                std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    ComplexMatrix out(a.rows(), b.cols());
    for(std::size_t i = 0; i < a.rows(); ++i)
        for(std::size_t k = 0; k < a.cols(); ++k)
        {
            const Complex aik = a(i, k);
            for(std::size_t j = 0; j < b.cols(); ++j)
                out(i, j) += aik * b(k, j);
        }
    require_finite(out, "matrix *");
    return out;
}

ComplexVector operator*(const ComplexMatrix &a, const ComplexVector &v)
{
    if(a.cols() != v.size())
        throw DimensionMismatch("matrix-vector *: " + std::to_string(a.cols()) + " columns vs length " +
                                std::to_string(v.size()));
    ComplexVector out(a.rows());
    for(std::size_t i = 0; i < a.rows(); ++i)
    {
        Complex s = 0.0;
        for(std::size_t k = 0; k < a.cols(); ++k)
            s += a(i, k) * v[k];
        out[i] = s;
    }
    require_finite(out, "matrix-vector *");
    return out;
}

ComplexMatrix hermitian(const ComplexMatrix &m)
{
    ComplexMatrix out(m.cols(), m.rows());
    for(std::size_t r = 0; r < m.rows(); ++r)
        for(std::size_t c = 0; c < m.cols(); ++c)
            out(c, r) = std::conj(m(r, c));
    return out;
}

ComplexMatrix outer(const ComplexVector &u, const ComplexVector &v)
{
    ComplexMatrix out(u.size(), v.size());
    for(std::size_t r = 0; r < u.size(); ++r)
        for(std::size_t c = 0; c < v.size(); ++c)
            out(r, c) = u[r] * std::conj(v[c]);
    return out;
}

Complex dot(const ComplexVector &u, const ComplexVector &v)
{
    if(u.size() != v.size())
        throw DimensionMismatch("dot: length " + std::to_string(u.size()) + " vs " + std::to_string(v.size()));
    Complex s = 0.0;
    for(std::size_t i = 0; i < u.size(); ++i)
        s += std::conj(u[i]) * v[i];
    return s;
}

Complex quadratic_form(const ComplexMatrix &m, const ComplexVector &v) { return dot(v, m * v); }

double max_abs_difference(const ComplexMatrix &a, const ComplexMatrix &b)
{
    require_same_shape(a, b, "max_abs_difference");
    double d = 0.0;
    for(std::size_t r = 0; r < a.rows(); ++r)
        for(std::size_t c = 0; c < a.cols(); ++c)
            d = std::max(d, std::abs(a(r, c) - b(r, c)));
    return d;
}

// ---------------------------------------------------------------- LU

LuFactors lu_factor(const ComplexMatrix &m)
{
    require_square(m, "lu_factor");
    const std::size_t n = m.rows();
    LuFactors f{m, std::vector<std::size_t>(n), 1, false};
    for(std::size_t i = 0; i < n; ++i)
        f.permutation[i] = i;

    const double threshold = kSingularPivotRatio * m.max_abs();
    ComplexMatrix &a = f.packed;
    for(std::size_t k = 0; k < n; ++k)
    {
        std::size_t p = k;
        double best = std::abs(a(k, k));
        for(std::size_t r = k + 1; r < n; ++r)
            if(const double mag = std::abs(a(r, k)); mag > best)
            {
                best = mag;
                p = r;
            }
        if(p != k)
        {
            for(std::size_t c = 0; c < n; ++c)
                std::swap(a(k, c), a(p, c));
            std::swap(f.permutation[k], f.permutation[p]);
            f.sign = -f.sign;
        }
        if(best <= threshold || best == 0.0)
        {
            f.singular = true;
            continue;
        }
        const Complex pivot = a(k, k);
        for(std::size_t r = k + 1; r < n; ++r)
        {
            const Complex factor = a(r, k) / pivot;
            a(r, k) = factor;
            if(factor == 0.0)
                continue;
            for(std::size_t c = k + 1; c < n; ++c)
                a(r, c) -= factor * a(k, c);
        }
    }
    return f;
}

namespace
{

// Forward/back substitution against packed LU factors.
void lu_solve_in_place(const LuFactors &f, std::span<Complex> x)
{
    const std::size_t n = f.packed.rows();
    const ComplexMatrix &a = f.packed;
    for(std::size_t i = 0; i < n; ++i)
    {
        Complex s = x[i];
        for(std::size_t k = 0; k < i; ++k)
            s -= a(i, k) * x[k];
        x[i] = s;
    }
    for(std::size_t i = n; i-- > 0;)
    {
        Complex s = x[i];
        for(std::size_t k = i + 1; k < n; ++k)
            s -= a(i, k) * x[k];
        x[i] = s / a(i, i);
    }
}

} // namespace

ComplexMatrix inverse(const ComplexMatrix &m)
{
    const LuFactors f = lu_factor(m);
    if(f.singular)
        throw SingularMatrix("inverse: pivot below " + std::to_string(kSingularPivotRatio) + " x max entry");
    const std::size_t n = m.rows();
    ComplexMatrix out(n, n);
    std::vector<Complex> col(n);
    for(std::size_t j = 0; j < n; ++j)
    {
        for(std::size_t i = 0; i < n; ++i)
            col[i] = f.permutation[i] == j ? Complex(1.0) : Complex(0.0);
        lu_solve_in_place(f, col);
        for(std::size_t i = 0; i < n; ++i)
            out(i, j) = col[i];
    }
    require_finite(out, "inverse");
    return out;
}

ComplexVector solve(const ComplexMatrix &m, const ComplexVector &b)
{
    if(m.rows() != b.size())
        throw DimensionMismatch("solve: " + std::to_string(m.rows()) + " rows vs rhs length " +
                                std::to_string(b.size()));
    const LuFactors f = lu_factor(m);
    if(f.singular)
        throw SingularMatrix("solve: pivot below " + std::to_string(kSingularPivotRatio) + " x max entry");
    ComplexVector x(b.size());
    for(std::size_t i = 0; i < b.size(); ++i)
        x[i] = b[f.permutation[i]];
    lu_solve_in_place(f, x.span());
    require_finite(x, "solve");
    return x;
}

Complex determinant(const ComplexMatrix &m)
{
    const LuFactors f = lu_factor(m);
    if(f.singular)
        return 0.0;
    Complex det = static_cast<double>(f.sign);
    for(std::size_t i = 0; i < m.rows(); ++i)
        det *= f.pivot(i);
    if(!finite(det))
        throw NonFiniteValue("determinant: overflow");
    return det;
}

// ---------------------------------------------------------------- eigen

void canonicalize_phase(ComplexVector &v) noexcept
{
    std::size_t arg = 0;
    double best = -1.0;
    for(std::size_t i = 0; i < v.size(); ++i)
        if(const double mag = std::abs(v[i]); mag > best)
        {
            best = mag;
            arg = i;
        }
    if(best > 0.0)
        v *= std::conj(v[arg]) / best;
    v[arg] = std::abs(v[arg]);
}

namespace
{

ComplexVector start_vector(std::size_t n, bool perturbed)
{
    ComplexVector v(n);
    for(std::size_t i = 0; i < n; ++i)
        v[i] = 1.0;
    if(perturbed)
    {
        // Fixed seed keeps restarts reproducible.
        std::mt19937_64 gen(0x9e3779b97f4a7c15ULL);
        std::normal_distribution<double> gauss;
        ComplexVector d(n);
        for(auto &z : d)
            z = Complex(gauss(gen), gauss(gen));
        d *= 1.0 / d.norm();
        v += d;
    }
    v *= 1.0 / v.norm();
    return v;
}

} // namespace

EigenPair dominant_eigenvector(const ComplexMatrix &m, const PowerIterationOptions &options)
{
    require_square(m, "dominant_eigenvector");
    const std::size_t n = m.rows();
    const double scale = m.max_abs();

    EigenPair out{0.0, start_vector(n, false), 0, {}};
    if(scale == 0.0)
    {
        canonicalize_phase(out.vector);
        return out;
    }

    const double residual_target = 1e-10 * scale;
    const double collapse = 1e-14 * scale;

    bool perturbed = false;
    ComplexVector v = out.vector;
    ComplexVector y = m * v;
    Complex lambda_prev = std::numeric_limits<double>::infinity();

    for(std::size_t it = 1; it <= options.max_iterations; ++it)
    {
        const double ny = y.norm();
        if(ny <= collapse)
        {
            // Start vector (nearly) in the null space: restart once off-axis.
            if(perturbed)
            {
                out.value = 0.0;
                out.vector = v;
                out.iterations = it;
                canonicalize_phase(out.vector);
                return out;
            }
            perturbed = true;
            v = start_vector(n, true);
            y = m * v;
            lambda_prev = std::numeric_limits<double>::infinity();
            continue;
        }

        const Complex lambda = dot(v, y);
        double residual = 0.0;
        for(std::size_t i = 0; i < n; ++i)
            residual += std::norm(y[i] - lambda * v[i]);
        residual = std::sqrt(residual);

        if(options.checkpoint_every != 0 && (it - 1) % options.checkpoint_every == 0)
            out.residual_trace.push_back(residual);

        const double change = std::abs(lambda - lambda_prev);
        if(change <= options.tolerance * std::max(std::abs(lambda), 1e-300) && residual <= residual_target)
        {
            out.value = lambda;
            out.vector = v;
            out.iterations = it;
            if(options.checkpoint_every != 0)
                out.residual_trace.push_back(residual);
            canonicalize_phase(out.vector);
            return out;
        }
        lambda_prev = lambda;
        v = y;
        v *= 1.0 / ny;
        y = m * v;
    }
    throw NoConvergence("dominant_eigenvector: no convergence after " + std::to_string(options.max_iterations) +
                        " iterations");
}

ComplexMatrix cholesky(const ComplexMatrix &m)
{
    require_square(m, "cholesky");
    const std::size_t n = m.rows();
    const double scale = m.max_abs();
    ComplexMatrix g(n, n);
    for(std::size_t j = 0; j < n; ++j)
    {
        double d = m(j, j).real();
        for(std::size_t k = 0; k < j; ++k)
            d -= std::norm(g(j, k));
        if(!(d > kSingularPivotRatio * scale))
            throw SingularMatrix("cholesky: matrix is not positive definite");
        const double root = std::sqrt(d);
        g(j, j) = root;
        for(std::size_t i = j + 1; i < n; ++i)
        {
            Complex acc = m(i, j);
            for(std::size_t k = 0; k < j; ++k)
                acc -= g(i, k) * std::conj(g(j, k));
            g(i, j) = acc / root;
        }
    }
    return g;
}

HermitianEigen hermitian_eigen(const ComplexMatrix &m)
{
    require_square(m, "hermitian_eigen");
    require_finite(m, "hermitian_eigen");
    const std::size_t n = m.rows();
    ComplexMatrix a = m;
    ComplexMatrix v = ComplexMatrix::identity(n);

    auto off_diagonal = [&] {
        double s = 0.0;
        for(std::size_t r = 0; r < n; ++r)
            for(std::size_t c = 0; c < n; ++c)
                if(r != c)
                    s += std::norm(a(r, c));
        return s;
    };
    const double floor = 1e-30 * std::max(a.frobenius_squared(), 1e-300);

    constexpr int kMaxSweeps = 100;
    int sweep = 0;
    for(; sweep < kMaxSweeps && off_diagonal() > floor; ++sweep)
    {
        for(std::size_t p = 0; p + 1 < n; ++p)
            for(std::size_t q = p + 1; q < n; ++q)
            {
                const Complex b = a(p, q);
                const double mag = std::abs(b);
                if(mag == 0.0)
                    continue;
                // Phase the pair to a real symmetric block, then apply a real rotation.
                const Complex phase = std::conj(b) / mag;
                const double zeta = (a(q, q).real() - a(p, p).real()) / (2.0 * mag);
                const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                // R: R_pp = c, R_pq = s, R_qp = -s*phase, R_qq = c*phase
                const Complex rpp = c, rpq = s, rqp = -s * phase, rqq = c * phase;
                for(std::size_t k = 0; k < n; ++k)
                {
                    const Complex akp = a(k, p), akq = a(k, q);
                    a(k, p) = akp * rpp + akq * rqp;
                    a(k, q) = akp * rpq + akq * rqq;
                    const Complex vkp = v(k, p), vkq = v(k, q);
                    v(k, p) = vkp * rpp + vkq * rqp;
                    v(k, q) = vkp * rpq + vkq * rqq;
                }
                for(std::size_t k = 0; k < n; ++k)
                {
                    const Complex apk = a(p, k), aqk = a(q, k);
                    a(p, k) = std::conj(rpp) * apk + std::conj(rqp) * aqk;
                    a(q, k) = std::conj(rpq) * apk + std::conj(rqq) * aqk;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
            }
    }
    if(sweep == kMaxSweeps && off_diagonal() > floor)
        throw NoConvergence("hermitian_eigen: no convergence after " + std::to_string(kMaxSweeps) + " sweeps");

    std::vector<std::size_t> order(n);
    for(std::size_t i = 0; i < n; ++i)
        order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return a(x, x).real() < a(y, y).real(); });

    HermitianEigen out{std::vector<double>(n), ComplexMatrix(n, n)};
    for(std::size_t k = 0; k < n; ++k)
    {
        out.values[k] = a(order[k], order[k]).real();
        for(std::size_t r = 0; r < n; ++r)
            out.vectors(r, k) = v(r, order[k]);
    }
    return out;
}

} // namespace hrris
