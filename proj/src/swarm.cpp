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

#include "hrris/swarm.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>

namespace hrris
{

void SwarmParams::validate() const
{
    if(max_iters == 0 || n_particles == 0)
        throw InvalidArgument("SwarmParams: max_iters and n_particles must be >= 1");
    if(!(kappa1 + kappa2 > 4.0))
        throw InvalidKappa("SwarmParams: kappa1 + kappa2 must exceed 4");
    if(!(penalty >= 0.0))
        throw InvalidArgument("SwarmParams: penalty must be >= 0");
}

Constriction constriction(double kappa1, double kappa2)
{
    const double k = kappa1 + kappa2;
    if(!(k > 4.0))
        throw InvalidKappa("constriction: kappa1 + kappa2 = " + std::to_string(k) + " must exceed 4");
    const double chi = 2.0 / std::abs(2.0 - k - std::sqrt(k * k - 4.0 * k));
    return {chi, chi, chi * kappa1, chi * kappa2};
}

void Bounds::validate() const
{
    if(lower.size() != upper.size() || lower.empty())
        throw DimensionMismatch("Bounds: lower and upper must be nonempty and equally sized");
    for(std::size_t j = 0; j < lower.size(); ++j)
        if(!(lower[j] <= upper[j]) || !std::isfinite(lower[j]) || !std::isfinite(upper[j]))
            throw InvalidArgument("Bounds: slot " + std::to_string(j) + " has lower > upper or is not finite");
    if(!periodic.empty() && periodic.size() != lower.size())
        throw DimensionMismatch("Bounds: periodic flags must match the bound size");
    for(std::size_t j = 0; j < periodic.size(); ++j)
        if(periodic[j] && !(lower[j] < upper[j]))
            throw InvalidArgument("Bounds: periodic slot " + std::to_string(j) + " has an empty range");
}

Bounds make_bounds(const SurfaceConfig &config, std::span<const double> xi)
{
    config.validate();
    if(xi.size() != config.n_active())
        throw DimensionMismatch("make_bounds: " + std::to_string(xi.size()) + " xi values for " +
                                std::to_string(config.n_active()) + " active elements");
    const std::size_t n = config.n_elements;
    Bounds b{std::vector<double>(2 * n, 1.0), std::vector<double>(2 * n, 1.0), std::vector<bool>(2 * n, false)};
    for(std::size_t j = n; j < 2 * n; ++j)
    {
        b.lower[j] = 0.0;
        b.upper[j] = 2.0 * std::numbers::pi;
        b.periodic[j] = true;
    }
    if(config.n_active() == 0)
        return b;

    const double min_xi = *std::min_element(xi.begin(), xi.end());
    if(config.p_max < min_xi)
        throw InfeasibleBudget("make_bounds: p_max " + std::to_string(config.p_max) + " W below min xi " +
                               std::to_string(min_xi) + " W");
    const double amp_max = std::sqrt(config.p_max / min_xi);
    for(const std::size_t k : config.active_set)
        b.upper[k] = amp_max;
    return b;
}

// ---------------------------------------------------------------- optimizer

namespace
{

double uniform01(Rng &rng) { return std::generate_canonical<double, 53>(rng); }

// Signed shortest displacement from a to b on a circle of the given length.
double circular_delta(double a, double b, double length)
{
    return std::remainder(b - a, length);
}

double wrap(double x, double lower, double length)
{
    double y = std::fmod(x - lower, length);
    if(y < 0.0)
        y += length;
    if(y >= length)
        y = 0.0;
    return lower + y;
}

struct FeasibleBest
{
    std::vector<double> position;
    double cost = std::numeric_limits<double>::infinity();
    bool found = false;

    void offer(std::span<const double> x, const Evaluation &e)
    {
        if(e.violation <= 0.0 && e.cost < cost)
        {
            position.assign(x.begin(), x.end());
            cost = e.cost;
            found = true;
        }
    }
};

} // namespace

SwarmResult optimize(const SwarmParams &params, const Bounds &bounds, const Objective &objective, Rng &rng,
                     const SwarmOptions &options)
{
    params.validate();
    bounds.validate();
    const std::size_t dims = bounds.dims();
    if(!options.incumbent.empty() && options.incumbent.size() != dims)
        throw DimensionMismatch("optimize: incumbent has " + std::to_string(options.incumbent.size()) +
                                " slots, bounds have " + std::to_string(dims));
    const Constriction coef = constriction(params.kappa1, params.kappa2);

    std::vector<Particle> swarm(params.n_particles);
    std::vector<Evaluation> evals(params.n_particles);
    FeasibleBest feasible;

    for(std::size_t i = 0; i < swarm.size(); ++i)
    {
        Particle &p = swarm[i];
        p.position.resize(dims);
        p.velocity.assign(dims, 0.0);
        for(std::size_t j = 0; j < dims; ++j)
            p.position[j] = bounds.lower[j] + (bounds.upper[j] - bounds.lower[j]) * uniform01(rng);
        if(i == 0 && !options.incumbent.empty())
            for(std::size_t j = 0; j < dims; ++j)
                p.position[j] = bounds.is_periodic(j)
                                    ? wrap(options.incumbent[j], bounds.lower[j], bounds.upper[j] - bounds.lower[j])
                                    : std::clamp(options.incumbent[j], bounds.lower[j], bounds.upper[j]);
    }

    std::size_t global = 0;
    for(std::size_t i = 0; i < swarm.size(); ++i)
    {
        Particle &p = swarm[i];
        const Evaluation e = objective(p.position);
        p.best_position = p.position;
        p.best_cost = e.cost;
        p.best_violation = e.violation;
        feasible.offer(p.position, e);
        if(e.cost < swarm[global].best_cost)
            global = i;
    }
    std::vector<double> global_position = swarm[global].best_position;
    double global_cost = swarm[global].best_cost;

    SwarmResult result;
    result.global_best_history.reserve(params.max_iters + 1);
    result.global_best_history.push_back(global_cost);
    if(options.observer)
        options.observer(0, swarm);

    for(std::size_t t = 1; t <= params.max_iters; ++t)
    {
        // Every particle moves against the global best from the start of the iteration.
        for(Particle &p : swarm)
            for(std::size_t j = 0; j < dims; ++j)
            {
                const double r1 = uniform01(rng);
                const double r2 = uniform01(rng);
                if(bounds.is_periodic(j))
                {
                    const double length = bounds.upper[j] - bounds.lower[j];
                    const double v = coef.inertia * p.velocity[j] +
                                     r1 * coef.c1 * circular_delta(p.position[j], p.best_position[j], length) +
                                     r2 * coef.c2 * circular_delta(p.position[j], global_position[j], length);
                    p.position[j] = wrap(p.position[j] + v, bounds.lower[j], length);
                    p.velocity[j] = v;
                    continue;
                }
                double v = coef.inertia * p.velocity[j] + r1 * coef.c1 * (p.best_position[j] - p.position[j]) +
                           r2 * coef.c2 * (global_position[j] - p.position[j]);
                double x = p.position[j] + v;
                if(x < bounds.lower[j])
                {
                    x = bounds.lower[j];
                    v = 0.0;
                }
                else if(x > bounds.upper[j])
                {
                    x = bounds.upper[j];
                    v = 0.0;
                }
                p.position[j] = x;
                p.velocity[j] = v;
            }

        for(std::size_t i = 0; i < swarm.size(); ++i)
            evals[i] = objective(swarm[i].position);

        for(std::size_t i = 0; i < swarm.size(); ++i)
        {
            Particle &p = swarm[i];
            const Evaluation &e = evals[i];
            feasible.offer(p.position, e);
            if(e.cost < p.best_cost)
            {
                p.best_position = p.position;
                p.best_cost = e.cost;
                p.best_violation = e.violation;
                if(e.cost < global_cost)
                {
                    global_position = p.position;
                    global_cost = e.cost;
                }
            }
        }
        result.global_best_history.push_back(global_cost);
        if(options.observer)
            options.observer(t, swarm);
    }

    if(!feasible.found)
        throw FeasibilityFailure("optimize: no feasible particle observed in " + std::to_string(params.max_iters) +
                                 " iterations");
    result.best_position = std::move(feasible.position);
    result.best_cost = feasible.cost;
    return result;
}

SwarmResult optimize(const SwarmParams &params, const Bounds &bounds, const Objective &objective,
                     const SwarmOptions &options)
{
    Rng rng(params.seed);
    return optimize(params, bounds, objective, rng, options);
}

// ---------------------------------------------------------------- cost

SecrecyCost::SecrecyCost(const ChannelSet &channels, const SurfaceConfig &config, const ComplexVector &w,
                         double noise_power, double penalty, EveCsi eve)
    : n_(config.n_elements), n_bob_(channels.n_bob()), n_eve_(channels.n_eve()), active_(config.active_set),
      p_max_(config.p_max), noise_power_(noise_power), penalty_(penalty)
{
    config.validate();
    if(channels.n_elements() != n_)
        throw DimensionMismatch("SecrecyCost: channel set has " + std::to_string(channels.n_elements()) +
                                " surface elements, config has " + std::to_string(n_));
    if(w.size() != channels.n_alice())
        throw DimensionMismatch("SecrecyCost: beamformer length does not match transmit antennas");
    if(!(noise_power > 0.0))
        throw InvalidArgument("SecrecyCost: noise_power must be > 0");

    const ComplexMatrix &h_re = eve == EveCsi::True ? channels.h_re_true : channels.h_re_est;
    const ComplexMatrix &h_ae = eve == EveCsi::True ? channels.h_ae_true : channels.h_ae_est;

    const ComplexVector t = channels.h_ar * w;
    const ComplexVector bob_direct = channels.h_ab * w;
    const ComplexVector eve_direct = h_ae * w;
    bob_direct_.assign(bob_direct.begin(), bob_direct.end());
    eve_direct_.assign(eve_direct.begin(), eve_direct.end());

    bob_cascade_.resize(n_ * n_bob_);
    eve_cascade_.resize(n_ * n_eve_);
    for(std::size_t n = 0; n < n_; ++n)
    {
        for(std::size_t r = 0; r < n_bob_; ++r)
            bob_cascade_[n * n_bob_ + r] = channels.h_rb(r, n) * t[n];
        for(std::size_t r = 0; r < n_eve_; ++r)
            eve_cascade_[n * n_eve_ + r] = h_re(r, n) * t[n];
    }
    for(const std::size_t k : active_)
    {
        xi_.push_back(std::norm(t[k]) + config.noise_power);
        for(std::size_t r = 0; r < n_bob_; ++r)
            bob_cols_.push_back(channels.h_rb(r, k));
        for(std::size_t r = 0; r < n_eve_; ++r)
            eve_cols_.push_back(h_re(r, k));
    }
    alpha_.resize(n_);
    g_.resize(std::max(n_bob_, n_eve_));
    q_.resize(std::max(n_bob_, n_eve_) * std::max(n_bob_, n_eve_));
}

double SecrecyCost::snr(std::span<const Complex> cascade, std::span<const Complex> direct,
                        std::span<const Complex> out_cols, std::size_t m, std::span<const double> position) const
{
    for(std::size_t r = 0; r < m; ++r)
        g_[r] = direct[r];
    for(std::size_t n = 0; n < n_; ++n)
    {
        const Complex a = alpha_[n];
        const Complex *col = &cascade[n * m];
        for(std::size_t r = 0; r < m; ++r)
            g_[r] += a * col[r];
    }

    // Q = I + sum_active |alpha_k|^2 c_k c_k^H, lower triangle only.
    for(std::size_t r = 0; r < m; ++r)
        for(std::size_t c = 0; c <= r; ++c)
            q_[r * m + c] = r == c ? 1.0 : 0.0;
    for(std::size_t i = 0; i < active_.size(); ++i)
    {
        const double amp = position[active_[i]];
        const double gain = amp * amp;
        const Complex *col = &out_cols[i * m];
        for(std::size_t r = 0; r < m; ++r)
            for(std::size_t c = 0; c <= r; ++c)
                q_[r * m + c] += gain * col[r] * std::conj(col[c]);
    }

    // Cholesky Q = C C^H in place, then g^H Q^-1 g = ||C^-1 g||^2.
    for(std::size_t j = 0; j < m; ++j)
    {
        double d = q_[j * m + j].real();
        for(std::size_t k = 0; k < j; ++k)
            d -= std::norm(q_[j * m + k]);
        d = std::sqrt(d);
        q_[j * m + j] = d;
        for(std::size_t r = j + 1; r < m; ++r)
        {
            Complex s = q_[r * m + j];
            for(std::size_t k = 0; k < j; ++k)
                s -= q_[r * m + k] * std::conj(q_[j * m + k]);
            q_[r * m + j] = s / d;
        }
    }
    double quad = 0.0;
    for(std::size_t r = 0; r < m; ++r)
    {
        Complex s = g_[r];
        for(std::size_t k = 0; k < r; ++k)
            s -= q_[r * m + k] * g_[k];
        g_[r] = s / q_[r * m + r].real();
        quad += std::norm(g_[r]);
    }
    return quad / noise_power_;
}

double SecrecyCost::ratio(std::span<const double> position) const
{
    if(position.size() != 2 * n_)
        throw DimensionMismatch("SecrecyCost: position has " + std::to_string(position.size()) + " slots, expected " +
                                std::to_string(2 * n_));
    for(std::size_t n = 0; n < n_; ++n)
        alpha_[n] = std::polar(position[n], position[n_ + n]);
    const double snr_bob = snr(bob_cascade_, bob_direct_, bob_cols_, n_bob_, position);
    const double snr_eve = snr(eve_cascade_, eve_direct_, eve_cols_, n_eve_, position);
    return (1.0 + snr_bob) / (1.0 + snr_eve);
}

double SecrecyCost::active_power(std::span<const double> position) const
{
    double p = 0.0;
    for(std::size_t i = 0; i < active_.size(); ++i)
    {
        const double amp = position[active_[i]];
        p += amp * amp * xi_[i];
    }
    return p;
}

Evaluation SecrecyCost::operator()(std::span<const double> position) const
{
    const double r = ratio(position);
    const double excess = std::max(active_power(position) - p_max_, 0.0);
    return {-r + penalty_ * excess, excess};
}

CoefficientVector SecrecyCost::decode(std::span<const double> position) const
{
    if(position.size() != 2 * n_)
        throw DimensionMismatch("SecrecyCost::decode: wrong position length");
    return {std::vector<double>(position.begin(), position.begin() + static_cast<std::ptrdiff_t>(n_)),
            std::vector<double>(position.begin() + static_cast<std::ptrdiff_t>(n_), position.end())};
}

std::vector<double> SecrecyCost::encode(const CoefficientVector &coeffs) const
{
    if(coeffs.size() != n_)
        throw DimensionMismatch("SecrecyCost::encode: wrong coefficient count");
    std::vector<double> x(coeffs.amplitudes);
    x.insert(x.end(), coeffs.phases.begin(), coeffs.phases.end());
    return x;
}

} // namespace hrris
