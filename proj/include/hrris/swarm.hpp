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

#ifndef HRRIS_SWARM_HPP
#define HRRIS_SWARM_HPP

#include "hrris/channel.hpp"
#include "hrris/numerics.hpp"
#include "hrris/system.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace hrris
{

struct SwarmParams
{
    std::size_t max_iters = 30;
    std::size_t n_particles = 20;
    double kappa1 = 2.05;
    double kappa2 = 2.05;
    double penalty = 1e3;
    std::uint64_t seed = 0;

    void validate() const;
};

struct Constriction
{
    double chi = 0.0;
    double inertia = 0.0;
    double c1 = 0.0;
    double c2 = 0.0;
};

/// Clerc-Kennedy constriction, chi = 2 / |2 - k - sqrt(k^2 - 4k)| with k = k1 + k2 > 4.
Constriction constriction(double kappa1, double kappa2);

struct Bounds
{
    std::vector<double> lower;
    std::vector<double> upper;
    /// Slots that live on a circle of length upper - lower. Empty means none.
    std::vector<bool> periodic;

    std::size_t dims() const noexcept { return lower.size(); }
    bool is_periodic(std::size_t j) const noexcept { return j < periodic.size() && periodic[j]; }
    void validate() const;
};

/// Position layout is [amplitudes (N) | phases (N)]. Active amplitudes may range
/// over [1, sqrt(p_max / min xi)], passive ones are pinned to 1, phases span [0, 2 pi)
/// and are periodic.
Bounds make_bounds(const SurfaceConfig &config, std::span<const double> xi);

struct Evaluation
{
    double cost = 0.0;
    double violation = 0.0; // 0 means feasible
};

using Objective = std::function<Evaluation(std::span<const double>)>;

struct Particle
{
    std::vector<double> position;
    std::vector<double> velocity;
    std::vector<double> best_position;
    double best_cost = 0.0;
    double best_violation = 0.0;
};

struct SwarmOptions
{
    /// Seeded into particle 0 (clamped or wrapped into the bounds) when non-empty.
    std::vector<double> incumbent;
    /// Called after initialisation (iteration 0) and after every iteration.
    std::function<void(std::size_t iteration, std::span<const Particle> particles)> observer;
};

struct SwarmResult
{
    std::vector<double> best_position; // best feasible position seen
    double best_cost = 0.0;
    std::vector<double> global_best_history; // penalised global best after each iteration, initial first
};

/// Constriction PSO. Throws FeasibilityFailure when no feasible point was visited.
SwarmResult optimize(const SwarmParams &params, const Bounds &bounds, const Objective &objective, Rng &rng,
                     const SwarmOptions &options = {});

/// Uses an Rng seeded from params.seed.
SwarmResult optimize(const SwarmParams &params, const Bounds &bounds, const Objective &objective,
                     const SwarmOptions &options = {});

/// Penalised negative secrecy ratio for a fixed beamformer:
///   -(1 + w^H L w)/(1 + w^H E w) + penalty * max(0, P_a - P_max).
/// Holds scratch buffers, so one instance must not be shared across threads.
class SecrecyCost
{
public:
    SecrecyCost(const ChannelSet &channels, const SurfaceConfig &config, const ComplexVector &w, double noise_power,
                double penalty, EveCsi eve = EveCsi::Estimated);

    Evaluation operator()(std::span<const double> position) const;

    /// Unpenalised (1 + w^H L w)/(1 + w^H E w).
    double ratio(std::span<const double> position) const;
    double active_power(std::span<const double> position) const;

    CoefficientVector decode(std::span<const double> position) const;
    std::vector<double> encode(const CoefficientVector &coeffs) const;

    std::span<const double> xi() const noexcept { return xi_; }
    std::size_t dims() const noexcept { return 2 * n_; }

private:
    double snr(std::span<const Complex> cascade, std::span<const Complex> direct, std::span<const Complex> out_cols,
               std::size_t n_rx, std::span<const double> position) const;

    std::size_t n_;
    std::size_t n_bob_;
    std::size_t n_eve_;
    std::vector<std::size_t> active_;
    std::vector<double> xi_;
    double p_max_;
    double noise_power_;
    double penalty_;
    // cascade(r, n) = h_out(r, n) * (h_ar w)_n, stored column-major by element
    std::vector<Complex> bob_cascade_;
    std::vector<Complex> eve_cascade_;
    std::vector<Complex> bob_direct_; // h_ab w
    std::vector<Complex> eve_direct_; // h_ae w
    std::vector<Complex> bob_cols_;   // active columns of h_rb
    std::vector<Complex> eve_cols_;   // active columns of h_re
    mutable std::vector<Complex> alpha_;
    mutable std::vector<Complex> g_;
    mutable std::vector<Complex> q_;
};

} // namespace hrris

#endif
