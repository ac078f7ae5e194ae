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

#ifndef HRRIS_AO_HPP
#define HRRIS_AO_HPP

#include "hrris/beamformer.hpp"
#include "hrris/channel.hpp"
#include "hrris/swarm.hpp"
#include "hrris/system.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hrris
{

enum class SchemeKind
{
    NoRis,
    PassiveRis,
    HrRis
};

std::string_view scheme_name(SchemeKind kind) noexcept;

struct Scheme
{
    SchemeKind kind = SchemeKind::HrRis;
    SurfaceConfig surface; // ignored for NoRis; active set dropped for PassiveRis

    /// Surface actually optimised (empty active set for PassiveRis).
    SurfaceConfig effective_surface() const;
    void validate() const;
};

struct AoSettings
{
    std::size_t max_outer_iters = 10;
    double rel_tol = 1e-3;
    SwarmParams swarm;

    void validate() const;
};

struct SchemeOutcome
{
    SecrecyResult result;    // true eavesdropper channels
    SecrecyResult estimated; // estimated eavesdropper channels
    ComplexVector w{1};
    CoefficientVector coeffs;
    /// Estimated C_l - C_e: initial beamformer solve first, then one entry per accepted outer iteration.
    std::vector<double> trace;
    std::size_t outer_iterations = 0;
    /// Active elements could not run at unit gain within the budget; solved as a passive surface.
    bool passive_fallback = false;
};

SchemeOutcome run_scheme(const ChannelSet &channels, const Scheme &scheme, const SystemParams &params,
                         const AoSettings &settings, Rng &rng);

// ---------------------------------------------------------------- Monte Carlo

/// Everything needed to draw one ChannelSet.
struct ChannelSetup
{
    Topology topology;
    ArrayLayout layout;
    std::size_t n_paths = 3;
    double sigma_delta = 0.1;
    PathLossParams path_loss;
};

struct SchemeRun
{
    std::string label;
    Scheme scheme;
};

/// One cell of a sweep: a channel distribution and the schemes evaluated on it.
struct GridPoint
{
    std::string sweep_var;
    double sweep_value = 0.0;
    ChannelSetup channel;
    SystemParams system;
    AoSettings ao;
    std::vector<SchemeRun> runs;
};

struct SchemeStats
{
    std::string label;
    SchemeKind kind = SchemeKind::NoRis;
    std::vector<double> c_secrecy; // per trial, clamped
    double mean = 0.0;
    double std_dev = 0.0; // sample standard deviation
};

struct CellResult
{
    std::string sweep_var;
    double sweep_value = 0.0;
    std::size_t n_trials = 0;
    std::uint64_t seed = 0;
    std::vector<SchemeStats> schemes;
};

std::uint64_t trial_seed(std::uint64_t base_seed, std::size_t trial) noexcept;

/// Independent generator per (trial seed, stream). Stream 0 draws channels,
/// stream 1 + scheme index drives that scheme's optimiser.
Rng stream_rng(std::uint64_t seed, std::uint32_t stream);

/// Runs every scheme of one cell on the same channel set per trial.
CellResult run_cell(const GridPoint &point, std::size_t n_trials, std::uint64_t base_seed, std::size_t threads = 1);

std::vector<CellResult> monte_carlo(std::span<const GridPoint> grid, std::size_t n_trials, std::uint64_t base_seed,
                                    std::size_t threads = 1);

/// Sample mean and (n - 1) standard deviation, accumulated in input order.
std::pair<double, double> mean_and_std(std::span<const double> values) noexcept;

} // namespace hrris

#endif
