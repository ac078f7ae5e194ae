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

#include "hrris/ao.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <numbers>
#include <thread>

namespace hrris
{

std::string_view scheme_name(SchemeKind kind) noexcept
{
    switch(kind)
    {
    case SchemeKind::NoRis:
        return "no_ris";
    case SchemeKind::PassiveRis:
        return "passive_ris";
    case SchemeKind::HrRis:
        return "hr_ris";
    }
    return "unknown";
}

SurfaceConfig Scheme::effective_surface() const
{
    SurfaceConfig s = surface;
    if(kind != SchemeKind::HrRis)
        s.active_set.clear();
    return s;
}

void Scheme::validate() const
{
    if(kind == SchemeKind::NoRis)
        return;
    surface.validate();
    if(kind == SchemeKind::HrRis && surface.n_active() == 0)
        throw InvalidArgument("Scheme: HR-RIS needs at least one active element");
}

void AoSettings::validate() const
{
    if(max_outer_iters == 0)
        throw InvalidArgument("AoSettings: max_outer_iters must be >= 1");
    if(!(rel_tol > 0.0))
        throw InvalidArgument("AoSettings: rel_tol must be > 0");
    swarm.validate();
}

namespace
{

SchemeOutcome run_direct(const ChannelSet &channels, const SystemParams &params)
{
    const LinkPair est = direct_links(channels, EveCsi::Estimated);
    const BeamformingContext ctx = build_context(est, params.p_t, params.noise_power);
    ComplexVector w = optimal_beamformer(ctx);
    SchemeOutcome out;
    out.estimated = evaluate(est, w, params.noise_power);
    out.result = evaluate(direct_links(channels, EveCsi::True), w, params.noise_power);
    out.trace.push_back(std::log2(secrecy_ratio(ctx, w)));
    out.w = std::move(w);
    return out;
}

ComplexVector beamformer_for(const ChannelSet &channels, const CoefficientVector &coeffs, const SystemParams &params,
                             const SurfaceConfig &config)
{
    return optimal_beamformer(build_context(channels, coeffs, params, config, EveCsi::Estimated));
}

double unit_gain_power(const SecrecyCost &cost)
{
    double p = 0.0;
    for(const double xi : cost.xi())
        p += xi;
    return p;
}

} // namespace

SchemeOutcome run_scheme(const ChannelSet &channels, const Scheme &scheme, const SystemParams &params,
                         const AoSettings &settings, Rng &rng)
{
    params.validate();
    scheme.validate();
    settings.validate();
    if(channels.n_alice() != params.n_alice || channels.n_bob() != params.n_bob || channels.n_eve() != params.n_eve)
        throw DimensionMismatch("run_scheme: channel set antenna counts differ from SystemParams");

    if(scheme.kind == SchemeKind::NoRis)
        return run_direct(channels, params);

    SurfaceConfig config = scheme.effective_surface();
    config.noise_power = params.noise_power;
    const std::size_t n = config.n_elements;
    if(channels.n_elements() != n)
        throw DimensionMismatch("run_scheme: channel set has " + std::to_string(channels.n_elements()) +
                                " surface elements, scheme has " + std::to_string(n));

    CoefficientVector coeffs = CoefficientVector::unit(n);
    for(double &theta : coeffs.phases)
        theta = 2.0 * std::numbers::pi * std::generate_canonical<double, 53>(rng);

    SchemeOutcome out;
    ComplexVector w = beamformer_for(channels, coeffs, params, config);
    {
        const SecrecyCost probe(channels, config, w, params.noise_power, settings.swarm.penalty);
        if(config.n_active() > 0 && unit_gain_power(probe) > config.p_max)
        {
            config.active_set.clear();
            out.passive_fallback = true;
            w = beamformer_for(channels, coeffs, params, config);
        }
    }

    double incumbent = 0.0;
    {
        const SecrecyCost initial(channels, config, w, params.noise_power, settings.swarm.penalty);
        incumbent = std::log2(initial.ratio(initial.encode(coeffs)));
    }
    out.trace.push_back(incumbent);
    ComplexVector w_incumbent = w;

    for(std::size_t k = 1; k <= settings.max_outer_iters; ++k)
    {
        const SecrecyCost cost(channels, config, w, params.noise_power, settings.swarm.penalty);
        if(config.n_active() > 0 && unit_gain_power(cost) > config.p_max)
            break; // the incumbent's amplitudes no longer fit the budget for this beamformer
        const Bounds bounds = make_bounds(config, cost.xi());

        SwarmOptions options;
        options.incumbent = cost.encode(coeffs);
        const SwarmResult best = optimize(settings.swarm, bounds, std::cref(cost), rng, options);
        const double candidate = std::log2(-best.best_cost);
        ++out.outer_iterations;
        if(candidate < incumbent)
            break; // beamformer step moved the incumbent out of the feasible set

        coeffs = cost.decode(best.best_position);
        w_incumbent = w;
        const double previous = incumbent;
        incumbent = candidate;
        out.trace.push_back(incumbent);
        if(std::abs(incumbent - previous) <= settings.rel_tol * std::max(std::abs(previous), 1e-12))
            break;
        w = beamformer_for(channels, coeffs, params, config);
    }

    out.w = std::move(w_incumbent);
    out.coeffs = std::move(coeffs);
    out.estimated = evaluate(channels, out.coeffs, out.w, params, config, EveCsi::Estimated);
    out.result = evaluate(channels, out.coeffs, out.w, params, config, EveCsi::True);
    return out;
}

// ---------------------------------------------------------------- Monte Carlo

std::uint64_t trial_seed(std::uint64_t base_seed, std::size_t trial) noexcept
{
    return base_seed ^ static_cast<std::uint64_t>(trial);
}

Rng stream_rng(std::uint64_t seed, std::uint32_t stream)
{
    std::seed_seq seq{static_cast<std::uint32_t>(seed & 0xffffffffU), static_cast<std::uint32_t>(seed >> 32), stream};
    return Rng(seq);
}

std::pair<double, double> mean_and_std(std::span<const double> values) noexcept
{
    double mean = 0.0;
    double m2 = 0.0;
    std::size_t count = 0;
    for(const double x : values)
    {
        ++count;
        const double delta = x - mean;
        mean += delta / static_cast<double>(count);
        m2 += delta * (x - mean);
    }
    const double var = count > 1 ? m2 / static_cast<double>(count - 1) : 0.0;
    return {mean, std::sqrt(std::max(var, 0.0))};
}

CellResult run_cell(const GridPoint &point, std::size_t n_trials, std::uint64_t base_seed, std::size_t threads)
{
    if(n_trials == 0)
        throw InvalidArgument("run_cell: n_trials must be >= 1");
    point.system.validate();
    point.ao.validate();
    for(const auto &run : point.runs)
        run.scheme.validate();

    const std::size_t n_runs = point.runs.size();
    std::vector<std::vector<double>> values(n_runs, std::vector<double>(n_trials, 0.0));

    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr error;
    std::size_t error_trial = 0;

    auto worker = [&] {
        for(;;)
        {
            const std::size_t t = next.fetch_add(1);
            if(t >= n_trials)
                return;
            try
            {
                const std::uint64_t seed = trial_seed(base_seed, t);
                Rng channel_rng = stream_rng(seed, 0);
                const ChannelSet channels =
                    build_channel_set(point.channel.topology, point.channel.layout, point.channel.n_paths,
                                      point.channel.sigma_delta, point.channel.path_loss, channel_rng);
                for(std::size_t s = 0; s < n_runs; ++s)
                {
                    const Scheme &scheme = point.runs[s].scheme;
                    Rng rng = stream_rng(seed, 1 + static_cast<std::uint32_t>(scheme.kind));
                    values[s][t] = run_scheme(channels, scheme, point.system, point.ao, rng).result.c_secrecy;
                }
            }
            catch(...)
            {
                std::lock_guard lock(error_mutex);
                if(!error || t < error_trial)
                {
                    error = std::current_exception();
                    error_trial = t;
                }
                next.store(n_trials);
                return;
            }
        }
    };

    const std::size_t n_workers = std::clamp<std::size_t>(threads, 1, n_trials);
    if(n_workers == 1)
        worker();
    else
    {
        std::vector<std::jthread> pool;
        pool.reserve(n_workers);
        for(std::size_t i = 0; i < n_workers; ++i)
            pool.emplace_back(worker);
    }
    if(error)
    {
        try
        {
            std::rethrow_exception(error);
        }
        catch(const std::exception &e)
        {
            throw Error("cell " + point.sweep_var + "=" + std::to_string(point.sweep_value) + ", trial " +
                        std::to_string(error_trial) + ": " + e.what());
        }
    }

    CellResult cell{point.sweep_var, point.sweep_value, n_trials, base_seed, {}};
    for(std::size_t s = 0; s < n_runs; ++s)
    {
        const auto [mean, sd] = mean_and_std(values[s]);
        cell.schemes.push_back({point.runs[s].label, point.runs[s].scheme.kind, std::move(values[s]), mean, sd});
    }
    return cell;
}

std::vector<CellResult> monte_carlo(std::span<const GridPoint> grid, std::size_t n_trials, std::uint64_t base_seed,
                                    std::size_t threads)
{
    std::vector<CellResult> out;
    out.reserve(grid.size());
    for(const auto &point : grid)
        out.push_back(run_cell(point, n_trials, base_seed, threads));
    return out;
}

} // namespace hrris
