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

#ifndef HRRIS_CONFIG_HPP
#define HRRIS_CONFIG_HPP

#include "hrris/ao.hpp"
#include "hrris/channel.hpp"
#include "hrris/errors.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hrris
{

/// Config error carrying the offending key and line (0 when not tied to a line).
class ParseError : public Error
{
public:
    ParseError(std::string key, std::size_t line, const std::string &message);

    const std::string &key() const noexcept { return key_; }
    std::size_t line() const noexcept { return line_; }
    const std::string &message() const noexcept { return message_; }

private:
    std::string key_;
    std::size_t line_;
    std::string message_;
};

enum class ExperimentKind
{
    Fig2,
    Fig3,
    Fig4,
    Custom
};

std::string_view experiment_name(ExperimentKind kind) noexcept;

struct AntennaTriple
{
    std::size_t n_alice = 4;
    std::size_t n_bob = 2;
    std::size_t n_eve = 2;

    bool operator==(const AntennaTriple &) const = default;
};

struct SurfaceVariant
{
    std::size_t n_active = 2;
    double p_max_dbm = 10.0;

    bool operator==(const SurfaceVariant &) const = default;
};

/// Every knob of an experiment run. Defaults reproduce the reference setup.
struct ExperimentConfig
{
    ExperimentKind experiment = ExperimentKind::Fig2;
    std::uint64_t seed = 1;
    std::size_t n_trials = 1000;
    std::size_t threads = 0; // 0: HRRIS_THREADS or hardware concurrency

    Topology topology;
    AntennaTriple antennas;

    std::size_t n_elements = 40;
    std::size_t n_active = 2;
    std::vector<std::size_t> active_set; // empty: first n_active elements
    double p_max_dbm = 10.0;

    std::size_t n_paths = 3;
    double csi_error_std = 0.1;
    double noise_power_dbm = -80.0;
    PathLossParams path_loss;

    double p_t_dbm = 20.0;
    std::string sweep_variable = "p_t_dbm"; // custom experiments: p_t_dbm or d_ae_m
    std::vector<double> p_t_sweep_dbm{0, 5, 10, 15, 20, 25, 30};
    std::vector<double> d_ae_sweep_m{40, 50, 60, 70, 80, 90, 100, 110, 120, 130, 140};
    std::vector<SchemeKind> schemes{SchemeKind::NoRis, SchemeKind::PassiveRis, SchemeKind::HrRis};

    std::vector<AntennaTriple> fig2_antennas{{4, 2, 2}, {2, 4, 2}, {2, 2, 4}, {2, 2, 2}};
    std::vector<SurfaceVariant> fig3_surfaces{{2, 5.0}, {2, 10.0}, {4, 10.0}};
    std::vector<std::size_t> fig4_n{16, 40};
    std::vector<double> fig4_csi_error_std{0.1, 0.5};

    std::size_t pso_particles = 20;
    std::size_t pso_iters = 30;
    double pso_penalty = 1e3;
    double pso_kappa1 = 2.05;
    double pso_kappa2 = 2.05;

    std::size_t ao_max_outer_iters = 10;
    double ao_rel_tol = 1e-3;

    std::string output_dir = "results";
    bool output_plots = true;

    /// Throws ParseError naming the first invalid key.
    void validate() const;

    bool operator==(const ExperimentConfig &) const = default;
};

/// Flat "key = value" text, '#' starts a comment. Omitted keys keep their defaults.
ExperimentConfig parse_config(std::string_view text);

ExperimentConfig load_config(const std::string &path);

/// Canonical text form; parse_config(serialize_config(c)) == c.
std::string serialize_config(const ExperimentConfig &config);

/// -174 dBm/Hz + 10 log10(B) + NF
double thermal_noise_dbm(double bandwidth_hz, double noise_figure_db) noexcept;

} // namespace hrris

#endif
