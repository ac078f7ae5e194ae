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

#ifndef HRRIS_EXPERIMENT_HPP
#define HRRIS_EXPERIMENT_HPP

#include "hrris/ao.hpp"
#include "hrris/config.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace hrris
{

/// A computation failed inside a grid cell; rows for finished cells are already on disk.
class ExperimentError : public Error
{
public:
    using Error::Error;
};

struct ResultRow
{
    std::string scheme;
    std::string sweep_var;
    double sweep_value = 0.0;
    double mean_cs = 0.0;
    double std_cs = 0.0;
    std::size_t n_trials = 0;
    std::uint64_t seed = 0;
};

/// Expands a config into the ordered list of cells it runs.
std::vector<GridPoint> build_grid(const ExperimentConfig &config);

std::vector<ResultRow> rows_for(const CellResult &cell);

inline constexpr const char *kCsvHeader = "scheme,sweep_var,sweep_value,mean_cs,std_cs,n_trials,seed";

/// One CSV line (no newline), floats with 9 significant digits.
std::string format_row(const ResultRow &row);

/// Line chart of mean C_S against the swept variable, one polyline per scheme label.
std::string render_svg(const std::vector<ResultRow> &rows, const std::string &title);

/// 0 resolves to HRRIS_THREADS when set, else the hardware concurrency.
std::size_t resolve_threads(std::size_t requested);

struct ExperimentOutput
{
    std::vector<CellResult> cells;
    std::string csv_path;
    std::string plot_path; // empty when plots are disabled
};

/// Runs every cell, flushing CSV rows after each one, then writes the plot.
ExperimentOutput run_experiment(const ExperimentConfig &config, std::ostream *progress = nullptr);

} // namespace hrris

#endif
