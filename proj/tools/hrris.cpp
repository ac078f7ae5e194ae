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

#include "hrris/experiment.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace
{

enum ExitCode
{
    kOk = 0,
    kConfigError = 1,
    kComputeError = 2
};

void report_parse_error(const hrris::ParseError &e)
{
    std::cerr << "config error: " << e.what() << '\n';
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"hrris: secrecy capacity experiments for hybrid relay-reflecting surfaces"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir;
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::size_t threads = 0;
    bool quiet = false;

    auto *run = app.add_subcommand("run", "run an experiment and write CSV and SVG results");
    run->add_option("config", config_path, "experiment config file")->required();
    auto *out_opt = run->add_option("--out", out_dir, "output directory");
    auto *seed_opt = run->add_option("--seed", seed, "base seed");
    auto *trials_opt = run->add_option("--trials", trials, "Monte Carlo trials per cell");
    auto *threads_opt = run->add_option("--threads", threads, "worker threads (0: auto)");
    run->add_flag("-q,--quiet", quiet, "suppress progress output");

    auto *validate = app.add_subcommand("validate", "parse and check a config file");
    validate->add_option("config", config_path, "experiment config file")->required();

    app.add_subcommand("defaults", "print the default config");

    CLI11_PARSE(app, argc, argv);

    if(app.got_subcommand("defaults"))
    {
        std::cout << hrris::serialize_config(hrris::ExperimentConfig{});
        return kOk;
    }

    hrris::ExperimentConfig config;
    try
    {
        config = hrris::load_config(config_path);
        if(*out_opt)
            config.output_dir = out_dir;
        if(*seed_opt)
            config.seed = seed;
        if(*trials_opt)
            config.n_trials = trials;
        if(*threads_opt)
            config.threads = threads;
        config.validate();
        (void)hrris::build_grid(config);
    }
    catch(const hrris::ParseError &e)
    {
        report_parse_error(e);
        return kConfigError;
    }
    catch(const std::exception &e)
    {
        std::cerr << "config error: " << e.what() << '\n';
        return kConfigError;
    }

    if(app.got_subcommand("validate"))
    {
        const auto grid = hrris::build_grid(config);
        std::size_t runs = 0;
        for(const auto &p : grid)
            runs += p.runs.size();
        std::cout << "ok: " << hrris::experiment_name(config.experiment) << ", " << grid.size() << " cells, " << runs
                  << " scheme runs, " << config.n_trials << " trials each\n";
        return kOk;
    }

    try
    {
        const auto out = hrris::run_experiment(config, quiet ? nullptr : &std::cerr);
        std::cout << out.csv_path << '\n';
        if(!out.plot_path.empty())
            std::cout << out.plot_path << '\n';
    }
    catch(const std::exception &e)
    {
        std::cerr << "error: " << e.what() << '\n';
        return kComputeError;
    }
    return kOk;
}
