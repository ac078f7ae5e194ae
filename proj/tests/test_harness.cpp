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

#include "hrris/config.hpp"
#include "hrris/experiment.hpp"

#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/wait.h>

using namespace hrris;
namespace fs = std::filesystem;

namespace
{

std::string slurp(const fs::path &p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::size_t count_lines(const std::string &s) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), '\n')); }

fs::path scratch(const std::string &name)
{
    const fs::path dir = fs::temp_directory_path() / ("hrris_test_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

int run_cli(const std::string &args)
{
    const std::string cmd = std::string(HRRIS_CLI) + " " + args + " >/dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

ExperimentConfig tiny(ExperimentKind kind, const fs::path &dir)
{
    ExperimentConfig c;
    c.experiment = kind;
    c.n_trials = 2;
    c.threads = 1;
    c.p_t_sweep_dbm = {20.0};
    c.d_ae_sweep_m = {60.0, 120.0};
    c.n_elements = 16;
    c.fig4_n = {16};
    c.pso_iters = 5;
    c.pso_particles = 6;
    c.output_dir = dir.string();
    return c;
}

} // namespace

TEST_SUITE("harness")
{

TEST_CASE("empty config yields the default scenario")
{
    const ExperimentConfig c = parse_config("");
    CHECK(c == ExperimentConfig{});
    CHECK(c.p_t_dbm == 20.0);
    CHECK(c.n_elements == 40);
    CHECK(c.n_active == 2);
    CHECK(c.antennas == AntennaTriple{4, 2, 2});
    CHECK(c.csi_error_std == 0.1);
    CHECK(c.n_paths == 3);
    CHECK(c.pso_particles == 20);
    CHECK(c.pso_iters == 30);
    CHECK(c.pso_penalty == 1e3);
    CHECK(c.p_max_dbm == 10.0);
    CHECK(c.topology == Topology{{0, 0}, {80, 2}, {90, 0}, {100, 0}});
    CHECK(c.noise_power_dbm == -80.0);
    CHECK(dbm_to_watts(c.noise_power_dbm) == doctest::Approx(1e-11));
}

TEST_CASE("thermal noise at 251.2 MHz bandwidth")
{
    const double dbm = thermal_noise_dbm(251.2e6, 10.0);
    CHECK(dbm == doctest::Approx(-80.0).epsilon(1e-5));
    CHECK(dbm_to_watts(dbm) == doctest::Approx(1e-11).epsilon(1e-4));
}

TEST_CASE("invalid values are reported with key and line")
{
    try
    {
        parse_config("# header\nseed = 4\nn_trials = 0\n");
        FAIL("expected ParseError");
    }
    catch(const ParseError &e)
    {
        CHECK(e.key() == "n_trials");
        CHECK(e.line() == 3);
    }

    auto key_of = [](const std::string &text) {
        try
        {
            parse_config(text);
        }
        catch(const ParseError &e)
        {
            return e.key();
        }
        return std::string("<none>");
    };
    CHECK(key_of("surface.colour = red") == "surface.colour");
    CHECK(key_of("seed = 1\nseed = 2") == "seed");
    CHECK(key_of("power.p_t_dbm = loud") == "power.p_t_dbm");
    CHECK(key_of("power.p_t_dbm = inf") == "power.p_t_dbm");
    CHECK(key_of("surface.k = 50") == "surface.k");
    CHECK(key_of("surface.active = 0, 0") == "surface.active");
    CHECK(key_of("pso.kappa1 = 1.0") == "pso.kappa1");
    CHECK(key_of("experiment = fig9") == "experiment");
    CHECK(key_of("sweep.p_t_dbm =") == "sweep.p_t_dbm");
    CHECK(key_of("topology.eve = 80, 2") == "topology");
    CHECK(key_of("fig2.antennas = 4:2") == "fig2.antennas");
    CHECK(key_of("output.plots = maybe") == "output.plots");
    CHECK_THROWS_AS(parse_config("just words"), ParseError);
}

TEST_CASE("comments, blank lines and whitespace")
{
    const ExperimentConfig c = parse_config("\n  # comment\nseed=9   # trailing\n\n  surface.n  =  16 \nsurface.active = 3, 7\n");
    CHECK(c.seed == 9);
    CHECK(c.n_elements == 16);
    CHECK(c.active_set == std::vector<std::size_t>{3, 7});
}

TEST_CASE("serialisation round-trips")
{
    const std::string text = "experiment = fig3\nseed = 18446744073709551615\nn_trials = 7\n"
                             "topology.eve = 123.456, -0.1\nsurface.active = 5, 1\nchannel.csi_error_std = 0.3\n"
                             "pathloss.a_nlos = 71.99999999999\nsweep.d_ae_m = 41, 42.5\nschemes = hr_ris, no_ris\n"
                             "fig3.surfaces = 1:7.5\nfig2.antennas = 8:1:3\noutput.plots = false\n";
    const ExperimentConfig c = parse_config(text);
    CHECK(c.seed == 18446744073709551615ull);
    CHECK(parse_config(serialize_config(c)) == c);
    CHECK(serialize_config(parse_config(serialize_config(c))) == serialize_config(c));
    CHECK(parse_config(serialize_config(ExperimentConfig{})) == ExperimentConfig{});
}

TEST_CASE("load_config reads files and reports missing ones")
{
    const fs::path dir = scratch("load");
    std::ofstream(dir / "a.cfg") << "seed = 12\n";
    CHECK(load_config((dir / "a.cfg").string()).seed == 12);
    CHECK_THROWS_AS(load_config((dir / "missing.cfg").string()), Error);
}

TEST_CASE("fig2 grid")
{
    const ExperimentConfig c;
    const auto grid = build_grid(c);
    CHECK(grid.size() == 4 * 7);
    CHECK(grid[0].runs.size() == 3);
    CHECK(grid[0].runs[2].label == "hr_ris/na4_nb2_ne2");
    CHECK(grid[7].runs[0].label == "no_ris/na2_nb4_ne2");
    CHECK(grid[7].system.n_bob == 4);
    CHECK(grid[3].system.p_t == doctest::Approx(dbm_to_watts(15.0)));
    CHECK(grid[0].channel.layout.ris == ArrayGeometry::upa(5, 8));
    CHECK(grid[0].system.noise_power == doctest::Approx(1e-11));
    CHECK(grid[0].runs[2].scheme.surface.p_max == doctest::Approx(0.01));
}

TEST_CASE("fig3 grid moves the eavesdropper along the x axis")
{
    ExperimentConfig c;
    c.experiment = ExperimentKind::Fig3;
    const auto grid = build_grid(c);
    REQUIRE(grid.size() == 11);
    CHECK(grid[0].sweep_var == "d_ae_m");
    CHECK(grid[0].channel.topology.eve == Point2{40.0, 0.0});
    CHECK(grid[5].channel.topology.eve == Point2{90.0, 0.0});
    REQUIRE(grid[0].runs.size() == 5);
    CHECK(grid[0].runs[2].label == "hr_ris/k2_pmax5");
    CHECK(grid[0].runs[4].label == "hr_ris/k4_pmax10");
    CHECK(grid[0].runs[4].scheme.surface.n_active() == 4);
    CHECK(grid[0].runs[2].scheme.surface.p_max == doctest::Approx(dbm_to_watts(5.0)));
    CHECK(grid[0].system.p_t == doctest::Approx(0.1));
}

TEST_CASE("fig4 grid covers surface size and CSI error")
{
    ExperimentConfig c;
    c.experiment = ExperimentKind::Fig4;
    const auto grid = build_grid(c);
    REQUIRE(grid.size() == 2 * 2 * 7);
    CHECK(grid[0].runs.size() == 2);
    CHECK(grid[0].runs[0].label == "passive_ris/n16_sd0.1");
    CHECK(grid[0].channel.layout.ris == ArrayGeometry::upa(4, 4));
    CHECK(grid[7].channel.sigma_delta == 0.5);
    CHECK(grid[27].runs[1].label == "hr_ris/n40_sd0.5");
}

TEST_CASE("custom grids and invalid sweeps")
{
    ExperimentConfig c;
    c.experiment = ExperimentKind::Custom;
    c.schemes = {SchemeKind::HrRis};
    c.sweep_variable = "d_ae_m";
    c.d_ae_sweep_m = {50.0, 60.0};
    auto grid = build_grid(c);
    REQUIRE(grid.size() == 2);
    CHECK(grid[1].runs.size() == 1);
    CHECK(grid[1].runs[0].label == "hr_ris");
    CHECK(grid[1].channel.topology.eve == Point2{60.0, 0.0});

    c.topology.ris = {80.0, 0.0};
    c.d_ae_sweep_m = {70.0, 80.0};
    try
    {
        build_grid(c);
        FAIL("expected ParseError");
    }
    catch(const ParseError &e)
    {
        CHECK(e.key() == "sweep.d_ae_m");
    }

    ExperimentConfig f4;
    f4.experiment = ExperimentKind::Fig4;
    f4.schemes = {SchemeKind::NoRis};
    CHECK_THROWS_AS(build_grid(f4), ParseError);
}

TEST_CASE("row formatting")
{
    const ResultRow r{"hr_ris", "p_t_dbm", 20.0, 1.23456789012, 0.5, 10, 7};
    CHECK(format_row(r) == "hr_ris,p_t_dbm,20,1.23456789,0.5,10,7");
    CHECK(std::string(kCsvHeader) == "scheme,sweep_var,sweep_value,mean_cs,std_cs,n_trials,seed");
}

TEST_CASE("thread count resolution")
{
    CHECK(resolve_threads(3) == 3);
    ::setenv("HRRIS_THREADS", "5", 1);
    CHECK(resolve_threads(0) == 5);
    ::setenv("HRRIS_THREADS", "lots", 1);
    CHECK(resolve_threads(0) >= 1);
    ::unsetenv("HRRIS_THREADS");
    CHECK(resolve_threads(0) >= 1);
}

TEST_CASE("fig2 run writes one row per scheme and antenna set")
{
    const fs::path dir = scratch("fig2");
    ExperimentConfig c = tiny(ExperimentKind::Fig2, dir);
    c.n_trials = 1;
    const ExperimentOutput out = run_experiment(c);
    const std::string csv = slurp(out.csv_path);
    CHECK(count_lines(csv) == 1 + 3 * 4);
    CHECK(csv.rfind(std::string(kCsvHeader) + "\n", 0) == 0);
    CHECK(out.cells.size() == 4);

    const std::string svg = slurp(out.plot_path);
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("</svg>") != std::string::npos);
    std::size_t polylines = 0;
    for(std::size_t pos = 0; (pos = svg.find("<polyline", pos)) != std::string::npos; ++pos)
        ++polylines;
    CHECK(polylines == 12);
}

TEST_CASE("identical config and seed give byte-identical CSV")
{
    const fs::path a = scratch("det_a"), b = scratch("det_b");
    ExperimentConfig c = tiny(ExperimentKind::Fig3, a);
    c.threads = 1;
    run_experiment(c);
    c.output_dir = b.string();
    c.threads = 3;
    run_experiment(c);
    const std::string x = slurp(a / "fig3.csv");
    CHECK(x == slurp(b / "fig3.csv"));
    CHECK(count_lines(x) == 1 + 5 * 2);
}

TEST_CASE("plots can be disabled")
{
    const fs::path dir = scratch("noplot");
    ExperimentConfig c = tiny(ExperimentKind::Fig4, dir);
    c.output_plots = false;
    const ExperimentOutput out = run_experiment(c);
    CHECK(out.plot_path.empty());
    CHECK(!fs::exists(dir / "fig4.svg"));
    CHECK(count_lines(slurp(dir / "fig4.csv")) == 1 + 2 * 2);
}

TEST_CASE("a failing cell keeps the rows already written")
{
    const fs::path dir = scratch("partial");
    ExperimentConfig c = tiny(ExperimentKind::Custom, dir);
    c.n_trials = 1;
    c.schemes = {SchemeKind::NoRis};
    c.p_t_sweep_dbm = {20.0, 3500.0}; // the second cell overflows to infinity
    CHECK_THROWS_AS(run_experiment(c), ExperimentError);
    const std::string csv = slurp(dir / "custom.csv");
    CHECK(count_lines(csv) == 2);
    CHECK(csv.find("no_ris,p_t_dbm,20,") != std::string::npos);
}

TEST_CASE("command line exit codes")
{
    const fs::path dir = scratch("cli");
    CHECK(run_cli("defaults") == 0);
    CHECK(run_cli("defaults > " + (dir / "d.cfg").string()) == 0);

    std::ofstream(dir / "bad.cfg") << "n_trials = 0\n";
    std::ofstream(dir / "ok.cfg") << "experiment = custom\nsweep.p_t_dbm = 10\nsurface.n = 8\npso.max_iters = 3\n";
    std::ofstream(dir / "boom.cfg") << "experiment = custom\nschemes = no_ris\nsweep.p_t_dbm = 3500\n";

    CHECK(run_cli("validate " + (dir / "ok.cfg").string()) == 0);
    CHECK(run_cli("validate " + (dir / "bad.cfg").string()) == 1);
    CHECK(run_cli("validate " + (dir / "missing.cfg").string()) == 1);
    CHECK(run_cli("run " + (dir / "bad.cfg").string()) == 1);
    CHECK(run_cli("run " + (dir / "ok.cfg").string() + " --trials 0") == 1);
    CHECK(run_cli("run " + (dir / "boom.cfg").string() + " --trials 1 --out " + (dir / "boom").string()) == 2);
    CHECK(run_cli("run " + (dir / "ok.cfg").string() + " --trials 2 --seed 5 --threads 2 --out " +
                  (dir / "out").string()) == 0);
    const std::string csv = slurp(dir / "out" / "custom.csv");
    CHECK(count_lines(csv) == 4);
    CHECK(csv.find(",2,5\n") != std::string::npos);
    CHECK(fs::exists(dir / "out" / "custom.svg"));
    CHECK(run_cli("frobnicate") != 0);
}

} // TEST_SUITE
