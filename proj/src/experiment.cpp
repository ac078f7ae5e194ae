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

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <thread>

namespace hrris
{

namespace
{

std::string fmt_g(double v, int digits)
{
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    return buf;
}

struct PointBuilder
{
    const ExperimentConfig &config;

    GridPoint make(const std::string &var, double value, const AntennaTriple &antennas, std::size_t n_elements,
                   double sigma_delta, double p_t_dbm, const Point2 &eve) const
    {
        GridPoint p;
        p.sweep_var = var;
        p.sweep_value = value;
        p.channel.topology = config.topology;
        p.channel.topology.eve = eve;
        p.channel.layout = {antennas.n_alice, antennas.n_bob, antennas.n_eve, ArrayGeometry::upa_for(n_elements)};
        p.channel.n_paths = config.n_paths;
        p.channel.sigma_delta = sigma_delta;
        p.channel.path_loss = config.path_loss;
        p.system = {dbm_to_watts(p_t_dbm), dbm_to_watts(config.noise_power_dbm), antennas.n_alice, antennas.n_bob,
                    antennas.n_eve};
        p.ao.max_outer_iters = config.ao_max_outer_iters;
        p.ao.rel_tol = config.ao_rel_tol;
        p.ao.swarm = {config.pso_iters, config.pso_particles, config.pso_kappa1, config.pso_kappa2, config.pso_penalty,
                      config.seed};
        return p;
    }

    SurfaceConfig surface(std::size_t n_elements, std::size_t n_active, double p_max_dbm) const
    {
        SurfaceConfig s = SurfaceConfig::first_k_active(n_elements, n_active, dbm_to_watts(p_max_dbm),
                                                        dbm_to_watts(config.noise_power_dbm));
        if(!config.active_set.empty() && n_active == config.n_active && n_elements == config.n_elements)
            s.active_set = config.active_set;
        return s;
    }

    bool wants(SchemeKind kind) const
    {
        return std::find(config.schemes.begin(), config.schemes.end(), kind) != config.schemes.end();
    }

    Point2 eve_at(double d_ae) const { return {config.topology.alice.x + d_ae, config.topology.alice.y}; }

    void add_all_schemes(GridPoint &p, const std::string &suffix) const
    {
        const SurfaceConfig s = surface(config.n_elements, config.n_active, config.p_max_dbm);
        for(const auto kind : config.schemes)
            p.runs.push_back({std::string(scheme_name(kind)) + suffix, Scheme{kind, s}});
    }
};

} // namespace

std::vector<GridPoint> build_grid(const ExperimentConfig &config)
{
    config.validate();
    const PointBuilder b{config};
    std::vector<GridPoint> grid;

    switch(config.experiment)
    {
    case ExperimentKind::Fig2:
        for(const auto &ant : config.fig2_antennas)
        {
            const std::string suffix = "/na" + std::to_string(ant.n_alice) + "_nb" + std::to_string(ant.n_bob) +
                                       "_ne" + std::to_string(ant.n_eve);
            for(const double p_t : config.p_t_sweep_dbm)
            {
                GridPoint p = b.make("p_t_dbm", p_t, ant, config.n_elements, config.csi_error_std, p_t,
                                     config.topology.eve);
                b.add_all_schemes(p, suffix);
                grid.push_back(std::move(p));
            }
        }
        break;

    case ExperimentKind::Fig3:
        for(const double d : config.d_ae_sweep_m)
        {
            GridPoint p = b.make("d_ae_m", d, config.antennas, config.n_elements, config.csi_error_std,
                                 config.p_t_dbm, b.eve_at(d));
            const SurfaceConfig base = b.surface(config.n_elements, config.n_active, config.p_max_dbm);
            if(b.wants(SchemeKind::NoRis))
                p.runs.push_back({"no_ris", Scheme{SchemeKind::NoRis, base}});
            if(b.wants(SchemeKind::PassiveRis))
                p.runs.push_back({"passive_ris", Scheme{SchemeKind::PassiveRis, base}});
            if(b.wants(SchemeKind::HrRis))
                for(const auto &v : config.fig3_surfaces)
                    p.runs.push_back({"hr_ris/k" + std::to_string(v.n_active) + "_pmax" + fmt_g(v.p_max_dbm, 6),
                                      Scheme{SchemeKind::HrRis, b.surface(config.n_elements, v.n_active, v.p_max_dbm)}});
            grid.push_back(std::move(p));
        }
        break;

    case ExperimentKind::Fig4:
        for(const auto n : config.fig4_n)
            for(const double sd : config.fig4_csi_error_std)
            {
                const std::string suffix = "/n" + std::to_string(n) + "_sd" + fmt_g(sd, 6);
                for(const double p_t : config.p_t_sweep_dbm)
                {
                    GridPoint p = b.make("p_t_dbm", p_t, config.antennas, n, sd, p_t, config.topology.eve);
                    const SurfaceConfig s = b.surface(n, config.n_active, config.p_max_dbm);
                    for(const auto kind : {SchemeKind::PassiveRis, SchemeKind::HrRis})
                        if(b.wants(kind))
                            p.runs.push_back({std::string(scheme_name(kind)) + suffix, Scheme{kind, s}});
                    grid.push_back(std::move(p));
                }
            }
        break;

    case ExperimentKind::Custom:
        if(config.sweep_variable == "d_ae_m")
            for(const double d : config.d_ae_sweep_m)
            {
                GridPoint p = b.make("d_ae_m", d, config.antennas, config.n_elements, config.csi_error_std,
                                     config.p_t_dbm, b.eve_at(d));
                b.add_all_schemes(p, "");
                grid.push_back(std::move(p));
            }
        else
            for(const double p_t : config.p_t_sweep_dbm)
            {
                GridPoint p = b.make("p_t_dbm", p_t, config.antennas, config.n_elements, config.csi_error_std, p_t,
                                     config.topology.eve);
                b.add_all_schemes(p, "");
                grid.push_back(std::move(p));
            }
        break;
    }

    for(const auto &p : grid)
    {
        if(p.runs.empty())
            throw ParseError("schemes", 0, "no scheme applies to experiment " +
                                               std::string(experiment_name(config.experiment)));
        try
        {
            p.channel.topology.validate();
            p.channel.path_loss.validate();
            p.system.validate();
            p.ao.validate();
            for(const auto &run : p.runs)
                run.scheme.validate();
        }
        catch(const Error &e)
        {
            const bool moved_eve = p.sweep_var == "d_ae_m";
            throw ParseError(moved_eve ? "sweep.d_ae_m" : "topology", 0,
                             "cell " + p.sweep_var + " = " + fmt_g(p.sweep_value, 9) + ": " + e.what());
        }
    }
    return grid;
}

std::vector<ResultRow> rows_for(const CellResult &cell)
{
    std::vector<ResultRow> rows;
    for(const auto &s : cell.schemes)
        rows.push_back({s.label, cell.sweep_var, cell.sweep_value, s.mean, s.std_dev, cell.n_trials, cell.seed});
    return rows;
}

std::string format_row(const ResultRow &row)
{
    return row.scheme + "," + row.sweep_var + "," + fmt_g(row.sweep_value, 9) + "," + fmt_g(row.mean_cs, 9) + "," +
           fmt_g(row.std_cs, 9) + "," + std::to_string(row.n_trials) + "," + std::to_string(row.seed);
}

std::string render_svg(const std::vector<ResultRow> &rows, const std::string &title)
{
    constexpr double width = 760, height = 480;
    constexpr double left = 70, right = 220, top = 40, bottom = 60;
    const double plot_w = width - left - right;
    const double plot_h = height - top - bottom;

    std::vector<std::string> order;
    std::map<std::string, std::vector<std::pair<double, double>>> series;
    double x_min = 0, x_max = 1, y_max = 0;
    bool first = true;
    for(const auto &r : rows)
    {
        if(!series.contains(r.scheme))
            order.push_back(r.scheme);
        series[r.scheme].emplace_back(r.sweep_value, r.mean_cs);
        x_min = first ? r.sweep_value : std::min(x_min, r.sweep_value);
        x_max = first ? r.sweep_value : std::max(x_max, r.sweep_value);
        y_max = std::max(y_max, r.mean_cs);
        first = false;
    }
    if(x_max <= x_min)
        x_max = x_min + 1.0;
    if(y_max <= 0.0)
        y_max = 1.0;
    y_max *= 1.05;

    auto px = [&](double x) { return left + (x - x_min) / (x_max - x_min) * plot_w; };
    auto py = [&](double y) { return top + plot_h - y / y_max * plot_h; };
    const std::string x_label = rows.empty() ? std::string() : rows.front().sweep_var;

    static const char *palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b",
                                    "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#393b79", "#637939"};

    std::string s;
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt_g(width, 6) + "\" height=\"" + fmt_g(height, 6) +
         "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    s += "<text x=\"" + fmt_g(left + plot_w / 2, 6) + "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">" + title +
         "</text>\n";
    s += "<rect x=\"" + fmt_g(left, 6) + "\" y=\"" + fmt_g(top, 6) + "\" width=\"" + fmt_g(plot_w, 6) +
         "\" height=\"" + fmt_g(plot_h, 6) + "\" fill=\"none\" stroke=\"black\"/>\n";
    for(int i = 0; i <= 5; ++i)
    {
        const double xv = x_min + (x_max - x_min) * i / 5.0;
        const double yv = y_max * i / 5.0;
        s += "<text x=\"" + fmt_g(px(xv), 6) + "\" y=\"" + fmt_g(top + plot_h + 18, 6) +
             "\" text-anchor=\"middle\">" + fmt_g(xv, 4) + "</text>\n";
        s += "<text x=\"" + fmt_g(left - 6, 6) + "\" y=\"" + fmt_g(py(yv) + 4, 6) + "\" text-anchor=\"end\">" +
             fmt_g(yv, 3) + "</text>\n";
        s += "<line x1=\"" + fmt_g(left, 6) + "\" y1=\"" + fmt_g(py(yv), 6) + "\" x2=\"" + fmt_g(left + plot_w, 6) +
             "\" y2=\"" + fmt_g(py(yv), 6) + "\" stroke=\"#dddddd\"/>\n";
    }
    s += "<text x=\"" + fmt_g(left + plot_w / 2, 6) + "\" y=\"" + fmt_g(height - 15, 6) +
         "\" text-anchor=\"middle\">" + x_label + "</text>\n";
    s += "<text x=\"18\" y=\"" + fmt_g(top + plot_h / 2, 6) + "\" text-anchor=\"middle\" transform=\"rotate(-90 18 " +
         fmt_g(top + plot_h / 2, 6) + ")\">mean secrecy capacity [bit/s/Hz]</text>\n";

    for(std::size_t i = 0; i < order.size(); ++i)
    {
        auto pts = series[order[i]];
        std::stable_sort(pts.begin(), pts.end());
        const char *color = palette[i % std::size(palette)];
        std::string poly;
        for(const auto &[x, y] : pts)
            poly += fmt_g(px(x), 6) + "," + fmt_g(py(y), 6) + " ";
        s += "<polyline fill=\"none\" stroke=\"" + std::string(color) + "\" stroke-width=\"2\" points=\"" + poly +
             "\"/>\n";
        for(const auto &[x, y] : pts)
            s += "<circle cx=\"" + fmt_g(px(x), 6) + "\" cy=\"" + fmt_g(py(y), 6) + "\" r=\"3\" fill=\"" + color +
                 "\"/>\n";
        const double ly = top + 10 + 18.0 * static_cast<double>(i);
        s += "<line x1=\"" + fmt_g(width - right + 12, 6) + "\" y1=\"" + fmt_g(ly, 6) + "\" x2=\"" +
             fmt_g(width - right + 36, 6) + "\" y2=\"" + fmt_g(ly, 6) + "\" stroke=\"" + color +
             "\" stroke-width=\"2\"/>\n";
        s += "<text x=\"" + fmt_g(width - right + 42, 6) + "\" y=\"" + fmt_g(ly + 4, 6) + "\">" + order[i] +
             "</text>\n";
    }
    s += "</svg>\n";
    return s;
}

std::size_t resolve_threads(std::size_t requested)
{
    if(requested > 0)
        return requested;
    if(const char *env = std::getenv("HRRIS_THREADS"))
    {
        char *end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if(end != env && *end == '\0' && v > 0)
            return v;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

ExperimentOutput run_experiment(const ExperimentConfig &config, std::ostream *progress)
{
    const std::vector<GridPoint> grid = build_grid(config);
    const std::size_t threads = resolve_threads(config.threads);
    const std::string name(experiment_name(config.experiment));

    std::filesystem::create_directories(config.output_dir);
    ExperimentOutput out;
    out.csv_path = (std::filesystem::path(config.output_dir) / (name + ".csv")).string();

    std::ofstream csv(out.csv_path, std::ios::binary | std::ios::trunc);
    if(!csv)
        throw Error("cannot write '" + out.csv_path + "'");
    csv << kCsvHeader << '\n';
    csv.flush();

    std::vector<ResultRow> all_rows;
    for(std::size_t i = 0; i < grid.size(); ++i)
    {
        const auto started = std::chrono::steady_clock::now();
        CellResult cell;
        try
        {
            cell = run_cell(grid[i], config.n_trials, config.seed, threads);
        }
        catch(const std::exception &e)
        {
            throw ExperimentError("cell " + std::to_string(i + 1) + "/" + std::to_string(grid.size()) + " (" +
                                  grid[i].sweep_var + " = " + fmt_g(grid[i].sweep_value, 9) + "): " + e.what());
        }
        for(const auto &row : rows_for(cell))
        {
            csv << format_row(row) << '\n';
            all_rows.push_back(row);
        }
        csv.flush();
        if(progress)
        {
            const double secs =
                std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
            *progress << "[" << (i + 1) << "/" << grid.size() << "] " << grid[i].sweep_var << " = "
                      << fmt_g(grid[i].sweep_value, 9) << " done in " << fmt_g(secs, 3) << " s" << std::endl;
        }
        out.cells.push_back(std::move(cell));
    }

    if(config.output_plots)
    {
        out.plot_path = (std::filesystem::path(config.output_dir) / (name + ".svg")).string();
        std::ofstream svg(out.plot_path, std::ios::binary | std::ios::trunc);
        if(!svg)
            throw Error("cannot write '" + out.plot_path + "'");
        svg << render_svg(all_rows, name + ": mean secrecy capacity, " + std::to_string(config.n_trials) + " trials");
    }
    return out;
}

} // namespace hrris
