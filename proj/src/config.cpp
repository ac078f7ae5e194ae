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

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace hrris
{

ParseError::ParseError(std::string key, std::size_t line, const std::string &message)
    : Error((line ? "line " + std::to_string(line) + ": " : std::string()) + (key.empty() ? "" : key + ": ") +
            message),
      key_(std::move(key)), line_(line), message_(message)
{
}

std::string_view experiment_name(ExperimentKind kind) noexcept
{
    switch(kind)
    {
    case ExperimentKind::Fig2:
        return "fig2";
    case ExperimentKind::Fig3:
        return "fig3";
    case ExperimentKind::Fig4:
        return "fig4";
    case ExperimentKind::Custom:
        return "custom";
    }
    return "unknown";
}

double thermal_noise_dbm(double bandwidth_hz, double noise_figure_db) noexcept
{
    return -174.0 + 10.0 * std::log10(bandwidth_hz) + noise_figure_db;
}

namespace
{

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if(first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> parts;
    if(trim(s).empty())
        return parts;
    std::size_t start = 0;
    for(;;)
    {
        const auto pos = s.find(sep, start);
        parts.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if(pos == std::string_view::npos)
            break;
        start = pos + 1;
    }
    return parts;
}

// Thrown by the value parsers; the caller attaches key and line.
struct BadValue
{
    std::string message;
};

double to_double(std::string_view s)
{
    double v = 0.0;
    const auto *end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if(ec != std::errc() || ptr != end || s.empty())
        throw BadValue{"expected a number, got '" + std::string(s) + "'"};
    if(!std::isfinite(v))
        throw BadValue{"value must be finite"};
    return v;
}

std::uint64_t to_u64(std::string_view s)
{
    std::uint64_t v = 0;
    const auto *end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if(ec != std::errc() || ptr != end || s.empty())
        throw BadValue{"expected a non-negative integer, got '" + std::string(s) + "'"};
    return v;
}

std::size_t to_size(std::string_view s) { return static_cast<std::size_t>(to_u64(s)); }

bool to_bool(std::string_view s)
{
    if(s == "true" || s == "1" || s == "yes")
        return true;
    if(s == "false" || s == "0" || s == "no")
        return false;
    throw BadValue{"expected true or false, got '" + std::string(s) + "'"};
}

template <class T, class F> std::vector<T> to_list(std::string_view s, F convert)
{
    std::vector<T> out;
    for(const auto part : split(s, ','))
        out.push_back(convert(part));
    return out;
}

Point2 to_point(std::string_view s)
{
    const auto parts = split(s, ',');
    if(parts.size() != 2)
        throw BadValue{"expected 'x, y', got '" + std::string(s) + "'"};
    return {to_double(parts[0]), to_double(parts[1])};
}

AntennaTriple to_triple(std::string_view s)
{
    const auto parts = split(s, ':');
    if(parts.size() != 3)
        throw BadValue{"expected 'NA:NB:NE', got '" + std::string(s) + "'"};
    return {to_size(parts[0]), to_size(parts[1]), to_size(parts[2])};
}

SurfaceVariant to_variant(std::string_view s)
{
    const auto parts = split(s, ':');
    if(parts.size() != 2)
        throw BadValue{"expected 'K:PMAX_DBM', got '" + std::string(s) + "'"};
    return {to_size(parts[0]), to_double(parts[1])};
}

SchemeKind to_scheme(std::string_view s)
{
    for(const auto kind : {SchemeKind::NoRis, SchemeKind::PassiveRis, SchemeKind::HrRis})
        if(scheme_name(kind) == s)
            return kind;
    throw BadValue{"unknown scheme '" + std::string(s) + "' (no_ris, passive_ris, hr_ris)"};
}

ExperimentKind to_experiment(std::string_view s)
{
    for(const auto kind : {ExperimentKind::Fig2, ExperimentKind::Fig3, ExperimentKind::Fig4, ExperimentKind::Custom})
        if(experiment_name(kind) == s)
            return kind;
    throw BadValue{"unknown experiment '" + std::string(s) + "' (fig2, fig3, fig4, custom)"};
}

std::string fmt(double v)
{
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

template <class T, class F> std::string join(const std::vector<T> &items, F format, const char *sep = ", ")
{
    std::string out;
    for(std::size_t i = 0; i < items.size(); ++i)
    {
        if(i)
            out += sep;
        out += format(items[i]);
    }
    return out;
}

std::string fmt_size(std::size_t v) { return std::to_string(v); }

struct Field
{
    const char *key;
    std::function<void(ExperimentConfig &, std::string_view)> set;
    std::function<std::string(const ExperimentConfig &)> get;
};

#define HRRIS_DOUBLE(KEY, MEMBER)                                                                                   \
    Field { KEY, [](ExperimentConfig &c, std::string_view v) { c.MEMBER = to_double(v); },                         \
            [](const ExperimentConfig &c) { return fmt(c.MEMBER); } }
#define HRRIS_SIZE(KEY, MEMBER)                                                                                     \
    Field { KEY, [](ExperimentConfig &c, std::string_view v) { c.MEMBER = to_size(v); },                           \
            [](const ExperimentConfig &c) { return fmt_size(c.MEMBER); } }
#define HRRIS_POINT(KEY, MEMBER)                                                                                    \
    Field { KEY, [](ExperimentConfig &c, std::string_view v) { c.MEMBER = to_point(v); },                          \
            [](const ExperimentConfig &c) { return fmt(c.MEMBER.x) + ", " + fmt(c.MEMBER.y); } }

const std::vector<Field> &fields()
{
    static const std::vector<Field> table = {
        {"experiment", [](ExperimentConfig &c, std::string_view v) { c.experiment = to_experiment(v); },
         [](const ExperimentConfig &c) { return std::string(experiment_name(c.experiment)); }},
        {"seed", [](ExperimentConfig &c, std::string_view v) { c.seed = to_u64(v); },
         [](const ExperimentConfig &c) { return std::to_string(c.seed); }},
        HRRIS_SIZE("n_trials", n_trials),
        HRRIS_SIZE("threads", threads),
        HRRIS_POINT("topology.alice", topology.alice),
        HRRIS_POINT("topology.ris", topology.ris),
        HRRIS_POINT("topology.bob", topology.bob),
        HRRIS_POINT("topology.eve", topology.eve),
        HRRIS_SIZE("antennas.alice", antennas.n_alice),
        HRRIS_SIZE("antennas.bob", antennas.n_bob),
        HRRIS_SIZE("antennas.eve", antennas.n_eve),
        HRRIS_SIZE("surface.n", n_elements),
        HRRIS_SIZE("surface.k", n_active),
        {"surface.active",
         [](ExperimentConfig &c, std::string_view v) { c.active_set = to_list<std::size_t>(v, to_size); },
         [](const ExperimentConfig &c) { return join(c.active_set, fmt_size); }},
        HRRIS_DOUBLE("surface.p_max_dbm", p_max_dbm),
        HRRIS_SIZE("channel.n_paths", n_paths),
        HRRIS_DOUBLE("channel.csi_error_std", csi_error_std),
        HRRIS_DOUBLE("channel.noise_power_dbm", noise_power_dbm),
        HRRIS_DOUBLE("pathloss.a_los", path_loss.a_los),
        HRRIS_DOUBLE("pathloss.b_los", path_loss.b_los),
        HRRIS_DOUBLE("pathloss.sigma_los", path_loss.sigma_los),
        HRRIS_DOUBLE("pathloss.a_nlos", path_loss.a_nlos),
        HRRIS_DOUBLE("pathloss.b_nlos", path_loss.b_nlos),
        HRRIS_DOUBLE("pathloss.sigma_nlos", path_loss.sigma_nlos),
        HRRIS_DOUBLE("power.p_t_dbm", p_t_dbm),
        {"sweep.variable", [](ExperimentConfig &c, std::string_view v) { c.sweep_variable = std::string(v); },
         [](const ExperimentConfig &c) { return c.sweep_variable; }},
        {"sweep.p_t_dbm",
         [](ExperimentConfig &c, std::string_view v) { c.p_t_sweep_dbm = to_list<double>(v, to_double); },
         [](const ExperimentConfig &c) { return join(c.p_t_sweep_dbm, fmt); }},
        {"sweep.d_ae_m", [](ExperimentConfig &c, std::string_view v) { c.d_ae_sweep_m = to_list<double>(v, to_double); },
         [](const ExperimentConfig &c) { return join(c.d_ae_sweep_m, fmt); }},
        {"schemes", [](ExperimentConfig &c, std::string_view v) { c.schemes = to_list<SchemeKind>(v, to_scheme); },
         [](const ExperimentConfig &c) {
             return join(c.schemes, [](SchemeKind k) { return std::string(scheme_name(k)); });
         }},
        {"fig2.antennas",
         [](ExperimentConfig &c, std::string_view v) { c.fig2_antennas = to_list<AntennaTriple>(v, to_triple); },
         [](const ExperimentConfig &c) {
             return join(c.fig2_antennas, [](const AntennaTriple &t) {
                 return fmt_size(t.n_alice) + ":" + fmt_size(t.n_bob) + ":" + fmt_size(t.n_eve);
             });
         }},
        {"fig3.surfaces",
         [](ExperimentConfig &c, std::string_view v) { c.fig3_surfaces = to_list<SurfaceVariant>(v, to_variant); },
         [](const ExperimentConfig &c) {
             return join(c.fig3_surfaces,
                         [](const SurfaceVariant &s) { return fmt_size(s.n_active) + ":" + fmt(s.p_max_dbm); });
         }},
        {"fig4.n", [](ExperimentConfig &c, std::string_view v) { c.fig4_n = to_list<std::size_t>(v, to_size); },
         [](const ExperimentConfig &c) { return join(c.fig4_n, fmt_size); }},
        {"fig4.csi_error_std",
         [](ExperimentConfig &c, std::string_view v) { c.fig4_csi_error_std = to_list<double>(v, to_double); },
         [](const ExperimentConfig &c) { return join(c.fig4_csi_error_std, fmt); }},
        HRRIS_SIZE("pso.n_particles", pso_particles),
        HRRIS_SIZE("pso.max_iters", pso_iters),
        HRRIS_DOUBLE("pso.penalty", pso_penalty),
        HRRIS_DOUBLE("pso.kappa1", pso_kappa1),
        HRRIS_DOUBLE("pso.kappa2", pso_kappa2),
        HRRIS_SIZE("ao.max_outer_iters", ao_max_outer_iters),
        HRRIS_DOUBLE("ao.rel_tol", ao_rel_tol),
        {"output.dir", [](ExperimentConfig &c, std::string_view v) { c.output_dir = std::string(v); },
         [](const ExperimentConfig &c) { return c.output_dir; }},
        {"output.plots", [](ExperimentConfig &c, std::string_view v) { c.output_plots = to_bool(v); },
         [](const ExperimentConfig &c) { return std::string(c.output_plots ? "true" : "false"); }},
    };
    return table;
}

#undef HRRIS_DOUBLE
#undef HRRIS_SIZE
#undef HRRIS_POINT

void require(bool ok, const char *key, const std::string &message)
{
    if(!ok)
        throw ParseError(key, 0, message);
}

} // namespace

void ExperimentConfig::validate() const
{
    require(n_trials >= 1, "n_trials", "must be >= 1");
    try
    {
        topology.validate();
    }
    catch(const InvalidArgument &e)
    {
        throw ParseError("topology", 0, e.what());
    }
    require(antennas.n_alice >= 1, "antennas.alice", "must be >= 1");
    require(antennas.n_bob >= 1, "antennas.bob", "must be >= 1");
    require(antennas.n_eve >= 1, "antennas.eve", "must be >= 1");
    require(n_elements >= 1, "surface.n", "must be >= 1");
    require(n_active >= 1, "surface.k", "must be >= 1 (the passive benchmark is a separate scheme)");
    require(n_active <= n_elements, "surface.k", "must not exceed surface.n");
    if(!active_set.empty())
    {
        require(active_set.size() == n_active, "surface.active", "must list exactly surface.k indices");
        std::set<std::size_t> seen;
        for(const auto i : active_set)
        {
            require(i < n_elements, "surface.active", "index " + std::to_string(i) + " out of range");
            require(seen.insert(i).second, "surface.active", "duplicate index " + std::to_string(i));
        }
    }
    require(n_paths >= 1, "channel.n_paths", "must be >= 1");
    require(csi_error_std >= 0.0, "channel.csi_error_std", "must be >= 0");
    require(path_loss.b_los >= 0.0, "pathloss.b_los", "must be >= 0");
    require(path_loss.b_nlos >= 0.0, "pathloss.b_nlos", "must be >= 0");
    require(path_loss.sigma_los >= 0.0, "pathloss.sigma_los", "must be >= 0");
    require(path_loss.sigma_nlos >= 0.0, "pathloss.sigma_nlos", "must be >= 0");
    require(sweep_variable == "p_t_dbm" || sweep_variable == "d_ae_m", "sweep.variable",
            "must be p_t_dbm or d_ae_m");
    require(!p_t_sweep_dbm.empty(), "sweep.p_t_dbm", "must not be empty");
    require(!d_ae_sweep_m.empty(), "sweep.d_ae_m", "must not be empty");
    for(const double d : d_ae_sweep_m)
        require(d > 0.0, "sweep.d_ae_m", "distances must be > 0");
    require(!schemes.empty(), "schemes", "must not be empty");
    require(!fig2_antennas.empty(), "fig2.antennas", "must not be empty");
    for(const auto &t : fig2_antennas)
        require(t.n_alice >= 1 && t.n_bob >= 1 && t.n_eve >= 1, "fig2.antennas", "counts must be >= 1");
    require(!fig3_surfaces.empty(), "fig3.surfaces", "must not be empty");
    for(const auto &s : fig3_surfaces)
        require(s.n_active >= 1 && s.n_active <= n_elements, "fig3.surfaces", "K must be in [1, surface.n]");
    require(!fig4_n.empty(), "fig4.n", "must not be empty");
    for(const auto n : fig4_n)
        require(n >= n_active, "fig4.n", "each N must be >= surface.k");
    require(!fig4_csi_error_std.empty(), "fig4.csi_error_std", "must not be empty");
    for(const double s : fig4_csi_error_std)
        require(s >= 0.0, "fig4.csi_error_std", "must be >= 0");
    require(pso_particles >= 1, "pso.n_particles", "must be >= 1");
    require(pso_iters >= 1, "pso.max_iters", "must be >= 1");
    require(pso_penalty >= 0.0, "pso.penalty", "must be >= 0");
    require(pso_kappa1 + pso_kappa2 > 4.0, "pso.kappa1", "kappa1 + kappa2 must exceed 4");
    require(ao_max_outer_iters >= 1, "ao.max_outer_iters", "must be >= 1");
    require(ao_rel_tol > 0.0, "ao.rel_tol", "must be > 0");
    require(!output_dir.empty(), "output.dir", "must not be empty");
}

ExperimentConfig parse_config(std::string_view text)
{
    ExperimentConfig config;
    std::map<std::string, std::size_t, std::less<>> seen;
    std::size_t line_no = 0;
    std::size_t start = 0;
    while(start <= text.size())
    {
        const auto end = text.find('\n', start);
        std::string_view line = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
        start = end == std::string_view::npos ? text.size() + 1 : end + 1;
        ++line_no;

        if(const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if(line.empty())
            continue;
        const auto eq = line.find('=');
        if(eq == std::string_view::npos)
            throw ParseError("", line_no, "expected 'key = value'");
        const std::string key(trim(line.substr(0, eq)));
        const std::string_view value = trim(line.substr(eq + 1));
        const auto &table = fields();
        const auto it = std::find_if(table.begin(), table.end(), [&](const Field &f) { return key == f.key; });
        if(it == table.end())
            throw ParseError(key, line_no, "unknown key");
        if(!seen.emplace(key, line_no).second)
            throw ParseError(key, line_no, "duplicate key");
        try
        {
            it->set(config, value);
        }
        catch(const BadValue &bad)
        {
            throw ParseError(key, line_no, bad.message);
        }
    }
    try
    {
        config.validate();
    }
    catch(const ParseError &e)
    {
        const auto it = seen.find(e.key());
        if(it == seen.end())
            throw;
        throw ParseError(e.key(), it->second, e.message());
    }
    return config;
}

ExperimentConfig load_config(const std::string &path)
{
    std::ifstream in(path);
    if(!in)
        throw ParseError("", 0, "cannot open config file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

std::string serialize_config(const ExperimentConfig &config)
{
    std::string out;
    for(const auto &f : fields())
        out += std::string(f.key) + " = " + f.get(config) + "\n";
    return out;
}

} // namespace hrris
