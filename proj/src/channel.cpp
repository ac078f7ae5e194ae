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

#include "hrris/channel.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace hrris
{

double standard_normal(Rng &rng)
{
    std::normal_distribution<double> gauss(0.0, 1.0);
    return gauss(rng);
}

Complex complex_gaussian(Rng &rng, double variance)
{
    const double s = std::sqrt(variance / 2.0);
    const double re = standard_normal(rng);
    const double im = standard_normal(rng);
    return {s * re, s * im};
}

// ---------------------------------------------------------------- geometry

ArrayGeometry ArrayGeometry::ula(std::size_t n) { return {ArrayKind::Ula, n, 1}; }

ArrayGeometry ArrayGeometry::upa(std::size_t nx, std::size_t ny) { return {ArrayKind::Upa, nx, ny}; }

ArrayGeometry ArrayGeometry::upa_for(std::size_t n)
{
    if(n == 0)
        throw InvalidArgument("upa_for: element count must be >= 1");
    std::size_t nx = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
    while(nx > 1 && n % nx != 0)
        --nx;
    return upa(nx, n / nx);
}

void ArrayGeometry::validate() const
{
    if(nx == 0 || ny == 0)
        throw InvalidArgument("ArrayGeometry: element counts must be >= 1");
    if(kind == ArrayKind::Ula && ny != 1)
        throw InvalidArgument("ArrayGeometry: ULA must have ny == 1");
}

void PathLossParams::validate() const
{
    if(b_los < 0.0 || b_nlos < 0.0)
        throw InvalidArgument("PathLossParams: exponents must be >= 0");
    if(sigma_los < 0.0 || sigma_nlos < 0.0)
        throw InvalidArgument("PathLossParams: shadowing std must be >= 0");
}

void LinkSpec::validate() const
{
    tx.validate();
    rx.validate();
    if(!(distance > 0.0))
        throw InvalidArgument("LinkSpec: distance must be > 0");
    if(n_paths == 0)
        throw InvalidArgument("LinkSpec: n_paths must be >= 1");
}

// ---------------------------------------------------------------- path loss

double path_loss_db(PathKind kind, double distance, const PathLossParams &params, double shadowing_db)
{
    if(!(distance > 0.0))
        throw InvalidArgument("path_loss_db: distance must be > 0");
    const bool los = kind == PathKind::Los;
    const double a = los ? params.a_los : params.a_nlos;
    const double b = los ? params.b_los : params.b_nlos;
    return a + 10.0 * b * std::log10(distance) + shadowing_db;
}

double path_loss_db(PathKind kind, double distance, const PathLossParams &params, Rng &rng)
{
    const double sigma = kind == PathKind::Los ? params.sigma_los : params.sigma_nlos;
    return path_loss_db(kind, distance, params, sigma * standard_normal(rng));
}

// ---------------------------------------------------------------- steering

ComplexVector ula_response(double phi, std::size_t n)
{
    if(n == 0)
        throw InvalidArgument("ula_response: n must be >= 1");
    ComplexVector a(n);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    const double step = std::numbers::pi * std::sin(phi);
    for(std::size_t k = 0; k < n; ++k)
        a[k] = std::polar(scale, step * static_cast<double>(k));
    return a;
}

ComplexVector upa_response(double gamma, double eta, std::size_t nx, std::size_t ny)
{
    if(nx == 0 || ny == 0)
        throw InvalidArgument("upa_response: nx, ny must be >= 1");
    ComplexVector a(nx * ny);
    const double scale = 1.0 / std::sqrt(static_cast<double>(nx * ny));
    const double row_step = std::numbers::pi * std::cos(eta) * std::sin(gamma);
    const double col_step = std::numbers::pi * std::sin(eta);
    for(std::size_t m = 0; m < nx; ++m)
        for(std::size_t n = 0; n < ny; ++n)
            a[m * ny + n] = std::polar(scale, row_step * static_cast<double>(m) + col_step * static_cast<double>(n));
    return a;
}

ComplexVector array_response(const ArrayGeometry &geometry, const PathAngles &angles)
{
    if(geometry.kind == ArrayKind::Ula)
        return ula_response(angles.azimuth, geometry.nx);
    return upa_response(angles.azimuth, angles.elevation, geometry.nx, geometry.ny);
}

// ---------------------------------------------------------------- links

ComplexMatrix compose_link(const ArrayGeometry &tx, const ArrayGeometry &rx, std::span<const PathRecord> paths)
{
    if(paths.empty())
        throw InvalidArgument("compose_link: at least one path required");
    const std::size_t n_tx = tx.size();
    const std::size_t n_rx = rx.size();
    ComplexMatrix h(n_rx, n_tx);
    const double prefactor = std::sqrt(static_cast<double>(n_tx * n_rx) / static_cast<double>(paths.size()));
    for(const auto &path : paths)
    {
        const ComplexVector a_rx = array_response(rx, path.arrival);
        const ComplexVector a_tx = array_response(tx, path.departure);
        const Complex g = prefactor * path.gain;
        for(std::size_t r = 0; r < n_rx; ++r)
        {
            const Complex gr = g * a_rx[r];
            for(std::size_t c = 0; c < n_tx; ++c)
                h(r, c) += gr * std::conj(a_tx[c]);
        }
    }
    return h;
}

SynthesizedLink synth_channel(const LinkSpec &spec, const PathLossParams &params, Rng &rng)
{
    spec.validate();
    std::uniform_real_distribution<double> angle(-std::numbers::pi / 2.0, std::numbers::pi / 2.0);
    std::vector<PathRecord> paths(spec.n_paths);
    for(std::size_t i = 0; i < spec.n_paths; ++i)
    {
        PathRecord &p = paths[i];
        p.departure.azimuth = angle(rng);
        p.departure.elevation = angle(rng);
        p.arrival.azimuth = angle(rng);
        p.arrival.elevation = angle(rng);
        const PathKind kind = (spec.los && i == 0) ? PathKind::Los : PathKind::Nlos;
        p.loss_db = path_loss_db(kind, spec.distance, params, rng);
        p.gain = complex_gaussian(rng, std::pow(10.0, -0.1 * p.loss_db));
    }
    ComplexMatrix h = compose_link(spec.tx, spec.rx, paths);
    return {std::move(h), std::move(paths)};
}

ComplexMatrix csi_error(const ArrayGeometry &tx, const ArrayGeometry &rx, std::span<const PathRecord> paths,
                        std::span<const Complex> deltas)
{
    if(deltas.size() != paths.size())
        throw DimensionMismatch("csi_error: " + std::to_string(deltas.size()) + " deltas for " +
                                std::to_string(paths.size()) + " paths");
    std::vector<PathRecord> scaled(paths.begin(), paths.end());
    for(std::size_t i = 0; i < scaled.size(); ++i)
        scaled[i].gain *= deltas[i];
    return compose_link(tx, rx, scaled);
}

ComplexMatrix csi_error(const ArrayGeometry &tx, const ArrayGeometry &rx, std::span<const PathRecord> paths,
                        double sigma_delta, Rng &rng)
{
    if(sigma_delta < 0.0)
        throw InvalidArgument("csi_error: sigma_delta must be >= 0");
    std::vector<Complex> deltas(paths.size());
    for(auto &d : deltas)
        d = complex_gaussian(rng, 1.0) * sigma_delta;
    return csi_error(tx, rx, paths, deltas);
}

// ---------------------------------------------------------------- topology

double distance(const Point2 &a, const Point2 &b) noexcept { return std::hypot(a.x - b.x, a.y - b.y); }

void Topology::validate() const
{
    // Only linked pairs need a positive distance; bob and eve may share a position.
    const struct
    {
        const Point2 &a, &b;
        const char *name;
    } links[] = {{alice, ris, "alice and ris"},
                 {ris, bob, "ris and bob"},
                 {alice, bob, "alice and bob"},
                 {ris, eve, "ris and eve"},
                 {alice, eve, "alice and eve"}};
    for(const auto &l : links)
    {
        if(!std::isfinite(l.a.x) || !std::isfinite(l.a.y) || !std::isfinite(l.b.x) || !std::isfinite(l.b.y))
            throw InvalidArgument("Topology: non-finite coordinate");
        if(!(distance(l.a, l.b) > 0.0))
            throw InvalidArgument(std::string("Topology: ") + l.name + " coincide");
    }
}

ChannelSet build_channel_set(const Topology &topology, const ArrayLayout &layout, std::size_t n_paths,
                             double sigma_delta, const PathLossParams &params, Rng &rng)
{
    topology.validate();
    params.validate();
    layout.ris.validate();
    const ArrayGeometry alice = ArrayGeometry::ula(layout.n_alice);
    const ArrayGeometry bob = ArrayGeometry::ula(layout.n_bob);
    const ArrayGeometry eve = ArrayGeometry::ula(layout.n_eve);
    const ArrayGeometry &ris = layout.ris;

    auto link = [&](const ArrayGeometry &tx, const ArrayGeometry &rx, const Point2 &from, const Point2 &to) {
        return synth_channel(LinkSpec{tx, rx, distance(from, to), n_paths, true}, params, rng);
    };

    SynthesizedLink ar = link(alice, ris, topology.alice, topology.ris);
    SynthesizedLink rb = link(ris, bob, topology.ris, topology.bob);
    SynthesizedLink ab = link(alice, bob, topology.alice, topology.bob);
    SynthesizedLink re = link(ris, eve, topology.ris, topology.eve);
    SynthesizedLink ae = link(alice, eve, topology.alice, topology.eve);

    const ComplexMatrix d_re = csi_error(ris, eve, re.paths, sigma_delta, rng);
    const ComplexMatrix d_ae = csi_error(alice, eve, ae.paths, sigma_delta, rng);

    ComplexMatrix re_true = re.matrix + d_re;
    ComplexMatrix ae_true = ae.matrix + d_ae;
    return ChannelSet{std::move(ar.matrix), std::move(rb.matrix), std::move(ab.matrix), std::move(re.matrix),
                      std::move(re_true),   std::move(ae.matrix), std::move(ae_true)};
}

} // namespace hrris
