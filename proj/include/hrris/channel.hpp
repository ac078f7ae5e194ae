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

#ifndef HRRIS_CHANNEL_HPP
#define HRRIS_CHANNEL_HPP

#include "hrris/numerics.hpp"

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace hrris
{

using Rng = std::mt19937_64;

/// Standard normal draw.
double standard_normal(Rng &rng);

/// Circularly-symmetric complex Gaussian with the given total variance.
Complex complex_gaussian(Rng &rng, double variance);

enum class ArrayKind
{
    Ula,
    Upa
};

/// Half-wavelength spaced antenna array. A ULA uses nx only (ny == 1).
struct ArrayGeometry
{
    ArrayKind kind = ArrayKind::Ula;
    std::size_t nx = 1;
    std::size_t ny = 1;

    static ArrayGeometry ula(std::size_t n);
    static ArrayGeometry upa(std::size_t nx, std::size_t ny);
    /// Most-square nx x ny factorisation with nx <= ny (40 -> 5 x 8).
    static ArrayGeometry upa_for(std::size_t n);

    std::size_t size() const noexcept { return nx * ny; }
    void validate() const;

    bool operator==(const ArrayGeometry &) const = default;
};

/// Log-distance path loss with log-normal shadowing. Defaults are the 28 GHz
/// LOS/NLOS street-canyon fits used throughout the experiments.
struct PathLossParams
{
    double a_los = 61.4;
    double b_los = 2.0;
    double sigma_los = 5.8;
    double a_nlos = 72.0;
    double b_nlos = 2.92;
    double sigma_nlos = 8.7;

    void validate() const;
    bool operator==(const PathLossParams &) const = default;
};

enum class PathKind
{
    Los,
    Nlos
};

/// a + 10 b log10(d) + shadowing, all in dB.
double path_loss_db(PathKind kind, double distance, const PathLossParams &params, double shadowing_db);

/// Same, with the shadowing term drawn from the kind's Gaussian (one draw).
double path_loss_db(PathKind kind, double distance, const PathLossParams &params, Rng &rng);

ComplexVector ula_response(double phi, std::size_t n);

/// Row-major flattening: entry (m, n) lands at index m * ny + n.
ComplexVector upa_response(double gamma, double eta, std::size_t nx, std::size_t ny);

struct PathAngles
{
    double azimuth = 0.0;
    double elevation = 0.0;
};

ComplexVector array_response(const ArrayGeometry &geometry, const PathAngles &angles);

struct PathRecord
{
    PathAngles departure;
    PathAngles arrival;
    Complex gain;
    double loss_db = 0.0;
};

struct LinkSpec
{
    ArrayGeometry tx;
    ArrayGeometry rx;
    double distance = 1.0;
    std::size_t n_paths = 1;
    bool los = true; // first path is LOS, the rest NLOS

    void validate() const;
};

struct SynthesizedLink
{
    ComplexMatrix matrix;
    std::vector<PathRecord> paths;
};

/// sqrt(N_tx N_rx / L) * sum_l gain_l a_rx(l) a_tx(l)^H
ComplexMatrix compose_link(const ArrayGeometry &tx, const ArrayGeometry &rx, std::span<const PathRecord> paths);

/// Draw order per path: departure az/el, arrival az/el, shadowing, gain.
SynthesizedLink synth_channel(const LinkSpec &spec, const PathLossParams &params, Rng &rng);

/// Per-path scaled copy of the link: each path's gain multiplied by the matching delta.
ComplexMatrix csi_error(const ArrayGeometry &tx, const ArrayGeometry &rx, std::span<const PathRecord> paths,
                        std::span<const Complex> deltas);

/// Gaussian CSI error: one CN(0, sigma_delta^2) factor per path.
ComplexMatrix csi_error(const ArrayGeometry &tx, const ArrayGeometry &rx, std::span<const PathRecord> paths,
                        double sigma_delta, Rng &rng);

struct Point2
{
    double x = 0.0;
    double y = 0.0;

    bool operator==(const Point2 &) const = default;
};

double distance(const Point2 &a, const Point2 &b) noexcept;

struct Topology
{
    Point2 alice{0.0, 0.0};
    Point2 ris{80.0, 2.0};
    Point2 bob{90.0, 0.0};
    Point2 eve{100.0, 0.0};

    void validate() const;
    bool operator==(const Topology &) const = default;
};

struct ArrayLayout
{
    std::size_t n_alice = 4;
    std::size_t n_bob = 2;
    std::size_t n_eve = 2;
    ArrayGeometry ris = ArrayGeometry::upa_for(40);
};

struct ChannelSet
{
    ComplexMatrix h_ar;      // N x N_A
    ComplexMatrix h_rb;      // N_B x N
    ComplexMatrix h_ab;      // N_B x N_A
    ComplexMatrix h_re_est;  // N_E x N
    ComplexMatrix h_re_true; // N_E x N
    ComplexMatrix h_ae_est;  // N_E x N_A
    ComplexMatrix h_ae_true; // N_E x N_A

    std::size_t n_alice() const noexcept { return h_ar.cols(); }
    std::size_t n_elements() const noexcept { return h_ar.rows(); }
    std::size_t n_bob() const noexcept { return h_rb.rows(); }
    std::size_t n_eve() const noexcept { return h_re_est.rows(); }

    bool operator==(const ChannelSet &) const = default;
};

/// Links are drawn AR, RB, AB, RE, AE, then the RE and AE errors.
ChannelSet build_channel_set(const Topology &topology, const ArrayLayout &layout, std::size_t n_paths,
                             double sigma_delta, const PathLossParams &params, Rng &rng);

} // namespace hrris

#endif
