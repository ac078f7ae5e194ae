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

#ifndef HRRIS_SYSTEM_HPP
#define HRRIS_SYSTEM_HPP

#include "hrris/channel.hpp"
#include "hrris/numerics.hpp"

#include <cstddef>
#include <vector>

namespace hrris
{

double dbm_to_watts(double dbm) noexcept;
double watts_to_dbm(double watts) noexcept;

/// HR-RIS layout: N elements of which those listed in active_set amplify.
struct SurfaceConfig
{
    std::size_t n_elements = 40;
    std::vector<std::size_t> active_set; // zero-based, distinct
    double p_max = 0.01;                 // W
    double noise_power = 1e-11;          // W

    /// Active set {0, ..., k-1}.
    static SurfaceConfig first_k_active(std::size_t n, std::size_t k, double p_max, double noise_power);

    std::size_t n_active() const noexcept { return active_set.size(); }
    bool is_active(std::size_t n) const noexcept;
    void validate() const;
};

/// Per-element amplitude |alpha_n| and phase theta_n.
struct CoefficientVector
{
    std::vector<double> amplitudes;
    std::vector<double> phases;

    /// Unit amplitudes, zero phases.
    static CoefficientVector unit(std::size_t n);

    std::size_t size() const noexcept { return amplitudes.size(); }
    Complex value(std::size_t n) const { return std::polar(amplitudes[n], phases[n]); }
    std::vector<Complex> values() const;
};

struct SecrecyResult
{
    double c_legit = 0.0;
    double c_eve = 0.0;
    double c_secrecy = 0.0;
};

struct SystemParams
{
    double p_t = 0.1;           // W
    double noise_power = 1e-11; // W
    std::size_t n_alice = 4;
    std::size_t n_bob = 2;
    std::size_t n_eve = 2;

    void validate() const;
};

enum class EveCsi
{
    Estimated,
    True
};

/// h_out * diag(alpha) * h_in + h_direct
ComplexMatrix effective_channel(const ComplexMatrix &h_direct, const ComplexMatrix &h_out, const ComplexMatrix &h_in,
                                const CoefficientVector &coeffs);

/// I + h_out Psi Psi^H h_out^H, Psi holding only the active coefficients.
ComplexMatrix noise_covariance(const ComplexMatrix &h_out, const SurfaceConfig &config,
                               const CoefficientVector &coeffs);

/// log2(1 + w^H h^H q^-1 h w / noise_power)
double capacity(const ComplexMatrix &h_eff, const ComplexMatrix &q_noise, const ComplexVector &w,
                double noise_power);

SecrecyResult secrecy_capacity(double c_legit, double c_eve);

struct ActivePower
{
    double total = 0.0;      // W
    std::vector<double> xi;  // |t_n|^2 + noise, one per active element in active_set order
};

/// Power radiated by the active elements for beamformer w.
ActivePower active_power(const CoefficientVector &coeffs, const SurfaceConfig &config, const ComplexMatrix &h_ar,
                         const ComplexVector &w);

/// Legitimate and eavesdropper effective channels with their noise covariances.
struct LinkPair
{
    ComplexMatrix h_bob;
    ComplexMatrix q_bob;
    ComplexMatrix h_eve;
    ComplexMatrix q_eve;
};

LinkPair effective_links(const ChannelSet &channels, const CoefficientVector &coeffs, const SurfaceConfig &config,
                         EveCsi eve);

/// Direct links only, identity noise covariances.
LinkPair direct_links(const ChannelSet &channels, EveCsi eve);

SecrecyResult evaluate(const LinkPair &links, const ComplexVector &w, double noise_power);

SecrecyResult evaluate(const ChannelSet &channels, const CoefficientVector &coeffs, const ComplexVector &w,
                       const SystemParams &params, const SurfaceConfig &config, EveCsi eve);

} // namespace hrris

#endif
