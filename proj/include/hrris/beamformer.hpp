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

#ifndef HRRIS_BEAMFORMER_HPP
#define HRRIS_BEAMFORMER_HPP

#include "hrris/numerics.hpp"
#include "hrris/system.hpp"

namespace hrris
{

/// Quadratic-form matrices of the legitimate (l) and eavesdropper (e) SNRs:
/// SNR = w^H l w and w^H e w.
struct BeamformingContext
{
    ComplexMatrix l;
    ComplexMatrix e;
    double p_t = 1.0;

    void validate() const;
};

/// h^H q^-1 h / noise_power
ComplexMatrix snr_form(const ComplexMatrix &h, const ComplexMatrix &q, double noise_power);

BeamformingContext build_context(const LinkPair &links, double p_t, double noise_power);

BeamformingContext build_context(const ChannelSet &channels, const CoefficientVector &coeffs,
                                 const SystemParams &params, const SurfaceConfig &config,
                                 EveCsi eve = EveCsi::Estimated);

/// (1 + w^H l w) / (1 + w^H e w)
double secrecy_ratio(const BeamformingContext &ctx, const ComplexVector &w);

/// sqrt(P_T) times the dominant eigenvector of (e + I/P_T)^-1 (l + I/P_T).
ComplexVector optimal_beamformer(const BeamformingContext &ctx);

} // namespace hrris

#endif
