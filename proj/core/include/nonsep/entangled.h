// Copyright 2026 The nonsep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NONSEP_ENTANGLED_H
#define NONSEP_ENTANGLED_H

#include <optional>
#include <span>
#include <vector>

#include "nonsep/states.h"

namespace nonsep::entangled {

/// Absorption at the left path by the pair (|A>_L|B>_R + |B>_L|A>_R)/sqrt(2).
/// `alpha` and `gamma` are the excitation amplitudes of atoms A and B; the
/// optional non-excitation amplitudes must complete them to unit norm.
struct AbsorptionParams {
    Amplitude alpha;
    Amplitude gamma;
    std::optional<Amplitude> beta;
    std::optional<Amplitude> delta;
};

/// Throws DomainError if a supplied beta/delta breaks |alpha|^2 + |beta|^2 = 1
/// (resp. gamma/delta) by more than 1e-9, or any amplitude is not finite.
void validate(const AbsorptionParams &p);

/// Emission by (|A*>_L|B>_R + |B*>_L|A>_R)/sqrt(2) at time `t`.
///
/// The non-transition elements default to 1 (negligible recoil and spreading).
/// The two emission alternatives are assumed indistinguishable.
struct EmissionParams {
    double tau_a = 1.0;
    double tau_b = 1.0;
    Amplitude m_nt_a{1.0, 0.0};
    Amplitude m_nt_b{1.0, 0.0};
    double t = 0.0;
};

void validate(const EmissionParams &p);

/// (1/2)|alpha + gamma|^2. Throws PreconditionViolated above 1 + 1e-12.
Probability one_absorption_probability(const AbsorptionParams &p);

/// Equal-weight mixture of |A>_L|B>_R and |B>_L|A>_R: (|alpha|^2 + |gamma|^2)/2.
Probability mixture_absorption_probability(const AbsorptionParams &p);

/// Re(conj(alpha) * gamma), the difference between the two quantities above.
double absorption_interference(const AbsorptionParams &p);

/// Single-atom emission amplitude (1 - exp(-t/tau))^{1/2}, phase fixed to 0.
Amplitude single_emission_amplitude(double t, double tau);

Probability emission_probability(const EmissionParams &p);
Probability mixture_emission_probability(const EmissionParams &p);

struct Fig1Row {
    double t;
    double p_entangled;
    double p_mixture;
};

/// Emission probabilities over `t_grid` with unit non-transition elements.
std::vector<Fig1Row> fig1_curve(std::span<const double> t_grid, double tau_a, double tau_b);

}  // namespace nonsep::entangled

#endif
