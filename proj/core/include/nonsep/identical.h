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

#ifndef NONSEP_IDENTICAL_H
#define NONSEP_IDENTICAL_H

#include <array>
#include <span>
#include <utility>
#include <string_view>
#include <vector>

#include "nonsep/states.h"

namespace nonsep::identical {

// Mode labels of the absorption overlap table. psi and phi are the initial
// ground-state center-of-mass modes; tilde_psi and tilde_phi the recoiled
// modes after absorption.
inline constexpr std::string_view kPsi = "psi";
inline constexpr std::string_view kPhi = "phi";
inline constexpr std::string_view kTildePsi = "tilde_psi";
inline constexpr std::string_view kTildePhi = "tilde_phi";

/// Identity overlap table over (psi, phi, tilde_psi, tilde_phi).
GramSpec absorption_modes();

/// The overlap table used for the overlap sweep: phi, tilde_psi and tilde_phi
/// are held fixed with <tilde_psi|phi> = <tilde_phi|phi> = 0.6 and
/// <tilde_psi|tilde_phi> = `tilde_overlap`, while psi is rotated so that
/// <psi|phi> = x and <psi|tilde_phi> = <tilde_psi|psi> = 0.6 x.
GramSpec fig2_overlaps(double x, double tilde_overlap);

/// How the normalization factors N_abs of the two absorbed-pair states are
/// obtained.
///
/// ExplicitNorm uses the overlap of the full single-particle states, e.g.
/// <phi_g|tilde_psi_e> = <phi|tilde_psi><g|e> = 0, so N_abs = 2^{-1/2}; this
/// is the norm of the constructed state and agrees with the brute-force
/// oracle. SpatialOverlap uses only the center-of-mass overlap,
/// (2 (1 +- |<phi|tilde_psi>|^2))^{-1/2}; the resulting absorbed states are
/// not unit vectors, and the probabilities differ from the oracle whenever
/// <phi|psi> != 0.
enum class AbsorbedNormalization { ExplicitNorm, SpatialOverlap };

std::string_view to_string(AbsorbedNormalization n);
AbsorbedNormalization parse_absorbed_normalization(std::string_view text);

struct AbsorptionScenario {
    Statistics stats = Statistics::Boson;
    GramSpec overlaps = absorption_modes();
    Amplitude internal_amplitude{1.0, 0.0};
    AbsorbedNormalization normalization = AbsorbedNormalization::ExplicitNorm;
};

/// N_abs(tilde_psi) and N_abs(tilde_phi) under the scenario's convention.
std::pair<double, double> absorbed_normalizations(const AbsorptionScenario &s);

void validate(const AbsorptionScenario &s);

/// Two-particle amplitudes split into direct and exchange parts. Each part
/// already includes its 2 N_abs N_i prefactor, so the amplitude of an
/// alternative is double_sign(stats, direct, exchange).
struct AmplitudeDecomposition {
    Amplitude m_psi_direct;
    Amplitude m_psi_exchange;
    Amplitude m_phi_direct;
    Amplitude m_phi_exchange;

    Amplitude m_psi(Statistics stats) const noexcept {
        return double_sign(stats, m_psi_direct, m_psi_exchange);
    }
    Amplitude m_phi(Statistics stats) const noexcept {
        return double_sign(stats, m_phi_direct, m_phi_exchange);
    }
};

/// Squared moduli of the four alternatives and the six interference terms.
///
/// The interference terms are stored as 2 Re(...) without the statistics
/// sign; `signed_sum()` applies it. Index 0 of each pair refers to the
/// tilde_phi alternative (exchange) or the direct-direct product (the
/// indistinguishability pair); see the field comments.
struct ProbabilityBreakdown {
    Statistics stats = Statistics::Boson;
    // |M_phi^d|^2, |M_phi^e|^2, |M_psi^d|^2, |M_psi^e|^2
    std::array<double, 4> moduli{};
    // 2Re(M_phi^d* M_phi^e), 2Re(M_psi^d* M_psi^e)
    std::array<double, 2> exchange_terms{};
    // 2Re(M_phi^d* M_psi^d), 2Re(M_phi^e* M_psi^e)
    std::array<double, 2> indistinguishability_terms{};
    // 2Re(M_phi^d* M_psi^e), 2Re(M_phi^e* M_psi^d)
    std::array<double, 2> mixed_terms{};
    double n_f_squared = 0.0;
    Probability total;

    /// Sum of the ten terms with the statistics signs applied.
    double signed_sum() const noexcept;
};

/// (2 (1 +- |overlap|^2))^{-1/2}; 2^{-1/2} for distinguishable particles.
double pair_normalization(Amplitude overlap, Statistics stats);

/// <Psi_abs(tilde_psi)|Psi_abs(tilde_phi)> for the scenario.
Amplitude final_state_cross_overlap(const AbsorptionScenario &s);

double final_state_normalization(const AbsorptionScenario &s);

AmplitudeDecomposition absorption_amplitudes(const AbsorptionScenario &s);

/// Assembles the ten terms from a decomposition. The total is computed from
/// the summed amplitude, independently of the term-by-term expansion.
ProbabilityBreakdown assemble_breakdown(Statistics stats, const AmplitudeDecomposition &d,
                                        double n_f);

ProbabilityBreakdown one_absorption_probability_identical(const AbsorptionScenario &s);

struct Fig2Row {
    double x;
    std::vector<double> p_boson;    // one per tilde overlap
    std::vector<double> p_fermion;  // one per tilde overlap
};

struct Fig2Table {
    std::vector<double> tilde_overlaps;
    std::vector<Fig2Row> rows;
};

/// Absorption probabilities for both statistics at each initial overlap x in
/// [0, 1). Every grid point's overlap table is validated before evaluation.
Fig2Table fig2_sweep(std::span<const double> x_grid, std::span<const double> tilde_overlaps);

/// Double emission by two excited identical atoms into the fixed final modes
/// (bar_phi, bar_psi).
struct EmissionScenario {
    Statistics stats = Statistics::Boson;
    Amplitude m_phibar_phi;
    Amplitude m_psibar_psi;
    Amplitude m_phibar_psi;
    Amplitude m_psibar_phi;
    Amplitude initial_overlap;  // <phi|psi>
    Amplitude final_overlap;    // <bar_phi|bar_psi>
};

void validate(const EmissionScenario &s);

Probability double_emission_probability(const EmissionScenario &s);

}  // namespace nonsep::identical

#endif
