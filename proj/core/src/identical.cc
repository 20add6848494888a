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

#include "nonsep/identical.h"

#include <cmath>
#include <sstream>
#include <string>

namespace nonsep::identical {

namespace {

constexpr double kPauliTolerance = 1e-12;
constexpr double kDegenerateTolerance = 1e-12;

std::string bracket(std::string_view bra, std::string_view ket) {
    return "<" + std::string(bra) + "|" + std::string(ket) + ">";
}

void require_magnitude_at_most_one(Amplitude a, const std::string &name) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
        throw DomainError(ErrorKind::InvalidArgument, name, "amplitude not finite");
    }
    if (std::abs(a) > 1.0 + 1e-12) {
        throw DomainError(ErrorKind::InvalidArgument, name, "magnitude exceeds 1");
    }
}

double normalization_named(Amplitude overlap, Statistics stats, const std::string &name) {
    try {
        return pair_normalization(overlap, stats);
    } catch (const DomainError &e) {
        throw DomainError(e.kind(), name, "fermion pair with unit overlap is a null state");
    }
}

}  // namespace

GramSpec absorption_modes() {
    return GramSpec({std::string(kPsi), std::string(kPhi), std::string(kTildePsi), std::string(kTildePhi)});
}

GramSpec fig2_overlaps(double x, double tilde_overlap) {
    constexpr double kTildeToPhi = 0.6;
    GramSpec g = absorption_modes();
    g.set_overlap(kPsi, kPhi, x);
    g.set_overlap(kTildePsi, kTildePhi, tilde_overlap);
    g.set_overlap(kTildePsi, kPhi, kTildeToPhi);
    g.set_overlap(kTildePhi, kPhi, kTildeToPhi);
    g.set_overlap(kPsi, kTildePhi, x * kTildeToPhi);
    g.set_overlap(kTildePsi, kPsi, x * kTildeToPhi);
    return g;
}

double pair_normalization(Amplitude overlap, Statistics stats) {
    double sq = std::norm(overlap);
    switch (stats) {
        case Statistics::Boson:
            return 1.0 / std::sqrt(2.0 * (1.0 + sq));
        case Statistics::Fermion:
            if (std::abs(overlap) >= 1.0 - kPauliTolerance) {
                throw DomainError(ErrorKind::PauliNullState, "overlap",
                                  "fermion pair with unit overlap is a null state");
            }
            return 1.0 / std::sqrt(2.0 * (1.0 - sq));
        case Statistics::Distinguishable:
            return 1.0 / std::sqrt(2.0);
    }
    return 0.0;
}

std::string_view to_string(AbsorbedNormalization n) {
    return n == AbsorbedNormalization::ExplicitNorm ? "explicit-norm" : "spatial-overlap";
}

AbsorbedNormalization parse_absorbed_normalization(std::string_view text) {
    if (text == "explicit-norm") {
        return AbsorbedNormalization::ExplicitNorm;
    }
    if (text == "spatial-overlap") {
        return AbsorbedNormalization::SpatialOverlap;
    }
    throw DomainError(ErrorKind::InvalidArgument, "absorbed_normalization",
                      "expected explicit-norm or spatial-overlap, got '" + std::string(text) + "'");
}

std::pair<double, double> absorbed_normalizations(const AbsorptionScenario &s) {
    const GramSpec &g = s.overlaps;
    // The excited and ground internal states are orthogonal.
    constexpr double kInternalOverlap = 0.0;
    Amplitude psi_part = g.overlap(kPhi, kTildePsi);
    Amplitude phi_part = g.overlap(kPsi, kTildePhi);
    if (s.normalization == AbsorbedNormalization::ExplicitNorm) {
        psi_part *= kInternalOverlap;
        phi_part *= kInternalOverlap;
    }
    return {normalization_named(psi_part, s.stats, bracket(kPhi, kTildePsi)),
            normalization_named(phi_part, s.stats, bracket(kPsi, kTildePhi))};
}

void validate(const AbsorptionScenario &s) {
    const GramSpec &g = s.overlaps;
    for (auto label : {kPsi, kPhi, kTildePsi, kTildePhi}) {
        g.index_of(label);
    }
    validate_gram(g);
    require_magnitude_at_most_one(s.internal_amplitude, "internal_amplitude");
    if (s.stats == Statistics::Fermion) {
        normalization_named(g.overlap(kPhi, kPsi), s.stats, bracket(kPhi, kPsi));
        absorbed_normalizations(s);
    }
}

Amplitude final_state_cross_overlap(const AbsorptionScenario &s) {
    const GramSpec &g = s.overlaps;
    auto [n_abs_psi, n_abs_phi] = absorbed_normalizations(s);
    // The exchange contributions to this product vanish because <e|g> = 0.
    return 2.0 * n_abs_psi * n_abs_phi * g.overlap(kTildePsi, kTildePhi) * g.overlap(kPhi, kPsi);
}

double final_state_normalization(const AbsorptionScenario &s) {
    validate(s);
    double one_plus = 1.0 + final_state_cross_overlap(s).real();
    if (one_plus <= kDegenerateTolerance) {
        throw DomainError(ErrorKind::DegenerateFinalState, "final_state",
                          "absorbed alternatives cancel; final state has zero norm");
    }
    return 1.0 / std::sqrt(2.0 * one_plus);
}

AmplitudeDecomposition absorption_amplitudes(const AbsorptionScenario &s) {
    validate(s);
    const GramSpec &g = s.overlaps;
    const Amplitude m = s.internal_amplitude;
    double n_i = normalization_named(g.overlap(kPhi, kPsi), s.stats, bracket(kPhi, kPsi));
    auto [n_abs_psi, n_abs_phi] = absorbed_normalizations(s);

    // Each alternative is M times a product of two spatial overlaps; the
    // spatial product is formed first so that equal products cancel exactly.
    auto alt = [&](double pre, std::string_view a_to, std::string_view a_from, std::string_view b_to,
                   std::string_view b_from) { return pre * (m * (g.overlap(a_to, a_from) * g.overlap(b_to, b_from))); };

    const double pre_psi = 2.0 * n_abs_psi * n_i;
    const double pre_phi = 2.0 * n_abs_phi * n_i;
    AmplitudeDecomposition d;
    d.m_psi_direct = alt(pre_psi, kTildePsi, kPhi, kPhi, kPsi);
    d.m_phi_direct = alt(pre_phi, kTildePhi, kPhi, kPsi, kPsi);
    if (s.stats != Statistics::Distinguishable) {
        d.m_psi_exchange = alt(pre_psi, kTildePsi, kPsi, kPhi, kPhi);
        d.m_phi_exchange = alt(pre_phi, kTildePhi, kPsi, kPsi, kPhi);
    }
    return d;
}

double ProbabilityBreakdown::signed_sum() const noexcept {
    const double s = exchange_sign(stats);
    const double s2 = s * s;
    return moduli[0] + s2 * moduli[1] + moduli[2] + s2 * moduli[3] + s * (exchange_terms[0] + exchange_terms[1]) +
           indistinguishability_terms[0] + s2 * indistinguishability_terms[1] + s * (mixed_terms[0] + mixed_terms[1]);
}

ProbabilityBreakdown assemble_breakdown(Statistics stats, const AmplitudeDecomposition &d, double n_f) {
    auto re2 = [](Amplitude a, Amplitude b) { return 2.0 * (std::conj(a) * b).real(); };
    ProbabilityBreakdown b;
    b.stats = stats;
    b.moduli = {std::norm(d.m_phi_direct), std::norm(d.m_phi_exchange), std::norm(d.m_psi_direct),
                std::norm(d.m_psi_exchange)};
    b.exchange_terms = {re2(d.m_phi_direct, d.m_phi_exchange), re2(d.m_psi_direct, d.m_psi_exchange)};
    b.indistinguishability_terms = {re2(d.m_phi_direct, d.m_psi_direct), re2(d.m_phi_exchange, d.m_psi_exchange)};
    b.mixed_terms = {re2(d.m_phi_direct, d.m_psi_exchange), re2(d.m_phi_exchange, d.m_psi_direct)};
    b.n_f_squared = n_f * n_f;
    b.total = Probability::checked(b.n_f_squared * std::norm(d.m_psi(stats) + d.m_phi(stats)), "p_one_ide");
    return b;
}

ProbabilityBreakdown one_absorption_probability_identical(const AbsorptionScenario &s) {
    AmplitudeDecomposition d = absorption_amplitudes(s);
    return assemble_breakdown(s.stats, d, final_state_normalization(s));
}

Fig2Table fig2_sweep(std::span<const double> x_grid, std::span<const double> tilde_overlaps) {
    Fig2Table table;
    table.tilde_overlaps.assign(tilde_overlaps.begin(), tilde_overlaps.end());
    for (double t : tilde_overlaps) {
        if (!(t >= 0.0 && t <= 1.0)) {
            throw DomainError(ErrorKind::InvalidArgument, "tilde_overlap", "must lie in [0, 1]");
        }
    }
    table.rows.reserve(x_grid.size());
    for (double x : x_grid) {
        if (!(x >= 0.0 && x < 1.0)) {
            std::ostringstream name;
            name.precision(17);
            name << "x=" << x;
            throw DomainError(ErrorKind::InvalidArgument, name.str(), "initial overlap must lie in [0, 1)");
        }
        Fig2Row row{x, {}, {}};
        for (double t : tilde_overlaps) {
            GramSpec g = fig2_overlaps(x, t);
            try {
                validate_gram(g);
            } catch (const DomainError &e) {
                std::ostringstream name;
                name.precision(17);
                name << "x=" << x << ",tilde_overlap=" << t;
                throw DomainError(e.kind(), name.str(), e.what());
            }
            row.p_boson.push_back(one_absorption_probability_identical({Statistics::Boson, g, 1.0}).total);
            row.p_fermion.push_back(one_absorption_probability_identical({Statistics::Fermion, g, 1.0}).total);
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

void validate(const EmissionScenario &s) {
    require_magnitude_at_most_one(s.m_phibar_phi, "m_phibar_phi");
    require_magnitude_at_most_one(s.m_psibar_psi, "m_psibar_psi");
    require_magnitude_at_most_one(s.m_phibar_psi, "m_phibar_psi");
    require_magnitude_at_most_one(s.m_psibar_phi, "m_psibar_phi");
    require_magnitude_at_most_one(s.initial_overlap, "initial_overlap");
    require_magnitude_at_most_one(s.final_overlap, "final_overlap");
    if (s.stats == Statistics::Fermion) {
        normalization_named(s.initial_overlap, s.stats, "initial_overlap");
        normalization_named(s.final_overlap, s.stats, "final_overlap");
    }
}

Probability double_emission_probability(const EmissionScenario &s) {
    validate(s);
    const double sign = exchange_sign(s.stats);
    const double p_direct = std::norm(s.m_phibar_phi) * std::norm(s.m_psibar_psi);
    const double p_exchange = std::norm(s.m_phibar_psi) * std::norm(s.m_psibar_phi);
    // Grouped so the simultaneous relabeling phi<->psi, bar_phi<->bar_psi is
    // exact in floating point.
    const Amplitude interference =
        (std::conj(s.m_phibar_phi) * std::conj(s.m_psibar_psi)) * (s.m_phibar_psi * s.m_psibar_phi);
    const double numerator = p_direct + sign * sign * p_exchange + sign * 2.0 * interference.real();
    const double denominator =
        (1.0 + sign * std::norm(s.initial_overlap)) * (1.0 + sign * std::norm(s.final_overlap));
    return Probability::checked(numerator / denominator, "p_two_ide");
}

}  // namespace nonsep::identical
