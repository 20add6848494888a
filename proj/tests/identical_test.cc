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
#include <vector>

#include "gtest/gtest.h"

#include "nonsep/scenario_generator.h"

using namespace nonsep;
using namespace nonsep::identical;

namespace {

AbsorptionScenario fig2(double x, double tilde, Statistics stats,
                        AbsorbedNormalization n = AbsorbedNormalization::ExplicitNorm) {
    return {stats, fig2_overlaps(x, tilde), 1.0, n};
}

std::vector<double> grid(double start, double stop, int steps) {
    std::vector<double> g;
    for (int i = 0; i < steps; ++i) {
        g.push_back(start + (stop - start) * i / (steps - 1));
    }
    return g;
}

}  // namespace

TEST(pair_normalization, values) {
    ASSERT_NEAR(pair_normalization(0.0, Statistics::Boson), 0.7071068, 1e-7);
    ASSERT_NEAR(pair_normalization(0.0, Statistics::Boson), 1 / std::sqrt(2.0), 1e-15);
    ASSERT_NEAR(pair_normalization(0.6, Statistics::Boson), 1 / std::sqrt(2 * 1.36), 1e-15);
    ASSERT_NEAR(pair_normalization(0.6, Statistics::Boson), 0.6063391, 1e-7);
    ASSERT_NEAR(pair_normalization(0.6, Statistics::Fermion), 0.8838835, 1e-7);
    ASSERT_NEAR(pair_normalization(Amplitude(0.36, 0.48), Statistics::Fermion), 0.8838835, 1e-7);
    ASSERT_EQ(pair_normalization(0.9, Statistics::Distinguishable), 1 / std::sqrt(2.0));
    try {
        pair_normalization(1.0, Statistics::Fermion);
        FAIL();
    } catch (const DomainError &e) {
        ASSERT_EQ(e.kind(), ErrorKind::PauliNullState);
    }
}

TEST(final_state_normalization, zero_initial_overlap) {
    for (auto st : {Statistics::Boson, Statistics::Fermion, Statistics::Distinguishable}) {
        ASSERT_NEAR(final_state_normalization(fig2(0.0, 0.5, st)), 1 / std::sqrt(2.0), 1e-15);
    }
}

TEST(final_state_normalization, unit_overlap_boson) {
    // Overlap-dependent absorbed factors: cross = 2 (2 * 1.36)^{-1} * 0.5.
    const double cross_spatial = 2.0 / (2 * 1.36) * 0.5;
    const double nf_spatial = 1 / std::sqrt(2 + 2 * cross_spatial);
    ASSERT_NEAR(final_state_normalization(fig2(1.0, 0.5, Statistics::Boson, AbsorbedNormalization::SpatialOverlap)),
                nf_spatial, 1e-15);
    ASSERT_NEAR(nf_spatial, 0.6046, 1e-4);
    // Explicit norms: the absorbed states pair e with g, N_abs = 2^{-1/2}, cross = 0.5.
    ASSERT_NEAR(final_state_normalization(fig2(1.0, 0.5, Statistics::Boson)), 1 / std::sqrt(3.0), 1e-15);
}

TEST(final_state_normalization, bounds) {
    // N_f = (2 + 2 Re c)^{-1/2} with |c| <= 1: always >= 1/2, and <= 1 exactly
    // when Re c >= -1/2. Anti-aligned absorbed alternatives push it above 1.
    oracle::ScenarioGenerator gen(101);
    bool above_one = false;
    for (int k = 0; k < 400; ++k) {
        auto s = gen.absorption_scenario(k % 2 ? Statistics::Boson : Statistics::Fermion);
        double nf = final_state_normalization(s);
        double re = final_state_cross_overlap(s).real();
        ASSERT_GE(nf, 0.5);
        ASSERT_NEAR(nf, 1 / std::sqrt(2.0 + 2.0 * re), 1e-15);
        if (re >= -0.5) {
            ASSERT_LE(nf, 1.0);
        } else {
            above_one = true;
            ASSERT_GT(nf, 1.0);
        }
    }
    ASSERT_TRUE(above_one);
}

TEST(final_state_normalization, degenerate_final_state) {
    // tilde_psi = -tilde_phi with psi = phi makes the two absorbed alternatives
    // cancel for bosons under the overlap-free absorbed factors.
    GramSpec g = absorption_modes();
    g.set_overlap(kPsi, kPhi, 1.0);
    g.set_overlap(kTildePsi, kTildePhi, -1.0);
    g.set_overlap(kTildePsi, kPhi, 0.0);
    try {
        final_state_normalization({Statistics::Boson, g, 1.0});
        FAIL();
    } catch (const DomainError &e) {
        ASSERT_EQ(e.kind(), ErrorKind::DegenerateFinalState);
    }
}

TEST(absorption_amplitudes, zero_initial_overlap) {
    for (auto st : {Statistics::Boson, Statistics::Fermion}) {
        auto d = absorption_amplitudes(fig2(0.0, 0.5, st));
        ASSERT_EQ(d.m_psi(st), Amplitude(0.0));
        ASSERT_NEAR(std::abs(d.m_phi(st) - 0.6), 0.0, 1e-15);
    }
}

TEST(absorption_amplitudes, fermion_tilde_psi_alternative_cancels) {
    for (double x : grid(0.0, 0.99, 34)) {
        auto d = absorption_amplitudes(fig2(x, 0.9, Statistics::Fermion));
        ASSERT_EQ(d.m_psi(Statistics::Fermion), Amplitude(0.0)) << x;
    }
}

TEST(absorption_amplitudes, distinguishable_has_no_exchange) {
    oracle::ScenarioGenerator gen(4);
    for (int k = 0; k < 20; ++k) {
        auto d = absorption_amplitudes(gen.absorption_scenario(Statistics::Distinguishable));
        ASSERT_EQ(d.m_psi_exchange, Amplitude(0.0));
        ASSERT_EQ(d.m_phi_exchange, Amplitude(0.0));
    }
}

TEST(absorption_amplitudes, pauli_null_initial_state) {
    try {
        absorption_amplitudes(fig2(1.0, 0.5, Statistics::Fermion));
        FAIL();
    } catch (const DomainError &e) {
        ASSERT_EQ(e.kind(), ErrorKind::PauliNullState);
        ASSERT_EQ(e.parameter(), "<phi|psi>");
    }
}

TEST(one_absorption_identical, distinguishable_baseline_at_zero_overlap) {
    for (auto st : {Statistics::Boson, Statistics::Fermion, Statistics::Distinguishable}) {
        for (double tilde : {0.5, 0.9}) {
            ASSERT_NEAR(one_absorption_probability_identical(fig2(0.0, tilde, st)).total, 0.5 * 0.36, 1e-15);
        }
    }
}

TEST(one_absorption_identical, pauli_suppression) {
    for (double tilde : {0.5, 0.9}) {
        ASSERT_LT(one_absorption_probability_identical(fig2(0.999, tilde, Statistics::Fermion)).total, 5e-4);
    }
    for (double x : grid(0.9, 0.999999, 50)) {
        for (double tilde : {0.5, 0.9}) {
            double p = one_absorption_probability_identical(fig2(x, tilde, Statistics::Fermion)).total;
            ASSERT_LE(p, 0.2 * (1 - x * x)) << x;
        }
    }
}

TEST(one_absorption_identical, unit_overlap_boson_hand_assembly) {
    // Overlap-dependent absorbed factors, every alternative assembled by hand.
    const double n_i = 0.5, n_abs = 1 / std::sqrt(2 * 1.36);
    const double m_alt = 2 * n_abs * n_i * (0.6 + 0.6);
    const double cross = 2 * n_abs * n_abs * 0.5;
    const double p_spatial = (4 * m_alt * m_alt) / (2 + 2 * cross);
    ASSERT_NEAR(p_spatial, 0.774, 1e-3);
    auto spatial = one_absorption_probability_identical(
        fig2(1.0, 0.5, Statistics::Boson, AbsorbedNormalization::SpatialOverlap));
    ASSERT_NEAR(spatial.total, p_spatial, 1e-15);

    // Explicit norms: N_abs = 2^{-1/2}, N_f^2 = 1/3.
    const double m_exp = 2 / std::sqrt(2.0) * n_i * 1.2;
    ASSERT_NEAR(one_absorption_probability_identical(fig2(1.0, 0.5, Statistics::Boson)).total,
                4 * m_exp * m_exp / 3, 1e-15);
}

TEST(breakdown, sum_identity_random) {
    oracle::ScenarioGenerator gen(2024);
    for (int k = 0; k < 300; ++k) {
        for (auto st : {Statistics::Boson, Statistics::Fermion, Statistics::Distinguishable}) {
            auto s = gen.absorption_scenario(st);
            auto b = one_absorption_probability_identical(s);
            ASSERT_NEAR(b.total, b.n_f_squared * b.signed_sum(), 1e-12);
        }
    }
}

TEST(breakdown, statistics_separation) {
    oracle::ScenarioGenerator gen(77);
    for (int k = 0; k < 100; ++k) {
        auto s = gen.absorption_scenario(Statistics::Boson);
        auto d = absorption_amplitudes(s);
        double nf = final_state_normalization(s);
        auto bos = assemble_breakdown(Statistics::Boson, d, nf);
        auto fer = assemble_breakdown(Statistics::Fermion, d, nf);
        ASSERT_EQ(bos.indistinguishability_terms, fer.indistinguishability_terms);
        ASSERT_EQ(bos.moduli, fer.moduli);
        // Same stored exchange/mixed terms, opposite contribution to the sum.
        double s_bos = bos.signed_sum(), s_fer = fer.signed_sum();
        double ex_mx = bos.exchange_terms[0] + bos.exchange_terms[1] + bos.mixed_terms[0] + bos.mixed_terms[1];
        ASSERT_NEAR(s_bos - s_fer, 2 * ex_mx, 1e-14);
    }
}

TEST(breakdown, distinguishable_reduction) {
    // psi orthogonal to every other mode switches off all exchange overlaps.
    oracle::ScenarioGenerator gen(6);
    const std::vector<std::string> others{std::string(kPhi), std::string(kTildePsi), std::string(kTildePhi)};
    for (int k = 0; k < 100; ++k) {
        GramSpec sub = gen.random_gram(others, 3);
        AbsorptionScenario s{Statistics::Boson, absorption_modes(), gen.complex_in_disk(0.7)};
        for (const auto &a : others) {
            for (const auto &b : others) {
                if (a != b) {
                    s.overlaps.set_entry(s.overlaps.index_of(a), s.overlaps.index_of(b), sub.overlap(a, b));
                }
            }
        }
        double ref = one_absorption_probability_identical(s).total;
        for (auto st : {Statistics::Fermion, Statistics::Distinguishable}) {
            s.stats = st;
            ASSERT_NEAR(one_absorption_probability_identical(s).total, ref, 1e-12);
        }
    }
}

TEST(fig2_sweep, qualitative_trends) {
    const double tildes[] = {0.5, 0.9};
    auto xs = grid(0.0, 0.999, 200);
    Fig2Table t = fig2_sweep(xs, tildes);
    ASSERT_EQ(t.rows.size(), 200u);
    for (std::size_t c = 0; c < 2; ++c) {
        ASSERT_NEAR(t.rows[0].p_boson[c], 0.18, 1e-15);
        ASSERT_NEAR(t.rows[0].p_fermion[c], 0.18, 1e-15);
    }
    for (const auto &row : t.rows) {
        for (std::size_t c = 0; c < 2; ++c) {
            ASSERT_GE(row.p_boson[c], t.rows[0].p_boson[c] - 1e-15) << row.x;
            ASSERT_LE(row.p_fermion[c], row.p_boson[c]) << row.x;
        }
    }
}

TEST(fig2_sweep, rejects_out_of_range) {
    const double tildes[] = {0.5};
    const double one[] = {1.0};
    ASSERT_THROW(fig2_sweep(one, tildes), DomainError);
    const double ok[] = {0.5};
    const double bad_tilde[] = {1.5};
    ASSERT_THROW(fig2_sweep(ok, bad_tilde), DomainError);
}

TEST(double_emission, worked_values) {
    EmissionScenario orth{Statistics::Boson, 0.8, 0.5, 0.0, 0.0, 0.0, 0.0};
    ASSERT_NEAR(double_emission_probability(orth), 0.64 * 0.25, 1e-15);
    EmissionScenario sym{Statistics::Fermion, 0.5, 0.5, 0.5, 0.5, 0.0, 0.0};
    ASSERT_EQ(double_emission_probability(sym), 0.0);
    EmissionScenario bos{Statistics::Boson, 0.5, 0.5, 0.5, 0.5, 0.6, 0.5};
    ASSERT_NEAR(double_emission_probability(bos), 0.25 / (1.36 * 1.25), 1e-15);
    ASSERT_NEAR(double_emission_probability(bos), 0.1470588, 1e-7);
    EmissionScenario dist{Statistics::Distinguishable, 0.5, 0.4, 0.3, 0.2, 0.6, 0.5};
    ASSERT_NEAR(double_emission_probability(dist), 0.25 * 0.16, 1e-15);
}

TEST(double_emission, swap_symmetry) {
    oracle::ScenarioGenerator gen(8);
    for (int k = 0; k < 500; ++k) {
        auto s = gen.emission_scenario(k % 2 ? Statistics::Boson : Statistics::Fermion);
        EmissionScenario w{s.stats,         s.m_psibar_psi, s.m_phibar_phi, s.m_psibar_phi, s.m_phibar_psi,
                           std::conj(s.initial_overlap), std::conj(s.final_overlap)};
        ASSERT_NEAR(double_emission_probability(s), double_emission_probability(w), 1e-15);
    }
}

TEST(double_emission, pauli_and_range_errors) {
    EmissionScenario s{Statistics::Fermion, 0.5, 0.5, 0.1, 0.1, 1.0, 0.2};
    try {
        double_emission_probability(s);
        FAIL();
    } catch (const DomainError &e) {
        ASSERT_EQ(e.kind(), ErrorKind::PauliNullState);
        ASSERT_EQ(e.parameter(), "initial_overlap");
    }
    s.initial_overlap = 0.2;
    s.m_phibar_phi = 1.2;
    ASSERT_THROW(double_emission_probability(s), DomainError);
}
