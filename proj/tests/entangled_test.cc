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

#include "nonsep/entangled.h"

#include <cmath>
#include <random>
#include <vector>

#include "gtest/gtest.h"

#include "nonsep/scenario_generator.h"

using namespace nonsep;
using namespace nonsep::entangled;

namespace {

// Reference for the tau_a = 1, tau_b = 0.1 curve, evaluated straight from the
// single-atom decay law.
double sqrt_decay(double t, double tau) {
    return std::sqrt(1.0 - std::exp(-t / tau));
}

}  // namespace

TEST(entangled_absorption, worked_values) {
    ASSERT_NEAR(one_absorption_probability({0.1, 0.1}), 0.02, 1e-15);
    ASSERT_NEAR(one_absorption_probability({0.1, -0.1}), 0.0, 1e-15);
    ASSERT_NEAR(one_absorption_probability({0.1, 0.0}), 0.005, 1e-15);
    ASSERT_NEAR(mixture_absorption_probability({0.1, 0.1}), 0.01, 1e-15);
    ASSERT_EQ(mixture_absorption_probability({0.0, 0.0}), 0.0);
    ASSERT_NEAR(mixture_absorption_probability({0.1, -0.1}), 0.01, 1e-15);
}

TEST(entangled_absorption, expanded_form_and_interference_identity) {
    nonsep::oracle::ScenarioGenerator gen(3);
    for (int k = 0; k < 500; ++k) {
        AbsorptionParams p = gen.absorption_params();
        double expanded = 0.5 * std::norm(p.alpha) + 0.5 * std::norm(p.gamma) + (std::conj(p.alpha) * p.gamma).real();
        ASSERT_NEAR(one_absorption_probability(p), expanded, 1e-15);
        ASSERT_NEAR(one_absorption_probability(p) - mixture_absorption_probability(p), absorption_interference(p),
                    1e-15);
    }
}

TEST(entangled_absorption, common_phase_invariance) {
    nonsep::oracle::ScenarioGenerator gen(5);
    for (int k = 0; k < 200; ++k) {
        AbsorptionParams p = gen.absorption_params();
        Amplitude phase = gen.unit_phase();
        AbsorptionParams q{phase * p.alpha, phase * p.gamma};
        ASSERT_NEAR(one_absorption_probability(p), one_absorption_probability(q), 1e-15);
    }
}

TEST(entangled_absorption, errors) {
    ASSERT_THROW(one_absorption_probability({1.0, 0.5}), DomainError);
    AbsorptionParams bad{0.1, 0.1, Amplitude(0.5), std::nullopt};
    ASSERT_THROW(validate(bad), DomainError);
    AbsorptionParams good{0.1, 0.1, std::sqrt(0.99), std::sqrt(0.99)};
    ASSERT_NO_THROW(validate(good));
}

TEST(single_emission_amplitude, decay_law) {
    ASSERT_EQ(single_emission_amplitude(0, 1), Amplitude(0.0));
    ASSERT_NEAR(single_emission_amplitude(1, 1).real(), sqrt_decay(1, 1), 1e-15);
    ASSERT_NEAR(single_emission_amplitude(1, 1).real(), 0.7950601, 1e-7);
    ASSERT_NEAR(single_emission_amplitude(20, 1).real(), 1.0, 1e-8);
    ASSERT_EQ(single_emission_amplitude(1, 1).imag(), 0.0);
    double last = 0.0;
    for (double t = 0; t < 10; t += 0.01) {
        double m = single_emission_amplitude(t, 0.7).real();
        ASSERT_GE(m, last);
        ASSERT_LT(m, 1.0);
        last = m;
    }
    try {
        single_emission_amplitude(1, 0);
        FAIL();
    } catch (const DomainError &e) {
        ASSERT_EQ(e.kind(), ErrorKind::InvalidLifetime);
    }
}

TEST(emission, fig1_point) {
    EmissionParams p{.tau_a = 1.0, .tau_b = 0.1, .t = 1.0};
    const double a = sqrt_decay(1, 1), b = sqrt_decay(1, 0.1);
    ASSERT_NEAR(emission_probability(p), 0.25 * (a + b) * (a + b), 1e-15);
    ASSERT_NEAR(emission_probability(p), 0.8055398, 1e-7);
    ASSERT_NEAR(mixture_emission_probability(p), 0.5 * (a * a + b * b), 1e-15);
    ASSERT_NEAR(mixture_emission_probability(p), 0.8160376, 1e-7);
}

TEST(emission, zero_time_and_long_time) {
    EmissionParams p{.tau_a = 0.3, .tau_b = 2.0, .t = 0.0};
    ASSERT_EQ(emission_probability(p), 0.0);
    ASSERT_EQ(mixture_emission_probability(p), 0.0);
    p.t = 20 * 2.0;
    ASSERT_NEAR(emission_probability(p), 1.0, 1e-6);
    ASSERT_NEAR(mixture_emission_probability(p), 1.0, 1e-6);
    EmissionParams q{.tau_a = 1.0, .tau_b = 0.1, .t = 20.0};
    ASSERT_NEAR(mixture_emission_probability(q), 1.0, 1e-8);
}

TEST(emission, equal_lifetimes_match_mixture) {
    for (double t : {0.1, 0.5, 1.0, 3.0}) {
        EmissionParams p{.tau_a = 0.4, .tau_b = 0.4, .t = t};
        ASSERT_NEAR(emission_probability(p), mixture_emission_probability(p), 1e-12);
    }
}

TEST(emission, dominance_gap_is_half_squared_difference) {
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> tau(0.01, 3.0), time(0.0, 10.0);
    for (int k = 0; k < 500; ++k) {
        EmissionParams p{.tau_a = tau(rng), .tau_b = tau(rng), .t = time(rng)};
        double a = sqrt_decay(p.t, p.tau_a), b = sqrt_decay(p.t, p.tau_b);
        double gap = mixture_emission_probability(p) - emission_probability(p);
        ASSERT_GE(gap, -1e-15);
        ASSERT_NEAR(gap, 0.25 * (a - b) * (a - b), 1e-14);
    }
}

TEST(emission, complex_non_transition_elements) {
    EmissionParams p{.tau_a = 1.0, .tau_b = 0.5, .m_nt_a = std::polar(0.9, 0.3), .m_nt_b = std::polar(0.8, -1.1), .t = 0.7};
    Amplitude ma = sqrt_decay(0.7, 1.0), mb = sqrt_decay(0.7, 0.5);
    // The squared modulus of the full two-alternative amplitude.
    double expected = std::norm(0.5 * (ma * p.m_nt_b + mb * p.m_nt_a));
    ASSERT_NEAR(emission_probability(p), expected, 1e-15);
}

TEST(emission, parameter_errors) {
    ASSERT_THROW(emission_probability({.tau_a = 0.0}), DomainError);
    ASSERT_THROW(emission_probability({.tau_a = 1.0, .tau_b = -1.0}), DomainError);
    ASSERT_THROW(emission_probability({.t = -0.5}), DomainError);
    ASSERT_THROW(emission_probability({.m_nt_a = 1.5}), DomainError);
}

TEST(fig1_curve, rows) {
    const double zero[] = {0.0};
    auto r0 = fig1_curve(zero, 1.0, 0.1);
    ASSERT_EQ(r0.size(), 1u);
    ASSERT_EQ(r0[0].t, 0.0);
    ASSERT_EQ(r0[0].p_entangled, 0.0);
    ASSERT_EQ(r0[0].p_mixture, 0.0);

    std::vector<double> grid;
    for (int i = 0; i <= 300; ++i) {
        grid.push_back(3.0 * i / 300);
    }
    auto rows = fig1_curve(grid, 1.0, 0.1);
    ASSERT_EQ(rows.size(), 301u);
    ASSERT_EQ(rows[100].t, 1.0);
    ASSERT_NEAR(rows[100].p_entangled, 0.8055398, 1e-7);
    ASSERT_NEAR(rows[100].p_mixture, 0.8160376, 1e-7);
    for (const auto &r : rows) {
        ASSERT_LE(r.p_entangled, r.p_mixture);
    }
    const double bad[] = {-1.0};
    ASSERT_THROW(fig1_curve(bad, 1.0, 0.1), DomainError);
}
