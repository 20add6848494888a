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

#include "nonsep/scenario_generator.h"

#include <cmath>
#include <numbers>

#include "nonsep/oracle.h"

namespace nonsep::oracle {

double ScenarioGenerator::uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double ScenarioGenerator::uniform(double lo, double hi) {
    return lo + (hi - lo) * uniform();
}

std::size_t ScenarioGenerator::index(std::size_t n) {
    return static_cast<std::size_t>(engine_() % n);
}

Amplitude ScenarioGenerator::complex_in_disk(double radius) {
    while (true) {
        Amplitude z{uniform(-1.0, 1.0), uniform(-1.0, 1.0)};
        if (std::norm(z) <= 1.0) {
            return radius * z;
        }
    }
}

Amplitude ScenarioGenerator::unit_phase() {
    return std::polar(1.0, uniform(0.0, 2.0 * std::numbers::pi));
}

GramSpec ScenarioGenerator::random_gram(const std::vector<std::string> &labels, std::size_t dimension) {
    std::vector<std::vector<Amplitude>> vs;
    for (std::size_t i = 0; i < labels.size(); ++i) {
        std::vector<Amplitude> v(dimension);
        double n = 0.0;
        while (n < 1e-3) {
            n = 0.0;
            for (auto &c : v) {
                c = complex_in_disk(1.0);
                n += std::norm(c);
            }
        }
        n = std::sqrt(n);
        for (auto &c : v) {
            c /= n;
        }
        vs.push_back(std::move(v));
    }
    GramSpec g(labels);
    for (std::size_t i = 0; i < labels.size(); ++i) {
        for (std::size_t j = i + 1; j < labels.size(); ++j) {
            Amplitude s{};
            for (std::size_t k = 0; k < dimension; ++k) {
                s += std::conj(vs[i][k]) * vs[j][k];
            }
            g.set_entry(i, j, s);
            g.set_entry(j, i, std::conj(s));
        }
    }
    return g;
}

identical::AbsorptionScenario ScenarioGenerator::absorption_scenario(Statistics stats) {
    using namespace identical;
    const std::vector<std::string> labels{std::string(kPsi), std::string(kPhi), std::string(kTildePsi),
                                          std::string(kTildePhi)};
    while (true) {
        // One in four tables is rank deficient, to exercise the singular
        // embedding path.
        std::size_t dimension = index(4) == 0 ? 3 : 4;
        AbsorptionScenario s{stats, random_gram(labels, dimension), complex_in_disk(0.7)};
        const GramSpec &g = s.overlaps;
        bool ok = std::abs(g.overlap(kPhi, kPsi)) <= 0.95 && std::abs(g.overlap(kPhi, kTildePsi)) <= 0.95 &&
                  std::abs(g.overlap(kPsi, kTildePhi)) <= 0.95;
        if (!ok) {
            continue;
        }
        if (1.0 + final_state_cross_overlap(s).real() < 0.05) {
            continue;
        }
        return s;
    }
}

identical::EmissionScenario ScenarioGenerator::emission_scenario(Statistics stats) {
    // Independent draws can exceed unit probability once the fermion
    // denominators shrink; such tables are not physical and are redrawn.
    while (true) {
        identical::EmissionScenario s;
        s.stats = stats;
        s.m_phibar_phi = complex_in_disk(0.5);
        s.m_psibar_psi = complex_in_disk(0.5);
        s.m_phibar_psi = complex_in_disk(0.5);
        s.m_psibar_phi = complex_in_disk(0.5);
        s.initial_overlap = complex_in_disk(0.9);
        s.final_overlap = complex_in_disk(0.9);
        try {
            identical::double_emission_probability(s);
            return s;
        } catch (const DomainError &) {
        }
    }
}

entangled::AbsorptionParams ScenarioGenerator::absorption_params() {
    const double r = 1.0 / std::sqrt(2.0);
    entangled::AbsorptionParams p;
    p.alpha = complex_in_disk(r);
    p.gamma = complex_in_disk(r);
    p.beta = std::sqrt(1.0 - std::norm(p.alpha)) * unit_phase();
    p.delta = std::sqrt(1.0 - std::norm(p.gamma)) * unit_phase();
    return p;
}

entangled::EmissionParams ScenarioGenerator::emission_params() {
    entangled::EmissionParams p;
    p.tau_a = uniform(0.05, 2.0);
    p.tau_b = uniform(0.05, 2.0);
    p.m_nt_a = complex_in_disk(1.0);
    p.m_nt_b = complex_in_disk(1.0);
    p.t = uniform(0.0, 5.0);
    return p;
}

CampaignReport run_equivalence_campaign(std::uint64_t seed, std::size_t trials) {
    ScenarioGenerator gen(seed);
    CampaignReport report;
    report.seed = seed;
    report.trials = trials;
    auto record = [&](std::string check, std::size_t trial, double closed, double brute) {
        double err = std::abs(closed - brute);
        report.max_abs_err = std::max(report.max_abs_err, err);
        report.records.push_back({std::move(check), trial, closed, brute, err});
    };
    for (std::size_t trial = 0; trial < trials; ++trial) {
        for (Statistics st : {Statistics::Boson, Statistics::Fermion, Statistics::Distinguishable}) {
            auto s = gen.absorption_scenario(st);
            record("absorption/" + std::string(to_string(st)), trial,
                   identical::one_absorption_probability_identical(s).total, oracle_one_absorption_identical(s));
        }
        auto e = gen.emission_params();
        record("entangled_emission", trial, entangled::emission_probability(e), oracle_emission_probability(e));
        record("entangled_emission_mixture", trial, entangled::mixture_emission_probability(e),
               oracle_mixture_emission_probability(e));
        for (Statistics st : {Statistics::Boson, Statistics::Fermion}) {
            auto s = gen.emission_scenario(st);
            record("double_emission/" + std::string(to_string(st)), trial, identical::double_emission_probability(s),
                   oracle_double_emission_identical(s));
        }
    }
    return report;
}

}  // namespace nonsep::oracle
