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

#ifndef NONSEP_SCENARIO_GENERATOR_H
#define NONSEP_SCENARIO_GENERATOR_H

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "nonsep/entangled.h"
#include "nonsep/identical.h"
#include "nonsep/states.h"

namespace nonsep::oracle {

/// Deterministic source of random scenarios. The same seed yields the same
/// sequence on every platform: only raw mt19937_64 output is consumed, never
/// the implementation-defined standard distributions.
class ScenarioGenerator {
   public:
    explicit ScenarioGenerator(std::uint64_t seed) : seed_(seed), engine_(seed) {
    }

    std::uint64_t seed() const noexcept {
        return seed_;
    }

    /// Uniform in [0, 1).
    double uniform();
    double uniform(double lo, double hi);
    std::size_t index(std::size_t n);
    /// Uniform in the closed disk of radius `radius`.
    Amplitude complex_in_disk(double radius);
    Amplitude unit_phase();

    /// Gram table of `labels.size()` random unit vectors in C^dimension.
    GramSpec random_gram(const std::vector<std::string> &labels, std::size_t dimension);

    /// Random overlap table (sometimes rank deficient) and internal amplitude
    /// with |M| <= 0.7. Fermion scenarios keep |<phi|psi>| <= 0.95.
    identical::AbsorptionScenario absorption_scenario(Statistics stats);
    identical::EmissionScenario emission_scenario(Statistics stats);
    entangled::AbsorptionParams absorption_params();
    entangled::EmissionParams emission_params();

   private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

struct CampaignRecord {
    std::string check;  // e.g. "absorption/boson"
    std::size_t trial = 0;
    double closed_form = 0.0;
    double brute_force = 0.0;
    double abs_err = 0.0;
};

struct CampaignReport {
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    double max_abs_err = 0.0;
    std::vector<CampaignRecord> records;
};

/// Runs `trials` rounds; each round compares closed form and brute force
/// for identical absorption (all three statistics), entangled emission and
/// identical double emission (boson and fermion).
CampaignReport run_equivalence_campaign(std::uint64_t seed, std::size_t trials);

}  // namespace nonsep::oracle

#endif
