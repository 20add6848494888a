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

#ifndef NONSEP_ORACLE_H
#define NONSEP_ORACLE_H

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nonsep/entangled.h"
#include "nonsep/identical.h"
#include "nonsep/states.h"

namespace nonsep::oracle {

/// Coordinate vectors whose pairwise inner products reproduce a GramSpec.
/// The inner product is conjugate-linear in the first argument.
struct EmbeddedModes {
    std::vector<std::string> labels;
    std::size_t dimension = 0;
    std::vector<std::vector<Amplitude>> vectors;

    std::size_t index_of(const std::string &label) const;
    Amplitude inner(std::size_t i, std::size_t j) const;
};

/// Factorizes a validated Gram table: Cholesky first, falling back to a
/// Hermitian eigendecomposition (eigenvalues below 1e-12 clamped to zero)
/// when the table is singular or the triangular factor loses accuracy.
EmbeddedModes embed_modes(const GramSpec &spec);

/// Largest |<v_i|v_j> - spec(i, j)| over all entries.
double reconstruction_error(const EmbeddedModes &modes, const GramSpec &spec);

/// Arbitrary linear map on a single-particle space (spatial coordinates
/// times internal levels); not required to be unitary.
class SingleParticleOperator {
   public:
    explicit SingleParticleOperator(std::size_t dimension);
    static SingleParticleOperator identity(std::size_t dimension);

    std::size_t dimension() const noexcept {
        return dimension_;
    }
    Amplitude &operator()(std::size_t row, std::size_t col) {
        return matrix_[row * dimension_ + col];
    }
    Amplitude operator()(std::size_t row, std::size_t col) const {
        return matrix_[row * dimension_ + col];
    }

   private:
    std::size_t dimension_;
    std::vector<Amplitude> matrix_;
};

/// Vector on the tensor square of a single-particle space, stored with the
/// particle-1 index major: coordinates[i * single_dimension + j].
struct TwoParticleState {
    std::size_t single_dimension = 0;
    std::vector<Amplitude> coordinates;
    double norm = 0.0;
    // Prefactor N of the (anti)symmetrized combination, derived from the
    // explicit norm. Zero for states not built by build_symmetrized_state.
    double pair_factor = 0.0;
};

/// Index of (spatial coordinate, internal level) in a single-particle space
/// with `levels` internal levels.
constexpr std::size_t single_index(std::size_t spatial, std::size_t level, std::size_t levels) {
    return spatial * levels + level;
}

/// |mode> (x) |level> as a single-particle coordinate vector.
std::vector<Amplitude> single_particle_vector(const EmbeddedModes &modes, std::size_t mode,
                                              std::size_t level, std::size_t levels);

/// |a>_1 |b>_2, neither normalized nor symmetrized.
TwoParticleState product_state(std::span<const Amplitude> a, std::span<const Amplitude> b);

/// Linear combination sum_k weights[k] * states[k], then normalized.
TwoParticleState normalized_superposition(std::span<const TwoParticleState> states,
                                          std::span<const Amplitude> weights);

Amplitude inner_product(const TwoParticleState &bra, const TwoParticleState &ket);

/// The state with particle labels exchanged.
TwoParticleState swap_particles(const TwoParticleState &state);

inline constexpr std::size_t kGround = 0;
inline constexpr std::size_t kExcited = 1;

struct Occupancy {
    std::size_t mode;
    std::size_t level;  // kGround or kExcited
};

/// N (|a>_1|b>_2 +- |b>_1|a>_2) with N taken from the explicit norm.
///
/// For Distinguishable statistics the state is the ordered product
/// |a>_1|b>_2; its pair_factor is reported as 2^{-1/2} so that amplitudes
/// assemble with the same 2 N N' prefactors as the symmetrized cases.
TwoParticleState build_symmetrized_state(const EmbeddedModes &modes, Occupancy a, Occupancy b,
                                         Statistics stats);

/// <final| U_s (x) U_s |initial> by explicit contraction.
Amplitude amplitude_bruteforce(const TwoParticleState &final_state, const SingleParticleOperator &op,
                               const TwoParticleState &initial_state);

/// U_s = 1_spatial (x) (|g><g| + M |e><g| + |e><e|): absorption with internal
/// amplitude M, spatial part frozen so transition elements are M <a|b>.
SingleParticleOperator absorption_operator(const EmbeddedModes &modes, Amplitude internal_amplitude);

struct AbsorptionCheck {
    double n_i = 0.0;
    double n_abs_psi = 0.0;
    double n_abs_phi = 0.0;
    double n_f = 0.0;
    Amplitude m_psi;  // <Psi_abs(tilde_psi)|U|Psi_i>
    Amplitude m_phi;  // <Psi_abs(tilde_phi)|U|Psi_i>
    Probability probability;
};

/// Brute-force one-photon absorption by an identical pair: builds the
/// initial, both absorbed and the normalized pure final state explicitly.
AbsorptionCheck oracle_absorption_details(const identical::AbsorptionScenario &scenario);
Probability oracle_one_absorption_identical(const identical::AbsorptionScenario &scenario);

/// Brute-force double emission. Initial modes (phi, psi) and final modes
/// (bar_phi, bar_psi) are embedded in orthogonal subspaces; the spatial part
/// of U_s is constructed to reproduce the scenario's four emission elements.
Probability oracle_double_emission_identical(const identical::EmissionScenario &scenario);

// Entangled-pair space: spatial modes L, R (orthonormal) times the internal
// labels A, A*, B, B*.
namespace pair {
inline constexpr std::size_t kLeft = 0;
inline constexpr std::size_t kRight = 1;
inline constexpr std::size_t kA = 0;
inline constexpr std::size_t kAExcited = 1;
inline constexpr std::size_t kB = 2;
inline constexpr std::size_t kBExcited = 3;
inline constexpr std::size_t kLevels = 4;
inline constexpr std::size_t kDimension = 2 * kLevels;
}  // namespace pair

/// (|A>_L|B>_R + |B>_L|A>_R)/sqrt(2).
TwoParticleState entangled_ground_state();
/// The pair after interacting with light at L; beta and delta default to the
/// real non-negative completions of alpha and gamma.
TwoParticleState entangled_absorbed_state(const entangled::AbsorptionParams &p);
/// (|A*>_L|B>_R + |B*>_L|A>_R)/sqrt(2).
TwoParticleState entangled_excited_state();

/// <state| theta_A (x) 1 + theta_B (x) 1 |state>, theta the projector on the
/// excited level of each species, acting on the left-path particle.
double excitation_observable_expectation(const TwoParticleState &state);

/// Species-preserving single-atom evolution for the pair space: A* decays to
/// A with amplitude (1 - e^{-t/tau_a})^{1/2}, A stays with m_nt_a, and
/// likewise for B.
SingleParticleOperator emission_operator(const entangled::EmissionParams &p);

/// |<psi_0| U_s (x) U_s |psi_exc>|^2.
Probability oracle_emission_probability(const entangled::EmissionParams &p);
/// Equal-weight average of the two product-state emission probabilities.
Probability oracle_mixture_emission_probability(const entangled::EmissionParams &p);

/// The matrix elements _L<A|_R<B| U |B*>_L|A>_R and _L<B|_R<A| U |A*>_L|B>_R.
std::pair<Amplitude, Amplitude> emission_cross_terms(const SingleParticleOperator &op);

/// True iff both cross terms have magnitude below 1e-12.
bool verify_cross_terms_vanish(const SingleParticleOperator &op);

}  // namespace nonsep::oracle

#endif
