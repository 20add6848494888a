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

#include "nonsep/oracle.h"

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <string>

namespace nonsep::oracle {

namespace {

constexpr double kEmbeddingTolerance = 1e-12;
constexpr double kEigenClamp = 1e-12;
constexpr double kNullNorm = 1e-12;

Eigen::MatrixXcd to_matrix(const GramSpec &spec) {
    const auto n = static_cast<Eigen::Index>(spec.size());
    Eigen::MatrixXcd g(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            g(i, j) = spec.entry(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
        }
    }
    return g;
}

// Rows of `factor` are the conjugated coordinates: G = F F^dagger.
EmbeddedModes from_factor(const GramSpec &spec, const Eigen::MatrixXcd &factor) {
    EmbeddedModes modes;
    modes.labels = spec.labels();
    modes.dimension = static_cast<std::size_t>(factor.cols());
    modes.vectors.resize(spec.size());
    for (Eigen::Index i = 0; i < factor.rows(); ++i) {
        auto &v = modes.vectors[static_cast<std::size_t>(i)];
        v.resize(modes.dimension);
        for (Eigen::Index k = 0; k < factor.cols(); ++k) {
            v[static_cast<std::size_t>(k)] = std::conj(factor(i, k));
        }
    }
    return modes;
}

double norm2(std::span<const Amplitude> v) {
    double s = 0.0;
    for (auto c : v) {
        s += std::norm(c);
    }
    return s;
}

}  // namespace

std::size_t EmbeddedModes::index_of(const std::string &label) const {
    auto it = std::find(labels.begin(), labels.end(), label);
    if (it == labels.end()) {
        throw DomainError(ErrorKind::InvalidArgument, label, "unknown mode label");
    }
    return static_cast<std::size_t>(it - labels.begin());
}

Amplitude EmbeddedModes::inner(std::size_t i, std::size_t j) const {
    Amplitude s{};
    for (std::size_t k = 0; k < dimension; ++k) {
        s += std::conj(vectors[i][k]) * vectors[j][k];
    }
    return s;
}

double reconstruction_error(const EmbeddedModes &modes, const GramSpec &spec) {
    double worst = 0.0;
    for (std::size_t i = 0; i < spec.size(); ++i) {
        for (std::size_t j = 0; j < spec.size(); ++j) {
            worst = std::max(worst, std::abs(modes.inner(i, j) - spec.entry(i, j)));
        }
    }
    return worst;
}

EmbeddedModes embed_modes(const GramSpec &spec) {
    validate_gram(spec);
    const Eigen::MatrixXcd g = to_matrix(spec);

    Eigen::LLT<Eigen::MatrixXcd> llt(g);
    if (llt.info() == Eigen::Success) {
        Eigen::MatrixXcd factor = llt.matrixL();
        EmbeddedModes modes = from_factor(spec, factor);
        if (reconstruction_error(modes, spec) <= kEmbeddingTolerance) {
            return modes;
        }
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(g);
    if (eig.info() != Eigen::Success) {
        throw DomainError(ErrorKind::NotPositiveSemidefinite, "gram", "eigendecomposition failed");
    }
    const Eigen::VectorXd &lambda = eig.eigenvalues();
    std::vector<Eigen::Index> kept;
    for (Eigen::Index k = 0; k < lambda.size(); ++k) {
        if (lambda(k) >= kEigenClamp) {
            kept.push_back(k);
        }
    }
    Eigen::MatrixXcd factor(g.rows(), static_cast<Eigen::Index>(kept.size()));
    for (std::size_t c = 0; c < kept.size(); ++c) {
        factor.col(static_cast<Eigen::Index>(c)) = eig.eigenvectors().col(kept[c]) * std::sqrt(lambda(kept[c]));
    }
    EmbeddedModes modes = from_factor(spec, factor);
    double err = reconstruction_error(modes, spec);
    if (err > kEmbeddingTolerance) {
        throw DomainError(ErrorKind::NotPositiveSemidefinite, "gram",
                          "clamped eigendecomposition misses table by " + std::to_string(err));
    }
    return modes;
}

SingleParticleOperator::SingleParticleOperator(std::size_t dimension)
    : dimension_(dimension), matrix_(dimension * dimension) {
}

SingleParticleOperator SingleParticleOperator::identity(std::size_t dimension) {
    SingleParticleOperator op(dimension);
    for (std::size_t i = 0; i < dimension; ++i) {
        op(i, i) = 1.0;
    }
    return op;
}

std::vector<Amplitude> single_particle_vector(const EmbeddedModes &modes, std::size_t mode, std::size_t level,
                                              std::size_t levels) {
    if (level >= levels || mode >= modes.vectors.size()) {
        throw DomainError(ErrorKind::DimensionMismatch, "occupancy", "mode or level out of range");
    }
    std::vector<Amplitude> v(modes.dimension * levels);
    for (std::size_t s = 0; s < modes.dimension; ++s) {
        v[single_index(s, level, levels)] = modes.vectors[mode][s];
    }
    return v;
}

TwoParticleState product_state(std::span<const Amplitude> a, std::span<const Amplitude> b) {
    if (a.size() != b.size()) {
        throw DomainError(ErrorKind::DimensionMismatch, "product_state", "factor dimensions differ");
    }
    TwoParticleState s;
    s.single_dimension = a.size();
    s.coordinates.resize(a.size() * b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            s.coordinates[i * b.size() + j] = a[i] * b[j];
        }
    }
    s.norm = std::sqrt(norm2(s.coordinates));
    return s;
}

TwoParticleState normalized_superposition(std::span<const TwoParticleState> states,
                                          std::span<const Amplitude> weights) {
    if (states.empty() || states.size() != weights.size()) {
        throw DomainError(ErrorKind::DimensionMismatch, "superposition", "need one weight per state");
    }
    TwoParticleState out;
    out.single_dimension = states.front().single_dimension;
    out.coordinates.assign(states.front().coordinates.size(), Amplitude{});
    for (std::size_t k = 0; k < states.size(); ++k) {
        if (states[k].coordinates.size() != out.coordinates.size()) {
            throw DomainError(ErrorKind::DimensionMismatch, "superposition", "state dimensions differ");
        }
        for (std::size_t i = 0; i < out.coordinates.size(); ++i) {
            out.coordinates[i] += weights[k] * states[k].coordinates[i];
        }
    }
    double n = std::sqrt(norm2(out.coordinates));
    if (n < kNullNorm) {
        throw DomainError(ErrorKind::DegenerateFinalState, "superposition", "combination has zero norm");
    }
    for (auto &c : out.coordinates) {
        c /= n;
    }
    out.norm = std::sqrt(norm2(out.coordinates));
    out.pair_factor = 1.0 / n;
    return out;
}

Amplitude inner_product(const TwoParticleState &bra, const TwoParticleState &ket) {
    if (bra.coordinates.size() != ket.coordinates.size()) {
        throw DomainError(ErrorKind::DimensionMismatch, "inner_product", "state dimensions differ");
    }
    Amplitude s{};
    for (std::size_t i = 0; i < bra.coordinates.size(); ++i) {
        s += std::conj(bra.coordinates[i]) * ket.coordinates[i];
    }
    return s;
}

TwoParticleState swap_particles(const TwoParticleState &state) {
    TwoParticleState out = state;
    const std::size_t d = state.single_dimension;
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            out.coordinates[i * d + j] = state.coordinates[j * d + i];
        }
    }
    return out;
}

TwoParticleState build_symmetrized_state(const EmbeddedModes &modes, Occupancy a, Occupancy b, Statistics stats) {
    constexpr std::size_t kLevels = 2;
    auto va = single_particle_vector(modes, a.mode, a.level, kLevels);
    auto vb = single_particle_vector(modes, b.mode, b.level, kLevels);
    TwoParticleState ab = product_state(va, vb);
    if (stats == Statistics::Distinguishable) {
        ab.pair_factor = 1.0 / std::sqrt(2.0);
        return ab;
    }
    TwoParticleState ba = product_state(vb, va);
    const double sign = stats == Statistics::Boson ? 1.0 : -1.0;
    TwoParticleState out;
    out.single_dimension = ab.single_dimension;
    out.coordinates.resize(ab.coordinates.size());
    for (std::size_t i = 0; i < out.coordinates.size(); ++i) {
        out.coordinates[i] = ab.coordinates[i] + sign * ba.coordinates[i];
    }
    double raw_norm = std::sqrt(norm2(out.coordinates));
    if (raw_norm < kNullNorm) {
        throw DomainError(ErrorKind::PauliNullState, modes.labels[a.mode] + "," + modes.labels[b.mode],
                          "antisymmetrized state of identical single-particle states is null");
    }
    out.pair_factor = 1.0 / raw_norm;
    for (auto &c : out.coordinates) {
        c *= out.pair_factor;
    }
    out.norm = std::sqrt(norm2(out.coordinates));
    return out;
}

Amplitude amplitude_bruteforce(const TwoParticleState &final_state, const SingleParticleOperator &op,
                               const TwoParticleState &initial_state) {
    const std::size_t d = op.dimension();
    if (final_state.single_dimension != d || initial_state.single_dimension != d ||
        final_state.coordinates.size() != d * d || initial_state.coordinates.size() != d * d) {
        throw DomainError(ErrorKind::DimensionMismatch, "amplitude_bruteforce",
                          "operator and states live on different spaces");
    }
    // (U (x) U) psi, with psi viewed as a d x d matrix C, is U C U^T.
    std::vector<Amplitude> uc(d * d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t l = 0; l < d; ++l) {
            Amplitude s{};
            for (std::size_t k = 0; k < d; ++k) {
                s += op(i, k) * initial_state.coordinates[k * d + l];
            }
            uc[i * d + l] = s;
        }
    }
    Amplitude total{};
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            Amplitude s{};
            for (std::size_t l = 0; l < d; ++l) {
                s += uc[i * d + l] * op(j, l);
            }
            total += std::conj(final_state.coordinates[i * d + j]) * s;
        }
    }
    return total;
}

SingleParticleOperator absorption_operator(const EmbeddedModes &modes, Amplitude internal_amplitude) {
    constexpr std::size_t kLevels = 2;
    SingleParticleOperator op(modes.dimension * kLevels);
    for (std::size_t s = 0; s < modes.dimension; ++s) {
        op(single_index(s, kGround, kLevels), single_index(s, kGround, kLevels)) = 1.0;
        op(single_index(s, kExcited, kLevels), single_index(s, kGround, kLevels)) = internal_amplitude;
        op(single_index(s, kExcited, kLevels), single_index(s, kExcited, kLevels)) = 1.0;
    }
    return op;
}

AbsorptionCheck oracle_absorption_details(const identical::AbsorptionScenario &scenario) {
    if (std::abs(scenario.internal_amplitude) > 1.0 + 1e-12) {
        throw DomainError(ErrorKind::InvalidArgument, "internal_amplitude", "magnitude exceeds 1");
    }
    EmbeddedModes modes = embed_modes(scenario.overlaps);
    const std::size_t psi = modes.index_of(std::string(identical::kPsi));
    const std::size_t phi = modes.index_of(std::string(identical::kPhi));
    const std::size_t tpsi = modes.index_of(std::string(identical::kTildePsi));
    const std::size_t tphi = modes.index_of(std::string(identical::kTildePhi));
    const Statistics st = scenario.stats;

    TwoParticleState initial = build_symmetrized_state(modes, {phi, kGround}, {psi, kGround}, st);
    TwoParticleState abs_psi = build_symmetrized_state(modes, {tpsi, kExcited}, {phi, kGround}, st);
    TwoParticleState abs_phi = build_symmetrized_state(modes, {tphi, kExcited}, {psi, kGround}, st);
    const TwoParticleState parts[] = {abs_psi, abs_phi};
    const Amplitude weights[] = {1.0, 1.0};
    TwoParticleState final_state = normalized_superposition(parts, weights);

    SingleParticleOperator u = absorption_operator(modes, scenario.internal_amplitude);
    AbsorptionCheck out;
    out.n_i = initial.pair_factor;
    out.n_abs_psi = abs_psi.pair_factor;
    out.n_abs_phi = abs_phi.pair_factor;
    out.n_f = final_state.pair_factor;
    out.m_psi = amplitude_bruteforce(abs_psi, u, initial);
    out.m_phi = amplitude_bruteforce(abs_phi, u, initial);
    out.probability = Probability::checked(std::norm(amplitude_bruteforce(final_state, u, initial)), "oracle_p_one_ide");
    return out;
}

Probability oracle_one_absorption_identical(const identical::AbsorptionScenario &scenario) {
    return oracle_absorption_details(scenario).probability;
}

Probability oracle_double_emission_identical(const identical::EmissionScenario &scenario) {
    GramSpec g({"phi", "psi", "bar_phi", "bar_psi"});
    g.set_overlap("phi", "psi", scenario.initial_overlap);
    g.set_overlap("bar_phi", "bar_psi", scenario.final_overlap);
    EmbeddedModes modes = embed_modes(g);
    const auto d = static_cast<Eigen::Index>(modes.dimension);

    // Spatial map S with <bar_a|S|b> equal to the prescribed elements:
    // S = F (F^+ F)^{-1} E (I^+ I)^{-1} I^+, with I, F the initial and final
    // mode columns and E the element table.
    Eigen::MatrixXcd in(d, 2), fin(d, 2);
    for (Eigen::Index k = 0; k < d; ++k) {
        in(k, 0) = modes.vectors[0][static_cast<std::size_t>(k)];
        in(k, 1) = modes.vectors[1][static_cast<std::size_t>(k)];
        fin(k, 0) = modes.vectors[2][static_cast<std::size_t>(k)];
        fin(k, 1) = modes.vectors[3][static_cast<std::size_t>(k)];
    }
    Eigen::Matrix2cd elements;
    elements << scenario.m_phibar_phi, scenario.m_phibar_psi, scenario.m_psibar_phi, scenario.m_psibar_psi;
    Eigen::Matrix2cd gin = in.adjoint() * in;
    Eigen::Matrix2cd gfin = fin.adjoint() * fin;
    if (std::abs(gin.determinant()) < 1e-9 || std::abs(gfin.determinant()) < 1e-9) {
        throw DomainError(ErrorKind::InvalidArgument, "overlap",
                          "oracle needs linearly independent initial and final modes");
    }
    Eigen::MatrixXcd spatial = fin * gfin.inverse() * elements * gin.inverse() * in.adjoint();

    constexpr std::size_t kLevels = 2;
    SingleParticleOperator u(modes.dimension * kLevels);
    for (std::size_t r = 0; r < modes.dimension; ++r) {
        for (std::size_t c = 0; c < modes.dimension; ++c) {
            u(single_index(r, kGround, kLevels), single_index(c, kExcited, kLevels)) =
                spatial(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
        }
    }
    TwoParticleState excited = build_symmetrized_state(modes, {0, kExcited}, {1, kExcited}, scenario.stats);
    TwoParticleState final_state = build_symmetrized_state(modes, {2, kGround}, {3, kGround}, scenario.stats);
    return Probability::checked(std::norm(amplitude_bruteforce(final_state, u, excited)), "oracle_p_two_ide");
}

namespace {

std::vector<Amplitude> pair_basis(std::size_t spatial, std::size_t level) {
    std::vector<Amplitude> v(pair::kDimension);
    v[single_index(spatial, level, pair::kLevels)] = 1.0;
    return v;
}

TwoParticleState pair_product(std::size_t left_level, std::size_t right_level) {
    return product_state(pair_basis(pair::kLeft, left_level), pair_basis(pair::kRight, right_level));
}

TwoParticleState combine(std::initializer_list<std::pair<Amplitude, TwoParticleState>> terms) {
    TwoParticleState out;
    out.single_dimension = pair::kDimension;
    out.coordinates.assign(pair::kDimension * pair::kDimension, Amplitude{});
    for (const auto &[w, s] : terms) {
        for (std::size_t i = 0; i < out.coordinates.size(); ++i) {
            out.coordinates[i] += w * s.coordinates[i];
        }
    }
    out.norm = std::sqrt(norm2(out.coordinates));
    return out;
}

}  // namespace

TwoParticleState entangled_ground_state() {
    const double h = 1.0 / std::sqrt(2.0);
    return combine({{h, pair_product(pair::kA, pair::kB)}, {h, pair_product(pair::kB, pair::kA)}});
}

TwoParticleState entangled_excited_state() {
    const double h = 1.0 / std::sqrt(2.0);
    return combine({{h, pair_product(pair::kAExcited, pair::kB)}, {h, pair_product(pair::kBExcited, pair::kA)}});
}

TwoParticleState entangled_absorbed_state(const entangled::AbsorptionParams &p) {
    entangled::validate(p);
    if (std::abs(p.alpha) > 1.0 || std::abs(p.gamma) > 1.0) {
        throw DomainError(ErrorKind::InvalidArgument, "alpha/gamma", "excitation amplitudes exceed 1");
    }
    const Amplitude beta = p.beta.value_or(std::sqrt(1.0 - std::norm(p.alpha)));
    const Amplitude delta = p.delta.value_or(std::sqrt(1.0 - std::norm(p.gamma)));
    const double h = 1.0 / std::sqrt(2.0);
    return combine({{h * p.alpha, pair_product(pair::kAExcited, pair::kB)},
                    {h * beta, pair_product(pair::kA, pair::kB)},
                    {h * p.gamma, pair_product(pair::kBExcited, pair::kA)},
                    {h * delta, pair_product(pair::kB, pair::kA)}});
}

double excitation_observable_expectation(const TwoParticleState &state) {
    constexpr std::size_t d = pair::kDimension;
    if (state.single_dimension != d || state.coordinates.size() != d * d) {
        throw DomainError(ErrorKind::DimensionMismatch, "state", "not on the entangled-pair space");
    }
    double s = 0.0;
    for (std::size_t i = 0; i < d; ++i) {
        const std::size_t level = i % pair::kLevels;
        if (level != pair::kAExcited && level != pair::kBExcited) {
            continue;
        }
        for (std::size_t j = 0; j < d; ++j) {
            s += std::norm(state.coordinates[i * d + j]);
        }
    }
    return s;
}

SingleParticleOperator emission_operator(const entangled::EmissionParams &p) {
    entangled::validate(p);
    const Amplitude decay_a = entangled::single_emission_amplitude(p.t, p.tau_a);
    const Amplitude decay_b = entangled::single_emission_amplitude(p.t, p.tau_b);
    const double survive_a = std::exp(-0.5 * p.t / p.tau_a);
    const double survive_b = std::exp(-0.5 * p.t / p.tau_b);
    SingleParticleOperator op(pair::kDimension);
    for (std::size_t s : {pair::kLeft, pair::kRight}) {
        auto at = [&](std::size_t level) { return single_index(s, level, pair::kLevels); };
        op(at(pair::kA), at(pair::kAExcited)) = decay_a;
        op(at(pair::kAExcited), at(pair::kAExcited)) = survive_a;
        op(at(pair::kA), at(pair::kA)) = p.m_nt_a;
        op(at(pair::kB), at(pair::kBExcited)) = decay_b;
        op(at(pair::kBExcited), at(pair::kBExcited)) = survive_b;
        op(at(pair::kB), at(pair::kB)) = p.m_nt_b;
    }
    return op;
}

Probability oracle_emission_probability(const entangled::EmissionParams &p) {
    SingleParticleOperator u = emission_operator(p);
    return Probability::checked(std::norm(amplitude_bruteforce(entangled_ground_state(), u, entangled_excited_state())),
                                "oracle_p_em");
}

Probability oracle_mixture_emission_probability(const entangled::EmissionParams &p) {
    SingleParticleOperator u = emission_operator(p);
    double via_a = std::norm(amplitude_bruteforce(pair_product(pair::kA, pair::kB), u,
                                                  pair_product(pair::kAExcited, pair::kB)));
    double via_b = std::norm(amplitude_bruteforce(pair_product(pair::kB, pair::kA), u,
                                                  pair_product(pair::kBExcited, pair::kA)));
    return Probability::checked(0.5 * (via_a + via_b), "oracle_p_em_mix");
}

std::pair<Amplitude, Amplitude> emission_cross_terms(const SingleParticleOperator &op) {
    Amplitude first = amplitude_bruteforce(pair_product(pair::kA, pair::kB), op, pair_product(pair::kBExcited, pair::kA));
    Amplitude second = amplitude_bruteforce(pair_product(pair::kB, pair::kA), op, pair_product(pair::kAExcited, pair::kB));
    return {first, second};
}

bool verify_cross_terms_vanish(const SingleParticleOperator &op) {
    auto [first, second] = emission_cross_terms(op);
    return std::abs(first) < 1e-12 && std::abs(second) < 1e-12;
}

}  // namespace nonsep::oracle
