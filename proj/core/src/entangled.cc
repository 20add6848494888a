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
#include <string>

namespace nonsep::entangled {

namespace {

constexpr double kNormTolerance = 1e-9;

bool finite(Amplitude a) {
    return std::isfinite(a.real()) && std::isfinite(a.imag());
}

void require_finite(Amplitude a, const char *name) {
    if (!finite(a)) {
        throw DomainError(ErrorKind::InvalidArgument, name, "amplitude not finite");
    }
}

void require_completion(Amplitude excitation, const std::optional<Amplitude> &rest, const char *name) {
    if (!rest) {
        return;
    }
    require_finite(*rest, name);
    double total = std::norm(excitation) + std::norm(*rest);
    if (std::abs(total - 1.0) > kNormTolerance) {
        throw DomainError(ErrorKind::PreconditionViolated, name,
                          "squared moduli sum to " + std::to_string(total) + ", expected 1");
    }
}

}  // namespace

void validate(const AbsorptionParams &p) {
    require_finite(p.alpha, "alpha");
    require_finite(p.gamma, "gamma");
    require_completion(p.alpha, p.beta, "beta");
    require_completion(p.gamma, p.delta, "delta");
}

void validate(const EmissionParams &p) {
    if (!(p.tau_a > 0.0) || !std::isfinite(p.tau_a)) {
        throw DomainError(ErrorKind::InvalidLifetime, "tau_a", "lifetime must be positive");
    }
    if (!(p.tau_b > 0.0) || !std::isfinite(p.tau_b)) {
        throw DomainError(ErrorKind::InvalidLifetime, "tau_b", "lifetime must be positive");
    }
    if (!(p.t >= 0.0) || !std::isfinite(p.t)) {
        throw DomainError(ErrorKind::InvalidArgument, "t", "time must be >= 0");
    }
    require_finite(p.m_nt_a, "m_nt_a");
    require_finite(p.m_nt_b, "m_nt_b");
    if (std::abs(p.m_nt_a) > 1.0 + 1e-12) {
        throw DomainError(ErrorKind::InvalidArgument, "m_nt_a", "|m_nt_a| must be <= 1");
    }
    if (std::abs(p.m_nt_b) > 1.0 + 1e-12) {
        throw DomainError(ErrorKind::InvalidArgument, "m_nt_b", "|m_nt_b| must be <= 1");
    }
}

Probability one_absorption_probability(const AbsorptionParams &p) {
    validate(p);
    double value = 0.5 * std::norm(p.alpha + p.gamma);
    if (value > 1.0 + kProbabilityClampTolerance) {
        throw DomainError(ErrorKind::PreconditionViolated, "alpha+gamma", "|alpha + gamma|^2 exceeds 2");
    }
    return Probability::checked(value, "p_one");
}

Probability mixture_absorption_probability(const AbsorptionParams &p) {
    validate(p);
    return Probability::checked(0.5 * (std::norm(p.alpha) + std::norm(p.gamma)), "p_mixture");
}

double absorption_interference(const AbsorptionParams &p) {
    validate(p);
    return (std::conj(p.alpha) * p.gamma).real();
}

Amplitude single_emission_amplitude(double t, double tau) {
    if (!(tau > 0.0) || !std::isfinite(tau)) {
        throw DomainError(ErrorKind::InvalidLifetime, "tau", "lifetime must be positive");
    }
    if (!(t >= 0.0)) {
        throw DomainError(ErrorKind::InvalidArgument, "t", "time must be >= 0");
    }
    return std::sqrt(-std::expm1(-t / tau));
}

Probability emission_probability(const EmissionParams &p) {
    validate(p);
    Amplitude m_a = single_emission_amplitude(p.t, p.tau_a);
    Amplitude m_b = single_emission_amplitude(p.t, p.tau_b);
    double value = 0.25 * std::norm(m_a) * std::norm(p.m_nt_b) + 0.25 * std::norm(m_b) * std::norm(p.m_nt_a) +
                   0.5 * (std::conj(m_a) * std::conj(p.m_nt_b) * m_b * p.m_nt_a).real();
    return Probability::checked(value, "p_entangled");
}

Probability mixture_emission_probability(const EmissionParams &p) {
    validate(p);
    double p_a = std::norm(single_emission_amplitude(p.t, p.tau_a));
    double p_b = std::norm(single_emission_amplitude(p.t, p.tau_b));
    return Probability::checked(0.5 * (p_a * std::norm(p.m_nt_b) + p_b * std::norm(p.m_nt_a)), "p_mixture");
}

std::vector<Fig1Row> fig1_curve(std::span<const double> t_grid, double tau_a, double tau_b) {
    std::vector<Fig1Row> rows;
    rows.reserve(t_grid.size());
    for (double t : t_grid) {
        EmissionParams p{.tau_a = tau_a, .tau_b = tau_b, .t = t};
        rows.push_back({t, emission_probability(p), mixture_emission_probability(p)});
    }
    return rows;
}

}  // namespace nonsep::entangled
