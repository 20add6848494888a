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

#include "nonsep/states.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>

namespace nonsep {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NonHermitian:
            return "NonHermitian";
        case ErrorKind::NonUnitDiagonal:
            return "NonUnitDiagonal";
        case ErrorKind::NotPositiveSemidefinite:
            return "NotPositiveSemidefinite";
        case ErrorKind::PreconditionViolated:
            return "PreconditionViolated";
        case ErrorKind::InvalidLifetime:
            return "InvalidLifetime";
        case ErrorKind::InvalidArgument:
            return "InvalidArgument";
        case ErrorKind::PauliNullState:
            return "PauliNullState";
        case ErrorKind::DegenerateFinalState:
            return "DegenerateFinalState";
        case ErrorKind::DimensionMismatch:
            return "DimensionMismatch";
        case ErrorKind::ProbabilityOutOfRange:
            return "ProbabilityOutOfRange";
    }
    return "Unknown";
}

namespace {
std::string describe(ErrorKind kind, const std::string &parameter, const std::string &detail) {
    std::string out(to_string(kind));
    if (!parameter.empty()) {
        out += " [" + parameter + "]";
    }
    if (!detail.empty()) {
        out += ": " + detail;
    }
    return out;
}
}  // namespace

DomainError::DomainError(ErrorKind kind, std::string parameter, const std::string &detail)
    : std::runtime_error(describe(kind, parameter, detail)), kind_(kind), parameter_(std::move(parameter)) {
}

std::string_view to_string(Statistics stats) {
    switch (stats) {
        case Statistics::Boson:
            return "boson";
        case Statistics::Fermion:
            return "fermion";
        case Statistics::Distinguishable:
            return "distinguishable";
    }
    return "unknown";
}

Statistics parse_statistics(std::string_view text) {
    if (text == "boson") {
        return Statistics::Boson;
    }
    if (text == "fermion") {
        return Statistics::Fermion;
    }
    if (text == "distinguishable") {
        return Statistics::Distinguishable;
    }
    throw DomainError(ErrorKind::InvalidArgument, "statistics",
                      "expected boson, fermion or distinguishable, got '" + std::string(text) + "'");
}

int exchange_sign(Statistics stats) noexcept {
    switch (stats) {
        case Statistics::Boson:
            return 1;
        case Statistics::Fermion:
            return -1;
        case Statistics::Distinguishable:
            return 0;
    }
    return 0;
}

Amplitude double_sign(Statistics stats, Amplitude direct, Amplitude exchange) noexcept {
    switch (stats) {
        case Statistics::Boson:
            return direct + exchange;
        case Statistics::Fermion:
            return direct - exchange;
        case Statistics::Distinguishable:
            return direct;
    }
    return direct;
}

Probability Probability::checked(double value, std::string_view what) {
    if (!std::isfinite(value)) {
        throw DomainError(ErrorKind::ProbabilityOutOfRange, std::string(what), "not finite");
    }
    if (value < -kProbabilityClampTolerance || value > 1.0 + kProbabilityClampTolerance) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "value " << value << " outside [0, 1]";
        throw DomainError(ErrorKind::ProbabilityOutOfRange, std::string(what), msg.str());
    }
    return Probability(std::clamp(value, 0.0, 1.0));
}

GramSpec::GramSpec(std::vector<std::string> labels)
    : labels_(std::move(labels)), entries_(labels_.size() * labels_.size()) {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        entries_[i * labels_.size() + i] = 1.0;
    }
}

GramSpec::GramSpec(std::vector<std::string> labels, std::vector<Amplitude> row_major_entries)
    : labels_(std::move(labels)), entries_(std::move(row_major_entries)) {
    if (entries_.size() != labels_.size() * labels_.size()) {
        throw DomainError(ErrorKind::DimensionMismatch, "entries",
                          "expected " + std::to_string(labels_.size() * labels_.size()) + " entries, got " +
                              std::to_string(entries_.size()));
    }
}

std::size_t GramSpec::index_of(std::string_view label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) {
        throw DomainError(ErrorKind::InvalidArgument, std::string(label), "unknown mode label");
    }
    return static_cast<std::size_t>(it - labels_.begin());
}

Amplitude GramSpec::overlap(std::string_view bra, std::string_view ket) const {
    return entry(index_of(bra), index_of(ket));
}

GramSpec &GramSpec::set_overlap(std::string_view bra, std::string_view ket, Amplitude value) {
    std::size_t i = index_of(bra);
    std::size_t j = index_of(ket);
    set_entry(i, j, value);
    set_entry(j, i, std::conj(value));
    return *this;
}

GramSpec &GramSpec::set_entry(std::size_t i, std::size_t j, Amplitude value) {
    entries_.at(i * labels_.size() + j) = value;
    return *this;
}

Amplitude principal_minor(const GramSpec &spec, std::span<const std::size_t> indices) {
    std::size_t k = indices.size();
    std::vector<Amplitude> a(k * k);
    for (std::size_t r = 0; r < k; ++r) {
        for (std::size_t c = 0; c < k; ++c) {
            a[r * k + c] = spec.entry(indices[r], indices[c]);
        }
    }
    Amplitude det = 1.0;
    for (std::size_t col = 0; col < k; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < k; ++r) {
            if (std::abs(a[r * k + col]) > std::abs(a[pivot * k + col])) {
                pivot = r;
            }
        }
        if (a[pivot * k + col] == Amplitude{}) {
            return 0.0;
        }
        if (pivot != col) {
            for (std::size_t c = 0; c < k; ++c) {
                std::swap(a[pivot * k + c], a[col * k + c]);
            }
            det = -det;
        }
        det *= a[col * k + col];
        for (std::size_t r = col + 1; r < k; ++r) {
            Amplitude f = a[r * k + col] / a[col * k + col];
            for (std::size_t c = col; c < k; ++c) {
                a[r * k + c] -= f * a[col * k + c];
            }
        }
    }
    return det;
}

namespace {
std::string pair_name(const GramSpec &spec, std::size_t i, std::size_t j) {
    return "<" + spec.labels()[i] + "|" + spec.labels()[j] + ">";
}
}  // namespace

GramSpec validate_gram(const GramSpec &spec) {
    const std::size_t n = spec.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            Amplitude v = spec.entry(i, j);
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
                throw DomainError(ErrorKind::InvalidArgument, pair_name(spec, i, j), "entry not finite");
            }
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (std::abs(spec.entry(i, i) - 1.0) > kHermitianTolerance) {
            throw DomainError(ErrorKind::NonUnitDiagonal, pair_name(spec, i, i), "diagonal entry must be 1");
        }
        for (std::size_t j = i + 1; j < n; ++j) {
            if (std::abs(spec.entry(i, j) - std::conj(spec.entry(j, i))) > kHermitianTolerance) {
                throw DomainError(ErrorKind::NonHermitian, pair_name(spec, i, j),
                                  "differs from conjugate of " + pair_name(spec, j, i));
            }
        }
    }

    // Sylvester's criterion for semidefiniteness needs every principal minor,
    // not only the leading ones. Leading minors are examined first so the
    // reported index set is the smallest leading one when that fails.
    if (n > 20) {
        throw DomainError(ErrorKind::InvalidArgument, "size", "at most 20 modes are supported");
    }
    std::vector<std::size_t> subset;
    auto check = [&](const std::vector<std::size_t> &idx) {
        double minor = principal_minor(spec, idx).real();
        if (minor < -kPsdTolerance) {
            std::string name = "minor{";
            for (std::size_t k = 0; k < idx.size(); ++k) {
                name += (k ? "," : "") + spec.labels()[idx[k]];
            }
            name += "}";
            std::ostringstream msg;
            msg.precision(17);
            msg << "principal minor " << minor << " < 0";
            throw DomainError(ErrorKind::NotPositiveSemidefinite, name, msg.str());
        }
    };
    for (std::size_t k = 1; k <= n; ++k) {
        subset.push_back(k - 1);
        check(subset);
    }
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
        subset.clear();
        for (std::size_t b = 0; b < n; ++b) {
            if (mask & (std::uint32_t{1} << b)) {
                subset.push_back(b);
            }
        }
        if (subset.size() < 2) {
            continue;
        }
        check(subset);
    }
    return spec;
}

}  // namespace nonsep
