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

#ifndef NONSEP_STATES_H
#define NONSEP_STATES_H

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nonsep/error.h"

namespace nonsep {

using Amplitude = std::complex<double>;

inline constexpr double kPsdTolerance = 1e-12;
inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kProbabilityClampTolerance = 1e-12;

enum class Statistics { Boson, Fermion, Distinguishable };

std::string_view to_string(Statistics stats);
/// Accepts "boson", "fermion" or "distinguishable" (lower case).
Statistics parse_statistics(std::string_view text);

/// +1 for bosons, -1 for fermions, 0 when exchange is disabled.
int exchange_sign(Statistics stats) noexcept;

/// Combines a direct and an exchange contribution with the sign of `stats`.
Amplitude double_sign(Statistics stats, Amplitude direct, Amplitude exchange) noexcept;

/// A probability in [0, 1]. Values within kProbabilityClampTolerance outside
/// the interval are clamped; larger excursions raise ProbabilityOutOfRange.
class Probability {
   public:
    constexpr Probability() = default;
    static Probability checked(double value, std::string_view what = "probability");

    constexpr double value() const noexcept {
        return value_;
    }
    constexpr operator double() const noexcept {
        return value_;
    }

   private:
    constexpr explicit Probability(double value) : value_(value) {
    }
    double value_ = 0.0;
};

/// Table of pairwise overlaps <i|j> between named center-of-mass modes.
///
/// entry(i, j) is the scalar product with mode i as the bra. Construction
/// only checks the shape; physical consistency is checked by validate_gram.
class GramSpec {
   public:
    GramSpec() = default;
    /// Identity table over `labels`.
    explicit GramSpec(std::vector<std::string> labels);
    GramSpec(std::vector<std::string> labels, std::vector<Amplitude> row_major_entries);

    std::size_t size() const noexcept {
        return labels_.size();
    }
    const std::vector<std::string> &labels() const noexcept {
        return labels_;
    }
    std::size_t index_of(std::string_view label) const;

    Amplitude entry(std::size_t i, std::size_t j) const {
        return entries_[i * labels_.size() + j];
    }
    Amplitude overlap(std::string_view bra, std::string_view ket) const;

    /// Sets <bra|ket> and its Hermitian partner <ket|bra>.
    GramSpec &set_overlap(std::string_view bra, std::string_view ket, Amplitude value);
    /// Sets a single entry without touching its partner.
    GramSpec &set_entry(std::size_t i, std::size_t j, Amplitude value);

    std::span<const Amplitude> entries() const noexcept {
        return entries_;
    }

    bool operator==(const GramSpec &) const = default;

   private:
    std::vector<std::string> labels_;
    std::vector<Amplitude> entries_;
};

/// Determinant of the principal submatrix on `indices` (LU with partial
/// pivoting).
Amplitude principal_minor(const GramSpec &spec, std::span<const std::size_t> indices);

/// Returns `spec` unchanged if it is Hermitian with unit diagonal and every
/// principal minor is >= -kPsdTolerance. Throws DomainError otherwise.
GramSpec validate_gram(const GramSpec &spec);

}  // namespace nonsep

#endif
