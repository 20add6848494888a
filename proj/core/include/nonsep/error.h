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

#ifndef NONSEP_ERROR_H
#define NONSEP_ERROR_H

#include <stdexcept>
#include <string>
#include <string_view>

namespace nonsep {

enum class ErrorKind {
    NonHermitian,
    NonUnitDiagonal,
    NotPositiveSemidefinite,
    PreconditionViolated,
    InvalidLifetime,
    InvalidArgument,
    PauliNullState,
    DegenerateFinalState,
    DimensionMismatch,
    ProbabilityOutOfRange,
};

std::string_view to_string(ErrorKind kind);

/// Raised when an input lies outside the physical or numerical domain of an
/// operation. `parameter()` names the offending input (an overlap label, a
/// lifetime, a minor's index set, ...).
class DomainError : public std::runtime_error {
   public:
    DomainError(ErrorKind kind, std::string parameter, const std::string &detail);

    ErrorKind kind() const noexcept {
        return kind_;
    }
    const std::string &parameter() const noexcept {
        return parameter_;
    }

   private:
    ErrorKind kind_;
    std::string parameter_;
};

}  // namespace nonsep

#endif
