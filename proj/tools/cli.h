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


#ifndef NONSEP_TOOLS_CLI_H
#define NONSEP_TOOLS_CLI_H

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nonsep/states.h"

namespace nonsep::cli {

enum ExitCode : int {
    kSuccess = 0,
    kConfigError = 1,
    kDomainError = 2,
    kVerificationFailure = 3,
};

// Malformed input: bad JSON, unknown keys, missing fields, bad flag syntax.
class ConfigError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

inline constexpr double kFermionGridCap = 1.0 - 1e-6;
inline constexpr double kVerifyTolerance = 1e-10;
inline constexpr int kDefaultPrecision = 9;

struct Grid {
    double start = 0.0;
    double stop = 0.0;
    std::size_t steps = 1;

    // start + (stop - start) * i / (steps - 1); the last point is exactly stop.
    std::vector<double> points() const;
};

Grid parse_grid(std::string_view text);  // "start:stop:steps"
std::vector<double> parse_list(std::string_view text);  // "v1,v2,..."

// Shortest-round-trip when precision <= 0, else %g-style significant digits.
std::string format_value(double value, int precision);

const std::vector<std::string> &modes();

struct ScenarioConfig {
    std::string mode;
    std::optional<Statistics> statistics;
    std::map<std::string, Amplitude> amplitudes;  // flat numeric keys
    std::vector<double> tilde_overlaps;
    std::optional<Grid> grid;
    std::string absorbed_normalization;
    std::string output_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> trials;
    int precision = kDefaultPrecision;

    bool has(const std::string &key) const {
        return amplitudes.count(key) != 0;
    }
    Amplitude amplitude(const std::string &key) const;
    double real(const std::string &key) const;
};

// Parses a JSON document for the given mode; fails closed on unknown keys.
ScenarioConfig parse_config(std::string_view json_text, const std::string &mode);
ScenarioConfig load_config(const std::string &path, const std::string &mode);

// Fills figure/verify defaults and checks required fields.
void finalize(ScenarioConfig &config);

struct RunResult {
    std::string output;  // CSV body, LF line endings
    std::string report;  // one-line summary for verify, empty otherwise
    int exit_code = kSuccess;
};

// Evaluates a finalized config. Warnings go to `warn`.
RunResult evaluate(const ScenarioConfig &config, std::ostream &warn);

// Writes through a sibling temporary file and rename.
void write_atomically(const std::string &path, const std::string &content);

// Full command-line entry point; args excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace nonsep::cli

#endif
