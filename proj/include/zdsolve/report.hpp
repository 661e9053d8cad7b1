// Copyright 2026 The zdsolve Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Running one pipeline stage on text input and reporting it as JSON.

#ifndef ZDSOLVE_REPORT_HPP_
#define ZDSOLVE_REPORT_HPP_

#include <cstdint>
#include <exception>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "zdsolve/errors.hpp"
#include "zdsolve/solver.hpp"

namespace zds {

enum class Command { kRoots, kEliminate, kGridSep, kSlf, kSolve };
enum class Format { kJson, kText };

std::string to_string(Command c);
std::optional<Command> parse_command(const std::string& name);

struct RunConfig {
  Command command = Command::kSolve;
  std::int64_t precision_bits = 53;
  std::uint64_t seed = 0;
  Format format = Format::kJson;
  /// Re-certify every reported root or solution.
  bool check = false;
  /// Wall-clock seconds in the report; off by default so that reports are
  /// reproducible byte for byte.
  bool timing = false;
  /// eliminate: the linear form (x1 when absent).
  std::optional<std::vector<Integer>> form;
  /// grid-sep: block length; slf: family block, selecting a strong form.
  std::optional<Integer> block;
};

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitPositiveDimensional = 3;
inline constexpr int kExitCertification = 4;

/// Exit code for an exception thrown by run_command.
int exit_code_for(const std::exception& e);

/// Input that parses but is not a valid system (non-square, unreadable).
class InputError : public Error {
 public:
  using Error::Error;
};

/// Reads a system file ("-" for standard input).
PolynomialSystem parse_system_file(const std::string& path);

/// Nonblank, non-comment lines of a univariate input.
std::vector<UniPoly> parse_univariate_lines(std::istream& in);

/// Thrown by --check when a reported box fails re-certification.
class CheckFailure : public CertificationError {
 public:
  using CertificationError::CertificationError;
};

/// Runs the configured stage on the input text and returns the report.
nlohmann::ordered_json run_command(const RunConfig& config, std::istream& input);

nlohmann::ordered_json box_json(const ComplexBox& b);
nlohmann::ordered_json integer_json(const Integer& v);
nlohmann::ordered_json polynomial_json(const UniPoly& f);

std::string emit_report(const nlohmann::ordered_json& report, Format format);

}  // namespace zds

#endif  // ZDSOLVE_REPORT_HPP_
