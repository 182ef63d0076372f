/*
 * Copyright 2026 The casimir-matsubara Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

// Command implementations behind the `casimir` executable. Each command
// returns its serialized output and exit status so it can run in-process.

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "casimir/asymptotics.hpp"
#include "casimir/error.hpp"
#include "casimir/pressure.hpp"
#include "casimir/series.hpp"

namespace casimir::cli {

inline constexpr int kSchemaVersion = 1;

inline constexpr int kExitOk = 0;
inline constexpr int kExitInput = 1;
inline constexpr int kExitNumerical = 2;

enum class Format { csv, json };

/// Exit status for a failed evaluation: 2 for budget, overflow and
/// non-convergence, 1 for everything caused by the inputs.
int exit_code_for(ErrorKind kind) noexcept;

struct ErrorInfo {
  ErrorKind kind = ErrorKind::domain;
  std::string message;
};

/// One evaluated configuration.
struct PressureRow {
  CavityConfig cfg;              // as evaluated (L = 2a for Dirichlet plates)
  bool dirichlet = false;
  Field field = Field::scalar;
  std::optional<PressureReport> report;
  std::optional<double> normalized_vacuum;
  std::optional<ErrorInfo> error;
};

struct Figure1Row {
  double m_l = 0.0;
  std::optional<double> normalized_pressure;
  std::optional<ErrorInfo> error;
};

struct CommandResult {
  std::string output;
  int exit_code = kExitOk;
};

struct EvalRequest {
  CavityConfig cfg;
  bool dirichlet = false;        // plates at separation a = L / 2 unless plate_separation is set
  std::optional<double> plate_separation;
  Field field = Field::scalar;
};

struct SweepSpec {
  std::vector<int> dimensions{4};
  std::vector<double> masses;
  std::vector<double> lengths;
  std::vector<std::optional<double>> betas{std::nullopt};  // nullopt = infinite (zero temperature)
  Format format = Format::csv;
  std::optional<std::string> output_path;
  std::size_t row_cap = 1'000'000;
  unsigned threads = 0;                     // 0 = hardware concurrency

  std::size_t size() const;
  /// Throws Error(invalid_config) for empty grids, invalid values or a grid
  /// larger than row_cap.
  void validate() const;
};

/// Parses a sweep description such as
///   {"dimension": [4], "mass": [0, 0.5], "length": [1, 2],
///    "beta": [1, "infinite"], "format": "csv", "output": "out.csv"}.
/// Throws Error(invalid_config) on malformed input.
SweepSpec parse_sweep_spec(std::string_view json_text);

/// Parses a beta token: a positive number, or "inf" / "infinite".
std::optional<double> parse_beta(std::string_view token);

CommandResult cmd_eval(const EvalRequest& request, const SeriesControl& ctrl, Format format);
CommandResult cmd_sweep(const SweepSpec& spec, const SeriesControl& ctrl);
CommandResult cmd_figure1(const std::vector<double>& m_l_grid, const SeriesControl& ctrl, Format format);
CommandResult cmd_limits(double length, double beta, const SeriesControl& ctrl, Format format);

/// Full command-line entry point. Writes command output to `out` (or to the
/// --out file) and diagnostics to `err`; returns the process exit status.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

// Serialization (report_format.cpp).

/// Decimal form with 17 significant digits, independent of the locale.
std::string format_double(double v);

std::string format_pressure_rows(const std::vector<PressureRow>& rows, Format format,
                                 std::string_view command, const nlohmann::json& inputs);
std::string format_figure1(const std::vector<Figure1Row>& rows, Format format,
                           const nlohmann::json& inputs);
std::string format_limits(const LimitsReport& report, const std::optional<ErrorInfo>& error,
                          Format format, const nlohmann::json& inputs);

}  // namespace casimir::cli
