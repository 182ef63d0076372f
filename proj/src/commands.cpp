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

#include <algorithm>
#include <atomic>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "casimir/cli.hpp"

namespace casimir::cli {

using nlohmann::json;

int exit_code_for(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::budget:
    case ErrorKind::overflow:
    case ErrorKind::non_convergence:
      return kExitNumerical;
    default:
      return kExitInput;
  }
}

namespace {

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::tolower(c); });
  return out;
}

double parse_number(std::string_view token, const char* what) {
  double v = 0.0;
  const char* end = token.data() + token.size();
  const auto res = std::from_chars(token.data(), end, v);
  if (res.ec != std::errc() || res.ptr != end) {
    fail(ErrorKind::invalid_config, std::string("cannot parse ") + what + " value '" + std::string(token) + "'");
  }
  return v;
}

json beta_grid_json(const std::vector<std::optional<double>>& betas) {
  json out = json::array();
  for (const auto& b : betas) out.push_back(b ? json(*b) : json("infinite"));
  return out;
}

json control_json(const SeriesControl& ctrl) {
  return {{"abs_tol", ctrl.abs_tol}, {"rel_tol", ctrl.rel_tol}, {"max_terms", ctrl.max_terms}};
}

PressureRow evaluate_row(const CavityConfig& cfg, bool dirichlet, Field field, double plate_separation,
                         const SeriesControl& ctrl) {
  PressureRow row;
  row.cfg = cfg;
  row.dirichlet = dirichlet;
  row.field = field;
  try {
    if (dirichlet) {
      row.cfg.length = 2.0 * plate_separation;
      row.report = dirichlet_pressure(plate_separation, cfg, field, ctrl);
    } else {
      row.report = total_pressure(cfg, ctrl);
    }
    row.normalized_vacuum = normalized_vacuum_pressure(row.cfg, ctrl);
  } catch (const Error& e) {
    row.report.reset();
    row.normalized_vacuum.reset();
    row.error = ErrorInfo{e.kind(), e.what()};
  }
  return row;
}

int rows_exit_code(const std::vector<PressureRow>& rows) {
  int code = kExitOk;
  for (const PressureRow& row : rows) {
    if (row.error) code = std::max(code, exit_code_for(row.error->kind));
  }
  return code;
}

template <class T>
std::vector<T> as_list(const json& value, const char* key) {
  std::vector<T> out;
  const json items = value.is_array() ? value : json::array({value});
  for (const json& item : items) {
    if (!item.is_number()) fail(ErrorKind::invalid_config, std::string("sweep spec '") + key + "' must hold numbers");
    if constexpr (std::is_integral_v<T>) {
      if (!item.is_number_integer()) {
        fail(ErrorKind::invalid_config, std::string("sweep spec '") + key + "' must hold integers");
      }
    }
    out.push_back(item.get<T>());
  }
  return out;
}

Format parse_format(std::string_view text) {
  if (text == "csv") return Format::csv;
  if (text == "json") return Format::json;
  fail(ErrorKind::invalid_config, "format must be csv or json");
}

}  // namespace

std::optional<double> parse_beta(std::string_view token) {
  const std::string t = lower(token);
  if (t == "inf" || t == "infinite" || t == "infinity") return std::nullopt;
  const double v = parse_number(token, "beta");
  if (!(v > 0.0) || !std::isfinite(v)) {
    fail(ErrorKind::invalid_config, "beta must be positive and finite, or 'infinite'");
  }
  return v;
}

std::size_t SweepSpec::size() const {
  return dimensions.size() * masses.size() * lengths.size() * betas.size();
}

void SweepSpec::validate() const {
  if (dimensions.empty() || masses.empty() || lengths.empty() || betas.empty()) {
    fail(ErrorKind::invalid_config, "every sweep grid (D, m, L, beta) must be non-empty");
  }
  // Overflow-safe size check against the cap.
  std::size_t n = 1;
  for (std::size_t k : {dimensions.size(), masses.size(), lengths.size(), betas.size()}) {
    if (n > row_cap / k) fail(ErrorKind::invalid_config, "sweep grid exceeds the row cap of " + std::to_string(row_cap));
    n *= k;
  }
  for (int d : dimensions) {
    if (d < 2) fail(ErrorKind::invalid_config, "dimension D must be at least 2");
  }
  for (double m : masses) {
    if (!(m >= 0.0) || !std::isfinite(m)) fail(ErrorKind::invalid_config, "masses must be finite and nonnegative");
  }
  for (double l : lengths) {
    if (!(l > 0.0) || !std::isfinite(l)) fail(ErrorKind::invalid_config, "lengths must be positive and finite");
  }
  for (const auto& b : betas) {
    if (b && (!(*b > 0.0) || !std::isfinite(*b))) {
      fail(ErrorKind::invalid_config, "beta values must be positive and finite, or 'infinite'");
    }
  }
}

SweepSpec parse_sweep_spec(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    fail(ErrorKind::invalid_config, std::string("sweep spec is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) fail(ErrorKind::invalid_config, "sweep spec must be a JSON object");
  SweepSpec spec;
  for (const auto& [key, value] : doc.items()) {
    if (key == "dimension") {
      spec.dimensions = as_list<int>(value, "dimension");
    } else if (key == "mass") {
      spec.masses = as_list<double>(value, "mass");
    } else if (key == "length") {
      spec.lengths = as_list<double>(value, "length");
    } else if (key == "beta") {
      spec.betas.clear();
      const json items = value.is_array() ? value : json::array({value});
      for (const json& item : items) {
        if (item.is_string()) {
          spec.betas.push_back(parse_beta(item.get<std::string>()));
        } else if (item.is_number()) {
          spec.betas.push_back(item.get<double>());
        } else {
          fail(ErrorKind::invalid_config, "sweep spec 'beta' entries must be numbers or \"infinite\"");
        }
      }
    } else if (key == "format") {
      if (!value.is_string()) fail(ErrorKind::invalid_config, "sweep spec 'format' must be a string");
      spec.format = parse_format(value.get<std::string>());
    } else if (key == "output") {
      if (!value.is_string()) fail(ErrorKind::invalid_config, "sweep spec 'output' must be a string");
      spec.output_path = value.get<std::string>();
    } else if (key == "max_rows") {
      if (!value.is_number_unsigned()) fail(ErrorKind::invalid_config, "sweep spec 'max_rows' must be a positive integer");
      spec.row_cap = value.get<std::size_t>();
    } else {
      fail(ErrorKind::invalid_config, "unknown sweep spec key '" + key + "'");
    }
  }
  return spec;
}

CommandResult cmd_eval(const EvalRequest& request, const SeriesControl& ctrl, Format format) {
  const double a = request.plate_separation.value_or(request.cfg.length / 2.0);
  json inputs = control_json(ctrl);
  inputs["D"] = request.cfg.dimension;
  inputs["m"] = request.cfg.mass;
  inputs["L"] = request.cfg.length;
  inputs["beta"] = request.cfg.beta ? json(*request.cfg.beta) : json("infinite");
  inputs["dirichlet"] = request.dirichlet;
  inputs["a"] = request.dirichlet ? json(a) : json(nullptr);
  inputs["field"] = request.field == Field::scalar ? "scalar" : "electromagnetic";

  std::vector<PressureRow> rows;
  try {
    ctrl.validate();
    rows.push_back(evaluate_row(request.cfg, request.dirichlet, request.field, a, ctrl));
  } catch (const Error& e) {
    PressureRow row;
    row.cfg = request.cfg;
    row.dirichlet = request.dirichlet;
    row.field = request.field;
    row.error = ErrorInfo{e.kind(), e.what()};
    rows.push_back(row);
  }
  return {format_pressure_rows(rows, format, "eval", inputs), rows_exit_code(rows)};
}

CommandResult cmd_sweep(const SweepSpec& spec, const SeriesControl& ctrl) {
  spec.validate();
  ctrl.validate();
  std::vector<CavityConfig> configs;
  configs.reserve(spec.size());
  for (int d : spec.dimensions) {
    for (double m : spec.masses) {
      for (double l : spec.lengths) {
        for (const auto& b : spec.betas) configs.push_back({d, m, l, b});
      }
    }
  }

  std::vector<PressureRow> rows(configs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < configs.size(); i = next++) {
      rows[i] = evaluate_row(configs[i], false, Field::scalar, 0.0, ctrl);
    }
  };
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t wanted = spec.threads ? spec.threads : hw;
  const std::size_t n_threads = std::max<std::size_t>(1, std::min(wanted, configs.size()));
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 1; t < n_threads; ++t) pool.emplace_back(worker);
    worker();
  }

  json inputs = control_json(ctrl);
  inputs["dimension"] = spec.dimensions;
  inputs["mass"] = spec.masses;
  inputs["length"] = spec.lengths;
  inputs["beta"] = beta_grid_json(spec.betas);
  return {format_pressure_rows(rows, spec.format, "sweep", inputs), rows_exit_code(rows)};
}

CommandResult cmd_figure1(const std::vector<double>& m_l_grid, const SeriesControl& ctrl, Format format) {
  if (m_l_grid.empty()) fail(ErrorKind::invalid_config, "figure1 needs at least one mL value");
  for (double x : m_l_grid) {
    if (!(x > 0.0) || !std::isfinite(x)) fail(ErrorKind::invalid_config, "mL values must be positive and finite");
  }
  ctrl.validate();
  std::vector<Figure1Row> rows;
  int code = kExitOk;
  for (double x : m_l_grid) {
    Figure1Row row;
    row.m_l = x;
    try {
      row.normalized_pressure = normalized_vacuum_pressure({4, x, 1.0, std::nullopt}, ctrl);
    } catch (const Error& e) {
      row.error = ErrorInfo{e.kind(), e.what()};
      code = std::max(code, exit_code_for(e.kind()));
    }
    rows.push_back(row);
  }
  json inputs = control_json(ctrl);
  inputs["D"] = 4;
  inputs["L"] = 1.0;
  inputs["mL"] = m_l_grid;
  return {format_figure1(rows, format, inputs), code};
}

CommandResult cmd_limits(double length, double beta, const SeriesControl& ctrl, Format format) {
  json inputs = control_json(ctrl);
  inputs["L"] = length;
  inputs["beta"] = beta;
  LimitsReport report;
  report.length = length;
  report.beta = beta;
  report.xi = length / beta;
  std::optional<ErrorInfo> error;
  try {
    ctrl.validate();
    report = limits_report(length, beta, ctrl);
  } catch (const Error& e) {
    error = ErrorInfo{e.kind(), e.what()};
  }
  return {format_limits(report, error, format, inputs), error ? exit_code_for(error->kind) : kExitOk};
}

namespace {

struct CommonOptions {
  std::string format = "csv";
  std::string out;
  double abs_tol = SeriesControl{}.abs_tol;
  double rel_tol = SeriesControl{}.rel_tol;
  std::int64_t max_terms = SeriesControl{}.max_terms;

  SeriesControl control() const { return {abs_tol, rel_tol, max_terms}; }
};

void add_common(CLI::App* sub, CommonOptions& c) {
  sub->add_option("--format", c.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--out", c.out, "Write output to this file instead of stdout");
  sub->add_option("--abs-tol", c.abs_tol, "Absolute truncation tolerance");
  sub->add_option("--rel-tol", c.rel_tol, "Relative truncation tolerance");
  sub->add_option("--max-terms", c.max_terms, "Term budget per series (per axis for double sums)");
}

bool emit(const CommandResult& result, const std::string& path, std::ostream& out, std::ostream& err) {
  if (path.empty()) {
    out << result.output;
    return true;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "casimir: cannot open output file '" << path << "'\n";
    return false;
  }
  file << result.output;
  file.close();
  if (!file) {
    err << "casimir: failed writing output file '" << path << "'\n";
    return false;
  }
  return true;
}

void report_failure(const CommandResult& result, std::ostream& err) {
  if (result.exit_code != kExitOk) err << "casimir: evaluation failed (see error field in output)\n";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Casimir pressure of a scalar field with a compact dimension at finite temperature", "casimir"};
  app.require_subcommand(1);

  CommonOptions eval_common, sweep_common, fig_common, lim_common;

  int eval_d = 4;
  double eval_m = 0.0;
  std::optional<double> eval_l;
  std::string eval_beta;
  bool eval_dirichlet = false;
  std::optional<double> eval_a;
  std::string eval_field = "scalar";
  CLI::App* eval = app.add_subcommand("eval", "Evaluate the pressure decomposition at one point");
  eval->add_option("--D", eval_d, "Total Euclidean dimension");
  eval->add_option("--m", eval_m, "Field mass");
  eval->add_option("--L", eval_l, "Compact length L");
  eval->add_option("--beta", eval_beta, "Inverse temperature, or 'infinite'");
  eval->add_flag("--dirichlet", eval_dirichlet, "Parallel Dirichlet plates at separation a = L/2");
  eval->add_option("--a", eval_a, "Plate separation (implies --dirichlet)");
  eval->add_option("--field", eval_field, "Field for Dirichlet plates")
      ->check(CLI::IsMember({"scalar", "electromagnetic"}));
  add_common(eval, eval_common);

  std::vector<int> sweep_d;
  std::vector<double> sweep_m, sweep_l;
  std::vector<std::string> sweep_beta;
  std::string sweep_spec_path;
  unsigned sweep_threads = 0;
  std::size_t sweep_max_rows = SweepSpec{}.row_cap;
  CLI::App* sweep = app.add_subcommand("sweep", "Evaluate a (D, m, L, beta) grid");
  sweep->add_option("--D", sweep_d, "Dimension grid")->delimiter(',');
  sweep->add_option("--m", sweep_m, "Mass grid")->delimiter(',');
  sweep->add_option("--L", sweep_l, "Length grid")->delimiter(',');
  sweep->add_option("--beta", sweep_beta, "Inverse-temperature grid; 'infinite' for zero temperature")
      ->delimiter(',');
  sweep->add_option("--spec", sweep_spec_path, "JSON grid description");
  sweep->add_option("--threads", sweep_threads, "Worker threads (0 = all cores)");
  sweep->add_option("--max-rows", sweep_max_rows, "Refuse grids with more rows than this");
  add_common(sweep, sweep_common);

  std::vector<double> fig_grid{0.01, 0.5, 1.0, 2.0, 4.0, 8.0};
  CLI::App* fig = app.add_subcommand("figure1", "Normalized vacuum pressure versus mL at D = 4");
  fig->add_option("--mL", fig_grid, "mL grid")->delimiter(',');
  add_common(fig, fig_common);

  double lim_l = 0.0, lim_beta = 0.0;
  CLI::App* lim = app.add_subcommand("limits", "Exact massless D = 4 pressure against its expansions");
  lim->add_option("--L", lim_l, "Compact length L")->required();
  lim->add_option("--beta", lim_beta, "Inverse temperature")->required();
  add_common(lim, lim_common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    CommandResult result;
    std::string path;
    if (*eval) {
      EvalRequest req;
      req.cfg.dimension = eval_d;
      req.cfg.mass = eval_m;
      if (eval_a) {
        req.dirichlet = true;
        req.plate_separation = *eval_a;
        req.cfg.length = 2.0 * *eval_a;
        if (eval_l && *eval_l != req.cfg.length) fail(ErrorKind::invalid_config, "--L and --a disagree (L = 2a)");
      } else {
        if (!eval_l) fail(ErrorKind::invalid_config, "eval needs --L (or --a for Dirichlet plates)");
        req.cfg.length = *eval_l;
        req.dirichlet = eval_dirichlet;
      }
      if (!eval_beta.empty()) req.cfg.beta = parse_beta(eval_beta);
      req.field = eval_field == "scalar" ? Field::scalar : Field::electromagnetic;
      if (req.field == Field::electromagnetic && !req.dirichlet) {
        fail(ErrorKind::invalid_config, "--field electromagnetic applies to Dirichlet plates only");
      }
      result = cmd_eval(req, eval_common.control(), parse_format(eval_common.format));
      path = eval_common.out;
    } else if (*sweep) {
      SweepSpec spec;
      const bool grid_flags = sweep->count("--D") || sweep->count("--m") || sweep->count("--L") ||
                              sweep->count("--beta");
      if (!sweep_spec_path.empty()) {
        if (grid_flags) fail(ErrorKind::invalid_config, "--spec cannot be combined with grid flags");
        std::ifstream file(sweep_spec_path, std::ios::binary);
        if (!file) fail(ErrorKind::invalid_config, "cannot read sweep spec '" + sweep_spec_path + "'");
        std::stringstream text;
        text << file.rdbuf();
        spec = parse_sweep_spec(text.str());
      } else {
        if (!sweep_d.empty()) spec.dimensions = sweep_d;
        spec.masses = sweep_m;
        spec.lengths = sweep_l;
        if (!sweep_beta.empty()) spec.betas.clear();
        for (const std::string& b : sweep_beta) spec.betas.push_back(parse_beta(b));
      }
      if (sweep->count("--format") || sweep_spec_path.empty()) spec.format = parse_format(sweep_common.format);
      if (!sweep_common.out.empty()) spec.output_path = sweep_common.out;
      if (sweep->count("--max-rows") || sweep_spec_path.empty()) spec.row_cap = sweep_max_rows;
      spec.threads = sweep_threads;
      result = cmd_sweep(spec, sweep_common.control());
      path = spec.output_path.value_or("");
    } else if (*fig) {
      result = cmd_figure1(fig_grid, fig_common.control(), parse_format(fig_common.format));
      path = fig_common.out;
    } else {
      result = cmd_limits(lim_l, lim_beta, lim_common.control(), parse_format(lim_common.format));
      path = lim_common.out;
    }
    if (!emit(result, path, out, err)) return kExitInput;
    report_failure(result, err);
    return result.exit_code;
  } catch (const Error& e) {
    err << "casimir: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
}

}  // namespace casimir::cli
