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

#include <charconv>
#include <cmath>
#include <string>
#include <vector>

#include "casimir/cli.hpp"

namespace casimir::cli {

using nlohmann::json;

namespace {

std::string csv_quote(std::string_view field) {
  if (field.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::string error_text(const std::optional<ErrorInfo>& error) {
  if (!error) return "";
  return std::string(to_string(error->kind)) + ": " + error->message;
}

json error_json(const std::optional<ErrorInfo>& error) {
  if (!error) return nullptr;
  return {{"kind", std::string(to_string(error->kind))}, {"message", error->message}};
}

json beta_json(const CavityConfig& cfg) {
  if (!cfg.beta) return "infinite";
  return *cfg.beta;
}

std::string beta_csv(const CavityConfig& cfg) {
  return cfg.beta ? format_double(*cfg.beta) : std::string("infinite");
}

std::string_view field_name(Field field) {
  return field == Field::scalar ? "scalar" : "electromagnetic";
}

json term_json(const PressureTerm& t) {
  return {{"value", t.value},
          {"tail_bound", t.tail_bound},
          {"terms_used", t.terms_used},
          {"method", std::string(to_string(t.method))},
          {"underflowed", t.underflowed}};
}

json document(std::string_view command, const json& inputs, json rows) {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = std::string(command);
  doc["inputs"] = inputs;
  doc["rows"] = std::move(rows);
  return doc;
}

std::string join(const std::vector<std::string>& fields) {
  std::string line;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) line += ',';
    line += fields[i];
  }
  line += '\n';
  return line;
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

std::string format_pressure_rows(const std::vector<PressureRow>& rows, Format format,
                                 std::string_view command, const json& inputs) {
  if (format == Format::json) {
    json out = json::array();
    for (const PressureRow& row : rows) {
      json r;
      r["D"] = row.cfg.dimension;
      r["m"] = row.cfg.mass;
      r["L"] = row.cfg.length;
      r["beta"] = beta_json(row.cfg);
      r["boundary"] = row.dirichlet ? "dirichlet" : "periodic";
      r["field"] = std::string(field_name(row.field));
      if (row.report) {
        r["vacuum"] = term_json(row.report->vacuum);
        r["thermal"] = term_json(row.report->thermal);
        r["mixed"] = term_json(row.report->mixed);
        r["total"] = row.report->total;
      } else {
        r["vacuum"] = r["thermal"] = r["mixed"] = r["total"] = nullptr;
      }
      r["normalized_vacuum"] = row.normalized_vacuum ? json(*row.normalized_vacuum) : json(nullptr);
      r["error"] = error_json(row.error);
      out.push_back(std::move(r));
    }
    return document(command, inputs, std::move(out)).dump(2) + "\n";
  }

  std::string text = join({"schema_version", "D", "m", "L", "beta", "boundary", "field", "vacuum",
                           "thermal", "mixed", "total", "normalized_vacuum", "vacuum_tail_bound",
                           "thermal_tail_bound", "mixed_tail_bound", "vacuum_terms", "thermal_terms",
                           "mixed_terms", "vacuum_method", "thermal_method", "mixed_method",
                           "underflowed", "error"});
  for (const PressureRow& row : rows) {
    std::vector<std::string> f{std::to_string(kSchemaVersion), std::to_string(row.cfg.dimension),
                               format_double(row.cfg.mass), format_double(row.cfg.length),
                               beta_csv(row.cfg), row.dirichlet ? "dirichlet" : "periodic",
                               std::string(field_name(row.field))};
    if (row.report) {
      const PressureReport& p = *row.report;
      f.insert(f.end(), {format_double(p.vacuum.value), format_double(p.thermal.value),
                         format_double(p.mixed.value), format_double(p.total)});
    } else {
      f.insert(f.end(), 4, "");
    }
    f.push_back(row.normalized_vacuum ? format_double(*row.normalized_vacuum) : "");
    if (row.report) {
      const PressureReport& p = *row.report;
      f.insert(f.end(), {format_double(p.vacuum.tail_bound), format_double(p.thermal.tail_bound),
                         format_double(p.mixed.tail_bound), std::to_string(p.vacuum.terms_used),
                         std::to_string(p.thermal.terms_used), std::to_string(p.mixed.terms_used),
                         std::string(to_string(p.vacuum.method)), std::string(to_string(p.thermal.method)),
                         std::string(to_string(p.mixed.method)),
                         p.vacuum.underflowed || p.thermal.underflowed || p.mixed.underflowed ? "true"
                                                                                               : "false"});
    } else {
      f.insert(f.end(), 10, "");
    }
    f.push_back(csv_quote(error_text(row.error)));
    text += join(f);
  }
  return text;
}

std::string format_figure1(const std::vector<Figure1Row>& rows, Format format, const json& inputs) {
  if (format == Format::json) {
    json out = json::array();
    for (const Figure1Row& row : rows) {
      out.push_back({{"mL", row.m_l},
                     {"normalized_pressure",
                      row.normalized_pressure ? json(*row.normalized_pressure) : json(nullptr)},
                     {"error", error_json(row.error)}});
    }
    return document("figure1", inputs, std::move(out)).dump(2) + "\n";
  }
  std::string text = join({"schema_version", "mL", "normalized_pressure", "error"});
  for (const Figure1Row& row : rows) {
    text += join({std::to_string(kSchemaVersion), format_double(row.m_l),
                  row.normalized_pressure ? format_double(*row.normalized_pressure) : "",
                  csv_quote(error_text(row.error))});
  }
  return text;
}

std::string format_limits(const LimitsReport& report, const std::optional<ErrorInfo>& error,
                          Format format, const json& inputs) {
  const bool ok = !error;
  if (format == Format::json) {
    json row;
    row["L"] = report.length;
    row["beta"] = report.beta;
    row["xi"] = report.xi;
    row["regime"] = ok ? json(std::string(to_string(report.regime))) : json(nullptr);
    for (const auto& [key, value] :
         {std::pair{"exact", report.exact}, {"low_temperature", report.low_temperature},
          {"high_temperature", report.high_temperature}, {"low_discrepancy", report.low_discrepancy},
          {"high_discrepancy", report.high_discrepancy}}) {
      row[key] = ok ? json(value) : json(nullptr);
    }
    row["error"] = error_json(error);
    return document("limits", inputs, json::array({row})).dump(2) + "\n";
  }
  std::string text = join({"schema_version", "L", "beta", "xi", "regime", "exact", "low_temperature",
                           "high_temperature", "low_discrepancy", "high_discrepancy", "error"});
  std::vector<std::string> f{std::to_string(kSchemaVersion), format_double(report.length),
                             format_double(report.beta), format_double(report.xi)};
  if (ok) {
    f.insert(f.end(), {std::string(to_string(report.regime)), format_double(report.exact),
                       format_double(report.low_temperature), format_double(report.high_temperature),
                       format_double(report.low_discrepancy), format_double(report.high_discrepancy)});
  } else {
    f.insert(f.end(), 6, "");
  }
  f.push_back(csv_quote(error_text(error)));
  text += join(f);
  return text;
}

}  // namespace casimir::cli
