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

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <stdexcept>
#include <string>

#include "casimir/series.hpp"
#include "json.hpp"

namespace fixtures {

inline const nlohmann::json& all() {
  static const nlohmann::json doc = [] {
    std::ifstream in(CASIMIR_FIXTURE_FILE);
    if (!in) throw std::runtime_error("cannot open " CASIMIR_FIXTURE_FILE);
    return nlohmann::json::parse(in);
  }();
  return doc.at("values");
}

struct Ref {
  double value;
  double uncertainty;
};

inline Ref ref(const std::string& name) {
  const auto& e = all().at(name);
  return {e.at("value").get<double>(), e.at("uncertainty").get<double>()};
}

/// Allowed deviation from a reference: its uncertainty, a relative
/// tolerance and a few ulps of the reference itself.
inline double allowance(const Ref& r, double rel) {
  return r.uncertainty + rel * std::fabs(r.value) + 8 * std::numeric_limits<double>::epsilon() * std::fabs(r.value);
}

/// Series control fine enough that production truncation error sits well
/// inside the reference's own uncertainty.
inline casimir::SeriesControl control_finer_than(const Ref& r) {
  casimir::SeriesControl ctrl;
  ctrl.abs_tol = std::clamp(r.uncertainty / 4, 1e-300, ctrl.abs_tol);
  ctrl.rel_tol = std::clamp(r.uncertainty / (4 * std::fabs(r.value)), 1e-15, ctrl.rel_tol);
  ctrl.max_terms = 1'000'000;
  return ctrl;
}

/// Error bars of a production result and a reference overlap.
inline bool consistent(const casimir::SeriesResult& got, const Ref& r) {
  return std::fabs(got.value - r.value) <= got.tail_bound + allowance(r, 0);
}

}  // namespace fixtures
