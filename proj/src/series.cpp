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

#include "casimir/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "casimir/error.hpp"
#include "casimir/specfun.hpp"

namespace casimir {

void SeriesControl::validate() const {
  if (!(abs_tol > 0.0) || !std::isfinite(abs_tol)) {
    fail(ErrorKind::domain, "abs_tol must be positive and finite");
  }
  if (!(rel_tol > 0.0) || !std::isfinite(rel_tol)) {
    fail(ErrorKind::domain, "rel_tol must be positive and finite");
  }
  if (max_terms < 10) fail(ErrorKind::domain, "max_terms must be at least 10");
}

double SeriesControl::tolerance_for(double magnitude) const {
  return std::max(abs_tol, rel_tol * std::fabs(magnitude));
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// sum_{j>=1} exp(-j (rate - s/n)): bounds sum_{k>n} k^s e^{-rate k} in units
// of n^s e^{-rate n}, using (1 + 1/k)^s <= e^{s/k} <= e^{s/n} for k >= n.
double geometric_factor(double s, double rate, double n) {
  const double r = s > 0.0 ? rate - s / n : rate;
  if (r <= 0.0) return kInf;
  return 1.0 / std::expm1(r);
}

}  // namespace

double bessel_tail_bound(const BesselComponent& c, double rate, double spacing,
                         std::int64_t last, bool shell_points) {
  if (c.coef == 0.0) return 0.0;
  const double n = static_cast<double>(last);
  const double x = rate * spacing * n;
  const specfun::BesselValue k = specfun::bessel_k_eval(c.order, x);
  if (k.underflowed) return 0.0;
  const double weight = shell_points ? 2.0 * n : 1.0;
  const double at_last = weight * std::fabs(c.coef) * std::pow(spacing * n, c.power) * k.value;
  if (at_last == 0.0) return 0.0;

  // sqrt(x) e^x K_nu(x) is nonincreasing for nu >= 1/2, and K_nu <= K_{1/2}
  // for nu < 1/2; either way the envelope decays like x^{-1/2} e^{-x}.
  double envelope = at_last;
  if (c.order < 0.5) {
    envelope = weight * std::fabs(c.coef) * std::pow(spacing * n, c.power) *
               std::sqrt(M_PI / (2.0 * x)) * std::exp(-x);
  }
  const double s = c.power - 0.5 + (shell_points ? 1.0 : 0.0);
  const double exponential = envelope * geometric_factor(s, rate * spacing, n);

  // x^nu K_nu(x) is nonincreasing, so terms fall at least like n^q.
  const double q = c.power - c.order + (shell_points ? 1.0 : 0.0);
  const double algebraic = q < -1.0 ? at_last * n / (-1.0 - q) : kInf;

  return std::min(exponential, algebraic);
}

SeriesResult sum_bessel_series(std::span<const BesselComponent> components, double rate,
                               const SeriesControl& ctrl) {
  if (!(rate > 0.0)) fail(ErrorKind::domain, "Bessel series rate must be positive");
  CompensatedSum sum;
  SeriesResult out;
  for (std::int64_t n = 1;; ++n) {
    if (n > ctrl.max_terms) {
      fail(ErrorKind::budget, "Bessel series did not reach tolerance within " +
                                  std::to_string(ctrl.max_terms) + " terms");
    }
    const double x = rate * static_cast<double>(n);
    bool all_underflowed = true;
    for (const BesselComponent& c : components) {
      if (c.coef == 0.0) continue;
      const specfun::BesselValue k = specfun::bessel_k_eval(c.order, x);
      if (k.overflowed) fail(ErrorKind::overflow, "Bessel function overflow in series");
      if (k.underflowed) {
        out.underflowed = true;
        continue;
      }
      all_underflowed = false;
      sum.add(c.coef * std::pow(static_cast<double>(n), c.power) * k.value);
    }
    out.terms_used = n;
    if (all_underflowed) {
      out.value = sum.value();
      out.tail_bound = 0.0;
      return out;
    }
    if (n < 3) continue;
    double tail = 0.0;
    for (const BesselComponent& c : components) tail += bessel_tail_bound(c, rate, 1.0, n, false);
    if (tail <= ctrl.tolerance_for(sum.value())) {
      out.value = sum.value();
      out.tail_bound = tail;
      return out;
    }
  }
}

}  // namespace casimir
