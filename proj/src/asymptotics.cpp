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

#include "casimir/asymptotics.hpp"

#include <cmath>
#include <string>

#include "casimir/detail/lattice.hpp"
#include "casimir/error.hpp"
#include "casimir/pressure.hpp"
#include "casimir/specfun.hpp"

namespace casimir {

namespace {

void check_xi(double xi) {
  if (!(xi > 0.0) || !std::isfinite(xi)) fail(ErrorKind::domain, "xi must be positive and finite");
}

void check_lengths(double length, double beta) {
  if (!(length > 0.0) || !std::isfinite(length) || !(beta > 0.0) || !std::isfinite(beta)) {
    fail(ErrorKind::domain, "L and beta must be positive and finite");
  }
}

double zeta3() { return specfun::riemann_zeta(3.0); }

}  // namespace

double f_double_sum(double xi, const SeriesControl& ctrl) {
  check_xi(xi);
  ctrl.validate();
  const double pref = -2.0 * std::pow(xi, 4) / (M_PI * M_PI);
  auto term = [&](std::int64_t n1, std::int64_t n2) {
    const double x = xi * static_cast<double>(n1);
    const double y = static_cast<double>(n2);
    const double r2 = x * x + y * y;
    return pref / (r2 * r2);
  };
  const detail::BoxShape shape = detail::box_shape_for_ratio(1.0 / xi);
  return detail::extrapolated_sum_2d(term, 1, shape, 2.0, ctrl, "f_double_sum").value;
}

double f_resummed(double xi, const SeriesControl& ctrl) {
  check_xi(xi);
  ctrl.validate();
  const double xi2 = xi * xi;
  const double xi3 = xi2 * xi;
  const double head = xi3 * xi * specfun::riemann_zeta(4.0) / (M_PI * M_PI) - xi3 * zeta3() / (2.0 * M_PI);

  // With e = exp(-2 pi n / xi): coth - 1 = 2e / (1 - e), sinh^-2 = 4e / (1 - e)^2.
  // Both remainders decrease in n at least by the factor rho per step.
  const double rho = std::exp(-2.0 * M_PI / xi);
  auto remainder = [&](std::int64_t n) {
    const double x = static_cast<double>(n);
    const double e = std::exp(-2.0 * M_PI * x / xi);
    const double one_minus_e = -std::expm1(-2.0 * M_PI * x / xi);
    const double coth_minus_one = 2.0 * e / one_minus_e;
    const double inv_sinh2 = 4.0 * e / (one_minus_e * one_minus_e);
    return xi3 / (2.0 * M_PI) * coth_minus_one / (x * x * x) + xi2 / 2.0 * inv_sinh2 / (x * x);
  };
  CompensatedSum sum;
  sum.add(head);
  for (std::int64_t n = 1;; ++n) {
    if (n > ctrl.max_terms) {
      fail(ErrorKind::budget, "f_resummed did not reach tolerance within " + std::to_string(ctrl.max_terms) +
                                  " terms");
    }
    const double g = remainder(n);
    sum.add(-g);
    const double tail = rho < 1.0 ? g * rho / (1.0 - rho) : HUGE_VAL;
    if ((n >= 3 && tail <= ctrl.tolerance_for(sum.value())) || g == 0.0) return sum.value();
  }
}

double f_function(double xi, const SeriesControl& ctrl) {
  check_xi(xi);
  if (xi <= 1.0) return f_resummed(xi, ctrl);
  return std::pow(xi, 4) * f_resummed(1.0 / xi, ctrl);
}

double s_function(double xi, const SeriesControl& ctrl) {
  check_xi(xi);
  ctrl.validate();
  const double pref = 8.0 * xi * xi * xi / (M_PI * M_PI);
  auto term = [&](std::int64_t n1, std::int64_t n2) {
    const double x = xi * static_cast<double>(n1);
    const double y = static_cast<double>(n2);
    const double r2 = x * x + y * y;
    return pref * y * y / (r2 * r2 * r2);
  };
  const detail::BoxShape shape = detail::box_shape_for_ratio(1.0 / xi);
  return detail::extrapolated_sum_2d(term, 1, shape, 2.0, ctrl, "s_function").value;
}

double f_small_xi(double xi) {
  check_xi(xi);
  return M_PI * M_PI * std::pow(xi, 4) / 90.0 - zeta3() * xi * xi * xi / (2.0 * M_PI) -
         2.0 * xi * xi * (1.0 + xi / (2.0 * M_PI)) * std::exp(-2.0 * M_PI / xi);
}

double f_large_xi(double xi) {
  check_xi(xi);
  return M_PI * M_PI / 90.0 - zeta3() * xi / (2.0 * M_PI) -
         2.0 * xi * xi * (1.0 + 1.0 / (2.0 * M_PI * xi)) * std::exp(-2.0 * M_PI * xi);
}

double mixed_low_temperature(double length, double beta) {
  check_lengths(length, beta);
  return -M_PI * M_PI / (90.0 * std::pow(beta, 4)) +
         4.0 * M_PI / (beta * std::pow(length, 3)) * std::exp(-2.0 * M_PI * beta / length);
}

double total_low_temperature(double length, double beta) {
  check_lengths(length, beta);
  return -M_PI * M_PI / (30.0 * std::pow(length, 4)) +
         4.0 * M_PI / (beta * std::pow(length, 3)) * std::exp(-2.0 * M_PI * beta / length);
}

namespace {

double high_temperature_correction(double length, double beta) {
  const double r = length / beta;
  return -(4.0 * M_PI * r * r + 4.0 * r + 2.0 / M_PI) * std::exp(-2.0 * M_PI * r) /
         (beta * std::pow(length, 3));
}

}  // namespace

double mixed_high_temperature(double length, double beta) {
  check_lengths(length, beta);
  return M_PI * M_PI / (30.0 * std::pow(length, 4)) - zeta3() / (M_PI * beta * std::pow(length, 3)) +
         high_temperature_correction(length, beta);
}

double total_high_temperature(double length, double beta) {
  check_lengths(length, beta);
  return M_PI * M_PI / (90.0 * std::pow(beta, 4)) - zeta3() / (M_PI * beta * std::pow(length, 3)) +
         high_temperature_correction(length, beta);
}

std::string_view to_string(Regime regime) noexcept {
  switch (regime) {
    case Regime::low_temperature: return "low_temperature";
    case Regime::intermediate: return "intermediate";
    case Regime::high_temperature: return "high_temperature";
  }
  return "unknown";
}

Regime classify_regime(double xi) {
  check_xi(xi);
  if (xi <= 1.0 / 3.0) return Regime::low_temperature;
  if (xi >= 3.0) return Regime::high_temperature;
  return Regime::intermediate;
}

LimitsReport limits_report(double length, double beta, const SeriesControl& ctrl) {
  check_lengths(length, beta);
  LimitsReport out;
  out.length = length;
  out.beta = beta;
  out.xi = length / beta;
  out.regime = classify_regime(out.xi);
  CavityConfig cfg;
  cfg.dimension = 4;
  cfg.mass = 0.0;
  cfg.length = length;
  cfg.beta = beta;
  out.exact = total_pressure(cfg, ctrl).total;
  out.low_temperature = total_low_temperature(length, beta);
  out.high_temperature = total_high_temperature(length, beta);
  out.low_discrepancy = std::fabs(out.exact - out.low_temperature);
  out.high_discrepancy = std::fabs(out.exact - out.high_temperature);
  return out;
}

}  // namespace casimir
