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

// Massless D = 4 mixed pressure in terms of xi = L / beta:
//
//   T_mixed(L, beta) = (1 / L^4) [3 f(xi) + xi s(xi)],
//   f(xi) = -(1 / 8 pi^2) sum_{n1,n2>=1} (2 xi)^4 / ((xi n1)^2 + n2^2)^2,
//   s(xi) = -f'(xi),
//
// with f(xi) = xi^4 f(1/xi), and the low/high temperature expansions that
// follow from it. Every xi argument must be positive and finite.

#include <string_view>

#include "casimir/series.hpp"

namespace casimir {

/// Double-sum definition of f, extrapolated on nested boxes.
double f_double_sum(double xi, const SeriesControl& ctrl = {});

/// f after summing over n1 in closed form:
///   xi^4/pi^2 sum n^-4 - xi^3/(2 pi) sum coth(pi n / xi) n^-3
///   - xi^2/2 sum n^-2 sinh^-2(pi n / xi).
/// The two hyperbolic sums are split as zeta(4), zeta(3) plus exponentially
/// convergent remainders, so the cost grows linearly with xi.
double f_resummed(double xi, const SeriesControl& ctrl = {});

/// f_resummed for xi <= 1, xi^4 f_resummed(1/xi) otherwise.
double f_function(double xi, const SeriesControl& ctrl = {});

/// s(xi) = (1/pi^2) sum_{n1,n2>=1} (2 xi)^3 n2^2 / ((xi n1)^2 + n2^2)^3.
double s_function(double xi, const SeriesControl& ctrl = {});

/// f for xi << 1, through order e^{-2 pi / xi}.
double f_small_xi(double xi);

/// f for xi >> 1, through order e^{-2 pi xi}.
double f_large_xi(double xi);

/// Mixed term for L << beta: -pi^2/(90 beta^4) + (4 pi / beta L^3) e^{-2 pi beta / L}.
double mixed_low_temperature(double length, double beta);

/// Total pressure for L << beta: -pi^2/(30 L^4) + (4 pi / beta L^3) e^{-2 pi beta / L}.
double total_low_temperature(double length, double beta);

/// Mixed term for L >> beta:
///   pi^2/(30 L^4) - zeta(3)/(pi beta L^3)
///   - (1/(beta L^3)) (4 pi L^2/beta^2 + 4 L/beta + 2/pi) e^{-2 pi L / beta}.
double mixed_high_temperature(double length, double beta);

/// Total pressure for L >> beta: the mixed expansion with pi^2/(30 L^4)
/// replaced by pi^2/(90 beta^4).
double total_high_temperature(double length, double beta);

enum class Regime { low_temperature, intermediate, high_temperature };

std::string_view to_string(Regime regime) noexcept;

/// xi <= 1/3 is low temperature, xi >= 3 high temperature.
Regime classify_regime(double xi);

struct LimitsReport {
  double length = 0.0;
  double beta = 0.0;
  double xi = 0.0;
  Regime regime = Regime::intermediate;
  double exact = 0.0;             // massless D = 4 total pressure
  double low_temperature = 0.0;   // total_low_temperature
  double high_temperature = 0.0;  // total_high_temperature
  double low_discrepancy = 0.0;   // |exact - low_temperature|
  double high_discrepancy = 0.0;  // |exact - high_temperature|
};

LimitsReport limits_report(double length, double beta, const SeriesControl& ctrl = {});

}  // namespace casimir
