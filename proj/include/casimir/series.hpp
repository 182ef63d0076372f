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

#include <cmath>
#include <cstdint>
#include <span>

namespace casimir {

/// Truncation policy shared by every infinite sum in the library.
///
/// A series stops once its estimated remaining error is at most
/// max(abs_tol, rel_tol * |partial sum|). For single sums `max_terms` caps the
/// number of terms; for double sums it caps the largest index along an axis.
struct SeriesControl {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  std::int64_t max_terms = 100'000;

  void validate() const;
  double tolerance_for(double magnitude) const;
};

/// Value of a truncated series with its convergence metadata.
struct SeriesResult {
  double value = 0.0;
  std::int64_t terms_used = 0;
  double tail_bound = 0.0;  // estimated absolute truncation error, >= 0
  bool underflowed = false; // some Bessel evaluation underflowed to 0
};

/// Neumaier-compensated running sum.
class CompensatedSum {
 public:
  void add(double x) noexcept {
    const double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

/// One component coef * x^power * K_order(rate * x) of a radial summand.
struct BesselComponent {
  double coef = 0.0;
  double power = 0.0;
  double order = 0.0;  // >= 0
};

/// sum_{n>=1} sum_j coef_j n^{power_j} K_{order_j}(rate n), with a rigorous
/// tail bound built from the monotonicity of sqrt(x) e^x K_nu(x) (nu >= 1/2)
/// and of x^nu K_nu(x).
///
/// Stops after at least three terms once the tail bound meets
/// ctrl.tolerance_for(|sum|). Throws Error(budget) if max_terms is reached.
SeriesResult sum_bessel_series(std::span<const BesselComponent> components, double rate,
                               const SeriesControl& ctrl);

/// Upper bound for sum_{n > last} weight(n) * |c.coef| (n h)^p K_nu(rate n h),
/// where weight(n) = 1 for single sums (shell_points = false) and
/// weight(n) = 2n for square shells of a positive-quadrant double sum whose
/// points on shell n all satisfy radius >= n h (shell_points = true).
double bessel_tail_bound(const BesselComponent& c, double rate, double spacing,
                         std::int64_t last, bool shell_points);

}  // namespace casimir
