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

#include "casimir/epstein.hpp"

#include <array>
#include <cmath>
#include <string>

#include "casimir/detail/lattice.hpp"
#include "casimir/error.hpp"
#include "casimir/specfun.hpp"

namespace casimir {

void ZetaArgs::validate() const {
  if (coefficients.empty()) fail(ErrorKind::domain, "Epstein zeta needs at least one coefficient");
  for (double a : coefficients) {
    if (!(a > 0.0) || !std::isfinite(a)) {
      fail(ErrorKind::domain, "Epstein zeta coefficients must be positive and finite");
    }
  }
  if (!std::isfinite(nu)) fail(ErrorKind::domain, "Epstein zeta exponent must be finite");
  if (!(c_squared > 0.0) || !std::isfinite(c_squared)) {
    fail(ErrorKind::domain, "Epstein zeta requires c^2 > 0");
  }
}

namespace {

void check_dimension(const ZetaArgs& args) {
  if (args.dimension() > 2) {
    fail(ErrorKind::unsupported_dimension,
         "Epstein zeta implemented for d = 1, 2 only (got d = " + std::to_string(args.dimension()) + ")");
  }
}

// One-sided weight for folding a symmetric sum over Z onto n >= 0.
double fold(std::int64_t n) { return n == 0 ? 1.0 : 2.0; }

}  // namespace

ZetaResult zeta_direct(const ZetaArgs& args, const SeriesControl& ctrl) {
  args.validate();
  ctrl.validate();
  check_dimension(args);
  const double d = static_cast<double>(args.dimension());
  if (!(args.nu > d / 2.0)) {
    fail(ErrorKind::non_convergence, "defining lattice sum diverges for nu <= d/2");
  }
  const double nu = args.nu;
  const double c2 = args.c_squared;
  const double leading = 2.0 * nu - d;

  if (args.dimension() == 1) {
    const double a = args.coefficients[0];
    auto term = [&](std::int64_t n) {
      const double x = static_cast<double>(n);
      return fold(n) * std::pow(a * x * x + c2, -nu);
    };
    return detail::extrapolated_sum_1d(term, 0, 1, leading, ctrl, "zeta_direct");
  }

  const double a1 = args.coefficients[0];
  const double a2 = args.coefficients[1];
  auto term = [&](std::int64_t n1, std::int64_t n2) {
    const double x = static_cast<double>(n1);
    const double y = static_cast<double>(n2);
    return fold(n1) * fold(n2) * std::pow(a1 * x * x + a2 * y * y + c2, -nu);
  };
  const detail::BoxShape shape = detail::box_shape_for_ratio(std::sqrt(a2 / a1));
  return detail::extrapolated_sum_2d(term, 0, shape, leading, ctrl, "zeta_direct");
}

ZetaResult zeta_continued(const ZetaArgs& args, const SeriesControl& ctrl) {
  args.validate();
  ctrl.validate();
  check_dimension(args);
  const double d = static_cast<double>(args.dimension());
  const double nu = args.nu;
  const double shifted = nu - d / 2.0;
  if (specfun::is_nonpositive_integer(shifted)) {
    fail(ErrorKind::pole, "continuation has a Gamma pole at nu - d/2 = " + std::to_string(shifted));
  }
  const double c = std::sqrt(args.c_squared);
  const double order = std::fabs(shifted);

  // Single-index series 2 sum_n (pi n / (c sqrt a))^{nu-d/2} K_{nu-d/2}(2 pi c n / sqrt a).
  auto single = [&](double a) {
    const double s = std::sqrt(a);
    const std::array<BesselComponent, 1> comp{{{2.0 * std::pow(M_PI / (c * s), shifted), shifted, order}}};
    return sum_bessel_series(comp, 2.0 * M_PI * c / s, ctrl);
  };

  ZetaResult out;
  double bracket = specfun::gamma(shifted) / (2.0 * std::pow(c, 2.0 * shifted));
  double norm = 0.0;
  CompensatedSum parts;
  parts.add(bracket);
  for (double a : args.coefficients) {
    const SeriesResult r = single(a);
    parts.add(r.value);
    out.terms_used += r.terms_used;
    out.tail_bound += r.tail_bound;
    out.underflowed = out.underflowed || r.underflowed;
  }
  if (args.dimension() == 1) {
    norm = 2.0 * std::sqrt(M_PI) / std::sqrt(args.coefficients[0]);
  } else {
    const double a1 = args.coefficients[0];
    const double a2 = args.coefficients[1];
    norm = 2.0 * M_PI / std::sqrt(a1 * a2);

    // 4 sum_{n1,n2>=1} (pi rho / c)^{nu-1} K_{nu-1}(2 pi c rho),
    // rho^2 = n1^2/a1 + n2^2/a2; every point on shell max(n1,n2) = k has
    // rho >= k * min(a1, a2)^{-1/2}.
    const BesselComponent comp{4.0 * std::pow(M_PI / c, shifted), shifted, order};
    const double rate = 2.0 * M_PI * c;
    const double spacing = 1.0 / std::sqrt(std::max(a1, a2));
    bool underflowed = false;
    auto term = [&](std::int64_t n1, std::int64_t n2) {
      const double x = static_cast<double>(n1);
      const double y = static_cast<double>(n2);
      const double rho = std::sqrt(x * x / a1 + y * y / a2);
      const specfun::BesselValue k = specfun::bessel_k_eval(order, rate * rho);
      if (k.overflowed) fail(ErrorKind::overflow, "Bessel function overflow in zeta_continued");
      if (k.underflowed) {
        underflowed = true;
        return 0.0;
      }
      return comp.coef * std::pow(rho, shifted) * k.value;
    };
    auto tail = [&](std::int64_t k) { return bessel_tail_bound(comp, rate, spacing, k, true); };
    const SeriesResult r = detail::shell_sum_2d(term, tail, ctrl, "zeta_continued");
    parts.add(r.value);
    out.terms_used += r.terms_used;
    out.tail_bound += r.tail_bound;
    out.underflowed = out.underflowed || underflowed;
  }
  const double scale = norm * specfun::reciprocal_gamma(nu);
  out.value = scale * parts.value();
  out.tail_bound *= std::fabs(scale);
  return out;
}

}  // namespace casimir
