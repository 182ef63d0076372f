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

#include "casimir/pressure.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "casimir/detail/lattice.hpp"
#include "casimir/error.hpp"
#include "casimir/specfun.hpp"

namespace casimir {

void CavityConfig::validate() const {
  if (dimension < 2) fail(ErrorKind::invalid_config, "dimension D must be at least 2");
  if (!(mass >= 0.0) || !std::isfinite(mass)) {
    fail(ErrorKind::invalid_config, "mass must be finite and nonnegative");
  }
  if (!(length > 0.0) || !std::isfinite(length)) {
    fail(ErrorKind::invalid_config, "length L must be positive and finite");
  }
  if (beta && (!(*beta > 0.0) || !std::isfinite(*beta))) {
    fail(ErrorKind::invalid_config, "beta must be positive and finite when present");
  }
}

double CavityConfig::c() const { return mass / (2.0 * M_PI); }

double CavityConfig::beta_value() const {
  if (!beta) fail(ErrorKind::invalid_config, "configuration has no inverse temperature beta");
  return *beta;
}

std::string_view to_string(Method method) noexcept {
  switch (method) {
    case Method::absent: return "absent";
    case Method::closed_form: return "closed_form";
    case Method::bessel_series: return "bessel_series";
    case Method::shell_sum: return "shell_sum";
    case Method::matsubara_resummed: return "matsubara_resummed";
    case Method::lattice_extrapolated: return "lattice_extrapolated";
  }
  return "unknown";
}

namespace {

// Aspect ratio above which the massless mixed term switches from the
// extrapolated lattice sum to the resummed form.
constexpr double kMaxLatticeAspect = 16.0;

PressureTerm make_term(const SeriesResult& r, Method method) {
  if (!std::isfinite(r.value)) fail(ErrorKind::overflow, "pressure component is not finite");
  return {r.value, r.terms_used, r.tail_bound, r.underflowed, method};
}

void require_mass(const CavityConfig& cfg, const char* what) {
  if (!(cfg.mass > 0.0)) {
    fail(ErrorKind::domain, std::string(what) + " needs m > 0; use the massless form for m = 0");
  }
}

// Vacuum term of a single compact dimension of length L in `dim` total
// dimensions (dim may be 1 inside the resummed mixed term).
SeriesResult compact_vacuum(double dim, double m, double length, const SeriesControl& ctrl) {
  const double pref = 2.0 * std::pow(m / (2.0 * M_PI * length), dim / 2.0);
  const std::array<BesselComponent, 2> comp{{
      {pref * (1.0 - dim), -dim / 2.0, dim / 2.0},
      {-pref * m * length, 1.0 - dim / 2.0, std::fabs(dim / 2.0 - 1.0)},
  }};
  return sum_bessel_series(comp, m * length, ctrl);
}

// Gamma(D/2) zeta(D) / (pi^{D/2} x^D).
double massless_compact(double dim, double x) {
  const double v = specfun::gamma(dim / 2.0) * specfun::riemann_zeta(dim) /
                   (std::pow(M_PI, dim / 2.0) * std::pow(x, dim));
  if (!std::isfinite(v)) fail(ErrorKind::overflow, "massless pressure is not representable");
  return v;
}

// sum_{k >= 1} term(k) for terms decaying at least geometrically; the tail
// after the last term is estimated from the ratio of the last two terms.
template <class Term>
SeriesResult frequency_sum(Term&& term, const SeriesControl& ctrl) {
  CompensatedSum sum;
  SeriesResult out;
  double previous = 0.0;
  double inner_tails = 0.0;
  for (std::int64_t k = 1;; ++k) {
    if (k > ctrl.max_terms) {
      fail(ErrorKind::budget, "frequency sum did not reach tolerance within " +
                                  std::to_string(ctrl.max_terms) + " terms");
    }
    const SeriesResult t = term(k);
    sum.add(t.value);
    inner_tails += t.tail_bound;
    out.terms_used += t.terms_used;
    out.underflowed = out.underflowed || t.underflowed;
    const double magnitude = std::fabs(t.value);
    double tail = HUGE_VAL;
    if (magnitude == 0.0) {
      tail = 0.0;
    } else if (k >= 2 && magnitude < previous) {
      const double ratio = magnitude / previous;
      tail = magnitude * ratio / (1.0 - ratio);
    }
    previous = magnitude;
    if ((k >= 3 || magnitude == 0.0) && tail <= ctrl.tolerance_for(sum.value())) {
      out.value = sum.value();
      out.tail_bound = tail + inner_tails;
      return out;
    }
  }
}

SeriesResult scaled(SeriesResult r, double factor) {
  r.value *= factor;
  r.tail_bound *= std::fabs(factor);
  return r;
}

}  // namespace

PressureTerm vacuum_pressure(const CavityConfig& cfg, const SeriesControl& ctrl) {
  cfg.validate();
  ctrl.validate();
  require_mass(cfg, "vacuum_pressure");
  return make_term(compact_vacuum(cfg.dimension, cfg.mass, cfg.length, ctrl), Method::bessel_series);
}

PressureTerm vacuum_pressure_massless(const CavityConfig& cfg) {
  cfg.validate();
  const double d = cfg.dimension;
  return {-(d - 1.0) * massless_compact(d, cfg.length), 0, 0.0, false, Method::closed_form};
}

PressureTerm thermal_pressure(const CavityConfig& cfg, const SeriesControl& ctrl) {
  cfg.validate();
  ctrl.validate();
  require_mass(cfg, "thermal_pressure");
  const double beta = cfg.beta_value();
  const double d = cfg.dimension;
  const std::array<BesselComponent, 1> comp{
      {{2.0 * std::pow(cfg.mass / (2.0 * M_PI * beta), d / 2.0), -d / 2.0, d / 2.0}}};
  return make_term(sum_bessel_series(comp, cfg.mass * beta, ctrl), Method::bessel_series);
}

PressureTerm thermal_pressure_massless(const CavityConfig& cfg) {
  cfg.validate();
  return {massless_compact(cfg.dimension, cfg.beta_value()), 0, 0.0, false, Method::closed_form};
}

PressureTerm mixed_pressure_direct(const CavityConfig& cfg, const SeriesControl& ctrl) {
  cfg.validate();
  ctrl.validate();
  require_mass(cfg, "mixed_pressure");
  const double beta = cfg.beta_value();
  const double L = cfg.length;
  const double m = cfg.mass;
  const double d = cfg.dimension;
  const double half = d / 2.0;
  const double pref = 4.0 * std::pow(m / (2.0 * M_PI), half);

  bool underflowed = false;
  auto term = [&](std::int64_t n1, std::int64_t n2) {
    const double x = static_cast<double>(n1) * L;
    const double y = static_cast<double>(n2) * beta;
    const double r2 = x * x + y * y;
    const double r = std::sqrt(r2);
    const specfun::BesselPair k = specfun::bessel_k_pair(half - 1.0, m * r);
    if (k.k_nu.overflowed || k.k_nu_plus_1.overflowed) {
      fail(ErrorKind::overflow, "Bessel function overflow in mixed term");
    }
    if (k.k_nu.underflowed || k.k_nu_plus_1.underflowed) underflowed = true;
    const double first = std::pow(r, -half) * ((1.0 - d) * x * x + y * y) / r2 * k.k_nu_plus_1.value;
    const double second = m * x * x * std::pow(r, -half - 1.0) * k.k_nu.value;
    return pref * (first - second);
  };
  // On shell max(n1, n2) = k every point has r >= k min(L, beta); the two
  // pieces are bounded by (D-1) r^{-D/2} K_{D/2} and m r^{1-D/2} K_{D/2-1}.
  const std::array<BesselComponent, 2> bounds{{
      {pref * (d - 1.0), -half, half},
      {pref * m, 1.0 - half, std::fabs(half - 1.0)},
  }};
  const double spacing = std::min(L, beta);
  auto tail = [&](std::int64_t k) {
    return bessel_tail_bound(bounds[0], m, spacing, k, true) +
           bessel_tail_bound(bounds[1], m, spacing, k, true);
  };
  SeriesResult r = detail::shell_sum_2d(term, tail, ctrl, "mixed_pressure");
  r.underflowed = underflowed;
  return make_term(r, Method::shell_sum);
}

PressureTerm mixed_pressure_resummed(const CavityConfig& cfg, const SeriesControl& ctrl) {
  cfg.validate();
  ctrl.validate();
  require_mass(cfg, "mixed_pressure");
  const double beta = cfg.beta_value();
  const double L = cfg.length;
  const double m = cfg.mass;
  const double d = cfg.dimension;

  if (L >= beta) {
    // vacuum + mixed = (1/beta) sum_{k in Z} V_{D-1}(M_k, L), M_k^2 = m^2 + (2 pi k / beta)^2.
    const SeriesResult vacuum = compact_vacuum(d, m, L, ctrl);
    const SeriesResult zero = compact_vacuum(d - 1.0, m, L, ctrl);
    auto term = [&](std::int64_t k) {
      const double w = 2.0 * M_PI * static_cast<double>(k) / beta;
      return scaled(compact_vacuum(d - 1.0, std::hypot(m, w), L, ctrl), 2.0);
    };
    const SeriesResult rest = frequency_sum(term, ctrl);
    const double value = (zero.value + rest.value) / beta - vacuum.value;
    return make_term({value, vacuum.terms_used + zero.terms_used + rest.terms_used,
                      (zero.tail_bound + rest.tail_bound) / beta + vacuum.tail_bound,
                      vacuum.underflowed || zero.underflowed || rest.underflowed},
                     Method::matsubara_resummed);
  }

  // thermal + mixed = (2 pi)^{-(D-1)/2} (4 / L) sum_{k>=1} q_k^2 sum_{n>=1}
  //   (M_k / n beta)^{nu-1} K_{nu-1}(n beta M_k),  q_k = 2 pi k / L, nu = (D-1)/2.
  const double nu = (d - 1.0) / 2.0;
  const double norm = 4.0 / (L * std::pow(2.0 * M_PI, nu));
  const SeriesResult thermal = [&] {
    const std::array<BesselComponent, 1> comp{
        {{2.0 * std::pow(m / (2.0 * M_PI * beta), d / 2.0), -d / 2.0, d / 2.0}}};
    return sum_bessel_series(comp, m * beta, ctrl);
  }();
  auto term = [&](std::int64_t k) {
    const double q = 2.0 * M_PI * static_cast<double>(k) / L;
    const double big_m = std::hypot(m, q);
    const std::array<BesselComponent, 1> comp{
        {{norm * q * q * std::pow(big_m / beta, nu - 1.0), 1.0 - nu, std::fabs(nu - 1.0)}}};
    return sum_bessel_series(comp, beta * big_m, ctrl);
  };
  const SeriesResult both = frequency_sum(term, ctrl);
  return make_term({both.value - thermal.value, both.terms_used + thermal.terms_used,
                    both.tail_bound + thermal.tail_bound, both.underflowed || thermal.underflowed},
                   Method::matsubara_resummed);
}

PressureTerm mixed_pressure(const CavityConfig& cfg, const SeriesControl& ctrl) {
  cfg.validate();
  require_mass(cfg, "mixed_pressure");
  if (cfg.mass * std::min(cfg.length, cfg.beta_value()) >= 1.0) {
    return mixed_pressure_direct(cfg, ctrl);
  }
  return mixed_pressure_resummed(cfg, ctrl);
}

namespace {

void require_four_dimensions(const CavityConfig& cfg) {
  if (cfg.dimension != 4) {
    fail(ErrorKind::unsupported_dimension,
         "massless mixed term is available for D = 4 only (got D = " + std::to_string(cfg.dimension) + ")");
  }
}

}  // namespace

PressureTerm mixed_pressure_massless_lattice(const CavityConfig& cfg, const SeriesControl& ctrl) {
  cfg.validate();
  ctrl.validate();
  require_four_dimensions(cfg);
  const double beta = cfg.beta_value();
  const double L = cfg.length;
  const double pref = -2.0 / (M_PI * M_PI);
  auto term = [&](std::int64_t n1, std::int64_t n2) {
    const double x2 = std::pow(static_cast<double>(n1) * L, 2);
    const double y2 = std::pow(static_cast<double>(n2) * beta, 2);
    const double r2 = x2 + y2;
    return pref * (3.0 * x2 - y2) / (r2 * r2 * r2);
  };
  const detail::BoxShape shape = detail::box_shape_for_ratio(beta / L);
  return make_term(detail::extrapolated_sum_2d(term, 1, shape, 2.0, ctrl, "mixed_pressure_massless"),
                   Method::lattice_extrapolated);
}

PressureTerm mixed_pressure_massless_resummed(const CavityConfig& cfg, const SeriesControl& ctrl) {
  cfg.validate();
  ctrl.validate();
  require_four_dimensions(cfg);
  const double beta = cfg.beta_value();
  const double L = cfg.length;
  const double zeta3 = specfun::riemann_zeta(3.0);

  if (L >= beta) {
    // -V_4(0, L) + (1/beta) [V_3(0, L) + 2 sum_{k>=1} V_3(2 pi k / beta, L)].
    auto term = [&](std::int64_t k) {
      const double w = 2.0 * M_PI * static_cast<double>(k) / beta;
      return scaled(compact_vacuum(3.0, w, L, ctrl), 2.0 / beta);
    };
    const SeriesResult rest = frequency_sum(term, ctrl);
    const double value = M_PI * M_PI / (30.0 * std::pow(L, 4)) - zeta3 / (M_PI * beta * std::pow(L, 3)) +
                         rest.value;
    return make_term({value, rest.terms_used, rest.tail_bound, rest.underflowed}, Method::matsubara_resummed);
  }

  // (1 / pi L beta) sum_{k>=1} q_k^2 (-log(1 - e^{-beta q_k})) - pi^2 / (90 beta^4).
  auto term = [&](std::int64_t k) {
    const double q = 2.0 * M_PI * static_cast<double>(k) / L;
    const double v = q * q * -std::log1p(-std::exp(-beta * q)) / (M_PI * L * beta);
    return SeriesResult{v, 1, 0.0, v == 0.0};
  };
  const SeriesResult both = frequency_sum(term, ctrl);
  const double value = both.value - M_PI * M_PI / (90.0 * std::pow(beta, 4));
  return make_term({value, both.terms_used, both.tail_bound, both.underflowed}, Method::matsubara_resummed);
}

PressureTerm mixed_pressure_massless(const CavityConfig& cfg, const SeriesControl& ctrl) {
  cfg.validate();
  require_four_dimensions(cfg);
  const double xi = cfg.xi();
  if (std::max(xi, 1.0 / xi) <= kMaxLatticeAspect) return mixed_pressure_massless_lattice(cfg, ctrl);
  return mixed_pressure_massless_resummed(cfg, ctrl);
}

PressureReport total_pressure(const CavityConfig& cfg, const SeriesControl& ctrl) {
  cfg.validate();
  ctrl.validate();
  const bool massless = cfg.mass == 0.0;
  PressureReport report;
  report.vacuum = massless ? vacuum_pressure_massless(cfg) : vacuum_pressure(cfg, ctrl);
  if (cfg.beta) {
    report.thermal = massless ? thermal_pressure_massless(cfg) : thermal_pressure(cfg, ctrl);
    report.mixed = massless ? mixed_pressure_massless(cfg, ctrl) : mixed_pressure(cfg, ctrl);
  }
  CompensatedSum total;
  total.add(report.vacuum.value);
  total.add(report.thermal.value);
  total.add(report.mixed.value);
  report.total = total.value();
  return report;
}

PressureReport dirichlet_pressure(double a, const CavityConfig& cfg, Field field,
                                  const SeriesControl& ctrl) {
  if (!(a > 0.0) || !std::isfinite(a)) {
    fail(ErrorKind::invalid_config, "plate separation a must be positive and finite");
  }
  CavityConfig plates = cfg;
  plates.length = 2.0 * a;
  PressureReport report = total_pressure(plates, ctrl);
  if (field == Field::electromagnetic) {
    for (PressureTerm* t : {&report.vacuum, &report.thermal, &report.mixed}) {
      t->value *= 2.0;
      t->tail_bound *= 2.0;
    }
    report.total *= 2.0;
  }
  return report;
}

double normalized_vacuum_pressure(const CavityConfig& cfg, const SeriesControl& ctrl) {
  cfg.validate();
  if (cfg.mass == 0.0) return 1.0;
  return vacuum_pressure(cfg, ctrl).value / vacuum_pressure_massless(cfg).value;
}

}  // namespace casimir
