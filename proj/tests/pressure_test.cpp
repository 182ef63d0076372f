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
#include <cmath>
#include <numbers>
#include <string>

#include <gtest/gtest.h>

#include "casimir/asymptotics.hpp"
#include "casimir/error.hpp"
#include "casimir/pressure.hpp"
#include "fixtures.hpp"

namespace {

using namespace casimir;
constexpr double kPi = std::numbers::pi;
const double kZeta3 = 1.2020569031595942854;

double rel(double got, double want) { return std::fabs(got - want) / std::fabs(want); }

CavityConfig cavity(int d, double m, double l, std::optional<double> beta = std::nullopt) {
  CavityConfig cfg;
  cfg.dimension = d;
  cfg.mass = m;
  cfg.length = l;
  cfg.beta = beta;
  return cfg;
}

const SeriesControl kTight{1e-16, 1e-15, 100000};

template <class Fn>
ErrorKind kind_of(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "expected casimir::Error";
  return ErrorKind::invalid_config;
}

TEST(VacuumMassless, ClosedForms) {
  EXPECT_LE(rel(vacuum_pressure_massless(cavity(4, 0, 1)).value, -kPi * kPi / 30), 1e-12);
  EXPECT_NEAR(vacuum_pressure_massless(cavity(4, 0, 1)).value, -0.32898681337, 1e-11);
  EXPECT_LE(rel(vacuum_pressure_massless(cavity(4, 0, 2)).value, -kPi * kPi / 480), 1e-12);
  EXPECT_LE(rel(vacuum_pressure_massless(cavity(3, 0, 1)).value, -kZeta3 / kPi), 1e-12);
  EXPECT_EQ(vacuum_pressure_massless(cavity(4, 0, 1)).method, Method::closed_form);
}

TEST(VacuumMassless, GeneralDimensionMatchesSmallMassSeries) {
  // D = 2 is left out: its series decays like 1/n^2 until n ~ 1/(mL).
  for (int d : {3, 5, 6}) {
    const double closed = vacuum_pressure_massless(cavity(d, 0, 1)).value;
    const double series = vacuum_pressure(cavity(d, 1e-8, 1)).value;
    EXPECT_LE(rel(series, closed), 1e-7) << d;
  }
}

TEST(Vacuum, SmallMassApproachesMassless) {
  EXPECT_LE(rel(vacuum_pressure(cavity(4, 1e-6, 1)).value, -kPi * kPi / 30), 1e-5);
}

TEST(Vacuum, UnitMassReference) {
  const auto r = fixtures::ref("vacuum_d4_m1_L1");
  EXPECT_NEAR(vacuum_pressure(cavity(4, 1, 1)).value, r.value, fixtures::allowance(r, 1e-10));
  EXPECT_NEAR(vacuum_pressure(cavity(4, 1, 1), kTight).value, r.value, fixtures::allowance(r, 1e-13));
}

TEST(Vacuum, FourDimensionalGrid) {
  for (const auto& p : fixtures::all().at("vacuum_d4_grid")) {
    const double m = p.at("m");
    const double l = p.at("L");
    const fixtures::Ref r{p.at("value"), p.at("uncertainty")};
    EXPECT_NEAR(vacuum_pressure(cavity(4, m, l), kTight).value, r.value, fixtures::allowance(r, 1e-12))
        << "m=" << m << " L=" << l;
  }
}

TEST(Vacuum, HeavyFieldIsSuppressed) {
  // Only n = 1 survives: 2 (m / 2 pi)^2 [-3 K_2(m) - m K_1(m)], about 8.4e-7 of the
  // massless value. K_2(20), K_1(20) to 15 digits.
  const double m = 20;
  const double v = vacuum_pressure(cavity(4, m, 1)).value;
  const double n1 = 2 * std::pow(m / (2 * kPi), 2) * (-3 * 6.32954361229223e-10 - m * 5.88305796955704e-10);
  EXPECT_LT(v, 0.0);
  EXPECT_LE(rel(v, n1), 1e-8);
  EXPECT_LT(std::fabs(v), 1e-6 * kPi * kPi / 30);
}

TEST(ThermalMassless, ClosedForms) {
  EXPECT_LE(rel(thermal_pressure_massless(cavity(4, 0, 1, 1.0)).value, kPi * kPi / 90), 1e-12);
  EXPECT_LE(rel(thermal_pressure_massless(cavity(4, 0, 1, 2.0)).value, kPi * kPi / 1440), 1e-12);
  EXPECT_NEAR(thermal_pressure_massless(cavity(4, 0, 1, 2.0)).value, 0.0068538919, 1e-10);
  EXPECT_LE(rel(thermal_pressure_massless(cavity(5, 0, 1, 1.0)).value, 0.0787970606270388), 1e-12);
}

TEST(ThermalMassless, GeneralDimensionMatchesSmallMassSeries) {
  for (int d : {3, 4, 5, 6}) {
    const double closed = thermal_pressure_massless(cavity(d, 0, 1, 1.0)).value;
    const double series = thermal_pressure(cavity(d, 1e-8, 1, 1.0)).value;
    EXPECT_LE(rel(series, closed), 1e-7) << d;
  }
}

TEST(Thermal, SmallMassApproachesStefanBoltzmann) {
  EXPECT_LE(rel(thermal_pressure(cavity(4, 1e-6, 1, 1.0)).value, kPi * kPi / 90), 1e-5);
}

TEST(Thermal, UnitMassReference) {
  const auto r = fixtures::ref("thermal_d4_m1_beta1");
  EXPECT_NEAR(thermal_pressure(cavity(4, 1, 1, 1.0)).value, r.value, fixtures::allowance(r, 1e-10));
}

TEST(Thermal, VanishesAtLowTemperature) {
  EXPECT_LT(std::fabs(thermal_pressure(cavity(4, 1, 1, 50.0)).value), 1e-18);
}

TEST(ThermalVacuumDuality, MasslessClosedForms) {
  for (double x : {0.1, 0.5, 1.0, 3.0, 17.0}) {
    const double thermal = thermal_pressure_massless(cavity(4, 0, 1, x)).value;
    const double vacuum = vacuum_pressure_massless(cavity(4, 0, x)).value;
    EXPECT_LE(rel(thermal, -vacuum / 3), 1e-14) << x;
  }
}

TEST(Mixed, UnitReference) {
  const auto r = fixtures::ref("mixed_d4_m1_L1_beta1");
  const auto cfg = cavity(4, 1, 1, 1.0);
  EXPECT_NEAR(mixed_pressure(cfg).value, r.value, fixtures::allowance(r, 1e-10));
  EXPECT_NEAR(mixed_pressure_direct(cfg).value, r.value, fixtures::allowance(r, 1e-10));
  EXPECT_NEAR(mixed_pressure_resummed(cfg).value, r.value, fixtures::allowance(r, 1e-10));
}

TEST(Mixed, SmallMassApproachesMassless) {
  const double massless = mixed_pressure_massless(cavity(4, 0, 1, 1.0)).value;
  EXPECT_LE(rel(mixed_pressure(cavity(4, 1e-6, 1, 1.0)).value, massless), 1e-5);
}

TEST(Mixed, VanishesAtLowTemperature) {
  EXPECT_LT(std::fabs(mixed_pressure(cavity(4, 1, 1, 40.0)).value), 1e-15);
}

TEST(Mixed, DirectAndResummedRoutesAgree) {
  for (int d : {2, 3, 4, 5, 6}) {
    for (auto [m, l, b] : {std::tuple{1.0, 1.0, 1.0}, std::tuple{2.0, 1.0, 0.6}, std::tuple{1.5, 0.7, 1.9},
                           std::tuple{3.0, 2.0, 1.0}}) {
      const auto cfg = cavity(d, m, l, b);
      const double direct = mixed_pressure_direct(cfg, kTight).value;
      const double resummed = mixed_pressure_resummed(cfg, kTight).value;
      EXPECT_LE(std::fabs(direct - resummed), 1e-10 * std::fabs(direct) + 1e-16)
          << "D=" << d << " m=" << m << " L=" << l << " beta=" << b;
    }
  }
}

TEST(MixedMassless, BruteForceReferences) {
  for (auto [name, l, b] : {std::tuple{"mixed_massless_L1_beta1", 1.0, 1.0},
                            std::tuple{"mixed_massless_L1_beta2", 1.0, 2.0},
                            std::tuple{"mixed_massless_L2_beta1", 2.0, 1.0}}) {
    const auto r = fixtures::ref(name);
    EXPECT_NEAR(mixed_pressure_massless(cavity(4, 0, l, b)).value, r.value, fixtures::allowance(r, 1e-10))
        << name;
  }
}

TEST(MixedMassless, EqualPeriodsClosedForm) {
  // At L = beta the double sum reduces to pi^2/45 - G/3.
  const auto r = fixtures::ref("f_xi1_closed");
  EXPECT_LE(rel(mixed_pressure_massless(cavity(4, 0, 1, 1.0)).value, r.value), 1e-12);
}

TEST(MixedMassless, LatticeAndResummedRoutesAgree) {
  for (auto [l, b] : {std::pair{1.0, 1.0}, std::pair{1.0, 2.0}, std::pair{2.0, 1.0}, std::pair{1.0, 7.0},
                      std::pair{5.0, 1.0}, std::pair{0.3, 1.1}}) {
    const auto cfg = cavity(4, 0, l, b);
    const double lattice = mixed_pressure_massless_lattice(cfg, kTight).value;
    const double resummed = mixed_pressure_massless_resummed(cfg, kTight).value;
    EXPECT_LE(rel(lattice, resummed), 1e-11) << l << " " << b;
  }
}

TEST(MixedMassless, AlgebraicVanishingAtLowTemperature) {
  const double mixed = mixed_pressure_massless(cavity(4, 0, 1, 1e3)).value;
  EXPECT_LE(std::fabs(mixed), 1e-5 * kPi * kPi / 30);
}

TEST(MixedMassless, OnlyFourDimensions) {
  for (int d : {2, 3, 5}) {
    EXPECT_EQ(kind_of([d] { mixed_pressure_massless(cavity(d, 0, 1, 1.0)); }), ErrorKind::unsupported_dimension);
    EXPECT_EQ(kind_of([d] { total_pressure(cavity(d, 0, 1, 1.0)); }), ErrorKind::unsupported_dimension);
  }
}

TEST(Total, ZeroTemperatureHasNoThermalParts) {
  const auto report = total_pressure(cavity(4, 0.7, 1.3));
  EXPECT_EQ(report.thermal.value, 0.0);
  EXPECT_EQ(report.mixed.value, 0.0);
  EXPECT_EQ(report.thermal.method, Method::absent);
  EXPECT_EQ(report.total, report.vacuum.value);
}

TEST(Total, VacuumComponentIsBitIdentical) {
  for (auto cfg : {cavity(4, 1, 1, 1.0), cavity(3, 0.2, 2, 0.5), cavity(5, 3, 0.4)}) {
    EXPECT_EQ(total_pressure(cfg).vacuum.value, vacuum_pressure(cfg).value);
    EXPECT_EQ(total_pressure(cfg, kTight).vacuum.value, vacuum_pressure(cfg, kTight).value);
  }
  const auto massless = cavity(4, 0, 1, 2.0);
  EXPECT_EQ(total_pressure(massless).vacuum.value, vacuum_pressure_massless(massless).value);
}

TEST(Total, IsSumOfComponents) {
  for (auto cfg : {cavity(4, 1, 1, 1.0), cavity(4, 0, 1, 10.0), cavity(6, 0.5, 2, 0.3), cavity(4, 0, 10, 1.0)}) {
    const auto r = total_pressure(cfg);
    const double largest =
        std::max({std::fabs(r.vacuum.value), std::fabs(r.thermal.value), std::fabs(r.mixed.value)});
    EXPECT_LE(std::fabs(r.total - (r.vacuum.value + r.thermal.value + r.mixed.value)), 1e-14 * largest);
  }
}

TEST(Total, LowTemperatureRegime) {
  const auto r = total_pressure(cavity(4, 0, 1, 10.0));
  EXPECT_NEAR(r.total, -kPi * kPi / 30 + kPi * kPi / 90e4 + r.mixed.value, 1e-15);
  EXPECT_NEAR(r.total, total_low_temperature(1, 10), 1e-12);
}

TEST(Total, HighTemperatureRegime) {
  const auto r = total_pressure(cavity(4, 0, 10, 1.0));
  EXPECT_NEAR(r.total, kPi * kPi / 90 - kZeta3 / (kPi * 1e3), 1e-10);
  EXPECT_NEAR(r.total, total_high_temperature(10, 1), 1e-12);
}

TEST(Total, BulkLimitIsStefanBoltzmann) {
  EXPECT_LE(rel(total_pressure(cavity(4, 0, 1e3, 1.0)).total, kPi * kPi / 90), 1e-6);
}

TEST(Total, ZeroTemperatureLimit) {
  for (double m : {1.0, 2.0, 5.0}) {
    for (double l : {0.5, 1.0, 2.0}) {
      const double beta = 50 * std::max(l, 1 / std::max(m, 1.0));
      const auto r = total_pressure(cavity(4, m, l, beta));
      const double bound = 1e-12 * std::fabs(r.vacuum.value);
      EXPECT_LT(std::fabs(r.thermal.value), bound) << m << " " << l;
      EXPECT_LT(std::fabs(r.mixed.value), bound) << m << " " << l;
    }
  }
}

TEST(Total, DoublingTermBudgetStaysWithinTailBounds) {
  for (auto cfg : {cavity(4, 1, 1, 1.0), cavity(4, 0.05, 1, 2.0), cavity(3, 0.5, 0.5, 1.0), cavity(4, 0, 2, 1.0)}) {
    SeriesControl base;
    base.max_terms = 50000;
    SeriesControl doubled = base;
    doubled.max_terms = 100000;
    const auto a = total_pressure(cfg, base);
    const auto b = total_pressure(cfg, doubled);
    for (auto [x, y] : {std::pair{a.vacuum, b.vacuum}, std::pair{a.thermal, b.thermal}, std::pair{a.mixed, b.mixed}}) {
      EXPECT_LE(std::fabs(x.value - y.value), std::max(x.tail_bound, y.tail_bound) + 1e-16);
    }
  }
}

TEST(Dirichlet, ParallelPlates) {
  EXPECT_LE(rel(dirichlet_pressure(1, cavity(4, 0, 1), Field::scalar).total, -kPi * kPi / 480), 1e-12);
  EXPECT_LE(rel(dirichlet_pressure(1, cavity(4, 0, 1), Field::electromagnetic).total, -kPi * kPi / 240), 1e-12);
  EXPECT_EQ(dirichlet_pressure(0.5, cavity(4, 0, 7), Field::scalar).total,
            vacuum_pressure_massless(cavity(4, 0, 1)).value);
  const auto em = dirichlet_pressure(1, cavity(4, 0.3, 1, 2.0), Field::electromagnetic);
  const auto sc = dirichlet_pressure(1, cavity(4, 0.3, 1, 2.0), Field::scalar);
  EXPECT_EQ(em.mixed.value, 2 * sc.mixed.value);
  EXPECT_EQ(kind_of([] { dirichlet_pressure(0, cavity(4, 0, 1), Field::scalar); }), ErrorKind::invalid_config);
}

TEST(NormalizedVacuum, MatchesReferenceAndDecreases) {
  double prev = 1.0 + 1e-9;
  const double near_zero = normalized_vacuum_pressure(cavity(4, 1e-4, 1));
  EXPECT_LE(near_zero, 1 + 1e-9);
  EXPECT_GE(near_zero, 1 - 1e-3);
  for (const auto& p : fixtures::all().at("figure1_ratio").at("points")) {
    const double ml = p.at("mL");
    const fixtures::Ref r{p.at("value"), p.at("uncertainty")};
    const double ratio = normalized_vacuum_pressure(cavity(4, ml, 1));
    EXPECT_NEAR(ratio, r.value, fixtures::allowance(r, 1e-9)) << ml;
    EXPECT_GT(ratio, 0.0);
    EXPECT_LT(ratio, prev) << ml;
    prev = ratio;
  }
  EXPECT_LT(normalized_vacuum_pressure(cavity(4, 10, 1)), 0.01);
}

TEST(CavityConfig, Validation) {
  EXPECT_EQ(kind_of([] { cavity(1, 0, 1).validate(); }), ErrorKind::invalid_config);
  EXPECT_EQ(kind_of([] { cavity(4, -1, 1).validate(); }), ErrorKind::invalid_config);
  EXPECT_EQ(kind_of([] { cavity(4, 0, 0).validate(); }), ErrorKind::invalid_config);
  EXPECT_EQ(kind_of([] { cavity(4, 0, 1, 0.0).validate(); }), ErrorKind::invalid_config);
  EXPECT_EQ(kind_of([] { cavity(4, 0, 1, -2.0).validate(); }), ErrorKind::invalid_config);
  EXPECT_EQ(kind_of([] { thermal_pressure(cavity(4, 1, 1)); }), ErrorKind::invalid_config);
  EXPECT_EQ(kind_of([] { mixed_pressure(cavity(4, 1, 1)); }), ErrorKind::invalid_config);
  EXPECT_EQ(kind_of([] { thermal_pressure_massless(cavity(4, 0, 1)); }), ErrorKind::invalid_config);
}

TEST(MassiveForms, RejectZeroMass) {
  EXPECT_EQ(kind_of([] { vacuum_pressure(cavity(4, 0, 1)); }), ErrorKind::domain);
  EXPECT_EQ(kind_of([] { thermal_pressure(cavity(4, 0, 1, 1.0)); }), ErrorKind::domain);
  EXPECT_EQ(kind_of([] { mixed_pressure(cavity(4, 0, 1, 1.0)); }), ErrorKind::domain);
}

TEST(MassiveForms, BudgetExhaustion) {
  SeriesControl small;
  small.max_terms = 10;
  EXPECT_EQ(kind_of([&] { vacuum_pressure(cavity(4, 1e-3, 1), small); }), ErrorKind::budget);
}

TEST(Method, Labels) {
  EXPECT_EQ(to_string(Method::closed_form), "closed_form");
  EXPECT_EQ(total_pressure(cavity(4, 0, 1, 1.0)).mixed.method, Method::lattice_extrapolated);
  EXPECT_EQ(total_pressure(cavity(4, 1, 1, 1.0)).vacuum.method, Method::bessel_series);
}

}  // namespace
