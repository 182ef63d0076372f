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

#include <cmath>
#include <numbers>
#include <string>

#include <gtest/gtest.h>

#include "casimir/epstein.hpp"
#include "casimir/error.hpp"
#include "fixtures.hpp"

namespace {

using casimir::Error;
using casimir::ErrorKind;
using casimir::SeriesControl;
using casimir::ZetaArgs;
using casimir::zeta_continued;
using casimir::zeta_direct;
constexpr double kPi = std::numbers::pi;

double rel(double got, double want) { return std::fabs(got - want) / std::fabs(want); }

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

// sum_{n in Z} (n^2 + 1)^-2 = (pi/2) coth(pi) + (pi^2/2) csch^2(pi)
const double kOneDimClosedForm =
    kPi / 2 / std::tanh(kPi) + kPi * kPi / 2 / (std::sinh(kPi) * std::sinh(kPi));

TEST(ZetaDirect, OneDimensionalClosedForm) {
  const auto r = zeta_direct({2.0, {1.0}, 1.0});
  EXPECT_LE(rel(r.value, kOneDimClosedForm), 1e-12);
  EXPECT_NEAR(r.value, 1.61367395084581739, 1e-11);
  EXPECT_GE(r.terms_used, 1);
  EXPECT_GE(r.tail_bound, 0.0);
  const auto closed = fixtures::ref("epstein_d1_nu2_a1_c1_closed");
  EXPECT_LE(rel(kOneDimClosedForm, closed.value), 1e-15);
}

TEST(ZetaDirect, AgreesWithBruteForceReference) {
  const auto r = fixtures::ref("epstein_d1_nu2_a1_c1");
  EXPECT_NEAR(zeta_direct({2.0, {1.0}, 1.0}).value, r.value, fixtures::allowance(r, 1e-10));
}

TEST(ZetaDirect, LargeShiftApproachesIntegral) {
  // For c >> sqrt(a) the sum becomes an integral, sqrt(pi) Gamma(nu - 1/2) / Gamma(nu) c^{1 - 2 nu};
  // the n = 0 term alone is smaller by a factor of order c.
  const double c = 1000.0;
  // The value is ~1.6e-9, so ask for relative accuracy explicitly.
  const SeriesControl relative{1e-300, 1e-12, 10'000'000};
  const auto r = zeta_direct({2.0, {1.0}, c * c}, relative);
  EXPECT_LE(rel(r.value, kPi / (2 * c * c * c)), 1e-11);
  EXPECT_LE(rel(zeta_continued({2.0, {1.0}, c * c}, relative).value, r.value), 1e-11);
  EXPECT_GT(r.value, 1000 * std::pow(c, -4.0));
}

TEST(ZetaDirect, TwoDimensionalReference) {
  const auto r = fixtures::ref("epstein_d2_nu3_a11_c1");
  EXPECT_NEAR(zeta_direct({3.0, {1.0, 1.0}, 1.0}).value, r.value, fixtures::allowance(r, 1e-10));
}

TEST(ZetaContinued, OneDimensionalClosedForm) {
  const auto r = zeta_continued({2.0, {1.0}, 1.0});
  EXPECT_LE(rel(r.value, kOneDimClosedForm), 1e-10);
  EXPECT_LE(rel(r.value, zeta_direct({2.0, {1.0}, 1.0}).value), 1e-10);
}

TEST(ZetaContinued, TwoDimensionalMatchesDirect) {
  const ZetaArgs args{3.0, {1.0, 1.0}, 1.0};
  EXPECT_LE(rel(zeta_continued(args).value, zeta_direct(args).value), 1e-10);
  const auto r = fixtures::ref("epstein_d2_nu3_a11_c1");
  EXPECT_NEAR(zeta_continued(args).value, r.value, fixtures::allowance(r, 1e-10));
}

TEST(ZetaContinued, AnisotropicReference) {
  const auto r = fixtures::ref("epstein_d2_nu2.5_a14_c1");
  const ZetaArgs args{2.5, {1.0, 4.0}, 1.0};
  EXPECT_NEAR(zeta_continued(args).value, r.value, fixtures::allowance(r, 1e-10));
  EXPECT_NEAR(zeta_direct(args).value, r.value, fixtures::allowance(r, 1e-10));
}

TEST(ZetaContinued, HeavyShiftKeepsOnlyPrefactorTerm) {
  // 2 sqrt(pi) / Gamma(2) * Gamma(3/2) / (2 c^3), c = 10
  const double prefactor = 2 * std::sqrt(kPi) * (std::sqrt(kPi) / 2) / (2 * 1000.0);
  EXPECT_LE(rel(zeta_continued({2.0, {1.0}, 100.0}).value, prefactor), 1e-15);
}

TEST(Epstein, RepresentationEquivalenceGrid) {
  const auto& points = fixtures::all().at("epstein_grid").at("points");
  ASSERT_EQ(points.size(), 54u);
  for (const auto& p : points) {
    const int d = p.at("d");
    const double a = p.at("a");
    ZetaArgs args{p.at("nu").get<double>(), std::vector<double>(d, a), p.at("c_squared").get<double>()};
    const fixtures::Ref ref{p.at("value"), p.at("uncertainty")};
    const double direct = zeta_direct(args).value;
    const double continued = zeta_continued(args).value;
    const std::string where = "d=" + std::to_string(d) + " nu=" + std::to_string(args.nu) +
                              " a=" + std::to_string(a) + " c2=" + std::to_string(args.c_squared);
    EXPECT_LE(std::fabs(continued - direct), 1e-9 * std::fabs(direct)) << where;
    EXPECT_NEAR(direct, ref.value, fixtures::allowance(ref, 1e-10)) << where;
    EXPECT_NEAR(continued, ref.value, fixtures::allowance(ref, 1e-10)) << where;
    const auto fine = fixtures::control_finer_than(ref);
    EXPECT_TRUE(fixtures::consistent(zeta_direct(args, fine), ref)) << where;
    EXPECT_TRUE(fixtures::consistent(zeta_continued(args, fine), ref)) << where;
  }
}

TEST(Epstein, Scaling) {
  for (double lambda : {0.3, 2.0, 7.5}) {
    for (const ZetaArgs& base : {ZetaArgs{2.0, {1.0}, 1.0}, ZetaArgs{1.5, {0.25}, 0.5},
                                 ZetaArgs{3.0, {1.0, 4.0}, 1.0}, ZetaArgs{2.5, {0.25, 1.0}, 10.0}}) {
      ZetaArgs scaled = base;
      for (double& a : scaled.coefficients) a *= lambda;
      scaled.c_squared *= lambda;
      const double factor = std::pow(lambda, -base.nu);
      EXPECT_LE(rel(zeta_continued(scaled).value, factor * zeta_continued(base).value), 1e-11);
      EXPECT_LE(rel(zeta_direct(scaled).value, factor * zeta_direct(base).value), 1e-11);
    }
  }
}

TEST(Epstein, CoefficientExchangeSymmetry) {
  for (double nu : {1.5, 2.0, 3.0}) {
    const double ab = zeta_continued({nu, {0.25, 4.0}, 1.0}).value;
    const double ba = zeta_continued({nu, {4.0, 0.25}, 1.0}).value;
    EXPECT_LE(rel(ab, ba), 1e-12) << nu;
  }
}

TEST(Epstein, DecreasesWithShift) {
  for (const auto& coeffs : {std::vector<double>{1.0}, std::vector<double>{1.0, 2.0}}) {
    double prev = HUGE_VAL;
    for (double c2 : {0.1, 0.5, 1.0, 2.0, 10.0, 100.0}) {
      const double v = zeta_continued({2.0, coeffs, c2}).value;
      EXPECT_LT(v, prev) << c2;
      prev = v;
    }
  }
}

TEST(ZetaContinued, ExtendsBelowConvergenceRegion) {
  // nu = 0.3 < d/2: the defining sum diverges but the continuation is finite.
  const ZetaArgs args{0.3, {1.0}, 1.0};
  EXPECT_EQ(kind_of([&] { zeta_direct(args); }), ErrorKind::non_convergence);
  EXPECT_TRUE(std::isfinite(zeta_continued(args).value));
  // and agrees with its own scaling law there.
  ZetaArgs scaled = args;
  scaled.coefficients[0] *= 3;
  scaled.c_squared *= 3;
  EXPECT_LE(rel(zeta_continued(scaled).value, std::pow(3.0, -0.3) * zeta_continued(args).value), 1e-11);
}

TEST(Epstein, Errors) {
  EXPECT_EQ(kind_of([] { zeta_direct({0.5, {1.0}, 1.0}); }), ErrorKind::non_convergence);
  EXPECT_EQ(kind_of([] { zeta_direct({1.0, {1.0, 1.0}, 1.0}); }), ErrorKind::non_convergence);
  EXPECT_EQ(kind_of([] { zeta_continued({0.5, {1.0}, 1.0}); }), ErrorKind::pole);
  EXPECT_EQ(kind_of([] { zeta_continued({-0.5, {1.0}, 1.0}); }), ErrorKind::pole);
  EXPECT_EQ(kind_of([] { zeta_continued({1.0, {1.0, 1.0}, 1.0}); }), ErrorKind::pole);
  EXPECT_EQ(kind_of([] { zeta_continued({3.0, {1.0, 1.0, 1.0}, 1.0}); }), ErrorKind::unsupported_dimension);
  EXPECT_EQ(kind_of([] { zeta_direct({3.0, {1.0, 1.0, 1.0}, 1.0}); }), ErrorKind::unsupported_dimension);
  EXPECT_EQ(kind_of([] { zeta_direct({2.0, {1.0}, 0.0}); }), ErrorKind::domain);
  EXPECT_EQ(kind_of([] { zeta_continued({2.0, {1.0}, 0.0}); }), ErrorKind::domain);
  EXPECT_EQ(kind_of([] { zeta_continued({2.0, {-1.0}, 1.0}); }), ErrorKind::domain);
  EXPECT_EQ(kind_of([] { zeta_continued({2.0, {}, 1.0}); }), ErrorKind::domain);
  SeriesControl tight;
  tight.max_terms = 10;
  EXPECT_EQ(kind_of([&] { zeta_direct({1.0 + 1e-3, {1.0}, 1.0}, tight); }), ErrorKind::budget);
}

}  // namespace
