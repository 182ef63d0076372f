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

#include "casimir/specfun.hpp"

#include <array>
#include <cfloat>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "casimir/error.hpp"

namespace casimir::specfun {

namespace {

constexpr double kPi = std::numbers::pi;

// Taylor coefficients of 1/Gamma(x) about 0: 1/Gamma(x) = sum_k c[k] x^k.
constexpr std::array<double, 29> kRgammaTaylor = {
    0.0,
    1.0,
    0.57721566490153286061,
    -0.65587807152025388108,
    -0.042002635034095235529,
    0.1665386113822914895,
    -0.042197734555544336748,
    -0.0096219715278769735621,
    0.0072189432466630995424,
    -0.0011651675918590651121,
    -0.00021524167411495097282,
    0.00012805028238811618615,
    -0.000020134854780788238656,
    -1.2504934821426706573e-6,
    1.1330272319816958824e-6,
    -2.0563384169776071035e-7,
    6.1160951044814158179e-9,
    5.0020076444692229301e-9,
    -1.1812745704870201446e-9,
    1.0434267116911005105e-10,
    7.782263439905071254e-12,
    -3.6968056186422057082e-12,
    5.100370287454475979e-13,
    -2.0583260535665067832e-14,
    -5.3481225394230179824e-15,
    1.2267786282382607902e-15,
    -1.1812593016974587695e-16,
    1.1866922547516003326e-18,
    1.4123806553180317816e-18,
};

// Lanczos approximation, g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7,
};

// Even-index Bernoulli numbers B_2, B_4, ..., B_30.
constexpr std::array<double, 15> kBernoulliEven = {
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
};

double working_eps(const EvalPrecision& prec) {
  return std::max(prec.target_rel_error * 0.01, DBL_EPSILON);
}

// Pieces of Temme's method for |mu| <= 1/2:
// gam1 = (1/Gamma(1-mu) - 1/Gamma(1+mu)) / (2 mu), gam2 = (1/Gamma(1-mu) + 1/Gamma(1+mu)) / 2.
struct TemmeGammas {
  double gam1;
  double gam2;
  double gampl;  // 1/Gamma(1+mu)
  double gammi;  // 1/Gamma(1-mu)
};

TemmeGammas temme_gammas(double mu) {
  const double mu2 = mu * mu;
  double odd = 0.0;   // sum_j c[2j+1] mu^{2j}
  double even = 0.0;  // sum_j c[2j+2] mu^{2j}
  for (int k = static_cast<int>(kRgammaTaylor.size()) - 1; k >= 1; --k) {
    if (k % 2 == 1) {
      odd = odd * mu2 + kRgammaTaylor[k];
    } else {
      even = even * mu2 + kRgammaTaylor[k];
    }
  }
  return {-even, odd, odd + mu * even, odd - mu * even};
}

// Converts a value known as scaled * exp(-x) into a BesselValue.
BesselValue unscale(double scaled, double x) {
  BesselValue out;
  if (std::isinf(scaled)) {
    out.value = std::numeric_limits<double>::infinity();
    out.overflowed = true;
    return out;
  }
  const double log_value = std::log(scaled) - x;
  if (log_value < std::log(DBL_MIN)) {
    out.underflowed = true;
    return out;
  }
  out.value = scaled * std::exp(-x);
  if (std::isinf(out.value)) out.overflowed = true;
  return out;
}

BesselValue from_unscaled(double value) {
  BesselValue out;
  out.value = value;
  if (std::isinf(value)) out.overflowed = true;
  return out;
}

void check_bessel_args(double nu, double z) {
  if (!(z > 0.0)) {
    fail(ErrorKind::domain, "bessel_k: argument must be positive, got " + std::to_string(z));
  }
  if (!(nu >= 0.0)) {
    fail(ErrorKind::domain, "bessel_k: order must be nonnegative, got " + std::to_string(nu));
  }
}

// K_{n+1/2}(x) and K_{n+3/2}(x) through the terminating polynomial
// sqrt(pi/2x) e^{-x} sum_k (n+k)!/(k!(n-k)!) (2x)^{-k}.
BesselPair half_integer_pair(double nu, double x) {
  const auto n = static_cast<int>(std::lround(nu - 0.5));
  const double t = 1.0 / (2.0 * x);
  auto poly = [t](int order) {
    double coeff = 1.0;
    double sum = 1.0;
    double power = 1.0;
    for (int k = 1; k <= order; ++k) {
      coeff *= static_cast<double>(order + k) * static_cast<double>(order - k + 1) / k;
      power *= t;
      sum += coeff * power;
    }
    return sum;
  };
  const double envelope = std::sqrt(kPi / (2.0 * x));
  return {unscale(envelope * poly(n), x), unscale(envelope * poly(n + 1), x)};
}

// Temme / Steed evaluation for general real order.
BesselPair temme_pair(double nu, double x, const EvalPrecision& prec) {
  const double eps = working_eps(prec);
  const int nl = static_cast<int>(nu + 0.5);
  const double mu = nu - nl;
  const double mu2 = mu * mu;
  const double xi = 1.0 / x;
  const double xi2 = 2.0 * xi;

  double k_mu = 0.0;
  double k_mu1 = 0.0;
  bool scaled = false;

  if (x < 2.0) {
    const double x2 = 0.5 * x;
    const double pimu = kPi * mu;
    const double fact = std::abs(pimu) < eps ? 1.0 : pimu / std::sin(pimu);
    double d = -std::log(x2);
    double e = mu * d;
    const double fact2 = std::abs(e) < eps ? 1.0 : std::sinh(e) / e;
    const TemmeGammas g = temme_gammas(mu);
    double ff = fact * (g.gam1 * std::cosh(e) + g.gam2 * fact2 * d);
    double sum = ff;
    e = std::exp(e);
    double p = 0.5 * e / g.gampl;
    double q = 0.5 / (e * g.gammi);
    double c = 1.0;
    d = x2 * x2;
    double sum1 = p;
    std::int64_t i = 1;
    for (; i <= prec.max_internal_terms; ++i) {
      const double di = static_cast<double>(i);
      ff = (di * ff + p + q) / (di * di - mu2);
      c *= d / di;
      p /= di - mu;
      q /= di + mu;
      const double del = c * ff;
      sum += del;
      const double del1 = c * (p - di * ff);
      sum1 += del1;
      if (std::abs(del) < std::abs(sum) * eps) break;
    }
    if (i > prec.max_internal_terms) {
      fail(ErrorKind::budget, "bessel_k: small-argument series did not converge");
    }
    k_mu = sum;
    k_mu1 = sum1 * xi2;
  } else {
    double b = 2.0 * (1.0 + x);
    double d = 1.0 / b;
    double h = d;
    double delh = d;
    double q1 = 0.0;
    double q2 = 1.0;
    const double a1 = 0.25 - mu2;
    double q = a1;
    double c = a1;
    double a = -a1;
    double s = 1.0 + q * delh;
    std::int64_t i = 2;
    for (; i <= prec.max_internal_terms; ++i) {
      const double di = static_cast<double>(i);
      a -= 2.0 * (di - 1.0);
      c = -a * c / di;
      const double qnew = (q1 - b * q2) / a;
      q1 = q2;
      q2 = qnew;
      q += c * qnew;
      b += 2.0;
      d = 1.0 / (b + a * d);
      delh = (b * d - 1.0) * delh;
      h += delh;
      const double dels = q * delh;
      s += dels;
      if (std::abs(dels / s) < eps) break;
    }
    if (i > prec.max_internal_terms) {
      fail(ErrorKind::budget, "bessel_k: continued fraction did not converge");
    }
    h = a1 * h;
    k_mu = std::sqrt(kPi / (2.0 * x)) / s;  // scaled by e^{x}
    k_mu1 = k_mu * (mu + x + 0.5 - h) * xi;
    scaled = true;
  }

  for (int i = 1; i <= nl; ++i) {
    const double next = (mu + i) * xi2 * k_mu1 + k_mu;
    k_mu = k_mu1;
    k_mu1 = next;
  }

  if (scaled) return {unscale(k_mu, x), unscale(k_mu1, x)};
  return {from_unscaled(k_mu), from_unscaled(k_mu1)};
}

}  // namespace

void EvalPrecision::validate() const {
  if (!(target_rel_error > 0.0)) fail(ErrorKind::domain, "EvalPrecision: target_rel_error must be > 0");
  if (max_internal_terms < 1) fail(ErrorKind::domain, "EvalPrecision: max_internal_terms must be >= 1");
}

bool is_nonpositive_integer(double x) noexcept {
  return x <= 0.0 && x == std::nearbyint(x);
}

bool is_half_integer(double x) noexcept {
  const double twice = 2.0 * x;
  return twice == std::nearbyint(twice) && std::fmod(std::abs(twice), 2.0) == 1.0;
}

BesselPair bessel_k_pair(double nu, double z, const EvalPrecision& prec) {
  check_bessel_args(nu, z);
  if (is_half_integer(nu)) return half_integer_pair(nu, z);
  return temme_pair(nu, z, prec);
}

BesselValue bessel_k_eval(double nu, double z, const EvalPrecision& prec) {
  return bessel_k_pair(nu, z, prec).k_nu;
}

double bessel_k(double nu, double z, const EvalPrecision& prec) {
  return bessel_k_eval(nu, z, prec).value;
}

double gamma(double x) {
  if (is_nonpositive_integer(x)) {
    fail(ErrorKind::pole, "gamma: pole at x = " + std::to_string(x));
  }
  if (x < 0.5) {
    // Reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x).
    return kPi / (std::sin(kPi * x) * gamma(1.0 - x));
  }
  const double xm = x - 1.0;
  double acc = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) {
    acc += kLanczos[i] / (xm + static_cast<double>(i));
  }
  const double t = xm + kLanczosG + 0.5;
  // Split the power so t^(x-1/2) does not overflow before e^{-t} is applied.
  const double half_power = std::pow(t, 0.5 * (xm + 0.5));
  return std::sqrt(2.0 * kPi) * half_power * std::exp(-t) * half_power * acc;
}

double reciprocal_gamma(double x) {
  if (is_nonpositive_integer(x)) return 0.0;
  return 1.0 / gamma(x);
}

double riemann_zeta(double s, const EvalPrecision& prec) {
  if (!(s > 1.0)) {
    fail(ErrorKind::domain, "riemann_zeta: requires s > 1, got " + std::to_string(s));
  }
  const double eps = working_eps(prec);
  constexpr int kHead = 12;
  double head = 0.0;
  for (int n = kHead - 1; n >= 1; --n) head += std::pow(static_cast<double>(n), -s);
  const double big_n = kHead;
  const double n_pow = std::pow(big_n, -s);
  double tail = big_n * n_pow / (s - 1.0) + 0.5 * n_pow;
  // Euler-Maclaurin corrections B_{2j}/(2j)! s(s+1)...(s+2j-2) N^{-s-2j+1}.
  double rising = s;              // s (s+1) ... (s+2j-2)
  double factorial = 2.0;         // (2j)!
  double power = n_pow / big_n;   // N^{-s-2j+1}
  for (std::size_t j = 1; j <= kBernoulliEven.size(); ++j) {
    const double term = kBernoulliEven[j - 1] / factorial * rising * power;
    tail += term;
    if (std::abs(term) < eps * (head + tail)) break;
    const double dj = static_cast<double>(j);
    rising *= (s + 2.0 * dj - 1.0) * (s + 2.0 * dj);
    factorial *= (2.0 * dj + 1.0) * (2.0 * dj + 2.0);
    power /= big_n * big_n;
  }
  return head + tail;
}

}  // namespace casimir::specfun
