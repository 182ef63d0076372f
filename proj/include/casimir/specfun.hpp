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

// Real-argument special functions used by the lattice sums: the modified
// Bessel function of the second kind, Gamma and Riemann zeta.

#include <cstdint>

namespace casimir::specfun {

struct EvalPrecision {
  double target_rel_error = 1e-13;
  std::int64_t max_internal_terms = 10'000;

  void validate() const;
};

/// K_nu(z) together with range flags.
///
/// `underflowed` is set when K_nu(z) is below the smallest normal double;
/// `value` is then 0. `overflowed` is set when the small-z growth exceeds the
/// double range; `value` is then +infinity.
struct BesselValue {
  double value = 0.0;
  bool underflowed = false;
  bool overflowed = false;
};

/// Modified Bessel function of the second kind for real nu >= 0, z > 0.
///
/// Half-integer orders use the terminating elementary closed form. Other
/// orders reduce nu to |mu| <= 1/2 and use Temme's series (z < 2) or
/// Steed's continued fraction (z >= 2), followed by upward recurrence.
/// Throws Error(domain) for z <= 0 and for nu < 0.
BesselValue bessel_k_eval(double nu, double z, const EvalPrecision& prec = {});

/// Convenience form of bessel_k_eval returning only the value.
double bessel_k(double nu, double z, const EvalPrecision& prec = {});

/// K_nu(z) and K_{nu+1}(z) from a single recurrence pass.
struct BesselPair {
  BesselValue k_nu;
  BesselValue k_nu_plus_1;
};
BesselPair bessel_k_pair(double nu, double z, const EvalPrecision& prec = {});

/// Gamma(x); throws Error(pole) at x = 0, -1, -2, ...
double gamma(double x);

/// 1/Gamma(x), entire: returns exactly 0 at the poles of Gamma.
double reciprocal_gamma(double x);

/// Riemann zeta for real s > 1, by direct summation with an Euler-Maclaurin
/// tail. Throws Error(domain) for s <= 1.
double riemann_zeta(double s, const EvalPrecision& prec = {});

/// True if x is within rounding of a nonpositive integer.
bool is_nonpositive_integer(double x) noexcept;

/// True if 2x is an odd integer.
bool is_half_integer(double x) noexcept;

}  // namespace casimir::specfun
