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

// Inhomogeneous Epstein-Hurwitz zeta function
//
//   Z_d^{c^2}(nu; a_1..a_d) = sum_{n in Z^d} (a_1 n_1^2 + ... + a_d n_d^2 + c^2)^{-nu}
//
// by its defining lattice sum and by its Bessel-series continuation, d = 1, 2.

#include <cstddef>
#include <vector>

#include "casimir/series.hpp"

namespace casimir {

struct ZetaArgs {
  double nu = 0.0;
  std::vector<double> coefficients;  // a_j > 0, one per compact dimension
  double c_squared = 0.0;

  std::size_t dimension() const { return coefficients.size(); }
  /// Throws Error(domain) unless d >= 1, every a_j > 0 and c^2 > 0 (finite).
  void validate() const;
};

using ZetaResult = SeriesResult;

/// Defining sum over Z^d, summed on nested boxes with Richardson
/// extrapolation; tail_bound is the extrapolation error estimate.
/// Throws Error(non_convergence) if nu <= d/2, Error(unsupported_dimension)
/// for d > 2, Error(budget) when the index budget runs out.
ZetaResult zeta_direct(const ZetaArgs& args, const SeriesControl& ctrl = {});

/// Continuation: a Gamma term in c^2 plus exponentially convergent Bessel
/// series. Valid for every real nu except where nu - d/2 is a nonpositive
/// integer (Error(pole)). Throws Error(unsupported_dimension) for d > 2.
ZetaResult zeta_continued(const ZetaArgs& args, const SeriesControl& ctrl = {});

}  // namespace casimir
