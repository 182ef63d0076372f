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

// Casimir pressure T_33 of a free scalar field on R^{D-2} x S^1_L x S^1_beta
// (periodic in x_3 with circumference L, thermal with inverse temperature
// beta), split as vacuum + thermal + mixed. Natural units throughout.

#include <cstdint>
#include <optional>
#include <string_view>

#include "casimir/series.hpp"

namespace casimir {

struct CavityConfig {
  int dimension = 4;             // total Euclidean dimension D >= 2
  double mass = 0.0;             // m >= 0
  double length = 1.0;           // L > 0
  std::optional<double> beta;    // inverse temperature; empty = zero temperature

  /// Throws Error(invalid_config) on any violated field constraint.
  void validate() const;

  double a() const { return 1.0 / (length * length); }
  double c() const;              // m / (2 pi)
  /// Throws Error(invalid_config) when beta is absent.
  double beta_value() const;
  double xi() const { return length / beta_value(); }
};

enum class Method {
  absent,               // component identically zero (no beta)
  closed_form,          // massless Gamma/zeta expression
  bessel_series,        // single sum over K_nu
  shell_sum,            // double sum over K_nu on square shells
  matsubara_resummed,   // one index resummed into a Bessel series in the other
  lattice_extrapolated, // algebraic double sum with box extrapolation
};

std::string_view to_string(Method method) noexcept;

/// One pressure component with the convergence data of its series.
struct PressureTerm {
  double value = 0.0;
  std::int64_t terms_used = 0;
  double tail_bound = 0.0;
  bool underflowed = false;
  Method method = Method::absent;
};

struct PressureReport {
  PressureTerm vacuum;
  PressureTerm thermal;
  PressureTerm mixed;
  double total = 0.0;
};

/// Vacuum term for m > 0:
///   2 (m / 2 pi L)^{D/2} [ (1 - D) sum_n n^{-D/2} K_{D/2}(m n L)
///                          - m L sum_n n^{1-D/2} K_{D/2-1}(m n L) ].
PressureTerm vacuum_pressure(const CavityConfig& cfg, const SeriesControl& ctrl = {});

/// -(D - 1) Gamma(D/2) zeta(D) / (pi^{D/2} L^D); the mass is ignored.
PressureTerm vacuum_pressure_massless(const CavityConfig& cfg);

/// Thermal term for m > 0: 2 (m / 2 pi beta)^{D/2} sum_n n^{-D/2} K_{D/2}(m n beta).
PressureTerm thermal_pressure(const CavityConfig& cfg, const SeriesControl& ctrl = {});

/// Gamma(D/2) zeta(D) / (pi^{D/2} beta^D); the mass is ignored.
PressureTerm thermal_pressure_massless(const CavityConfig& cfg);

/// Mixed term for m > 0. Uses the literal double Bessel sum when
/// m * min(L, beta) >= 1 and otherwise the Matsubara-resummed form, which
/// stays fast as m -> 0.
PressureTerm mixed_pressure(const CavityConfig& cfg, const SeriesControl& ctrl = {});

/// Literal double sum over n1, n2 >= 1 of
///   4 (m/2pi)^{D/2} [ r^{-D/2} ((1-D) n1^2 L^2 + n2^2 beta^2) / r^2 K_{D/2}(m r)
///                     - m n1^2 L^2 r^{-D/2-1} K_{D/2-1}(m r) ],
/// r^2 = n1^2 L^2 + n2^2 beta^2, summed on square shells.
PressureTerm mixed_pressure_direct(const CavityConfig& cfg, const SeriesControl& ctrl = {});

/// The mixed term with one lattice index Poisson-resummed: over Matsubara
/// frequencies 2 pi k / beta when L >= beta, over momenta 2 pi k / L otherwise.
PressureTerm mixed_pressure_resummed(const CavityConfig& cfg, const SeriesControl& ctrl = {});

/// Massless mixed term, D = 4 only:
///   -(2/pi^2) sum_{n1,n2>=1} (3 n1^2 L^2 - n2^2 beta^2) / (n1^2 L^2 + n2^2 beta^2)^3.
/// Uses the extrapolated double sum for aspect ratios up to 64 and the
/// resummed form beyond. Throws Error(unsupported_dimension) for D != 4.
PressureTerm mixed_pressure_massless(const CavityConfig& cfg, const SeriesControl& ctrl = {});

/// The double sum above, extrapolated on nested boxes.
PressureTerm mixed_pressure_massless_lattice(const CavityConfig& cfg, const SeriesControl& ctrl = {});

/// The m -> 0 limit of mixed_pressure_resummed, D = 4 only.
PressureTerm mixed_pressure_massless_resummed(const CavityConfig& cfg, const SeriesControl& ctrl = {});

/// All three components; massless closed forms are used when mass == 0.
/// Without beta, thermal and mixed are absent (exactly zero).
PressureReport total_pressure(const CavityConfig& cfg, const SeriesControl& ctrl = {});

enum class Field { scalar, electromagnetic };

/// Parallel Dirichlet plates at separation a: total_pressure at L = 2a, with
/// every component doubled for the electromagnetic field.
PressureReport dirichlet_pressure(double a, const CavityConfig& cfg, Field field,
                                  const SeriesControl& ctrl = {});

/// T_33(L, m) / T_33(L, 0) for the vacuum term at dimension cfg.dimension.
double normalized_vacuum_pressure(const CavityConfig& cfg, const SeriesControl& ctrl = {});

}  // namespace casimir
