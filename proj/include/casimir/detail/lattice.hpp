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

// Summation engines for lattice sums whose terms decay algebraically.
//
// Nested boxes [s, k a] x [s, k b] with k = k0, 2 k0, 4 k0, ... have partial
// sums S(k) = S + sum_j c_j k^{-(p + j)} whenever the summand is a finite
// sum of homogeneous pieces smooth away from the origin. A Richardson table
// on that exponent ladder removes the leading corrections; the change of the
// extrapolated value between successive levels is the error estimate.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "casimir/error.hpp"
#include "casimir/series.hpp"

namespace casimir::detail {

struct BoxShape {
  std::int64_t a = 1;  // extent multiplier along the first index
  std::int64_t b = 1;  // extent multiplier along the second index
};

/// Integer box proportions close to `ratio` = (extent along first index) /
/// (extent along second index).
inline BoxShape box_shape_for_ratio(double ratio) {
  BoxShape shape;
  if (ratio >= 1.0) {
    shape.a = std::max<std::int64_t>(1, std::llround(ratio));
  } else {
    shape.b = std::max<std::int64_t>(1, std::llround(1.0 / ratio));
  }
  return shape;
}

class RichardsonLadder {
 public:
  static constexpr int kCorrections = 3;

  explicit RichardsonLadder(double leading_exponent) {
    for (int j = 0; j < kCorrections; ++j) {
      factors_[j] = std::pow(2.0, leading_exponent + j) - 1.0;
    }
  }

  /// Adds the partial sum for the next (doubled) box size.
  void push(double partial_sum) {
    std::array<double, kCorrections + 1> row{};
    row[0] = partial_sum;
    const int depth = std::min<int>(static_cast<int>(rows_.size()), kCorrections);
    for (int j = 1; j <= depth; ++j) {
      row[j] = row[j - 1] + (row[j - 1] - rows_.back()[j - 1]) / factors_[j - 1];
    }
    for (int j = depth + 1; j <= kCorrections; ++j) row[j] = row[depth];
    rows_.push_back(row);
  }

  bool ready() const { return rows_.size() >= kCorrections + 2; }
  double estimate() const { return rows_.back()[kCorrections]; }
  double error() const {
    if (rows_.size() < 2) return HUGE_VAL;
    return std::abs(rows_.back()[kCorrections] - rows_[rows_.size() - 2][kCorrections]);
  }

 private:
  std::array<double, kCorrections> factors_{};
  std::vector<std::array<double, kCorrections + 1>> rows_;
};

inline constexpr std::int64_t kInitialBoxScale = 8;
inline constexpr std::int64_t kMaxLatticePoints = 600'000'000;
inline constexpr std::int64_t kMaxShellPoints = 40'000'000;

/// Extrapolated sum of term(n) for n = first, first+1, ... (term must decay
/// like n^{-(leading_exponent + 1)} with a regular asymptotic expansion).
template <class Term>
SeriesResult extrapolated_sum_1d(Term&& term, std::int64_t first, std::int64_t scale,
                                 double leading_exponent, const SeriesControl& ctrl,
                                 const char* what) {
  RichardsonLadder ladder(leading_exponent);
  CompensatedSum sum;
  std::int64_t done = first - 1;
  for (std::int64_t k = kInitialBoxScale;; k *= 2) {
    const std::int64_t upper = k * scale;
    if (upper > ctrl.max_terms) {
      fail(ErrorKind::budget, std::string(what) + ": index budget exhausted before tolerance (error estimate " +
                                  std::to_string(ladder.error()) + ")");
    }
    for (std::int64_t n = done + 1; n <= upper; ++n) sum.add(term(n));
    done = upper;
    ladder.push(sum.value());
    if (ladder.ready() && ladder.error() <= ctrl.tolerance_for(ladder.estimate())) {
      return {ladder.estimate(), done - first + 1, ladder.error(), false};
    }
  }
}

/// Extrapolated sum of term(n1, n2) over n1, n2 >= first, using boxes
/// [first, k a] x [first, k b].
template <class Term>
SeriesResult extrapolated_sum_2d(Term&& term, std::int64_t first, BoxShape shape,
                                 double leading_exponent, const SeriesControl& ctrl,
                                 const char* what) {
  RichardsonLadder ladder(leading_exponent);
  CompensatedSum sum;
  auto add_rect = [&](std::int64_t x0, std::int64_t x1, std::int64_t y0, std::int64_t y1) {
    for (std::int64_t n1 = x0; n1 <= x1; ++n1) {
      CompensatedSum row;
      for (std::int64_t n2 = y0; n2 <= y1; ++n2) row.add(term(n1, n2));
      sum.add(row.value());
    }
  };
  std::int64_t done_a = first - 1;
  std::int64_t done_b = first - 1;
  std::int64_t points = 0;
  for (std::int64_t k = kInitialBoxScale;; k *= 2) {
    const std::int64_t upper_a = k * shape.a;
    const std::int64_t upper_b = k * shape.b;
    const std::int64_t box_points = (upper_a - first + 1) * (upper_b - first + 1);
    if (std::max(upper_a, upper_b) > ctrl.max_terms || box_points > kMaxLatticePoints) {
      fail(ErrorKind::budget, std::string(what) + ": index budget exhausted before tolerance (error estimate " +
                                  std::to_string(ladder.error()) + ")");
    }
    // New region: [first, upper_a] x [first, upper_b] minus the previous box.
    add_rect(first, done_a, done_b + 1, upper_b);
    add_rect(done_a + 1, upper_a, first, upper_b);
    done_a = upper_a;
    done_b = upper_b;
    points = box_points;
    ladder.push(sum.value());
    if (ladder.ready() && ladder.error() <= ctrl.tolerance_for(ladder.estimate())) {
      return {ladder.estimate(), points, ladder.error(), false};
    }
  }
}

/// Sum of an exponentially decaying term(n1, n2) over n1, n2 >= 1 by square
/// shells max(n1, n2) = k. tail(k) must bound the sum over all shells beyond k.
template <class Term, class Tail>
SeriesResult shell_sum_2d(Term&& term, Tail&& tail, const SeriesControl& ctrl, const char* what) {
  CompensatedSum sum;
  std::int64_t points = 0;
  for (std::int64_t k = 1;; ++k) {
    if (k > ctrl.max_terms || points + 2 * k - 1 > kMaxShellPoints) {
      fail(ErrorKind::budget, std::string(what) + ": shell budget exhausted before tolerance");
    }
    CompensatedSum shell;
    for (std::int64_t j = 1; j < k; ++j) {
      shell.add(term(k, j));
      shell.add(term(j, k));
    }
    shell.add(term(k, k));
    sum.add(shell.value());
    points += 2 * k - 1;
    if (k >= 3) {
      const double bound = tail(k);
      if (bound <= ctrl.tolerance_for(sum.value())) {
        return {sum.value(), points, bound, false};
      }
    }
  }
}

}  // namespace casimir::detail
