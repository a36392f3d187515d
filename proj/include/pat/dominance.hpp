#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "pat/sequences.hpp"

namespace pat {

// Three orders on prize sequences and their certificates:
//  * pointwise dominance: x_t >= y_t at every period;
//  * dominance (the partial-sum order): sum_{t<=p} x_t >= sum_{t<=p} y_t for
//    every p;
//  * superiority: every weight sequence weakly prefers x, which coincides
//    with the partial-sum order, so both share one verdict type.
struct DominanceVerdict {
  bool holds = true;
  /// Least p (1-based) with a strictly smaller partial sum, when !holds.
  std::optional<std::size_t> failure_index;
  /// Step weights (1,...,1,0,...,0) with failure_index ones; they give a
  /// strict weighted-sum violation.
  std::optional<WeightSequence> witness_weights;
};

inline bool pointwise_dominates(const PrizeSequence& x, const PrizeSequence& y) {
  detail::require_equal_horizons(x.horizon(), y.horizon());
  for (std::size_t i = 0; i < x.horizon(); ++i)
    if (x.values()[i] < y.values()[i]) return false;
  return true;
}

inline DominanceVerdict dominates(const PrizeSequence& x, const PrizeSequence& y) {
  detail::require_equal_horizons(x.horizon(), y.horizon());
  Rational gap = 0;  // running partial sum of x - y
  for (std::size_t i = 0; i < x.horizon(); ++i) {
    gap += x.values()[i] - y.values()[i];
    if (gap < 0) {
      std::size_t p = i + 1;
      return DominanceVerdict{false, p, WeightSequence::step(x.horizon(), p)};
    }
  }
  return DominanceVerdict{};
}

/// Same verdict as dominates(): x is weakly preferred by every nonnegative
/// decreasing weight sequence exactly when every partial sum of x weakly
/// exceeds the corresponding partial sum of y. On failure the verdict's step
/// weights witness a strict weighted-sum violation.
inline DominanceVerdict is_superior(const PrizeSequence& x, const PrizeSequence& y) {
  return dominates(x, y);
}

/// Summation by parts: sum a_t b_t computed as
/// sum_{t<T} A_t (b_t - b_{t+1}) + A_T b_T with A_k the prefix sums of a.
/// Equals the direct inner product exactly; kept as a second algebraic route.
inline Rational abel_sum(const PrizeSequence& a, const PrizeSequence& b) {
  detail::require_equal_horizons(a.horizon(), b.horizon());
  const std::size_t T = a.horizon();
  Rational prefix = 0;
  Rational sum = 0;
  for (std::size_t i = 0; i + 1 < T; ++i) {
    prefix += a.values()[i];
    sum += prefix * (b.values()[i] - b.values()[i + 1]);
  }
  prefix += a.values()[T - 1];
  sum += prefix * b.values()[T - 1];
  return sum;
}

/// Trims a dominating x down to a sequence with the same total as y while
/// keeping x_t >= x~_t pointwise and every partial sum of x~ above y's.
/// Construction: s_t = min_{k >= t} sum_{i<=k}(x_i - y_i), s_0 = 0,
/// x~_t = x_t - (s_t - s_{t-1}).
inline PrizeSequence tighten(const PrizeSequence& x, const PrizeSequence& y) {
  if (!dominates(x, y).holds)
    throw std::invalid_argument("tighten: x does not dominate y");
  const std::size_t T = x.horizon();

  std::vector<Rational> gap(T);  // gap[p] = sum_{i<=p+1} (x_i - y_i)
  Rational run = 0;
  for (std::size_t i = 0; i < T; ++i) {
    run += x.values()[i] - y.values()[i];
    gap[i] = run;
  }
  std::vector<Rational> floor(T);  // floor[t] = min of gap from t onward
  floor[T - 1] = gap[T - 1];
  for (std::size_t i = T - 1; i-- > 0;) floor[i] = std::min(gap[i], floor[i + 1]);

  std::vector<Rational> trimmed(T);
  Rational prev_floor = 0;
  for (std::size_t i = 0; i < T; ++i) {
    trimmed[i] = x.values()[i] - (floor[i] - prev_floor);
    prev_floor = floor[i];
  }
  return PrizeSequence(std::move(trimmed));
}

}  // namespace pat
