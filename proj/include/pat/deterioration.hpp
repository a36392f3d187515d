#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "pat/dominance.hpp"
#include "pat/sequences.hpp"

namespace pat {

/// One binary deterioration: move amount > 0 from period from_index to the
/// later period to_index (both 1-based). Defined on positive sequences.
struct DeteriorationStep {
  std::size_t from_index = 0;
  std::size_t to_index = 0;
  Rational amount;
};

/// A chain start = z^0, z^1, ..., z^k where each z^{i+1} applies steps[i].
/// Applying the steps in order deteriorates start one transfer at a time;
/// totals are preserved and every prefix dominates every later sequence.
struct DeteriorationChain {
  PrizeSequence start;
  std::vector<DeteriorationStep> steps;
};

inline PrizeSequence apply_step(const PrizeSequence& x, const DeteriorationStep& step) {
  const std::size_t T = x.horizon();
  if (step.from_index < 1 || step.from_index >= step.to_index || step.to_index > T)
    throw std::invalid_argument("deterioration step: indices must satisfy 1 <= t1 < t2 <= T");
  if (step.amount <= 0)
    throw std::invalid_argument("deterioration step: amount must be strictly positive");
  if (!x.is_positive())
    throw std::invalid_argument("deterioration step: sequence must be positive");
  if (step.amount > x.at(step.from_index))
    throw std::invalid_argument("deterioration step: amount exceeds the prize at t1");
  std::vector<Rational> v = x.values();
  v[step.from_index - 1] -= step.amount;
  v[step.to_index - 1] += step.amount;
  return PrizeSequence(std::move(v));
}

/// All sequences along the chain: start, then one entry per applied step.
inline std::vector<PrizeSequence> chain_sequences(const DeteriorationChain& chain) {
  std::vector<PrizeSequence> seqs;
  seqs.reserve(chain.steps.size() + 1);
  seqs.push_back(chain.start);
  for (const auto& step : chain.steps) seqs.push_back(apply_step(seqs.back(), step));
  return seqs;
}

inline PrizeSequence chain_end(const DeteriorationChain& chain) {
  PrizeSequence cur = chain.start;
  for (const auto& step : chain.steps) cur = apply_step(cur, step);
  return cur;
}

/// Decomposes a positive, equal-sum, dominating pair into binary
/// deteriorations, greedily: t1 = first differing period (there x > y),
/// t2 = first period with x < y, and the transfer closes the smaller of the
/// two gaps. Applying the steps to x yields exactly y; the chain has at most
/// one step per differing period.
inline DeteriorationChain decompose(const PrizeSequence& x, const PrizeSequence& y) {
  detail::require_equal_horizons(x.horizon(), y.horizon());
  if (!x.is_positive() || !y.is_positive())
    throw std::invalid_argument("decompose: sequences must be positive");
  if (x.total() != y.total())
    throw std::invalid_argument("decompose: totals must be equal");
  if (!dominates(x, y).holds)
    throw std::invalid_argument("decompose: x does not dominate y");

  const std::size_t T = x.horizon();
  std::vector<Rational> cur = x.values();
  std::vector<DeteriorationStep> steps;
  while (true) {
    std::size_t t1 = T;
    for (std::size_t i = 0; i < T; ++i)
      if (cur[i] != y.values()[i]) {
        t1 = i;
        break;
      }
    if (t1 == T) break;  // reached y
    std::size_t t2 = T;
    for (std::size_t i = t1 + 1; i < T; ++i)
      if (cur[i] < y.values()[i]) {
        t2 = i;
        break;
      }
    if (cur[t1] <= y.values()[t1] || t2 == T || steps.size() >= T)
      throw std::logic_error("decompose: greedy invariant broken");
    Rational surplus = cur[t1] - y.values()[t1];
    Rational deficit = y.values()[t2] - cur[t2];
    Rational amount = surplus <= deficit ? surplus : deficit;
    cur[t1] -= amount;
    cur[t2] += amount;
    steps.push_back(DeteriorationStep{t1 + 1, t2 + 1, amount});
  }
  return DeteriorationChain{x, std::move(steps)};
}

/// The ratio (beta . z) / (alpha . z) for every sequence z along the chain.
/// When the alpha-agent is more patient than the beta-agent this trace is
/// weakly decreasing along every deterioration chain; a strict increase
/// anywhere certifies that patience fails.
inline std::vector<Rational> ratio_trace(const DiscountSequence& alpha,
                                         const DiscountSequence& beta,
                                         const DeteriorationChain& chain) {
  detail::require_equal_horizons(alpha.horizon(), beta.horizon());
  detail::require_equal_horizons(alpha.horizon(), chain.start.horizon());
  std::vector<Rational> trace;
  trace.reserve(chain.steps.size() + 1);
  for (const auto& z : chain_sequences(chain)) {
    Rational denom = weighted_sum(alpha, z);
    if (denom == 0)
      throw std::invalid_argument("ratio_trace: zero discounted sum along the chain");
    trace.push_back(weighted_sum(beta, z) / denom);
  }
  return trace;
}

}  // namespace pat
