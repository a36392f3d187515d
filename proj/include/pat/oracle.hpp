#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pat/deterioration.hpp"
#include "pat/dominance.hpp"
#include "pat/patience.hpp"
#include "pat/sequences.hpp"

namespace pat::oracle {

// Brute-force oracles that re-check every characterization against its
// definition, plus the seeded generators they sample from. The oracles never
// call the characterizations they validate: superiority is probed with
// weight sequences, patience and serenity with explicit instance pairs.

struct TrialConfig {
  std::uint64_t seed = 0;
  std::size_t trials = 1000;
  std::size_t horizon_max = 6;
  std::uint64_t grid_denominator = 6;
};

/// value expressed in grid units, for grid-valued nonnegative inputs.
inline std::uint64_t grid_units(const Rational& value, std::uint64_t denominator) {
  Rational scaled = value * Rational(static_cast<long long>(denominator));
  BigInt units = numerator(scaled);
  return units.convert_to<std::uint64_t>();
}

/// splitmix64: the fixed, portable PRNG behind every randomized suite.
/// Bounded draws use plain modulo so any implementation of the same stream
/// reproduces the instances bit for bit.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform-ish draw in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

// ---------------------------------------------------------------------------
// Generators. Entries live on the grid k/denominator, which keeps rationals
// small and makes small-horizon exhaustive enumeration feasible. Sorting
// i.i.d. grid draws descending produces ties and zero tails with positive
// probability.

inline WeightSequence random_weight_sequence(std::size_t T, SplitMix64& rng,
                                             std::uint64_t denominator) {
  std::vector<Rational> v;
  v.reserve(T);
  for (std::size_t i = 0; i < T; ++i)
    v.emplace_back(static_cast<long long>(rng.below(denominator + 1)),
                   static_cast<long long>(denominator));
  std::sort(v.begin(), v.end(), std::greater<>());
  return WeightSequence(std::move(v));
}

inline WeightSequence random_weight_sequence(std::size_t T, const TrialConfig& config) {
  SplitMix64 rng(config.seed);
  return random_weight_sequence(T, rng, config.grid_denominator);
}

inline DiscountSequence random_discount_sequence(std::size_t T, SplitMix64& rng,
                                                 std::uint64_t denominator) {
  std::vector<Rational> v;
  v.reserve(T);
  for (std::size_t i = 0; i < T; ++i)
    v.emplace_back(static_cast<long long>(1 + rng.below(denominator)),
                   static_cast<long long>(denominator));
  std::sort(v.begin(), v.end(), std::greater<>());
  return DiscountSequence(std::move(v));
}

inline PrizeSequence random_positive_prize_sequence(std::size_t T, SplitMix64& rng,
                                                    std::uint64_t denominator) {
  std::vector<Rational> v;
  v.reserve(T);
  for (std::size_t i = 0; i < T; ++i)
    v.emplace_back(static_cast<long long>(rng.below(denominator + 1)),
                   static_cast<long long>(denominator));
  return PrizeSequence(std::move(v));
}

inline PrizeSequence random_signed_prize_sequence(std::size_t T, SplitMix64& rng,
                                                  std::uint64_t denominator) {
  std::vector<Rational> v;
  v.reserve(T);
  for (std::size_t i = 0; i < T; ++i)
    v.emplace_back(static_cast<long long>(rng.below(2 * denominator + 1)) -
                       static_cast<long long>(denominator),
                   static_cast<long long>(denominator));
  return PrizeSequence(std::move(v));
}

/// Positive, equal-sum pair with x dominating y, built by drawing y and
/// undoing random deteriorations (mass moves from later to earlier periods).
inline std::pair<PrizeSequence, PrizeSequence> random_dominating_pair(
    std::size_t T, SplitMix64& rng, std::uint64_t denominator) {
  PrizeSequence y = random_positive_prize_sequence(T, rng, denominator);
  std::vector<Rational> cur = y.values();
  if (T >= 2) {
    std::size_t moves = rng.below(T + 1);
    for (std::size_t m = 0; m < moves; ++m) {
      std::size_t from = 2 + rng.below(T - 1);   // 2..T, 1-based
      std::size_t to = 1 + rng.below(from - 1);  // 1..from-1
      std::uint64_t units = grid_units(cur[from - 1], denominator);
      if (units == 0) continue;
      Rational amount(static_cast<long long>(1 + rng.below(units)),
                      static_cast<long long>(denominator));
      cur[from - 1] -= amount;
      cur[to - 1] += amount;
    }
  }
  return {PrizeSequence(std::move(cur)), std::move(y)};
}

inline std::pair<PrizeSequence, PrizeSequence> random_dominating_pair(
    std::size_t T, const TrialConfig& config) {
  SplitMix64 rng(config.seed);
  return random_dominating_pair(T, rng, config.grid_denominator);
}

/// Signed pair with x dominating y, generated through its prefix-gap profile;
/// the final gap is forced to zero half the time, so equal-sum pairs appear
/// with probability 1/2.
inline std::pair<PrizeSequence, PrizeSequence> random_signed_dominating_pair(
    std::size_t T, SplitMix64& rng, std::uint64_t denominator) {
  PrizeSequence y = random_signed_prize_sequence(T, rng, denominator);
  std::vector<Rational> x = y.values();
  Rational prev_gap = 0;
  bool equal_sums = rng.below(2) == 0;
  for (std::size_t i = 0; i < T; ++i) {
    Rational gap(static_cast<long long>(rng.below(denominator + 1)),
                 static_cast<long long>(denominator));
    if (i + 1 == T && equal_sums) gap = 0;
    x[i] += gap - prev_gap;
    prev_gap = gap;
  }
  return {PrizeSequence(std::move(x)), std::move(y)};
}

// ---------------------------------------------------------------------------
// Oracle runs.

struct OracleViolation {
  std::string family;  // which instance family produced it
  PrizeSequence x;
  PrizeSequence y;
  std::optional<WeightSequence> weights;
};

struct OracleResult {
  bool ok = true;
  std::uint64_t instances = 0;
  std::optional<OracleViolation> first_violation;
};

/// Samples the superiority quantifier class directly: all T step sequences
/// (they witness every dominance failure exactly), then config.trials random
/// weight sequences. True iff no sampled weights strictly prefer y.
inline OracleResult run_superiority_oracle(const PrizeSequence& x, const PrizeSequence& y,
                                           const TrialConfig& config) {
  detail::require_equal_horizons(x.horizon(), y.horizon());
  OracleResult result;
  auto check = [&](const WeightSequence& w, const char* family) {
    ++result.instances;
    if (weighted_sum(w, x) < weighted_sum(w, y) && !result.first_violation) {
      result.ok = false;
      result.first_violation = OracleViolation{family, x, y, w};
    }
  };
  for (std::size_t p = 1; p <= x.horizon(); ++p)
    check(WeightSequence::step(x.horizon(), p), "step");
  SplitMix64 rng(config.seed);
  for (std::size_t i = 0; i < config.trials; ++i)
    check(random_weight_sequence(x.horizon(), rng, config.grid_denominator), "random");
  return result;
}

inline bool superiority_oracle(const PrizeSequence& x, const PrizeSequence& y,
                               const TrialConfig& config) {
  return run_superiority_oracle(x, y, config).ok;
}

/// Samples the patience definition. Instance families:
///  (c) structured shapes from the contraposition proofs: every adjacent unit
///      swap, and x = e_1 + eta e_k vs y = e_1 + eta e_{k+1} with eta on the
///      grid plus the proof's interval midpoint where it exists — these make
///      the oracle exact in the failing direction;
///  (b) every binary deterioration (k, s, eta on the grid) of sampled
///      grid-valued positive sequences;
///  (a) random dominating pairs.
/// Families (b) and (a) are interleaved until config.trials instances ran.
/// Instances with a zero-value y are skipped (excluded by the definition).
inline OracleResult run_patience_oracle(const DiscountSequence& alpha,
                                        const DiscountSequence& beta,
                                        const TrialConfig& config) {
  detail::require_equal_horizons(alpha.horizon(), beta.horizon());
  const std::size_t T = alpha.horizon();
  const std::uint64_t g = config.grid_denominator;
  OracleResult result;

  auto check = [&](const PrizeSequence& x, const PrizeSequence& y, const char* family) {
    if (y.total() == 0) return;  // alpha.y = 0: excluded instance
    ++result.instances;
    // Definitional inequality, cross-multiplied (denominators positive).
    Rational lhs = weighted_sum(alpha, x) * weighted_sum(beta, y);
    Rational rhs = weighted_sum(beta, x) * weighted_sum(alpha, y);
    if (lhs > rhs && !result.first_violation) {
      result.ok = false;
      result.first_violation = OracleViolation{family, x, y, std::nullopt};
    }
  };

  // (c) structured witnesses.
  for (std::size_t t = 1; t + 1 <= T; ++t)
    check(PrizeSequence::unit(T, t), PrizeSequence::unit(T, t + 1), "swap");
  for (std::size_t k = 2; k + 1 <= T; ++k) {
    auto three_index = [&](const Rational& eta) {
      std::vector<Rational> xv(T, Rational(0)), yv(T, Rational(0));
      xv[0] = 1;
      yv[0] = 1;
      xv[k - 1] += eta;
      yv[k] += eta;
      check(PrizeSequence(std::move(xv)), PrizeSequence(std::move(yv)), "three-index");
    };
    for (std::uint64_t j = 1; j <= g; ++j)
      three_index(Rational(static_cast<long long>(j), static_cast<long long>(g)));
    Rational deficit = beta.at(1) * (alpha.at(k) - alpha.at(k + 1)) -
                       alpha.at(1) * (beta.at(k) - beta.at(k + 1));
    Rational cross = alpha.at(k + 1) * beta.at(k) - alpha.at(k) * beta.at(k + 1);
    if (deficit > 0 && cross > 0) three_index(deficit / (2 * cross));
  }

  // (b) + (a), interleaved deterministically until the budget is reached.
  SplitMix64 rng(config.seed);
  std::uint64_t guard = 0;
  while (result.instances < config.trials && ++guard < 100 * (config.trials + 1)) {
    PrizeSequence base = random_positive_prize_sequence(T, rng, g);
    for (std::size_t k = 1; k < T; ++k) {
      if (base.at(k) <= 0) continue;
      for (std::size_t s = k + 1; s <= T; ++s) {
        std::uint64_t units = grid_units(base.at(k), g);
        for (std::uint64_t j = 1; j <= units; ++j) {
          Rational eta(static_cast<long long>(j), static_cast<long long>(g));
          check(base, apply_step(base, DeteriorationStep{k, s, eta}), "deterioration");
        }
      }
    }
    auto [x, y] = random_dominating_pair(T, rng, g);
    check(x, y, "pair");
  }
  return result;
}

inline bool patience_oracle(const DiscountSequence& alpha, const DiscountSequence& beta,
                            const TrialConfig& config) {
  return run_patience_oracle(alpha, beta, config).ok;
}

/// Samples the serenity definition (signed pairs with x dominating y): the
/// two contraposition witness families — adjacent unit swaps and negative
/// units — then random signed dominating pairs. The witness families make the
/// oracle exact in the failing direction.
inline OracleResult run_serenity_oracle(const DiscountSequence& alpha,
                                        const DiscountSequence& beta,
                                        const TrialConfig& config) {
  detail::require_equal_horizons(alpha.horizon(), beta.horizon());
  const std::size_t T = alpha.horizon();
  OracleResult result;
  auto check = [&](const PrizeSequence& x, const PrizeSequence& y, const char* family) {
    ++result.instances;
    Rational alpha_gain = weighted_sum(alpha, x) - weighted_sum(alpha, y);
    Rational beta_gain = weighted_sum(beta, x) - weighted_sum(beta, y);
    if (alpha_gain > beta_gain && !result.first_violation) {
      result.ok = false;
      result.first_violation = OracleViolation{family, x, y, std::nullopt};
    }
  };
  for (std::size_t t = 1; t + 1 <= T; ++t)
    check(PrizeSequence::unit(T, t), PrizeSequence::unit(T, t + 1), "swap");
  for (std::size_t t = 1; t <= T; ++t) {
    std::vector<Rational> yv(T, Rational(0));
    yv[t - 1] = -1;
    check(PrizeSequence::zeros(T), PrizeSequence(std::move(yv)), "negative-unit");
  }
  SplitMix64 rng(config.seed);
  for (std::size_t i = 0; i < config.trials; ++i) {
    auto [x, y] = random_signed_dominating_pair(T, rng, config.grid_denominator);
    check(x, y, "pair");
  }
  return result;
}

inline bool serenity_oracle(const DiscountSequence& alpha, const DiscountSequence& beta,
                            const TrialConfig& config) {
  return run_serenity_oracle(alpha, beta, config).ok;
}

// ---------------------------------------------------------------------------
// Relation properties: reflexivity, transitivity, antisymmetry under equal
// first elements.

struct RelationCheck {
  std::uint64_t sequences = 0;
  std::uint64_t reflexivity_checked = 0;
  std::uint64_t antisymmetry_checked = 0;
  std::uint64_t transitivity_checked = 0;
  std::uint64_t violations = 0;
  std::string first_violation;
  bool ok = true;
};

namespace detail_enum {

/// All weakly decreasing sequences of length T over {1..den}/den.
inline std::vector<DiscountSequence> enumerate_discount_grid(std::size_t T,
                                                             std::uint64_t denominator) {
  std::vector<DiscountSequence> out;
  std::vector<Rational> cur;
  std::function<void(std::uint64_t)> rec = [&](std::uint64_t max_numer) {
    if (cur.size() == T) {
      out.emplace_back(cur);
      return;
    }
    for (std::uint64_t k = max_numer; k >= 1; --k) {
      cur.emplace_back(static_cast<long long>(k), static_cast<long long>(denominator));
      rec(k);
      cur.pop_back();
    }
  };
  rec(denominator);
  return out;
}

inline std::string describe(const DiscountSequence& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.horizon(); ++i) {
    if (i) out += ",";
    out += to_string(s.values()[i]);
  }
  return out + ")";
}

}  // namespace detail_enum

/// Exhaustive check over the full grid of discount sequences at one horizon.
/// Verdicts come from the adjacent-gap characterization alone (no witness
/// construction), so a few hundred sequences stay cheap.
inline RelationCheck exhaustive_relation_check(std::size_t T, std::uint64_t denominator) {
  auto grid = detail_enum::enumerate_discount_grid(T, denominator);
  const std::size_t n = grid.size();
  RelationCheck rep;
  rep.sequences = n;

  std::vector<std::vector<bool>> patient(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      patient[i][j] = !pat::detail::first_gap_violation(grid[i], grid[j]).has_value();

  auto violation = [&](const std::string& what) {
    ++rep.violations;
    rep.ok = false;
    if (rep.first_violation.empty()) rep.first_violation = what;
  };

  for (std::size_t i = 0; i < n; ++i) {
    ++rep.reflexivity_checked;
    if (!patient[i][i]) violation("reflexivity fails at " + detail_enum::describe(grid[i]));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || grid[i].at(1) != grid[j].at(1)) continue;
      ++rep.antisymmetry_checked;
      if (patient[i][j] && patient[j][i])
        violation("antisymmetry fails at " + detail_enum::describe(grid[i]) + " vs " +
                  detail_enum::describe(grid[j]));
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!patient[i][j]) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (!patient[j][k]) continue;
        ++rep.transitivity_checked;
        if (!patient[i][k])
          violation("transitivity fails at " + detail_enum::describe(grid[i]) + ", " +
                    detail_enum::describe(grid[j]) + ", " + detail_enum::describe(grid[k]));
      }
    }
  return rep;
}

/// Exhaustive small grids plus seeded random triples (raw and normalized to a
/// common first element, where the relation is denser).
inline RelationCheck relation_property_suite(const TrialConfig& config) {
  RelationCheck rep;
  auto merge = [&](const RelationCheck& part) {
    rep.sequences += part.sequences;
    rep.reflexivity_checked += part.reflexivity_checked;
    rep.antisymmetry_checked += part.antisymmetry_checked;
    rep.transitivity_checked += part.transitivity_checked;
    rep.violations += part.violations;
    if (rep.first_violation.empty()) rep.first_violation = part.first_violation;
    rep.ok = rep.ok && part.ok;
  };
  merge(exhaustive_relation_check(2, std::min<std::uint64_t>(config.grid_denominator, 6)));
  merge(exhaustive_relation_check(3, std::min<std::uint64_t>(config.grid_denominator, 3)));

  SplitMix64 rng(config.seed);
  auto patient = [](const DiscountSequence& a, const DiscountSequence& b) {
    return !pat::detail::first_gap_violation(a, b).has_value();
  };
  auto violation = [&](const std::string& what) {
    ++rep.violations;
    rep.ok = false;
    if (rep.first_violation.empty()) rep.first_violation = what;
  };
  for (std::size_t i = 0; i < config.trials; ++i) {
    std::size_t T = 2 + rng.below(std::max<std::size_t>(config.horizon_max, 2) - 1);
    std::vector<DiscountSequence> triple;
    bool normalize = rng.below(2) == 0;
    for (int s = 0; s < 3; ++s) {
      DiscountSequence d = random_discount_sequence(T, rng, config.grid_denominator);
      if (normalize) {
        std::vector<Rational> v = d.values();
        Rational head = v[0];
        for (auto& e : v) e /= head;
        d = DiscountSequence(std::move(v));
      }
      triple.push_back(std::move(d));
    }
    rep.sequences += 3;
    ++rep.reflexivity_checked;
    if (!patient(triple[0], triple[0]))
      violation("reflexivity fails at " + detail_enum::describe(triple[0]));
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        if (a == b) continue;
        if (triple[a].at(1) == triple[b].at(1) && !(triple[a] == triple[b])) {
          ++rep.antisymmetry_checked;
          if (patient(triple[a], triple[b]) && patient(triple[b], triple[a]))
            violation("antisymmetry fails at " + detail_enum::describe(triple[a]) + " vs " +
                      detail_enum::describe(triple[b]));
        }
        for (int c = 0; c < 3; ++c) {
          if (c == a || c == b) continue;
          if (patient(triple[a], triple[b]) && patient(triple[b], triple[c])) {
            ++rep.transitivity_checked;
            if (!patient(triple[a], triple[c]))
              violation("transitivity fails at " + detail_enum::describe(triple[a]) + ", " +
                        detail_enum::describe(triple[b]) + ", " +
                        detail_enum::describe(triple[c]));
          }
        }
      }
  }
  return rep;
}

}  // namespace pat::oracle
