#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pat/deterioration.hpp"
#include "pat/dominance.hpp"
#include "pat/oracle.hpp"
#include "pat/patience.hpp"

namespace pat::oracle {

// The verification suites behind `verify`: each one replays a
// characterization against its definitional oracle on a seeded instance
// stream and reports counts plus the first violation. A violation anywhere is
// a hard failure, never a statistic. Reports contain no timing data, so a
// given TrialConfig reproduces a report byte for byte.

struct SuiteOutcome {
  std::string name;
  bool pass = true;
  std::uint64_t checked = 0;    // top-level instances (pairs, triples, ...)
  std::uint64_t instances = 0;  // definitional instances sampled inside
  std::string detail;           // first violation, when any
};

namespace detail_suite {

inline void fail(SuiteOutcome& outcome, const std::string& what) {
  outcome.pass = false;
  if (outcome.detail.empty()) outcome.detail = what;
}

inline std::string describe(const PrizeSequence& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.horizon(); ++i) {
    if (i) out += ",";
    out += to_string(s.values()[i]);
  }
  return out + ")";
}

inline std::string describe(const DiscountSequence& s) {
  return detail_enum::describe(s);
}

/// A pair that is patient by construction: shrink every gap of beta by a
/// common factor, keeping the first element. Used to exercise the holding
/// direction, which random pairs rarely hit.
inline DiscountSequence shrink_gaps(const DiscountSequence& beta, const Rational& factor) {
  std::vector<Rational> v;
  v.reserve(beta.horizon());
  const Rational& head = beta.values()[0];
  for (const auto& b : beta.values()) v.push_back(head - factor * (head - b));
  return DiscountSequence(std::move(v));
}

}  // namespace detail_suite

/// Superiority vs dominance on mixed signed/dominating pairs, with the
/// summation-by-parts identity and the tightening construction checked along
/// the way.
inline SuiteOutcome dominance_suite(const TrialConfig& config,
                                    std::size_t weights_per_pair = 200) {
  SuiteOutcome outcome;
  outcome.name = "dominance";
  SplitMix64 rng(config.seed);
  for (std::size_t trial = 0; trial < config.trials; ++trial) {
    std::size_t T = 1 + rng.below(config.horizon_max);
    PrizeSequence x = PrizeSequence::zeros(T), y = PrizeSequence::zeros(T);
    if (trial % 2 == 0) {
      x = random_signed_prize_sequence(T, rng, config.grid_denominator);
      y = random_signed_prize_sequence(T, rng, config.grid_denominator);
    } else {
      auto pair = random_dominating_pair(T, rng, config.grid_denominator);
      x = pair.first;
      y = pair.second;
    }
    ++outcome.checked;
    auto describe_pair = [&] {
      return "x=" + detail_suite::describe(x) + " y=" + detail_suite::describe(y);
    };

    DominanceVerdict verdict = dominates(x, y);
    TrialConfig sub{rng.next(), weights_per_pair, T, config.grid_denominator};
    OracleResult oracle = run_superiority_oracle(x, y, sub);
    outcome.instances += oracle.instances;
    if (oracle.ok != verdict.holds)
      detail_suite::fail(outcome, "oracle disagrees with dominates at " + describe_pair());
    if (!verdict.holds) {
      if (weighted_sum(*verdict.witness_weights, x) >= weighted_sum(*verdict.witness_weights, y))
        detail_suite::fail(outcome, "step witness not strict at " + describe_pair());
      // failure_index must be the least violating prefix
      Rational gap = 0;
      for (std::size_t p = 1; p <= T; ++p) {
        gap += x.values()[p - 1] - y.values()[p - 1];
        if (p < *verdict.failure_index && gap < 0)
          detail_suite::fail(outcome, "failure index not minimal at " + describe_pair());
        if (p == *verdict.failure_index && gap >= 0)
          detail_suite::fail(outcome, "failure index not violating at " + describe_pair());
      }
    }
    if (pointwise_dominates(x, y) && !verdict.holds)
      detail_suite::fail(outcome, "pointwise dominance without dominance at " + describe_pair());

    Rational direct = 0;
    for (std::size_t i = 0; i < T; ++i) direct += x.values()[i] * y.values()[i];
    if (abel_sum(x, y) != direct)
      detail_suite::fail(outcome, "summation by parts mismatch at " + describe_pair());

    if (verdict.holds) {
      PrizeSequence trimmed = tighten(x, y);
      if (!pointwise_dominates(x, trimmed))
        detail_suite::fail(outcome, "tighten exceeds x at " + describe_pair());
      if (trimmed.total() != y.total())
        detail_suite::fail(outcome, "tighten total mismatch at " + describe_pair());
      if (!dominates(trimmed, y).holds)
        detail_suite::fail(outcome, "tighten loses dominance at " + describe_pair());
      for (int i = 0; i < 3; ++i) {
        WeightSequence w = random_weight_sequence(T, rng, config.grid_denominator);
        ++outcome.instances;
        if (weighted_sum(w, x) < weighted_sum(w, trimmed) ||
            weighted_sum(w, trimmed) < weighted_sum(w, y))
          detail_suite::fail(outcome, "tighten sandwich fails at " + describe_pair());
      }
    }
  }
  return outcome;
}

/// Serenity characterization vs the definitional oracle, plus the collapse
/// under equal first elements on an exhaustive three-period grid.
inline SuiteOutcome serenity_suite(const TrialConfig& config) {
  SuiteOutcome outcome;
  outcome.name = "serenity";
  SplitMix64 rng(config.seed);
  for (std::size_t trial = 0; trial < config.trials; ++trial) {
    std::size_t T = 1 + rng.below(config.horizon_max);
    DiscountSequence alpha = random_discount_sequence(T, rng, config.grid_denominator);
    DiscountSequence beta = random_discount_sequence(T, rng, config.grid_denominator);
    if (trial % 3 == 0) {
      // serene by construction: beta = alpha + a decreasing nonnegative bump
      WeightSequence bump = random_weight_sequence(T, rng, config.grid_denominator);
      std::vector<Rational> v = alpha.values();
      for (std::size_t i = 0; i < T; ++i) v[i] += bump.values()[i];
      beta = DiscountSequence(std::move(v));
    }
    ++outcome.checked;
    PatienceVerdict verdict = is_more_serene(alpha, beta);
    TrialConfig sub{rng.next(), config.trials >= 64 ? 64 : config.trials, T,
                    config.grid_denominator};
    OracleResult oracle = run_serenity_oracle(alpha, beta, sub);
    outcome.instances += oracle.instances;
    if (oracle.ok != verdict.holds)
      detail_suite::fail(outcome, "oracle disagrees with is_more_serene at alpha=" +
                                      detail_suite::describe(alpha) +
                                      " beta=" + detail_suite::describe(beta));
    if (!verdict.holds &&
        verdict.diagnostics->alpha_gain <= verdict.diagnostics->beta_gain)
      detail_suite::fail(outcome, "serenity witness not strict at alpha=" +
                                      detail_suite::describe(alpha) +
                                      " beta=" + detail_suite::describe(beta));
  }

  // equal first elements force equality
  auto grid = detail_enum::enumerate_discount_grid(3, 3);
  for (const auto& alpha : grid)
    for (const auto& beta : grid) {
      if (alpha.at(1) != beta.at(1)) continue;
      ++outcome.checked;
      bool serene = is_more_serene(alpha, beta).holds;
      if (serene != (alpha == beta))
        detail_suite::fail(outcome, "serenity collapse fails at alpha=" +
                                        detail_suite::describe(alpha) +
                                        " beta=" + detail_suite::describe(beta));
    }
  return outcome;
}

/// Patience characterization vs the definitional oracle, the counterexample
/// constructor, the companion predicates, and deterioration-chain traces.
inline SuiteOutcome patience_suite(const TrialConfig& config,
                                   std::size_t per_pair_budget = 2000) {
  SuiteOutcome outcome;
  outcome.name = "patience";
  SplitMix64 rng(config.seed);
  for (std::size_t trial = 0; trial < config.trials; ++trial) {
    std::size_t T = 2 + rng.below(std::max<std::size_t>(config.horizon_max, 2) - 1);
    DiscountSequence beta = random_discount_sequence(T, rng, config.grid_denominator);
    DiscountSequence alpha = beta;
    switch (rng.below(3)) {
      case 0:  // patient by construction
        alpha = detail_suite::shrink_gaps(
            beta, Rational(static_cast<long long>(rng.below(config.grid_denominator + 1)),
                           static_cast<long long>(config.grid_denominator)));
        break;
      case 1:  // identical
        break;
      default:
        alpha = random_discount_sequence(T, rng, config.grid_denominator);
    }
    ++outcome.checked;
    auto describe_pair = [&] {
      return "alpha=" + detail_suite::describe(alpha) + " beta=" + detail_suite::describe(beta);
    };

    PatienceVerdict verdict = is_more_patient(alpha, beta);
    TrialConfig sub{rng.next(), per_pair_budget, T, config.grid_denominator};
    OracleResult oracle = run_patience_oracle(alpha, beta, sub);
    outcome.instances += oracle.instances;
    if (oracle.ok != verdict.holds)
      detail_suite::fail(outcome, "oracle disagrees with is_more_patient at " + describe_pair());

    if (!verdict.holds) {
      // the verdict's witness must itself evaluate to a strict violation
      PatienceEvaluation eval =
          evaluate_patience_instance(alpha, beta, verdict.witness->x, verdict.witness->y);
      if (eval.holds || eval.gap <= 0)
        detail_suite::fail(outcome, "counterexample not strict at " + describe_pair());
    }
    if (verdict.holds && !monotone_ratio_check(alpha, beta))
      detail_suite::fail(outcome, "patience without monotone ratio at " + describe_pair());
    if (T == 2 && verdict.holds != two_period_check(alpha, beta))
      detail_suite::fail(outcome, "two-period check disagrees at " + describe_pair());
    if (alpha.at(1) == beta.at(1)) {
      bool gap_dominance = true;  // beta gaps >= alpha gaps, the equal-head form
      for (std::size_t t = 1; t + 1 <= T; ++t)
        if (beta.at(t) - beta.at(t + 1) < alpha.at(t) - alpha.at(t + 1)) gap_dominance = false;
      if (gap_dominance != verdict.holds)
        detail_suite::fail(outcome, "equal-head gap form disagrees at " + describe_pair());
    }
    GapRatioReport report = gap_ratio_report(alpha, beta);
    bool all_conditions = true;
    for (bool c : report.adjacent_condition) all_conditions = all_conditions && c;
    if (all_conditions != verdict.holds)
      detail_suite::fail(outcome, "gap report disagrees at " + describe_pair());

    // deterioration chains: fold-back exactness and trace direction
    auto [x, y] = random_dominating_pair(T, rng, config.grid_denominator);
    DeteriorationChain chain = decompose(x, y);
    ++outcome.instances;
    if (!(chain_end(chain) == y))
      detail_suite::fail(outcome, "chain does not reach y at " + describe_pair());
    if (verdict.holds && x.total() != 0) {
      auto trace = ratio_trace(alpha, beta, chain);
      for (std::size_t i = 0; i + 1 < trace.size(); ++i)
        if (trace[i] < trace[i + 1])
          detail_suite::fail(outcome, "trace increases under patience at " + describe_pair());
    }
    if (!verdict.holds) {
      auto witness_chain = decompose(verdict.witness->x, verdict.witness->y);
      auto trace = ratio_trace(alpha, beta, witness_chain);
      bool increases = false;
      for (std::size_t i = 0; i + 1 < trace.size(); ++i)
        if (trace[i] < trace[i + 1]) increases = true;
      if (!increases)
        detail_suite::fail(outcome, "witness chain trace never increases at " + describe_pair());
    }
  }
  return outcome;
}

inline SuiteOutcome relation_suite(const TrialConfig& config) {
  RelationCheck check = relation_property_suite(config);
  SuiteOutcome outcome;
  outcome.name = "relation";
  outcome.pass = check.ok;
  outcome.checked = check.reflexivity_checked + check.antisymmetry_checked;
  outcome.instances = check.transitivity_checked;
  outcome.detail = check.first_violation;
  return outcome;
}

struct VerifyReport {
  std::string rng_algorithm = "splitmix64";
  TrialConfig config;
  std::vector<SuiteOutcome> suites;
  bool pass = true;
};

/// suites: any of "dominance", "serenity", "patience", "relation", or "all".
inline VerifyReport run_verify(const TrialConfig& config, const std::string& suite) {
  VerifyReport report;
  report.config = config;
  bool all = suite == "all";
  if (all || suite == "dominance") report.suites.push_back(dominance_suite(config));
  if (all || suite == "serenity") report.suites.push_back(serenity_suite(config));
  if (all || suite == "patience") report.suites.push_back(patience_suite(config));
  if (all || suite == "relation") report.suites.push_back(relation_suite(config));
  if (report.suites.empty())
    throw std::invalid_argument("unknown suite '" + suite +
                                "' (expected dominance|serenity|patience|relation|all)");
  for (const auto& s : report.suites) report.pass = report.pass && s.pass;
  return report;
}

}  // namespace pat::oracle
