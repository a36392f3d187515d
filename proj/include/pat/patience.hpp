#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "pat/dominance.hpp"
#include "pat/sequences.hpp"

namespace pat {

// Comparative patience and serenity between two discounters, alpha (Alice)
// and beta (Bob).
//
// Serenity: for any dominance improvement from y to x, Alice's discounted
// gain is weakly below Bob's. Characterization: beta - alpha is weakly
// decreasing and nonnegative.
//
// Patience: for any positive, equal-sum pair with x dominating y (and nonzero
// discounted sums), (alpha.x)/(alpha.y) <= (beta.x)/(beta.y).
// Characterization: every adjacent gap ratio (beta_t - beta_{t+1}) /
// (alpha_t - alpha_{t+1}) weakly exceeds beta_1/alpha_1. All checks below use
// the cross-multiplied, division-free form
//     alpha_1 (beta_t - beta_{t+1}) >= beta_1 (alpha_t - alpha_{t+1}),
// which also settles the 0/0 gap cases: a zero alpha-gap can never violate
// the condition. With one period the condition is vacuous and the relation
// holds.

struct WitnessPair {
  PrizeSequence x;
  PrizeSequence y;
};

/// Exact discounted sums at a witness, plus the derived ratios (patience
/// view, present when the denominators are nonzero) and gains (serenity
/// view).
struct VerdictDiagnostics {
  Rational alpha_x, alpha_y, beta_x, beta_y;
  Rational alpha_gain;  // alpha.x - alpha.y
  Rational beta_gain;   // beta.x - beta.y
  std::optional<Rational> alpha_ratio;  // (alpha.x)/(alpha.y)
  std::optional<Rational> beta_ratio;   // (beta.x)/(beta.y)
};

struct PatienceVerdict {
  bool holds = true;
  /// 1-based index where the characterization first fails.
  std::optional<std::size_t> failing_index;
  /// Verified violating pair; present whenever !holds.
  std::optional<WitnessPair> witness;
  std::optional<VerdictDiagnostics> diagnostics;
};

namespace detail {

inline VerdictDiagnostics make_diagnostics(const DiscountSequence& alpha,
                                           const DiscountSequence& beta,
                                           const WitnessPair& w) {
  VerdictDiagnostics d{weighted_sum(alpha, w.x), weighted_sum(alpha, w.y),
                       weighted_sum(beta, w.x),  weighted_sum(beta, w.y),
                       0,                        0,
                       std::nullopt,             std::nullopt};
  d.alpha_gain = d.alpha_x - d.alpha_y;
  d.beta_gain = d.beta_x - d.beta_y;
  if (d.alpha_y != 0) d.alpha_ratio = d.alpha_x / d.alpha_y;
  if (d.beta_y != 0) d.beta_ratio = d.beta_x / d.beta_y;
  return d;
}

/// Least t (1-based) with alpha_1 (beta_t - beta_{t+1}) < beta_1 (alpha_t -
/// alpha_{t+1}); nullopt when the patience condition holds everywhere.
inline std::optional<std::size_t> first_gap_violation(const DiscountSequence& alpha,
                                                      const DiscountSequence& beta) {
  const auto& a = alpha.values();
  const auto& b = beta.values();
  for (std::size_t i = 0; i + 1 < a.size(); ++i)
    if (a[0] * (b[i] - b[i + 1]) < b[0] * (a[i] - a[i + 1])) return i + 1;
  return std::nullopt;
}

/// Least t with alpha_t beta_{t+1} > alpha_{t+1} beta_t, i.e. where the
/// ratio alpha_t/beta_t fails to increase.
inline std::optional<std::size_t> first_ratio_violation(const DiscountSequence& alpha,
                                                        const DiscountSequence& beta) {
  const auto& a = alpha.values();
  const auto& b = beta.values();
  for (std::size_t i = 0; i + 1 < a.size(); ++i)
    if (a[i] * b[i + 1] > a[i + 1] * b[i]) return i + 1;
  return std::nullopt;
}

}  // namespace detail

/// Exact evaluation of one instance of the patience definition. All
/// preconditions are checked and reported individually.
struct PatienceEvaluation {
  Rational alpha_x, alpha_y, beta_x, beta_y;
  Rational alpha_ratio;  // (alpha.x)/(alpha.y)
  Rational beta_ratio;   // (beta.x)/(beta.y)
  /// Equivalent normalized comparison: (beta.y)/(alpha.y) <= (beta.x)/(alpha.x).
  Rational normalized_y;  // (beta.y)/(alpha.y)
  Rational normalized_x;  // (beta.x)/(alpha.x)
  Rational gap;           // alpha_ratio - beta_ratio; > 0 exactly on violation
  bool holds = true;
};

inline PatienceEvaluation evaluate_patience_instance(const DiscountSequence& alpha,
                                                     const DiscountSequence& beta,
                                                     const PrizeSequence& x,
                                                     const PrizeSequence& y) {
  detail::require_equal_horizons(alpha.horizon(), beta.horizon());
  detail::require_equal_horizons(alpha.horizon(), x.horizon());
  detail::require_equal_horizons(alpha.horizon(), y.horizon());
  if (!x.is_positive()) throw std::invalid_argument("patience instance: x must be positive");
  if (!y.is_positive()) throw std::invalid_argument("patience instance: y must be positive");
  if (x.total() != y.total())
    throw std::invalid_argument("patience instance: totals must be equal");
  if (!dominates(x, y).holds)
    throw std::invalid_argument("patience instance: x must dominate y");

  PatienceEvaluation eval;
  eval.alpha_x = weighted_sum(alpha, x);
  eval.alpha_y = weighted_sum(alpha, y);
  eval.beta_x = weighted_sum(beta, x);
  eval.beta_y = weighted_sum(beta, y);
  if (eval.alpha_y == 0)
    throw std::invalid_argument("patience instance: alpha-discounted sum of y is zero");
  if (eval.beta_y == 0)
    throw std::invalid_argument("patience instance: beta-discounted sum of y is zero");
  eval.alpha_ratio = eval.alpha_x / eval.alpha_y;
  eval.beta_ratio = eval.beta_x / eval.beta_y;
  eval.normalized_y = eval.beta_y / eval.alpha_y;
  eval.normalized_x = eval.beta_x / eval.alpha_x;
  eval.gap = eval.alpha_ratio - eval.beta_ratio;
  eval.holds = eval.alpha_ratio <= eval.beta_ratio;
  return eval;
}

inline bool definitional_patience_holds(const DiscountSequence& alpha,
                                        const DiscountSequence& beta,
                                        const PrizeSequence& x, const PrizeSequence& y) {
  return evaluate_patience_instance(alpha, beta, x, y).holds;
}

/// Serenity check with proof-built witnesses. A monotonicity failure at k is
/// witnessed by the unit swap x = e_k, y = e_{k+1}; a sign failure at k by
/// x = 0, y = -e_k (serenity witnesses may be signed).
inline PatienceVerdict is_more_serene(const DiscountSequence& alpha,
                                      const DiscountSequence& beta) {
  detail::require_equal_horizons(alpha.horizon(), beta.horizon());
  const std::size_t T = alpha.horizon();
  const auto& a = alpha.values();
  const auto& b = beta.values();

  std::optional<std::size_t> sign_failure;
  std::optional<std::size_t> mono_failure;
  for (std::size_t i = 0; i < T; ++i) {
    if (b[i] < a[i]) {
      sign_failure = i + 1;
      break;
    }
    if (i + 1 < T && (b[i] - a[i]) < (b[i + 1] - a[i + 1])) {
      mono_failure = i + 1;
      break;
    }
  }
  if (!sign_failure && !mono_failure) return PatienceVerdict{};

  PatienceVerdict verdict;
  verdict.holds = false;
  WitnessPair w{PrizeSequence::zeros(T), PrizeSequence::zeros(T)};
  if (sign_failure) {
    verdict.failing_index = *sign_failure;
    std::vector<Rational> yv(T, Rational(0));
    yv[*sign_failure - 1] = -1;
    w.y = PrizeSequence(std::move(yv));
  } else {
    verdict.failing_index = *mono_failure;
    w.x = PrizeSequence::unit(T, *mono_failure);
    w.y = PrizeSequence::unit(T, *mono_failure + 1);
  }
  verdict.diagnostics = detail::make_diagnostics(alpha, beta, w);
  // The witness must be a dominance improvement with a strictly larger gain
  // for the alpha-agent; anything else is a construction bug.
  if (!dominates(w.x, w.y).holds ||
      verdict.diagnostics->alpha_gain <= verdict.diagnostics->beta_gain)
    throw std::logic_error("is_more_serene: witness failed verification");
  verdict.witness = std::move(w);
  return verdict;
}

inline bool two_period_check(const DiscountSequence& alpha, const DiscountSequence& beta) {
  if (alpha.horizon() != 2 || beta.horizon() != 2)
    throw std::invalid_argument("two_period_check requires horizon 2");
  return alpha.at(1) * beta.at(2) <= alpha.at(2) * beta.at(1);
}

/// alpha_t/beta_t increasing in t, in cross-multiplied form.
inline bool monotone_ratio_check(const DiscountSequence& alpha, const DiscountSequence& beta) {
  detail::require_equal_horizons(alpha.horizon(), beta.horizon());
  return !detail::first_ratio_violation(alpha, beta).has_value();
}

/// Adjacent gap-ratio survey. adjacent_inf is the least
/// (beta_t - beta_{t+1})/(alpha_t - alpha_{t+1}) over periods with a positive
/// alpha-gap (absent = +infinity, every alpha-gap zero); ratio_sup is the
/// largest beta_t/alpha_t over t <= T-1; threshold is beta_1/alpha_1. The
/// patience condition holds exactly when every entry of adjacent_condition is
/// true, and then adjacent_inf >= ratio_sup (the mediant chain).
struct GapRatioReport {
  std::optional<Rational> adjacent_inf;
  std::optional<std::size_t> adjacent_inf_index;
  Rational ratio_sup;
  std::size_t ratio_sup_index = 1;
  Rational threshold;
  std::vector<bool> adjacent_condition;  // entry t-1 is the condition at t
};

inline GapRatioReport gap_ratio_report(const DiscountSequence& alpha,
                                       const DiscountSequence& beta) {
  detail::require_equal_horizons(alpha.horizon(), beta.horizon());
  const std::size_t T = alpha.horizon();
  if (T < 2) throw std::invalid_argument("gap_ratio_report requires horizon >= 2");
  const auto& a = alpha.values();
  const auto& b = beta.values();

  GapRatioReport report;
  report.threshold = b[0] / a[0];
  report.ratio_sup = b[0] / a[0];
  report.ratio_sup_index = 1;
  for (std::size_t i = 1; i + 1 < T; ++i) {
    Rational ratio = b[i] / a[i];
    if (ratio > report.ratio_sup) {
      report.ratio_sup = ratio;
      report.ratio_sup_index = i + 1;
    }
  }
  for (std::size_t i = 0; i + 1 < T; ++i) {
    Rational alpha_gap = a[i] - a[i + 1];
    Rational beta_gap = b[i] - b[i + 1];
    report.adjacent_condition.push_back(a[0] * beta_gap >= b[0] * alpha_gap);
    if (alpha_gap > 0) {
      Rational ratio = beta_gap / alpha_gap;
      if (!report.adjacent_inf || ratio < *report.adjacent_inf) {
        report.adjacent_inf = ratio;
        report.adjacent_inf_index = i + 1;
      }
    }
  }
  return report;
}

/// Builds a verified violating pair when patience fails. If some adjacent
/// ratio is out of order, the unit swap at that period already violates the
/// definition. Otherwise, at the least failing period k, the pair
/// x = e_1 + eta e_k, y = e_1 + eta e_{k+1} violates it for every eta in the
/// open interval (0, A/D) with A the cross-multiplied condition deficit and
/// D = alpha_{k+1} beta_k - alpha_k beta_{k+1}; eta = A/(2D) is used, or 1
/// when D = 0. The result is re-verified before it is returned.
inline WitnessPair patience_counterexample(const DiscountSequence& alpha,
                                           const DiscountSequence& beta) {
  detail::require_equal_horizons(alpha.horizon(), beta.horizon());
  const std::size_t T = alpha.horizon();
  if (!detail::first_gap_violation(alpha, beta))
    throw std::invalid_argument("patience_counterexample: the relation holds");

  WitnessPair w{PrizeSequence::zeros(T), PrizeSequence::zeros(T)};
  if (auto swap_at = detail::first_ratio_violation(alpha, beta)) {
    w.x = PrizeSequence::unit(T, *swap_at);
    w.y = PrizeSequence::unit(T, *swap_at + 1);
  } else {
    std::size_t k = *detail::first_gap_violation(alpha, beta);  // >= 2 here
    Rational deficit = beta.at(1) * (alpha.at(k) - alpha.at(k + 1)) -
                       alpha.at(1) * (beta.at(k) - beta.at(k + 1));
    Rational cross = alpha.at(k + 1) * beta.at(k) - alpha.at(k) * beta.at(k + 1);
    Rational eta = cross > 0 ? deficit / (2 * cross) : Rational(1);
    std::vector<Rational> xv(T, Rational(0)), yv(T, Rational(0));
    xv[0] = 1;
    yv[0] = 1;
    xv[k - 1] += eta;
    yv[k] += eta;
    w.x = PrizeSequence(std::move(xv));
    w.y = PrizeSequence(std::move(yv));
  }

  bool violates = false;
  try {
    violates = !definitional_patience_holds(alpha, beta, w.x, w.y);
  } catch (const std::exception&) {
    throw std::logic_error("patience_counterexample: witness failed precondition checks");
  }
  if (!violates) throw std::logic_error("patience_counterexample: witness failed verification");
  return w;
}

inline PatienceVerdict is_more_patient(const DiscountSequence& alpha,
                                       const DiscountSequence& beta) {
  detail::require_equal_horizons(alpha.horizon(), beta.horizon());
  auto violation = detail::first_gap_violation(alpha, beta);
  if (!violation) return PatienceVerdict{};
  PatienceVerdict verdict;
  verdict.holds = false;
  verdict.failing_index = *violation;
  verdict.witness = patience_counterexample(alpha, beta);
  verdict.diagnostics = detail::make_diagnostics(alpha, beta, *verdict.witness);
  return verdict;
}

/// A sound (not necessarily minimal) lower bound a_bar in (0,1): every
/// exponential discounter with factor in [a_bar, 1) is more patient than the
/// one with factor b at horizon T. The bound is kept at or above
/// (T-2)/(T-1), where every gap a^{t-1}(1-a), t <= T-1, is decreasing in a,
/// so checking the T-1 conditions at a_bar certifies the whole interval.
inline Rational exponential_patience_threshold(const Rational& b, std::size_t T) {
  if (b <= 0 || b >= 1)
    throw std::invalid_argument("parameter out of range: b must lie in (0,1)");
  if (T < 2) throw std::invalid_argument("exponential_patience_threshold requires T >= 2");

  auto conditions_hold = [&](const Rational& a) {
    Rational b_pow = 1, a_pow = 1;  // b^{t-1}, a^{t-1}
    for (std::size_t t = 1; t + 1 <= T; ++t) {
      if (b_pow * (1 - b) < a_pow * (1 - a)) return false;
      b_pow *= b;
      a_pow *= a;
    }
    return true;
  };

  Rational monotone_floor(static_cast<long>(T) - 2, static_cast<long>(T) - 1);
  Rational a_bar = b >= monotone_floor ? b : monotone_floor;
  for (int i = 0; i < 4096; ++i) {
    if (conditions_hold(a_bar)) return a_bar;
    a_bar = (a_bar + 1) / 2;  // walk toward 1; the conditions hold in the limit
  }
  throw std::logic_error("exponential_patience_threshold: bound search did not converge");
}

/// Infinite-horizon exponential comparison. Equal factors: more patient
/// (absent result). Otherwise returns the least t where
/// b^{t-1}(1-b) < a^{t-1}(1-a), i.e. where the gap-ratio condition fails;
/// for a > b the ratio (b/a)^{t-1}(1-b)/(1-a) decays to zero, so such a t
/// always exists, and for a < b it is 1.
inline std::optional<std::size_t> exponential_infinite_collapse(const Rational& a,
                                                                const Rational& b) {
  if (a <= 0 || a >= 1 || b <= 0 || b >= 1)
    throw std::invalid_argument("parameter out of range: factors must lie in (0,1)");
  if (a == b) return std::nullopt;
  Rational a_pow = 1, b_pow = 1;
  for (std::size_t t = 1; t < 1000000; ++t) {
    if (b_pow * (1 - b) < a_pow * (1 - a)) return t;
    a_pow *= a;
    b_pow *= b;
  }
  throw std::logic_error("exponential_infinite_collapse: no failing period found");
}

/// Patience at infinite horizon for parametric families, decided in closed
/// form. Exponential vs exponential holds only with equal factors;
/// quasi-hyperbolic vs quasi-hyperbolic only with identical parameters (any
/// difference breaks an adjacent gap condition at some finite t). On failure
/// the verdict carries that t and a finite-support witness built on the
/// truncation at t+1, whose discounted sums against the infinite discounters
/// equal the truncated ones.
inline PatienceVerdict infinite_family_patience(const DiscountFamily& alice,
                                                const DiscountFamily& bob) {
  if (!alice.horizon().is_infinite() || !bob.horizon().is_infinite())
    throw std::invalid_argument("infinite_family_patience requires infinite-horizon families");

  std::optional<std::size_t> failing_t;
  const auto* alice_exp = std::get_if<Exponential>(&alice.form());
  const auto* bob_exp = std::get_if<Exponential>(&bob.form());
  const auto* alice_qh = std::get_if<QuasiHyperbolic>(&alice.form());
  const auto* bob_qh = std::get_if<QuasiHyperbolic>(&bob.form());

  if (alice_exp && bob_exp) {
    failing_t = exponential_infinite_collapse(alice_exp->factor, bob_exp->factor);
  } else if (alice_qh && bob_qh) {
    const Rational& ab = alice_qh->present_bias;
    const Rational& ad = alice_qh->delta;
    const Rational& bb = bob_qh->present_bias;
    const Rational& bd = bob_qh->delta;
    if (ab == bb && ad == bd) {
      failing_t = std::nullopt;
    } else if (ab * ad < bb * bd) {
      failing_t = 1;  // first gap: 1 - b_B d_B >= 1 - b_A d_A fails
    } else {
      // From t = 2 on the gaps are b d^{t-1} (1 - d); with unequal parameters
      // some finite t breaks Bob's gap >= Alice's gap.
      Rational alice_gap = ab * ad * (1 - ad);
      Rational bob_gap = bb * bd * (1 - bd);
      for (std::size_t t = 2; t < 1000000; ++t) {
        if (bob_gap < alice_gap) {
          failing_t = t;
          break;
        }
        alice_gap *= ad;
        bob_gap *= bd;
      }
      if (!failing_t)
        throw std::logic_error("infinite_family_patience: no failing period found");
    }
  } else {
    throw std::invalid_argument(
        "infinite_family_patience: mixed-family comparison is unsupported");
  }

  if (!failing_t) return PatienceVerdict{};

  const std::size_t T = *failing_t + 1;
  DiscountSequence alpha = realize(alice, T);
  DiscountSequence beta = realize(bob, T);
  PatienceVerdict verdict;
  verdict.holds = false;
  verdict.failing_index = *failing_t;
  verdict.witness = patience_counterexample(alpha, beta);
  verdict.diagnostics = detail::make_diagnostics(alpha, beta, *verdict.witness);
  return verdict;
}

}  // namespace pat
