#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "pat/rational.hpp"

namespace pat {

namespace detail {

inline void require_nonempty(const std::vector<Rational>& values, const char* what) {
  if (values.empty()) throw std::invalid_argument(std::string(what) + ": horizon must be at least 1");
}

inline bool weakly_decreasing(const std::vector<Rational>& values) {
  for (std::size_t i = 0; i + 1 < values.size(); ++i)
    if (values[i] < values[i + 1]) return false;
  return true;
}

inline void require_equal_horizons(std::size_t a, std::size_t b) {
  if (a != b) throw std::invalid_argument("horizon mismatch");
}

inline Rational dot(const std::vector<Rational>& w, const std::vector<Rational>& x) {
  Rational sum = 0;
  for (std::size_t i = 0; i < w.size(); ++i) sum += w[i] * x[i];
  return sum;
}

}  // namespace detail

/// A stream of per-period prizes (in utils). Entries may be signed; several
/// operations additionally require positivity and say so.
class PrizeSequence {
 public:
  explicit PrizeSequence(std::vector<Rational> values) : values_(std::move(values)) {
    detail::require_nonempty(values_, "prize sequence");
  }

  static PrizeSequence zeros(std::size_t horizon) {
    return PrizeSequence(std::vector<Rational>(horizon, Rational(0)));
  }

  /// All-zero sequence with a single 1 at period t (1-based).
  static PrizeSequence unit(std::size_t horizon, std::size_t t) {
    std::vector<Rational> v(horizon, Rational(0));
    if (t < 1 || t > horizon) throw std::invalid_argument("unit index out of range");
    v[t - 1] = 1;
    return PrizeSequence(std::move(v));
  }

  std::size_t horizon() const { return values_.size(); }
  const std::vector<Rational>& values() const { return values_; }

  /// 1-based access, matching the period indexing used throughout.
  const Rational& at(std::size_t t) const { return values_.at(t - 1); }

  bool is_positive() const {
    for (const auto& v : values_)
      if (v < 0) return false;
    return true;
  }

  Rational total() const {
    Rational sum = 0;
    for (const auto& v : values_) sum += v;
    return sum;
  }

  /// prefix_sums()[p-1] = x_1 + ... + x_p.
  std::vector<Rational> prefix_sums() const {
    std::vector<Rational> sums;
    sums.reserve(values_.size());
    Rational run = 0;
    for (const auto& v : values_) {
      run += v;
      sums.push_back(run);
    }
    return sums;
  }

  friend bool operator==(const PrizeSequence& a, const PrizeSequence& b) {
    return a.values_ == b.values_;
  }

 private:
  std::vector<Rational> values_;
};

/// An agent's realized discount weights: strictly positive and weakly
/// decreasing. Construction validates both.
class DiscountSequence {
 public:
  explicit DiscountSequence(std::vector<Rational> values) : values_(std::move(values)) {
    detail::require_nonempty(values_, "discount sequence");
    for (const auto& v : values_)
      if (v <= 0) throw std::invalid_argument("discount sequence must be strictly positive");
    if (!detail::weakly_decreasing(values_))
      throw std::invalid_argument("discount sequence must be weakly decreasing");
  }

  std::size_t horizon() const { return values_.size(); }
  const std::vector<Rational>& values() const { return values_; }
  const Rational& at(std::size_t t) const { return values_.at(t - 1); }

  friend bool operator==(const DiscountSequence& a, const DiscountSequence& b) {
    return a.values_ == b.values_;
  }

 private:
  std::vector<Rational> values_;
};

/// The quantifier class in the superiority definition: nonnegative and weakly
/// decreasing, zeros allowed (unlike DiscountSequence).
class WeightSequence {
 public:
  explicit WeightSequence(std::vector<Rational> values) : values_(std::move(values)) {
    detail::require_nonempty(values_, "weight sequence");
    for (const auto& v : values_)
      if (v < 0) throw std::invalid_argument("weight sequence must be nonnegative");
    if (!detail::weakly_decreasing(values_))
      throw std::invalid_argument("weight sequence must be weakly decreasing");
  }

  /// The step sequence (1,...,1,0,...,0) with ones through period p.
  static WeightSequence step(std::size_t horizon, std::size_t p) {
    if (p < 1 || p > horizon) throw std::invalid_argument("step index out of range");
    std::vector<Rational> v(horizon, Rational(0));
    for (std::size_t i = 0; i < p; ++i) v[i] = 1;
    return WeightSequence(std::move(v));
  }

  std::size_t horizon() const { return values_.size(); }
  const std::vector<Rational>& values() const { return values_; }
  const Rational& at(std::size_t t) const { return values_.at(t - 1); }

  friend bool operator==(const WeightSequence& a, const WeightSequence& b) {
    return a.values_ == b.values_;
  }

 private:
  std::vector<Rational> values_;
};

inline Rational weighted_sum(const WeightSequence& w, const PrizeSequence& x) {
  detail::require_equal_horizons(w.horizon(), x.horizon());
  return detail::dot(w.values(), x.values());
}

inline Rational weighted_sum(const DiscountSequence& w, const PrizeSequence& x) {
  detail::require_equal_horizons(w.horizon(), x.horizon());
  return detail::dot(w.values(), x.values());
}

/// Finite horizon T >= 1 or the infinite marker. Infinite horizons never
/// reach element-wise computation; they are resolved analytically.
class Horizon {
 public:
  static Horizon finite(std::size_t t) {
    if (t == 0) throw std::invalid_argument("horizon must be at least 1");
    return Horizon(t);
  }
  static Horizon infinite() { return Horizon(std::nullopt); }

  bool is_infinite() const { return !length_.has_value(); }
  std::size_t length() const {
    if (!length_) throw std::logic_error("infinite horizon has no length");
    return *length_;
  }

  friend bool operator==(const Horizon& a, const Horizon& b) { return a.length_ == b.length_; }

 private:
  explicit Horizon(std::optional<std::size_t> t) : length_(t) {}
  std::optional<std::size_t> length_;
};

struct Exponential {
  Rational factor;  // in (0,1)
};

struct QuasiHyperbolic {
  Rational present_bias;  // in (0,1]
  Rational delta;         // in (0,1)
};

/// Parametric discounter (exponential / quasi-hyperbolic) or an explicit
/// finite sequence. Only parametric variants may carry an infinite horizon.
class DiscountFamily {
 public:
  using Form = std::variant<Exponential, QuasiHyperbolic, DiscountSequence>;

  static DiscountFamily exponential(Rational factor, Horizon horizon) {
    if (factor <= 0 || factor >= 1)
      throw std::invalid_argument("parameter out of range: exponential factor must lie in (0,1)");
    return DiscountFamily(Exponential{std::move(factor)}, horizon);
  }

  static DiscountFamily quasi_hyperbolic(Rational present_bias, Rational delta, Horizon horizon) {
    if (present_bias <= 0 || present_bias > 1)
      throw std::invalid_argument("parameter out of range: present bias must lie in (0,1]");
    if (delta <= 0 || delta >= 1)
      throw std::invalid_argument("parameter out of range: delta must lie in (0,1)");
    return DiscountFamily(QuasiHyperbolic{std::move(present_bias), std::move(delta)}, horizon);
  }

  static DiscountFamily explicit_sequence(DiscountSequence seq) {
    Horizon h = Horizon::finite(seq.horizon());
    return DiscountFamily(Form(std::move(seq)), h);
  }

  const Form& form() const { return form_; }
  const Horizon& horizon() const { return horizon_; }
  bool is_parametric() const { return !std::holds_alternative<DiscountSequence>(form_); }

 private:
  DiscountFamily(Form form, Horizon horizon) : form_(std::move(form)), horizon_(horizon) {
    if (horizon_.is_infinite() && !is_parametric())
      throw std::invalid_argument("explicit discount families must have a finite horizon");
  }

  Form form_;
  Horizon horizon_;
};

/// Realizes a family at horizon T: exponential gives a^{t-1}; quasi-hyperbolic
/// gives (1, b*d, b*d^2, ...). Explicit families require T to match.
inline DiscountSequence realize(const DiscountFamily& family, std::size_t T) {
  if (T == 0) throw std::invalid_argument("horizon must be at least 1");
  if (const auto* exp = std::get_if<Exponential>(&family.form())) {
    std::vector<Rational> v;
    v.reserve(T);
    Rational w = 1;
    for (std::size_t t = 0; t < T; ++t) {
      v.push_back(w);
      w *= exp->factor;
    }
    return DiscountSequence(std::move(v));
  }
  if (const auto* qh = std::get_if<QuasiHyperbolic>(&family.form())) {
    std::vector<Rational> v;
    v.reserve(T);
    v.push_back(1);
    Rational w = qh->present_bias * qh->delta;
    for (std::size_t t = 1; t < T; ++t) {
      v.push_back(w);
      w *= qh->delta;
    }
    return DiscountSequence(std::move(v));
  }
  const auto& seq = std::get<DiscountSequence>(family.form());
  if (seq.horizon() != T)
    throw std::invalid_argument("explicit discount family realized at a different horizon");
  return seq;
}

}  // namespace pat
