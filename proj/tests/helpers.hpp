#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "pat/sequences.hpp"

namespace tests {

inline pat::Rational R(const std::string& s) { return pat::parse_rational(s); }

inline std::vector<pat::Rational> vals(std::initializer_list<const char*> entries) {
  std::vector<pat::Rational> v;
  for (const char* e : entries) v.push_back(R(e));
  return v;
}

inline pat::PrizeSequence prize(std::initializer_list<const char*> entries) {
  return pat::PrizeSequence(vals(entries));
}

inline pat::DiscountSequence discount(std::initializer_list<const char*> entries) {
  return pat::DiscountSequence(vals(entries));
}

inline pat::WeightSequence weights(std::initializer_list<const char*> entries) {
  return pat::WeightSequence(vals(entries));
}

// The three-period pair used throughout: monotone ratio without patience.
inline pat::DiscountSequence golden_alpha() { return discount({"1/2", "12/25", "91/250"}); }
inline pat::DiscountSequence golden_beta() { return discount({"1", "2/3", "1/2"}); }
inline pat::PrizeSequence golden_x() { return prize({"1", "3/2", "1"}); }
inline pat::PrizeSequence golden_y() { return prize({"1", "1", "3/2"}); }

}  // namespace tests
