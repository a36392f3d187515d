#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pat {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar. Every verdict in this library is computed on this
/// type; doubles appear only in display helpers, never in a comparison.
using Rational = boost::multiprecision::cpp_rational;

/// Parses "p", "-p" or "p/q". The result is canonical (gcd-reduced,
/// denominator > 0) regardless of the input's form.
inline Rational parse_rational(std::string_view text) {
  auto fail = [&] {
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  };
  std::size_t i = 0;
  auto scan_integer = [&]() -> BigInt {
    std::size_t start = i;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    std::size_t digits = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      ++i;
      ++digits;
    }
    if (digits == 0) fail();
    return BigInt(std::string(text.substr(start, i - start)));
  };
  BigInt num = scan_integer();
  BigInt den = 1;
  if (i < text.size()) {
    if (text[i] != '/') fail();
    ++i;
    den = scan_integer();
    if (i != text.size()) fail();
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  return Rational(num, den);
}

/// Canonical form: "p" when the denominator is 1, otherwise "p/q" with q > 0.
inline std::string to_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += '/';
    s += denominator(r).str();
  }
  return s;
}

/// Display-only approximation; never feeds back into any verdict.
inline double approx(const Rational& r) { return r.convert_to<double>(); }

/// r^e for small nonnegative integer exponents.
inline Rational rational_pow(const Rational& base, std::size_t exponent) {
  Rational result = 1;
  for (std::size_t i = 0; i < exponent; ++i) result *= base;
  return result;
}

}  // namespace pat
