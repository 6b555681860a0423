#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "relsig/errors.hpp"

namespace relsig {

// Exact arithmetic only. The rational backend keeps values in lowest terms
// with a positive denominator, which is exactly the canonical form required
// here. Expression templates are off so every operation yields a plain value.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::backends::rational_adaptor<
                                      boost::multiprecision::cpp_int_backend<>>,
                                  boost::multiprecision::et_off>;

inline Int numerator(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rational& r) { return boost::multiprecision::denominator(r); }

// Canonical string form: "p" when the value is integral, "p/q" otherwise.
inline std::string to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

inline std::string to_string(const Int& v) { return v.str(); }

// Accepts an optional sign, an integer part, and an optional "/denominator".
inline Rational parse_rational(std::string_view text) {
  const auto fail = [&] {
    throw ParseError("invalid rational literal: \"" + std::string(text) + "\"");
  };
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  std::size_t digits = 0;
  while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i, ++digits;
  if (digits == 0) fail();
  Int num(std::string(text.substr(0, i)));
  if (i == text.size()) return Rational(num);
  if (text[i] != '/') fail();
  ++i;
  const std::size_t den_start = i;
  digits = 0;
  while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i, ++digits;
  if (digits == 0 || i != text.size()) fail();
  Int den(std::string(text.substr(den_start)));
  if (den == 0) throw ParseError("invalid rational literal (zero denominator): \"" +
                                 std::string(text) + "\"");
  return Rational(num, den);
}

}  // namespace relsig
