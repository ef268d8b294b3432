#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cctype>
#include <string>
#include <string_view>

#include "pomat/error.hpp"

namespace pomat {

using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

namespace detail {

inline Integer parse_integer(std::string_view text, bool allow_sign) {
  std::size_t pos = 0;
  bool negative = false;
  if (allow_sign && !text.empty() && (text[0] == '-' || text[0] == '+')) {
    negative = text[0] == '-';
    pos = 1;
  }
  if (pos == text.size()) throw Error(Errc::BadRational, "empty integer in '" + std::string(text) + "'");
  Integer value = 0;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw Error(Errc::BadRational, "bad digit in '" + std::string(text) + "'");
    value = value * 10 + (c - '0');
  }
  return negative ? Integer(-value) : value;
}

}  // namespace detail

/// Parses "p/q" or "p". Whitespace is not accepted.
inline Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(detail::parse_integer(text, true));
  Integer num = detail::parse_integer(text.substr(0, slash), true);
  Integer den = detail::parse_integer(text.substr(slash + 1), false);
  if (den == 0) throw Error(Errc::BadRational, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

/// Canonical form: "p/q" in lowest terms, or "p" when q == 1.
inline std::string format_rational(const Rational& value) {
  const Integer& num = boost::multiprecision::numerator(value);
  const Integer& den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace pomat
