// Copyright 2026 The panint Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/// \file panint/numeric.hpp
///
/// The two scalar types every algorithm is instantiated with: binary64
/// (`double`) and an exact arbitrary-precision rational. Comparison policy
/// and exact decimal parsing/formatting live here.

#ifndef PANINT_NUMERIC_HPP
#define PANINT_NUMERIC_HPP

#include <algorithm>
#include <charconv>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>

#include <boost/multiprecision/cpp_int.hpp>

#include "error.hpp"

namespace panint {

using BigInt = boost::multiprecision::cpp_int;
/// Exact rational; expression templates off so `auto` stays a value.
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

template <class T>
struct scalar_traits;

template <>
struct scalar_traits<double> {
  static constexpr bool exact = false;
  static constexpr const char* mode_name = "float";
  /// Absolute tolerance used by structural predicates (monotonicity,
  /// subadditivity, null sets).
  static constexpr double predicate_tol = 1e-12;
  /// Tolerance for comparing integral values: relative on magnitudes >= 1,
  /// absolute below.
  static constexpr double value_tol = 1e-9;
};

template <>
struct scalar_traits<Rational> {
  static constexpr bool exact = true;
  static constexpr const char* mode_name = "exact";
  static constexpr double predicate_tol = 0.0;
  static constexpr double value_tol = 0.0;
};

template <class T>
concept Scalar = requires { scalar_traits<T>::exact; };

template <class T>
inline constexpr bool is_exact_v = scalar_traits<T>::exact;

inline double to_double(double v) { return v; }
inline double to_double(const Rational& v) { return v.convert_to<double>(); }

/// Converts between scalar types. double -> Rational is exact.
template <Scalar To>
To scalar_cast(double v) {
  if constexpr (is_exact_v<To>) {
    if (!std::isfinite(v)) throw std::domain_error("non-finite value");
    return Rational(v);
  } else {
    return v;
  }
}

template <Scalar To>
To scalar_cast(const Rational& v) {
  if constexpr (is_exact_v<To>) {
    return v;
  } else {
    return to_double(v);
  }
}

template <Scalar T>
T abs_value(const T& v) {
  return v < T(0) ? T(-v) : v;
}

/// Tolerance scale for comparing a and b: value_tol * max(1, |a|, |b|).
template <Scalar T>
double value_tolerance(const T& a, const T& b) {
  const double tol = scalar_traits<T>::value_tol;
  if (tol == 0.0) return 0.0;
  return tol * std::max({1.0, std::abs(to_double(a)), std::abs(to_double(b))});
}

template <Scalar T>
bool approx_equal(const T& a, const T& b) {
  if constexpr (is_exact_v<T>) {
    return a == b;
  } else {
    return std::abs(a - b) <= value_tolerance(a, b);
  }
}

/// a <= b up to the value tolerance.
template <Scalar T>
bool approx_le(const T& a, const T& b) {
  if constexpr (is_exact_v<T>) {
    return a <= b;
  } else {
    return a <= b + value_tolerance(a, b);
  }
}

/// Zero test used by the structural predicates.
template <Scalar T>
bool is_null_value(const T& v) {
  if constexpr (is_exact_v<T>) {
    return v == 0;
  } else {
    return std::abs(v) <= scalar_traits<T>::predicate_tol;
  }
}

namespace detail {

inline BigInt pow10(unsigned k) {
  BigInt r = 1;
  for (unsigned i = 0; i < k; ++i) r *= 10;
  return r;
}

inline bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

}  // namespace detail

/// Parses "-12.5", "3e-2", "7" or "p/q" exactly.
inline Rational parse_rational(std::string_view text) {
  auto fail = [&]() -> Rational {
    throw error(errc::parse_error, "not a decimal or rational literal: '" + std::string(text) + "'");
  };
  if (text.empty()) return fail();

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Rational num = parse_rational(text.substr(0, slash));
    auto den_text = text.substr(slash + 1);
    if (!detail::all_digits(den_text)) return fail();
    std::string den_digits(den_text);
    den_digits.erase(0, std::min(den_digits.find_first_not_of('0'), den_digits.size()));
    if (den_digits.empty()) return fail();
    BigInt den{den_digits};
    if (den == 0) return fail();
    return num / Rational(den);
  }

  std::string_view s = text;
  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    auto exp_text = s.substr(e + 1);
    const char* first = exp_text.data();
    const char* last = first + exp_text.size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, exponent);
    if (ec != std::errc() || ptr != last) return fail();
    s = s.substr(0, e);
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto int_part = s.substr(0, dot);
    auto frac_part = s.substr(dot + 1);
    if (int_part.empty() && frac_part.empty()) return fail();
    if (!int_part.empty() && !detail::all_digits(int_part)) return fail();
    if (!frac_part.empty() && !detail::all_digits(frac_part)) return fail();
    digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long>(frac_part.size());
  } else {
    if (!detail::all_digits(s)) return fail();
    digits = std::string(s);
  }
  // cpp_int reads a leading 0 as an octal prefix.
  digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size()));
  if (digits.empty()) digits = "0";
  if (exponent > 4000 || exponent < -4000) return fail();

  Rational value{BigInt(digits)};
  if (exponent > 0) value *= Rational(detail::pow10(static_cast<unsigned>(exponent)));
  if (exponent < 0) value /= Rational(detail::pow10(static_cast<unsigned>(-exponent)));
  return negative ? Rational(-value) : value;
}

/// Exact decimal rendering when the denominator is of the form 2^a 5^b,
/// otherwise "p/q".
inline std::string format_rational(const Rational& v) {
  BigInt num = boost::multiprecision::numerator(v);
  BigInt den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();

  BigInt rest = den;
  unsigned twos = 0, fives = 0;
  while (rest % 2 == 0) { rest /= 2; ++twos; }
  while (rest % 5 == 0) { rest /= 5; ++fives; }
  if (rest != 1) return num.str() + "/" + den.str();

  const unsigned places = std::max(twos, fives);
  BigInt scaled = num * detail::pow10(places) / den;
  const bool negative = scaled < 0;
  if (negative) scaled = -scaled;
  std::string digits = scaled.str();
  if (digits.size() <= places) digits.insert(0, places - digits.size() + 1, '0');
  digits.insert(digits.size() - places, ".");
  return negative ? "-" + digits : digits;
}

/// Shortest decimal string that round-trips the double.
inline std::string shortest_decimal(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc()) throw std::runtime_error("to_chars failed");
  return std::string(buf, ptr);
}

/// Reads a JSON-sourced double as the decimal literal it was written as.
inline Rational rational_from_literal(double v) {
  if (!std::isfinite(v)) throw std::domain_error("non-finite value");
  return parse_rational(shortest_decimal(v));
}

}  // namespace panint

#endif  // PANINT_NUMERIC_HPP
