#pragma once

#include <gmpxx.h>

#include <cmath>
#include <concepts>
#include <string>
#include <string_view>

namespace evtp {

/// Exact backend scalar. mpq_class keeps numerator/denominator in lowest
/// terms with a positive denominator after every arithmetic operation.
using Rational = mpq_class;

template <class T>
concept Scalar = std::same_as<T, double> || std::same_as<T, Rational>;

template <Scalar T>
inline constexpr bool is_exact_v = std::same_as<T, Rational>;

/// Parses "-12", "5.6", "1.25e-3", "7/20" into an exact rational without
/// passing through binary floating point. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Terminating decimals print as decimals ("26.8"), everything else as p/q.
std::string to_string(const Rational& value);

inline double to_double(double value) { return value; }
inline double to_double(const Rational& value) { return value.get_d(); }

inline double abs_value(double value) { return std::fabs(value); }
inline Rational abs_value(const Rational& value) { return abs(value); }

/// -1, 0 or +1; |value| <= zero_tolerance maps to 0.
inline int sign_of(double value, double zero_tolerance = 0.0) {
  if (std::fabs(value) <= zero_tolerance) return 0;
  return value > 0 ? 1 : -1;
}

inline int sign_of(const Rational& value, double zero_tolerance = 0.0) {
  if (zero_tolerance > 0.0 && std::fabs(value.get_d()) <= zero_tolerance) return 0;
  return sgn(value);
}

}  // namespace evtp
