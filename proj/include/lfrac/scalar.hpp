// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gmpxx.h>

#include <cmath>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lfrac {

/// Exact scalar: arbitrary-precision rational, always kept in lowest terms
/// with positive denominator. The float mode of every operation uses plain
/// `double` instead.
using Rational = mpq_class;

/// A precondition or invariant of an operation was violated (zero weight,
/// length mismatch, incompatible operator steps, ...).
struct InvariantError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Float-mode arithmetic produced a non-finite value. `index` is the first
/// position (coefficient index, sequence index, or packed kernel index) at
/// which the overflow was observed.
struct OverflowError : std::runtime_error {
  OverflowError(const std::string& what, long index_);
  long index;
};

/// Malformed textual input. `field` names the offending input (CLI flag or
/// problem-file key).
struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::string field_);
  std::string field;
};

/// Parses "p/q", plain integers, and decimal literals ("-1.25", "3e-2")
/// into an exact rational. Decimals are read as exact decimal fractions.
Rational parse_rational(std::string_view text, std::string_view field = "value");

/// Canonical serialization: lowest terms, positive denominator, "p" when the
/// denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& q);

double to_double(const Rational& q);

template <class T>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
  using accumulator = Rational;
  static constexpr bool exact = true;
  static constexpr const char* mode_name = "exact";
};

template <>
struct scalar_traits<double> {
  // Dot products and running sums accumulate in extended precision; values
  // are stored back as double.
  using accumulator = long double;
  static constexpr bool exact = false;
  static constexpr const char* mode_name = "float";
};

template <class T>
using accumulator_t = typename scalar_traits<T>::accumulator;

template <class T>
T abs_value(const T& x) {
  if constexpr (scalar_traits<T>::exact) {
    return T(abs(x));
  } else {
    return std::fabs(x);
  }
}

inline bool is_finite_value(const Rational&) { return true; }
inline bool is_finite_value(double x) { return std::isfinite(x); }

/// Throws OverflowError at the first non-finite entry.
void check_finite(std::span<const double> values, const char* what);
inline void check_finite(std::span<const Rational>, const char*) {}

}  // namespace lfrac
