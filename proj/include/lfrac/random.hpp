// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "lfrac/scalar.hpp"

namespace lfrac {

/// Deterministic generator for the randomized identity suites. All draws go
/// through the mt19937_64 stream with plain modulo reduction, so a seed
/// reproduces the same values on every platform.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform-ish integer in [lo, hi], inclusive.
  long int_in(long lo, long hi);

  /// Rational with numerator in [-max_num, max_num] and denominator in
  /// [1, max_den].
  Rational rational(long max_num, long max_den);
  Rational nonzero_rational(long max_num, long max_den);

  /// Double in [-1, 1].
  double unit();
  double in_range(double lo, double hi);
  double nonzero_in(double lo, double hi);

  std::vector<Rational> rational_vector(size_t n, long max_num, long max_den);
  std::vector<Rational> nonzero_rational_vector(size_t n, long max_num, long max_den);
  std::vector<double> unit_vector(size_t n);

 private:
  std::mt19937_64 engine_;
};

}  // namespace lfrac
