// SPDX-License-Identifier: Apache-2.0
#include "lfrac/random.hpp"

namespace lfrac {

long SeededRng::int_in(long lo, long hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(engine_() % span);
}

Rational SeededRng::rational(long max_num, long max_den) {
  long num = int_in(-max_num, max_num);
  long den = int_in(1, max_den);
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational SeededRng::nonzero_rational(long max_num, long max_den) {
  for (;;) {
    Rational q = rational(max_num, max_den);
    if (q != 0) return q;
  }
}

double SeededRng::unit() {
  return in_range(-1.0, 1.0);
}

double SeededRng::in_range(double lo, double hi) {
  const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;  // [0, 1)
  return lo + (hi - lo) * u;
}

double SeededRng::nonzero_in(double lo, double hi) {
  for (;;) {
    double x = in_range(lo, hi);
    if (x != 0.0) return x;
  }
}

std::vector<Rational> SeededRng::rational_vector(size_t n, long max_num, long max_den) {
  std::vector<Rational> values(n);
  for (auto& v : values) v = rational(max_num, max_den);
  return values;
}

std::vector<Rational> SeededRng::nonzero_rational_vector(size_t n, long max_num, long max_den) {
  std::vector<Rational> values(n);
  for (auto& v : values) v = nonzero_rational(max_num, max_den);
  return values;
}

std::vector<double> SeededRng::unit_vector(size_t n) {
  std::vector<double> values(n);
  for (auto& v : values) v = unit();
  return values;
}

}  // namespace lfrac
