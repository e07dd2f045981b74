// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <vector>

#include "lfrac/difference.hpp"
#include "lfrac/random.hpp"

using lfrac::OperatorSpec;
using lfrac::Rational;

namespace {

Rational q(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational factorial(long n) {
  Rational f(1);
  for (long i = 2; i <= n; ++i) f *= i;
  return f;
}

std::vector<Rational> scale(const Rational& c, const std::vector<Rational>& x) {
  std::vector<Rational> out(x.size());
  for (size_t i = 0; i < x.size(); ++i) out[i] = c * x[i];
  return out;
}

std::vector<Rational> add(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::vector<Rational> out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

}  // namespace

TEST_CASE("apply closed forms") {
  // (a, a): first-order weighted backward difference x_k - a x_{k-1}.
  Rational a = q(3, 5);
  OperatorSpec<Rational> spec{a, a};
  std::vector<Rational> x{q(2), q(1), q(4), q(-3)};
  std::vector<Rational> expected{q(2), Rational(q(1) - a * q(2)), Rational(q(4) - a * q(1)),
                                 Rational(q(-3) - a * q(4))};
  CHECK(lfrac::apply(spec, std::span<const Rational>(x)) == expected);

  // (2l, l) on an impulse exposes the coefficients (1, -2l, l^2, 0).
  Rational l = q(3, 7);
  OperatorSpec<Rational> band{Rational(2 * l), l};
  std::vector<Rational> impulse{q(1), q(0), q(0), q(0)};
  std::vector<Rational> expected2{q(1), Rational(-2 * l), Rational(l * l), q(0)};
  CHECK(lfrac::apply(band, std::span<const Rational>(impulse)) == expected2);

  // Order zero is the identity.
  OperatorSpec<Rational> ident{q(0), q(5, 3)};
  std::vector<Rational> any{q(4), q(-1, 3), q(7, 2)};
  CHECK(lfrac::apply(ident, std::span<const Rational>(any)) == any);

  // Backward difference: hand subtraction gives (3, 5-3, 9-5).
  OperatorSpec<Rational> diff{q(1), q(1)};
  std::vector<Rational> seq{q(3), q(5), q(9)};
  std::vector<Rational> expected3{q(3), q(2), q(4)};
  CHECK(lfrac::apply(diff, std::span<const Rational>(seq)) == expected3);

  CHECK(lfrac::apply(diff, std::span<const Rational>()).empty());
}

TEST_CASE("apply is linear") {
  lfrac::SeededRng rng(404);
  for (int trial = 0; trial < 15; ++trial) {
    OperatorSpec<Rational> spec{rng.rational(6, 6), rng.rational(6, 6)};
    auto x = rng.rational_vector(24, 9, 9);
    auto zv = rng.rational_vector(24, 9, 9);
    Rational alpha = rng.rational(9, 9);
    Rational beta = rng.rational(9, 9);
    auto lhs = lfrac::apply(spec, std::span<const Rational>(add(scale(alpha, x), scale(beta, zv))));
    auto rhs = add(scale(alpha, lfrac::apply(spec, std::span<const Rational>(x))),
                   scale(beta, lfrac::apply(spec, std::span<const Rational>(zv))));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("causality: later inputs never affect earlier outputs") {
  lfrac::SeededRng rng(11);
  OperatorSpec<Rational> spec{q(5, 4), q(-2, 3)};
  auto x = rng.rational_vector(16, 9, 9);
  auto y = lfrac::apply(spec, std::span<const Rational>(x));
  for (size_t j = 4; j < 16; ++j) {
    auto perturbed = x;
    perturbed[j] += q(17, 5);
    auto y2 = lfrac::apply(spec, std::span<const Rational>(perturbed));
    for (size_t k = 0; k < j; ++k) CHECK(y2[k] == y[k]);
    CHECK(y2[j] != y[j]);
  }
}

TEST_CASE("convolve_orders closed values and identity") {
  Rational a = q(2, 3), b = q(-1, 4), l = q(5, 6);
  CHECK(lfrac::convolve_orders(a, b, l, 0) == q(1));
  CHECK(lfrac::convolve_orders(a, b, l, 1) == Rational(-(a + b)));

  // Independent right-hand side straight from the product definition.
  Rational a8 = q(1, 3), b8 = q(1, 5), l8 = q(1, 7);
  Rational rhs = lfrac::l_pochhammer(Rational(-(a8 + b8)), l8, 8) / factorial(8);
  CHECK(lfrac::convolve_orders(a8, b8, l8, 8) == rhs);

  lfrac::SeededRng rng(2718);
  for (int trial = 0; trial < 10; ++trial) {
    Rational ra = rng.rational(9, 9), rb = rng.rational(9, 9), rl = rng.rational(9, 9);
    for (long m = 0; m <= 32; ++m) {
      Rational expect = lfrac::l_pochhammer(Rational(-(ra + rb)), rl, m) / factorial(m);
      CHECK(lfrac::convolve_orders(ra, rb, rl, m) == expect);
    }
  }
}

TEST_CASE("composition adds orders and commutes") {
  lfrac::SeededRng rng(909);
  for (int trial = 0; trial < 15; ++trial) {
    Rational a = rng.rational(9, 9), b = rng.rational(9, 9), l = rng.rational(9, 9);
    auto x = rng.rational_vector(32, 9, 9);
    OperatorSpec<Rational> sa{a, l}, sb{b, l}, sum{Rational(a + b), l};
    auto composed = lfrac::compose(sa, sb, std::span<const Rational>(x));
    CHECK(composed == lfrac::apply(sum, std::span<const Rational>(x)));
    CHECK(composed == lfrac::compose(sb, sa, std::span<const Rational>(x)));
  }

  // Opposite orders cancel on any prefix.
  OperatorSpec<Rational> sa{q(7, 5), q(1, 3)}, sneg{q(-7, 5), q(1, 3)};
  auto x = lfrac::SeededRng(5).rational_vector(20, 9, 9);
  CHECK(lfrac::compose(sa, sneg, std::span<const Rational>(x)) == x);

  // Identity composed with anything is that operator.
  OperatorSpec<Rational> ident{q(0), q(1, 3)}, sb{q(2, 9), q(1, 3)};
  CHECK(lfrac::compose(ident, sb, std::span<const Rational>(x)) ==
        lfrac::apply(sb, std::span<const Rational>(x)));

  // Squared backward difference on squares: hand-computed second differences.
  OperatorSpec<Rational> diff{q(1), q(1)};
  std::vector<Rational> squares{q(1), q(4), q(9), q(16)};
  std::vector<Rational> expected{q(1), q(2), q(2), q(2)};
  CHECK(lfrac::compose(diff, diff, std::span<const Rational>(squares)) == expected);
}

TEST_CASE("composition rejects mismatched steps") {
  OperatorSpec<Rational> sa{q(1), q(1, 2)}, sb{q(1), q(1, 3)};
  std::vector<Rational> x{q(1), q(2)};
  CHECK_THROWS_AS(lfrac::compose(sa, sb, std::span<const Rational>(x)), lfrac::InvariantError);
}

TEST_CASE("inverse_apply closed forms and exact roundtrip") {
  // The inverse of the backward difference is the running sum.
  OperatorSpec<Rational> diff{q(1), q(1)};
  std::vector<Rational> ones{q(1), q(1), q(1)};
  std::vector<Rational> expected{q(1), q(2), q(3)};
  auto sums = lfrac::inverse_apply(diff, std::span<const Rational>(ones));
  CHECK(sums == expected);
  CHECK(lfrac::apply(diff, std::span<const Rational>(sums)) == ones);

  std::vector<Rational> zeros{q(0), q(0), q(0), q(0)};
  OperatorSpec<Rational> any{q(-3, 7), q(2, 5)};
  CHECK(lfrac::inverse_apply(any, std::span<const Rational>(zeros)) == zeros);

  OperatorSpec<Rational> frac{q(1, 2), q(1, 4)};
  auto x = lfrac::SeededRng(16).rational_vector(16, 9, 9);
  auto roundtrip = lfrac::inverse_apply(frac, std::span<const Rational>(
                                                  lfrac::apply(frac, std::span<const Rational>(x))));
  CHECK(roundtrip == x);

  lfrac::SeededRng rng(64);
  for (int trial = 0; trial < 10; ++trial) {
    OperatorSpec<Rational> spec{rng.rational(9, 9), rng.rational(9, 9)};
    auto y = rng.rational_vector(32, 9, 9);
    CHECK(lfrac::apply(spec, std::span<const Rational>(
                                 lfrac::inverse_apply(spec, std::span<const Rational>(y)))) == y);
    CHECK(lfrac::inverse_apply(spec, std::span<const Rational>(
                                         lfrac::apply(spec, std::span<const Rational>(y)))) == y);
  }
}

TEST_CASE("float roundtrip accuracy on moderate parameters") {
  lfrac::SeededRng rng(1234);
  for (int trial = 0; trial < 25; ++trial) {
    OperatorSpec<double> spec{rng.in_range(-1.25, 1.25), rng.in_range(-1.25, 1.25)};
    auto x = rng.unit_vector(64);
    auto mid = lfrac::apply(spec, std::span<const double>(x));
    auto back = lfrac::inverse_apply(spec, std::span<const double>(mid));
    for (size_t k = 0; k < x.size(); ++k) {
      CHECK(std::abs(back[k] - x[k]) <= 1e-9);
    }
  }
}
