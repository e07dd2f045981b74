// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <string>
#include <vector>

#include "lfrac/difference.hpp"

namespace lfrac {

/// Checks the weight-sequence invariants for the first `needed` entries:
/// present and nonzero.
template <class T>
void validate_weights(std::span<const T> v, size_t needed, const char* who) {
  if (v.size() < needed) {
    throw InvariantError(std::string(who) + ": weight sequence has " +
                         std::to_string(v.size()) + " terms, needs " + std::to_string(needed));
  }
  for (size_t i = 0; i < needed; ++i) {
    if (v[i] == T(0)) {
      throw InvariantError(std::string(who) + ": zero weight at index " + std::to_string(i));
    }
  }
}

/// Weighted cumulative transform y_n = sum_{j=0}^{n} v_j * (Dx)_j, where D is
/// the (a, l) difference operator.
template <class T>
std::vector<T> forward_transform(const OperatorSpec<T>& spec, std::span<const T> v,
                                 std::span<const T> x) {
  validate_weights(v, x.size(), "forward_transform");
  std::vector<T> dx = lfrac::apply(spec, x);
  std::vector<T> y(x.size());
  accumulator_t<T> acc(0);
  for (size_t n = 0; n < x.size(); ++n) {
    acc += static_cast<accumulator_t<T>>(v[n]) * static_cast<accumulator_t<T>>(dx[n]);
    y[n] = static_cast<T>(acc);
  }
  check_finite(std::span<const T>(y), "forward_transform");
  return y;
}

/// Matrix realization of the forward transform:
/// c_{nm} = sum_{i=0}^{n-m} (-a)_{i,l}/i! * v_{i+m} for m <= n.
template <class T>
TriangularKernel<T> build_c(const OperatorSpec<T>& spec, std::span<const T> v, long n) {
  if (n < 0) throw InvariantError("build_c: dimension must be nonnegative");
  validate_weights(v, static_cast<size_t>(n), "build_c");
  TriangularKernel<T> kernel(n);
  if (n == 0) return kernel;
  std::vector<T> coeffs = coefficient_stream(spec, n - 1);
  kern::build_c(std::span<const T>(coeffs), v, kernel);
  check_finite(std::span<const T>(kernel.entries), "build_c");
  return kernel;
}

/// Inverts the forward transform on a prefix:
/// x_n = D^{-1} applied to u, u_n = (y_n - y_{n-1}) / v_n with y_{-1} = 0.
template <class T>
std::vector<T> reconstruct(const OperatorSpec<T>& spec, std::span<const T> v,
                           std::span<const T> y) {
  validate_weights(v, y.size(), "reconstruct");
  std::vector<T> u(y.size());
  for (size_t n = 0; n < y.size(); ++n) {
    T diff = n == 0 ? y[n] : T(y[n] - y[n - 1]);
    u[n] = diff / v[n];
  }
  return inverse_apply(spec, std::span<const T>(u));
}

/// y = K * x for a lower-triangular kernel.
template <class T>
std::vector<T> tri_matvec(const TriangularKernel<T>& kernel, std::span<const T> x) {
  if (static_cast<long>(x.size()) < kernel.dim) {
    throw InvariantError("tri_matvec: input shorter than kernel dimension");
  }
  std::vector<T> y(static_cast<size_t>(kernel.dim));
  kern::tri_matvec(kernel, x, std::span<T>(y));
  check_finite(std::span<const T>(y), "tri_matvec");
  return y;
}

}  // namespace lfrac
