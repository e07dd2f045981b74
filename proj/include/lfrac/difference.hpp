// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <vector>

#include "lfrac/kernels.hpp"
#include "lfrac/pochhammer.hpp"

namespace lfrac {

/// Applies the step-l fractional difference operator to a finite prefix:
/// y_k = sum_{i=0}^{k} (-a)_{i,l}/i! * x_{k-i}. Terms at negative indices
/// read as zero, so the output has the input's length.
template <class T>
std::vector<T> apply(const OperatorSpec<T>& spec, std::span<const T> x) {
  if (x.empty()) return {};
  std::vector<T> coeffs = coefficient_stream(spec, static_cast<long>(x.size()) - 1);
  const size_t support = support_length(std::span<const T>(coeffs));
  std::vector<T> y(x.size());
  kern::lower_convolve(std::span<const T>(coeffs.data(), std::max<size_t>(support, 1)), x,
                       std::span<T>(y));
  check_finite(std::span<const T>(y), "apply");
  return y;
}

/// Cauchy product of the coefficient streams of orders b and a at index m:
/// sum_{i=0}^{m} (-b)_{i,l}/i! * (-a)_{m-i,l}/(m-i)!. Equals
/// (-(a+b))_{m,l}/m!, which is what makes operator orders add under
/// composition.
template <class T>
T convolve_orders(const T& a, const T& b, const T& l, long m) {
  if (m < 0) throw InvariantError("convolve_orders: m must be nonnegative");
  std::vector<T> ca = coefficient_stream(OperatorSpec<T>{a, l}, m);
  std::vector<T> cb = coefficient_stream(OperatorSpec<T>{b, l}, m);
  accumulator_t<T> acc(0);
  for (long i = 0; i <= m; ++i) {
    acc += static_cast<accumulator_t<T>>(cb[static_cast<size_t>(i)]) *
           static_cast<accumulator_t<T>>(ca[static_cast<size_t>(m - i)]);
  }
  T result = static_cast<T>(acc);
  if (!is_finite_value(result)) throw OverflowError("convolve_orders: overflow", m);
  return result;
}

/// Applies the order-b operator, then the order-a operator. Both must share
/// the step l; the result equals a single application of order a+b.
template <class T>
std::vector<T> compose(const OperatorSpec<T>& outer, const OperatorSpec<T>& inner,
                       std::span<const T> x) {
  if (!(outer.l == inner.l)) {
    throw InvariantError("compose: operators must share the step parameter l");
  }
  std::vector<T> mid = lfrac::apply(inner, x);
  return lfrac::apply(outer, std::span<const T>(mid));
}

/// The inverse operator is the one of opposite order: applying (-a, l) undoes
/// (a, l) on every prefix.
template <class T>
std::vector<T> inverse_apply(const OperatorSpec<T>& spec, std::span<const T> y) {
  return lfrac::apply(OperatorSpec<T>{T(-spec.a), spec.l}, y);
}

}  // namespace lfrac
