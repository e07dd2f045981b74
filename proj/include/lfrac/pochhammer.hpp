// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "lfrac/scalar.hpp"

namespace lfrac {

/// Parameters (a, l) of the step-l fractional difference operator. The
/// operator acting on a prefix is the lower-triangular convolution with
/// coefficients (-a)_{i,l} / i!.
template <class T>
struct OperatorSpec {
  T a;
  T l;
};

/// Step-l Pochhammer symbol (a)_{k,l} = a (a+l) (a+2l) ... (a+(k-1)l);
/// empty product (= 1) for k = 0.
template <class T>
T l_pochhammer(const T& a, const T& l, long k) {
  if (k < 0) throw InvariantError("l_pochhammer: k must be nonnegative");
  T prod(1);
  T factor = a;
  for (long j = 0; j < k; ++j) {
    prod *= factor;
    if constexpr (!scalar_traits<T>::exact) {
      if (!std::isfinite(prod)) {
        throw OverflowError("l_pochhammer: product overflowed", j + 1);
      }
    }
    factor += l;
  }
  return prod;
}

/// Convolution coefficients of the operator: coeffs[i] = (-a)_{i,l} / i! for
/// i = 0..n, generated by the ratio recurrence
///   coeffs[i+1] = coeffs[i] * (-a + i*l) / (i+1).
template <class T>
std::vector<T> coefficient_stream(const OperatorSpec<T>& spec, long n) {
  if (n < 0) throw InvariantError("coefficient_stream: n must be nonnegative");
  std::vector<T> coeffs(static_cast<size_t>(n) + 1);
  coeffs[0] = T(1);
  T factor = -spec.a;
  for (long i = 0; i < n; ++i) {
    T next = coeffs[static_cast<size_t>(i)] * factor;
    next /= T(i + 1);
    coeffs[static_cast<size_t>(i) + 1] = next;
    factor += spec.l;
  }
  check_finite(std::span<const T>(coeffs), "coefficient_stream");
  return coeffs;
}

/// Length of the leading nonzero block; coefficients at or past the returned
/// index are exactly zero. Once a coefficient is zero every later one is too,
/// so trailing zeros can be skipped in convolutions.
template <class T>
size_t support_length(std::span<const T> coeffs) {
  size_t n = coeffs.size();
  while (n > 0 && coeffs[n - 1] == T(0)) --n;
  return n;
}

}  // namespace lfrac
