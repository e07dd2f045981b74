// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "lfrac/scalar.hpp"

namespace lfrac {

/// Three-way outcome of a finite-truncation check of an asymptotic condition.
/// Finite prefixes cannot decide limits, so "satisfied" and "violated" are
/// always relative to the evidence collected at the computed truncations.
enum class Verdict { satisfied, violated, inconclusive };

template <class T>
struct Evidence {
  long truncation;
  T value;
};

/// Knobs shared by every condition checker. Exact mode demands exact
/// equality / eventual constancy (zero tail tolerance); float mode compares
/// tails against `tail_tolerance`. Divergence is only declared after the
/// evidence keeps growing by `growth_ratio` per doubling for at least
/// `min_growth_steps` steps and ends beyond `divergence_threshold`.
template <class T>
struct DiagnosticOptions {
  T tail_tolerance;
  T divergence_threshold;
  T growth_ratio;
  int min_growth_steps = 3;
  long exhaustive_subset_limit = 20;
  long subset_samples = 512;
  std::uint64_t seed = 12345;

  static DiagnosticOptions defaults() {
    if constexpr (scalar_traits<T>::exact) {
      return {T(0), T(1000000), T(5) / T(4)};
    } else {
      return {1e-10, 1e6, 1.25};
    }
  }
};

/// Doubling truncation levels ending at n: {n/8, n/4, n/2, n} (deduplicated,
/// ascending, at least one level when n >= 1).
inline std::vector<long> truncation_levels(long n) {
  std::vector<long> levels;
  for (long d = 8; d >= 1; d /= 2) {
    long level = n / d;
    if (level < 1) continue;
    if (levels.empty() || levels.back() != level) levels.push_back(level);
  }
  return levels;
}

/// True when the evidence grows by more than `growth_ratio` on each of the
/// last `min_growth_steps` steps.
template <class T>
bool sustained_growth(const std::vector<Evidence<T>>& evidence, const DiagnosticOptions<T>& opt) {
  if (evidence.size() < static_cast<size_t>(opt.min_growth_steps) + 1) return false;
  int steps = 0;
  for (size_t i = evidence.size() - 1; i >= 1; --i) {
    const T& cur = evidence[i].value;
    const T& prev = evidence[i - 1].value;
    T scaled = prev * opt.growth_ratio;
    if (cur > scaled) {
      ++steps;
    } else {
      break;
    }
    if (i == 1) break;
  }
  return steps >= opt.min_growth_steps;
}

/// Verdict rule for supremum-type evidence (nondecreasing sup estimates):
/// sustained growth past the divergence threshold is a violation, sustained
/// growth below it is inconclusive, a flattening trend is satisfied.
template <class T>
Verdict sup_verdict(const std::vector<Evidence<T>>& evidence, const DiagnosticOptions<T>& opt) {
  if (evidence.empty()) return Verdict::inconclusive;
  if (sustained_growth(evidence, opt)) {
    return evidence.back().value > opt.divergence_threshold ? Verdict::violated
                                                            : Verdict::inconclusive;
  }
  return Verdict::satisfied;
}

/// Verdict rule for defect-type evidence (nonnegative values that should fall
/// to zero when the underlying limit exists).
template <class T>
Verdict limit_verdict(const std::vector<Evidence<T>>& evidence, const DiagnosticOptions<T>& opt) {
  if (evidence.empty()) return Verdict::inconclusive;
  if (sustained_growth(evidence, opt) && evidence.back().value > opt.divergence_threshold) {
    return Verdict::violated;
  }
  if (evidence.back().value <= opt.tail_tolerance) return Verdict::satisfied;
  return Verdict::inconclusive;
}

/// max - min over a window of values; zero for windows shorter than 2.
template <class T>
T oscillation(std::span<const T> window) {
  if (window.size() < 2) return T(0);
  T lo = window[0];
  T hi = window[0];
  for (const T& w : window) {
    if (w < lo) lo = w;
    if (w > hi) hi = w;
  }
  return T(hi - lo);
}

/// The trailing half [level/2, level) of a prefix, the window every tail
/// diagnostic looks at.
template <class T>
std::span<const T> tail_window(std::span<const T> values, long level) {
  long begin = level / 2;
  return values.subspan(static_cast<size_t>(begin), static_cast<size_t>(level - begin));
}

}  // namespace lfrac
