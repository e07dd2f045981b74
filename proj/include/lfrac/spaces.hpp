// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>
#include <vector>

#include "lfrac/duals.hpp"
#include "lfrac/transform.hpp"
#include "lfrac/verdict.hpp"

namespace lfrac {

/// Truncated value of sup_n |y_n| for y the weighted cumulative transform of
/// x; this is the space norm evaluated on the prefix.
template <class T>
T norm(const OperatorSpec<T>& spec, std::span<const T> v, std::span<const T> x) {
  if (x.empty()) throw InvariantError("norm: prefix must be nonempty");
  std::vector<T> y = forward_transform(spec, v, x);
  T best = abs_value(y[0]);
  for (const T& value : y) {
    T a = abs_value(value);
    if (a > best) best = a;
  }
  return best;
}

template <class T>
struct MembershipReport {
  SpaceTag space;
  Verdict status = Verdict::inconclusive;
  T norm_estimate{};
  /// (truncation, sup of |y_n| below it) per doubling level; nondecreasing.
  std::vector<Evidence<T>> trend;
  /// Space-specific defect per level: tail oscillation for the convergent
  /// space, tail sup of |y_n| for the null space, zeros for the bounded one.
  std::vector<Evidence<T>> detail;
};

/// Finite-evidence membership diagnostic for x against the bounded /
/// convergent / null transform space. Verdicts are graded: boundedness looks
/// for sustained growth of the sup trend, convergence for a vanishing tail
/// oscillation, nullity additionally for a tail that actually falls to zero.
/// The rules nest, so a null-consistent sequence is also convergent- and
/// bounded-consistent on the same evidence.
template <class T>
MembershipReport<T> classify(const OperatorSpec<T>& spec, std::span<const T> v,
                             std::span<const T> x, SpaceTag space,
                             const DiagnosticOptions<T>& opt) {
  if (x.empty()) throw InvariantError("classify: prefix must be nonempty");
  std::vector<T> y = forward_transform(spec, v, x);
  std::vector<T> abs_y(y.size());
  for (size_t i = 0; i < y.size(); ++i) abs_y[i] = abs_value(y[i]);

  MembershipReport<T> report;
  report.space = space;

  std::vector<Evidence<T>> sup_trend;
  std::vector<Evidence<T>> osc_trend;
  std::vector<Evidence<T>> tail_sup_trend;
  T running(0);
  long next = 0;
  for (long level : truncation_levels(static_cast<long>(y.size()))) {
    for (; next < level; ++next) {
      if (abs_y[static_cast<size_t>(next)] > running) running = abs_y[static_cast<size_t>(next)];
    }
    sup_trend.push_back({level, running});
    osc_trend.push_back({level, oscillation(tail_window(std::span<const T>(y), level))});
    auto window = tail_window(std::span<const T>(abs_y), level);
    T tail_sup(0);
    for (const T& a : window) {
      if (a > tail_sup) tail_sup = a;
    }
    tail_sup_trend.push_back({level, tail_sup});
  }
  report.trend = sup_trend;
  report.norm_estimate = sup_trend.back().value;

  Verdict bounded = sup_verdict(sup_trend, opt);
  Verdict convergent = bounded == Verdict::satisfied ? limit_verdict(osc_trend, opt) : bounded;

  switch (space) {
    case SpaceTag::linf:
      report.status = bounded;
      report.detail = sup_trend;
      break;
    case SpaceTag::c:
      report.status = convergent;
      report.detail = osc_trend;
      break;
    case SpaceTag::c0: {
      report.detail = tail_sup_trend;
      if (convergent != Verdict::satisfied) {
        report.status = convergent;
        break;
      }
      const T& tail_sup = tail_sup_trend.back().value;
      if (tail_sup <= opt.tail_tolerance) {
        report.status = Verdict::satisfied;
      } else {
        // The tail is Cauchy-stable yet bounded away from zero: the limit is
        // demonstrably nonzero at this truncation.
        auto window = tail_window(std::span<const T>(abs_y), tail_sup_trend.back().truncation);
        T tail_min = window.empty() ? T(0) : window[0];
        for (const T& a : window) {
          if (a < tail_min) tail_min = a;
        }
        T margin = opt.tail_tolerance + osc_trend.back().value;
        report.status = tail_min > margin ? Verdict::violated : Verdict::inconclusive;
      }
      break;
    }
  }
  return report;
}

}  // namespace lfrac
