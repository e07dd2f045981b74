// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <random>
#include <span>
#include <vector>

#include "lfrac/transform.hpp"
#include "lfrac/verdict.hpp"

namespace lfrac {

enum class Condition { a1, a2, a3, a4, a5 };
enum class SpaceTag { linf, c0, c };
enum class DualKind { alpha, beta, gamma };

/// Candidate dual sequence z tested against the space defined by (spec, v),
/// everything truncated at `truncation` terms.
template <class T>
struct DualTestInput {
  OperatorSpec<T> spec;
  std::vector<T> v;
  std::vector<T> z;
  long truncation = 0;
};

template <class T>
struct ConditionVerdict {
  Condition condition;
  Verdict status = Verdict::inconclusive;
  std::vector<Evidence<T>> evidence;
  T tolerance{};
  /// False when some truncation level used the sampled subset search instead
  /// of exhaustive enumeration (condition A1 only).
  bool exhaustive = true;
  /// Trivial upper bound sum_n sum_k |d_nk|, reported alongside the sampled
  /// lower bound when the search was not exhaustive.
  std::optional<T> upper_bound;
};

template <class T>
struct DualMembership {
  SpaceTag space;
  DualKind kind;
  Verdict status = Verdict::inconclusive;
  std::vector<ConditionVerdict<T>> conditions;
};

namespace detail {

template <class T>
void validate_dual_input(const DualTestInput<T>& input, const char* who) {
  if (input.truncation < 0) throw InvariantError(std::string(who) + ": negative truncation");
  const size_t n = static_cast<size_t>(input.truncation);
  validate_weights(std::span<const T>(input.v), n, who);
  if (input.z.size() < n) {
    throw InvariantError(std::string(who) + ": dual candidate has " +
                         std::to_string(input.z.size()) + " terms, needs " + std::to_string(n));
  }
}

}  // namespace detail

/// Kernel of the diagonal identity z_n x_n = (D y)_n, where x is the
/// reconstruction of y. Diagonal z_n/v_n; below it
/// z_n * ((a)_{n-k,l}/((n-k)! v_k) - (a)_{n-k-1,l}/((n-k-1)! v_{k+1})).
template <class T>
TriangularKernel<T> build_d(const DualTestInput<T>& input) {
  detail::validate_dual_input(input, "build_d");
  TriangularKernel<T> kernel(input.truncation);
  if (input.truncation == 0) return kernel;
  std::vector<T> p =
      coefficient_stream(OperatorSpec<T>{T(-input.spec.a), input.spec.l}, input.truncation - 1);
  kern::build_d(std::span<const T>(p), std::span<const T>(input.v), std::span<const T>(input.z),
                kernel);
  check_finite(std::span<const T>(kernel.entries), "build_d");
  return kernel;
}

/// Kernel of the partial-sum identity sum_{r<=n} z_r x_r = (E y)_n. Diagonal
/// z_n/v_n; below it
/// 1/v_k sum_{i<=n-k} (a)_{i,l}/i! z_{k+i} - 1/v_{k+1} sum_{i<=n-k-1} (a)_{i,l}/i! z_{k+i+1}.
template <class T>
TriangularKernel<T> build_e(const DualTestInput<T>& input) {
  detail::validate_dual_input(input, "build_e");
  TriangularKernel<T> kernel(input.truncation);
  if (input.truncation == 0) return kernel;
  std::vector<T> p =
      coefficient_stream(OperatorSpec<T>{T(-input.spec.a), input.spec.l}, input.truncation - 1);
  kern::build_e(std::span<const T>(p), std::span<const T>(input.v), std::span<const T>(input.z),
                kernel);
  check_finite(std::span<const T>(kernel.entries), "build_e");
  return kernel;
}

namespace detail {

template <class T>
T subset_value(const std::vector<std::vector<T>>& rows, long level,
               const std::vector<char>& flags) {
  accumulator_t<T> total(0);
  for (long n = 0; n < level; ++n) {
    accumulator_t<T> s(0);
    const auto& row = rows[static_cast<size_t>(n)];
    for (long k = 0; k < level; ++k) {
      if (flags[static_cast<size_t>(k)]) s += static_cast<accumulator_t<T>>(row[static_cast<size_t>(k)]);
    }
    total += abs_value(static_cast<T>(s));
  }
  return static_cast<T>(total);
}

}  // namespace detail

/// Condition A1 on an arbitrary dense matrix: supremum over finite column
/// subsets K of sum_n |sum_{k in K} b_nk|, evaluated at doubling truncations.
/// Levels within `exhaustive_subset_limit` columns are enumerated exactly;
/// larger levels report the best of sampled subsets (a lower bound) together
/// with the trivial upper bound sum_n sum_k |b_nk|.
template <class T>
ConditionVerdict<T> check_a1_matrix(const std::vector<std::vector<T>>& input_rows,
                                    const DiagnosticOptions<T>& opt) {
  const long dim = static_cast<long>(input_rows.size());
  // Pad to square so kernels can index freely.
  std::vector<std::vector<T>> rows(input_rows.size());
  for (size_t n = 0; n < input_rows.size(); ++n) {
    rows[n] = input_rows[n];
    rows[n].resize(static_cast<size_t>(dim), T(0));
  }

  ConditionVerdict<T> verdict;
  verdict.condition = Condition::a1;
  verdict.tolerance = opt.tail_tolerance;

  std::vector<char> carried_best;
  for (long level : truncation_levels(dim)) {
    T value(0);
    if (level <= opt.exhaustive_subset_limit && level <= 62) {
      auto result = kern::best_subset(rows, level, level);
      value = result.value;
      carried_best.assign(static_cast<size_t>(level), 0);
      for (long k = 0; k < level; ++k) {
        carried_best[static_cast<size_t>(k)] = static_cast<char>((result.mask >> k) & 1u);
      }
    } else {
      verdict.exhaustive = false;
      std::vector<std::vector<char>> candidates;
      std::vector<char> flags(static_cast<size_t>(level), 0);
      candidates.push_back(flags);                       // empty
      std::fill(flags.begin(), flags.end(), char(1));    // full
      candidates.push_back(flags);
      for (long k = 0; k < level; ++k) {
        std::fill(flags.begin(), flags.end(), char(0));
        flags[static_cast<size_t>(k)] = 1;
        candidates.push_back(flags);
      }
      if (!carried_best.empty()) {
        std::fill(flags.begin(), flags.end(), char(0));
        std::copy(carried_best.begin(), carried_best.end(), flags.begin());
        candidates.push_back(flags);
      }
      std::mt19937_64 rng(opt.seed + static_cast<std::uint64_t>(level) * 0x9e3779b97f4a7c15ull);
      for (long s = 0; s < opt.subset_samples; ++s) {
        for (long k = 0; k < level; ++k) {
          flags[static_cast<size_t>(k)] = static_cast<char>(rng() & 1u);
        }
        candidates.push_back(flags);
      }
      std::vector<T> values(candidates.size());
#pragma omp parallel for schedule(dynamic, 16)
      for (long c = 0; c < static_cast<long>(candidates.size()); ++c) {
        values[static_cast<size_t>(c)] =
            detail::subset_value(rows, level, candidates[static_cast<size_t>(c)]);
      }
      size_t best_index = 0;
      for (size_t c = 1; c < values.size(); ++c) {
        if (values[c] > values[best_index]) best_index = c;
      }
      value = values[best_index];
      carried_best = candidates[best_index];
    }
    if (!verdict.evidence.empty() && verdict.evidence.back().value > value) {
      value = verdict.evidence.back().value;  // sup over nested subsets never decreases
    }
    verdict.evidence.push_back({level, value});
  }

  if (!verdict.exhaustive && dim > 0) {
    accumulator_t<T> bound(0);
    for (long n = 0; n < dim; ++n) {
      for (long k = 0; k < dim; ++k) {
        bound += static_cast<accumulator_t<T>>(
            abs_value(rows[static_cast<size_t>(n)][static_cast<size_t>(k)]));
      }
    }
    verdict.upper_bound = static_cast<T>(bound);
  }

  verdict.status = sup_verdict(verdict.evidence, opt);
  return verdict;
}

template <class T>
ConditionVerdict<T> check_a1(const DualTestInput<T>& input, const DiagnosticOptions<T>& opt) {
  return check_a1_matrix(build_d(input).dense_rows(), opt);
}

/// Condition A2: columnwise limits of E exist. Defect per level: the largest
/// oscillation of e_{nk} over the tail rows, among columns with a full tail.
template <class T>
ConditionVerdict<T> check_a2_kernel(const TriangularKernel<T>& e, const DiagnosticOptions<T>& opt) {
  ConditionVerdict<T> verdict;
  verdict.condition = Condition::a2;
  verdict.tolerance = opt.tail_tolerance;
  for (long level : truncation_levels(e.dim)) {
    T defect(0);
    const long tail_begin = level / 2;
    for (long k = 0; k < tail_begin; ++k) {
      std::vector<T> column;
      column.reserve(static_cast<size_t>(level - tail_begin));
      for (long n = tail_begin; n < level; ++n) column.push_back(e.at(n, k));
      T osc = oscillation(std::span<const T>(column));
      if (osc > defect) defect = osc;
    }
    verdict.evidence.push_back({level, defect});
  }
  verdict.status = limit_verdict(verdict.evidence, opt);
  return verdict;
}

template <class T>
ConditionVerdict<T> check_a2(const DualTestInput<T>& input, const DiagnosticOptions<T>& opt) {
  return check_a2_kernel(build_e(input), opt);
}

/// Condition A3: lim_n sum_k |e_nk| = sum_k |lim_n e_nk|. Defect per level:
/// oscillation of the row absolute sums over the tail, plus the gap between
/// the last row sum and the partial sum of estimated column limits.
template <class T>
ConditionVerdict<T> check_a3_kernel(const TriangularKernel<T>& e, const DiagnosticOptions<T>& opt) {
  ConditionVerdict<T> verdict;
  verdict.condition = Condition::a3;
  verdict.tolerance = opt.tail_tolerance;
  std::vector<T> abs_sums = kern::row_abs_sums(e);
  for (long level : truncation_levels(e.dim)) {
    T defect = oscillation(tail_window(std::span<const T>(abs_sums), level));
    const long tail_begin = level / 2;
    accumulator_t<T> column_limits(0);
    for (long k = 0; k < tail_begin; ++k) {
      column_limits += static_cast<accumulator_t<T>>(abs_value(e.at(level - 1, k)));
    }
    T gap = abs_value(T(abs_sums[static_cast<size_t>(level - 1)] - static_cast<T>(column_limits)));
    if (gap > defect) defect = gap;
    verdict.evidence.push_back({level, defect});
  }
  verdict.status = limit_verdict(verdict.evidence, opt);
  return verdict;
}

template <class T>
ConditionVerdict<T> check_a3(const DualTestInput<T>& input, const DiagnosticOptions<T>& opt) {
  return check_a3_kernel(build_e(input), opt);
}

/// Condition A4: sup_n sum_k |e_nk| < infinity. Evidence: running maxima of
/// the row absolute sums.
template <class T>
ConditionVerdict<T> check_a4_kernel(const TriangularKernel<T>& e, const DiagnosticOptions<T>& opt) {
  ConditionVerdict<T> verdict;
  verdict.condition = Condition::a4;
  verdict.tolerance = opt.tail_tolerance;
  std::vector<T> abs_sums = kern::row_abs_sums(e);
  T running(0);
  long next = 0;
  for (long level : truncation_levels(e.dim)) {
    for (; next < level; ++next) {
      if (abs_sums[static_cast<size_t>(next)] > running) running = abs_sums[static_cast<size_t>(next)];
    }
    verdict.evidence.push_back({level, running});
  }
  verdict.status = sup_verdict(verdict.evidence, opt);
  return verdict;
}

template <class T>
ConditionVerdict<T> check_a4(const DualTestInput<T>& input, const DiagnosticOptions<T>& opt) {
  return check_a4_kernel(build_e(input), opt);
}

/// Condition A5: lim_n sum_k e_nk exists. Defect per level: oscillation of
/// the plain row sums over the tail.
template <class T>
ConditionVerdict<T> check_a5_kernel(const TriangularKernel<T>& e, const DiagnosticOptions<T>& opt) {
  ConditionVerdict<T> verdict;
  verdict.condition = Condition::a5;
  verdict.tolerance = opt.tail_tolerance;
  std::vector<T> sums = kern::row_sums(e);
  for (long level : truncation_levels(e.dim)) {
    verdict.evidence.push_back({level, oscillation(tail_window(std::span<const T>(sums), level))});
  }
  verdict.status = limit_verdict(verdict.evidence, opt);
  return verdict;
}

template <class T>
ConditionVerdict<T> check_a5(const DualTestInput<T>& input, const DiagnosticOptions<T>& opt) {
  return check_a5_kernel(build_e(input), opt);
}

inline Verdict combine_verdicts(Verdict a, Verdict b) {
  if (a == Verdict::violated || b == Verdict::violated) return Verdict::violated;
  if (a == Verdict::inconclusive || b == Verdict::inconclusive) return Verdict::inconclusive;
  return Verdict::satisfied;
}

/// Membership test for the alpha/beta/gamma dual of the chosen space:
/// alpha uses A1 on D; beta uses A2+A3 (bounded), A2+A4 (null), A2+A4+A5
/// (convergent); gamma uses A4. The composite status is the weakest of the
/// member conditions.
template <class T>
DualMembership<T> dual_membership(const DualTestInput<T>& input, SpaceTag space, DualKind kind,
                                  const DiagnosticOptions<T>& opt) {
  DualMembership<T> result;
  result.space = space;
  result.kind = kind;
  switch (kind) {
    case DualKind::alpha:
      result.conditions.push_back(check_a1(input, opt));
      break;
    case DualKind::beta: {
      TriangularKernel<T> e = build_e(input);
      result.conditions.push_back(check_a2_kernel(e, opt));
      if (space == SpaceTag::linf) {
        result.conditions.push_back(check_a3_kernel(e, opt));
      } else {
        result.conditions.push_back(check_a4_kernel(e, opt));
        if (space == SpaceTag::c) result.conditions.push_back(check_a5_kernel(e, opt));
      }
      break;
    }
    case DualKind::gamma:
      result.conditions.push_back(check_a4(input, opt));
      break;
  }
  result.status = Verdict::satisfied;
  for (const auto& condition : result.conditions) {
    result.status = combine_verdicts(result.status, condition.status);
  }
  return result;
}

}  // namespace lfrac
