// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <omp.h>

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "lfrac/scalar.hpp"

namespace lfrac {

/// Packed lower-triangular matrix: row n holds entries for columns 0..n and
/// starts at offset n(n+1)/2. Everything above the diagonal is identically
/// zero by construction.
template <class T>
struct TriangularKernel {
  long dim = 0;
  std::vector<T> entries;

  TriangularKernel() = default;
  explicit TriangularKernel(long n)
      : dim(n), entries(static_cast<size_t>(n) * (static_cast<size_t>(n) + 1) / 2) {}

  static size_t offset(long n) {
    return static_cast<size_t>(n) * (static_cast<size_t>(n) + 1) / 2;
  }
  T& at(long n, long m) { return entries[offset(n) + static_cast<size_t>(m)]; }
  const T& at(long n, long m) const { return entries[offset(n) + static_cast<size_t>(m)]; }

  std::span<T> row(long n) { return {entries.data() + offset(n), static_cast<size_t>(n) + 1}; }
  std::span<const T> row(long n) const {
    return {entries.data() + offset(n), static_cast<size_t>(n) + 1};
  }

  /// Square dense copy (zeros above the diagonal).
  std::vector<std::vector<T>> dense_rows() const {
    std::vector<std::vector<T>> rows(static_cast<size_t>(dim));
    for (long n = 0; n < dim; ++n) {
      rows[static_cast<size_t>(n)].assign(static_cast<size_t>(dim), T(0));
      for (long m = 0; m <= n; ++m) rows[static_cast<size_t>(n)][static_cast<size_t>(m)] = at(n, m);
    }
    return rows;
  }
};

// Data-parallel inner loops. Each kernel comes in two flavors: the OpenMP
// version used by the library proper and a plain serial reference used by the
// tests and the benchmark. Output elements are computed independently with a
// fixed inner-loop order, so results do not depend on the thread count.
namespace kern {

/// y_k = sum_{i<=k} coeffs[i] * x_{k-i}, with coeffs truncated to its nonzero
/// support by the caller.
template <class T>
void lower_convolve_serial(std::span<const T> coeffs, std::span<const T> x, std::span<T> y) {
  const long n = static_cast<long>(x.size());
  const long support = static_cast<long>(coeffs.size());
  for (long k = 0; k < n; ++k) {
    accumulator_t<T> acc(0);
    const long imax = std::min(k, support - 1);
    for (long i = 0; i <= imax; ++i) {
      acc += static_cast<accumulator_t<T>>(coeffs[static_cast<size_t>(i)]) *
             static_cast<accumulator_t<T>>(x[static_cast<size_t>(k - i)]);
    }
    y[static_cast<size_t>(k)] = static_cast<T>(acc);
  }
}

template <class T>
void lower_convolve(std::span<const T> coeffs, std::span<const T> x, std::span<T> y) {
  const long n = static_cast<long>(x.size());
  const long support = static_cast<long>(coeffs.size());
#pragma omp parallel for schedule(static)
  for (long k = 0; k < n; ++k) {
    accumulator_t<T> acc(0);
    const long imax = std::min(k, support - 1);
    for (long i = 0; i <= imax; ++i) {
      acc += static_cast<accumulator_t<T>>(coeffs[static_cast<size_t>(i)]) *
             static_cast<accumulator_t<T>>(x[static_cast<size_t>(k - i)]);
    }
    y[static_cast<size_t>(k)] = static_cast<T>(acc);
  }
}

/// y_n = sum_{m<=n} K[n][m] * x_m.
template <class T>
void tri_matvec_serial(const TriangularKernel<T>& kernel, std::span<const T> x, std::span<T> y) {
  for (long n = 0; n < kernel.dim; ++n) {
    accumulator_t<T> acc(0);
    auto row = kernel.row(n);
    for (long m = 0; m <= n; ++m) {
      acc += static_cast<accumulator_t<T>>(row[static_cast<size_t>(m)]) *
             static_cast<accumulator_t<T>>(x[static_cast<size_t>(m)]);
    }
    y[static_cast<size_t>(n)] = static_cast<T>(acc);
  }
}

template <class T>
void tri_matvec(const TriangularKernel<T>& kernel, std::span<const T> x, std::span<T> y) {
#pragma omp parallel for schedule(static)
  for (long n = 0; n < kernel.dim; ++n) {
    accumulator_t<T> acc(0);
    auto row = kernel.row(n);
    for (long m = 0; m <= n; ++m) {
      acc += static_cast<accumulator_t<T>>(row[static_cast<size_t>(m)]) *
             static_cast<accumulator_t<T>>(x[static_cast<size_t>(m)]);
    }
    y[static_cast<size_t>(n)] = static_cast<T>(acc);
  }
}

/// c_{nm} = sum_{i=0}^{n-m} coeffs[i] * v_{i+m}. Column m is the running
/// prefix of coeffs[n-m] * v_n, so columns build independently.
template <class T>
void build_c_serial(std::span<const T> coeffs, std::span<const T> v, TriangularKernel<T>& out) {
  const long dim = out.dim;
  for (long m = 0; m < dim; ++m) {
    accumulator_t<T> acc(0);
    for (long n = m; n < dim; ++n) {
      acc += static_cast<accumulator_t<T>>(coeffs[static_cast<size_t>(n - m)]) *
             static_cast<accumulator_t<T>>(v[static_cast<size_t>(n)]);
      out.at(n, m) = static_cast<T>(acc);
    }
  }
}

template <class T>
void build_c(std::span<const T> coeffs, std::span<const T> v, TriangularKernel<T>& out) {
  const long dim = out.dim;
#pragma omp parallel for schedule(dynamic, 8)
  for (long m = 0; m < dim; ++m) {
    accumulator_t<T> acc(0);
    for (long n = m; n < dim; ++n) {
      acc += static_cast<accumulator_t<T>>(coeffs[static_cast<size_t>(n - m)]) *
             static_cast<accumulator_t<T>>(v[static_cast<size_t>(n)]);
      out.at(n, m) = static_cast<T>(acc);
    }
  }
}

/// d_{nk} = z_n * (p[n-k]/v_k - p[n-k-1]/v_{k+1}) below the diagonal and
/// z_n/v_n on it, where p[i] = (a)_{i,l}/i! is the coefficient stream of the
/// inverse operator.
template <class T>
void build_d_serial(std::span<const T> p, std::span<const T> v, std::span<const T> z,
                    TriangularKernel<T>& out) {
  const long dim = out.dim;
  for (long n = 0; n < dim; ++n) {
    out.at(n, n) = z[static_cast<size_t>(n)] / v[static_cast<size_t>(n)];
    for (long k = 0; k < n; ++k) {
      T lhs = p[static_cast<size_t>(n - k)] / v[static_cast<size_t>(k)];
      T rhs = p[static_cast<size_t>(n - k - 1)] / v[static_cast<size_t>(k) + 1];
      out.at(n, k) = z[static_cast<size_t>(n)] * (lhs - rhs);
    }
  }
}

template <class T>
void build_d(std::span<const T> p, std::span<const T> v, std::span<const T> z,
             TriangularKernel<T>& out) {
  const long dim = out.dim;
#pragma omp parallel for schedule(dynamic, 8)
  for (long n = 0; n < dim; ++n) {
    out.at(n, n) = z[static_cast<size_t>(n)] / v[static_cast<size_t>(n)];
    for (long k = 0; k < n; ++k) {
      T lhs = p[static_cast<size_t>(n - k)] / v[static_cast<size_t>(k)];
      T rhs = p[static_cast<size_t>(n - k - 1)] / v[static_cast<size_t>(k) + 1];
      out.at(n, k) = z[static_cast<size_t>(n)] * (lhs - rhs);
    }
  }
}

/// e_{nk} = S(n,k)/v_k - S(n,k+1)/v_{k+1} with S(n,j) = sum_{i<=n-j} p[i] z_{j+i}
/// and S(n,n+1) = 0; the diagonal reduces to z_n/v_n. Serial route: advance the
/// whole S row by S(n,j) = S(n-1,j) + p[n-j] z_n, emitting one matrix row per
/// step.
template <class T>
void build_e_serial(std::span<const T> p, std::span<const T> v, std::span<const T> z,
                    TriangularKernel<T>& out) {
  const long dim = out.dim;
  std::vector<accumulator_t<T>> s(static_cast<size_t>(dim), accumulator_t<T>(0));
  for (long n = 0; n < dim; ++n) {
    for (long j = 0; j <= n; ++j) {
      s[static_cast<size_t>(j)] += static_cast<accumulator_t<T>>(p[static_cast<size_t>(n - j)]) *
                                   static_cast<accumulator_t<T>>(z[static_cast<size_t>(n)]);
    }
    for (long k = 0; k < n; ++k) {
      T lhs = static_cast<T>(s[static_cast<size_t>(k)]) / v[static_cast<size_t>(k)];
      T rhs = static_cast<T>(s[static_cast<size_t>(k) + 1]) / v[static_cast<size_t>(k) + 1];
      out.at(n, k) = lhs - rhs;
    }
    out.at(n, n) = static_cast<T>(s[static_cast<size_t>(n)]) / v[static_cast<size_t>(n)];
  }
}

/// Parallel route: columns are independent; column k runs the two prefix sums
/// S(.,k) and S(.,k+1) together.
template <class T>
void build_e(std::span<const T> p, std::span<const T> v, std::span<const T> z,
             TriangularKernel<T>& out) {
  const long dim = out.dim;
#pragma omp parallel for schedule(dynamic, 8)
  for (long k = 0; k < dim; ++k) {
    accumulator_t<T> sk(0);
    accumulator_t<T> sk1(0);
    for (long n = k; n < dim; ++n) {
      sk += static_cast<accumulator_t<T>>(p[static_cast<size_t>(n - k)]) *
            static_cast<accumulator_t<T>>(z[static_cast<size_t>(n)]);
      if (n > k) {
        sk1 += static_cast<accumulator_t<T>>(p[static_cast<size_t>(n - k - 1)]) *
               static_cast<accumulator_t<T>>(z[static_cast<size_t>(n)]);
        T lhs = static_cast<T>(sk) / v[static_cast<size_t>(k)];
        T rhs = static_cast<T>(sk1) / v[static_cast<size_t>(k) + 1];
        out.at(n, k) = lhs - rhs;
      } else {
        out.at(n, n) = static_cast<T>(sk) / v[static_cast<size_t>(n)];
      }
    }
  }
}

/// Per-row sums of absolute values.
template <class T>
std::vector<T> row_abs_sums_serial(const TriangularKernel<T>& kernel) {
  std::vector<T> sums(static_cast<size_t>(kernel.dim));
  for (long n = 0; n < kernel.dim; ++n) {
    accumulator_t<T> acc(0);
    for (const T& e : kernel.row(n)) acc += static_cast<accumulator_t<T>>(abs_value(e));
    sums[static_cast<size_t>(n)] = static_cast<T>(acc);
  }
  return sums;
}

template <class T>
std::vector<T> row_abs_sums(const TriangularKernel<T>& kernel) {
  std::vector<T> sums(static_cast<size_t>(kernel.dim));
#pragma omp parallel for schedule(dynamic, 8)
  for (long n = 0; n < kernel.dim; ++n) {
    accumulator_t<T> acc(0);
    for (const T& e : kernel.row(n)) acc += static_cast<accumulator_t<T>>(abs_value(e));
    sums[static_cast<size_t>(n)] = static_cast<T>(acc);
  }
  return sums;
}

/// Plain row sums (no absolute values).
template <class T>
std::vector<T> row_sums(const TriangularKernel<T>& kernel) {
  std::vector<T> sums(static_cast<size_t>(kernel.dim));
#pragma omp parallel for schedule(dynamic, 8)
  for (long n = 0; n < kernel.dim; ++n) {
    accumulator_t<T> acc(0);
    for (const T& e : kernel.row(n)) acc += static_cast<accumulator_t<T>>(e);
    sums[static_cast<size_t>(n)] = static_cast<T>(acc);
  }
  return sums;
}

/// Best value of sum_n |sum_{k in subset} rows[n][k]| over all subsets of the
/// first `cols` columns, restricted to the first `rows_used` rows. Exhaustive
/// Gray-code walk; feasible for cols <= ~20. Ties keep the smallest mask.
template <class T>
struct SubsetSearchResult {
  T value;
  std::uint64_t mask = 0;
};

template <class T>
SubsetSearchResult<T> best_subset_serial(const std::vector<std::vector<T>>& rows, long rows_used,
                                         long cols) {
  SubsetSearchResult<T> best{T(0), 0};
  std::vector<T> sums(static_cast<size_t>(rows_used), T(0));
  T total(0);
  const std::uint64_t count = std::uint64_t(1) << cols;
  for (std::uint64_t t = 1; t < count; ++t) {
    const int bit = __builtin_ctzll(t);
    const bool add = ((t ^ (t >> 1)) >> bit) & 1u;
    for (long n = 0; n < rows_used; ++n) {
      const T& entry = rows[static_cast<size_t>(n)][static_cast<size_t>(bit)];
      if (entry == T(0)) continue;
      T& s = sums[static_cast<size_t>(n)];
      total -= abs_value(s);
      if (add) {
        s += entry;
      } else {
        s -= entry;
      }
      total += abs_value(s);
    }
    const std::uint64_t mask = t ^ (t >> 1);
    if (total > best.value || (total == best.value && mask < best.mask)) {
      best.value = total;
      best.mask = mask;
    }
  }
  return best;
}

/// Parallel variant: the mask range is split into contiguous chunks, each
/// thread seeds its row sums from its first Gray code directly and walks from
/// there. The (value, mask) combine rule makes the result thread-count
/// independent.
template <class T>
SubsetSearchResult<T> best_subset(const std::vector<std::vector<T>>& rows, long rows_used,
                                  long cols) {
  const std::uint64_t count = std::uint64_t(1) << cols;
  const int chunks = std::max(1, std::min(omp_get_max_threads() * 2,
                                          static_cast<int>(count / 1024 + 1)));
  const std::uint64_t chunk_size = (count + chunks - 1) / chunks;
  std::vector<SubsetSearchResult<T>> partial(static_cast<size_t>(chunks), {T(0), 0});

#pragma omp parallel for schedule(static)
  for (int c = 0; c < chunks; ++c) {
    const std::uint64_t t0 = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(c) * chunk_size);
    const std::uint64_t t1 = std::min(count, (static_cast<std::uint64_t>(c) + 1) * chunk_size);
    if (t0 >= t1) continue;
    SubsetSearchResult<T> best{T(0), 0};
    std::vector<T> sums(static_cast<size_t>(rows_used), T(0));
    const std::uint64_t start_mask = (t0 - 1) ^ ((t0 - 1) >> 1);
    for (long n = 0; n < rows_used; ++n) {
      accumulator_t<T> acc(0);
      for (long k = 0; k < cols; ++k) {
        if ((start_mask >> k) & 1u) {
          acc += static_cast<accumulator_t<T>>(rows[static_cast<size_t>(n)][static_cast<size_t>(k)]);
        }
      }
      sums[static_cast<size_t>(n)] = static_cast<T>(acc);
    }
    T total(0);
    for (const T& s : sums) total += abs_value(s);
    for (std::uint64_t t = t0; t < t1; ++t) {
      const int bit = __builtin_ctzll(t);
      const bool add = ((t ^ (t >> 1)) >> bit) & 1u;
      for (long n = 0; n < rows_used; ++n) {
        const T& entry = rows[static_cast<size_t>(n)][static_cast<size_t>(bit)];
        if (entry == T(0)) continue;
        T& s = sums[static_cast<size_t>(n)];
        total -= abs_value(s);
        if (add) {
          s += entry;
        } else {
          s -= entry;
        }
        total += abs_value(s);
      }
      const std::uint64_t mask = t ^ (t >> 1);
      if (total > best.value || (total == best.value && mask < best.mask)) {
        best.value = total;
        best.mask = mask;
      }
    }
    partial[static_cast<size_t>(c)] = best;
  }

  SubsetSearchResult<T> best{T(0), 0};
  for (const auto& p : partial) {
    if (p.value > best.value || (p.value == best.value && p.mask < best.mask)) best = p;
  }
  return best;
}

}  // namespace kern
}  // namespace lfrac
