// Copyright 2026 The panint Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/// \file panint/lp.hpp
///
/// The covering LP behind the concave integral.
///
///   primal:  max sum_S lambda_S mu(S)  s.t.  sum_{S ni x} lambda_S <= f(x),  lambda >= 0
///   dual:    min sum_x f(x) y_x        s.t.  sum_{x in S} y_x >= mu(S),      y >= 0
///
/// The dual has n variables and 2^n - 1 constraints. It is solved with a
/// revised simplex on the primal whose basis is n x n; each pivot prices the
/// 2^n - 1 dual constraints by one lazy scan over subsets, so no tableau
/// column is ever stored. Bland's rule selects entering and leaving
/// variables. At optimality the simplex multipliers are a feasible dual
/// solution, returned as the certificate.

#ifndef PANINT_LP_HPP
#define PANINT_LP_HPP

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "witness.hpp"

namespace panint {

template <Scalar T>
using DenseMatrix = std::vector<std::vector<T>>;

/// Solves A x = b by Gaussian elimination. Float mode pivots on the largest
/// magnitude in the column; exact mode on the first nonzero. Returns nullopt
/// for a singular A.
template <Scalar T>
std::optional<std::vector<T>> dense_solve(DenseMatrix<T> a, std::vector<T> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = n;
    if constexpr (is_exact_v<T>) {
      for (std::size_t r = col; r < n && pivot == n; ++r)
        if (a[r][col] != 0) pivot = r;
    } else {
      double best = 1e-13;
      for (std::size_t r = col; r < n; ++r) {
        if (std::abs(a[r][col]) > best) {
          best = std::abs(a[r][col]);
          pivot = r;
        }
      }
    }
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == T(0)) continue;
      const T factor = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
      b[r] -= factor * b[col];
    }
  }
  std::vector<T> x(n, T(0));
  for (std::size_t i = n; i-- > 0;) {
    T acc = b[i];
    for (std::size_t c = i + 1; c < n; ++c) acc -= a[i][c] * x[c];
    x[i] = acc / a[i][i];
  }
  return x;
}

template <Scalar T>
struct CoverLpSolution {
  DualCertificate<T> certificate;
  /// Basic primal sets with their weights (zero weights omitted).
  std::vector<std::pair<Subset, T>> primal;
  std::size_t pivots = 0;
};

/// Full solve; see the file comment.
template <Scalar T>
CoverLpSolution<T> solve_cover_lp(const RealFunction<T>& f, const Capacity<T>& mu) {
  require_same_space(f, mu);
  require_nonnegative(f);

  const unsigned n = mu.points();
  const std::uint32_t count = mu.space().subset_count();
  const std::size_t structural = count - 1;  // column j <-> subset j + 1

  double eps = 0.0;
  if constexpr (!is_exact_v<T>) eps = 1e-12 * std::max(1.0, to_double(mu.total()));

  auto column_entry = [&](std::size_t j, unsigned row) -> T {
    if (j < structural) return ((j + 1) >> row) & 1u ? T(1) : T(0);
    return j - structural == row ? T(1) : T(0);
  };
  auto column_cost = [&](std::size_t j) -> T {
    return j < structural ? mu(Subset{static_cast<std::uint32_t>(j + 1)}) : T(0);
  };

  std::vector<std::size_t> basis(n);
  for (unsigned i = 0; i < n; ++i) basis[i] = structural + i;

  std::vector<T> ysum(count, T(0));
  std::vector<T> x_basic;
  std::vector<T> y;
  std::size_t pivots = 0;
  const std::size_t pivot_limit = 1'000'000;

  while (true) {
    DenseMatrix<T> b_mat(n, std::vector<T>(n)), b_trans(n, std::vector<T>(n));
    std::vector<T> c_basic(n);
    for (unsigned k = 0; k < n; ++k) {
      c_basic[k] = column_cost(basis[k]);
      for (unsigned r = 0; r < n; ++r) {
        b_mat[r][k] = column_entry(basis[k], r);
        b_trans[k][r] = b_mat[r][k];
      }
    }
    auto xb = dense_solve(b_mat, f.values());
    auto yy = dense_solve(b_trans, c_basic);
    if (!xb || !yy) throw std::logic_error("simplex basis became singular");
    x_basic = std::move(*xb);
    y = std::move(*yy);

    // Bland pricing: first column (subsets ascending, then slacks) whose
    // reduced cost is positive.
    std::optional<std::size_t> entering;
    for (std::uint32_t s = 1; s < count && !entering; ++s) {
      const std::uint32_t low = s & (0 - s);
      ysum[s] = ysum[s & ~low] + y[std::countr_zero(low)];
      if (mu(Subset{s}) - ysum[s] > T(eps)) entering = s - 1;
    }
    for (unsigned i = 0; i < n && !entering; ++i)
      if (-y[i] > T(eps)) entering = structural + i;
    if (!entering) break;

    if (++pivots > pivot_limit) throw std::logic_error("simplex pivot limit exceeded");

    std::vector<T> a_col(n);
    for (unsigned r = 0; r < n; ++r) a_col[r] = column_entry(*entering, r);
    auto direction = dense_solve(b_mat, a_col);
    if (!direction) throw std::logic_error("simplex basis became singular");

    // Bland ratio test: minimum ratio, ties to the smallest basic index.
    std::optional<unsigned> leave;
    T best_ratio = T(0);
    for (unsigned r = 0; r < n; ++r) {
      if (!((*direction)[r] > T(eps))) continue;
      T ratio = x_basic[r] / (*direction)[r];
      if constexpr (!is_exact_v<T>) ratio = std::max(ratio, 0.0);
      if (!leave || ratio < best_ratio - T(eps)) {
        leave = r;
        best_ratio = ratio;
      } else if (ratio <= best_ratio + T(eps) && basis[r] < basis[*leave]) {
        leave = r;
        best_ratio = std::min(best_ratio, ratio);
      }
    }
    if (!leave) throw std::logic_error("covering LP reported unbounded");
    basis[*leave] = *entering;
  }

  CoverLpSolution<T> out;
  out.pivots = pivots;
  for (auto& v : y) {
    if constexpr (!is_exact_v<T>) v = std::max(v, 0.0);
  }
  T objective = T(0);
  for (unsigned i = 0; i < n; ++i) objective += f[i] * y[i];
  out.certificate = DualCertificate<T>{std::move(y), objective};
  for (unsigned k = 0; k < n; ++k) {
    if (basis[k] < structural && x_basic[k] != T(0)) {
      out.primal.emplace_back(Subset{static_cast<std::uint32_t>(basis[k] + 1)}, x_basic[k]);
    }
  }
  std::sort(out.primal.begin(), out.primal.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

/// Optimal dual certificate of the covering LP.
template <Scalar T>
DualCertificate<T> solve_cover_dual(const RealFunction<T>& f, const Capacity<T>& mu) {
  return solve_cover_lp(f, mu).certificate;
}

template <Scalar T>
struct PrimalVertex {
  T value;
  std::vector<std::pair<Subset, T>> weights;
};

/// Brute-force primal optimum: every vertex of {lambda >= 0, M lambda <= f}
/// has at most n nonzero weights on sets C with |C| tight rows R, so the
/// optimum is found by solving M[R, C] lambda = f_R for all (C, R) and
/// keeping the best feasible solution. Limited to n <= 5.
template <Scalar T>
PrimalVertex<T> primal_enumeration_vertex(const RealFunction<T>& f, const Capacity<T>& mu) {
  require_same_space(f, mu);
  require_nonnegative(f);
  const unsigned n = mu.points();
  if (n > 5) throw error(errc::too_large, "primal enumeration is limited to 5 points");

  const std::uint32_t sets = (std::uint32_t{1} << n) - 1;
  double tol = 0.0;
  if constexpr (!is_exact_v<T>) tol = 1e-10 * std::max(1.0, to_double(mu.total()));

  // Plain elimination without row exchanges beyond finding a nonzero. The
  // matrices are 0/1 with k <= 5, so a nonzero pivot has magnitude >= 1/5.
  auto solve_small = []<class U>(std::vector<std::vector<U>> m, std::vector<U> rhs) -> std::optional<std::vector<U>> {
    auto is_zero = [](const U& v) {
      if constexpr (std::is_same_v<U, double>) {
        return std::abs(v) < 1e-9;
      } else {
        return v == U(0);
      }
    };
    const std::size_t k = rhs.size();
    for (std::size_t c = 0; c < k; ++c) {
      std::size_t p = c;
      while (p < k && is_zero(m[p][c])) ++p;
      if (p == k) return std::nullopt;
      std::swap(m[p], m[c]);
      std::swap(rhs[p], rhs[c]);
      for (std::size_t r = 0; r < k; ++r) {
        if (r == c || is_zero(m[r][c])) continue;
        const U factor = m[r][c] / m[c][c];
        for (std::size_t j = c; j < k; ++j) m[r][j] -= factor * m[c][j];
        rhs[r] -= factor * rhs[c];
      }
    }
    for (std::size_t c = 0; c < k; ++c) rhs[c] /= m[c][c];
    return rhs;
  };

  PrimalVertex<T> best{T(0), {}};
  std::vector<std::uint32_t> cols;
  std::vector<unsigned> rows;

  std::vector<double> f_double(n);
  double f_scale = 1.0;
  for (unsigned x = 0; x < n; ++x) {
    f_double[x] = to_double(f[x]);
    f_scale = std::max(f_scale, f_double[x]);
  }

  // Exact mode screens each (C, R) in double first and only re-solves the
  // survivors exactly.
  auto screened_out = [&](std::size_t k) {
    std::vector<std::vector<double>> m(k, std::vector<double>(k));
    std::vector<double> rhs(k);
    for (std::size_t r = 0; r < k; ++r) {
      rhs[r] = f_double[rows[r]];
      for (std::size_t c = 0; c < k; ++c) m[r][c] = (cols[c] >> rows[r]) & 1u ? 1.0 : 0.0;
    }
    auto sol = solve_small(std::move(m), std::move(rhs));
    if (!sol) return true;
    const double slack = 1e-7 * f_scale;
    for (double v : *sol)
      if (v < -slack) return true;
    for (unsigned x = 0; x < n; ++x) {
      double load = 0.0;
      for (std::size_t c = 0; c < k; ++c)
        if ((cols[c] >> x) & 1u) load += (*sol)[c];
      if (load > f_double[x] + slack) return true;
    }
    return false;
  };

  auto evaluate = [&]() {
    const std::size_t k = cols.size();
    if constexpr (is_exact_v<T>) {
      if (screened_out(k)) return;
    }
    std::vector<std::vector<T>> m(k, std::vector<T>(k));
    std::vector<T> rhs(k);
    for (std::size_t r = 0; r < k; ++r) {
      rhs[r] = f[rows[r]];
      for (std::size_t c = 0; c < k; ++c) m[r][c] = (cols[c] >> rows[r]) & 1u ? T(1) : T(0);
    }
    auto sol = solve_small(std::move(m), std::move(rhs));
    if (!sol) return;
    for (const auto& v : *sol)
      if (v < T(-tol)) return;
    for (unsigned x = 0; x < n; ++x) {
      T load = T(0);
      for (std::size_t c = 0; c < k; ++c)
        if ((cols[c] >> x) & 1u) load += (*sol)[c];
      if (load > f[x] + T(tol)) return;
    }
    T value = T(0);
    for (std::size_t c = 0; c < k; ++c) value += (*sol)[c] * mu(Subset{cols[c]});
    if (value > best.value) {
      best.value = value;
      best.weights.clear();
      for (std::size_t c = 0; c < k; ++c) best.weights.emplace_back(Subset{cols[c]}, (*sol)[c]);
    }
  };

  // All row subsets of the current size, then all column subsets.
  auto pick_rows = [&](auto&& self, unsigned start) -> void {
    if (rows.size() == cols.size()) {
      evaluate();
      return;
    }
    for (unsigned r = start; r < n; ++r) {
      rows.push_back(r);
      self(self, r + 1);
      rows.pop_back();
    }
  };
  auto pick_cols = [&](auto&& self, std::uint32_t start) -> void {
    if (!cols.empty()) pick_rows(pick_rows, 0);
    if (cols.size() == n) return;
    for (std::uint32_t s = start; s <= sets; ++s) {
      cols.push_back(s);
      self(self, s + 1);
      cols.pop_back();
    }
  };
  pick_cols(pick_cols, 1);
  return best;
}

template <Scalar T>
T primal_enumeration_oracle(const RealFunction<T>& f, const Capacity<T>& mu) {
  return primal_enumeration_vertex(f, mu).value;
}

/// Concave integral: the primal optimum, certified by the dual.
template <Scalar T>
IntegralResult<T> concave_integral(const RealFunction<T>& f, const Capacity<T>& mu) {
  auto cert = solve_cover_dual(f, mu);
  T value = cert.objective;
  return {value, Engine::lp, std::move(cert), std::nullopt};
}

}  // namespace panint

#endif  // PANINT_LP_HPP
