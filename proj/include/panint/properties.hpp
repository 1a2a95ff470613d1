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

/// \file panint/properties.hpp
///
/// Exhaustive structural predicates on capacities. A failing predicate
/// reports the lexicographically smallest violating pair (A, B).

#ifndef PANINT_PROPERTIES_HPP
#define PANINT_PROPERTIES_HPP

#include <algorithm>
#include <limits>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "capacity.hpp"

namespace panint {

struct PropertyReport {
  std::string property;
  bool holds = true;
  std::optional<std::pair<Subset, Subset>> witness;
  /// Smallest margin (rhs - lhs of the defining inequality) seen by the
  /// scan; negative beyond tolerance iff the property fails.
  double slack = 0.0;
};

namespace detail {

template <Scalar T>
bool margin_violates(const T& margin) {
  if constexpr (is_exact_v<T>) {
    return margin < 0;
  } else {
    return margin < -scalar_traits<T>::predicate_tol;
  }
}

/// Shared driver for the two modularity predicates. `sign` = +1 checks
/// mu(A)+mu(B) - mu(A|B) - mu(A&B) >= 0, -1 checks the reverse.
template <Scalar T>
PropertyReport modularity(const Capacity<T>& mu, int sign, const char* name) {
  const auto& v = mu.table();
  const std::uint32_t count = mu.space().subset_count();
  const unsigned n = mu.points();
  PropertyReport report{name, true, std::nullopt, std::numeric_limits<double>::infinity()};
  auto margin_of = [&](std::uint32_t a, std::uint32_t b) {
    T m = v[a] + v[b] - v[a | b] - v[a & b];
    return sign > 0 ? m : T(-m);
  };

  // Adjacent (diminishing returns) conditions are equivalent to the full one.
  bool local_ok = true;
  for (std::uint32_t s = 0; s < count && local_ok; ++s) {
    for (unsigned i = 0; i < n && local_ok; ++i) {
      if ((s >> i) & 1u) continue;
      for (unsigned j = i + 1; j < n; ++j) {
        if ((s >> j) & 1u) continue;
        T m = margin_of(s | (1u << i), s | (1u << j));
        report.slack = std::min(report.slack, to_double(m));
        if (margin_violates(m)) {
          local_ok = false;
          break;
        }
      }
    }
  }
  if (report.slack == std::numeric_limits<double>::infinity()) report.slack = 0.0;
  if (local_ok) return report;

  for (std::uint32_t a = 0; a < count; ++a) {
    for (std::uint32_t b = 0; b < count; ++b) {
      T m = margin_of(a, b);
      if (margin_violates(m)) {
        report.holds = false;
        report.witness = std::pair{Subset{a}, Subset{b}};
        report.slack = to_double(m);
        return report;
      }
    }
  }
  return report;
}

}  // namespace detail

/// mu(A | B) <= mu(A) + mu(B) for all A, B. Only disjoint pairs need to be
/// scanned under monotonicity, and the smallest violating pair is disjoint.
template <Scalar T>
PropertyReport is_subadditive(const Capacity<T>& mu) {
  const auto& v = mu.table();
  const std::uint32_t full = mu.space().full().bits;
  PropertyReport report{"subadditive", true, std::nullopt, 0.0};
  bool first = true;
  for (std::uint32_t a = 1; a <= full; ++a) {
    const std::uint32_t rest = full & ~a;
    for (std::uint32_t b = (0 - rest) & rest; b != 0; b = (b - rest) & rest) {
      T m = v[a] + v[b] - v[a | b];
      const double md = to_double(m);
      if (first || md < report.slack) report.slack = md;
      first = false;
      if (detail::margin_violates(m)) {
        report.holds = false;
        report.witness = std::pair{Subset{a}, Subset{b}};
        report.slack = md;
        return report;
      }
    }
  }
  return report;
}

template <Scalar T>
PropertyReport is_submodular(const Capacity<T>& mu) {
  return detail::modularity(mu, +1, "submodular");
}

template <Scalar T>
PropertyReport is_supermodular(const Capacity<T>& mu) {
  return detail::modularity(mu, -1, "supermodular");
}

/// mu(B) = 0 => mu(A | B) = mu(A). Witness is (A, B).
template <Scalar T>
PropertyReport is_null_additive(const Capacity<T>& mu) {
  const auto& v = mu.table();
  const std::uint32_t count = mu.space().subset_count();
  PropertyReport report{"null-additive", true, std::nullopt, 0.0};
  std::vector<std::uint32_t> nulls;
  for (std::uint32_t b = 1; b < count; ++b)
    if (is_null_value(v[b])) nulls.push_back(b);
  for (std::uint32_t a = 0; a < count; ++a) {
    for (std::uint32_t b : nulls) {
      T m = v[a] - v[a | b];  // <= 0 by monotonicity
      if (detail::margin_violates(m)) {
        report.holds = false;
        report.witness = std::pair{Subset{a}, Subset{b}};
        report.slack = to_double(m);
        return report;
      }
      report.slack = std::min(report.slack, to_double(m));
    }
  }
  return report;
}

/// Sets of positive measure whose proper subsets are all null, ascending.
template <Scalar T>
std::vector<Subset> minimal_atoms(const Capacity<T>& mu) {
  const auto& v = mu.table();
  const std::uint32_t count = mu.space().subset_count();
  std::vector<Subset> atoms;
  for (std::uint32_t a = 1; a < count; ++a) {
    if (is_null_value(v[a])) continue;
    bool minimal = true;
    for (std::uint32_t rest = a; rest != 0 && minimal; rest &= rest - 1) {
      minimal = is_null_value(v[a & ~(rest & (0 - rest))]);
    }
    if (minimal) atoms.push_back(Subset{a});
  }
  return atoms;
}

}  // namespace panint

#endif  // PANINT_PROPERTIES_HPP
