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

/// \file panint/witness.hpp
///
/// Optimality witnesses returned alongside integral values, and the common
/// result type.

#ifndef PANINT_WITNESS_HPP
#define PANINT_WITNESS_HPP

#include <algorithm>
#include <bit>
#include <optional>
#include <variant>
#include <vector>

#include "capacity.hpp"

namespace panint {

enum class Engine { dp, enumeration, lp, sorted_levels };

inline const char* engine_name(Engine e) {
  switch (e) {
    case Engine::dp: return "dp";
    case Engine::enumeration: return "enumeration";
    case Engine::lp: return "lp";
    case Engine::sorted_levels: return "sorted-levels";
  }
  return "?";
}

template <Scalar T>
struct PartitionBlock {
  Subset set;
  T coefficient;
};

/// Disjoint blocks with coefficients; sum of coefficient * mu(block).
template <Scalar T>
struct PartitionValuation {
  std::vector<PartitionBlock<T>> blocks;

  /// Accumulated back to front, which is the order the DP builds its sums
  /// in, so a DP witness reproduces the DP value bit for bit.
  T value(const Capacity<T>& mu) const {
    T acc = T(0);
    for (auto it = blocks.rbegin(); it != blocks.rend(); ++it) acc = it->coefficient * mu(it->set) + acc;
    return acc;
  }

  bool disjoint() const {
    std::uint32_t seen = 0;
    for (const auto& b : blocks) {
      if (b.set.bits & seen) return false;
      seen |= b.set.bits;
    }
    return true;
  }

  /// Blocks disjoint, coefficients nonnegative and sum coefficient*chi <= f.
  bool feasible(const RealFunction<T>& f) const {
    if (!disjoint()) return false;
    for (const auto& b : blocks) {
      if (b.coefficient < T(0)) return false;
      for (unsigned i : b.set.members())
        if (b.coefficient > f[i]) return false;
    }
    return true;
  }
};

/// Choquet decomposition f = sum increment_k * chi_{set_k} over a
/// decreasing chain of upper-level sets.
template <Scalar T>
struct LevelStep {
  Subset set;
  T increment;
};

template <Scalar T>
struct LevelChain {
  std::vector<LevelStep<T>> steps;

  T value(const Capacity<T>& mu) const {
    T acc = T(0);
    for (const auto& s : steps) acc += s.increment * mu(s.set);
    return acc;
  }
};

/// Nonnegative point weights y with sum_{x in S} y_x >= mu(S) for every
/// nonempty S; objective = sum f(x) y_x bounds the concave integral.
template <Scalar T>
struct DualCertificate {
  std::vector<T> weights;
  T objective;

  /// Largest violation max(0, mu(S) - y(S)) over all nonempty S, and of
  /// y >= 0. Zero for a feasible certificate (exact mode).
  T max_violation(const Capacity<T>& mu) const {
    const std::uint32_t count = mu.space().subset_count();
    std::vector<T> ysum(count, T(0));
    T worst = T(0);
    for (const auto& y : weights) worst = std::max(worst, T(-y));
    for (std::uint32_t s = 1; s < count; ++s) {
      const std::uint32_t low = s & (0 - s);
      ysum[s] = ysum[s & ~low] + weights[std::countr_zero(low)];
      worst = std::max(worst, T(mu(Subset{s}) - ysum[s]));
    }
    return worst;
  }
};

template <Scalar T>
struct IntegralResult {
  T value;
  Engine engine;
  std::variant<std::monostate, PartitionValuation<T>, LevelChain<T>, DualCertificate<T>> witness;
  /// Partition for f^- when the integrand is signed (pan only).
  std::optional<PartitionValuation<T>> negative_witness;
};

}  // namespace panint

#endif  // PANINT_WITNESS_HPP
