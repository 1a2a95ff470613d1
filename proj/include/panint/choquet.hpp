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

#ifndef PANINT_CHOQUET_HPP
#define PANINT_CHOQUET_HPP

#include <algorithm>
#include <vector>

#include "witness.hpp"

namespace panint {

/// Choquet integral of a nonnegative f: sum over the sorted distinct
/// positive values v_1 < ... < v_m of (v_k - v_{k-1}) * mu({f >= v_k}).
template <Scalar T>
IntegralResult<T> choquet_pos(const RealFunction<T>& f, const Capacity<T>& mu) {
  require_same_space(f, mu);
  require_nonnegative(f);

  std::vector<T> levels;
  for (const auto& v : f.values())
    if (v > T(0)) levels.push_back(v);
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

  LevelChain<T> chain;
  T previous = T(0);
  for (const auto& level : levels) {
    Subset upper;
    for (unsigned i = 0; i < f.size(); ++i)
      if (f[i] >= level) upper.bits |= 1u << i;
    chain.steps.push_back({upper, level - previous});
    previous = level;
  }
  T value = chain.value(mu);
  return {value, Engine::sorted_levels, std::move(chain), std::nullopt};
}

/// Choquet(f^+, mu) - Choquet(f^-, conjugate(mu)).
template <Scalar T>
T choquet_asymmetric(const RealFunction<T>& f, const Capacity<T>& mu) {
  require_same_space(f, mu);
  return choquet_pos(f.positive_part(), mu).value - choquet_pos(f.negative_part(), conjugate(mu)).value;
}

/// Choquet(f^+, mu) - Choquet(f^-, mu).
template <Scalar T>
T choquet_symmetric(const RealFunction<T>& f, const Capacity<T>& mu) {
  require_same_space(f, mu);
  return choquet_pos(f.positive_part(), mu).value - choquet_pos(f.negative_part(), mu).value;
}

}  // namespace panint

#endif  // PANINT_CHOQUET_HPP
