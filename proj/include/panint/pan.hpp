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

/// \file panint/pan.hpp
///
/// The (+, *)-pan-integral on a finite space:
///
///   pan(f) = max over partitions P of {f > 0} of
///            sum_{A in P} (min_{x in A} f(x)) * mu(A).
///
/// The maximum is attained because there are finitely many partitions and
/// for a fixed partition the best coefficient of a block is the minimum of
/// f on it. `pan_pos` runs the subset DP
///
///   g(S) = max_{A subset S, lowest(S) in A} val(A) + g(S \ A)
///
/// in O(3^k) for k = |{f > 0}|; `pan_pos_oracle` enumerates partitions.

#ifndef PANINT_PAN_HPP
#define PANINT_PAN_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

#include "witness.hpp"

namespace panint {

/// Nonnegative pan-integral with an optimal partition witness.
template <Scalar T>
IntegralResult<T> pan_pos(const RealFunction<T>& f, const Capacity<T>& mu) {
  require_same_space(f, mu);
  require_nonnegative(f);

  const std::vector<unsigned> points = f.positive_set().members();
  const unsigned k = static_cast<unsigned>(points.size());
  const std::uint32_t count = std::uint32_t{1} << k;

  // Per compressed block: the real subset, min f on it, and min f * mu.
  std::vector<std::uint32_t> expand(count, 0);
  std::vector<T> block_min(count, T(0));
  std::vector<T> block_value(count, T(0));
  for (std::uint32_t c = 1; c < count; ++c) {
    const std::uint32_t low = c & (0 - c);
    const std::uint32_t rest = c & ~low;
    const unsigned p = points[std::countr_zero(low)];
    expand[c] = expand[rest] | (std::uint32_t{1} << p);
    block_min[c] = rest == 0 ? f[p] : std::min(block_min[rest], f[p]);
    block_value[c] = block_min[c] * mu(Subset{expand[c]});
  }

  std::vector<T> best(count, T(0));
  std::vector<std::uint32_t> choice(count, 0);
  for (std::uint32_t s = 1; s < count; ++s) {
    const std::uint32_t low = s & (0 - s);
    const std::uint32_t rest = s & ~low;
    T top = block_value[low] + best[rest];
    std::uint32_t arg = low;
    // Remaining submasks of rest, descending; the block is low | (rest - sub).
    for (std::uint32_t sub = (rest - 1) & rest; rest != 0; sub = (sub - 1) & rest) {
      const std::uint32_t block = low | (rest & ~sub);
      T candidate = block_value[block] + best[sub];
      if (candidate > top) {
        top = candidate;
        arg = block;
      }
      if (sub == 0) break;
    }
    best[s] = top;
    choice[s] = arg;
  }

  PartitionValuation<T> witness;
  for (std::uint32_t s = count - 1; s != 0; s &= ~choice[s]) {
    const std::uint32_t block = choice[s];
    witness.blocks.push_back({Subset{expand[block]}, block_min[block]});
  }
  return {best[count - 1], Engine::dp, std::move(witness), std::nullopt};
}

/// Direct enumeration of every set partition of {f > 0}. Limited to n <= 10.
template <Scalar T>
T pan_pos_oracle(const RealFunction<T>& f, const Capacity<T>& mu) {
  require_same_space(f, mu);
  require_nonnegative(f);
  if (mu.points() > 10) throw error(errc::too_large, "partition enumeration is limited to 10 points");

  const std::vector<unsigned> points = f.positive_set().members();
  std::vector<std::uint32_t> blocks;
  T best = T(0);
  bool first = true;

  // Restricted growth: point i joins an existing block or opens a new one.
  std::function<void(unsigned)> assign = [&](unsigned i) {
    if (i == points.size()) {
      T total = T(0);
      for (std::uint32_t b : blocks) {
        T lo = T(0);
        bool seen = false;
        for (unsigned p : Subset{b}.members()) {
          if (!seen || f[p] < lo) lo = f[p];
          seen = true;
        }
        total += lo * mu(Subset{b});
      }
      if (first || total > best) best = total;
      first = false;
      return;
    }
    const std::uint32_t bit = std::uint32_t{1} << points[i];
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      blocks[j] |= bit;
      assign(i + 1);
      blocks[j] &= ~bit;
    }
    blocks.push_back(bit);
    assign(i + 1);
    blocks.pop_back();
  };
  assign(0);
  return best;
}

/// pan(f^+) - pan(f^-), keeping both partitions.
template <Scalar T>
IntegralResult<T> pan_signed(const RealFunction<T>& f, const Capacity<T>& mu) {
  require_same_space(f, mu);
  auto pos = pan_pos(f.positive_part(), mu);
  auto neg = pan_pos(f.negative_part(), mu);
  IntegralResult<T> out{pos.value - neg.value, Engine::dp, std::move(pos.witness), std::nullopt};
  out.negative_witness = std::get<PartitionValuation<T>>(std::move(neg.witness));
  return out;
}

/// Integral over `set`: the integral of f * chi_set, signed or not.
template <Scalar T>
IntegralResult<T> pan_on_set(const RealFunction<T>& f, const Capacity<T>& mu, Subset set) {
  require_same_space(f, mu);
  if (!mu.space().valid(set)) throw error(errc::space_mismatch, "subset lies outside the space");
  auto masked = f.masked(set);
  return masked.nonnegative() ? pan_pos(masked, mu) : pan_signed(masked, mu);
}

}  // namespace panint

#endif  // PANINT_PAN_HPP
