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

/// \file panint/random.hpp
///
/// Seeded generators for capacities and integrands. All draws go through
/// std::mt19937_64 (fully specified by the standard) and an explicit
/// bits-to-double mapping, so outputs are bit-identical across platforms.
/// In exact mode each drawn double is converted exactly and all further
/// arithmetic happens in the rational type.

#ifndef PANINT_RANDOM_HPP
#define PANINT_RANDOM_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "capacity.hpp"

namespace panint {

enum class Family {
  additive,
  clipped_additive,
  max_of_additive,
  min_of_additive,
  concave_distortion,
  monotone_random,
};

inline constexpr Family all_families[] = {
    Family::additive,           Family::clipped_additive, Family::max_of_additive,
    Family::min_of_additive,    Family::concave_distortion, Family::monotone_random,
};

inline const char* family_name(Family f) {
  switch (f) {
    case Family::additive: return "additive";
    case Family::clipped_additive: return "clipped-additive";
    case Family::max_of_additive: return "max-of-additive";
    case Family::min_of_additive: return "min-of-additive";
    case Family::concave_distortion: return "concave-distortion";
    case Family::monotone_random: return "monotone-random";
  }
  return "?";
}

inline std::optional<Family> parse_family(std::string_view name) {
  for (Family f : all_families)
    if (name == family_name(f)) return f;
  return std::nullopt;
}

/// Families whose every member is subadditive by construction.
inline bool family_is_subadditive(Family f) {
  switch (f) {
    case Family::additive:
    case Family::clipped_additive:
    case Family::max_of_additive:
    case Family::concave_distortion:
      return true;
    case Family::min_of_additive:
    case Family::monotone_random:
      return false;
  }
  return false;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform on [0, 1).
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
  /// Uniform integer in [lo, hi].
  unsigned integer(unsigned lo, unsigned hi) {
    return lo + static_cast<unsigned>(engine_() % (std::uint64_t{hi} - lo + 1));
  }
  bool chance(double p) { return unit() < p; }

 private:
  std::mt19937_64 engine_;
};

namespace detail {

/// nu(A) = sum of masses, built lowest-bit-first.
template <Scalar T>
std::vector<T> additive_table(const std::vector<T>& masses) {
  const std::uint32_t count = std::uint32_t{1} << masses.size();
  std::vector<T> t(count, T(0));
  for (std::uint32_t s = 1; s < count; ++s) {
    const std::uint32_t low = s & (0 - s);
    t[s] = t[s & ~low] + masses[std::countr_zero(low)];
  }
  return t;
}

template <Scalar T>
std::vector<T> random_masses(Rng& rng, unsigned n, double lo, double hi) {
  std::vector<T> m;
  for (unsigned i = 0; i < n; ++i) m.push_back(scalar_cast<T>(rng.uniform(lo, hi)));
  return m;
}

}  // namespace detail

/// Deterministic in (space size, rng state, family).
template <Scalar T>
Capacity<T> gen_capacity(const FiniteSpace& space, Rng& rng, Family family) {
  const unsigned n = space.size();
  const std::uint32_t count = space.subset_count();
  std::vector<T> table;
  switch (family) {
    case Family::additive:
      table = detail::additive_table(detail::random_masses<T>(rng, n, 0.1, 10.0));
      break;
    case Family::clipped_additive: {
      table = detail::additive_table(detail::random_masses<T>(rng, n, 0.1, 10.0));
      const T cap = table.back() * scalar_cast<T>(rng.uniform(0.25, 1.0));
      for (auto& v : table) v = std::min(v, cap);
      break;
    }
    case Family::max_of_additive:
    case Family::min_of_additive: {
      const unsigned k = rng.integer(2, 3);
      table = detail::additive_table(detail::random_masses<T>(rng, n, 0.1, 10.0));
      for (unsigned j = 1; j < k; ++j) {
        auto other = detail::additive_table(detail::random_masses<T>(rng, n, 0.1, 10.0));
        for (std::uint32_t s = 0; s < count; ++s) {
          table[s] = family == Family::max_of_additive ? std::max(table[s], other[s])
                                                       : std::min(table[s], other[s]);
        }
      }
      break;
    }
    case Family::concave_distortion: {
      // t -> scale * t / (t + c) is increasing, concave and vanishes at 0,
      // and stays rational in exact mode.
      table = detail::additive_table(detail::random_masses<T>(rng, n, 0.1, 10.0));
      const T c = scalar_cast<T>(rng.uniform(0.5, 10.0));
      const T scale = scalar_cast<T>(rng.uniform(1.0, 10.0));
      for (auto& v : table) v = scale * v / (v + c);
      break;
    }
    case Family::monotone_random: {
      table.assign(count, T(0));
      for (std::uint32_t s = 1; s < count; ++s) {
        T floor = T(0);
        for (std::uint32_t rest = s; rest != 0; rest &= rest - 1)
          floor = std::max(floor, table[s & ~(rest & (0 - rest))]);
        const T step = rng.chance(0.1) ? T(0) : scalar_cast<T>(rng.uniform(0.0, 3.0));
        table[s] = floor + step;
      }
      if (table.back() == T(0)) table.back() = T(1);
      break;
    }
  }
  return capacity_from_table(space, std::move(table));
}

template <Scalar T>
Capacity<T> gen_capacity(const FiniteSpace& space, std::uint64_t seed, Family family) {
  Rng rng(seed);
  return gen_capacity<T>(space, rng, family);
}

/// Nonnegative integrand: 0 with probability 0.2, else uniform on [0, 10].
template <Scalar T>
RealFunction<T> random_nonnegative(const FiniteSpace& space, Rng& rng) {
  std::vector<T> v;
  for (unsigned i = 0; i < space.size(); ++i) {
    v.push_back(rng.chance(0.2) ? T(0) : scalar_cast<T>(rng.uniform(0.0, 10.0)));
  }
  return RealFunction<T>(space, std::move(v));
}

/// Signed integrand uniform on [-10, 10].
template <Scalar T>
RealFunction<T> random_signed(const FiniteSpace& space, Rng& rng) {
  std::vector<T> v;
  for (unsigned i = 0; i < space.size(); ++i) v.push_back(scalar_cast<T>(rng.uniform(-10.0, 10.0)));
  return RealFunction<T>(space, std::move(v));
}

/// Uniformly random subset of the space.
inline Subset random_subset(const FiniteSpace& space, Rng& rng) {
  return Subset{static_cast<std::uint32_t>(rng.next()) & space.full().bits};
}

}  // namespace panint

#endif  // PANINT_RANDOM_HPP
