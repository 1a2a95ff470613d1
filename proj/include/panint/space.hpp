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

/// \file panint/space.hpp
///
/// Finite ground sets and the bitmask encoding of their subsets. Bit i of a
/// subset index is set iff point i belongs to the subset.

#ifndef PANINT_SPACE_HPP
#define PANINT_SPACE_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <memory>
#include <string>
#include <unordered_set>
#include <vector>

#include "error.hpp"

namespace panint {

inline constexpr unsigned max_points = 16;

/// A subset of a finite space, encoded as a bitmask.
struct Subset {
  std::uint32_t bits = 0;

  constexpr Subset() = default;
  constexpr explicit Subset(std::uint32_t b) : bits(b) {}

  static constexpr Subset singleton(unsigned i) { return Subset{std::uint32_t{1} << i}; }
  static constexpr Subset full(unsigned n) { return Subset{(std::uint32_t{1} << n) - 1}; }

  constexpr bool empty() const { return bits == 0; }
  constexpr bool contains(unsigned i) const { return (bits >> i) & 1u; }
  constexpr bool subset_of(Subset other) const { return (bits & ~other.bits) == 0; }
  constexpr unsigned size() const { return static_cast<unsigned>(std::popcount(bits)); }
  constexpr unsigned lowest() const { return static_cast<unsigned>(std::countr_zero(bits)); }

  friend constexpr Subset operator|(Subset a, Subset b) { return Subset{a.bits | b.bits}; }
  friend constexpr Subset operator&(Subset a, Subset b) { return Subset{a.bits & b.bits}; }
  /// Set difference.
  friend constexpr Subset operator-(Subset a, Subset b) { return Subset{a.bits & ~b.bits}; }
  friend constexpr bool operator==(Subset, Subset) = default;
  friend constexpr auto operator<=>(Subset, Subset) = default;

  /// Point indices in ascending order.
  std::vector<unsigned> members() const {
    std::vector<unsigned> out;
    for (std::uint32_t b = bits; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }
};

/// Builds a subset from point indices.
inline Subset make_subset(const std::vector<unsigned>& points) {
  Subset s;
  for (unsigned p : points) s.bits |= std::uint32_t{1} << p;
  return s;
}

/// The ground set X with n labelled points; 1 <= n <= 16. Copies share the
/// (immutable) label table.
class FiniteSpace {
 public:
  explicit FiniteSpace(std::vector<std::string> labels)
      : labels_(std::make_shared<const std::vector<std::string>>(std::move(labels))) {
    const auto n = labels_->size();
    if (n < 1 || n > max_points) {
      throw error(errc::bad_space, "point count must be in [1, 16], got " + std::to_string(n));
    }
    std::unordered_set<std::string> seen;
    for (const auto& l : *labels_) {
      if (!seen.insert(l).second) throw error(errc::bad_space, "duplicate label '" + l + "'");
    }
  }

  /// Space with labels x1..xn.
  static FiniteSpace with_size(unsigned n) {
    std::vector<std::string> labels;
    for (unsigned i = 1; i <= n; ++i) labels.push_back("x" + std::to_string(i));
    return FiniteSpace(std::move(labels));
  }

  unsigned size() const { return static_cast<unsigned>(labels_->size()); }
  std::uint32_t subset_count() const { return std::uint32_t{1} << size(); }
  Subset full() const { return Subset::full(size()); }
  const std::vector<std::string>& labels() const { return *labels_; }

  bool valid(Subset s) const { return s.bits < subset_count(); }

  friend bool operator==(const FiniteSpace& a, const FiniteSpace& b) {
    return a.labels_ == b.labels_ || *a.labels_ == *b.labels_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> labels_;
};

}  // namespace panint

#endif  // PANINT_SPACE_HPP
