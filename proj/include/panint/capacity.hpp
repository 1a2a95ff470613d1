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

/// \file panint/capacity.hpp
///
/// Monotone measures (capacities) on the power set of a finite space, and
/// real-valued functions on its points.

#ifndef PANINT_CAPACITY_HPP
#define PANINT_CAPACITY_HPP

#include <cmath>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "numeric.hpp"
#include "space.hpp"

namespace panint {

template <Scalar T>
class Capacity;

template <Scalar T>
Capacity<T> validate_capacity(const std::map<Subset, T>& raw, const FiniteSpace& space);

template <Scalar T>
Capacity<T> capacity_from_table(const FiniteSpace& space, std::vector<T> table);

/// A set function mu on all subsets with mu(empty) = 0, mu(X) > 0 and
/// A subset of B => mu(A) <= mu(B). Only obtainable through validation.
template <Scalar T>
class Capacity {
 public:
  using value_type = T;

  const FiniteSpace& space() const { return space_; }
  unsigned points() const { return space_.size(); }
  const T& operator()(Subset s) const { return values_[s.bits]; }
  const T& total() const { return values_.back(); }
  /// The full table indexed by subset bitmask.
  const std::vector<T>& table() const { return values_; }

  friend bool operator==(const Capacity& a, const Capacity& b) {
    return a.space_ == b.space_ && a.values_ == b.values_;
  }

 private:
  Capacity(FiniteSpace space, std::vector<T> values)
      : space_(std::move(space)), values_(std::move(values)) {}

  friend Capacity capacity_from_table<T>(const FiniteSpace&, std::vector<T>);

  FiniteSpace space_;
  std::vector<T> values_;
};

namespace detail {

template <Scalar T>
bool exceeds(const T& a, const T& b) {
  if constexpr (is_exact_v<T>) {
    return a > b;
  } else {
    return a > b + scalar_traits<T>::predicate_tol;
  }
}

/// Lexicographically smallest (A, B) with A a proper subset of B and
/// mu(A) > mu(B). Only called once a violation is known to exist.
template <Scalar T>
error::subset_pair smallest_monotonicity_violation(const std::vector<T>& v, std::uint32_t count) {
  for (std::uint32_t a = 0; a < count; ++a) {
    for (std::uint32_t b = a + 1; b < count; ++b) {
      if ((a & ~b) == 0 && exceeds(v[a], v[b])) return {a, b};
    }
  }
  return {0, 0};
}

}  // namespace detail

/// Validates a full table (index = subset bitmask, size 2^n).
template <Scalar T>
Capacity<T> capacity_from_table(const FiniteSpace& space, std::vector<T> table) {
  const std::uint32_t count = space.subset_count();
  if (table.size() != count) {
    throw error(errc::missing_set, "capacity table has " + std::to_string(table.size()) +
                                       " entries, expected " + std::to_string(count));
  }
  for (std::uint32_t s = 0; s < count; ++s) {
    if constexpr (!is_exact_v<T>) {
      if (!std::isfinite(table[s])) {
        throw error(errc::non_finite, "subset " + std::to_string(s) + " has a non-finite value",
                    error::subset_pair{s, s});
      }
    }
    if (table[s] < T(0)) {
      throw error(errc::negative_value, "subset " + std::to_string(s) + " has a negative value",
                  error::subset_pair{s, s});
    }
  }
  if (table[0] != T(0)) throw error(errc::negative_value, "value of the empty set must be 0");
  if (!(table[count - 1] > T(0))) throw error(errc::zero_total, "value of the whole space must be > 0");

  for (std::uint32_t s = 0; s < count; ++s) {
    for (std::uint32_t rest = (count - 1) & ~s; rest != 0; rest &= rest - 1) {
      const std::uint32_t bigger = s | (rest & -rest);
      if (detail::exceeds(table[s], table[bigger])) {
        auto w = detail::smallest_monotonicity_violation(table, count);
        throw error(errc::non_monotone,
                    "mu(" + std::to_string(w.first) + ") > mu(" + std::to_string(w.second) + ")", w);
      }
    }
  }
  return Capacity<T>(space, std::move(table));
}

/// Validates a sparse table; the empty set may be omitted (implied 0),
/// every nonempty subset must be present.
template <Scalar T>
Capacity<T> validate_capacity(const std::map<Subset, T>& raw, const FiniteSpace& space) {
  const std::uint32_t count = space.subset_count();
  std::vector<T> table(count, T(0));
  std::vector<bool> seen(count, false);
  seen[0] = true;
  for (const auto& [set, value] : raw) {
    if (!space.valid(set)) {
      throw error(errc::missing_set, "subset " + std::to_string(set.bits) + " is outside the space");
    }
    table[set.bits] = value;
    seen[set.bits] = true;
  }
  for (std::uint32_t s = 1; s < count; ++s) {
    if (!seen[s]) {
      throw error(errc::missing_set, "no value for subset " + std::to_string(s),
                  error::subset_pair{s, s});
    }
  }
  return capacity_from_table(space, std::move(table));
}

/// Converts a capacity to another scalar type (double -> Rational is exact).
template <Scalar To, Scalar From>
Capacity<To> capacity_cast(const Capacity<From>& mu) {
  if constexpr (std::is_same_v<To, From>) {
    return mu;
  } else {
    std::vector<To> table;
    table.reserve(mu.table().size());
    for (const auto& v : mu.table()) table.push_back(scalar_cast<To>(v));
    return capacity_from_table(mu.space(), std::move(table));
  }
}

/// The conjugate capacity A -> mu(X) - mu(X \ A).
template <Scalar T>
Capacity<T> conjugate(const Capacity<T>& mu) {
  const auto& v = mu.table();
  const std::uint32_t full = mu.space().full().bits;
  std::vector<T> table(v.size());
  for (std::uint32_t s = 0; s <= full; ++s) table[s] = v[full] - v[full & ~s];
  table[0] = T(0);
  table[full] = v[full];
  if constexpr (!is_exact_v<T>) {
    // Rounding can leave a tiny negative near the empty side.
    for (auto& x : table) x = std::max(x, 0.0);
  }
  return capacity_from_table(mu.space(), std::move(table));
}

/// A real-valued function on the points of a space.
template <Scalar T>
class RealFunction {
 public:
  using value_type = T;

  RealFunction(FiniteSpace space, std::vector<T> values)
      : space_(std::move(space)), values_(std::move(values)) {
    if (values_.size() != space_.size()) {
      throw error(errc::space_mismatch, "function has " + std::to_string(values_.size()) +
                                            " values for a space of " +
                                            std::to_string(space_.size()) + " points");
    }
    if constexpr (!is_exact_v<T>) {
      for (const auto& v : values_) {
        if (!std::isfinite(v)) throw error(errc::non_finite, "function value is not finite");
      }
    }
  }

  /// The zero function.
  static RealFunction zero(const FiniteSpace& space) {
    return RealFunction(space, std::vector<T>(space.size(), T(0)));
  }

  /// c times the indicator of `set`.
  static RealFunction indicator(const FiniteSpace& space, Subset set, const T& c = T(1)) {
    std::vector<T> v(space.size(), T(0));
    for (unsigned i : set.members()) v[i] = c;
    return RealFunction(space, std::move(v));
  }

  const FiniteSpace& space() const { return space_; }
  unsigned size() const { return static_cast<unsigned>(values_.size()); }
  const T& operator[](unsigned i) const { return values_[i]; }
  const std::vector<T>& values() const { return values_; }

  bool nonnegative() const {
    for (const auto& v : values_)
      if (v < T(0)) return false;
    return true;
  }

  /// {x : f(x) > 0}.
  Subset positive_set() const {
    Subset s;
    for (unsigned i = 0; i < size(); ++i)
      if (values_[i] > T(0)) s.bits |= 1u << i;
    return s;
  }

  /// {x : f(x) != 0}.
  Subset support() const {
    Subset s;
    for (unsigned i = 0; i < size(); ++i)
      if (values_[i] != T(0)) s.bits |= 1u << i;
    return s;
  }

  RealFunction positive_part() const {
    return map([](const T& v) { return v > T(0) ? v : T(0); });
  }
  RealFunction negative_part() const {
    return map([](const T& v) { return v < T(0) ? T(-v) : T(0); });
  }
  RealFunction abs() const {
    return map([](const T& v) { return abs_value(v); });
  }
  /// f * chi_set.
  RealFunction masked(Subset set) const {
    std::vector<T> v(values_);
    for (unsigned i = 0; i < size(); ++i)
      if (!set.contains(i)) v[i] = T(0);
    return RealFunction(space_, std::move(v));
  }

  template <class F>
  RealFunction map(F&& fn) const {
    std::vector<T> v;
    v.reserve(values_.size());
    for (const auto& x : values_) v.push_back(fn(x));
    return RealFunction(space_, std::move(v));
  }

  template <class F>
  RealFunction zip(const RealFunction& other, F&& fn) const {
    check_same_space(other);
    std::vector<T> v;
    v.reserve(values_.size());
    for (unsigned i = 0; i < size(); ++i) v.push_back(fn(values_[i], other.values_[i]));
    return RealFunction(space_, std::move(v));
  }

  friend RealFunction operator+(const RealFunction& a, const RealFunction& b) {
    return a.zip(b, [](const T& x, const T& y) { return T(x + y); });
  }
  friend RealFunction operator-(const RealFunction& a, const RealFunction& b) {
    return a.zip(b, [](const T& x, const T& y) { return T(x - y); });
  }
  friend RealFunction operator*(const T& c, const RealFunction& f) {
    return f.map([&](const T& x) { return T(c * x); });
  }
  friend RealFunction operator-(const RealFunction& f) {
    return f.map([](const T& x) { return T(-x); });
  }
  friend bool operator==(const RealFunction& a, const RealFunction& b) {
    return a.space_ == b.space_ && a.values_ == b.values_;
  }

  void check_same_space(const RealFunction& other) const {
    if (!(space_ == other.space_)) throw error(errc::space_mismatch, "functions live on different spaces");
  }

 private:
  FiniteSpace space_;
  std::vector<T> values_;
};

template <Scalar To, Scalar From>
RealFunction<To> function_cast(const RealFunction<From>& f) {
  if constexpr (std::is_same_v<To, From>) {
    return f;
  } else {
    std::vector<To> v;
    v.reserve(f.size());
    for (const auto& x : f.values()) v.push_back(scalar_cast<To>(x));
    return RealFunction<To>(f.space(), std::move(v));
  }
}

/// Throws SpaceMismatch unless f lives on mu's space.
template <Scalar T>
void require_same_space(const RealFunction<T>& f, const Capacity<T>& mu) {
  if (!(f.space() == mu.space())) {
    throw error(errc::space_mismatch, "function and capacity live on different spaces");
  }
}

template <Scalar T>
void require_nonnegative(const RealFunction<T>& f) {
  if (!f.nonnegative()) throw error(errc::negative_input, "integrand must be nonnegative");
}

}  // namespace panint

#endif  // PANINT_CAPACITY_HPP
