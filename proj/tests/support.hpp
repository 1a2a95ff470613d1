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

#ifndef PANINT_TESTS_SUPPORT_HPP
#define PANINT_TESTS_SUPPORT_HPP

#include <vector>

#include <panint/panint.hpp>

namespace panint::testing {

/// mu(A) = sum of masses over A.
template <Scalar T>
Capacity<T> additive(const std::vector<T>& masses) {
  return capacity_from_table(FiniteSpace::with_size(static_cast<unsigned>(masses.size())),
                             detail::additive_table(masses));
}

/// 1 on every nonempty set.
template <Scalar T>
Capacity<T> constant_one(unsigned n) {
  std::vector<T> table(std::size_t{1} << n, T(1));
  table[0] = T(0);
  return capacity_from_table(FiniteSpace::with_size(n), std::move(table));
}

/// Only X carries mass.
template <Scalar T>
Capacity<T> only_total(unsigned n, T total = T(1)) {
  std::vector<T> table(std::size_t{1} << n, T(0));
  table.back() = total;
  return capacity_from_table(FiniteSpace::with_size(n), std::move(table));
}

template <Scalar T>
RealFunction<T> values(const FiniteSpace& space, std::vector<T> v) {
  return RealFunction<T>(space, std::move(v));
}

inline Rational q(const char* text) { return parse_rational(text); }

}  // namespace panint::testing

#endif  // PANINT_TESTS_SUPPORT_HPP
