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

#ifndef PANINT_REPORT_HPP
#define PANINT_REPORT_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "capacity.hpp"

namespace panint {

/// One evaluated instance of a law: the inputs and both sides.
template <Scalar T>
struct TrialWitness {
  std::size_t trial = 0;
  Capacity<T> capacity;
  std::vector<RealFunction<T>> functions;
  /// Scalars the law was evaluated with (linear coefficients, exponent p).
  std::vector<T> scalars;
  T lhs;
  T rhs;
  /// Margin by which the law holds; negative for a violation.
  double slack = 0.0;
  std::string detail;
};

template <Scalar T>
struct VerificationReport {
  std::string suite;
  std::string family;
  std::string mode = scalar_traits<T>::mode_name;
  /// Whether every capacity in the run satisfied the law's hypothesis.
  bool hypothesis_satisfied = true;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t failures = 0;
  /// Trials discarded because the drawn capacity failed the suite's filter.
  std::size_t skipped = 0;
  double tolerance = scalar_traits<T>::value_tol;
  std::vector<TrialWitness<T>> witnesses;
  /// Noteworthy non-failures, e.g. strict concave > pan gaps.
  std::vector<TrialWitness<T>> observations;

  bool passed() const { return failures == 0; }
};

}  // namespace panint

#endif  // PANINT_REPORT_HPP
