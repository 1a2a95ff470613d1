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

#ifndef PANINT_ERROR_HPP
#define PANINT_ERROR_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace panint {

enum class errc {
  bad_space,
  missing_set,
  non_monotone,
  negative_value,
  zero_total,
  non_finite,
  negative_input,
  space_mismatch,
  too_large,
  bad_exponent,
  not_subadditive,
  parse_error,
};

inline const char* errc_name(errc code) {
  switch (code) {
    case errc::bad_space: return "BadSpace";
    case errc::missing_set: return "MissingSet";
    case errc::non_monotone: return "NonMonotone";
    case errc::negative_value: return "NegativeValue";
    case errc::zero_total: return "ZeroTotal";
    case errc::non_finite: return "NonFinite";
    case errc::negative_input: return "NegativeInput";
    case errc::space_mismatch: return "SpaceMismatch";
    case errc::too_large: return "TooLarge";
    case errc::bad_exponent: return "BadExponent";
    case errc::not_subadditive: return "NotSubadditive";
    case errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

/// Every recoverable failure in the library. `witness` carries the offending
/// subset pair for monotonicity violations, and the single offending subset
/// (as `first`) for MissingSet.
class error : public std::runtime_error {
 public:
  using subset_pair = std::pair<std::uint32_t, std::uint32_t>;

  error(errc code, const std::string& what, std::optional<subset_pair> witness = std::nullopt)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code),
        witness_(witness) {}

  errc code() const noexcept { return code_; }
  const std::optional<subset_pair>& witness() const noexcept { return witness_; }

 private:
  errc code_;
  std::optional<subset_pair> witness_;
};

}  // namespace panint

#endif  // PANINT_ERROR_HPP
