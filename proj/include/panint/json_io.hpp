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

/// \file panint/json_io.hpp
///
/// JSON encoding of capacities, functions, integral witnesses and reports.
///
///   capacity: {"points": ["x1", ...], "mu": [{"set": [0, 2], "value": 4.0}, ...]}
///   function: {"values": [2, -2, 1, -1]}
///
/// Sets are strictly ascending 0-based index arrays; the empty set may be
/// omitted. Float values are written as JSON numbers (shortest round-trip
/// form); exact values as decimal strings, or "p/q" when the expansion does
/// not terminate. Either form is accepted on input in both modes.
///
/// Needs nlohmann/json on the include path.

#ifndef PANINT_JSON_IO_HPP
#define PANINT_JSON_IO_HPP

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "error.hpp"
#include "properties.hpp"
#include "report.hpp"
#include "verify.hpp"
#include "witness.hpp"

namespace panint {

using json = nlohmann::ordered_json;

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error(errc::parse_error, "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw error(errc::parse_error, path + ": " + e.what());
  }
}

template <Scalar T>
json scalar_to_json(const T& v) {
  if constexpr (is_exact_v<T>) {
    return format_rational(v);
  } else {
    return v;
  }
}

/// Numbers and numeric strings. Exact mode reads a float literal through
/// its shortest decimal form, so 0.1 means 1/10.
template <Scalar T>
T scalar_from_json(const json& j) {
  if (j.is_string()) return scalar_cast<T>(parse_rational(j.get<std::string>()));
  if (j.is_number_integer()) {
    if constexpr (is_exact_v<T>) {
      return j.is_number_unsigned() ? T(j.get<std::uint64_t>()) : T(j.get<std::int64_t>());
    } else {
      return j.is_number_unsigned() ? double(j.get<std::uint64_t>()) : double(j.get<std::int64_t>());
    }
  }
  if (j.is_number_float()) {
    const double d = j.get<double>();
    if constexpr (is_exact_v<T>) {
      return rational_from_literal(d);
    } else {
      return d;
    }
  }
  throw error(errc::parse_error, "expected a number, got " + j.dump());
}

inline json subset_to_json(Subset s) {
  json out = json::array();
  for (unsigned i : s.members()) out.push_back(i);
  return out;
}

inline Subset subset_from_json(const json& j, const FiniteSpace& space) {
  if (!j.is_array()) throw error(errc::parse_error, "set must be an index array");
  Subset s;
  long previous = -1;
  for (const auto& e : j) {
    if (!e.is_number_integer()) throw error(errc::parse_error, "set indices must be integers");
    const long i = e.get<long>();
    if (i <= previous) throw error(errc::parse_error, "set indices must be strictly ascending: " + j.dump());
    if (i >= static_cast<long>(space.size())) throw error(errc::parse_error, "index out of range: " + j.dump());
    s.bits |= 1u << i;
    previous = i;
  }
  return s;
}

inline FiniteSpace space_from_json(const json& j) {
  if (!j.is_object() || !j.contains("points") || !j["points"].is_array()) {
    throw error(errc::parse_error, "capacity needs a \"points\" array");
  }
  std::vector<std::string> labels;
  for (const auto& p : j["points"]) {
    if (!p.is_string()) throw error(errc::parse_error, "point labels must be strings");
    labels.push_back(p.get<std::string>());
  }
  return FiniteSpace(std::move(labels));
}

template <Scalar T>
Capacity<T> capacity_from_json(const json& j) {
  const FiniteSpace space = space_from_json(j);
  if (!j.contains("mu") || !j["mu"].is_array()) throw error(errc::parse_error, "capacity needs a \"mu\" array");
  std::map<Subset, T> raw;
  for (const auto& entry : j["mu"]) {
    if (!entry.is_object() || !entry.contains("set") || !entry.contains("value")) {
      throw error(errc::parse_error, "mu entries need \"set\" and \"value\"");
    }
    const Subset s = subset_from_json(entry["set"], space);
    if (!raw.emplace(s, scalar_from_json<T>(entry["value"])).second) {
      throw error(errc::parse_error, "duplicate set " + entry["set"].dump());
    }
  }
  return validate_capacity(raw, space);
}

template <Scalar T>
json capacity_to_json(const Capacity<T>& mu) {
  json points = json::array();
  for (const auto& label : mu.space().labels()) points.push_back(label);
  json table = json::array();
  for (std::uint32_t s = 1; s < mu.space().subset_count(); ++s) {
    table.push_back({{"set", subset_to_json(Subset{s})}, {"value", scalar_to_json(mu(Subset{s}))}});
  }
  return {{"points", std::move(points)}, {"mu", std::move(table)}};
}

template <Scalar T>
RealFunction<T> function_from_json(const json& j, const FiniteSpace& space) {
  if (!j.is_object() || !j.contains("values") || !j["values"].is_array()) {
    throw error(errc::parse_error, "function needs a \"values\" array");
  }
  std::vector<T> values;
  for (const auto& v : j["values"]) values.push_back(scalar_from_json<T>(v));
  if (values.size() != space.size()) {
    throw error(errc::space_mismatch, "function has " + std::to_string(values.size()) + " values, space has " +
                                          std::to_string(space.size()) + " points");
  }
  return RealFunction<T>(space, std::move(values));
}

template <Scalar T>
json function_to_json(const RealFunction<T>& f) {
  json values = json::array();
  for (const auto& v : f.values()) values.push_back(scalar_to_json(v));
  return {{"values", std::move(values)}};
}

inline json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

template <Scalar T>
json partition_to_json(const PartitionValuation<T>& p) {
  json out = json::array();
  for (const auto& b : p.blocks) out.push_back({{"set", subset_to_json(b.set)}, {"coefficient", scalar_to_json(b.coefficient)}});
  return out;
}

template <Scalar T>
json witness_to_json(const IntegralResult<T>& r) {
  return std::visit(
      [&](const auto& w) -> json {
        using W = std::decay_t<decltype(w)>;
        if constexpr (std::is_same_v<W, PartitionValuation<T>>) {
          json out = partition_to_json(w);
          if (r.negative_witness) {
            return {{"positive", std::move(out)}, {"negative", partition_to_json(*r.negative_witness)}};
          }
          return out;
        } else if constexpr (std::is_same_v<W, LevelChain<T>>) {
          json out = json::array();
          for (const auto& s : w.steps) out.push_back({{"set", subset_to_json(s.set)}, {"increment", scalar_to_json(s.increment)}});
          return out;
        } else if constexpr (std::is_same_v<W, DualCertificate<T>>) {
          json out = json::array();
          for (const auto& y : w.weights) out.push_back(scalar_to_json(y));
          return out;
        } else {
          return json::array();
        }
      },
      r.witness);
}

inline json property_to_json(const PropertyReport& p) {
  json out = {{"holds", p.holds}};
  if (p.witness) out["witness"] = {subset_to_json(p.witness->first), subset_to_json(p.witness->second)};
  out["slack"] = finite_or_null(p.slack);
  return out;
}

inline json error_to_json(const error& e) {
  json out = {{"error", errc_name(e.code())}, {"message", e.what()}};
  if (e.witness()) {
    out["witness"] = {subset_to_json(Subset{e.witness()->first}), subset_to_json(Subset{e.witness()->second})};
  }
  return out;
}

template <Scalar T>
json trial_witness_to_json(const TrialWitness<T>& w) {
  json functions = json::array();
  for (const auto& f : w.functions) functions.push_back(function_to_json(f));
  json scalars = json::array();
  for (const auto& s : w.scalars) scalars.push_back(scalar_to_json(s));
  json out = {{"trial", w.trial},
              {"capacity", capacity_to_json(w.capacity)},
              {"functions", std::move(functions)},
              {"scalars", std::move(scalars)},
              {"lhs", scalar_to_json(w.lhs)},
              {"rhs", scalar_to_json(w.rhs)},
              {"slack", finite_or_null(w.slack)}};
  if (!w.detail.empty()) out["detail"] = w.detail;
  return out;
}

template <Scalar T>
TrialWitness<T> trial_witness_from_json(const json& j) {
  auto mu = capacity_from_json<T>(j.at("capacity"));
  TrialWitness<T> w{j.at("trial").get<std::size_t>(), mu, {}, {}, T(0), T(0), 0.0, j.value("detail", std::string())};
  for (const auto& f : j.at("functions")) w.functions.push_back(function_from_json<T>(f, mu.space()));
  for (const auto& s : j.at("scalars")) w.scalars.push_back(scalar_from_json<T>(s));
  w.lhs = scalar_from_json<T>(j.at("lhs"));
  w.rhs = scalar_from_json<T>(j.at("rhs"));
  if (j.at("slack").is_number()) w.slack = j.at("slack").get<double>();
  return w;
}

template <Scalar T>
json report_to_json(const VerificationReport<T>& r) {
  json witnesses = json::array();
  for (const auto& w : r.witnesses) witnesses.push_back(trial_witness_to_json(w));
  json out = {{"suite", r.suite},
              {"family", r.family},
              {"mode", r.mode},
              {"hypothesis_satisfied", r.hypothesis_satisfied},
              {"seed", r.seed},
              {"trials", r.trials},
              {"failures", r.failures},
              {"skipped", r.skipped},
              {"tolerance", r.tolerance},
              {"witnesses", std::move(witnesses)}};
  if (!r.observations.empty()) {
    json obs = json::array();
    for (const auto& w : r.observations) obs.push_back(trial_witness_to_json(w));
    out["observations"] = std::move(obs);
  }
  return out;
}

}  // namespace panint

#endif  // PANINT_JSON_IO_HPP
