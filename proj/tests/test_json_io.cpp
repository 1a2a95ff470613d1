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


#include <catch2/catch_amalgamated.hpp>

#include <panint/json_io.hpp>

#include "support.hpp"

using namespace panint;

namespace {

errc parse_code(const std::string& text) {
  try {
    capacity_from_json<double>(json::parse(text));
  } catch (const error& e) {
    return e.code();
  }
  FAIL("parsed " << text);
  return errc::parse_error;
}

}  // namespace

TEST_CASE("fixture capacity parses") {
  const auto mu = capacity_from_json<Rational>(read_json_file(PANINT_FIXTURE_DIR "/example52.capacity.json"));
  CHECK(mu == example52_capacity<Rational>());
  const auto f = function_from_json<Rational>(read_json_file(PANINT_FIXTURE_DIR "/example52.f.json"), mu.space());
  CHECK(f == example52_function<Rational>());
}

TEST_CASE("float capacities round-trip bit for bit") {
  for (Family fam : all_families) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto mu = gen_capacity<double>(FiniteSpace::with_size(1 + seed % 7), seed, fam);
      const auto back = capacity_from_json<double>(json::parse(capacity_to_json(mu).dump()));
      CHECK(back == mu);
    }
  }
}

TEST_CASE("exact capacities round-trip") {
  std::vector<Rational> table{0, Rational(1, 3), Rational(1, 2), Rational(5, 7)};
  const auto mu = capacity_from_table(FiniteSpace({"a", "b"}), table);
  const json j = capacity_to_json(mu);
  CHECK(j["mu"][0]["value"] == "1/3");
  CHECK(j["mu"][1]["value"] == "0.5");
  CHECK(capacity_from_json<Rational>(json::parse(j.dump())) == mu);
  CHECK(j["points"] == json::array({"a", "b"}));
}

TEST_CASE("numeric forms") {
  CHECK(scalar_from_json<Rational>(json(0.1)) == Rational(1, 10));
  CHECK(scalar_from_json<Rational>(json("2/3")) == Rational(2, 3));
  CHECK(scalar_from_json<Rational>(json(-4)) == -4);
  CHECK(scalar_from_json<double>(json("0.25")) == 0.25);
  CHECK(scalar_to_json(Rational(13, 2)) == "6.5");
  CHECK(scalar_to_json(6.5) == 6.5);
  CHECK_THROWS_AS(scalar_from_json<double>(json(true)), error);
}

TEST_CASE("capacity input errors") {
  CHECK(parse_code(R"({"mu": []})") == errc::parse_error);
  CHECK(parse_code(R"({"points": ["a"], "mu": [{"set": [1], "value": 1}]})") == errc::parse_error);
  CHECK(parse_code(R"({"points": ["a", "b"], "mu": [{"set": [1, 0], "value": 1}]})") == errc::parse_error);
  CHECK(parse_code(R"({"points": ["a"], "mu": [{"set": [0], "value": 1}, {"set": [0], "value": 2}]})") ==
        errc::parse_error);
  CHECK(parse_code(R"({"points": ["a", "b"], "mu": [{"set": [0], "value": 1}]})") == errc::missing_set);
  CHECK(parse_code(R"({"points": ["a", "a"], "mu": []})") == errc::bad_space);
  CHECK(parse_code(R"({"points": ["a", "b"], "mu": [{"set": [0], "value": 2}, {"set": [1], "value": 0},
                       {"set": [0, 1], "value": 1}]})") == errc::non_monotone);
  CHECK(parse_code(R"({"points": ["a"], "mu": [{"set": [0], "value": "x"}]})") == errc::parse_error);
  CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), error);
}

TEST_CASE("function input errors") {
  const auto space = FiniteSpace::with_size(2);
  CHECK_THROWS_AS(function_from_json<double>(json::parse(R"({"values": [1]})"), space), error);
  CHECK_THROWS_AS(function_from_json<double>(json::parse(R"({"vals": [1, 2]})"), space), error);
  CHECK(function_from_json<double>(json::parse(R"({"values": [1, "-2.5"]})"), space)[1] == -2.5);
}

TEST_CASE("error diagnostics carry the monotonicity witness") {
  try {
    capacity_from_json<double>(read_json_file(PANINT_FIXTURE_DIR "/nonmonotone.capacity.json"));
    FAIL("accepted");
  } catch (const error& e) {
    const json j = error_to_json(e);
    CHECK(j["error"] == "NonMonotone");
    CHECK(j["witness"] == json::parse("[[0], [0, 1]]"));
  }
}

TEST_CASE("integral witnesses") {
  const auto mu = example52_capacity<Rational>();
  const auto f = example52_function<Rational>();
  const json pos = witness_to_json(pan_pos(f.positive_part(), mu));
  REQUIRE(pos.size() >= 1u);
  CHECK(pos[0].contains("set"));
  CHECK(pos[0].contains("coefficient"));
  const json signed_w = witness_to_json(pan_signed(f, mu));
  CHECK(signed_w.contains("positive"));
  CHECK(signed_w.contains("negative"));
  CHECK(witness_to_json(concave_integral(f.positive_part(), mu)).size() == 4u);
}

TEST_CASE("property reports") {
  const json j = property_to_json(is_subadditive(example52_capacity<double>()));
  CHECK(j["holds"] == false);
  CHECK(j["witness"] == json::parse("[[0], [2]]"));
  const json single = property_to_json(is_subadditive(testing::only_total<double>(1)));
  CHECK(single["holds"] == true);
}

TEST_CASE("report layout") {
  SuiteConfig<double> c;
  c.trials = 3;
  const json j = report_to_json(run_suite(Suite::additivity, c));
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"suite", "family", "mode", "hypothesis_satisfied", "seed", "trials",
                                         "failures", "skipped", "tolerance", "witnesses"});
}
