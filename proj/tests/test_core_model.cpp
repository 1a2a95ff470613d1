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

#include <map>

#include "support.hpp"

using namespace panint;
using panint::testing::additive;
using panint::testing::constant_one;
using panint::testing::only_total;

namespace {

errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return errc::parse_error;
}

}  // namespace

TEST_CASE("FiniteSpace bounds and labels") {
  CHECK(FiniteSpace::with_size(1).size() == 1);
  CHECK(FiniteSpace::with_size(16).subset_count() == 65536u);
  CHECK(code_of([] { FiniteSpace::with_size(17); }) == errc::bad_space);
  CHECK(code_of([] { FiniteSpace(std::vector<std::string>{}); }) == errc::bad_space);
  CHECK(code_of([] { FiniteSpace({"a", "a"}); }) == errc::bad_space);
  CHECK(FiniteSpace::with_size(3).labels()[2] == "x3");
}

TEST_CASE("Subset algebra") {
  const Subset a = make_subset({0, 2});
  const Subset b = make_subset({2, 3});
  CHECK((a | b) == make_subset({0, 2, 3}));
  CHECK((a & b) == make_subset({2}));
  CHECK((a - b) == make_subset({0}));
  CHECK(a.size() == 2);
  CHECK(make_subset({2}).subset_of(a));
  CHECK_FALSE(a.subset_of(b));
  CHECK(a.members() == std::vector<unsigned>{0, 2});
}

TEST_CASE("the worked example table validates") {
  const auto mu = example52_capacity<Rational>();
  CHECK(mu.total() == Rational(13, 2));
  CHECK(mu(make_subset({0, 2})) == 4);
  CHECK(mu.table().size() == 16u);
}

TEST_CASE("constant capacity is valid and subadditive") {
  const auto mu = constant_one<double>(3);
  CHECK(is_subadditive(mu).holds);
}

TEST_CASE("monotonicity violations report the offending pair") {
  const auto space = FiniteSpace::with_size(2);
  std::map<Subset, double> raw{{make_subset({0}), 2.0}, {make_subset({1}), 0.5}, {make_subset({0, 1}), 1.0}};
  try {
    validate_capacity(raw, space);
    FAIL("accepted a non-monotone table");
  } catch (const error& e) {
    CHECK(e.code() == errc::non_monotone);
    REQUIRE(e.witness());
    CHECK(e.witness()->first == make_subset({0}).bits);
    CHECK(e.witness()->second == make_subset({0, 1}).bits);
  }
}

TEST_CASE("validation errors") {
  const auto space = FiniteSpace::with_size(2);
  auto build = [&](std::map<Subset, double> raw) { return validate_capacity(raw, space); };
  CHECK(code_of([&] { build({{make_subset({0}), 1.0}, {make_subset({0, 1}), 1.0}}); }) == errc::missing_set);
  CHECK(code_of([&] {
          build({{make_subset({0}), -1.0}, {make_subset({1}), 0.0}, {make_subset({0, 1}), 1.0}});
        }) == errc::negative_value);
  CHECK(code_of([&] {
          build({{make_subset({0}), 0.0}, {make_subset({1}), 0.0}, {make_subset({0, 1}), 0.0}});
        }) == errc::zero_total);
  CHECK(code_of([&] {
          build({{make_subset({0}), 0.0}, {make_subset({1}), 0.0}, {make_subset({0, 1}), std::nan("")}});
        }) == errc::non_finite);
  CHECK(code_of([&] {
          build({{make_subset({0}), 0.0},
                 {make_subset({1}), 0.0},
                 {make_subset({0, 1}), std::numeric_limits<double>::infinity()}});
        }) == errc::non_finite);
  CHECK(code_of([&] { capacity_from_table(space, std::vector<double>{1.0, 1.0, 1.0, 1.0}); }) ==
        errc::negative_value);
}

TEST_CASE("empty set entry may be given as zero") {
  const auto space = FiniteSpace::with_size(1);
  std::map<Subset, double> raw{{Subset{}, 0.0}, {make_subset({0}), 1.0}};
  CHECK(validate_capacity(raw, space).total() == 1.0);
}

TEST_CASE("conjugate") {
  const auto mu = example52_capacity<Rational>();
  const auto bar = conjugate(mu);
  CHECK(bar(make_subset({0})) == Rational(1, 2));
  CHECK(bar.total() == mu.total());
  CHECK(conjugate(bar) == mu);

  const auto add = additive<Rational>({1, 2, 3});
  CHECK(conjugate(add) == add);
}

TEST_CASE("conjugate is an involution on generated capacities") {
  for (Family fam : all_families) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto mu = gen_capacity<Rational>(FiniteSpace::with_size(5), seed, fam);
      CHECK(conjugate(conjugate(mu)) == mu);
    }
  }
}

TEST_CASE("the worked example is not subadditive") {
  const auto report = is_subadditive(example52_capacity<double>());
  CHECK_FALSE(report.holds);
  REQUIRE(report.witness);
  // Smallest pair: mu({x1, x3}) = 4 > mu({x1}) + mu({x3}) = 3.
  CHECK(report.witness->first == make_subset({0}));
  CHECK(report.witness->second == make_subset({2}));
  CHECK(report.slack == Catch::Approx(-1.0));

  const auto mu = example52_capacity<double>();
  CHECK(mu(make_subset({2, 3})) > mu(make_subset({2})) + mu(make_subset({3})));
}

TEST_CASE("additive capacities satisfy every predicate") {
  const auto mu = additive<Rational>({1, 2, 3, 4});
  CHECK(is_subadditive(mu).holds);
  CHECK(is_submodular(mu).holds);
  CHECK(is_supermodular(mu).holds);
  CHECK(is_null_additive(mu).holds);
}

TEST_CASE("constant capacity is not supermodular") {
  const auto mu = constant_one<Rational>(2);
  const auto report = is_supermodular(mu);
  CHECK_FALSE(report.holds);
  REQUIRE(report.witness);
  CHECK(is_submodular(mu).holds);
}

TEST_CASE("null additivity") {
  // mu({x1}) = mu({x2}) = 0 but mu(X) = 1.
  const auto mu = only_total<Rational>(2);
  CHECK_FALSE(is_null_additive(mu).holds);
  CHECK_FALSE(is_subadditive(mu).holds);
}

TEST_CASE("submodular implies subadditive implies null-additive") {
  std::size_t submodular = 0, subadditive = 0;
  for (Family fam : all_families) {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      const auto mu = gen_capacity<Rational>(FiniteSpace::with_size(2 + seed % 4), seed, fam);
      const bool sm = is_submodular(mu).holds;
      const bool sa = is_subadditive(mu).holds;
      const bool na = is_null_additive(mu).holds;
      submodular += sm;
      subadditive += sa;
      if (sm) CHECK(sa);
      if (sa) CHECK(na);
    }
  }
  CHECK(submodular > 0);
  CHECK(subadditive > submodular);
}

TEST_CASE("predicate witnesses violate the inequality") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto mu = gen_capacity<Rational>(FiniteSpace::with_size(4), seed, Family::monotone_random);
    const auto sub = is_subadditive(mu);
    if (!sub.holds) {
      REQUIRE(sub.witness);
      const auto [a, b] = *sub.witness;
      CHECK((a & b).empty());
      CHECK(mu(a | b) > mu(a) + mu(b));
    }
    const auto modular = is_submodular(mu);
    if (!modular.holds) {
      REQUIRE(modular.witness);
      const auto [a, b] = *modular.witness;
      CHECK(mu(a | b) + mu(a & b) > mu(a) + mu(b));
    }
  }
}

TEST_CASE("minimal atoms") {
  const auto singletons = minimal_atoms(additive<double>({1, 2, 3}));
  CHECK(singletons == std::vector<Subset>{make_subset({0}), make_subset({1}), make_subset({2})});
  CHECK(minimal_atoms(only_total<double>(3)) == std::vector<Subset>{make_subset({0, 1, 2})});
  CHECK(minimal_atoms(example52_capacity<double>()).size() == 4u);
}

TEST_CASE("minimal atoms form a covering antichain") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto mu = gen_capacity<Rational>(FiniteSpace::with_size(5), seed, Family::monotone_random);
    const auto atoms = minimal_atoms(mu);
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      CHECK(mu(atoms[i]) > 0);
      if (i) CHECK(atoms[i - 1] < atoms[i]);
      for (std::size_t j = 0; j < atoms.size(); ++j)
        if (i != j) CHECK_FALSE(atoms[i].subset_of(atoms[j]));
    }
    for (std::uint32_t s = 1; s < mu.space().subset_count(); ++s) {
      if (mu(Subset{s}) == 0) continue;
      bool covered = false;
      for (Subset a : atoms) covered = covered || a.subset_of(Subset{s});
      CHECK(covered);
    }
  }
}

TEST_CASE("generators are reproducible and valid") {
  for (Family fam : all_families) {
    const auto space = FiniteSpace::with_size(4);
    const auto a = gen_capacity<double>(space, 1, fam);
    const auto b = gen_capacity<double>(space, 1, fam);
    CHECK(a == b);
    CHECK(a.total() > 0);
  }
}

TEST_CASE("generator families") {
  const auto space = FiniteSpace::with_size(4);
  const auto add = gen_capacity<Rational>(space, 1, Family::additive);
  for (std::uint32_t a = 1; a < 16; ++a)
    for (std::uint32_t b = 1; b < 16; ++b)
      if ((a & b) == 0) CHECK(add(Subset{a | b}) == add(Subset{a}) + add(Subset{b}));

  for (Family fam : all_families) {
    if (!family_is_subadditive(fam)) continue;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const auto mu = gen_capacity<Rational>(FiniteSpace::with_size(2 + seed % 6), seed, fam);
      INFO(family_name(fam) << " seed " << seed);
      CHECK(is_subadditive(mu).holds);
    }
  }

  std::size_t non_subadditive = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    non_subadditive += !is_subadditive(gen_capacity<double>(space, seed, Family::monotone_random)).holds;
  }
  CHECK(non_subadditive > 0);
}

TEST_CASE("min of additive measures need not be subadditive") {
  std::size_t failures = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    failures += !is_subadditive(gen_capacity<Rational>(FiniteSpace::with_size(4), seed, Family::min_of_additive)).holds;
  }
  CHECK(failures > 0);
  CHECK_FALSE(family_is_subadditive(Family::min_of_additive));
}

TEST_CASE("RealFunction views") {
  const auto f = example52_function<Rational>();
  CHECK(f.positive_set() == make_subset({0, 2}));
  CHECK(f.support() == make_subset({0, 1, 2, 3}));
  CHECK(f.positive_part().values() == std::vector<Rational>{2, 0, 1, 0});
  CHECK(f.negative_part().values() == std::vector<Rational>{0, 2, 0, 1});
  CHECK(f.abs().values() == std::vector<Rational>{2, 2, 1, 1});
  CHECK(f.masked(make_subset({0, 3})).values() == std::vector<Rational>{2, 0, 0, -1});
  CHECK(code_of([] { RealFunction<double>(FiniteSpace::with_size(2), {1.0, std::nan("")}); }) == errc::non_finite);
  CHECK(code_of([] { RealFunction<double>(FiniteSpace::with_size(2), {1.0}); }) == errc::space_mismatch);
}
