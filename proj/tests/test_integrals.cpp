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

#include "support.hpp"

using namespace panint;
using panint::testing::additive;
using panint::testing::constant_one;
using panint::testing::q;

namespace {

template <Scalar T>
void check_partition_witness(const IntegralResult<T>& r, const RealFunction<T>& f, const Capacity<T>& mu) {
  const auto& w = std::get<PartitionValuation<T>>(r.witness);
  CHECK(w.feasible(f));
  CHECK(w.value(mu) == r.value);
  Subset covered;
  for (const auto& b : w.blocks) {
    CHECK(b.coefficient > T(0));
    covered = covered | b.set;
  }
  CHECK(covered.subset_of(f.positive_set()));
}

}  // namespace

TEST_CASE("pan of the worked example") {
  const auto mu = example52_capacity<Rational>();
  const auto f = example52_function<Rational>();
  const auto pos = pan_pos(f.positive_part(), mu);
  CHECK(pos.value == 4);
  CHECK(pos.engine == Engine::dp);
  check_partition_witness(pos, f.positive_part(), mu);
  CHECK(pan_pos_oracle(f.positive_part(), mu) == 4);
  CHECK(pan_pos(f.negative_part(), mu).value == 4);
  CHECK(pan_signed(f, mu).value == 0);
  CHECK(pan_on_set(f, mu, make_subset({0, 3})).value == q("0.5"));
  CHECK(pan_on_set(f, mu, make_subset({1, 2})).value == 0);
}

TEST_CASE("pan of the zero function") {
  const auto mu = example52_capacity<Rational>();
  const auto r = pan_pos(RealFunction<Rational>::zero(mu.space()), mu);
  CHECK(r.value == 0);
  CHECK(std::get<PartitionValuation<Rational>>(r.witness).blocks.empty());
  CHECK(pan_pos_oracle(RealFunction<Rational>::zero(mu.space()), mu) == 0);
}

TEST_CASE("pan of an indicator of X") {
  // Not mu(X): {x1, x3}, {x2, x4} scores 4 + 4.
  const auto mu = example52_capacity<Rational>();
  const auto one = RealFunction<Rational>::indicator(mu.space(), mu.space().full());
  CHECK(pan_pos(one, mu).value == 8);
  CHECK(pan_pos_oracle(one, mu) == 8);
  CHECK(pan_pos(one, mu).value >= mu.total());

  // Only X carries mass, so the single block is optimal.
  const auto top = testing::only_total<Rational>(4, q("6.5"));
  CHECK(pan_pos(RealFunction<Rational>::indicator(top.space(), top.space().full()), top).value == q("6.5"));
}

TEST_CASE("pan of a single-point function") {
  const auto mu = example52_capacity<Rational>();
  for (unsigned i = 0; i < 4; ++i) {
    const auto f = RealFunction<Rational>::indicator(mu.space(), Subset::singleton(i), Rational(3));
    CHECK(pan_pos_oracle(f, mu) == 3 * mu(Subset::singleton(i)));
    CHECK(pan_pos(f, mu).value == 3 * mu(Subset::singleton(i)));
  }
}

TEST_CASE("pan rejects negative input and foreign spaces") {
  const auto mu = example52_capacity<double>();
  CHECK_THROWS_AS(pan_pos(example52_function<double>(), mu), error);
  const auto other = RealFunction<double>::zero(FiniteSpace({"a", "b", "c", "d"}));
  CHECK_THROWS_AS(pan_pos(other, mu), error);
  CHECK_THROWS_AS(pan_pos_oracle(RealFunction<double>::zero(FiniteSpace::with_size(11)),
                                 testing::constant_one<double>(11)),
                  error);
}

TEST_CASE("pan DP agrees with partition enumeration") {
  for (Family fam : all_families) {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
      Rng rng(seed);
      const auto space = FiniteSpace::with_size(1 + seed % 8);
      const auto mu = gen_capacity<Rational>(space, rng, fam);
      const auto f = random_nonnegative<Rational>(space, rng);
      const auto r = pan_pos(f, mu);
      INFO(family_name(fam) << " seed " << seed);
      CHECK(r.value == pan_pos_oracle(f, mu));
      check_partition_witness(r, f, mu);
    }
  }
}

TEST_CASE("pan DP agrees with enumeration at n = 6, monotone-random") {
  const auto space = FiniteSpace::with_size(6);
  Rng rng(7);
  const auto mu = gen_capacity<double>(space, rng, Family::monotone_random);
  const auto f = random_nonnegative<double>(space, rng);
  CHECK(pan_pos(f, mu).value == Catch::Approx(pan_pos_oracle(f, mu)).epsilon(1e-12));
}

TEST_CASE("pan dominates every single feasible block") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Rng rng(seed);
    const auto space = FiniteSpace::with_size(5);
    const auto mu = gen_capacity<Rational>(space, rng, Family::monotone_random);
    const auto f = random_nonnegative<Rational>(space, rng);
    const Rational value = pan_pos(f, mu).value;
    for (std::uint32_t s = 1; s < space.subset_count(); ++s) {
      Rational lo = f[Subset{s}.members().front()];
      for (unsigned i : Subset{s}.members()) lo = std::min(lo, f[i]);
      CHECK(value >= lo * mu(Subset{s}));
    }
  }
}

TEST_CASE("pan restricted to a set") {
  Rng rng(3);
  const auto space = FiniteSpace::with_size(5);
  const auto mu = gen_capacity<Rational>(space, rng, Family::monotone_random);
  const auto f = random_nonnegative<Rational>(space, rng);
  CHECK(pan_on_set(f, mu, space.full()).value == pan_pos(f, mu).value);
  CHECK(pan_on_set(f, mu, Subset{}).value == 0);

  // A null set carries no integral.
  const auto nulled = detail::with_null_points(mu, make_subset({1, 3}));
  CHECK(pan_on_set(f, nulled, make_subset({1, 3})).value == 0);
  CHECK_THROWS_AS(pan_on_set(f, mu, Subset{1u << 7}), error);
}

TEST_CASE("a function vanishing off a null set has zero integral, and conversely") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(seed);
    const auto space = FiniteSpace::with_size(5);
    const auto base = gen_capacity<Rational>(space, rng, Family::monotone_random);
    const auto mu = detail::with_null_points(base, detail::random_null_points(base, rng, true));
    const auto f = random_nonnegative<Rational>(space, rng);
    CHECK((pan_pos(f, mu).value == 0) == (mu(f.positive_set()) == 0));
  }
}

TEST_CASE("signed pan: homogeneity, antisymmetry, monotonicity") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(seed);
    const auto space = FiniteSpace::with_size(2 + seed % 5);
    const auto mu = gen_capacity<Rational>(space, rng, Family::monotone_random);
    const auto f = random_signed<Rational>(space, rng);
    const Rational c = scalar_cast<Rational>(rng.uniform(-10, 10));
    const Rational pf = pan_signed(f, mu).value;
    CHECK(pan_signed(-f, mu).value == -pf);
    CHECK(pan_signed(c * f, mu).value == c * pf);

    // f <= g pointwise gives pan f <= pan g.
    const auto g = f.map([&](const Rational& v) { return Rational(v + scalar_cast<Rational>(rng.uniform(0, 3))); });
    CHECK(pf <= pan_signed(g, mu).value);

    const auto s = pan_signed(f, mu);
    REQUIRE(s.negative_witness);
    CHECK(s.negative_witness->feasible(f.negative_part()));
    CHECK(std::get<PartitionValuation<Rational>>(s.witness).value(mu) - s.negative_witness->value(mu) == s.value);
  }
}

TEST_CASE("Choquet integral basics") {
  const auto mu = example52_capacity<Rational>();
  const auto space = mu.space();
  for (std::uint32_t s = 1; s < 16; ++s) {
    CHECK(choquet_pos(RealFunction<Rational>::indicator(space, Subset{s}), mu).value == mu(Subset{s}));
  }
  const auto three = RealFunction<Rational>::indicator(space, space.full(), Rational(3));
  CHECK(choquet_pos(three, mu).value == 3 * mu.total());

  const auto f = RealFunction<Rational>(space, {2, 0, 1, 0});
  const auto r = choquet_pos(f, mu);
  // 1 * mu({x1, x3}) + 1 * mu({x1}).
  CHECK(r.value == 5);
  CHECK(std::get<LevelChain<Rational>>(r.witness).value(mu) == r.value);
  CHECK_THROWS_AS(choquet_pos(example52_function<Rational>(), mu), error);
}

TEST_CASE("Choquet integral on additive capacities is the weighted sum") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Rng rng(seed);
    const auto space = FiniteSpace::with_size(1 + seed % 6);
    const auto mu = gen_capacity<Rational>(space, rng, Family::additive);
    const auto f = random_signed<Rational>(space, rng);
    Rational sum = 0;
    for (unsigned i = 0; i < space.size(); ++i) sum += f[i] * mu(Subset::singleton(i));
    CHECK(choquet_pos(f.abs(), mu).value == pan_pos(f.abs(), mu).value);
    CHECK(choquet_asymmetric(f, mu) == sum);
    CHECK(choquet_symmetric(f, mu) == sum);
  }
}

TEST_CASE("Choquet level sums agree with a level-cut oracle") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    Rng rng(seed);
    const auto space = FiniteSpace::with_size(2 + seed % 5);
    const auto mu = gen_capacity<Rational>(space, rng, Family::monotone_random);
    const auto f = random_nonnegative<Rational>(space, rng);
    // Integrate t -> mu({f >= t}) piecewise over the distinct values.
    std::vector<Rational> levels(f.values());
    levels.push_back(0);
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    Rational oracle = 0;
    for (std::size_t k = 1; k < levels.size(); ++k) {
      Subset upper;
      for (unsigned i = 0; i < space.size(); ++i)
        if (f[i] >= levels[k]) upper = upper | Subset::singleton(i);
      oracle += (levels[k] - levels[k - 1]) * mu(upper);
    }
    CHECK(choquet_pos(f, mu).value == oracle);
  }
}

TEST_CASE("signed Choquet forms") {
  Rng rng(9);
  const auto space = FiniteSpace::with_size(4);
  const auto mu = gen_capacity<Rational>(space, rng, Family::monotone_random);
  const auto g = random_nonnegative<Rational>(space, rng);
  CHECK(choquet_asymmetric(g, mu) == choquet_pos(g, mu).value);
  CHECK(choquet_symmetric(g, mu) == choquet_pos(g, mu).value);
  const auto f = random_signed<Rational>(space, rng);
  CHECK(choquet_symmetric(-f, mu) == -choquet_symmetric(f, mu));
  CHECK(choquet_asymmetric(f, mu) ==
        choquet_pos(f.positive_part(), mu).value - choquet_pos(f.negative_part(), conjugate(mu)).value);
}

TEST_CASE("concave integral on additive capacities is the weighted sum") {
  const auto mu = additive<Rational>({1, 2, 3, 4});
  const auto f = RealFunction<Rational>(mu.space(), {3, 1, 2, q("0.5")});
  CHECK(concave_integral(f, mu).value == 3 + 2 + 6 + 2);
  CHECK(pan_pos(f, mu).value == 13);
}

TEST_CASE("concave integral dominates pan and Choquet") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Rng rng(seed);
    const auto space = FiniteSpace::with_size(2 + seed % 4);
    const auto mu = gen_capacity<Rational>(space, rng, Family::monotone_random);
    const auto f = random_nonnegative<Rational>(space, rng);
    const auto c = concave_integral(f, mu);
    CHECK(c.engine == Engine::lp);
    CHECK(c.value >= pan_pos(f, mu).value);
    CHECK(c.value >= choquet_pos(f, mu).value);
    const auto& cert = std::get<DualCertificate<Rational>>(c.witness);
    CHECK(cert.max_violation(mu) == 0);
  }
}

TEST_CASE("concave integral on the worked example") {
  const auto mu = example52_capacity<Rational>();
  const auto f = RealFunction<Rational>(mu.space(), {2, 0, 1, 0});
  CHECK(concave_integral(f, mu).value >= 4);
  CHECK(concave_integral(f, mu).value == primal_enumeration_oracle(f, mu));
}
