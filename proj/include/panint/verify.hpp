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

/// \file panint/verify.hpp
///
/// Randomized law checking. Each suite is a pair (draw, evaluate): `draw`
/// builds an instance from the trial RNG (seeded with seed + trial index),
/// `evaluate` computes both sides of the law. Failing instances are kept
/// verbatim, so `replay` reproduces any reported violation.

#ifndef PANINT_VERIFY_HPP
#define PANINT_VERIFY_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "choquet.hpp"
#include "lp.hpp"
#include "lp_space.hpp"
#include "pan.hpp"
#include "parallel.hpp"
#include "properties.hpp"
#include "random.hpp"
#include "report.hpp"

namespace panint {

enum class Suite {
  additivity,
  set_additivity,
  disjoint_superadditivity,
  disjoint_additivity,
  linearity,
  singleton,
  ae,
  levi,
  fatou,
  coincide,
  lp,
  metric,
};

inline constexpr Suite all_suites[] = {
    Suite::additivity, Suite::set_additivity, Suite::disjoint_superadditivity,
    Suite::disjoint_additivity, Suite::linearity, Suite::singleton, Suite::ae,
    Suite::levi, Suite::fatou, Suite::coincide, Suite::lp, Suite::metric,
};

inline const char* suite_name(Suite s) {
  switch (s) {
    case Suite::additivity: return "additivity";
    case Suite::set_additivity: return "set-additivity";
    case Suite::disjoint_superadditivity: return "disjoint-superadditivity";
    case Suite::disjoint_additivity: return "disjoint-additivity";
    case Suite::linearity: return "linearity";
    case Suite::singleton: return "singleton";
    case Suite::ae: return "ae";
    case Suite::levi: return "levi";
    case Suite::fatou: return "fatou";
    case Suite::coincide: return "coincide";
    case Suite::lp: return "lp";
    case Suite::metric: return "metric";
  }
  return "?";
}

inline std::optional<Suite> parse_suite(std::string_view name) {
  for (Suite s : all_suites)
    if (name == suite_name(s)) return s;
  return std::nullopt;
}

/// Which hypothesis a suite's law depends on.
enum class Hypothesis { none, subadditive, null_additive };

inline Hypothesis suite_hypothesis(Suite s) {
  switch (s) {
    case Suite::disjoint_superadditivity:
    case Suite::levi:
    case Suite::fatou:
      return Hypothesis::none;
    case Suite::ae:
      return Hypothesis::null_additive;
    default:
      return Hypothesis::subadditive;
  }
}

/// The three families that are subadditive by construction.
inline std::vector<Family> subadditive_families() {
  return {Family::clipped_additive, Family::max_of_additive, Family::concave_distortion};
}

inline std::vector<Family> every_family() { return {std::begin(all_families), std::end(all_families)}; }

template <Scalar T>
struct SuiteConfig {
  std::size_t trials = 500;
  std::uint64_t seed = 1;
  unsigned n_min = 2;
  unsigned n_max = 8;
  /// Families cycled by trial index; empty selects the suite default.
  std::vector<Family> families;
  /// When set, every trial uses this capacity.
  std::optional<Capacity<T>> capacity;
};

/// Levi sequences run f_k = f (1 - 2^-k) for k = 1..levi_terms.
inline constexpr unsigned levi_terms = 30;
inline constexpr double levi_slack = 1e-9;
inline constexpr double fatou_slack = 1e-9;

namespace detail {

template <Scalar T>
struct Instance {
  Capacity<T> mu;
  std::vector<RealFunction<T>> functions;
  std::vector<T> scalars;
};

template <Scalar T>
struct Outcome {
  T lhs;
  T rhs;
  bool ok = true;
  double slack = 0.0;
  bool notable = false;
  std::string detail;
};

template <Scalar T>
Outcome<T> equal_sides(T lhs, T rhs, std::string detail = {}) {
  const double gap = std::abs(to_double(T(lhs - rhs)));
  bool ok = approx_equal(lhs, rhs);
  return {std::move(lhs), std::move(rhs), ok, ok ? 0.0 : -gap, false, std::move(detail)};
}

/// lhs <= rhs under the value tolerance.
template <Scalar T>
Outcome<T> at_most(T lhs, T rhs, std::string detail = {}) {
  const double slack = to_double(T(rhs - lhs));
  bool ok = approx_le(lhs, rhs);
  return {std::move(lhs), std::move(rhs), ok, slack, false, std::move(detail)};
}

/// lhs <= rhs + extra; exact mode drops `extra`.
template <Scalar T>
Outcome<T> at_most_abs(T lhs, T rhs, double extra, std::string detail = {}) {
  const double slack = to_double(T(rhs - lhs));
  bool ok = is_exact_v<T> ? lhs <= rhs : to_double(lhs) <= to_double(rhs) + extra;
  return {std::move(lhs), std::move(rhs), ok, slack, false, std::move(detail)};
}

template <Scalar T>
T pan(const RealFunction<T>& f, const Capacity<T>& mu) {
  return f.nonnegative() ? pan_pos(f, mu).value : pan_signed(f, mu).value;
}

/// mu'(A) = mu(A \ null_points): makes every point of `null_points` null.
template <Scalar T>
Capacity<T> with_null_points(const Capacity<T>& mu, Subset null_points) {
  std::vector<T> table(mu.table().size());
  for (std::uint32_t s = 0; s < table.size(); ++s) table[s] = mu(Subset{s} - null_points);
  return capacity_from_table(mu.space(), std::move(table));
}

/// A random proper subset of the points, possibly empty when allow_empty.
inline Subset random_proper_subset(const FiniteSpace& space, Rng& rng, bool allow_empty) {
  const unsigned n = space.size();
  if (n == 1) return Subset{};
  const unsigned size = rng.integer(allow_empty ? 0 : 1, n - 1);
  std::vector<unsigned> idx(n);
  for (unsigned i = 0; i < n; ++i) idx[i] = i;
  for (unsigned i = 0; i < size; ++i) std::swap(idx[i], idx[rng.integer(i, n - 1)]);
  Subset s;
  for (unsigned i = 0; i < size; ++i) s.bits |= 1u << idx[i];
  return s;
}

/// Random points to make null; empty when nulling them would leave
/// mu(X) = 0.
template <Scalar T>
Subset random_null_points(const Capacity<T>& mu, Rng& rng, bool allow_empty) {
  const Subset z = random_proper_subset(mu.space(), rng, allow_empty);
  return is_null_value(mu(mu.space().full() - z)) ? Subset{} : z;
}

template <Scalar T>
std::vector<RealFunction<T>> indicator_pair(const FiniteSpace& space, Subset a, Subset b) {
  return {RealFunction<T>::indicator(space, a), RealFunction<T>::indicator(space, b)};
}

template <Scalar T>
Subset subset_from_indicator(const RealFunction<T>& chi) {
  return chi.support();
}

inline const double lp_exponents[] = {1.0, 1.5, 2.0, 3.0};

template <Scalar T>
Instance<T> draw_instance(Suite suite, Capacity<T> mu, Rng& rng, std::size_t trial) {
  const FiniteSpace space = mu.space();
  Instance<T> inst{std::move(mu), {}, {}};
  switch (suite) {
    case Suite::additivity:
    case Suite::fatou:
      inst.functions = {random_nonnegative<T>(space, rng), random_nonnegative<T>(space, rng)};
      break;
    case Suite::set_additivity: {
      // Each point goes to A, B or neither.
      Subset a, b;
      for (unsigned i = 0; i < space.size(); ++i) {
        const unsigned where = rng.integer(0, 2);
        if (where == 0) a.bits |= 1u << i;
        if (where == 1) b.bits |= 1u << i;
      }
      inst.functions = {random_nonnegative<T>(space, rng)};
      auto chis = indicator_pair<T>(space, a, b);
      inst.functions.insert(inst.functions.end(), chis.begin(), chis.end());
      break;
    }
    case Suite::disjoint_superadditivity:
    case Suite::disjoint_additivity: {
      const Subset side = random_subset(space, rng);
      inst.functions = {random_nonnegative<T>(space, rng).masked(side),
                        random_nonnegative<T>(space, rng).masked(space.full() - side)};
      break;
    }
    case Suite::linearity:
      inst.functions = {random_signed<T>(space, rng), random_signed<T>(space, rng)};
      inst.scalars = {scalar_cast<T>(rng.uniform(-10.0, 10.0)), scalar_cast<T>(rng.uniform(-10.0, 10.0))};
      break;
    case Suite::singleton:
    case Suite::levi:
    case Suite::coincide:
      inst.functions = {random_nonnegative<T>(space, rng)};
      break;
    case Suite::ae: {
      inst.mu = with_null_points(inst.mu, random_null_points(inst.mu, rng, false));
      auto f = random_nonnegative<T>(space, rng);
      std::vector<T> g = f.values();
      for (unsigned i = 0; i < space.size(); ++i) {
        if (is_null_value(inst.mu(Subset::singleton(i))) && rng.chance(0.7)) {
          g[i] = scalar_cast<T>(rng.uniform(0.0, 10.0));
        }
      }
      inst.functions = {std::move(f), RealFunction<T>(space, std::move(g))};
      break;
    }
    case Suite::lp:
      inst.functions = {random_signed<T>(space, rng), random_signed<T>(space, rng)};
      inst.scalars = {scalar_cast<T>(lp_exponents[trial % 4])};
      break;
    case Suite::metric: {
      inst.mu = with_null_points(inst.mu, random_null_points(inst.mu, rng, true));
      auto f = random_signed<T>(space, rng);
      auto g = rng.chance(0.5) ? perturb_on_null_points(f, inst.mu, rng) : random_signed<T>(space, rng);
      auto h = random_signed<T>(space, rng);
      inst.functions = {std::move(f), std::move(g), std::move(h)};
      inst.scalars = {scalar_cast<T>(lp_exponents[trial % 4])};
      break;
    }
  }
  return inst;
}

template <Scalar T>
Outcome<T> evaluate_law(Suite suite, const Instance<T>& inst) {
  const auto& mu = inst.mu;
  const auto& fn = inst.functions;
  switch (suite) {
    case Suite::additivity:
    case Suite::disjoint_additivity:
      return equal_sides(pan_pos(fn[0] + fn[1], mu).value, T(pan_pos(fn[0], mu).value + pan_pos(fn[1], mu).value));

    case Suite::disjoint_superadditivity: {
      // pan(f + g) >= pan(f) + pan(g), stated as rhs <= lhs.
      auto o = at_most(T(pan_pos(fn[0], mu).value + pan_pos(fn[1], mu).value), pan_pos(fn[0] + fn[1], mu).value);
      std::swap(o.lhs, o.rhs);
      return o;
    }

    case Suite::set_additivity: {
      const Subset a = subset_from_indicator(fn[1]);
      const Subset b = subset_from_indicator(fn[2]);
      return equal_sides(pan_on_set(fn[0], mu, a | b).value,
                      T(pan_on_set(fn[0], mu, a).value + pan_on_set(fn[0], mu, b).value));
    }

    case Suite::linearity: {
      const auto& f = fn[0];
      const auto& g = fn[1];
      const T& alpha = inst.scalars[0];
      const T& beta = inst.scalars[1];
      const T pf = pan_signed(f, mu).value;
      const T pg = pan_signed(g, mu).value;
      auto combo = equal_sides(pan_signed(alpha * f + beta * g, mu).value, T(alpha * pf + beta * pg), "linear");
      if (!combo.ok) return combo;
      const T neg = pan_signed(-f, mu).value;
      if (neg != T(-pf)) return {neg, T(-pf), false, -std::abs(to_double(T(neg + pf))), false, "antisymmetry"};
      auto tri = at_most(abs_value(pf), pan_pos(f.abs(), mu).value, "absolute");
      if (!tri.ok) return tri;
      return combo;
    }

    case Suite::singleton: {
      T sum = T(0);
      for (unsigned i = 0; i < mu.points(); ++i) sum += fn[0][i] * mu(Subset::singleton(i));
      auto o = equal_sides(pan_pos(fn[0], mu).value, sum, "singleton-sum");
      if (o.ok) {
        for (Subset atom : minimal_atoms(mu)) {
          if (atom.size() != 1) {
            o.ok = false;
            o.detail = "non-singleton minimal atom " + std::to_string(atom.bits);
            break;
          }
        }
      }
      return o;
    }

    case Suite::ae:
      return equal_sides(pan_pos(fn[0], mu).value, pan_pos(fn[1], mu).value);

    case Suite::levi: {
      const auto& f = fn[0];
      const T full = pan_pos(f, mu).value;
      T previous = T(0);
      T last = T(0);
      T scale = T(1);
      for (unsigned k = 1; k <= levi_terms; ++k) {
        scale /= T(2);
        last = pan_pos(f.map([&](const T& v) { return T(v * (T(1) - scale)); }), mu).value;
        if (!approx_le(previous, last)) {
          return {previous, last, false, to_double(T(last - previous)), false, "not nondecreasing"};
        }
        previous = last;
      }
      // |pan f_K - pan f| <= pan f * 2^(1-K) + slack
      return at_most_abs(abs_value(T(last - full)), T(full * scale * T(2)), levi_slack, "convergence");
    }

    case Suite::fatou: {
      const auto low = fn[0].zip(fn[1], [](const T& a, const T& b) { return std::min(a, b); });
      return at_most_abs(pan_pos(low, mu).value, std::min(pan_pos(fn[0], mu).value, pan_pos(fn[1], mu).value),
                             fatou_slack);
    }

    case Suite::coincide: {
      const T pan_value = pan_pos(fn[0], mu).value;
      const T choquet_value = choquet_pos(fn[0], mu).value;
      const T concave_value = concave_integral(fn[0], mu).value;
      if (is_subadditive(mu).holds) {
        auto o = equal_sides(pan_value, concave_value, "pan = concave");
        if (o.ok && !approx_le(choquet_value, concave_value)) {
          return at_most(choquet_value, concave_value, "choquet <= concave");
        }
        return o;
      }
      auto o = at_most(std::max(pan_value, choquet_value), concave_value, "max(pan, choquet) <= concave");
      if (o.ok && !approx_le(concave_value, pan_value)) {
        o.notable = true;
        o.detail = "concave > pan";
      }
      return o;
    }

    case Suite::lp: {
      const double p = to_double(inst.scalars[0]);
      auto fd = function_cast<double>(fn[0]);
      auto gd = function_cast<double>(fn[1]);
      auto md = capacity_cast<double>(mu);
      auto holder = holder_check(fd, gd, md, NormParams::conjugate_of(p));
      auto mink = minkowski_check(fd, gd, md, p);
      const auto& bad = !holder.holds ? holder : mink;
      return {scalar_cast<T>(bad.lhs), scalar_cast<T>(bad.rhs), holder.holds && mink.holds, bad.slack, false,
              bad.name};
    }

    case Suite::metric: {
      const double p = to_double(inst.scalars[0]);
      auto w = metric_axioms_trial(mu, fn[0], fn[1], fn[2], p, 0);
      if (w) return {w->lhs, w->rhs, false, w->slack, false, w->detail};
      return {T(0), T(0), true, 0.0, false, {}};
    }
  }
  throw std::logic_error("unknown suite");
}

template <Scalar T>
bool hypothesis_holds(Suite suite, const Capacity<T>& mu) {
  switch (suite_hypothesis(suite)) {
    case Hypothesis::none: return true;
    case Hypothesis::subadditive: return is_subadditive(mu).holds;
    case Hypothesis::null_additive: return is_null_additive(mu).holds;
  }
  return true;
}

inline std::vector<Family> default_families(Suite suite) {
  return suite_hypothesis(suite) == Hypothesis::subadditive ? subadditive_families() : every_family();
}

template <Scalar T>
struct TrialRecord {
  bool skipped = false;
  bool hypothesis = true;
  std::optional<TrialWitness<T>> failure;
  std::optional<TrialWitness<T>> observation;
};

}  // namespace detail

/// Runs one suite. Trials run in parallel; the report is merged in trial
/// order, so it is identical to a sequential run.
template <Scalar T>
VerificationReport<T> run_suite(Suite suite, const SuiteConfig<T>& cfg) {
  const std::vector<Family> families = cfg.families.empty() ? detail::default_families(suite) : cfg.families;
  VerificationReport<T> report;
  report.suite = suite_name(suite);
  report.seed = cfg.seed;
  report.trials = cfg.trials;
  if (suite == Suite::lp || suite == Suite::metric || suite == Suite::levi || suite == Suite::fatou) {
    report.tolerance = 1e-9;
  }
  if (cfg.capacity) {
    report.family = "fixed";
  } else {
    for (std::size_t i = 0; i < families.size(); ++i) report.family += (i ? "," : "") + std::string(family_name(families[i]));
  }

  auto records = run_indexed<detail::TrialRecord<T>>(cfg.trials, [&](std::size_t t) {
    Rng rng(cfg.seed + t);
    std::optional<Capacity<T>> mu = cfg.capacity;
    if (!mu) {
      const unsigned n = rng.integer(cfg.n_min, cfg.n_max);
      mu = gen_capacity<T>(FiniteSpace::with_size(n), rng, families[t % families.size()]);
    }
    auto inst = detail::draw_instance(suite, std::move(*mu), rng, t);
    detail::TrialRecord<T> rec;
    rec.hypothesis = detail::hypothesis_holds(suite, inst.mu);
    if (suite == Suite::ae && !rec.hypothesis) {
      rec.skipped = true;
      return rec;
    }
    auto o = detail::evaluate_law(suite, inst);
    if (!o.ok || o.notable) {
      TrialWitness<T> w{t, inst.mu, inst.functions, inst.scalars, o.lhs, o.rhs, o.slack, o.detail};
      (o.ok ? rec.observation : rec.failure) = std::move(w);
    }
    return rec;
  });

  for (auto& rec : records) {
    if (rec.skipped) {
      ++report.skipped;
      continue;
    }
    report.hypothesis_satisfied = report.hypothesis_satisfied && rec.hypothesis;
    if (rec.failure) report.witnesses.push_back(std::move(*rec.failure));
    if (rec.observation) report.observations.push_back(std::move(*rec.observation));
  }
  report.failures = report.witnesses.size();
  return report;
}

template <Scalar T>
struct Replay {
  T lhs;
  T rhs;
  bool holds = true;
  std::string detail;
};

/// Re-evaluates a recorded instance; a reported violation comes back with
/// identical sides.
template <Scalar T>
Replay<T> replay(Suite suite, const TrialWitness<T>& w) {
  detail::Instance<T> inst{w.capacity, w.functions, w.scalars};
  auto o = detail::evaluate_law(suite, inst);
  return {std::move(o.lhs), std::move(o.rhs), o.ok, std::move(o.detail)};
}

// Named entry points, one per law.

/// pan(f + g) = pan f + pan g for nonnegative f, g.
template <Scalar T>
VerificationReport<T> check_additivity(const SuiteConfig<T>& cfg) { return run_suite(Suite::additivity, cfg); }

/// Integral over A | B = integral over A + integral over B for disjoint A, B.
template <Scalar T>
VerificationReport<T> check_set_additivity(const SuiteConfig<T>& cfg) { return run_suite(Suite::set_additivity, cfg); }

/// pan(f + g) >= pan f + pan g when the positive sets are disjoint; any
/// monotone capacity.
template <Scalar T>
VerificationReport<T> check_disjoint_superadditivity(const SuiteConfig<T>& cfg) {
  return run_suite(Suite::disjoint_superadditivity, cfg);
}

template <Scalar T>
VerificationReport<T> check_disjoint_additivity(const SuiteConfig<T>& cfg) {
  return run_suite(Suite::disjoint_additivity, cfg);
}

/// pan(a f + b g) = a pan f + b pan g for signed f, g and a, b in [-10, 10],
/// plus pan(-f) = -pan f and |pan f| <= pan |f|.
template <Scalar T>
VerificationReport<T> check_linearity(const SuiteConfig<T>& cfg) { return run_suite(Suite::linearity, cfg); }

template <Scalar T>
VerificationReport<T> check_singleton_formula(const SuiteConfig<T>& cfg) { return run_suite(Suite::singleton, cfg); }

template <Scalar T>
VerificationReport<T> check_ae_equality(const SuiteConfig<T>& cfg) { return run_suite(Suite::ae, cfg); }

template <Scalar T>
VerificationReport<T> check_levi(const SuiteConfig<T>& cfg) { return run_suite(Suite::levi, cfg); }

template <Scalar T>
VerificationReport<T> check_fatou(const SuiteConfig<T>& cfg) { return run_suite(Suite::fatou, cfg); }

template <Scalar T>
VerificationReport<T> check_pan_equals_concave(const SuiteConfig<T>& cfg) { return run_suite(Suite::coincide, cfg); }

// ---------------------------------------------------------------------------
// Counterexample search

enum class SearchMode { nonnegative, signed_values };

template <Scalar T>
struct AdditivityCounterexample {
  RealFunction<T> f;
  RealFunction<T> g;
  /// pan(f + g) and pan f + pan g.
  T lhs;
  T rhs;
  std::size_t candidates = 0;
};

/// Looks for f, g with pan(f + g) != pan f + pan g. Structured candidates
/// come first (splits f*chi_A, f*chi_{X\A} of `base` when given, then
/// indicator pairs, then scaled indicator pairs), then random pairs.
/// `budget` bounds the number of pairs evaluated.
template <Scalar T>
std::optional<AdditivityCounterexample<T>> find_additivity_counterexample(
    const Capacity<T>& mu, std::size_t budget, std::uint64_t seed, SearchMode mode = SearchMode::nonnegative,
    const std::optional<std::type_identity_t<RealFunction<T>>>& base = std::nullopt) {
  const FiniteSpace& space = mu.space();
  const std::uint32_t full = space.full().bits;
  std::size_t tried = 0;
  std::optional<AdditivityCounterexample<T>> found;

  auto integral = [&](const RealFunction<T>& h) {
    return mode == SearchMode::signed_values ? pan_signed(h, mu).value : pan_pos(h, mu).value;
  };
  auto attempt = [&](RealFunction<T> f, RealFunction<T> g) {
    if (found || tried >= budget) return;
    ++tried;
    T lhs = integral(f + g);
    T rhs = integral(f) + integral(g);
    if (!approx_equal(lhs, rhs)) found = AdditivityCounterexample<T>{std::move(f), std::move(g), lhs, rhs, tried};
  };
  auto done = [&] { return found.has_value() || tried >= budget; };
  const T one = T(1);

  if (mode == SearchMode::signed_values && base) {
    require_same_space(*base, mu);
    for (std::uint32_t a = 1; a < full && !done(); ++a) attempt(base->masked(Subset{a}), base->masked(Subset{full & ~a}));
  }
  for (std::uint32_t a = 1; a <= full && !done(); ++a) {
    for (std::uint32_t b = mode == SearchMode::signed_values ? 1 : a + 1; b <= full && !done(); ++b) {
      if (a == b) continue;
      auto f = RealFunction<T>::indicator(space, Subset{a}, one);
      auto g = RealFunction<T>::indicator(space, Subset{b}, mode == SearchMode::signed_values ? T(-1) : one);
      attempt(std::move(f), std::move(g));
    }
  }
  for (std::uint32_t a = 1; a <= full && !done(); ++a) {
    for (std::uint32_t b = 1; b <= full && !done(); ++b) {
      if (a == b) continue;
      attempt(RealFunction<T>::indicator(space, Subset{a}, T(2)), RealFunction<T>::indicator(space, Subset{b}, one));
    }
  }
  Rng rng(seed);
  while (!done()) {
    if (mode == SearchMode::signed_values) {
      attempt(random_signed<T>(space, rng), random_signed<T>(space, rng));
    } else {
      attempt(random_nonnegative<T>(space, rng), random_nonnegative<T>(space, rng));
    }
  }
  return found;
}

template <Scalar T>
struct ComonotoneWitness {
  Capacity<T> capacity;
  RealFunction<T> f;
  RealFunction<T> g;
  T lhs;
  T rhs;
};

template <Scalar T>
struct ComonotoneSearch {
  std::optional<ComonotoneWitness<T>> witness;
  std::size_t examined = 0;
  /// Pairs where Choquet additivity failed; always 0 for a correct engine.
  std::size_t choquet_mismatches = 0;
};

/// True when no x, y have f(x) < f(y) and g(x) > g(y).
template <Scalar T>
bool comonotone(const RealFunction<T>& f, const RealFunction<T>& g) {
  for (unsigned x = 0; x < f.size(); ++x)
    for (unsigned y = 0; y < f.size(); ++y)
      if (f[x] < f[y] && g[x] > g[y]) return false;
  return true;
}

namespace detail {

/// Two functions nondecreasing along one random ordering of the points.
template <Scalar T>
std::pair<RealFunction<T>, RealFunction<T>> random_comonotone_pair(const FiniteSpace& space, Rng& rng) {
  const unsigned n = space.size();
  std::vector<unsigned> order(n);
  for (unsigned i = 0; i < n; ++i) order[i] = i;
  for (unsigned i = 0; i + 1 < n; ++i) std::swap(order[i], order[rng.integer(i, n - 1)]);
  auto sorted_draw = [&] {
    auto v = random_nonnegative<T>(space, rng).values();
    std::sort(v.begin(), v.end());
    std::vector<T> out(n);
    for (unsigned k = 0; k < n; ++k) out[order[k]] = v[k];
    return RealFunction<T>(space, std::move(out));
  };
  auto f = sorted_draw();
  auto g = sorted_draw();
  return {std::move(f), std::move(g)};
}

template <Scalar T>
bool examine_comonotone(const Capacity<T>& mu, const RealFunction<T>& f, const RealFunction<T>& g,
                        ComonotoneSearch<T>& out) {
  ++out.examined;
  const T c_lhs = choquet_pos(f + g, mu).value;
  const T c_rhs = choquet_pos(f, mu).value + choquet_pos(g, mu).value;
  if (!approx_equal(c_lhs, c_rhs)) ++out.choquet_mismatches;
  const T lhs = pan_pos(f + g, mu).value;
  const T rhs = pan_pos(f, mu).value + pan_pos(g, mu).value;
  if (approx_equal(lhs, rhs)) return false;
  out.witness = ComonotoneWitness<T>{mu, f, g, lhs, rhs};
  return true;
}

}  // namespace detail

/// Comonotone pairs on a fixed capacity: nested indicators (chi_A, chi_B)
/// with A a proper subset of B first, then random comonotone pairs.
template <Scalar T>
ComonotoneSearch<T> find_comonotone_counterexample(const Capacity<T>& mu, std::size_t budget, std::uint64_t seed) {
  ComonotoneSearch<T> out;
  const FiniteSpace& space = mu.space();
  const std::uint32_t full = space.full().bits;
  for (std::uint32_t b = 1; b <= full; ++b) {
    for (std::uint32_t a = (b - 1) & b; a != 0; a = (a - 1) & b) {
      if (out.examined >= budget) return out;
      if (detail::examine_comonotone(mu, RealFunction<T>::indicator(space, Subset{a}),
                                     RealFunction<T>::indicator(space, Subset{b}), out)) {
        return out;
      }
    }
  }
  Rng rng(seed);
  while (out.examined < budget) {
    auto [f, g] = detail::random_comonotone_pair<T>(space, rng);
    if (detail::examine_comonotone(mu, f, g, out)) return out;
  }
  return out;
}

/// Comonotone pairs over capacities drawn from a family; candidate i uses
/// seed + i and n in [n_min, n_max].
template <Scalar T>
ComonotoneSearch<T> find_comonotone_counterexample(Family family, std::size_t budget, std::uint64_t seed,
                                                   unsigned n_min = 2, unsigned n_max = 6) {
  ComonotoneSearch<T> out;
  for (std::size_t i = 0; i < budget; ++i) {
    Rng rng(seed + i);
    const auto space = FiniteSpace::with_size(rng.integer(n_min, n_max));
    auto mu = gen_capacity<T>(space, rng, family);
    if (i % 2 == 0) {
      Subset b = random_subset(space, rng);
      if (b.empty()) b = space.full();
      const Subset a = random_subset(space, rng) & b;
      if (detail::examine_comonotone(mu, RealFunction<T>::indicator(space, a), RealFunction<T>::indicator(space, b),
                                     out)) {
        return out;
      }
    } else {
      auto [f, g] = detail::random_comonotone_pair<T>(space, rng);
      if (detail::examine_comonotone(mu, f, g, out)) return out;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// The worked four-point example.

/// Capacity on {x1, x2, x3, x4} with mu(X) = 6.5; not subadditive
/// (mu({x1, x3}) = 4 > mu({x1}) + mu({x3}) = 3).
template <Scalar T>
Capacity<T> example52_capacity() {
  auto v = [](const char* s) { return scalar_cast<T>(parse_rational(s)); };
  const auto space = FiniteSpace({"x1", "x2", "x3", "x4"});
  std::map<Subset, T> raw{
      {make_subset({0}), v("1")},          {make_subset({1}), v("1")},
      {make_subset({2}), v("2")},          {make_subset({3}), v("1.5")},
      {make_subset({0, 1}), v("1.5")},     {make_subset({0, 2}), v("4")},
      {make_subset({1, 3}), v("4")},       {make_subset({2, 3}), v("4")},
      {make_subset({0, 3}), v("2.5")},     {make_subset({1, 2}), v("3.5")},
      {make_subset({0, 1, 2}), v("5")},    {make_subset({0, 1, 3}), v("5")},
      {make_subset({0, 2, 3}), v("4.5")},  {make_subset({1, 2, 3}), v("6")},
      {make_subset({0, 1, 2, 3}), v("6.5")},
  };
  return validate_capacity(raw, space);
}

/// f = (2, -2, 1, -1).
template <Scalar T>
RealFunction<T> example52_function() {
  return RealFunction<T>(FiniteSpace({"x1", "x2", "x3", "x4"}), {T(2), T(-2), T(1), T(-1)});
}

struct GoldenCheck {
  std::string name;
  std::string expected;
  std::string actual;
  bool ok = false;
};

struct GoldenReport {
  std::vector<GoldenCheck> checks;
  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const GoldenCheck& c) { return c.ok; });
  }
};

/// The signed example and its split into g = f chi_{x1,x4}, h = f chi_{x2,x3},
/// evaluated exactly.
inline GoldenReport reproduce_example_52() {
  const auto mu = example52_capacity<Rational>();
  const auto f = example52_function<Rational>();
  const auto g = f.masked(make_subset({0, 3}));
  const auto h = f.masked(make_subset({1, 2}));
  GoldenReport report;
  auto check = [&](std::string name, const Rational& actual, const char* expected) {
    const Rational want = parse_rational(expected);
    report.checks.push_back({std::move(name), format_rational(want), format_rational(actual), actual == want});
  };
  check("pan f+", pan_pos(f.positive_part(), mu).value, "4");
  check("pan f-", pan_pos(f.negative_part(), mu).value, "4");
  check("pan f", pan_signed(f, mu).value, "0");
  check("pan g", pan_signed(g, mu).value, "0.5");
  check("pan h", pan_signed(h, mu).value, "0");
  check("pan (g+h)", pan_signed(g + h, mu).value, "0");
  return report;
}

}  // namespace panint

#endif  // PANINT_VERIFY_HPP
