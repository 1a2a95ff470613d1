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

/// \file panint/lp_space.hpp
///
/// Norms ||f||_{mu,p} = (pan |f|^p)^(1/p), the induced distance, and the
/// Hoelder/Minkowski/metric checks that hold for subadditive capacities.
///
/// Roots are irrational in general, so norms are returned as double. With
/// an exact capacity and an integer p the inner integral pan |f|^p is still
/// computed exactly (see `p_norm_power`).

#ifndef PANINT_LP_SPACE_HPP
#define PANINT_LP_SPACE_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "pan.hpp"
#include "parallel.hpp"
#include "properties.hpp"
#include "random.hpp"
#include "report.hpp"

namespace panint {

/// Conjugate exponents 1/p + 1/q = 1; q is empty (infinity) when p = 1.
struct NormParams {
  double p = 1.0;
  std::optional<double> q;

  static NormParams conjugate_of(double p) {
    if (!(p >= 1.0) || !std::isfinite(p)) throw error(errc::bad_exponent, "p must be a finite real >= 1");
    if (p == 1.0) return {1.0, std::nullopt};
    return {p, p / (p - 1.0)};
  }

  /// Validates an explicit (p, q) pair; q = nullopt means infinity.
  static NormParams make(double p, std::optional<double> q) {
    if (!(p >= 1.0) || !std::isfinite(p)) throw error(errc::bad_exponent, "p must be a finite real >= 1");
    if (!q) {
      if (p != 1.0) throw error(errc::bad_exponent, "q = infinity requires p = 1");
      return {p, q};
    }
    if (!(*q >= 1.0) || !std::isfinite(*q)) throw error(errc::bad_exponent, "q must be a finite real >= 1");
    if (std::abs(1.0 / p + 1.0 / *q - 1.0) > 1e-12) throw error(errc::bad_exponent, "1/p + 1/q must equal 1");
    return {p, q};
  }
};

namespace detail {

inline void check_exponent(double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw error(errc::bad_exponent, "p must be a finite real >= 1");
}

inline bool integral_exponent(double p) { return p == std::floor(p) && p <= 64.0; }

template <Scalar T>
T power(const T& base, unsigned e) {
  T out = T(1);
  for (unsigned i = 0; i < e; ++i) out *= base;
  return out;
}

}  // namespace detail

/// pan |f|^p, exact when T is exact and p is an integer.
template <Scalar T>
T p_norm_power(const RealFunction<T>& f, const Capacity<T>& mu, double p) {
  detail::check_exponent(p);
  require_same_space(f, mu);
  if constexpr (is_exact_v<T>) {
    if (!detail::integral_exponent(p)) {
      throw error(errc::bad_exponent, "exact mode needs an integer exponent");
    }
    const unsigned e = static_cast<unsigned>(p);
    return pan_pos(f.abs().map([&](const T& v) { return detail::power(v, e); }), mu).value;
  } else {
    return pan_pos(f.abs().map([&](double v) { return p == 1.0 ? v : std::pow(v, p); }), mu).value;
  }
}

/// ||f||_{mu,p}. Non-integer p on an exact input falls back to float.
template <Scalar T>
double p_norm(const RealFunction<T>& f, const Capacity<T>& mu, double p) {
  detail::check_exponent(p);
  if constexpr (is_exact_v<T>) {
    if (!detail::integral_exponent(p)) return p_norm(function_cast<double>(f), capacity_cast<double>(mu), p);
  }
  const double inner = to_double(p_norm_power(f, mu, p));
  return p == 1.0 ? inner : std::pow(inner, 1.0 / p);
}

/// Essential supremum of |f|: the least c with mu({|f| > c}) = 0.
template <Scalar T>
double ess_sup(const RealFunction<T>& f, const Capacity<T>& mu) {
  require_same_space(f, mu);
  double best = 0.0;
  for (unsigned i = 0; i < f.size(); ++i) {
    const double level = std::abs(to_double(f[i]));
    Subset above;
    for (unsigned j = 0; j < f.size(); ++j)
      if (std::abs(to_double(f[j])) >= level) above.bits |= 1u << j;
    if (!is_null_value(mu(above))) best = std::max(best, level);
  }
  return best;
}

/// rho(f, g) = ||f - g||_{mu,p}.
template <Scalar T>
double distance(const RealFunction<T>& f, const RealFunction<T>& g, const Capacity<T>& mu, double p) {
  return p_norm(f - g, mu, p);
}

struct InequalityReport {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  /// rhs - lhs.
  double slack = 0.0;
  bool holds = true;
  /// False when mu is not subadditive; the check is then advisory only.
  bool hypothesis_satisfied = true;
  std::optional<errc> advisory;
};

namespace detail {

inline InequalityReport le_report(std::string name, double lhs, double rhs, bool hypothesis) {
  InequalityReport r;
  r.name = std::move(name);
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = rhs - lhs;
  r.holds = lhs <= rhs + 1e-9 * std::max({1.0, std::abs(lhs), std::abs(rhs)});
  r.hypothesis_satisfied = hypothesis;
  if (!hypothesis) r.advisory = errc::not_subadditive;
  return r;
}

}  // namespace detail

/// ||f g||_{mu,1} <= ||f||_{mu,p} ||g||_{mu,q}; q = infinity uses the
/// essential supremum.
template <Scalar T>
InequalityReport holder_check(const RealFunction<T>& f, const RealFunction<T>& g, const Capacity<T>& mu,
                              NormParams exps) {
  const bool hyp = is_subadditive(mu).holds;
  const double lhs = p_norm(f.zip(g, [](const T& a, const T& b) { return T(a * b); }), mu, 1.0);
  const double g_norm = exps.q ? p_norm(g, mu, *exps.q) : ess_sup(g, mu);
  return detail::le_report("holder", lhs, p_norm(f, mu, exps.p) * g_norm, hyp);
}

/// ||f + g||_{mu,p} <= ||f||_{mu,p} + ||g||_{mu,p}.
template <Scalar T>
InequalityReport minkowski_check(const RealFunction<T>& f, const RealFunction<T>& g, const Capacity<T>& mu,
                                 double p) {
  const bool hyp = is_subadditive(mu).holds;
  return detail::le_report("minkowski", p_norm(f + g, mu, p), p_norm(f, mu, p) + p_norm(g, mu, p), hyp);
}

/// Symmetry, identity through null sets, and the triangle inequality for
/// rho on one triple. Returns the first violated axiom, or nullopt.
template <Scalar T>
std::optional<TrialWitness<T>> metric_axioms_trial(const Capacity<T>& mu, const RealFunction<T>& f,
                                                   const RealFunction<T>& g, const RealFunction<T>& h,
                                                   double p, std::size_t trial) {
  const double fg = distance(f, g, mu, p);
  const double gf = distance(g, f, mu, p);
  const double gh = distance(g, h, mu, p);
  const double fh = distance(f, h, mu, p);
  auto witness = [&](double lhs, double rhs, std::string detail) {
    return TrialWitness<T>{trial, mu, {f, g, h}, {scalar_cast<T>(p)}, scalar_cast<T>(lhs),
                           scalar_cast<T>(rhs), rhs - lhs, std::move(detail)};
  };
  if (fg != gf) return witness(fg, gf, "symmetry");
  const bool null_difference = is_null_value(mu((f - g).support()));
  if ((fg == 0.0) != null_difference) {
    return witness(fg, null_difference ? 0.0 : 1.0, "identity");
  }
  const double bound = fg + gh;
  if (!(fh <= bound + 1e-9 * std::max({1.0, fh, bound}))) return witness(fh, bound, "triangle");
  return std::nullopt;
}

namespace detail {

/// g equal to f except on a random subset of the null points of mu.
template <Scalar T>
RealFunction<T> perturb_on_null_points(const RealFunction<T>& f, const Capacity<T>& mu, Rng& rng) {
  std::vector<T> v = f.values();
  for (unsigned i = 0; i < f.size(); ++i) {
    if (is_null_value(mu(Subset::singleton(i))) && rng.chance(0.5)) {
      v[i] = scalar_cast<T>(rng.uniform(-10.0, 10.0));
    }
  }
  return RealFunction<T>(f.space(), std::move(v));
}

}  // namespace detail

/// Randomized metric-axiom check on a fixed subadditive capacity. Per-trial
/// seeds are seed + trial index. Half of the pairs (f, g) agree off a null
/// set so the identity axiom is exercised in both directions.
template <Scalar T>
VerificationReport<T> metric_axioms_check(const Capacity<T>& mu, double p, std::size_t trials,
                                          std::uint64_t seed) {
  detail::check_exponent(p);
  if (!is_subadditive(mu).holds) {
    throw error(errc::not_subadditive, "metric axioms are only claimed for subadditive capacities");
  }
  VerificationReport<T> report;
  report.suite = "metric";
  report.family = "fixed";
  report.seed = seed;
  report.trials = trials;
  report.tolerance = 1e-9;

  auto outcomes = run_indexed<std::optional<TrialWitness<T>>>(trials, [&](std::size_t t) {
    Rng rng(seed + t);
    auto f = random_signed<T>(mu.space(), rng);
    auto g = rng.chance(0.5) ? detail::perturb_on_null_points(f, mu, rng) : random_signed<T>(mu.space(), rng);
    auto h = random_signed<T>(mu.space(), rng);
    return metric_axioms_trial(mu, f, g, h, p, t);
  });
  for (auto& o : outcomes) {
    if (o) report.witnesses.push_back(std::move(*o));
  }
  report.failures = report.witnesses.size();
  return report;
}

}  // namespace panint

#endif  // PANINT_LP_SPACE_HPP
