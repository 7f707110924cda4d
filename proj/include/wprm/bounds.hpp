#pragma once

// Closed-form values and bounds for e_q(d; w), the largest number of F_q-rational zeros of a
// nonzero degree-d form on P(w) that is not in the vanishing ideal.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "wprm/error.hpp"
#include "wprm/poly.hpp"
#include "wprm/space.hpp"

namespace wprm {

enum class BoundKind { exact, lower, upper };

inline std::string to_string(BoundKind k) {
  switch (k) {
    case BoundKind::exact: return "exact";
    case BoundKind::lower: return "lower";
    case BoundKind::upper: return "upper";
  }
  return "unknown";
}

struct Hypothesis {
  std::string name;
  bool holds;
};

struct BoundReport {
  std::uint64_t value = 0;
  BoundKind kind = BoundKind::exact;
  std::string source;
  std::vector<Hypothesis> hypotheses;
};

/// min(p_l, deg * q^{l-1} + p_{l-2}): the maximal zero count of a degree-deg form on P^l.
inline std::uint64_t serre_bound(std::uint64_t q, int ell, long long deg) {
  require(ell >= 1, Errc::InvalidArgument, "projective dimension must be positive");
  require(deg >= 1, Errc::InvalidArgument, "degree must be positive");
  return std::min(p_j(q, ell), static_cast<std::uint64_t>(deg) * ipow(q, ell - 1) + p_j(q, ell - 2));
}

namespace detail {
inline void require_degree(long long d) {
  require(d >= 1, Errc::InvalidArgument, "degree must be positive, got " + std::to_string(d));
}

inline void require_nonempty(long long d, const Weights& w) {
  require(semigroup_contains(d, w), Errc::EmptyDegree,
          "no monomial of degree " + std::to_string(d) + " for weights " + w.to_string());
}

// (floor((d-1)/a) + 1 + extra) q^{m-1} + p_{m-2}, capped at p_m.
inline std::uint64_t capped_formula(std::uint64_t q, int m, long long d, long long a, long long extra) {
  const auto k = static_cast<std::uint64_t>((d - 1) / a + 1 + extra);
  return std::min(p_j(q, m), k * ipow(q, m - 1) + p_j(q, m - 2));
}

// Two-weight data d = lambda * lcm + rho for weights with gcd 1 dividing d.
struct TwoWeightSplit {
  long long lcm, lambda, rho;
  bool w0_divides, w1_divides;
  std::uint64_t den_rho;
};

inline TwoWeightSplit split_two(long long d, long long w0, long long w1) {
  TwoWeightSplit s{};
  s.lcm = std::lcm(w0, w1);
  s.lambda = d / s.lcm;
  s.rho = d % s.lcm;
  s.w0_divides = d % w0 == 0;
  s.w1_divides = d % w1 == 0;
  s.den_rho = denumerant_two_weights(s.rho, w0, w1);
  return s;
}
}  // namespace detail

/// Exact e_q for w_0 = 1: min{p_m, (floor((d-1)/w_1) + 1) q^{m-1} + p_{m-2}}.
inline BoundReport eq_exact_w0_one(std::uint64_t q, const Weights& w, long long d) {
  require(w.m() >= 1, Errc::HypothesisViolated, "needs at least two variables");
  require(w[0] == 1, Errc::HypothesisViolated, "needs w_0 = 1, got " + std::to_string(w[0]));
  require(w[1] == w.min_tail(), Errc::HypothesisViolated, "needs w_1 = min(w_1..w_m), got " + w.to_string());
  detail::require_degree(d);
  detail::require_nonempty(d, w);
  BoundReport r;
  r.value = detail::capped_formula(q, w.m(), d, w[1], 0);
  r.kind = BoundKind::exact;
  r.source = "w0_one";
  r.hypotheses = {{"w_0 = 1", true}, {"w_1 = min(w_1..w_m)", true}};
  return r;
}

/// Divides out gamma = gcd(w); returns (w / gamma, d / gamma).
inline std::pair<Weights, long long> eq_reduce_by_gcd(const Weights& w, long long d) {
  const long long g = w.gcd();
  require(d % g == 0, Errc::EmptyDegree,
          "gcd " + std::to_string(g) + " of " + w.to_string() + " does not divide d = " + std::to_string(d));
  std::vector<int> r;
  r.reserve(w.size());
  for (int x : w.values()) r.push_back(static_cast<int>(x / g));
  return {Weights(std::move(r)), d / g};
}

/// Exact e_q on the weighted projective line P(w_0, w_1).
inline BoundReport eq_exact_m1(std::uint64_t q, long long w0, long long w1, long long d) {
  detail::require_degree(d);
  const Weights full{static_cast<int>(w0), static_cast<int>(w1)};
  const auto [w, dr] = eq_reduce_by_gcd(full, d);
  detail::require_nonempty(dr, w);
  const auto s = detail::split_two(dr, w[0], w[1]);
  std::uint64_t v;
  std::string source;
  if (s.rho == 0) {
    v = static_cast<std::uint64_t>(s.lambda);
    source = "m1_lcm_divides";
  } else if (s.w0_divides || s.w1_divides) {
    v = static_cast<std::uint64_t>(s.lambda) + 1;
    source = "m1_one_divides";
  } else {
    v = static_cast<std::uint64_t>(s.lambda) + 1 + s.den_rho;
    source = "m1_neither_divides";
  }
  BoundReport r;
  r.value = std::min(v, q + 1);
  r.kind = BoundKind::exact;
  r.source = source;
  r.hypotheses = {{"m = 1", true}};
  return r;
}

/// The line bound through delta = den(d) - 1 for gcd(w_0, w_1) = 1: delta when both weights
/// divide d, delta + 1 when one does, delta + 2 when neither does. Not capped at q + 1.
inline BoundReport bound_m1_delta(std::uint64_t q, long long w0, long long w1, long long d) {
  (void)q;
  detail::require_degree(d);
  require(std::gcd(w0, w1) == 1, Errc::HypothesisViolated,
          "needs gcd(w_0, w_1) = 1, got (" + std::to_string(w0) + "," + std::to_string(w1) + ")");
  const Weights w{static_cast<int>(w0), static_cast<int>(w1)};
  detail::require_nonempty(d, w);
  const long long delta = static_cast<long long>(denumerant(d, w)) - 1;
  const bool a = d % w0 == 0;
  const bool b = d % w1 == 0;
  BoundReport r;
  r.value = static_cast<std::uint64_t>(delta + (a && b ? 0 : (a || b) ? 1 : 2));
  r.kind = BoundKind::upper;
  r.source = "m1_delta";
  r.hypotheses = {{"gcd(w_0, w_1) = 1", true}};
  return r;
}

/// min{p_m, (floor((d-1)/lcm(w_0,w_1)) + 1 + eps) q^{m-1} + p_{m-2}} with eps = den(rho) when
/// neither w_0 nor w_1 divides d. Realized by forms in x_0, x_1 alone, so it is a lower bound
/// whenever d lies in the semigroup of (w_0, w_1); otherwise the value 0 is returned.
inline BoundReport lower_bound_general(std::uint64_t q, const Weights& w, long long d) {
  require(w.m() >= 1, Errc::InvalidArgument, "needs at least two variables");
  detail::require_degree(d);
  BoundReport r;
  r.kind = BoundKind::lower;
  const Weights line{w[0], w[1]};
  if (!semigroup_contains(d, line)) {
    r.value = 0;
    r.source = "none";
    return r;
  }
  const long long g = std::gcd<long long>(w[0], w[1]);
  const auto s = detail::split_two(d / g, w[0] / g, w[1] / g);
  const long long eps = (s.w0_divides || s.w1_divides) ? 0 : static_cast<long long>(s.den_rho);
  r.value = detail::capped_formula(q, w.m(), d, std::lcm<long long>(w[0], w[1]), eps);
  r.source = "lower_general";
  r.hypotheses = {{"d in <w_0, w_1>", true}};
  return r;
}

/// Upper bound min{p_m, (floor((d-1)/w_1) + 1) q^{m-1} + p_{m-2}}, w_1 the smallest of
/// w_1..w_m, valid when gcd(w_0, w_i, q-1) = 1 for every i >= 1.
inline BoundReport upper_bound_coprime(std::uint64_t q, const Weights& w, long long d) {
  require(w.m() >= 1, Errc::InvalidArgument, "needs at least two variables");
  detail::require_degree(d);
  std::string failing;
  const auto n = static_cast<long long>(q) - 1;
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (std::gcd(std::gcd<long long>(w[0], w[i]), n) != 1) failing += (failing.empty() ? "" : ",") + std::to_string(i);
  }
  require(failing.empty(), Errc::HypothesisViolated,
          "gcd(w_0, w_i, q-1) != 1 for i in {" + failing + "} with w = " + w.to_string() + ", q = " + std::to_string(q));
  detail::require_nonempty(d, w);
  BoundReport r;
  r.value = detail::capped_formula(q, w.m(), d, w.min_tail(), 0);
  r.kind = BoundKind::upper;
  r.source = "upper_coprime";
  r.hypotheses = {{"gcd(w_0, w_i, q-1) = 1 for all i >= 1", true}};
  return r;
}

/// Exact e_q whenever a closed form applies: after dividing out gcd(w), either some weight is
/// 1 (the variables are relabelled to put it first, which does not change e_q) or m = 1.
inline BoundReport eq_formula(std::uint64_t q, const Weights& w, long long d) {
  detail::require_degree(d);
  const auto [r, dr] = eq_reduce_by_gcd(w, d);
  if (r.m() == 1) return eq_exact_m1(q, w[0], w[1], d);
  std::vector<int> sorted = r.values();
  std::sort(sorted.begin(), sorted.end());
  require(sorted[0] == 1, Errc::HypothesisViolated,
          "no closed form for " + w.to_string() + ": after dividing by the gcd no weight equals 1 and m > 1");
  BoundReport out = eq_exact_w0_one(q, Weights(sorted), dr);
  if (w.gcd() != 1 || sorted != r.values()) out.hypotheses.push_back({"reduced to " + Weights(sorted).to_string(), true});
  return out;
}

}  // namespace wprm
