#pragma once

// Explicit forms attaining e_q: the product constructions for w_0 = 1 and the line
// constructions on P(w_0, w_1). Every witness recounts its zeros when it is built.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "wprm/bounds.hpp"
#include "wprm/error.hpp"
#include "wprm/field.hpp"
#include "wprm/ideal.hpp"
#include "wprm/poly.hpp"
#include "wprm/space.hpp"

namespace wprm {

struct ExtremalWitness {
  WPoly poly;
  std::uint64_t claimed_zeros;
  std::string attains;
};

inline bool verify_witness(const ExtremalWitness& wit, const PointSet& pts) {
  return count_zeros(wit.poly, pts) == wit.claimed_zeros;
}

namespace detail {
inline WPoly monomial_poly(const Field& F, const Weights& w, std::vector<int> e) {
  return WPoly::from_monomial(F, w, Monomial(w, std::move(e)));
}

// x_a^{ea} - alpha * x_b^{eb}
inline WPoly binomial(const Field& F, const Weights& w, std::size_t a, int ea, std::size_t b, int eb, Elem alpha) {
  const Monomial ma = Monomial::variable(w, a, ea);
  WPoly f = WPoly::from_monomial(F, w, ma);
  f.add_term(Monomial::variable(w, b, eb), F.neg(alpha));
  return f;
}

inline ExtremalWitness checked(WPoly poly, std::uint64_t claimed, std::string attains, const PointSet& pts) {
  ExtremalWitness wit{std::move(poly), claimed, std::move(attains)};
  const auto n = count_zeros(wit.poly, pts);
  require(n == claimed, Errc::WitnessMismatch,
          format_poly(wit.poly) + " has " + std::to_string(n) + " zeros, expected " + std::to_string(claimed));
  return wit;
}

// The first k elements of F_q^* in the fixed order.
inline std::vector<Elem> first_nonzero(const Field& F, std::uint64_t k) {
  std::vector<Elem> out;
  for (std::uint32_t i = 1; i <= k; ++i) out.push_back(F.element_at(i));
  return out;
}

// The first k elements of F_q, listing F_q^* in the fixed order and 0 last.
inline std::vector<Elem> first_elements_zero_last(const Field& F, std::uint64_t k) {
  std::vector<Elem> out = first_nonzero(F, std::min<std::uint64_t>(k, F.q() - 1));
  if (k >= F.q()) out.push_back(Field::zero());
  return out;
}

// The deg-lex smallest monomial of degree e in two variables with both exponents positive.
inline Monomial smallest_mixed_monomial(const Weights& w, long long e) {
  for (const auto& mono : monomials_of_degree(w, e))
    if (mono[0] > 0 && mono[1] > 0) return mono;
  fail(Errc::EmptyDegree, "no monomial of degree " + std::to_string(e) + " divisible by x0*x1 for " + w.to_string());
}
}  // namespace detail

/// For w_0 = 1 and d <= w_1 q: x_0^{a*} prod_{i=1}^{d_1} (x_1 - alpha_i x_0^{w_1}) with
/// d_1 = floor((d-1)/w_1); for d > w_1 q: x_0^{d - w_1 q - 1} B_{0,1}.
inline ExtremalWitness extremal_w0_one(const PointSet& pts, long long d, std::optional<std::vector<Elem>> alphas = {}) {
  const Field& F = pts.field();
  const Weights& w = pts.weights();
  const std::uint64_t q = F.q();
  require(w.m() >= 1, Errc::HypothesisViolated, "needs at least two variables");
  require(w[0] == 1, Errc::HypothesisViolated, "needs w_0 = 1, got " + std::to_string(w[0]));
  require(w[1] == w.min_tail(), Errc::HypothesisViolated, "needs w_1 = min(w_1..w_m), got " + w.to_string());
  require(d >= 1, Errc::InvalidArgument, "degree must be positive");
  const long long w1 = w[1];
  const int m = w.m();
  std::vector<int> e(w.size(), 0);

  if (d >= w1 * static_cast<long long>(q) + 1) {
    e[0] = static_cast<int>(d - w1 * static_cast<long long>(q) - 1);
    WPoly f = detail::monomial_poly(F, w, e) * binomial_Bij(0, 1, F, w);
    return detail::checked(std::move(f), p_j(q, m), "w0_one:large_degree", pts);
  }

  const long long d1 = (d - 1) / w1;
  std::vector<Elem> as = alphas ? *alphas : detail::first_nonzero(F, static_cast<std::uint64_t>(d1));
  require(static_cast<long long>(as.size()) == d1, Errc::BadAlphas,
          "need exactly " + std::to_string(d1) + " alphas, got " + std::to_string(as.size()));
  for (std::size_t i = 0; i < as.size(); ++i) {
    require(as[i].value != 0 && as[i].value < q, Errc::BadAlphas, "alphas must be nonzero field elements");
    for (std::size_t j = 0; j < i; ++j) require(!(as[i] == as[j]), Errc::BadAlphas, "alphas must be distinct");
  }
  e[0] = static_cast<int>(d - d1 * w1);
  WPoly f = detail::monomial_poly(F, w, e);
  for (Elem a : as) f = f * detail::binomial(F, w, 1, 1, 0, static_cast<int>(w1), a);
  const std::uint64_t claimed = static_cast<std::uint64_t>(d1 + 1) * ipow(q, m - 1) + p_j(q, m - 2);
  return detail::checked(std::move(f), claimed, "w0_one:product", pts);
}

inline ExtremalWitness extremal_w0_one(const Field& F, const Weights& w, long long d,
                                       std::optional<std::vector<Elem>> alphas = {}) {
  return extremal_w0_one(enumerate_points(F, w), d, std::move(alphas));
}

/// A form on P(w_0, w_1) with e_q zeros, built according to how d = lambda * lcm + rho
/// (after dividing out gcd(w_0, w_1)) relates to w_0 and w_1.
inline ExtremalWitness extremal_m1(const PointSet& pts, long long d) {
  const Field& F = pts.field();
  const Weights& w = pts.weights();
  require(w.m() == 1, Errc::InvalidArgument, "needs a weighted projective line");
  const std::uint64_t q = F.q();
  const BoundReport target = eq_exact_m1(q, w[0], w[1], d);
  const long long g = w.gcd();
  const long long dr = d / g;
  const int a0 = static_cast<int>(w[0] / g);  // w_0'
  const int a1 = static_cast<int>(w[1] / g);  // w_1'
  const long long L = std::lcm<long long>(a0, a1);
  const long long lambda = dr / L;
  const long long rho = dr % L;
  const Weights reduced{a0, a1};

  // Product of (x_1^{w_0'} - alpha x_0^{w_1'}) over alphas.
  const auto line_factors = [&](const std::vector<Elem>& as) {
    WPoly f = WPoly::from_monomial(F, w, Monomial::one(w));
    for (Elem a : as) f = f * detail::binomial(F, w, 1, a0, 0, a1, a);
    return f;
  };
  const auto lifted = [&](const Monomial& mono) { return Monomial(w, mono.exps()); };

  WPoly f(F, w, d);
  if (rho == 0) {
    const auto J = detail::first_elements_zero_last(F, std::min<std::uint64_t>(lambda, q));
    std::vector<int> e{static_cast<int>((lambda - static_cast<long long>(J.size())) * a1), 0};
    f = detail::monomial_poly(F, w, e) * line_factors(J);
  } else if (dr % a0 == 0 || dr % a1 == 0) {
    // rho is a multiple of the dividing weight; that variable's power vanishes at one
    // coordinate point and each factor (x_other^. - alpha x_div^.) adds one more zero.
    const bool w0_div = dr % a0 == 0;
    const std::size_t div = w0_div ? 0 : 1;
    const std::size_t other = 1 - div;
    const int e_div = w0_div ? a1 : a0;
    const int e_other = w0_div ? a0 : a1;
    const auto J = detail::first_elements_zero_last(F, std::min<std::uint64_t>(lambda, q));
    std::vector<int> e(2, 0);
    e[div] = static_cast<int>(rho / (w0_div ? a0 : a1) + (lambda - static_cast<long long>(J.size())) * e_div);
    f = detail::monomial_poly(F, w, e);
    for (Elem a : J) f = f * detail::binomial(F, w, other, e_other, div, e_div, a);
  } else {
    const bool rho_in = semigroup_contains(rho, reduced);
    const long long gdeg = rho_in ? rho : rho + L;
    const long long reps = rho_in ? lambda : lambda - 1;
    const Monomial gm = lifted(detail::smallest_mixed_monomial(reduced, gdeg));
    const auto J = detail::first_nonzero(F, std::min<std::uint64_t>(reps, q - 1));
    std::vector<int> e{0, static_cast<int>((reps - static_cast<long long>(J.size())) * a0)};
    f = WPoly::from_monomial(F, w, gm) * detail::monomial_poly(F, w, e) * line_factors(J);
  }
  return detail::checked(std::move(f), target.value, "m1:" + target.source, pts);
}

inline ExtremalWitness extremal_m1(const Field& F, long long w0, long long w1, long long d) {
  return extremal_m1(enumerate_points(F, Weights{static_cast<int>(w0), static_cast<int>(w1)}), d);
}

}  // namespace wprm
