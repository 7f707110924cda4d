#pragma once

// Weight reductions between weighted projective spaces over F_q:
//   gcd scaling   P(gamma w) = P(w), F_q[x]^{gamma w}_{gamma d} = F_q[x]^w_d;
//   Delorme map   P(w_0, w_1 gamma, ..., w_m gamma) -> P(w), (Q_0 : Q_1 : ...) -> (Q_0^gamma : Q_1 : ...)
//                 for gcd(w_0, gamma) = 1;
//   line map psi  P(w_0, w_1) -> P^1, (Q_0 : Q_1) -> (Q_0^{w_1} : Q_1^{w_0}) for gcd(w_0, w_1) = 1.

#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "wprm/error.hpp"
#include "wprm/field.hpp"
#include "wprm/poly.hpp"
#include "wprm/space.hpp"

namespace wprm {

enum class ReductionKind { gcd_scaling, delorme, line_psi };

struct ReductionMap {
  ReductionKind kind;
  long long gamma;
  Weights source_weights;
  Weights target_weights;
};

/// (w / gamma, d / gamma) for gamma = gcd(w). Points and polynomial data are unchanged.
inline std::pair<Weights, long long> gcd_identify(const Weights& w, long long d) {
  const long long g = w.gcd();
  require(d % g == 0, Errc::DegreeNotDivisible,
          "gcd " + std::to_string(g) + " of " + w.to_string() + " does not divide " + std::to_string(d));
  std::vector<int> r;
  for (int x : w.values()) r.push_back(static_cast<int>(x / g));
  return {Weights(std::move(r)), d / g};
}

inline ReductionMap gcd_scaling_map(const Weights& w) {
  std::vector<int> r;
  for (int x : w.values()) r.push_back(static_cast<int>(x / w.gcd()));
  return {ReductionKind::gcd_scaling, w.gcd(), w, Weights(std::move(r))};
}

/// The Delorme map with source weights `source` = (w_0, w_1 gamma, ..., w_m gamma).
inline ReductionMap delorme_map(const Weights& source, long long gamma) {
  require(gamma >= 1, Errc::InvalidArgument, "gamma must be positive");
  require(std::gcd<long long>(source[0], gamma) == 1, Errc::HypothesisViolated,
          "needs gcd(w_0, gamma) = 1, got w_0 = " + std::to_string(source[0]) + ", gamma = " + std::to_string(gamma));
  std::vector<int> t{source[0]};
  for (std::size_t i = 1; i < source.size(); ++i) {
    require(source[i] % gamma == 0, Errc::HypothesisViolated,
            "gamma = " + std::to_string(gamma) + " does not divide w_" + std::to_string(i) + " = " +
                std::to_string(source[i]));
    t.push_back(static_cast<int>(source[i] / gamma));
  }
  return {ReductionKind::delorme, gamma, source, Weights(std::move(t))};
}

/// Image of a point of P(source) in P(target), as the canonical representative.
inline ProjectivePoint delorme_point_map(const ProjectivePoint& P, const ReductionMap& map, const Field& F) {
  require(map.kind == ReductionKind::delorme, Errc::InvalidArgument, "not a Delorme map");
  require(P.coords.size() == map.source_weights.size(), Errc::InvalidArgument, "point has the wrong dimension");
  std::vector<Elem> x = P.coords;
  x[0] = F.pow(x[0], map.gamma);
  return ProjectivePoint{canonicalize(x, map.target_weights, F)};
}

inline ProjectivePoint delorme_point_map(const ProjectivePoint& P, long long gamma, const Weights& source,
                                         const Field& F) {
  return delorme_point_map(P, delorme_map(source, gamma), F);
}

/// Pullback of f in F_q[x]^w_d along the Delorme map: x_0 -> x_0^gamma, giving a form of
/// degree gamma d for the weights (w_0, w_1 gamma, ..., w_m gamma).
inline WPoly delorme_poly_pullback(const WPoly& f, long long gamma) {
  const Weights& w = f.weights();
  require(gamma >= 1, Errc::InvalidArgument, "gamma must be positive");
  require(std::gcd<long long>(w[0], gamma) == 1, Errc::HypothesisViolated,
          "needs gcd(w_0, gamma) = 1, got w_0 = " + std::to_string(w[0]) + ", gamma = " + std::to_string(gamma));
  std::vector<int> sw{w[0]};
  for (std::size_t i = 1; i < w.size(); ++i) sw.push_back(static_cast<int>(w[i] * gamma));
  const Weights source(std::move(sw));
  WPoly r(f.field(), source, f.wdeg() * gamma);
  for (const auto& [mono, c] : f.terms()) {
    std::vector<int> e = mono.exps();
    e[0] = static_cast<int>(e[0] * gamma);
    r.add_term(Monomial(source, std::move(e)), c);
  }
  return r;
}

/// psi(Q_0 : Q_1) = (Q_0^{w_1} : Q_1^{w_0}), canonical in P^1.
inline ProjectivePoint psi_line_map(const ProjectivePoint& P, const Weights& w, const Field& F) {
  require(w.m() == 1, Errc::HypothesisViolated, "psi is defined on weighted projective lines");
  require(std::gcd(w[0], w[1]) == 1, Errc::HypothesisViolated, "needs gcd(w_0, w_1) = 1, got " + w.to_string());
  require(P.coords.size() == 2, Errc::InvalidArgument, "point has the wrong dimension");
  std::vector<Elem> x{F.pow(P.coords[0], w[1]), F.pow(P.coords[1], w[0])};
  return ProjectivePoint{canonicalize(x, Weights{1, 1}, F)};
}

/// For w = (1, w_1, ..., w_1, ...) with w_1 = ... = w_l and f involving only x_0..x_l, the
/// form f~ on P^l with f~(x_0^{w_1}, x_1, ..., x_l) = f. Every exponent of x_0 must be a
/// multiple of w_1.
inline WPoly flatten_to_projective_space(const WPoly& f, int ell) {
  const Weights& w = f.weights();
  require(ell >= 1 && ell <= w.m(), Errc::InvalidArgument, "ell must lie in [1, m]");
  require(w[0] == 1, Errc::HypothesisViolated, "needs w_0 = 1, got " + w.to_string());
  const int w1 = w[1];
  for (int i = 2; i <= ell; ++i)
    require(w[static_cast<std::size_t>(i)] == w1, Errc::HypothesisViolated,
            "needs w_1 = ... = w_l, got " + w.to_string());
  require(f.wdeg() % w1 == 0, Errc::HypothesisViolated,
          "needs w_1 | d, got d = " + std::to_string(f.wdeg()) + ", w_1 = " + std::to_string(w1));
  const Weights flat(std::vector<int>(static_cast<std::size_t>(ell) + 1, 1));
  WPoly r(f.field(), flat, f.wdeg() / w1);
  for (const auto& [mono, c] : f.terms()) {
    for (std::size_t i = static_cast<std::size_t>(ell) + 1; i < mono.size(); ++i)
      require(mono[i] == 0, Errc::HypothesisViolated, "f involves x_" + std::to_string(i) + " beyond x_l");
    require(mono[0] % w1 == 0, Errc::HypothesisViolated,
            "exponent of x_0 in " + format_monomial(mono) + " is not a multiple of " + std::to_string(w1));
    std::vector<int> e(mono.exps().begin(), mono.exps().begin() + ell + 1);
    e[0] /= w1;
    r.add_term(Monomial(flat, std::move(e)), c);
  }
  return r;
}

}  // namespace wprm
