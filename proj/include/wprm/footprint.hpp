#pragma once

// Footprint bounds. For a standard monomial mu of degree d, FB(mu) counts the standard
// monomials of a regularity degree d~ >> d that mu divides, and a polynomial f outside the
// ideal has at most p_m - FB(ini(f)) zeros.
//
// "d~ >> d" is made concrete as the first regularity degree >= d + (q-1) * s, where s is the
// larger of sum(w) and max_i w_i (w_{i+1} + ... + w_m). Standard monomials in Mon^(i) have
// b_j <= w_i (q-1) for j > i (B_{i,j} has leading term x_i x_j^{1 + w_i (q-1)}), so from that
// degree on the exponent of x_i can absorb any a_i. Every query is repeated at the next
// regularity degree and must agree, otherwise UnstableFootprint is raised.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "wprm/error.hpp"
#include "wprm/ideal.hpp"
#include "wprm/poly.hpp"
#include "wprm/space.hpp"

namespace wprm {

class FootprintContext {
 public:
  FootprintContext(PointSet pts, long long d)
      : pts_(std::move(pts)),
        d_(d),
        at_(find_regularity(pts_, d + (static_cast<long long>(pts_.field().q()) - 1) * slack(pts_.weights()))),
        next_(find_regularity(pts_, at_.d + 1)) {
    require(d >= 0, Errc::InvalidArgument, "footprint degree must be nonnegative");
  }

  [[nodiscard]] long long d() const noexcept { return d_; }
  [[nodiscard]] long long d_tilde() const noexcept { return at_.d; }
  [[nodiscard]] long long d_tilde_next() const noexcept { return next_.d; }
  [[nodiscard]] const StandardBasis& basis_at_d_tilde() const noexcept { return at_; }
  [[nodiscard]] const PointSet& points() const noexcept { return pts_; }
  [[nodiscard]] std::uint64_t p_m() const noexcept { return pts_.size(); }

  /// Number of standard monomials of degree d~ divisible by mono.
  [[nodiscard]] std::uint64_t fb(const Monomial& mono) const {
    check_degree(mono);
    const auto a = count_divisible(mono, at_.monomials);
    const auto b = count_divisible(mono, next_.monomials);
    require(a == b, Errc::UnstableFootprint, stability_message(mono, a, b));
    return a;
  }

  /// The part of fb coming from Mon^(i)_{d~}.
  [[nodiscard]] std::uint64_t fb_i(const Monomial& mono, std::size_t i) const {
    check_degree(mono);
    require(i < pts_.weights().size(), Errc::InvalidArgument, "slice index out of range");
    const auto a = count_divisible(mono, at_.partition[i]);
    const auto b = count_divisible(mono, next_.partition[i]);
    require(a == b, Errc::UnstableFootprint, stability_message(mono, a, b));
    return a;
  }

 private:
  static long long slack(const Weights& w) {
    long long s = w.sum();
    long long tail = 0;
    for (std::size_t i = w.size(); i-- > 0;) {
      s = std::max(s, static_cast<long long>(w[i]) * tail);
      tail += w[i];
    }
    return s;
  }

  void check_degree(const Monomial& mono) const {
    require(mono.size() == pts_.weights().size(), Errc::InvalidArgument, "monomial has the wrong number of variables");
    require(mono.wdeg() <= d_, Errc::InvalidArgument,
            "monomial degree " + std::to_string(mono.wdeg()) + " exceeds the context degree " + std::to_string(d_));
  }

  static std::uint64_t count_divisible(const Monomial& mono, const std::vector<Monomial>& set) {
    std::uint64_t n = 0;
    for (const auto& b : set)
      if (mono.divides(b)) ++n;
    return n;
  }

  [[nodiscard]] std::string stability_message(const Monomial& mono, std::uint64_t a, std::uint64_t b) const {
    return "footprint of " + format_monomial(mono) + " is " + std::to_string(a) + " at degree " +
           std::to_string(at_.d) + " but " + std::to_string(b) + " at degree " + std::to_string(next_.d);
  }

  PointSet pts_;
  long long d_;
  StandardBasis at_;
  StandardBasis next_;
};

struct FootprintMinimum {
  std::uint64_t value;
  Monomial witness;
};

/// Closed-form minimum of FB over Mon^(0)_d for w_0 = 1 and 1 <= d <= w_1 q:
/// q^{m-1} (q - floor((d-1)/w_1)), attained at x_0^{a*} x_1^{floor((d-1)/w_1)}.
inline FootprintMinimum fb_min_over_first_slice(const Weights& w, std::uint64_t q, long long d) {
  require(w.m() >= 1, Errc::HypothesisViolated, "needs at least two variables");
  require(w[0] == 1, Errc::HypothesisViolated, "needs w_0 = 1, got " + std::to_string(w[0]));
  require(w[1] == w.min_tail(), Errc::HypothesisViolated, "needs w_1 = min(w_1..w_m)");
  const long long w1 = w[1];
  require(d >= 1 && d <= w1 * static_cast<long long>(q), Errc::HypothesisViolated,
          "needs 1 <= d <= w_1 q, got d = " + std::to_string(d));
  const long long d1 = (d - 1) / w1;
  std::vector<int> e(w.size(), 0);
  e[0] = static_cast<int>(d - d1 * w1);
  e[1] = static_cast<int>(d1);
  const std::uint64_t value = ipow(q, w.m() - 1) * (q - static_cast<std::uint64_t>(d1));
  return {value, Monomial(w, std::move(e))};
}

/// p_m - FB(ini(f)), where f is first replaced by its normal form so that its initial term is
/// standard. `basis` must be the standard basis in degree wdeg(f).
inline std::uint64_t zero_count_upper_bound(const WPoly& f, const StandardBasis& basis, const FootprintContext& ctx) {
  const WPoly nf = basis.normal_form(f, ctx.points());
  require(!nf.is_zero(), Errc::PolynomialInIdeal, "polynomial vanishes on every point");
  return ctx.p_m() - ctx.fb(nf.leading_monomial());
}

inline std::uint64_t zero_count_upper_bound(const WPoly& f, const FootprintContext& ctx) {
  return zero_count_upper_bound(f, standard_monomials(f.wdeg(), ctx.points()), ctx);
}

}  // namespace wprm
