#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "wprm/footprint.hpp"

using namespace wprm;

namespace {

TEST(Footprint, WorkedValues) {
  const Weights w{1, 2, 3};
  const FootprintContext ctx(enumerate_points(Field(5), w), 4);
  EXPECT_EQ(ctx.fb(Monomial(w, {2, 1, 0})), 20u);
  EXPECT_EQ(ctx.fb(Monomial::one(w)), 31u);
  EXPECT_EQ(ctx.fb_i(Monomial::one(w), 2), 1u);
  EXPECT_GE(ctx.d_tilde(), 4 + 4 * 6);
  EXPECT_GT(ctx.d_tilde_next(), ctx.d_tilde());

  const Weights p2{1, 1, 1};
  const FootprintContext c2(enumerate_points(Field(3), p2), 2);
  // q^{m-2}((q-d)(q+1)+1) with q = 3, m = 2, d = 2.
  EXPECT_EQ(c2.fb(Monomial(p2, {0, 0, 2})), 5u);
}

TEST(Footprint, SlicesVanishBeyondTheLeadAndSumToFb) {
  for (const auto& [q, wv] : std::vector<std::pair<std::uint32_t, std::vector<int>>>{
           {3, {1, 1, 2}}, {5, {1, 2, 3}}, {4, {2, 3}}, {3, {2, 3, 5}}}) {
    const PointSet pts = enumerate_points(Field(q), Weights(wv));
    for (long long d = 1; d <= 8; ++d) {
      if (!semigroup_contains(d, pts.weights())) continue;
      const FootprintContext ctx(pts, d);
      for (const auto& m : standard_monomials(d, pts).monomials) {
        std::uint64_t sum = 0;
        for (std::size_t i = 0; i < m.size(); ++i) {
          const auto v = ctx.fb_i(m, i);
          if (i > m.first_support()) { EXPECT_EQ(v, 0u); }
          sum += v;
        }
        EXPECT_EQ(sum, ctx.fb(m));
      }
    }
  }
}

TEST(Footprint, ProductFormulaOnWeightOneSlices) {
  for (std::uint32_t q : {2u, 3u, 5u}) {
    for (const auto& wv : std::vector<std::vector<int>>{{1, 1, 2}, {1, 2}, {1, 1, 1}, {1, 2, 3}}) {
      const Weights w(wv);
      const PointSet pts = enumerate_points(Field(q), w);
      for (long long d = 1; d <= static_cast<long long>(w[1]) * q; ++d) {
        const FootprintContext ctx(pts, d);
        for (const auto& m : standard_monomials(d, pts).monomials) {
          const std::size_t j0 = m.first_support();
          for (std::size_t i = 0; i <= j0; ++i) {
            bool ones = true;
            for (std::size_t t = 0; t <= i; ++t) ones = ones && w[t] == 1;
            if (!ones) continue;
            std::uint64_t prod = 1;
            for (std::size_t j = i + 1; j < m.size(); ++j) prod *= q - static_cast<std::uint64_t>(m[j]);
            EXPECT_EQ(ctx.fb_i(m, i), prod) << format_monomial(m) << " i=" << i;
          }
        }
      }
    }
  }
}

TEST(Footprint, FirstSliceMinimum) {
  const Weights w{1, 2, 3};
  auto r = fb_min_over_first_slice(w, 5, 4);
  EXPECT_EQ(r.value, 20u);
  EXPECT_EQ(r.witness, Monomial(w, {2, 1, 0}));
  r = fb_min_over_first_slice(w, 5, 5);
  EXPECT_EQ(r.value, 15u);
  EXPECT_EQ(r.witness, Monomial(w, {1, 2, 0}));
  r = fb_min_over_first_slice(w, 5, 1);
  EXPECT_EQ(r.value, 25u);
  EXPECT_EQ(r.witness, Monomial(w, {1, 0, 0}));
  EXPECT_THROW((void)fb_min_over_first_slice(w, 5, 11), Error);
  EXPECT_THROW((void)fb_min_over_first_slice(Weights{2, 3}, 5, 4), Error);
}

TEST(Footprint, FirstSliceMinimumMatchesDirectMinimum) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    for (const auto& wv : std::vector<std::vector<int>>{{1, 2}, {1, 2, 3}, {1, 1, 2}, {1, 3, 3}}) {
      const Weights w(wv);
      const PointSet pts = enumerate_points(Field(q), w);
      for (long long d = 1; d <= static_cast<long long>(w[1]) * q; ++d) {
        const FootprintContext ctx(pts, d);
        const auto sb = standard_monomials(d, pts);
        std::uint64_t best = UINT64_MAX;
        for (const auto& m : sb.partition[0]) best = std::min(best, ctx.fb(m));
        EXPECT_EQ(best, fb_min_over_first_slice(w, q, d).value) << "q=" << q << " w=" << w.to_string() << " d=" << d;
      }
    }
  }
}

TEST(Footprint, ZeroCountBoundHolds) {
  const Weights w{1, 2, 3};
  const PointSet pts = enumerate_points(Field(5), w);
  const FootprintContext ctx(pts, 4);
  const Field& F = pts.field();
  const WPoly f = parse_poly("x0^2*x1 - x0^4", F, w);
  EXPECT_EQ(zero_count_upper_bound(f, ctx), 11u);
  const FootprintContext c1(pts, 1);
  EXPECT_EQ(zero_count_upper_bound(parse_poly("x0", F, w), c1), p_j(5, 1));
  const WPoly zero_on_points = binomial_Bij(0, 1, F, w);
  const FootprintContext cb(pts, zero_on_points.wdeg());
  try {
    (void)zero_count_upper_bound(zero_on_points, cb);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::PolynomialInIdeal);
  }
}

TEST(Footprint, BoundHoldsForStandardMonomialsAndRandomForms) {
  const Weights w{1, 1, 2};
  const PointSet pts = enumerate_points(Field(3), w);
  std::mt19937_64 rng(17);
  for (long long d = 1; d <= 6; ++d) {
    const FootprintContext ctx(pts, d);
    const auto sb = standard_monomials(d, pts);
    for (const auto& m : sb.monomials)
      EXPECT_LE(count_zeros(WPoly::from_monomial(pts.field(), w, m), pts), pts.size() - ctx.fb(m));
    for (int t = 0; t < 100; ++t) {
      const WPoly f = oracle::random_form(pts.field(), w, d, rng);
      if (sb.normal_form(f, pts).is_zero()) continue;
      EXPECT_LE(count_zeros(f, pts), zero_count_upper_bound(f, sb, ctx));
    }
  }
}

// With d~ only d + (q-1) sum(w) = 23, the first regular degree 24 still has x0^3*x1^6 in
// Mon^(0) and gives 3; the slices at every larger regular degree give 4.
TEST(Footprint, WeightedThresholdIsStable) {
  const Weights w{2, 3};
  const FootprintContext ctx(enumerate_points(Field(4), w), 8);
  EXPECT_EQ(ctx.d_tilde(), 30);
  EXPECT_EQ(ctx.fb(Monomial(w, {4, 0})), 4u);
}

// Moving the last variable's degree onto x_0 and x_1 never raises the footprint.
TEST(Footprint, TrailingVariableSubstitutionLowersFb) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    for (const auto& wv : std::vector<std::vector<int>>{{1, 1, 2}, {1, 2, 3}, {1, 2, 4}, {1, 1, 3}, {1, 2, 2, 3}}) {
      const Weights w(wv);
      if (w.m() == 3 && q > 3) continue;
      const PointSet pts = enumerate_points(Field(q), w);
      const long long w1 = w[1];
      const long long dmax = w1 * q;
      const FootprintContext ctx(pts, dmax);
      for (long long d = 1; d <= dmax; ++d) {
        for (const auto& mu : standard_monomials(d, pts).monomials) {
          if (mu[0] != 0) continue;
          std::size_t s = mu.size();
          while (s > 0 && mu[s - 1] == 0) --s;
          if (s == 0) continue;
          --s;
          if (w[s] <= w1) continue;
          const long long total = static_cast<long long>(mu[s]) * w[s];
          const long long alpha0 = (total - 1) % w1 + 1;
          const long long alpha1 = (total - alpha0) / w1;
          std::vector<int> e = mu.exps();
          e[0] = static_cast<int>(alpha0);
          e[1] += static_cast<int>(alpha1);
          e[s] = 0;
          const Monomial sub(w, e);
          EXPECT_GE(ctx.fb(mu), ctx.fb(sub)) << "q=" << q << " w=" << w.to_string() << " " << format_monomial(mu);
        }
      }
    }
  }
}

TEST(Footprint, DegreeAboveContextRejected) {
  const Weights w{1, 2};
  const FootprintContext ctx(enumerate_points(Field(3), w), 2);
  EXPECT_THROW((void)ctx.fb(Monomial(w, {3, 0})), Error);
}

}  // namespace
