#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "oracles.hpp"
#include "wprm/codes.hpp"

using namespace wprm;

namespace {

TEST(Code, Parameters) {
  const Field F(5);
  const PointSet pts = enumerate_points(F, Weights{2, 3, 5});
  const LinearCode c = wprm_code(pts, 6);
  EXPECT_EQ(c.n, 31u);
  EXPECT_EQ(c.k, 2u);
  EXPECT_TRUE(c.injective);
  EXPECT_EQ(c.basis_monomials, (std::vector<Monomial>{Monomial(pts.weights(), {3, 0, 0}), Monomial(pts.weights(), {0, 2, 0})}));
  EXPECT_EQ(min_distance_exact(c), 25u);
  EXPECT_THROW((void)wprm_code(pts, 1), Error);

  const LinearCode line = wprm_code(enumerate_points(Field(2), Weights{1, 1}), 1);
  EXPECT_EQ(line.n, 3u);
  EXPECT_EQ(line.k, 2u);
  EXPECT_EQ(min_distance_exact(line), 2u);
}

TEST(Code, DimensionIsTheHilbertFunction) {
  for (const auto& [q, wv] : std::vector<std::pair<std::uint32_t, std::vector<int>>>{
           {3, {1, 1, 2}}, {4, {2, 3, 5}}, {5, {1, 2}}, {2, {1, 2, 3}}}) {
    const PointSet pts = enumerate_points(Field(q), Weights(wv));
    for (long long d = 1; d <= 20; ++d) {
      if (!semigroup_contains(d, pts.weights())) continue;
      const LinearCode c = wprm_code(pts, d);
      EXPECT_EQ(c.k, hilbert_function(d, pts));
      EXPECT_EQ(c.k, oracle::rank(pts.field(), c.gen));
      EXPECT_EQ(c.injective, c.k == denumerant(d, pts.weights()));
    }
  }
}

TEST(Code, InjectiveBelowTheFirstIdealDegreeForSmallFields) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    const PointSet pts = enumerate_points(Field(q), Weights{2, 3, 5});
    for (long long d = 2; d <= 6 * static_cast<long long>(q) - 2; ++d) {
      if (!semigroup_contains(d, pts.weights())) continue;
      EXPECT_TRUE(wprm_code(pts, d).injective) << "q=" << q << " d=" << d;
    }
  }
}

TEST(Code, NotInjectiveAtFiveQPlusFiveForQSeven) {
  // x0*x1*x2^7 - x0^7*x1^7*x2 has degree 40 = 5q + 5 and vanishes on every point of P(2,3,5)(F_7).
  const Field F(7);
  const Weights w{2, 3, 5};
  const PointSet pts = enumerate_points(F, w);
  EXPECT_EQ(count_zeros(parse_poly("x0*x1*x2^7 - x0^7*x1^7*x2", F, w), pts), pts.size());
  EXPECT_FALSE(wprm_code(pts, 40).injective);
  EXPECT_TRUE(wprm_code(pts, 39).injective);
  EXPECT_EQ(eq_bruteforce(pts, 40), pts.size());
}

TEST(MinDistance, AgreesWithExhaustiveZeroCount) {
  for (const auto& [q, wv] : std::vector<std::pair<std::uint32_t, std::vector<int>>>{
           {2, {1, 1, 1}}, {3, {1, 2}}, {3, {2, 3, 5}}, {4, {1, 1, 2}}, {5, {2, 3}}}) {
    const Field F(q);
    const PointSet pts = enumerate_points(F, Weights(wv));
    for (long long d = 1; d <= 10; ++d) {
      if (!semigroup_contains(d, pts.weights())) continue;
      if (std::pow(static_cast<double>(q), static_cast<double>(denumerant(d, pts.weights()))) > 2e5) continue;
      const LinearCode c = wprm_code(pts, d);
      const auto brute = oracle::eq_exhaustive(F, pts, d);
      EXPECT_EQ(eq_bruteforce(pts, d), brute) << "q=" << q << " d=" << d;
      if (c.injective) { EXPECT_EQ(c.n - min_distance_exact(c), brute); }
      EXPECT_LE(min_distance_exact(c), c.n - c.k + 1);
    }
  }
}

TEST(MinDistance, TableValuesForTwoThreeFive) {
  const Field F(5);
  const PointSet pts = enumerate_points(F, Weights{2, 3, 5});
  EXPECT_EQ(min_distance_exact(wprm_code(pts, 7)), 20u);
  EXPECT_EQ(eq_bruteforce(pts, 10), 15u);
  EXPECT_EQ(eq_bruteforce(pts, 11), 16u);
  EXPECT_EQ(eq_bruteforce(enumerate_points(F, Weights{1, 2, 3}), 4), 11u);
}

TEST(MinDistance, SingleRowCode) {
  const PointSet pts = enumerate_points(Field(5), Weights{2, 3, 5});
  const LinearCode c = wprm_code(pts, 2);
  ASSERT_EQ(c.k, 1u);
  EXPECT_EQ(min_distance_exact(c), hamming_weight(c.gen[0]));
}

TEST(MinDistance, ThreadsGiveTheSameResult) {
  const PointSet pts = enumerate_points(Field(5), Weights{2, 3, 5});
  const LinearCode c = wprm_code(pts, 14);
  EXPECT_EQ(min_distance_exact(c, default_class_budget, 1), min_distance_exact(c, default_class_budget, 3));
}

TEST(MinDistance, BudgetExceeded) {
  const PointSet pts = enumerate_points(Field(5), Weights{2, 3, 5});
  const LinearCode c = wprm_code(pts, 14);
  try {
    (void)min_distance_exact(c, 10);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::BudgetExceeded);
    EXPECT_NE(std::string(e.what()).find(std::to_string(projective_class_count(5, c.k))), std::string::npos);
  }
  EXPECT_EQ(projective_class_count(5, 6), 3906u);
  EXPECT_EQ(projective_class_count(2, 70), UINT64_MAX);
}

TEST(RandomSearch, SoundDeterministicAndFindsTheExampleWeight) {
  const PointSet pts = enumerate_points(Field(5), Weights{2, 3, 5});
  const LinearCode c = wprm_code(pts, 10);
  const auto a = min_weight_random_search(c, 200, 7);
  const auto b = min_weight_random_search(c, 200, 7);
  EXPECT_EQ(a.weight, b.weight);
  EXPECT_EQ(a.codeword, b.codeword);
  EXPECT_GE(a.weight, min_distance_exact(c));
  EXPECT_EQ(hamming_weight(a.codeword), a.weight);
  EXPECT_LE(min_weight_random_search(c, 10000, 0).weight, 16u);
  for (long long d : {6, 9, 13}) {
    const LinearCode cd = wprm_code(pts, d);
    EXPECT_GE(min_weight_random_search(cd, 50, 1).weight, min_distance_exact(cd));
  }
}

TEST(RandomSearch, CodewordLiesInTheCode) {
  const PointSet pts = enumerate_points(Field(4), Weights{2, 3, 5});
  const LinearCode c = wprm_code(pts, 12);
  const auto r = min_weight_random_search(c, 20, 3);
  auto rows = c.gen;
  const auto base = oracle::rank(pts.field(), rows);
  rows.push_back(r.codeword);
  EXPECT_EQ(oracle::rank(pts.field(), rows), base);
}

TEST(Export, TextAndJson) {
  const PointSet pts = enumerate_points(Field(2), Weights{1, 1});
  const LinearCode c = wprm_code(pts, 1);
  // Points (0:1), (1:0), (1:1); rows x0 and x1.
  EXPECT_EQ(generator_to_text(c), "0 1 1\n1 0 1\n");
  const auto j = generator_to_json(c);
  EXPECT_EQ(j.dump(), R"({"q":2,"w":[1,1],"d":1,"n":3,"k":2,"rows":[[0,1,1],[1,0,1]]})");
}

TEST(Equivalence, RescaledRepresentativesGiveTheSameMinimumDistance) {
  const Field F(5);
  const Weights w{1, 2, 3};
  const PointSet pts = enumerate_points(F, w);
  std::vector<ProjectivePoint> moved;
  std::uint32_t k = 0;
  for (const auto& P : pts) {
    std::vector<Elem> y = P.coords;
    const Elem lambda = F.element_at(1 + (k++ % 4));
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = F.mul(y[i], F.pow(lambda, w[i]));
    moved.push_back({y});
  }
  std::reverse(moved.begin(), moved.end());
  const PointSet other(F, w, moved);
  for (long long d : {3, 5, 8}) EXPECT_EQ(min_distance_exact(wprm_code(pts, d)), min_distance_exact(wprm_code(other, d)));
}

}  // namespace
