#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "wprm/space.hpp"

using namespace wprm;

namespace {

TEST(PointCount, PjValues) {
  EXPECT_EQ(p_j(5, -1), 0u);
  EXPECT_EQ(p_j(5, 0), 1u);
  EXPECT_EQ(p_j(5, 1), 6u);
  EXPECT_EQ(p_j(5, 2), 31u);
  EXPECT_EQ(p_j(11, 2), 133u);
  EXPECT_EQ(p_j(2, 3), 15u);
}

TEST(WeightsTest, Accessors) {
  const Weights w{2, 3, 5};
  EXPECT_EQ(w.m(), 2);
  EXPECT_EQ(w.lcm(), 30);
  EXPECT_EQ(w.gcd(), 1);
  EXPECT_EQ(w.sum(), 10);
  EXPECT_EQ(w.min_tail(), 3);
  EXPECT_EQ(w.to_string(), "(2,3,5)");
  EXPECT_EQ(Weights({2, 4, 6}).gcd(), 2);
  EXPECT_THROW(Weights({1, 0}), Error);
  EXPECT_THROW(Weights(std::vector<int>{}), Error);
}

TEST(WeightsTest, EllShape) {
  EXPECT_EQ(Weights({1, 2, 2, 3}).ell(), 2);
  EXPECT_EQ(Weights({1, 2, 3}).ell(), 1);
  EXPECT_FALSE(Weights({1, 2, 2}).ell().has_value());
  EXPECT_FALSE(Weights({2, 3, 5}).ell().has_value());
}

TEST(Points, CountsAgreeWithBruteForceClasses) {
  const std::vector<std::pair<std::uint32_t, std::vector<int>>> grid{
      {2, {1, 1}},    {3, {1, 2}},    {4, {2, 3}},    {5, {2, 3}},    {3, {2, 4}},    {4, {2, 2, 3}},
      {5, {1, 2, 3}}, {3, {2, 3, 6}}, {7, {3, 6}},    {4, {3, 3, 6}}, {9, {2, 4}},    {8, {1, 7}}};
  for (const auto& [q, wv] : grid) {
    const Field F(q);
    const Weights w(wv);
    EXPECT_EQ(oracle::class_count(F, w), p_j(q, w.m())) << "q=" << q << " w=" << w.to_string();
    EXPECT_EQ(enumerate_points(F, w).size(), p_j(q, w.m()));
  }
}

TEST(Points, RepresentativesAreDistinctClassesAndLexMinimal) {
  for (const auto& [q, wv] : std::vector<std::pair<std::uint32_t, std::vector<int>>>{
           {5, {2, 3, 5}}, {4, {2, 3}}, {3, {2, 2, 4}}, {7, {2, 3}}, {9, {1, 2, 4}}}) {
    const Field F(q);
    const Weights w(wv);
    const PointSet pts = enumerate_points(F, w);
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j)
        ASSERT_FALSE(oracle::equivalent(F, w, pts[i].coords, pts[j].coords));
    for (const auto& v : oracle::nonzero_vectors(F, w.size())) {
      const auto idx = pts.index_of(v);
      ASSERT_TRUE(idx.has_value());
      ASSERT_TRUE(oracle::equivalent(F, w, v, pts[*idx].coords));
      if (oracle::equivalent(F, w, v, pts[*idx].coords)) { ASSERT_FALSE(lex_less(F, v, pts[*idx].coords)); }
    }
    for (std::size_t i = 1; i < pts.size(); ++i) EXPECT_TRUE(lex_less(F, pts[i - 1].coords, pts[i].coords));
  }
}

TEST(Points, EquivalenceMatchesRootOfUnityOracle) {
  for (const auto& [q, wv] : std::vector<std::pair<std::uint32_t, std::vector<int>>>{
           {5, {2, 3}}, {4, {2, 4}}, {7, {3, 6}}, {8, {2, 3}}, {9, {3, 6}}, {5, {2, 2, 4}}}) {
    const Field F(q);
    const Weights w(wv);
    const auto vs = oracle::nonzero_vectors(F, w.size());
    for (std::size_t i = 0; i < vs.size(); i += 3)
      for (std::size_t j = 0; j < vs.size(); j += 2)
        ASSERT_EQ(points_equivalent(vs[i], vs[j], w, F), oracle::equivalent(F, w, vs[i], vs[j]))
            << "q=" << q << " w=" << w.to_string();
  }
}

TEST(Points, ZeroVectorIsRejected) {
  const Field F(5);
  const Weights w{1, 2};
  EXPECT_THROW((void)points_equivalent({Elem{0}, Elem{0}}, {Elem{1}, Elem{0}}, w, F), Error);
  EXPECT_THROW((void)canonicalize({Elem{0}, Elem{0}}, w, F), Error);
}

TEST(Points, StandardSpaceHasStandardRepresentatives) {
  // On P^1(F_5) the classes are (0:1) and (1:a).
  const Field F(5);
  const PointSet pts = enumerate_points(F, Weights{1, 1});
  ASSERT_EQ(pts.size(), 6u);
  EXPECT_EQ(pts[0].coords, (std::vector<Elem>{Elem{0}, Elem{1}}));
  std::set<std::uint32_t> seconds;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    EXPECT_EQ(pts[i].coords[0], Elem{1});
    seconds.insert(pts[i].coords[1].value);
  }
  EXPECT_EQ(seconds.size(), 5u);
}

TEST(Points, ScaledWeightsGiveTheSamePoints) {
  const Field F(5);
  const PointSet a = enumerate_points(F, Weights{1, 2, 3});
  const PointSet b = enumerate_points(F, Weights{2, 4, 6});
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i], b[i]);
}

}  // namespace
