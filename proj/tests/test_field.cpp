#include <gtest/gtest.h>

#include <set>

#include "wprm/field.hpp"

using wprm::Elem;
using wprm::Errc;
using wprm::Field;

namespace {

const std::vector<std::uint32_t> kOrders{2, 3, 4, 5, 7, 8, 9, 11, 16, 25, 27, 32};

template <class F>
Errc code_of(F&& f) {
  try {
    f();
  } catch (const wprm::Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no exception";
  return Errc::InvalidArgument;
}

TEST(Field, RejectsNonPrimePowers) {
  for (std::uint32_t q : {0u, 1u, 6u, 10u, 12u, 15u, 18u, 100u}) EXPECT_EQ(code_of([&] { Field F(q); }), Errc::NotAPrimePower) << q;
}

TEST(Field, CharacteristicAndDegree) {
  EXPECT_EQ(Field(8).characteristic(), 2u);
  EXPECT_EQ(Field(8).degree(), 3u);
  EXPECT_EQ(Field(9).characteristic(), 3u);
  EXPECT_EQ(Field(9).degree(), 2u);
  EXPECT_TRUE(Field(11).is_prime());
  EXPECT_FALSE(Field(4).is_prime());
}

TEST(Field, AxiomsHoldExhaustively) {
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 16u}) {
    const Field F(q);
    const auto els = F.elements();
    ASSERT_EQ(els.size(), q);
    for (Elem a : els) {
      EXPECT_EQ(F.add(a, F.neg(a)), Field::zero());
      EXPECT_EQ(F.mul(a, Field::one()), a);
      if (a.value != 0) { EXPECT_EQ(F.mul(a, F.inv(a)), Field::one()); }
      for (Elem b : els) {
        EXPECT_EQ(F.add(a, b), F.add(b, a));
        EXPECT_EQ(F.mul(a, b), F.mul(b, a));
        for (Elem c : els) {
          ASSERT_EQ(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)));
          ASSERT_EQ(F.mul(F.mul(a, b), c), F.mul(a, F.mul(b, c)));
          ASSERT_EQ(F.add(F.add(a, b), c), F.add(a, F.add(b, c)));
        }
      }
    }
  }
}

TEST(Field, EveryElementSatisfiesXqEqualsX) {
  for (std::uint32_t q : kOrders) {
    const Field F(q);
    for (Elem a : F.elements()) EXPECT_EQ(F.pow(a, q), a) << "q=" << q;
  }
}

TEST(Field, FrobeniusIsAdditive) {
  for (std::uint32_t q : {4u, 8u, 9u, 25u, 27u}) {
    const Field F(q);
    const long long p = F.characteristic();
    for (Elem a : F.elements())
      for (Elem b : F.elements()) ASSERT_EQ(F.pow(F.add(a, b), p), F.add(F.pow(a, p), F.pow(b, p)));
  }
}

TEST(Field, GeneratorIsPrimitive) {
  for (std::uint32_t q : kOrders) {
    const Field F(q);
    std::set<std::uint32_t> seen;
    Elem x = Field::one();
    for (std::uint32_t k = 0; k + 1 < q; ++k) {
      seen.insert(x.value);
      x = F.mul(x, F.generator());
    }
    EXPECT_EQ(seen.size(), q - 1) << "q=" << q;
    EXPECT_EQ(x, Field::one());
  }
}

TEST(Field, PrimeGeneratorIsSmallestPrimitiveRoot) {
  EXPECT_EQ(Field(5).generator().value, 2u);
  EXPECT_EQ(Field(7).generator().value, 3u);
  EXPECT_EQ(Field(11).generator().value, 2u);
}

TEST(Field, ModulusIsFirstPrimitivePolynomialInScanOrder) {
  // Worked by hand: t^2+1 and t^2+2 fail over F_3, t^2+t+1 = (t-1)^2, t^2+t+2 is primitive.
  EXPECT_EQ(Field(9).modulus(), (std::vector<std::uint32_t>{2, 1, 1}));
  // Over F_2, t^2+1 = (t+1)^2, so t^2+t+1.
  EXPECT_EQ(Field(4).modulus(), (std::vector<std::uint32_t>{1, 1, 1}));
  const Field F4(4);
  // t * t = t + 1 with t encoded as 2.
  EXPECT_EQ(F4.mul(Elem{2}, Elem{2}), Elem{3});
  EXPECT_EQ(F4.add(Elem{2}, Elem{3}), Elem{1});
}

TEST(Field, PrimeFieldMatchesIntegerArithmetic) {
  for (std::uint32_t q : {2u, 3u, 5u, 7u, 11u, 13u}) {
    const Field F(q);
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b) {
        ASSERT_EQ(F.add(Elem{a}, Elem{b}).value, (a + b) % q);
        ASSERT_EQ(F.mul(Elem{a}, Elem{b}).value, (a * b) % q);
      }
  }
}

TEST(Field, LogAndExpAreInverse) {
  for (std::uint32_t q : kOrders) {
    const Field F(q);
    for (Elem a : F.elements()) {
      if (a.value == 0) continue;
      EXPECT_EQ(F.exp(F.discrete_log(a)), a);
    }
    EXPECT_EQ(code_of([&] { (void)F.discrete_log(Field::zero()); }), Errc::LogOfZero);
  }
}

TEST(Field, OrderIndexIsABijection) {
  const Field F(9);
  EXPECT_EQ(F.order_index(Field::zero()), 0u);
  EXPECT_EQ(F.order_index(Field::one()), 1u);
  EXPECT_EQ(F.order_index(F.generator()), 2u);
  for (std::uint32_t i = 0; i < 9; ++i) EXPECT_EQ(F.order_index(F.element_at(i)), i);
}

TEST(Field, DivisionAndPowers) {
  const Field F(7);
  EXPECT_EQ(code_of([&] { (void)F.inv(Field::zero()); }), Errc::DivisionByZero);
  EXPECT_EQ(code_of([&] { (void)F.div(Field::one(), Field::zero()); }), Errc::DivisionByZero);
  EXPECT_EQ(code_of([&] { (void)F.pow(Field::zero(), -1); }), Errc::DivisionByZero);
  EXPECT_EQ(F.pow(Field::zero(), 0), Field::one());
  EXPECT_EQ(F.pow(Elem{3}, -1), F.inv(Elem{3}));
  EXPECT_EQ(F.div(Elem{6}, Elem{3}), Elem{2});
  EXPECT_EQ(F.from_int(-1), Elem{6});
  EXPECT_EQ(F.from_int(15), Elem{1});
  EXPECT_EQ(code_of([&] { (void)F.from_value(7); }), Errc::InvalidArgument);
}

TEST(Field, EqualityComparesStructure) {
  EXPECT_EQ(Field(9), Field(9));
  EXPECT_FALSE(Field(9) == Field(3));
}

}  // namespace
