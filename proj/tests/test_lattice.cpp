#include <gtest/gtest.h>

#include <sstream>

#include "atfkit/lattice.hpp"
#include "generators.hpp"

using namespace atfkit;

TEST(Rational, FormatsInLowestTerms) {
  EXPECT_EQ(to_string(Rational(6, 4)), "3/2");
  EXPECT_EQ(to_string(Rational(-4, 2)), "-2");
  EXPECT_EQ(to_string(Rational(0)), "0");
}

TEST(Rational, ParsesSignsAndFractions) {
  EXPECT_EQ(parse_rational("2"), Rational(2));
  EXPECT_EQ(parse_rational("-1/2"), Rational(-1, 2));
  EXPECT_EQ(parse_rational("+3/9"), Rational(1, 3));
  EXPECT_EQ(parse_rational("\xE2\x88\x92" "1"), Rational(-1));  // U+2212 minus sign
  EXPECT_EQ(parse_rational("123456789012345678901234567890/3"),
            Rational(Integer("41152263004115226300411522630")));
}

TEST(Rational, RejectsMalformedText) {
  for (const char* bad : {"", "-", "1/", "/2", "1/0", "1.5", "a", "1/2/3", " 1", "--1"})
    EXPECT_THROW(parse_rational(bad), std::invalid_argument) << bad;
  EXPECT_THROW(parse_integer("1/2"), std::invalid_argument);
}

TEST(Rational, RoundTripsThroughText) {
  std::mt19937 rng(7);
  for (int k = 0; k < 200; ++k) {
    const Vec2Q v = gen::random_rational_vector(rng);
    EXPECT_EQ(parse_rational(to_string(v.x)), v.x);
  }
}

TEST(Primitive, ReducesByGcd) {
  EXPECT_EQ(primitive(Vec2Z{4, -6}), (Vec2Z{2, -3}));
  EXPECT_EQ(primitive(Vec2Q{Rational(-3, 2), Rational(0)}), (Vec2Z{-1, 0}));
  EXPECT_EQ(primitive(Vec2Q{Rational(1, 2), Rational(1, 3)}), (Vec2Z{3, 2}));
  EXPECT_TRUE(is_primitive(Vec2Z{5, 3}));
  EXPECT_FALSE(is_primitive(Vec2Z{4, 2}));
  EXPECT_THROW(primitive(Vec2Z{0, 0}), std::domain_error);
}

TEST(Shear, MatchesPointwiseDefinition) {
  // sigma_v(p) = p + (v x p) v, evaluated directly.
  std::mt19937 rng(11);
  for (const Vec2Z v : {Vec2Z{2, -1}, Vec2Z{-1, 2}, Vec2Z{1, 0}, Vec2Z{5, 2}, Vec2Z{-13, 5}}) {
    const Unimodular s = shear_by(v);
    EXPECT_EQ(s.determinant(), 1);
    EXPECT_EQ(apply(s, v), v);
    for (int k = 0; k < 20; ++k) {
      const Vec2Q p = gen::random_rational_vector(rng);
      const Vec2Q vq = to_rational(v);
      const Vec2Q expect = p + cross(vq, p) * vq;
      EXPECT_EQ(apply(s, p), expect);
    }
  }
}

TEST(Shear, RequiresPrimitiveDirection) {
  EXPECT_THROW(shear_by(Vec2Z{2, 4}), std::invalid_argument);
  EXPECT_THROW(shear_by(Vec2Z{0, 0}), std::invalid_argument);
}

TEST(Unimodular, ValidatesDeterminant) {
  EXPECT_THROW(Unimodular(2, 0, 0, 1), std::invalid_argument);
  EXPECT_THROW(Unimodular(0, 0, 0, 0), std::invalid_argument);
  EXPECT_EQ(Unimodular(0, 1, 1, 0).determinant(), -1);
  EXPECT_TRUE(is_unimodular(Mat2Z(2, 1, 1, 1)));
  EXPECT_FALSE(is_unimodular(Mat2Z(2, 1, 1, 2)));
}

TEST(Unimodular, GroupLawsOnRandomElements) {
  std::mt19937 rng(3);
  const Unimodular id(1, 0, 0, 1);
  for (int k = 0; k < 300; ++k) {
    const Unimodular a = gen::random_unimodular(rng);
    const Unimodular b = gen::random_unimodular(rng);
    EXPECT_EQ(a * a.inverse(), id);
    EXPECT_EQ((a * b).determinant(), a.determinant() * b.determinant());
    EXPECT_EQ(a.inverse_transpose().matrix(), a.inverse().matrix().transpose());
  }
}

TEST(Unimodular, ScalesCrossProductByDeterminant) {
  std::mt19937 rng(5);
  for (int k = 0; k < 300; ++k) {
    const Unimodular a = gen::random_unimodular(rng);
    const Vec2Q v = gen::random_rational_vector(rng);
    const Vec2Q w = gen::random_rational_vector(rng);
    EXPECT_EQ(cross(apply(a, v), apply(a, w)), Rational(a.determinant()) * cross(v, w));
  }
}

TEST(Unimodular, PreservesPrimitivity) {
  std::mt19937 rng(9);
  for (int k = 0; k < 300; ++k) {
    const Unimodular a = gen::random_unimodular(rng);
    const Vec2Z v = primitive(gen::random_rational_vector(rng) + Vec2Q{Rational(1, 7), Rational(0)});
    EXPECT_TRUE(is_primitive(apply(a, v)));
  }
}

TEST(ExactSqrt, PerfectSquaresOnly) {
  EXPECT_EQ(exact_sqrt(Integer(0)), Integer(0));
  EXPECT_EQ(exact_sqrt(Integer(169)), Integer(13));
  EXPECT_EQ(exact_sqrt(Integer("187489")), Integer(433));
  EXPECT_FALSE(exact_sqrt(Integer(2)).has_value());
  EXPECT_FALSE(exact_sqrt(Integer(-4)).has_value());
  const Integer big = Integer("1234567890123456789012345");
  EXPECT_EQ(exact_sqrt(big * big), big);
  EXPECT_FALSE(exact_sqrt(big * big + 1).has_value());
}

TEST(Printing, VectorsAndMatrices) {
  std::ostringstream os;
  os << Vec2Q{Rational(-1), Rational(1, 2)} << ' ' << Vec2Z{3, -4};
  EXPECT_EQ(os.str(), "(-1, 1/2) (3, -4)");
}
