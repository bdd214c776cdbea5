#include "test_support.hpp"

#include <gtest/gtest.h>

namespace sigcount {
namespace {

using testing::Gen;

TEST(Rational, ExactArithmetic) {
  EXPECT_EQ(Rational(1, 2) + Rational(1, 3), Rational(5, 6));
  EXPECT_EQ(Rational(3, 7) * Rational(7, 3), Rational(1));
  EXPECT_EQ(Rational(1, 2) - Rational(1, 2), Rational(0));
  EXPECT_EQ(Rational(2, 3) / Rational(4, 9), Rational(3, 2));
  EXPECT_EQ(-Rational(5, 3), Rational(-5, 3));
  EXPECT_EQ(Rational(-4, 5).inverse(), Rational(-5, 4));
}

TEST(Rational, CanonicalForm) {
  Rational r(2, 4);
  EXPECT_EQ(r.numerator(), 1);
  EXPECT_EQ(r.denominator(), 2);
  Rational neg(3, -6);
  EXPECT_EQ(neg.numerator(), -1);
  EXPECT_EQ(neg.denominator(), 2);
  EXPECT_EQ(Rational(0, 7).denominator(), 1);
}

TEST(Rational, DivisionByZeroThrows) {
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
  EXPECT_THROW(Rational(0).inverse(), std::domain_error);
  EXPECT_THROW(Rational(1, 0), std::domain_error);
  EXPECT_THROW(Rational::parse("3/0"), std::domain_error);
}

TEST(Rational, Sign) {
  EXPECT_EQ(sign(Rational(-5, 3)), -1);
  EXPECT_EQ(sign(Rational(0)), 0);
  EXPECT_EQ(sign(Rational(7, 2)), 1);
}

TEST(Rational, TextRoundTrip) {
  EXPECT_EQ(Rational::parse("6/8"), Rational(3, 4));
  EXPECT_EQ(Rational::parse("-12"), Rational(-12));
  EXPECT_EQ(Rational(3, 4).str(), "3/4");
  EXPECT_EQ(Rational(8, 4).str(), "2");
  EXPECT_EQ(Rational(-1, 3).str(), "-1/3");
  EXPECT_THROW(Rational::parse("1/2/3"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("x"), std::invalid_argument);
}

TEST(Rational, BigValuesStayExact) {
  Rational a = Rational(10).pow(40) + Rational(1);
  Rational b = a * a - Rational(10).pow(80) - Rational(2) * Rational(10).pow(40);
  EXPECT_EQ(b, Rational(1));
}

TEST(RationalProperty, CanonicalFormIsFixpoint) {
  Gen gen(11);
  for (int i = 0; i < 500; ++i) {
    long num = gen.integer(-1000, 1000), den = gen.integer(1, 1000);
    Rational once(num, den);
    Rational twice(once.numerator(), once.denominator());
    EXPECT_EQ(once, twice);
    EXPECT_EQ(once.numerator(), twice.numerator());
    EXPECT_EQ(once.denominator(), twice.denominator());
    EXPECT_EQ(gcd(once.numerator(), once.denominator()) == 1 || once.is_zero(), true);
  }
}

TEST(RationalProperty, OrderCompatibleWithFieldOps) {
  Gen gen(12);
  for (int i = 0; i < 1000; ++i) {
    Rational a = gen.rational(20, 9), b = gen.rational(20, 9), c = gen.rational(20, 9);
    if (a < b) {
      EXPECT_LT(a + c, b + c);
      if (c > Rational(0)) { EXPECT_LT(a * c, b * c); }
    }
  }
}

TEST(RationalProperty, InverseAndDivisionAgree) {
  Gen gen(13);
  for (int i = 0; i < 300; ++i) {
    Rational a = gen.rational(50, 20), b = gen.nonzero_rational(50, 20);
    EXPECT_EQ(a / b, a * b.inverse());
    EXPECT_EQ((a / b) * b, a);
  }
}

}  // namespace
}  // namespace sigcount
