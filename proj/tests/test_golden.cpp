#include <gtest/gtest.h>

#include <random>

#include "oracle.hpp"
#include "penta/golden.hpp"
#include "penta/rational.hpp"

using namespace penta;
using std::strong_ordering;

TEST(SignSqrt5, CaseAnalysis) {
  EXPECT_EQ(sign_sqrt5<std::int64_t>(0, 0), 0);
  EXPECT_EQ(sign_sqrt5<std::int64_t>(3, 0), 1);
  EXPECT_EQ(sign_sqrt5<std::int64_t>(0, -1), -1);
  EXPECT_EQ(sign_sqrt5<std::int64_t>(-2, 1), 1);   // 4 < 5
  EXPECT_EQ(sign_sqrt5<std::int64_t>(-3, 1), -1);  // 9 > 5
  EXPECT_EQ(sign_sqrt5<std::int64_t>(9, -4), 1);   // 81 > 80
  EXPECT_EQ(sign_sqrt5<std::int64_t>(161, -72), 1);
  EXPECT_EQ(sign_sqrt5<std::int64_t>(-161, 72), -1);
}

TEST(GoldenCmp, Examples) {
  // 2 - phi: A = 2*2 - 1 - 2 = 1, B = -1, and 1 < 5 so the sqrt term wins.
  EXPECT_EQ(golden_cmp(GoldenInt{2, -1}, Rational(1)), strong_ordering::less);
  EXPECT_EQ(golden_cmp(GoldenInt{1, 0}, Rational(1)), strong_ordering::equal);
  EXPECT_EQ(golden_cmp(GoldenInt{1, 1}, Rational(1)), strong_ordering::greater);
  EXPECT_EQ(golden_cmp(GoldenInt{0, 1}, Rational(8, 5)), strong_ordering::greater);
  EXPECT_EQ(golden_cmp(GoldenInt{0, 1}, Rational(13, 8)), strong_ordering::less);
}

TEST(GoldenInt, ArithmeticIdentities) {
  const GoldenInt phi = GoldenInt::phi();
  EXPECT_EQ(phi * phi, phi + GoldenInt(1, 0));
  EXPECT_EQ((phi - GoldenInt{1, 0}) * phi, (GoldenInt{1, 0}));
  EXPECT_EQ(phi.conjugate(), (GoldenInt{1, -1}));
  EXPECT_EQ((GoldenInt{3, -1}) * (GoldenInt{3, -1}).conjugate(), (GoldenInt{5, 0}));
  EXPECT_LT((GoldenInt{2, -1}), (GoldenInt{1, 0}));
  EXPECT_GT((GoldenInt{3, -1}), (GoldenInt{1, 0}));
}

TEST(GoldenCmp, AgreesWithHighPrecisionFloat) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::int64_t> big(-1'000'000'000, 1'000'000'000);
  std::uniform_int_distribution<std::int64_t> den(1, 1000);
  int checked = 0;
  for (int i = 0; i < 10000; ++i) {
    const std::int64_t p = big(rng), q = big(rng), d = den(rng);
    std::int64_t n = big(rng);
    // Half the samples sit next to the value so the comparison is delicate.
    if (i % 2 == 0) {
      const auto v = oracle::golden_value(p, q) * d;
      n = static_cast<std::int64_t>(boost::multiprecision::round(v)) + (i % 4 == 0 ? 0 : 1);
    }
    const Rational r(n, d);
    const auto diff = oracle::golden_value(p, q) - oracle::BigFloat(r.num()) / r.den();
    const int expected = diff > 0 ? 1 : (diff < 0 ? -1 : 0);
    EXPECT_EQ(golden_cmp(GoldenInt{p, q}, r) <=> 0, expected <=> 0) << p << ' ' << q << ' ' << r.str();
    ++checked;
  }
  EXPECT_EQ(checked, 10000);
}

TEST(GoldenInt, OrderingAgreesWithHighPrecisionFloat) {
  std::mt19937_64 rng(6);
  std::uniform_int_distribution<std::int64_t> big(-1'000'000'000, 1'000'000'000);
  for (int i = 0; i < 5000; ++i) {
    const GoldenInt x{big(rng), big(rng)};
    const int expected = oracle::golden_value(x.p, x.q) > 0 ? 1 : -1;
    EXPECT_EQ(x.sign(), expected);
  }
  // Fibonacci ratios approach phi from both sides and stress cancellation.
  std::int64_t a = 1, b = 1;
  for (int i = 0; i < 80; ++i) {
    const GoldenInt x{a, -b};  // a - b*phi
    const int expected = oracle::golden_value(a, -b) > 0 ? 1 : -1;
    EXPECT_EQ(x.sign(), expected) << a << ' ' << b;
    const std::int64_t c = a + b;
    a = b;
    b = c;
  }
}

TEST(Rational, ParseAndArithmetic) {
  EXPECT_EQ(Rational::parse("25"), Rational(25));
  EXPECT_EQ(Rational::parse("2/8"), Rational(1, 4));
  EXPECT_EQ(Rational::parse("2.5"), Rational(5, 2));
  EXPECT_EQ(Rational::parse("-0.25"), Rational(-1, 4));
  EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
  EXPECT_EQ(Rational(5, 2) * Rational(5, 2), Rational(25, 4));
  EXPECT_EQ(Rational(7, 2).floor(), 3);
  EXPECT_EQ(Rational(-7, 2).floor(), -4);
  EXPECT_EQ(Rational(6, 3).str(), "2");
  EXPECT_EQ(Rational(1, 4).str(), "1/4");
  EXPECT_THROW(Rational::parse("abc"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1."), std::invalid_argument);
}
