#include <gtest/gtest.h>

#include "degbern/errors.hpp"
#include "degbern/lambda_poly.hpp"
#include "degbern/rational.hpp"
#include "degbern/scalar.hpp"

using namespace degbern;

TEST(Rational, ParsesAndCanonicalizes) {
  EXPECT_EQ(Rational::parse("6/4").to_string(), "3/2");
  EXPECT_EQ(Rational::parse("-10/5").to_string(), "-2");
  EXPECT_EQ(Rational::parse("0/7").to_string(), "0");
  EXPECT_EQ(Rational::parse("12345678901234567890123").to_string(), "12345678901234567890123");
  EXPECT_EQ(Rational(3, -6).to_string(), "-1/2");
}

TEST(Rational, RejectsMalformed) {
  for (const char* bad : {"", "1/", "/2", "1.5", "abc", "1/0", "--1", "1/-2", " 1"}) {
    EXPECT_THROW(Rational::parse(bad), ParseError) << bad;
  }
  EXPECT_THROW(Rational(1, 0), DomainError);
  EXPECT_THROW(Rational().inverse(), DomainError);
  EXPECT_THROW(Rational(1) / Rational(0), DomainError);
}

TEST(Rational, Arithmetic) {
  const Rational a(1, 2), b(-1, 3);
  EXPECT_EQ(a + b, Rational(1, 6));
  EXPECT_EQ(a - b, Rational(5, 6));
  EXPECT_EQ(a * b, Rational(-1, 6));
  EXPECT_EQ(a / b, Rational(-3, 2));
  EXPECT_EQ(b.pow(3), Rational(-1, 27));
  EXPECT_EQ(Rational(7).pow(0), Rational(1));
  EXPECT_TRUE(b < a);
  EXPECT_EQ(factorial(20).to_string(), "2432902008176640000");
  EXPECT_EQ(factorial(0), Rational(1));
}

TEST(Rational, FieldLawsOnSample) {
  std::vector<Rational> xs{Rational(0), Rational(1), Rational(-3, 7), Rational(22, 9), Rational(-5)};
  for (const auto& x : xs) {
    for (const auto& y : xs) {
      EXPECT_EQ(x + y, y + x);
      EXPECT_EQ(x * y, y * x);
      for (const auto& z : xs) EXPECT_EQ(x * (y + z), x * y + x * z);
      if (!y.is_zero()) EXPECT_EQ((x / y) * y, x);
    }
  }
}

TEST(LambdaPoly, TrimAndRender) {
  EXPECT_TRUE(LambdaPoly({0, 0}).is_zero());
  EXPECT_EQ(LambdaPoly({0, 0}).degree(), -1);
  EXPECT_EQ(LambdaPoly({1, 0, 0}).degree(), 0);
  EXPECT_EQ(LambdaPoly({Rational(-1, 6), 0, Rational(1, 6)}).to_string(), "-1/6+1/6*lambda^2");
  EXPECT_EQ(LambdaPoly({0, 1}).to_string(), "lambda");
  EXPECT_EQ(LambdaPoly({0, -1}).to_string(), "-lambda");
  EXPECT_EQ(LambdaPoly().to_string(), "0");
}

TEST(LambdaPoly, RingOps) {
  const LambdaPoly p{1, 1};   // 1 + lambda
  const LambdaPoly q{-1, 1};  // -1 + lambda
  EXPECT_EQ(p * q, LambdaPoly({-1, 0, 1}));
  EXPECT_EQ(p + q, LambdaPoly({0, 2}));
  EXPECT_EQ(p - p, LambdaPoly());
  EXPECT_EQ(p * Rational(1, 2), LambdaPoly({Rational(1, 2), Rational(1, 2)}));
  EXPECT_EQ(poly_eval(p * q, Rational(3)), Rational(8));
}

TEST(LambdaPoly, DivisionByLambdaPowerIsVerified) {
  const LambdaPoly p{0, 0, 3, 1};
  EXPECT_EQ(p.divided_by_lambda_power(2), LambdaPoly({3, 1}));
  EXPECT_EQ(p.divided_by_lambda_power(2).times_lambda_power(2), p);
  EXPECT_THROW((void)LambdaPoly({1, 1}).divided_by_lambda_power(1), InternalError);
}

TEST(Scalar, DomainsDoNotMix) {
  const Scalar r(Rational(2));
  const Scalar p(LambdaPoly{1, 1});
  EXPECT_THROW((void)(r + p), DomainError);
  EXPECT_THROW((void)(r * p), DomainError);
  EXPECT_THROW((void)(r == p), DomainError);
  EXPECT_THROW((void)r.poly(), DomainError);
  EXPECT_THROW((void)p.rational(), DomainError);
}

TEST(Scalar, InverseOnlyForUnits) {
  EXPECT_EQ(Scalar(Rational(4)).inverse(), Scalar(Rational(1, 4)));
  EXPECT_EQ(Scalar(LambdaPoly{Rational(-2)}).inverse(), Scalar(LambdaPoly{Rational(-1, 2)}));
  EXPECT_THROW((void)Scalar(LambdaPoly{1, 1}).inverse(), DomainError);
  EXPECT_THROW((void)Scalar(Rational(0)).inverse(), DomainError);
}

TEST(Domain, ParseAndBuild) {
  EXPECT_TRUE(Domain::parse("sym").is_symbolic());
  EXPECT_TRUE(Domain::parse("symbolic").is_symbolic());
  EXPECT_EQ(Domain::parse("-1/3").descriptor(), "-1/3");
  EXPECT_EQ(Domain::parse("2/4").descriptor(), "1/2");
  EXPECT_TRUE(Domain::parse("0").lambda_is_zero());
  EXPECT_THROW(Domain::parse("lambda"), ParseError);

  const Domain sym = Domain::symbolic();
  EXPECT_EQ(sym.lambda_power(3), Scalar(LambdaPoly::monomial(Rational(1), 3)));
  const Domain half = Domain::evaluated(Rational(1, 2));
  EXPECT_EQ(half.lambda_power(3), Scalar(Rational(1, 8)));
  EXPECT_EQ(half.from_poly(LambdaPoly{1, 2}), Scalar(Rational(2)));
  EXPECT_THROW(half.check(Scalar(LambdaPoly{1})), DomainError);
  EXPECT_THROW(Domain::evaluated(Rational(0)).require_nonzero_lambda("x"), DomainError);
}

TEST(Domain, DivideByLambdaPower) {
  const Domain sym = Domain::symbolic();
  EXPECT_EQ(sym.divide_by_lambda_power(Scalar(LambdaPoly{0, 0, 5}), 2), Scalar(LambdaPoly{5}));
  EXPECT_THROW((void)sym.divide_by_lambda_power(Scalar(LambdaPoly{1, 5}), 1), InternalError);
  const Domain two = Domain::evaluated(Rational(2));
  EXPECT_EQ(two.divide_by_lambda_power(Scalar(Rational(12)), 2), Scalar(Rational(3)));
  EXPECT_THROW((void)Domain::evaluated(Rational(0)).divide_by_lambda_power(Scalar(Rational(0)), 1), DomainError);
}
