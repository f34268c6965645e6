#include <gtest/gtest.h>

#include "degbern/errors.hpp"
#include "degbern/series.hpp"
#include "oracles.hpp"

using namespace degbern;

namespace {

TruncatedSeries rat_series(std::vector<Rational> c) {
  std::vector<Scalar> s(c.begin(), c.end());
  return {Domain::evaluated(Rational(0)), std::move(s)};
}

}  // namespace

TEST(Series, MulTruncatesAtShorterOrder) {
  const auto a = rat_series({1, 1, 1});
  const auto b = rat_series({1, -1});
  const auto p = a * b;
  EXPECT_EQ(p.order(), 2u);
  EXPECT_EQ(p[0], Scalar(Rational(1)));
  EXPECT_EQ(p[1], Scalar(Rational(0)));
  EXPECT_THROW((void)p[2], PreconditionError);
}

TEST(Series, ReciprocalOfGeometric) {
  const auto inv = series_reciprocal(rat_series({1, -1, 0, 0, 0}));
  for (std::size_t n = 0; n < 5; ++n) EXPECT_EQ(inv[n], Scalar(Rational(1)));
  EXPECT_THROW(series_reciprocal(rat_series({0, 1})), DomainError);
}

TEST(Series, ReciprocalMatchesRawInversion) {
  const int n_max = 15;
  const auto lib = series_reciprocal(classical_log_quotient_series(n_max + 1));
  const auto ref = oracle::classical_b(n_max);
  for (int n = 0; n <= n_max; ++n) {
    EXPECT_EQ(lib[static_cast<std::size_t>(n)].rational() * factorial(n), Rational(ref[n])) << n;
  }
}

TEST(Series, PowAndDerivative) {
  const auto s = rat_series({1, 1, 0, 0, 0, 0});
  const auto cube = series_pow(s, 3);
  EXPECT_EQ(cube, rat_series({1, 3, 3, 1, 0, 0}));
  EXPECT_EQ(series_pow(s, 0), TruncatedSeries::one(s.domain(), 6));
  EXPECT_EQ(series_derivative(cube), rat_series({3, 6, 3, 0, 0}));
  EXPECT_THROW(series_derivative(rat_series({})), PreconditionError);
}

TEST(Series, SymbolicGeneratingFunctions) {
  const Domain sym = Domain::symbolic();
  // (1+t)^lambda: lambda, lambda(lambda-1)/2
  const auto binom = binom_lambda_series(sym, 3);
  EXPECT_EQ(binom[1], Scalar(LambdaPoly{0, 1}));
  EXPECT_EQ(binom[2], Scalar(LambdaPoly{0, Rational(-1, 2), Rational(1, 2)}));
  // e_lambda(t) coefficient of t^2 is (1-lambda)/2
  const auto e = degenerate_exp_series(sym, 3);
  EXPECT_EQ(e[2], Scalar(LambdaPoly{Rational(1, 2), Rational(-1, 2)}));
  // at lambda = 1, e_1(t) = 1 + t
  const auto e1 = degenerate_exp_series(Domain::evaluated(Rational(1)), 4);
  EXPECT_EQ(e1[0], Scalar(Rational(1)));
  EXPECT_EQ(e1[1], Scalar(Rational(1)));
  EXPECT_EQ(e1[2], Scalar(Rational(0)));
  EXPECT_EQ(e1[3], Scalar(Rational(0)));
  EXPECT_THROW(degenerate_log_quotient_series(Domain::evaluated(Rational(0)), 3), DomainError);
}

TEST(Laurent, CanonicalPoleAndCoefficients) {
  const LaurentSeries L(2, rat_series({0, 5, 7, 0}));
  EXPECT_EQ(L.pole(), 1u);
  EXPECT_EQ(L.min_exponent(), -1);
  EXPECT_EQ(L.coefficient(-1), Scalar(Rational(5)));
  EXPECT_EQ(L.coefficient(-5), Scalar(Rational(0)));
  EXPECT_EQ(L.precision_end(), 2);
  EXPECT_THROW((void)L.coefficient(2), PreconditionError);
}

TEST(Laurent, ClassicalFHasSimplePole) {
  const auto F = classical_F_laurent(8);
  EXPECT_EQ(F.pole(), 1u);
  EXPECT_EQ(F.coefficient(-1), Scalar(Rational(1)));
  EXPECT_EQ(F.coefficient(0), Scalar(Rational(1, 2)));
  EXPECT_EQ(F.coefficient(1), Scalar(Rational(-1, 12)));
}

TEST(Laurent, DerivativeLosesOneExponentOfPrecision) {
  const auto F = F_laurent(Domain::symbolic(), 8);
  const auto dF = laurent_derivative(F);
  EXPECT_EQ(dF.pole(), 2u);
  EXPECT_EQ(dF.precision_end(), F.precision_end() - 1);
  EXPECT_EQ(dF.coefficient(-2), Scalar(LambdaPoly{-1}));
  EXPECT_EQ(dF.coefficient(-1), Scalar(LambdaPoly{}));
}

TEST(Laurent, ProductOfFAndItsInverseIsOne) {
  const Domain d = Domain::evaluated(Rational(-1, 3));
  const auto F = F_laurent(d, 10);
  const auto q = degenerate_log_quotient_series(d, 10);
  const auto prod = laurent_mul(F, laurent_times_t_power(LaurentSeries::from_series(q), 1));
  EXPECT_EQ(prod.coefficient(0), d.one());
  for (long e = 1; e < prod.precision_end(); ++e) EXPECT_TRUE(prod.coefficient(e).is_zero()) << e;
}

TEST(Laurent, FirstDifference) {
  const LaurentSeries a(1, rat_series({1, 2, 3, 4}));
  const LaurentSeries b(1, rat_series({1, 2, 9}));
  EXPECT_EQ(laurent_first_difference(a, b), std::optional<long>(1));
  EXPECT_FALSE(laurent_first_difference(a, a).has_value());
  EXPECT_TRUE(laurent_equal(a, LaurentSeries(1, rat_series({1, 2}))));
}
