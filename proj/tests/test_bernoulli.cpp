#include <gtest/gtest.h>

#include "degbern/bernoulli.hpp"
#include "degbern/combinatorics.hpp"
#include "degbern/errors.hpp"
#include "oracles.hpp"

using namespace degbern;

TEST(Bernoulli, LowOrderSymbolic) {
  const auto b = b_via_series(Domain::symbolic(), 3);
  EXPECT_EQ(b.values[0], Scalar(LambdaPoly{1}));
  EXPECT_EQ(b.values[1], Scalar(LambdaPoly{Rational(1, 2), Rational(-1, 2)}));
  EXPECT_EQ(b.values[2], Scalar(LambdaPoly{Rational(-1, 6), 0, Rational(1, 6)}));
  EXPECT_EQ(b.values[3], Scalar(LambdaPoly{Rational(1, 4), 0, Rational(-1, 4)}));
}

TEST(Bernoulli, AllRoutesSymbolic) {
  const int n_max = 12;
  const Domain sym = Domain::symbolic();
  const auto series = b_via_series(sym, n_max).values;
  const auto rec = b_via_recurrence(sym, n_max).values;
  for (ExplicitForm f : {ExplicitForm::a_form, ExplicitForm::stirling_form, ExplicitForm::falling_form}) {
    const auto row = b_explicit_row(sym, n_max, f).values;
    for (int n = 0; n <= n_max; ++n) EXPECT_EQ(row[n], series[n]) << to_string(f) << " n=" << n;
  }
  for (int n = 0; n <= n_max; ++n) {
    EXPECT_EQ(rec[n], series[n]) << n;
    EXPECT_EQ(b_via_multinomial(sym, n), series[n]) << n;
  }
}

TEST(Bernoulli, RoutesAtRationals) {
  for (const char* l : {"1/2", "-1/3", "2"}) {
    const Domain d = Domain::parse(l);
    const auto series = b_via_series(d, 14).values;
    const auto rec = b_via_recurrence(d, 14).values;
    const auto expl = b_explicit_row(d, 14, ExplicitForm::falling_form).values;
    for (int n = 0; n <= 14; ++n) {
      EXPECT_EQ(rec[n], series[n]);
      EXPECT_EQ(expl[n], series[n]);
      EXPECT_EQ(b_via_multinomial(d, n), series[n]);
    }
  }
}

TEST(Bernoulli, LambdaOneGivesDeltaSequence) {
  // log_1(1+t) = t, so t F = 1.
  const auto b = b_via_series(Domain::evaluated(Rational(1)), 6).values;
  EXPECT_EQ(b[0], Scalar(Rational(1)));
  for (int n = 1; n <= 6; ++n) EXPECT_TRUE(b[n].is_zero());
}

TEST(Bernoulli, Preconditions) {
  const Domain zero = Domain::evaluated(Rational(0));
  EXPECT_THROW(b_via_series(zero, 3), DomainError);
  EXPECT_THROW(b_via_recurrence(zero, 3), DomainError);
  EXPECT_THROW(b_via_multinomial(zero, 3), DomainError);
  EXPECT_THROW(b_via_multinomial(Domain::symbolic(), kMultinomialMaxN + 1), PreconditionError);
  EXPECT_THROW(b_via_explicit(Domain::symbolic(), 0, ExplicitForm::a_form), PreconditionError);
  EXPECT_THROW(b_higher_order(Domain::symbolic(), 0, 3), PreconditionError);
}

TEST(Bernoulli, HigherOrder) {
  const Domain sym = Domain::symbolic();
  EXPECT_EQ(b_higher_order(sym, 1, 8).values, b_via_series(sym, 8).values);
  // b^{(2)}_1 = 2 b_1
  const auto b1 = b_via_series(sym, 1).values[1];
  EXPECT_EQ(b_higher_order(sym, 2, 3).values[1], b1 * Rational(2));
  // r = 2 is the self-convolution of r = 1
  const auto b = b_via_series(sym, 6).values;
  const auto b2 = b_higher_order(sym, 2, 6).values;
  for (int n = 0; n <= 6; ++n) {
    Scalar conv = sym.zero();
    for (int k = 0; k <= n; ++k) conv += b[k] * b[n - k] * binomial(n, k);
    EXPECT_EQ(b2[n], conv);
  }
}

TEST(Bernoulli, ClassicalBothRoutesAndOracle) {
  const auto ref = oracle::classical_b(15);
  const auto limit = classical_b_via_limit(15);
  const auto stirling = classical_b_via_stirling(15);
  for (int n = 0; n <= 15; ++n) {
    EXPECT_EQ(limit[n], Rational(ref[n])) << n;
    EXPECT_EQ(stirling[n], Rational(ref[n])) << n;
  }
  const auto c = classical_b(3);
  EXPECT_EQ(c, (std::vector<Rational>{1, Rational(1, 2), Rational(-1, 6), Rational(1, 4)}));
}
