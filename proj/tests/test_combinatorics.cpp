#include <gtest/gtest.h>

#include <random>

#include "degbern/combinatorics.hpp"
#include "degbern/errors.hpp"
#include "oracles.hpp"

using namespace degbern;

TEST(Counting, BinomialAndMultinomial) {
  EXPECT_EQ(binomial(10, 3), Rational(120));
  EXPECT_EQ(binomial(3, 5), Rational(0));
  EXPECT_EQ(binomial(3, -1), Rational(0));
  const std::vector<int> parts{2, 1, 1};
  EXPECT_EQ(multinomial(4, parts), Rational(12));
  const std::vector<int> bad{2, 1};
  EXPECT_THROW(multinomial(4, bad), PreconditionError);
}

TEST(Counting, FallingFactorials) {
  const Domain sym = Domain::symbolic();
  EXPECT_EQ(falling_factorial(sym.lambda(), 0), sym.one());
  EXPECT_EQ(falling_factorial(sym.lambda(), 2), Scalar(LambdaPoly{0, -1, 1}));
  // (1)_{2,lambda} = 1 - lambda
  EXPECT_EQ(generalized_falling(sym, sym.one(), 2), Scalar(LambdaPoly{1, -1}));
  EXPECT_EQ(falling_factorial(Scalar(Rational(5)), 3), Scalar(Rational(60)));
}

TEST(Stirling, FirstKindMatchesFallingFactorialExpansion) {
  const int n_max = 14;
  const auto table = stirling1_signed(Domain::evaluated(Rational(0)), n_max);
  const auto ref = oracle::first_kind(n_max);
  for (int n = 0; n <= n_max; ++n) {
    for (int k = 0; k <= n; ++k) EXPECT_EQ(table.at(n, k).rational(), Rational(ref[n][k])) << n << "," << k;
  }
  EXPECT_EQ(table.at(3, 7), Scalar(Rational(0)));
  EXPECT_THROW((void)table.at(n_max + 1, 0), PreconditionError);
}

TEST(Stirling, DegenerateSecondKindBothRoutesMatchRecurrence) {
  const int n_max = 10;
  const Domain sym = Domain::symbolic();
  const auto ref = oracle::degenerate_second_kind(n_max);
  const auto gf = degenerate_stirling2(sym, n_max, Stirling2Route::generating_function);
  const auto bell = degenerate_stirling2(sym, n_max, Stirling2Route::bell_formula);
  for (int n = 0; n <= n_max; ++n) {
    for (int k = 0; k <= n; ++k) {
      EXPECT_EQ(gf.at(n, k), Scalar(ref[n][k])) << n << "," << k;
      EXPECT_EQ(bell.at(n, k), Scalar(ref[n][k])) << n << "," << k;
    }
  }
  EXPECT_EQ(gf.at(2, 1), Scalar(LambdaPoly{1, -1}));
}

TEST(Stirling, DegenerateSecondKindAtZeroIsClassical) {
  const int n_max = 12;
  const auto table = degenerate_stirling2(Domain::evaluated(Rational(0)), n_max, Stirling2Route::generating_function);
  const auto ref = oracle::second_kind(n_max);
  for (int n = 0; n <= n_max; ++n) {
    for (int k = 0; k <= n; ++k) EXPECT_EQ(table.at(n, k).rational(), Rational(ref[n][k]));
  }
}

TEST(Stirling, ScaledDegenerateLimitIsFirstKind) {
  const int n_max = 12;
  const auto scaled = scaled_degenerate_stirling_table(Domain::symbolic(), n_max);
  const auto ref = oracle::first_kind(n_max);
  for (int n = 0; n <= n_max; ++n) {
    for (int k = 0; k <= n; ++k) EXPECT_EQ(poly_eval(scaled.at(n, k).poly(), Rational(0)), Rational(ref[n][k]));
  }
}

TEST(Stirling, ScaledRoutesAgreeAndGfRefusesZero) {
  const Domain sym = Domain::symbolic();
  for (int N = 0; N <= 9; ++N) {
    for (int k = 0; k <= N; ++k) EXPECT_EQ(scaled_degenerate_stirling(sym, N, k), scaled_degenerate_stirling_gf(sym, N, k));
  }
  EXPECT_THROW((void)scaled_degenerate_stirling_gf(Domain::evaluated(Rational(0)), 3, 1), DomainError);
}

TEST(Bell, PartitionEnumerationCounts) {
  // number of partitions of 10 into exactly 3 parts is 8
  int count = 0;
  for_each_bell_partition(10, 3, [&](const std::vector<int>&) { ++count; });
  EXPECT_EQ(count, 8);
}

TEST(Bell, RoutesAgree) {
  const Domain sym = Domain::symbolic();
  std::vector<Scalar> xs;
  for (int i = 1; i <= 12; ++i) xs.push_back(Scalar(LambdaPoly{i, 1, Rational(1, i)}));
  for (int n = 0; n <= 12; ++n) {
    for (int k = 0; k <= n; ++k) {
      EXPECT_EQ(bell_partial(sym, n, k, xs, BellRoute::partition_sum),
                bell_partial(sym, n, k, xs, BellRoute::generating_function))
          << n << "," << k;
    }
  }
  // B_{n,k}(1,1,...) = S(n,k)
  const Domain q = Domain::evaluated(Rational(0));
  std::vector<Scalar> ones(10, q.one());
  const auto S = oracle::second_kind(10);
  for (int k = 0; k <= 10; ++k) EXPECT_EQ(bell_partial(q, 10, k, ones, BellRoute::partition_sum).rational(), Rational(S[10][k]));
}

TEST(Bell, ScalingOnRandomInstances) {
  std::mt19937 rng(20241019);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 6), nn(1, 8);
  auto rnd = [&] { return Rational(num(rng), den(rng)); };
  const Domain d = Domain::evaluated(Rational(3, 7));
  for (int trial = 0; trial < 100; ++trial) {
    const int n = nn(rng);
    const int k = std::uniform_int_distribution<int>(0, n)(rng);
    std::vector<Scalar> xs;
    for (int i = 0; i < n; ++i) xs.push_back(Scalar(rnd()));
    EXPECT_TRUE(bell_scaling_check(d, n, k, Scalar(rnd()), Scalar(rnd()), xs)) << "trial " << trial;
  }
}
