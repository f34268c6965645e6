#include <gtest/gtest.h>

#include <algorithm>

#include "degbern/errors.hpp"
#include "degbern/identity.hpp"

using namespace degbern;

namespace {

bool all_pass(const std::vector<IdentityReport>& rs) {
  return std::all_of(rs.begin(), rs.end(), [](const IdentityReport& r) { return r.pass; });
}

long count_fail(const std::vector<IdentityReport>& rs) {
  return std::count_if(rs.begin(), rs.end(), [](const IdentityReport& r) { return !r.pass; });
}

VerifyOptions small(Suite s) {
  VerifyOptions o;
  o.suite = s;
  o.N_max = 5;
  o.j_max = 4;
  o.n_max = 6;
  o.order = 18;
  return o;
}

}  // namespace

TEST(Ode, HoldsSymbolicAndAtRationals) {
  for (int N = 1; N <= 6; ++N) {
    const auto r = verify_ode(Domain::symbolic(), N, 16);
    EXPECT_TRUE(r.pass) << N;
    ASSERT_TRUE(r.compared_range.has_value());
    EXPECT_EQ(r.compared_range->first, -(N + 1));
    EXPECT_FALSE(r.witness.has_value());
  }
  for (const char* l : {"1/2", "-1/3", "2", "1"}) EXPECT_TRUE(verify_ode(Domain::parse(l), 4, 14).pass) << l;
}

TEST(Ode, OrderTooSmallIsPrecondition) {
  EXPECT_THROW(verify_ode(Domain::symbolic(), 5, 6), PreconditionError);
  EXPECT_THROW(verify_ode(Domain::symbolic(), 0, 6), PreconditionError);
}

TEST(Ode, CorruptedCoefficientGivesWitness) {
  const Domain sym = Domain::symbolic();
  const auto a = a_by_recurrence(sym, 3).with_entry(1, 3, Scalar(LambdaPoly{2, 9, 8}));
  const auto r = verify_ode(sym, 3, 14, a);
  EXPECT_FALSE(r.pass);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_NE(r.witness->lhs, r.witness->rhs);
  // a_1 multiplies F^2, whose leading term is t^{-2}.
  EXPECT_EQ(r.witness->index, -2);
}

TEST(Ode, WrongSeedIsCaught) {
  const Domain sym = Domain::symbolic();
  const auto a = a_by_recurrence(sym, 4, ARecurrenceSeed{sym.lambda() + sym.one(), sym.one()});
  EXPECT_FALSE(verify_ode(sym, 4, 14, a).pass);
}

TEST(Classical, DerivativeFormulas) {
  for (int N = 1; N <= 8; ++N) {
    EXPECT_TRUE(verify_classical_derivative(N, 20, ClassicalDerivative::eq41).pass) << N;
    EXPECT_TRUE(verify_classical_derivative(N, 20, ClassicalDerivative::eq42).pass) << N;
  }
  const auto s1 = stirling1_signed(Domain::evaluated(Rational(0)), 4).with_entry(4, 2, Scalar(Rational(12)));
  EXPECT_FALSE(verify_classical_derivative(4, 12, ClassicalDerivative::eq41, s1).pass);
  EXPECT_FALSE(verify_classical_derivative(4, 12, ClassicalDerivative::eq42, s1).pass);
}

TEST(Cor34, HoldsAndDetectsCorruption) {
  const Domain sym = Domain::symbolic();
  const auto a = a_by_recurrence(sym, 8);
  for (int n = 1; n <= 8; ++n) {
    for (int j = 1; j <= n; ++j) EXPECT_TRUE(verify_cor34(sym, j, n, a).pass) << n << "," << j;
  }
  const auto bad = a.with_entry(6, 7, a.at(6, 7) + sym.lambda());
  EXPECT_FALSE(verify_cor34(sym, 2, 7, bad).pass);
  EXPECT_THROW(verify_cor34(sym, 0, 3, a), PreconditionError);
}

TEST(Thm41, ReproducesB) {
  for (int N = 1; N <= 4; ++N) {
    for (int j = 0; j <= 5; ++j) EXPECT_TRUE(verify_thm41(Domain::symbolic(), j, N).pass) << j << "," << N;
  }
  EXPECT_TRUE(verify_thm41(Domain::parse("-1/3"), 3, 3).pass);
}

TEST(Thm41, PrintedFactorialReadingDiffers) {
  const auto outcomes = compare_thm41_variants(Domain::symbolic(), 3, 3);
  EXPECT_TRUE(std::all_of(outcomes.begin(), outcomes.end(), [](const auto& o) { return o.expansion_holds; }));
  EXPECT_TRUE(std::any_of(outcomes.begin(), outcomes.end(), [](const auto& o) { return !o.printed_holds; }));
}

TEST(Cor42, Band) {
  std::vector<std::pair<int, int>> seen;
  for (int N = 2; N <= 6; ++N) {
    for (int j = -(N - 1); j <= -1; ++j) {
      EXPECT_TRUE(verify_cor42(Domain::symbolic(), j, N).pass) << N << "," << j;
      if (N <= 4) seen.emplace_back(N, j);
    }
  }
  const std::vector<std::pair<int, int>> expected{{2, -1}, {3, -2}, {3, -1}, {4, -3}, {4, -2}, {4, -1}};
  EXPECT_EQ(seen, expected);
  EXPECT_THROW(verify_cor42(Domain::symbolic(), 0, 3), PreconditionError);
  EXPECT_THROW(verify_cor42(Domain::symbolic(), -1, 1), PreconditionError);
}

TEST(Routes, AllAgree) {
  const Domain sym = Domain::symbolic();
  EXPECT_TRUE(all_pass(check_a_routes(sym, 8)));
  EXPECT_TRUE(all_pass(check_b_routes(sym, 8)));
  EXPECT_TRUE(check_bell_routes(sym, 8).pass);
  EXPECT_TRUE(check_stirling2_routes(sym, 8).pass);
  EXPECT_TRUE(check_stirling_limit(10).pass);
  EXPECT_TRUE(check_a_limit(10).pass);
  EXPECT_TRUE(check_classical_b(12).pass);
  // falling form skipped at lambda = 0
  const auto at_zero = check_a_routes(Domain::evaluated(Rational(0)), 6);
  EXPECT_TRUE(all_pass(at_zero));
  EXPECT_EQ(at_zero.size(), 3u);
}

TEST(VerifyAll, FullSuitePasses) {
  const auto reports = verify_all(small(Suite::all));
  EXPECT_TRUE(all_pass(reports));
  EXPECT_GT(reports.size(), 40u);
}

TEST(VerifyAll, ThreadCountDoesNotChangeReports) {
  auto one = small(Suite::all);
  auto many = one;
  many.threads = 6;
  const auto a = verify_all(one);
  const auto b = verify_all(many);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].identity, b[i].identity);
    EXPECT_EQ(a[i].params.N, b[i].params.N);
    EXPECT_EQ(a[i].params.j, b[i].params.j);
    EXPECT_EQ(a[i].pass, b[i].pass);
  }
}

TEST(VerifyAll, DegenerateSuitesRefuseZero) {
  auto o = small(Suite::ode);
  o.domain = Domain::evaluated(Rational(0));
  EXPECT_THROW(verify_all(o), DomainError);
  o.suite = Suite::eq41;
  EXPECT_TRUE(all_pass(verify_all(o)));
}

// Each corruption of one input must flip at least one report.
TEST(FaultInjection, EachCorruptionIsDetected) {
  const Domain sym = Domain::symbolic();
  const auto opts = small(Suite::all);
  const auto clean = VerificationTables::build(sym, opts.N_max, opts.j_max);
  ASSERT_EQ(count_fail(verify_all(opts, clean)), 0);

  auto t1 = clean;
  t1.a = t1.a.with_entry(2, 4, t1.a.at(2, 4) + sym.one());
  EXPECT_GT(count_fail(verify_all(opts, t1)), 0);

  auto t2 = clean;
  t2.s1 = t2.s1.with_entry(3, 1, Scalar(Rational(3)));
  EXPECT_GT(count_fail(verify_all(opts, t2)), 0);

  auto t3 = clean;
  t3.reference.values[5] = t3.reference.values[5] + sym.lambda();
  EXPECT_GT(count_fail(verify_all(opts, t3)), 0);

  auto t4 = clean;
  t4.higher[2].values[1] = t4.higher[2].values[1] * Rational(2);
  EXPECT_GT(count_fail(verify_all(opts, t4)), 0);

  auto t5 = clean;
  t5.a = a_by_recurrence(sym, opts.N_max, ARecurrenceSeed{sym.lambda() * Rational(3), sym.one()});
  EXPECT_GT(count_fail(verify_all(opts, t5)), 0);
}
