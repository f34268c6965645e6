#include "degbern/identity.hpp"

#include <atomic>
#include <functional>
#include <thread>

#include "degbern/errors.hpp"
#include "degbern/series.hpp"

namespace degbern {

namespace {

Rational sign_of(int e) { return (e % 2 + 2) % 2 == 0 ? Rational(1) : Rational(-1); }

/// (1+t)^N as an exact coefficient list.
std::vector<Scalar> one_plus_t_power(const Domain& domain, int N) {
  std::vector<Scalar> v;
  for (int k = 0; k <= N; ++k) v.push_back(domain.constant(binomial(N, k)));
  return v;
}

LaurentSeries times_polynomial(const LaurentSeries& a, std::vector<Scalar> poly) {
  const auto order = a.body().order();
  return {a.pole(), series_mul(a.body(), TruncatedSeries::polynomial(a.domain(), std::move(poly), order))};
}

LaurentSeries times_series(const LaurentSeries& a, const TruncatedSeries& s) { return {a.pole(), series_mul(a.body(), s)}; }

void compare_series(const LaurentSeries& lhs, const LaurentSeries& rhs, IdentityReport& report) {
  const long lo = std::min(lhs.min_exponent(), rhs.min_exponent());
  const long hi = std::min(lhs.precision_end(), rhs.precision_end()) - 1;
  report.compared_range = std::make_pair(lo, hi);
  report.pass = true;
  if (const auto e = laurent_first_difference(lhs, rhs)) {
    report.pass = false;
    report.witness = Witness{*e, lhs.coefficient(*e), rhs.coefficient(*e)};
  }
}

void compare_scalars(const Scalar& lhs, const Scalar& rhs, long index, IdentityReport& report) {
  report.pass = lhs == rhs;
  if (!report.pass) report.witness = Witness{index, lhs, rhs};
}

const Scalar& higher_value(const HigherOrderTable& higher, int r, int m) {
  if (m < 0) throw InternalError("negative index " + std::to_string(m) + " requested from b^(" + std::to_string(r) + ")");
  if (r < 1 || static_cast<std::size_t>(r) > higher.size()) {
    throw PreconditionError("higher-order table lacks order r = " + std::to_string(r));
  }
  const auto& values = higher[static_cast<std::size_t>(r - 1)].values;
  if (static_cast<std::size_t>(m) >= values.size()) {
    throw PreconditionError("higher-order table b^(" + std::to_string(r) + ") lacks index " + std::to_string(m));
  }
  return values[static_cast<std::size_t>(m)];
}

HigherOrderTable build_higher(const Domain& domain, int r_max, int n_max) {
  HigherOrderTable higher;
  for (int r = 1; r <= r_max; ++r) higher.push_back(b_higher_order(domain, r, n_max));
  return higher;
}

/// Records the first index where two scalar lists differ.
bool first_mismatch(const std::vector<Scalar>& lhs, const std::vector<Scalar>& rhs, IdentityReport& report,
                    const std::string& what, long index_offset = 0) {
  for (std::size_t n = 0; n < lhs.size() && n < rhs.size(); ++n) {
    if (!(lhs[n] == rhs[n])) {
      report.pass = false;
      report.witness = Witness{static_cast<long>(n) + index_offset, lhs[n], rhs[n]};
      report.detail = what;
      return true;
    }
  }
  return false;
}

}  // namespace

std::string_view to_string(Identity id) {
  switch (id) {
    case Identity::ode_family: return "ode_family";
    case Identity::cor_3_4: return "cor_3_4";
    case Identity::eq_41: return "eq_41";
    case Identity::eq_42: return "eq_42";
    case Identity::thm_4_1: return "thm_4_1";
    case Identity::cor_4_2: return "cor_4_2";
    case Identity::a_routes: return "a_routes";
    case Identity::b_routes: return "b_routes";
    case Identity::bell_routes: return "bell_routes";
    case Identity::stirling2_routes: return "stirling2_routes";
    case Identity::stirling_limit: return "stirling_limit";
    case Identity::a_limit: return "a_limit";
    case Identity::classical_b: return "classical_b";
  }
  return "unknown";
}

IdentityReport verify_ode(const Domain& domain, int N, int order, const CoeffTable& a) {
  if (N < 1) throw PreconditionError("verify_ode requires N >= 1");
  if (order < N + 2) {
    throw PreconditionError("verify_ode(N = " + std::to_string(N) + ") needs order >= " + std::to_string(N + 2) +
                            ", got " + std::to_string(order));
  }
  IdentityReport report;
  report.identity = Identity::ode_family;
  report.params = {N, std::nullopt, std::nullopt, order, domain.descriptor()};

  const LaurentSeries F = F_laurent(domain, static_cast<std::size_t>(order + N));
  LaurentSeries derivative = F;
  for (int k = 0; k < N; ++k) derivative = laurent_derivative(derivative);
  const LaurentSeries lhs = laurent_scale(times_polynomial(derivative, one_plus_t_power(domain, N)), domain.constant(sign_of(N)));

  LaurentSeries rhs = laurent_scale(F, a.at(0, N));
  LaurentSeries power = F;
  for (int i = 1; i <= N; ++i) {
    power = laurent_mul(power, F);
    rhs = laurent_add(rhs, laurent_scale(power, a.at(i, N)));
  }
  compare_series(lhs, rhs, report);
  return report;
}

IdentityReport verify_ode(const Domain& domain, int N, int order) {
  return verify_ode(domain, N, order, a_by_recurrence(domain, std::max(N, 1)));
}

IdentityReport verify_classical_derivative(int N, int order, ClassicalDerivative which, const StirlingTable& s1) {
  if (N < 1) throw PreconditionError("classical derivative identities are checked for N >= 1");
  if (order < N + 2) {
    throw PreconditionError("classical derivative check (N = " + std::to_string(N) + ") needs order >= " +
                            std::to_string(N + 2));
  }
  const Domain domain = Domain::evaluated(Rational(0));
  IdentityReport report;
  report.identity = which == ClassicalDerivative::eq41 ? Identity::eq_41 : Identity::eq_42;
  report.params.order = order;
  report.params.lambda = domain.descriptor();
  if (which == ClassicalDerivative::eq41) {
    report.params.N = N;
  } else {
    report.params.n = N;
  }

  const auto body_order = static_cast<std::size_t>(order + N);
  const LaurentSeries F0 = classical_F_laurent(body_order);
  const TruncatedSeries inv_one_plus_t_power =
      series_reciprocal(TruncatedSeries::polynomial(domain, one_plus_t_power(domain, N), body_order));

  LaurentSeries lhs = which == ClassicalDerivative::eq41 ? F0 : laurent_times_t_power(F0, 1);
  for (int k = 0; k < N; ++k) lhs = laurent_derivative(lhs);

  LaurentSeries sum = LaurentSeries::from_series(TruncatedSeries::zero(domain, body_order));
  LaurentSeries power = F0;
  for (int k = 0; k <= N; ++k) {
    if (k > 0) power = laurent_mul(power, F0);
    const Rational weight = sign_of(k) * factorial(k);
    if (which == ClassicalDerivative::eq41) {
      sum = laurent_add(sum, laurent_scale(power, domain.constant(weight * s1.at(N, k).rational())));
    } else {
      // t s(n,k) + n (1+t) s(n-1,k), with s(n-1,n) = 0.
      const Rational s_n = s1.at(N, k).rational();
      const Rational s_prev = s1.at(N - 1, k).rational();
      std::vector<Scalar> poly{domain.constant(weight * Rational(N) * s_prev),
                               domain.constant(weight * (s_n + Rational(N) * s_prev))};
      sum = laurent_add(sum, times_polynomial(power, std::move(poly)));
    }
  }
  const LaurentSeries rhs = times_series(sum, inv_one_plus_t_power);
  compare_series(lhs, rhs, report);
  return report;
}

IdentityReport verify_classical_derivative(int N, int order, ClassicalDerivative which) {
  return verify_classical_derivative(N, order, which, stirling1_signed(Domain::evaluated(Rational(0)), N));
}

IdentityReport verify_cor34(const Domain& domain, int j, int n, const CoeffTable& a) {
  if (j < 1 || j > n) throw PreconditionError("verify_cor34 requires 1 <= j <= n");
  IdentityReport report;
  report.identity = Identity::cor_3_4;
  report.params = {std::nullopt, n, j, std::nullopt, domain.descriptor()};
  auto unit_falling_over_fact = [&](int m) {
    return generalized_falling(domain, domain.one(), m) / factorial(m);
  };
  Scalar lhs = domain.zero();
  for (int i = 1; i <= j; ++i) {
    lhs += unit_falling_over_fact(j - i) * (a.at(n - i, n) - a.at(n - i, n - 1) * Rational(n));
  }
  const Scalar rhs = a.at(n - j, n) - unit_falling_over_fact(j) * factorial(n);
  compare_scalars(lhs, rhs, j, report);
  return report;
}

Scalar thm41_expansion_coefficient(const Domain& domain, int j, int N, const CoeffTable& a,
                                   const HigherOrderTable& higher, Thm41Variant variant) {
  if (N < 1 || j < -N) throw PreconditionError("expansion coefficient requires N >= 1 and j >= -N");
  Scalar sum = domain.zero();
  // a_i(N) b^{(i+1)}_{l+i} / (l+i)!
  for (int l = -N; l <= j; ++l) {
    const Rational c = sign_of(N + j + l) * binomial(N + j - l - 1, j - l);
    for (int i = std::max(0, -l); i <= N; ++i) {
      sum += a.at(i, N) * higher_value(higher, i + 1, l + i) * (c / factorial(l + i));
    }
  }
  // -N a_i(N-1) b^{(i+1)}_{l+i+1} / (l+i+1)!
  for (int l = -N; l <= j; ++l) {
    const Rational c = Rational(N) * sign_of(N + j + l + 1) * binomial(N + j - l - 1, j - l);
    for (int i = std::max(0, -l - 1); i <= N - 1; ++i) {
      sum += a.at(i, N - 1) * higher_value(higher, i + 1, l + i + 1) * (c / factorial(l + i + 1));
    }
  }
  // -N a_i(N-1) b^{(i+1)}_{l+i} / (l+i)!   [or / (l+1)!]
  for (int l = -(N - 1); l <= j; ++l) {
    const Rational c = Rational(N) * sign_of(N + j + l + 1) * binomial(N + j - l - 1, j - l);
    for (int i = std::max(0, -l); i <= N - 1; ++i) {
      const int divisor = variant == Thm41Variant::expansion_factorial ? l + i : l + 1;
      if (divisor < 0) continue;  // 1/(negative integer)! = 0
      sum += a.at(i, N - 1) * higher_value(higher, i + 1, l + i) * (c / factorial(divisor));
    }
  }
  return sum;
}

IdentityReport verify_thm41(const Domain& domain, int j, int N, const CoeffTable& a, const HigherOrderTable& higher,
                            const BernoulliRow& reference, Thm41Variant variant) {
  if (j < 0 || N < 1) throw PreconditionError("verify_thm41 requires j >= 0 and N >= 1");
  IdentityReport report;
  report.identity = Identity::thm_4_1;
  report.params = {N, std::nullopt, j, std::nullopt, domain.descriptor()};
  if (variant == Thm41Variant::printed_factorial) report.detail = "printed (l+1)! reading";
  const auto index = static_cast<std::size_t>(j + N);
  if (index >= reference.values.size()) throw PreconditionError("reference row lacks b_" + std::to_string(j + N));
  const Scalar rhs = thm41_expansion_coefficient(domain, j, N, a, higher, variant) * factorial(j);
  compare_scalars(reference.values[index], rhs, j + N, report);
  return report;
}

IdentityReport verify_thm41(const Domain& domain, int j, int N) {
  const auto a = a_by_recurrence(domain, N);
  return verify_thm41(domain, j, N, a, build_higher(domain, N + 1, j + N), b_via_series(domain, j + N));
}

IdentityReport verify_cor42(const Domain& domain, int j, int N, const CoeffTable& a, const HigherOrderTable& higher) {
  if (N < 2 || j < -(N - 1) || j > -1) throw PreconditionError("verify_cor42 requires N >= 2 and -(N-1) <= j <= -1");
  IdentityReport report;
  report.identity = Identity::cor_4_2;
  report.params = {N, std::nullopt, j, std::nullopt, domain.descriptor()};
  const Scalar value = thm41_expansion_coefficient(domain, j, N, a, higher, Thm41Variant::expansion_factorial);
  compare_scalars(value, domain.zero(), j, report);
  return report;
}

IdentityReport verify_cor42(const Domain& domain, int j, int N) {
  return verify_cor42(domain, j, N, a_by_recurrence(domain, N), build_higher(domain, N + 1, N));
}

std::vector<Thm41VariantOutcome> compare_thm41_variants(const Domain& domain, int j_max, int N_max) {
  const auto a = a_by_recurrence(domain, N_max);
  const auto higher = build_higher(domain, N_max + 1, j_max + N_max);
  const auto reference = b_via_series(domain, j_max + N_max);
  std::vector<Thm41VariantOutcome> out;
  for (int N = 1; N <= N_max; ++N) {
    for (int j = 0; j <= j_max; ++j) {
      Thm41VariantOutcome o;
      o.j = j;
      o.N = N;
      o.expansion_holds = verify_thm41(domain, j, N, a, higher, reference, Thm41Variant::expansion_factorial).pass;
      o.printed_holds = verify_thm41(domain, j, N, a, higher, reference, Thm41Variant::printed_factorial).pass;
      out.push_back(o);
    }
  }
  return out;
}

std::vector<IdentityReport> check_a_routes(const Domain& domain, int N_max) {
  const CoeffTable reference = a_by_recurrence(domain, N_max);
  struct Route {
    std::string name;
    std::function<CoeffTable()> build;
    bool band_only;
  };
  std::vector<Route> routes{
      {"recurrence vs alternate_recurrence", [&] { return a_by_alternate_recurrence(domain, N_max); }, true},
      {"recurrence vs explicit_stirling", [&] { return a_by_explicit_stirling(domain, N_max); }, false},
  };
  if (!domain.lambda_is_zero()) {
    routes.push_back({"recurrence vs explicit_falling", [&] { return a_by_explicit_falling(domain, N_max); }, false});
  }
  std::vector<IdentityReport> reports;
  for (const auto& route : routes) {
    IdentityReport report;
    report.identity = Identity::a_routes;
    report.params = {N_max, std::nullopt, std::nullopt, std::nullopt, domain.descriptor()};
    report.detail = route.name;
    report.pass = true;
    const CoeffTable other = route.build();
    for (int N = 1; N <= N_max && report.pass; ++N) {
      for (int i = 0; i <= N; ++i) {
        if (route.band_only && (i < 1 || i > N - 1)) continue;
        if (!(reference.at(i, N) == other.at(i, N))) {
          report.pass = false;
          report.witness = Witness{N, reference.at(i, N), other.at(i, N)};
          report.detail = route.name + " at i = " + std::to_string(i);
          break;
        }
      }
    }
    reports.push_back(std::move(report));
  }
  // Boundary laws a_0(N) = (N + lambda - 1)_N and a_N(N) = N!.
  IdentityReport boundary;
  boundary.identity = Identity::a_routes;
  boundary.params = {N_max, std::nullopt, std::nullopt, std::nullopt, domain.descriptor()};
  boundary.detail = "boundary laws";
  boundary.pass = true;
  for (int N = 1; N <= N_max && boundary.pass; ++N) {
    const Scalar first = falling_factorial(domain.constant(Rational(N - 1)) + domain.lambda(), N);
    const Scalar last = domain.constant(factorial(N));
    if (!(reference.at(0, N) == first)) {
      boundary.pass = false;
      boundary.witness = Witness{N, reference.at(0, N), first};
      boundary.detail = "a_0(N) = (N+lambda-1)_N";
    } else if (!(reference.at(N, N) == last)) {
      boundary.pass = false;
      boundary.witness = Witness{N, reference.at(N, N), last};
      boundary.detail = "a_N(N) = N!";
    }
  }
  reports.push_back(std::move(boundary));
  return reports;
}

std::vector<IdentityReport> check_b_routes(const Domain& domain, int n_max) {
  const BernoulliRow series = b_via_series(domain, n_max);
  std::vector<std::pair<std::string, std::function<std::vector<Scalar>()>>> routes{
      {"series vs recurrence", [&] { return b_via_recurrence(domain, n_max).values; }},
      {"series vs multinomial",
       [&] {
         std::vector<Scalar> v;
         for (int n = 0; n <= std::min(n_max, kMultinomialMaxN); ++n) v.push_back(b_via_multinomial(domain, n));
         return v;
       }},
      {"series vs explicit a_form", [&] { return b_explicit_row(domain, n_max, ExplicitForm::a_form).values; }},
      {"series vs explicit stirling_form", [&] { return b_explicit_row(domain, n_max, ExplicitForm::stirling_form).values; }},
      {"series vs explicit falling_form", [&] { return b_explicit_row(domain, n_max, ExplicitForm::falling_form).values; }},
  };
  std::vector<IdentityReport> reports;
  for (const auto& [name, build] : routes) {
    IdentityReport report;
    report.identity = Identity::b_routes;
    report.params = {std::nullopt, n_max, std::nullopt, std::nullopt, domain.descriptor()};
    report.detail = name;
    report.pass = true;
    first_mismatch(series.values, build(), report, name);
    reports.push_back(std::move(report));
  }
  return reports;
}

IdentityReport check_bell_routes(const Domain& domain, int n_max) {
  IdentityReport report;
  report.identity = Identity::bell_routes;
  report.params = {std::nullopt, n_max, std::nullopt, std::nullopt, domain.descriptor()};
  report.detail = "partition_sum vs generating_function on (1)_{i,lambda}";
  report.pass = true;
  std::vector<Scalar> xs;
  for (int i = 1; i <= std::max(n_max, 1); ++i) xs.push_back(generalized_falling(domain, domain.one(), i));
  for (int n = 0; n <= n_max && report.pass; ++n) {
    for (int k = 0; k <= n; ++k) {
      const Scalar p = bell_partial(domain, n, k, xs, BellRoute::partition_sum);
      const Scalar g = bell_partial(domain, n, k, xs, BellRoute::generating_function);
      if (!(p == g)) {
        report.pass = false;
        report.witness = Witness{n, p, g};
        report.detail += " at k = " + std::to_string(k);
        break;
      }
    }
  }
  return report;
}

IdentityReport check_stirling2_routes(const Domain& domain, int n_max) {
  IdentityReport report;
  report.identity = Identity::stirling2_routes;
  report.params = {std::nullopt, n_max, std::nullopt, std::nullopt, domain.descriptor()};
  report.pass = true;
  const StirlingTable gf = degenerate_stirling2(domain, n_max, Stirling2Route::generating_function);
  const StirlingTable alt = degenerate_stirling2(domain, n_max, Stirling2Route::bell_formula);
  std::vector<Scalar> xs;
  for (int i = 1; i <= std::max(n_max, 1); ++i) xs.push_back(generalized_falling(domain, domain.one(), i));
  for (int n = 0; n <= n_max && report.pass; ++n) {
    for (int k = 0; k <= n; ++k) {
      const Scalar bell = bell_partial(domain, n, k, xs, BellRoute::partition_sum);
      if (!(gf.at(n, k) == alt.at(n, k))) {
        report.pass = false;
        report.witness = Witness{n, gf.at(n, k), alt.at(n, k)};
        report.detail = "generating_function vs alternating sum at k = " + std::to_string(k);
        break;
      }
      if (!(bell == alt.at(n, k))) {
        report.pass = false;
        report.witness = Witness{n, bell, alt.at(n, k)};
        report.detail = "Bell polynomial vs alternating sum at k = " + std::to_string(k);
        break;
      }
    }
  }
  return report;
}

IdentityReport check_stirling_limit(int N_max) {
  const Domain sym = Domain::symbolic();
  IdentityReport report;
  report.identity = Identity::stirling_limit;
  report.params = {N_max, std::nullopt, std::nullopt, std::nullopt, "0"};
  report.pass = true;
  const StirlingTable scaled = scaled_degenerate_stirling_table(sym, N_max);
  const StirlingTable s1 = stirling1_signed(Domain::evaluated(Rational(0)), N_max);
  for (int N = 0; N <= N_max && report.pass; ++N) {
    for (int k = 0; k <= N; ++k) {
      const Scalar gf = scaled_degenerate_stirling_gf(sym, N, k);
      if (!(gf == scaled.at(N, k))) {
        report.pass = false;
        report.witness = Witness{N, scaled.at(N, k), gf};
        report.detail = "Bell route vs generating-function route at k = " + std::to_string(k);
        break;
      }
      const Rational limit = poly_eval(scaled.at(N, k).poly(), Rational(0));
      if (!(limit == s1.at(N, k).rational())) {
        report.pass = false;
        report.witness = Witness{N, limit, s1.at(N, k)};
        report.detail = "value at lambda = 0 vs s(N,k) at k = " + std::to_string(k);
        break;
      }
    }
  }
  return report;
}

IdentityReport check_a_limit(int N_max) {
  IdentityReport report;
  report.identity = Identity::a_limit;
  report.params = {N_max, std::nullopt, std::nullopt, std::nullopt, "0"};
  report.pass = true;
  const CoeffTable a = a_by_recurrence(Domain::symbolic(), N_max);
  for (int N = 1; N <= N_max && report.pass; ++N) {
    for (int i = 0; i <= N; ++i) {
      const Rational constant = poly_eval(a.at(i, N).poly(), Rational(0));
      const Rational expected = a_limit_at_zero(i, N);
      if (!(constant == expected)) {
        report.pass = false;
        report.witness = Witness{N, constant, expected};
        report.detail = "constant term vs (-1)^{N+i} i! s(N,i) at i = " + std::to_string(i);
        break;
      }
    }
  }
  return report;
}

IdentityReport check_classical_b(int n_max) {
  IdentityReport report;
  report.identity = Identity::classical_b;
  report.params = {std::nullopt, n_max, std::nullopt, std::nullopt, "0"};
  report.detail = "lambda -> 0 limit vs Stirling formula";
  report.pass = true;
  const auto limit = classical_b_via_limit(n_max);
  const auto stirling = classical_b_via_stirling(n_max);
  for (std::size_t n = 0; n < limit.size(); ++n) {
    if (!(limit[n] == stirling[n])) {
      report.pass = false;
      report.witness = Witness{static_cast<long>(n), limit[n], stirling[n]};
      break;
    }
  }
  return report;
}

VerificationTables VerificationTables::build(const Domain& domain, int N_max, int j_max) {
  const int b_max = j_max + N_max;
  return VerificationTables{domain, a_by_recurrence(domain, N_max), build_higher(domain, N_max + 1, b_max),
                            b_via_series(domain, b_max), stirling1_signed(Domain::evaluated(Rational(0)), N_max)};
}

std::string_view to_string(Suite s) {
  switch (s) {
    case Suite::ode: return "ode";
    case Suite::cor34: return "cor34";
    case Suite::eq41: return "eq41";
    case Suite::eq42: return "eq42";
    case Suite::thm41: return "thm41";
    case Suite::cor42: return "cor42";
    case Suite::routes: return "routes";
    case Suite::all: return "all";
  }
  return "unknown";
}

Suite parse_suite(std::string_view name) {
  for (Suite s : {Suite::ode, Suite::cor34, Suite::eq41, Suite::eq42, Suite::thm41, Suite::cor42, Suite::routes, Suite::all}) {
    if (to_string(s) == name) return s;
  }
  throw ParseError("unknown suite '" + std::string(name) + "'");
}

std::vector<IdentityReport> verify_all(const VerifyOptions& options) {
  const bool needs_degenerate_tables = options.suite != Suite::eq41 && options.suite != Suite::eq42;
  if (needs_degenerate_tables) options.domain.require_nonzero_lambda("the degenerate identity suites");
  if (!needs_degenerate_tables) {
    // Only the classical table is read.
    VerificationTables tables{options.domain, CoeffTable(options.domain, {{options.domain.one()}}), {},
                              BernoulliRow{}, stirling1_signed(Domain::evaluated(Rational(0)), options.N_max)};
    return verify_all(options, tables);
  }
  return verify_all(options, VerificationTables::build(options.domain, options.N_max, options.j_max));
}

std::vector<IdentityReport> verify_all(const VerifyOptions& options, const VerificationTables& tables) {
  const Domain& domain = tables.domain;
  const auto want = [&](Suite s) { return options.suite == Suite::all || options.suite == s; };

  // Each task produces one or more reports; tasks are queued in output order.
  std::vector<std::function<std::vector<IdentityReport>()>> tasks;
  auto single = [&](std::function<IdentityReport()> f) {
    tasks.emplace_back([f = std::move(f)] { return std::vector<IdentityReport>{f()}; });
  };

  if (want(Suite::ode)) {
    for (int N = 1; N <= options.N_max; ++N) single([&, N] { return verify_ode(domain, N, options.order, tables.a); });
  }
  if (want(Suite::cor34)) {
    for (int n = 1; n <= options.N_max; ++n) {
      for (int j = 1; j <= n; ++j) single([&, n, j] { return verify_cor34(domain, j, n, tables.a); });
    }
  }
  if (want(Suite::eq41)) {
    for (int N = 1; N <= options.N_max; ++N) {
      single([&, N] { return verify_classical_derivative(N, options.order, ClassicalDerivative::eq41, tables.s1); });
    }
  }
  if (want(Suite::eq42)) {
    for (int N = 1; N <= options.N_max; ++N) {
      single([&, N] { return verify_classical_derivative(N, options.order, ClassicalDerivative::eq42, tables.s1); });
    }
  }
  if (want(Suite::thm41)) {
    for (int N = 1; N <= options.N_max; ++N) {
      for (int j = 0; j <= options.j_max; ++j) {
        single([&, N, j] { return verify_thm41(domain, j, N, tables.a, tables.higher, tables.reference); });
      }
    }
  }
  if (want(Suite::cor42)) {
    for (int N = 2; N <= options.N_max; ++N) {
      for (int j = -(N - 1); j <= -1; ++j) {
        single([&, N, j] { return verify_cor42(domain, j, N, tables.a, tables.higher); });
      }
    }
  }
  if (want(Suite::routes)) {
    tasks.emplace_back([&] { return check_a_routes(domain, options.n_max); });
    tasks.emplace_back([&] { return check_b_routes(domain, options.n_max); });
    single([&] { return check_bell_routes(domain, options.n_max); });
    single([&] { return check_stirling2_routes(domain, options.n_max); });
    single([&] { return check_stirling_limit(options.n_max); });
    single([&] { return check_a_limit(options.n_max); });
    single([&] { return check_classical_b(options.n_max); });
  }

  std::vector<std::vector<IdentityReport>> results(tasks.size());
  const unsigned workers = std::max(1U, std::min<unsigned>(options.threads, static_cast<unsigned>(tasks.size())));
  if (workers <= 1) {
    for (std::size_t t = 0; t < tasks.size(); ++t) results[t] = tasks[t]();
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(tasks.size());
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t t = next.fetch_add(1); t < tasks.size(); t = next.fetch_add(1)) {
          try {
            results[t] = tasks[t]();
          } catch (...) {
            errors[t] = std::current_exception();
          }
        }
      });
    }
    pool.clear();
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }

  std::vector<IdentityReport> reports;
  for (auto& r : results) {
    for (auto& report : r) reports.push_back(std::move(report));
  }
  return reports;
}

}  // namespace degbern
