#include "degbern/bernoulli.hpp"

#include "degbern/combinatorics.hpp"
#include "degbern/errors.hpp"
#include "degbern/series.hpp"

namespace degbern {

namespace {

Rational sign_of(int e) { return e % 2 == 0 ? Rational(1) : Rational(-1); }

void require_n(int n, const char* what) {
  if (n < 0) throw PreconditionError(std::string(what) + " requires n >= 0");
}

/// (1)_{m,lambda} for m = 0..count-1.
std::vector<Scalar> unit_generalized_falling(const Domain& domain, int count) {
  std::vector<Scalar> v;
  Scalar acc = domain.one();
  for (int m = 0; m < count; ++m) {
    if (m > 0) acc *= domain.one() - domain.lambda() * Rational(m - 1);
    v.push_back(acc);
  }
  return v;
}

/// Depth-first walk over compositions of `remaining` into exactly `parts_left`
/// positive parts, smallest first part first.
void sum_compositions(const std::vector<Scalar>& weight, int remaining, int parts_left, const Scalar& prefix, Scalar& sum) {
  if (parts_left == 0) {
    if (remaining == 0) sum += prefix;
    return;
  }
  for (int m = 1; m <= remaining - (parts_left - 1); ++m) {
    sum_compositions(weight, remaining - m, parts_left - 1, prefix * weight[static_cast<std::size_t>(m)], sum);
  }
}

}  // namespace

std::string_view to_string(BernoulliProvenance p) {
  switch (p) {
    case BernoulliProvenance::series: return "series";
    case BernoulliProvenance::recurrence: return "recurrence";
    case BernoulliProvenance::multinomial: return "multinomial";
    case BernoulliProvenance::explicit_form: return "explicit";
  }
  return "unknown";
}

std::string_view to_string(ExplicitForm f) {
  switch (f) {
    case ExplicitForm::a_form: return "a_form";
    case ExplicitForm::stirling_form: return "stirling_form";
    case ExplicitForm::falling_form: return "falling_form";
  }
  return "unknown";
}

BernoulliRow b_via_series(const Domain& domain, int n_max) {
  require_n(n_max, "b_via_series");
  const auto order = static_cast<std::size_t>(n_max) + 1;
  const TruncatedSeries inv = series_reciprocal(degenerate_log_quotient_series(domain, order));
  BernoulliRow row{1, {}, BernoulliProvenance::series};
  for (int n = 0; n <= n_max; ++n) row.values.push_back(inv[static_cast<std::size_t>(n)] * factorial(n));
  return row;
}

BernoulliRow b_via_recurrence(const Domain& domain, int n_max) {
  require_n(n_max, "b_via_recurrence");
  domain.require_nonzero_lambda("b_{n,lambda}");
  std::vector<Scalar> falling;  // (lambda - 1)_m
  for (int m = 0; m <= n_max; ++m) falling.push_back(falling_factorial(domain.lambda() - domain.one(), m));
  BernoulliRow row{1, {domain.one()}, BernoulliProvenance::recurrence};
  for (int n = 1; n <= n_max; ++n) {
    Scalar acc = domain.zero();
    for (int l = 0; l < n; ++l) {
      const Rational c = binomial(n, l) / Rational(n - l + 1);
      acc += falling[static_cast<std::size_t>(n - l)] * row.values[static_cast<std::size_t>(l)] * c;
    }
    row.values.push_back(-acc);
  }
  return row;
}

Scalar b_via_multinomial(const Domain& domain, int n) {
  require_n(n, "b_via_multinomial");
  if (n > kMultinomialMaxN) {
    throw PreconditionError("b_via_multinomial enumerates 2^(n-1) compositions; n = " + std::to_string(n) +
                            " exceeds the cap of " + std::to_string(kMultinomialMaxN));
  }
  domain.require_nonzero_lambda("b_{n,lambda}");
  if (n == 0) return domain.one();
  // weight[m] = (lambda-1)_m / ((m+1) m!); the multinomial n!/prod m_j! is
  // distributed over the parts and restored by the final n!.
  std::vector<Scalar> weight;
  for (int m = 0; m <= n; ++m) {
    weight.push_back(falling_factorial(domain.lambda() - domain.one(), m) / (Rational(m + 1) * factorial(m)));
  }
  Scalar total = domain.zero();
  for (int k = 1; k <= n; ++k) {
    Scalar sum = domain.zero();
    sum_compositions(weight, n, k, domain.one(), sum);
    total += sum * sign_of(k);
  }
  return total * factorial(n);
}

Scalar b_via_explicit(const Domain& domain, int n, ExplicitForm form, const CoeffTable& a) {
  if (n < 1) throw PreconditionError("the explicit forms of b_{n,lambda} are stated for n >= 1");
  domain.require_nonzero_lambda("b_{n,lambda}");
  const auto unit_falling = unit_generalized_falling(domain, n + 2);
  const Scalar head = unit_falling[static_cast<std::size_t>(n + 1)] / Rational(n + 1);
  auto weight = [&](int i) { return unit_falling[static_cast<std::size_t>(i + 1)] / factorial(i + 1); };

  switch (form) {
    case ExplicitForm::a_form: {
      Scalar sum = head;
      for (int i = 0; i <= n - 1; ++i) {
        sum += weight(i) * (a.at(i, n) - a.at(i, n - 1) * Rational(n));
      }
      return sum * sign_of(n);
    }
    case ExplicitForm::stirling_form: {
      const StirlingTable scaled = scaled_degenerate_stirling_table(domain, n);
      Scalar sum = head * sign_of(n);
      for (int i = 0; i <= n - 1; ++i) {
        Scalar inner = domain.zero();
        for (int k = i; k <= n; ++k) {
          // scaled(n-1, n) is zero: S_{2,1/lambda}(n-1,n) = 0.
          const Scalar bracket = scaled.at(n, k) + scaled.at(n - 1, k) * Rational(n);
          inner += domain.lambda_power(static_cast<std::size_t>(k - i)) * bracket *
                   (sign_of(k) * factorial(k) * binomial(k, i));
        }
        sum += weight(i) * inner;
      }
      return sum;
    }
    case ExplicitForm::falling_form: {
      std::vector<Scalar> plain;    // (lambda l)_n
      std::vector<Scalar> shifted;  // (lambda l + 1)_n
      for (int l = 0; l <= n; ++l) {
        plain.push_back(falling_factorial(domain.lambda() * Rational(l), n));
        shifted.push_back(falling_factorial(domain.lambda() * Rational(l) + domain.one(), n));
      }
      Scalar sum = head * sign_of(n);
      for (int i = 0; i <= n - 1; ++i) {
        Scalar inner = domain.zero();
        const Rational cni = binomial(n, i);
        for (int l = 0; l <= n; ++l) inner += plain[static_cast<std::size_t>(l)] * (sign_of(l) * cni * binomial(n, l));
        for (int k = i; k <= n - 1; ++k) {
          const Rational cki = binomial(k, i);
          for (int l = 0; l <= k; ++l) {
            inner += shifted[static_cast<std::size_t>(l)] * (sign_of(l) * cki * binomial(k, l));
          }
        }
        sum += weight(i) * domain.divide_by_lambda_power(inner, static_cast<std::size_t>(i));
      }
      return sum;
    }
  }
  throw PreconditionError("unknown explicit form");
}

Scalar b_via_explicit(const Domain& domain, int n, ExplicitForm form) {
  return b_via_explicit(domain, n, form, a_by_recurrence(domain, std::max(n, 1)));
}

BernoulliRow b_explicit_row(const Domain& domain, int n_max, ExplicitForm form) {
  require_n(n_max, "b_explicit_row");
  domain.require_nonzero_lambda("b_{n,lambda}");
  const CoeffTable a = a_by_recurrence(domain, std::max(n_max, 1));
  BernoulliRow row{1, {domain.one()}, BernoulliProvenance::explicit_form};
  for (int n = 1; n <= n_max; ++n) row.values.push_back(b_via_explicit(domain, n, form, a));
  return row;
}

BernoulliRow b_higher_order(const Domain& domain, int r, int n_max) {
  if (r < 1) throw PreconditionError("b_higher_order requires r >= 1");
  require_n(n_max, "b_higher_order");
  const auto order = static_cast<std::size_t>(n_max) + 1;
  const TruncatedSeries base = series_reciprocal(degenerate_log_quotient_series(domain, order));
  const TruncatedSeries power = series_pow(base, static_cast<unsigned>(r));
  BernoulliRow row{r, {}, BernoulliProvenance::series};
  for (int n = 0; n <= n_max; ++n) row.values.push_back(power[static_cast<std::size_t>(n)] * factorial(n));
  return row;
}

std::vector<Rational> classical_b_via_limit(int n_max) {
  const BernoulliRow sym = b_via_series(Domain::symbolic(), n_max);
  std::vector<Rational> out;
  for (const auto& v : sym.values) out.push_back(poly_eval(v.poly(), Rational(0)));
  return out;
}

std::vector<Rational> classical_b_via_stirling(int n_max) {
  require_n(n_max, "classical_b_via_stirling");
  const StirlingTable s1 = stirling1_signed(Domain::evaluated(Rational(0)), n_max);
  std::vector<Rational> out{Rational(1)};
  for (int n = 1; n <= n_max; ++n) {
    Rational sum;
    for (int i = 0; i <= n; ++i) {
      // s(n-1, n) = 0.
      const Rational bracket = s1.at(n, i).rational() + Rational(n) * s1.at(n - 1, i).rational();
      sum += sign_of(i) / Rational(i + 1) * bracket;
    }
    out.push_back(sum);
  }
  return out;
}

std::vector<Rational> classical_b(int n_max) {
  auto limit = classical_b_via_limit(n_max);
  const auto stirling = classical_b_via_stirling(n_max);
  for (int n = 0; n <= n_max; ++n) {
    if (!(limit[static_cast<std::size_t>(n)] == stirling[static_cast<std::size_t>(n)])) {
      throw InternalError("classical b_" + std::to_string(n) + ": limit route " + limit[static_cast<std::size_t>(n)].to_string() +
                          " != Stirling route " + stirling[static_cast<std::size_t>(n)].to_string());
    }
  }
  return limit;
}

}  // namespace degbern
