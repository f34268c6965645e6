#include "degbern/combinatorics.hpp"

#include <numeric>

#include "degbern/errors.hpp"
#include "degbern/series.hpp"

namespace degbern {

Scalar falling_factorial(const Scalar& x, int n) {
  if (n < 0) throw PreconditionError("falling factorial of negative length");
  Scalar acc = Scalar::constant_like(x, Rational(1));
  for (int j = 0; j < n; ++j) acc *= x - Scalar::constant_like(x, Rational(j));
  return acc;
}

Scalar generalized_falling(const Domain& domain, const Scalar& x, int n) {
  if (n < 0) throw PreconditionError("generalized falling factorial of negative length");
  domain.check(x);
  Scalar acc = domain.one();
  for (int j = 0; j < n; ++j) acc *= x - domain.lambda() * Rational(j);
  return acc;
}

Rational binomial(int n, int k) {
  if (n < 0) throw PreconditionError("binomial with negative upper index");
  if (k < 0 || k > n) return Rational();
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(b);
}

Rational multinomial(int n, std::span<const int> parts) {
  long total = 0;
  for (int m : parts) {
    if (m < 0) throw PreconditionError("multinomial part is negative");
    total += m;
  }
  if (total != n) throw PreconditionError("multinomial parts do not sum to n");
  Rational r = factorial(n);
  for (int m : parts) r = r / factorial(m);
  return r;
}

StirlingTable::StirlingTable(StirlingKind kind, Domain domain, std::vector<std::vector<Scalar>> rows)
    : kind_(kind), domain_(std::move(domain)), rows_(std::move(rows)) {}

Scalar StirlingTable::at(int n, int k) const {
  if (n < 0 || n > n_max()) {
    throw PreconditionError("Stirling row " + std::to_string(n) + " outside table (n_max = " + std::to_string(n_max()) + ")");
  }
  if (k < 0 || k > n) return domain_.zero();
  return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

StirlingTable StirlingTable::with_entry(int n, int k, Scalar value) const {
  StirlingTable copy = *this;
  copy.rows_.at(static_cast<std::size_t>(n)).at(static_cast<std::size_t>(k)) = std::move(value);
  return copy;
}

StirlingTable stirling1_signed(const Domain& domain, int n_max) {
  std::vector<std::vector<Scalar>> rows;
  rows.push_back({domain.one()});
  for (int n = 0; n < n_max; ++n) {
    const auto& prev = rows.back();
    std::vector<Scalar> row(static_cast<std::size_t>(n) + 2, domain.zero());
    for (int k = 1; k <= n + 1; ++k) {
      Scalar v = prev[static_cast<std::size_t>(k - 1)];
      if (k <= n) v -= prev[static_cast<std::size_t>(k)] * Rational(n);
      row[static_cast<std::size_t>(k)] = v;
    }
    rows.push_back(std::move(row));
  }
  return {StirlingKind::first_signed, domain, std::move(rows)};
}

StirlingTable degenerate_stirling2(const Domain& domain, int n_max, Stirling2Route via) {
  std::vector<std::vector<Scalar>> rows(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) rows[static_cast<std::size_t>(n)].assign(static_cast<std::size_t>(n) + 1, domain.zero());

  if (via == Stirling2Route::generating_function) {
    const auto order = static_cast<std::size_t>(n_max) + 1;
    const TruncatedSeries e_minus_one = degenerate_exp_series(domain, order) - TruncatedSeries::one(domain, order);
    TruncatedSeries power = TruncatedSeries::one(domain, order);
    for (int k = 0; k <= n_max; ++k) {
      if (k > 0) power = power * e_minus_one;
      const Rational inv_kfact = factorial(k).inverse();
      for (int n = k; n <= n_max; ++n) {
        rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] =
            power[static_cast<std::size_t>(n)] * (factorial(n) * inv_kfact);
      }
    }
  } else {
    for (int n = 0; n <= n_max; ++n) {
      std::vector<Scalar> gen_falling;
      for (int l = 0; l <= n; ++l) gen_falling.push_back(generalized_falling(domain, domain.constant(Rational(l)), n));
      for (int k = 0; k <= n; ++k) {
        Scalar sum = domain.zero();
        for (int l = 0; l <= k; ++l) {
          const Rational c = (l % 2 == 0 ? binomial(k, l) : -binomial(k, l));
          sum += gen_falling[static_cast<std::size_t>(l)] * c;
        }
        const Rational pre = (k % 2 == 0 ? Rational(1) : Rational(-1)) / factorial(k);
        rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] = sum * pre;
      }
    }
  }
  return {StirlingKind::degenerate_second, domain, std::move(rows)};
}

Scalar bell_partial(const Domain& domain, int n, int k, std::span<const Scalar> xs, BellRoute via) {
  if (k < 0 || n < k) throw PreconditionError("bell_partial requires n >= k >= 0");
  if (k == 0) return n == 0 ? domain.one() : domain.zero();
  const auto needed = static_cast<std::size_t>(n - k + 1);
  if (xs.size() < needed) {
    throw PreconditionError("bell_partial(" + std::to_string(n) + "," + std::to_string(k) + ") needs " +
                            std::to_string(needed) + " arguments, got " + std::to_string(xs.size()));
  }
  for (std::size_t i = 0; i < needed; ++i) domain.check(xs[i]);

  if (via == BellRoute::partition_sum) {
    // x_l / l! raised to successive powers, built lazily per index.
    std::vector<Scalar> scaled;
    scaled.reserve(needed);
    for (std::size_t l = 0; l < needed; ++l) scaled.push_back(xs[l] / factorial(static_cast<int>(l) + 1));
    std::vector<std::vector<Scalar>> powers(needed);
    auto power_of = [&](std::size_t l, int e) -> const Scalar& {
      auto& p = powers[l];
      if (p.empty()) p.push_back(domain.one());
      while (static_cast<int>(p.size()) <= e) p.push_back(p.back() * scaled[l]);
      return p[static_cast<std::size_t>(e)];
    };
    Scalar sum = domain.zero();
    const Rational nfact = factorial(n);
    for_each_bell_partition(n, k, [&](const std::vector<int>& parts) {
      Rational coeff = nfact;
      Scalar term = domain.one();
      for (std::size_t l = 0; l < parts.size(); ++l) {
        if (parts[l] == 0) continue;
        coeff = coeff / factorial(parts[l]);
        term *= power_of(l, parts[l]);
      }
      sum += term * coeff;
    });
    return sum;
  }

  const auto order = static_cast<std::size_t>(n) + 1;
  std::vector<Scalar> inner(order, domain.zero());
  for (std::size_t i = 1; i <= needed; ++i) inner[i] = xs[i - 1] / factorial(static_cast<int>(i));
  const TruncatedSeries power = series_pow(TruncatedSeries(domain, std::move(inner)), static_cast<unsigned>(k));
  return power[static_cast<std::size_t>(n)] * (factorial(n) / factorial(k));
}

bool bell_scaling_check(const Domain& domain, int n, int k, const Scalar& a, const Scalar& b,
                        std::span<const Scalar> xs) {
  const auto needed = static_cast<std::size_t>(std::max(n - k + 1, 0));
  std::vector<Scalar> scaled;
  Scalar b_power = b;
  for (std::size_t i = 0; i < needed && i < xs.size(); ++i) {
    scaled.push_back(a * b_power * xs[i]);
    b_power *= b;
  }
  const Scalar lhs = bell_partial(domain, n, k, scaled, BellRoute::partition_sum);
  Scalar rhs = bell_partial(domain, n, k, xs, BellRoute::partition_sum);
  for (int i = 0; i < k; ++i) rhs *= a;
  for (int i = 0; i < n; ++i) rhs *= b;
  return lhs == rhs;
}

namespace {

/// [1, (lambda-1), (lambda-1)(lambda-2), ...] of the given length.
std::vector<Scalar> shifted_falling_arguments(const Domain& domain, int length) {
  std::vector<Scalar> xs;
  Scalar acc = domain.one();
  for (int i = 0; i < length; ++i) {
    if (i > 0) acc *= domain.lambda() - domain.constant(Rational(i));
    xs.push_back(acc);
  }
  return xs;
}

}  // namespace

Scalar scaled_degenerate_stirling(const Domain& domain, int N, int k) {
  if (N < 0) throw PreconditionError("scaled_degenerate_stirling requires N >= 0");
  if (k < 0 || k > N) return domain.zero();
  const auto xs = shifted_falling_arguments(domain, N - k + 1);
  return bell_partial(domain, N, k, xs, BellRoute::partition_sum);
}

Scalar scaled_degenerate_stirling_gf(const Domain& domain, int N, int k) {
  if (N < 0) throw PreconditionError("scaled_degenerate_stirling_gf requires N >= 0");
  if (k < 0 || k > N) return domain.zero();
  domain.require_nonzero_lambda("the generating-function route for lambda^{N-k} S_{2,1/lambda}(N,k)");
  const auto order = static_cast<std::size_t>(N) + 1;
  const TruncatedSeries base = binom_lambda_series(domain, order) - TruncatedSeries::one(domain, order);
  const Scalar coeff = series_pow(base, static_cast<unsigned>(k))[static_cast<std::size_t>(N)] * (factorial(N) / factorial(k));
  return domain.divide_by_lambda_power(coeff, static_cast<std::size_t>(k));
}

StirlingTable scaled_degenerate_stirling_table(const Domain& domain, int n_max) {
  std::vector<std::vector<Scalar>> rows;
  for (int n = 0; n <= n_max; ++n) {
    std::vector<Scalar> row;
    for (int k = 0; k <= n; ++k) row.push_back(scaled_degenerate_stirling(domain, n, k));
    rows.push_back(std::move(row));
  }
  return {StirlingKind::scaled_degenerate_second, domain, std::move(rows)};
}

}  // namespace degbern
