#include "degbern/coeff_a.hpp"

#include "degbern/combinatorics.hpp"
#include "degbern/errors.hpp"

namespace degbern {

namespace {

Rational sign_of(int e) { return e % 2 == 0 ? Rational(1) : Rational(-1); }

void require_index(int i, int N) {
  if (N < 0 || i < 0 || i > N) {
    throw PreconditionError("a-coefficient index requires 0 <= i <= N (got i = " + std::to_string(i) +
                            ", N = " + std::to_string(N) + ")");
  }
}

Scalar stirling_form(const Domain& domain, int i, int N, const StirlingTable& scaled) {
  Scalar sum = domain.zero();
  for (int k = i; k <= N; ++k) {
    const Rational c = sign_of(k) * factorial(k) * binomial(k, i);
    sum += domain.lambda_power(static_cast<std::size_t>(k - i)) * scaled.at(N, k) * c;
  }
  return sum * sign_of(N);
}

}  // namespace

CoeffTable::CoeffTable(Domain domain, std::vector<std::vector<Scalar>> rows)
    : domain_(std::move(domain)), rows_(std::move(rows)) {
  for (std::size_t N = 0; N < rows_.size(); ++N) {
    if (rows_[N].size() != N + 1) throw PreconditionError("coefficient table row " + std::to_string(N) + " has wrong length");
    for (const auto& s : rows_[N]) domain_.check(s);
  }
}

const std::vector<Scalar>& CoeffTable::row(int N) const {
  if (N < 0 || N > max_N()) {
    throw PreconditionError("a-coefficient row " + std::to_string(N) + " outside table (max N = " +
                            std::to_string(max_N()) + ")");
  }
  return rows_[static_cast<std::size_t>(N)];
}

const Scalar& CoeffTable::at(int i, int N) const {
  const auto& r = row(N);
  require_index(i, N);
  return r[static_cast<std::size_t>(i)];
}

CoeffTable CoeffTable::with_entry(int i, int N, Scalar value) const {
  require_index(i, N);
  domain_.check(value);
  CoeffTable copy = *this;
  copy.rows_.at(static_cast<std::size_t>(N))[static_cast<std::size_t>(i)] = std::move(value);
  return copy;
}

CoeffTable a_by_recurrence(const Domain& domain, int N_max, const std::optional<ARecurrenceSeed>& seed) {
  if (N_max < 0) throw PreconditionError("a_by_recurrence requires N_max >= 0");
  std::vector<std::vector<Scalar>> rows;
  rows.push_back({domain.one()});
  if (N_max >= 1) {
    if (seed) {
      rows.push_back({seed->a0, seed->a1});
    } else {
      rows.push_back({domain.lambda(), domain.one()});
    }
  }
  for (int N = 1; N < N_max; ++N) {
    const auto& prev = rows.back();
    std::vector<Scalar> next;
    next.reserve(static_cast<std::size_t>(N) + 2);
    next.push_back((domain.lambda() + domain.constant(Rational(N))) * prev[0]);
    for (int i = 1; i <= N; ++i) {
      const Scalar factor = domain.constant(Rational(N)) + domain.lambda() * Rational(i + 1);
      next.push_back(factor * prev[static_cast<std::size_t>(i)] + prev[static_cast<std::size_t>(i - 1)] * Rational(i));
    }
    next.push_back(prev[static_cast<std::size_t>(N)] * Rational(N + 1));
    rows.push_back(std::move(next));
  }
  return {domain, std::move(rows)};
}

Scalar a_explicit_falling(const Domain& domain, int i, int N) {
  require_index(i, N);
  std::vector<Scalar> falling;
  falling.reserve(static_cast<std::size_t>(N) + 1);
  for (int l = 0; l <= N; ++l) falling.push_back(falling_factorial(domain.lambda() * Rational(l), N));
  Scalar inner = domain.zero();
  for (int k = i; k <= N; ++k) {
    const Rational cki = binomial(k, i);
    for (int l = 0; l <= k; ++l) {
      inner += falling[static_cast<std::size_t>(l)] * (sign_of(l) * cki * binomial(k, l));
    }
  }
  return domain.divide_by_lambda_power(inner, static_cast<std::size_t>(i)) * sign_of(N);
}

Scalar a_explicit_stirling(const Domain& domain, int i, int N) {
  require_index(i, N);
  return stirling_form(domain, i, N, scaled_degenerate_stirling_table(domain, N));
}

CoeffTable a_by_alternate_recurrence(const Domain& domain, int N_max) {
  std::vector<std::vector<Scalar>> rows;
  rows.push_back({domain.one()});
  for (int N = 1; N <= N_max; ++N) {
    std::vector<Scalar> row(static_cast<std::size_t>(N) + 1, domain.zero());
    row[0] = falling_factorial(domain.constant(Rational(N - 1)) + domain.lambda(), N);
    row[static_cast<std::size_t>(N)] = domain.constant(factorial(N));
    for (int i = 1; i <= N - 1; ++i) {
      const Scalar base = domain.constant(Rational(N - 1)) + domain.lambda() * Rational(i + 1);
      Scalar value = falling_factorial(base, N - i) * factorial(i);
      Scalar falling = domain.one();
      for (int l = 0; l <= N - i - 1; ++l) {
        if (l > 0) falling *= base - domain.constant(Rational(l - 1));
        value += falling * rows[static_cast<std::size_t>(N - l - 1)][static_cast<std::size_t>(i - 1)] * Rational(i);
      }
      row[static_cast<std::size_t>(i)] = value;
    }
    rows.push_back(std::move(row));
  }
  return {domain, std::move(rows)};
}

Scalar a_alternate_recurrence(const Domain& domain, int i, int N) {
  if (i < 1 || i > N - 1) {
    throw PreconditionError("a_alternate_recurrence is stated for 1 <= i <= N-1 (got i = " + std::to_string(i) +
                            ", N = " + std::to_string(N) + ")");
  }
  return a_by_alternate_recurrence(domain, N).at(i, N);
}

CoeffTable a_by_explicit_falling(const Domain& domain, int N_max) {
  std::vector<std::vector<Scalar>> rows;
  rows.push_back({domain.one()});
  for (int N = 1; N <= N_max; ++N) {
    std::vector<Scalar> row;
    for (int i = 0; i <= N; ++i) row.push_back(a_explicit_falling(domain, i, N));
    rows.push_back(std::move(row));
  }
  return {domain, std::move(rows)};
}

CoeffTable a_by_explicit_stirling(const Domain& domain, int N_max) {
  const StirlingTable scaled = scaled_degenerate_stirling_table(domain, std::max(N_max, 0));
  std::vector<std::vector<Scalar>> rows;
  rows.push_back({domain.one()});
  for (int N = 1; N <= N_max; ++N) {
    std::vector<Scalar> row;
    for (int i = 0; i <= N; ++i) row.push_back(stirling_form(domain, i, N, scaled));
    rows.push_back(std::move(row));
  }
  return {domain, std::move(rows)};
}

Rational a_limit_at_zero(int i, int N) {
  require_index(i, N);
  const StirlingTable s1 = stirling1_signed(Domain::evaluated(Rational(0)), N);
  return sign_of(N + i) * factorial(i) * s1.at(N, i).rational();
}

}  // namespace degbern
