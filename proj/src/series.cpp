#include "degbern/series.hpp"

#include <algorithm>

#include "degbern/errors.hpp"

namespace degbern {

namespace {

void require_same_domain(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (!(a.domain() == b.domain())) {
    throw DomainError("series domain mismatch: " + a.domain().descriptor() + " vs " + b.domain().descriptor());
  }
}

}  // namespace

TruncatedSeries::TruncatedSeries(Domain domain, std::vector<Scalar> coeffs)
    : domain_(std::move(domain)), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) domain_.check(c);
}

TruncatedSeries TruncatedSeries::zero(const Domain& domain, std::size_t order) {
  return {domain, std::vector<Scalar>(order, domain.zero())};
}

TruncatedSeries TruncatedSeries::one(const Domain& domain, std::size_t order) {
  auto s = zero(domain, order);
  if (order > 0) s.coeffs_[0] = domain.one();
  return s;
}

TruncatedSeries TruncatedSeries::polynomial(const Domain& domain, std::vector<Scalar> coeffs, std::size_t order) {
  coeffs.resize(order, domain.zero());
  return {domain, std::move(coeffs)};
}

const Scalar& TruncatedSeries::operator[](std::size_t n) const {
  if (n >= coeffs_.size()) {
    throw PreconditionError("coefficient t^" + std::to_string(n) + " is beyond truncation order " +
                            std::to_string(coeffs_.size()));
  }
  return coeffs_[n];
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const {
  if (order >= coeffs_.size()) return *this;
  return {domain_, std::vector<Scalar>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order))};
}

TruncatedSeries TruncatedSeries::times_t_power(std::size_t k) const {
  std::vector<Scalar> v(k, domain_.zero());
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return {domain_, std::move(v)};
}

bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
  return a.domain_ == b.domain_ && a.coeffs_ == b.coeffs_;
}

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_domain(a, b);
  const std::size_t m = std::min(a.order(), b.order());
  std::vector<Scalar> v;
  v.reserve(m);
  for (std::size_t n = 0; n < m; ++n) v.push_back(a.coeffs()[n] + b.coeffs()[n]);
  return {a.domain(), std::move(v)};
}

TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_domain(a, b);
  const std::size_t m = std::min(a.order(), b.order());
  std::vector<Scalar> v;
  v.reserve(m);
  for (std::size_t n = 0; n < m; ++n) v.push_back(a.coeffs()[n] - b.coeffs()[n]);
  return {a.domain(), std::move(v)};
}

TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b) {
  require_same_domain(a, b);
  const std::size_t m = std::min(a.order(), b.order());
  std::vector<Scalar> v(m, a.domain().zero());
  for (std::size_t i = 0; i < m; ++i) {
    if (a.coeffs()[i].is_zero()) continue;
    for (std::size_t j = 0; i + j < m; ++j) {
      if (b.coeffs()[j].is_zero()) continue;
      v[i + j] += a.coeffs()[i] * b.coeffs()[j];
    }
  }
  return {a.domain(), std::move(v)};
}

TruncatedSeries series_scale(const TruncatedSeries& a, const Scalar& c) {
  a.domain().check(c);
  std::vector<Scalar> v;
  v.reserve(a.order());
  for (const auto& x : a.coeffs()) v.push_back(x * c);
  return {a.domain(), std::move(v)};
}

TruncatedSeries series_reciprocal(const TruncatedSeries& a) {
  const std::size_t m = a.order();
  if (m == 0) return a;
  if (!a.coeffs()[0].is_unit()) {
    throw DomainError("series with constant term " + a.coeffs()[0].to_string() +
                      " has no reciprocal; it has a pole at t = 0");
  }
  const Scalar inv0 = a.coeffs()[0].inverse();
  std::vector<Scalar> r;
  r.reserve(m);
  r.push_back(inv0);
  for (std::size_t n = 1; n < m; ++n) {
    Scalar acc = a.domain().zero();
    for (std::size_t k = 1; k <= n; ++k) {
      if (a.coeffs()[k].is_zero()) continue;
      acc += a.coeffs()[k] * r[n - k];
    }
    r.push_back(-(acc * inv0));
  }
  return {a.domain(), std::move(r)};
}

TruncatedSeries series_pow(const TruncatedSeries& a, unsigned k) {
  TruncatedSeries result = TruncatedSeries::one(a.domain(), a.order());
  TruncatedSeries base = a;
  while (k > 0) {
    if (k & 1U) result = series_mul(result, base);
    k >>= 1U;
    if (k > 0) base = series_mul(base, base);
  }
  return result;
}

TruncatedSeries series_derivative(const TruncatedSeries& a) {
  if (a.order() == 0) throw PreconditionError("derivative of an order-0 series");
  std::vector<Scalar> v;
  v.reserve(a.order() - 1);
  for (std::size_t n = 1; n < a.order(); ++n) v.push_back(a.coeffs()[n] * Rational(static_cast<long>(n)));
  return {a.domain(), std::move(v)};
}

LaurentSeries::LaurentSeries(std::size_t pole, TruncatedSeries body) : pole_(pole), body_(std::move(body)) {
  std::size_t lead = 0;
  while (lead < pole_ && lead < body_.order() && body_.coeffs()[lead].is_zero()) ++lead;
  if (lead > 0) {
    body_ = TruncatedSeries(body_.domain(), std::vector<Scalar>(body_.coeffs().begin() + static_cast<std::ptrdiff_t>(lead),
                                                                body_.coeffs().end()));
    pole_ -= lead;
  }
}

Scalar LaurentSeries::coefficient(long exponent) const {
  if (exponent >= precision_end()) {
    throw PreconditionError("coefficient t^" + std::to_string(exponent) + " is beyond the known range (< t^" +
                            std::to_string(precision_end()) + ")");
  }
  if (exponent < min_exponent()) return domain().zero();
  return body_.coeffs()[static_cast<std::size_t>(exponent + static_cast<long>(pole_))];
}

LaurentSeries laurent_add(const LaurentSeries& a, const LaurentSeries& b) {
  if (a.pole() >= b.pole()) {
    return {a.pole(), series_add(a.body(), b.body().times_t_power(a.pole() - b.pole()))};
  }
  return {b.pole(), series_add(a.body().times_t_power(b.pole() - a.pole()), b.body())};
}

LaurentSeries laurent_sub(const LaurentSeries& a, const LaurentSeries& b) {
  return laurent_add(a, laurent_scale(b, -b.domain().one()));
}

LaurentSeries laurent_mul(const LaurentSeries& a, const LaurentSeries& b) {
  return {a.pole() + b.pole(), series_mul(a.body(), b.body())};
}

LaurentSeries laurent_scale(const LaurentSeries& a, const Scalar& c) { return {a.pole(), series_scale(a.body(), c)}; }

LaurentSeries laurent_pow(const LaurentSeries& a, unsigned k) {
  return {a.pole() * k, series_pow(a.body(), k)};
}

LaurentSeries laurent_derivative(const LaurentSeries& a) {
  const auto& g = a.body();
  const long p = static_cast<long>(a.pole());
  std::vector<Scalar> v;
  v.reserve(g.order());
  for (std::size_t n = 0; n < g.order(); ++n) v.push_back(g.coeffs()[n] * Rational(static_cast<long>(n) - p));
  return {a.pole() + 1, TruncatedSeries(g.domain(), std::move(v))};
}

LaurentSeries laurent_times_t_power(const LaurentSeries& a, long k) {
  const long p = static_cast<long>(a.pole());
  if (k <= p) return {static_cast<std::size_t>(p - k), a.body()};
  return {0, a.body().times_t_power(static_cast<std::size_t>(k - p))};
}

std::optional<long> laurent_first_difference(const LaurentSeries& a, const LaurentSeries& b) {
  const long lo = std::min(a.min_exponent(), b.min_exponent());
  const long hi = std::min(a.precision_end(), b.precision_end());
  for (long e = lo; e < hi; ++e) {
    if (!(a.coefficient(e) == b.coefficient(e))) return e;
  }
  return std::nullopt;
}

bool laurent_equal(const LaurentSeries& a, const LaurentSeries& b) { return !laurent_first_difference(a, b); }

TruncatedSeries binom_lambda_series(const Domain& domain, std::size_t order) {
  std::vector<Scalar> v;
  v.reserve(order);
  Scalar c = domain.one();
  for (std::size_t n = 0; n < order; ++n) {
    if (n > 0) c = c * (domain.lambda() - domain.constant(Rational(static_cast<long>(n) - 1))) / Rational(static_cast<long>(n));
    v.push_back(c);
  }
  return {domain, std::move(v)};
}

TruncatedSeries degenerate_exp_series(const Domain& domain, std::size_t order) {
  std::vector<Scalar> v;
  v.reserve(order);
  Scalar c = domain.one();
  for (std::size_t n = 0; n < order; ++n) {
    if (n > 0) {
      c = c * (domain.one() - domain.lambda() * Rational(static_cast<long>(n) - 1)) / Rational(static_cast<long>(n));
    }
    v.push_back(c);
  }
  return {domain, std::move(v)};
}

TruncatedSeries degenerate_log_quotient_series(const Domain& domain, std::size_t order) {
  domain.require_nonzero_lambda("log_lambda(1+t)/t");
  std::vector<Scalar> v;
  v.reserve(order);
  Scalar c = domain.one();
  for (std::size_t n = 0; n < order; ++n) {
    if (n > 0) {
      c = c * (domain.lambda() - domain.constant(Rational(static_cast<long>(n)))) / Rational(static_cast<long>(n) + 1);
    }
    v.push_back(c);
  }
  return {domain, std::move(v)};
}

LaurentSeries F_laurent(const Domain& domain, std::size_t order) {
  domain.require_nonzero_lambda("F(t; lambda)");
  return {1, series_reciprocal(degenerate_log_quotient_series(domain, order))};
}

TruncatedSeries classical_log_quotient_series(std::size_t order) {
  const Domain domain = Domain::evaluated(Rational(0));
  std::vector<Scalar> v;
  v.reserve(order);
  for (std::size_t m = 0; m < order; ++m) {
    const long sign = m % 2 == 0 ? 1 : -1;
    v.emplace_back(Rational(mpz_class(sign), mpz_class(static_cast<long>(m) + 1)));
  }
  return {domain, std::move(v)};
}

LaurentSeries classical_F_laurent(std::size_t order) { return {1, series_reciprocal(classical_log_quotient_series(order))}; }

}  // namespace degbern
