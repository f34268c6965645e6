#pragma once

/**
 * @file series.hpp
 * @brief Truncated formal power series and Laurent series in t over Scalar.
 *
 * A TruncatedSeries of order M knows the coefficients of t^0 .. t^{M-1}
 * exactly and nothing beyond. Every operation returns the largest order its
 * inputs justify, never more.
 *
 * A LaurentSeries is t^{-p} * G(t). In canonical form either p = 0 or G(0) != 0;
 * the series is exact for every exponent below precision_end() = order(G) - p.
 */

#include <cstddef>
#include <optional>
#include <vector>

#include "degbern/scalar.hpp"

namespace degbern {

class TruncatedSeries {
 public:
  /// All coefficients must belong to `domain`.
  TruncatedSeries(Domain domain, std::vector<Scalar> coeffs);

  static TruncatedSeries zero(const Domain& domain, std::size_t order);
  static TruncatedSeries one(const Domain& domain, std::size_t order);
  /// An exact polynomial viewed at truncation `order` (padded or cut).
  static TruncatedSeries polynomial(const Domain& domain, std::vector<Scalar> coeffs, std::size_t order);

  [[nodiscard]] const Domain& domain() const { return domain_; }
  [[nodiscard]] std::size_t order() const { return coeffs_.size(); }
  [[nodiscard]] const std::vector<Scalar>& coeffs() const { return coeffs_; }
  /// Throws PreconditionError at or beyond the truncation order.
  [[nodiscard]] const Scalar& operator[](std::size_t n) const;

  [[nodiscard]] TruncatedSeries truncated(std::size_t order) const;
  /// Multiplication by t^k; the order grows by k.
  [[nodiscard]] TruncatedSeries times_t_power(std::size_t k) const;

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b);

 private:
  Domain domain_;
  std::vector<Scalar> coeffs_;
};

TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_scale(const TruncatedSeries& a, const Scalar& c);
/// Requires a(0) invertible in the domain; throws DomainError otherwise.
TruncatedSeries series_reciprocal(const TruncatedSeries& a);
TruncatedSeries series_pow(const TruncatedSeries& a, unsigned k);
/// Order drops by one. Throws PreconditionError on an order-0 input.
TruncatedSeries series_derivative(const TruncatedSeries& a);

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) { return series_add(a, b); }
inline TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) { return series_sub(a, b); }
inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) { return series_mul(a, b); }

class LaurentSeries {
 public:
  /// Canonicalizes: leading zero body coefficients are absorbed into the pole.
  LaurentSeries(std::size_t pole, TruncatedSeries body);
  static LaurentSeries from_series(TruncatedSeries body) { return {0, std::move(body)}; }

  [[nodiscard]] std::size_t pole() const { return pole_; }
  [[nodiscard]] const TruncatedSeries& body() const { return body_; }
  [[nodiscard]] const Domain& domain() const { return body_.domain(); }
  [[nodiscard]] long min_exponent() const { return -static_cast<long>(pole_); }
  /// Coefficients are exact for every exponent strictly below this bound.
  [[nodiscard]] long precision_end() const { return static_cast<long>(body_.order()) - static_cast<long>(pole_); }
  /// Zero below min_exponent(); throws PreconditionError at or past precision_end().
  [[nodiscard]] Scalar coefficient(long exponent) const;

 private:
  std::size_t pole_;
  TruncatedSeries body_;
};

LaurentSeries laurent_add(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries laurent_sub(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries laurent_mul(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries laurent_scale(const LaurentSeries& a, const Scalar& c);
LaurentSeries laurent_pow(const LaurentSeries& a, unsigned k);
/// d/dt (t^{-p} G) = t^{-(p+1)} (t G' - p G); precision_end drops by one.
LaurentSeries laurent_derivative(const LaurentSeries& a);
/// Exact multiplication by t^k for any integer k.
LaurentSeries laurent_times_t_power(const LaurentSeries& a, long k);

/// Equality over the common known exponent range.
bool laurent_equal(const LaurentSeries& a, const LaurentSeries& b);
/// First exponent in [min, common precision_end) where a and b differ.
std::optional<long> laurent_first_difference(const LaurentSeries& a, const LaurentSeries& b);

// Generating functions ------------------------------------------------------

/// (1+t)^lambda: coefficient of t^n is (lambda)_n / n!.
TruncatedSeries binom_lambda_series(const Domain& domain, std::size_t order);

/// e_lambda(t) = (1 + lambda t)^{1/lambda}: coefficient of t^n is (1)_{n,lambda} / n!.
TruncatedSeries degenerate_exp_series(const Domain& domain, std::size_t order);

/// ((1+t)^lambda - 1) / (lambda t) = log_lambda(1+t) / t: coefficient of t^n is
/// (lambda - 1)_n / (n+1)!. Undefined at lambda = 0.
TruncatedSeries degenerate_log_quotient_series(const Domain& domain, std::size_t order);

/// F(t; lambda) = 1 / log_lambda(1+t): pole 1, body coefficient n = b_{n,lambda} / n!.
LaurentSeries F_laurent(const Domain& domain, std::size_t order);

/// log(1+t) / t in the rational domain: coefficient of t^m is (-1)^m / (m+1).
TruncatedSeries classical_log_quotient_series(std::size_t order);

/// 1 / log(1+t) as a Laurent series with pole 1 over the rationals.
LaurentSeries classical_F_laurent(std::size_t order);

}  // namespace degbern
