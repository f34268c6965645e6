#pragma once

/**
 * @file scalar.hpp
 * @brief The coefficient domain shared by every computation.
 *
 * A Scalar is either a Rational (lambda fixed to a rational value) or a
 * LambdaPoly (lambda kept symbolic). The alternative is chosen once per
 * computation through a Domain; arithmetic between the two alternatives
 * throws DomainError.
 */

#include <cstddef>
#include <optional>
#include <string>
#include <variant>

#include "degbern/lambda_poly.hpp"
#include "degbern/rational.hpp"

namespace degbern {

class Scalar {
 public:
  Scalar() = default;  // rational zero
  Scalar(Rational r) : v_(std::move(r)) {}      // NOLINT(google-explicit-constructor)
  Scalar(LambdaPoly p) : v_(std::move(p)) {}    // NOLINT(google-explicit-constructor)

  [[nodiscard]] bool is_symbolic() const { return std::holds_alternative<LambdaPoly>(v_); }
  /// Throws DomainError if the scalar is symbolic.
  [[nodiscard]] const Rational& rational() const;
  /// Throws DomainError if the scalar is a plain rational.
  [[nodiscard]] const LambdaPoly& poly() const;

  [[nodiscard]] bool is_zero() const;
  /// Nonzero rational, or a nonzero constant polynomial.
  [[nodiscard]] bool is_unit() const;
  /// Throws DomainError unless is_unit().
  [[nodiscard]] Scalar inverse() const;

  /// Same alternative as `like`, holding c.
  static Scalar constant_like(const Scalar& like, const Rational& c);

  [[nodiscard]] std::string to_string() const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Rational& c);
  friend Scalar operator*(const Rational& c, const Scalar& a) { return a * c; }
  friend Scalar operator/(const Scalar& a, const Rational& c);

  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  /// Structural equality; throws DomainError across alternatives.
  friend bool operator==(const Scalar& a, const Scalar& b);

 private:
  std::variant<Rational, LambdaPoly> v_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// The active coefficient domain: lambda symbolic, or lambda = a fixed rational.
class Domain {
 public:
  static Domain symbolic() { return Domain(std::nullopt); }
  static Domain evaluated(Rational lambda) { return Domain(std::move(lambda)); }
  /// "sym" (or "symbolic") for the symbolic domain, otherwise a rational literal.
  static Domain parse(std::string_view text);

  [[nodiscard]] bool is_symbolic() const { return !value_.has_value(); }
  [[nodiscard]] const std::optional<Rational>& value() const { return value_; }
  [[nodiscard]] bool lambda_is_zero() const { return value_ && value_->is_zero(); }
  /// "sym" or the rational text of lambda.
  [[nodiscard]] std::string descriptor() const;

  [[nodiscard]] Scalar lambda() const;
  [[nodiscard]] Scalar constant(const Rational& c) const;
  [[nodiscard]] Scalar zero() const { return constant(Rational()); }
  [[nodiscard]] Scalar one() const { return constant(Rational(1)); }
  [[nodiscard]] Scalar lambda_power(std::size_t k) const;
  /// Maps a polynomial in lambda into this domain (evaluates when lambda is fixed).
  [[nodiscard]] Scalar from_poly(const LambdaPoly& p) const;
  /// Exact division by lambda^k: a verified coefficient shift when symbolic,
  /// ordinary division when lambda is a nonzero rational.
  [[nodiscard]] Scalar divide_by_lambda_power(const Scalar& s, std::size_t k) const;

  /// Throws DomainError when lambda is fixed to 0.
  void require_nonzero_lambda(std::string_view what) const;
  /// Throws DomainError if s does not belong to this domain's alternative.
  void check(const Scalar& s) const;

  friend bool operator==(const Domain&, const Domain&) = default;

 private:
  explicit Domain(std::optional<Rational> v) : value_(std::move(v)) {}
  std::optional<Rational> value_;
};

}  // namespace degbern
