#pragma once

/**
 * @file rational.hpp
 * @brief Arbitrary-precision exact rationals.
 *
 * Thin value type over GMP's mpq_class. Every instance is kept in canonical
 * form: positive denominator, numerator and denominator coprime, zero as 0/1.
 * Textual form is "p/q", or "p" when q = 1.
 */

#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace degbern {

class Rational {
 public:
  Rational() = default;
  Rational(int v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const mpz_class& integer) : q_(integer) {}
  /// Throws DomainError when den == 0.
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(mpq_class q);

  /// Accepts `[-]digits` or `[-]digits/digits`.
  static Rational parse(std::string_view text);

  [[nodiscard]] const mpq_class& value() const { return q_; }
  [[nodiscard]] mpz_class numerator() const { return q_.get_num(); }
  [[nodiscard]] mpz_class denominator() const { return q_.get_den(); }
  [[nodiscard]] bool is_zero() const { return sgn(q_) == 0; }
  [[nodiscard]] bool is_integer() const { return q_.get_den() == 1; }
  [[nodiscard]] int sign() const { return sgn(q_); }
  [[nodiscard]] std::string to_string() const;

  /// Throws DomainError on zero.
  [[nodiscard]] Rational inverse() const;
  [[nodiscard]] Rational pow(unsigned exponent) const;

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
  /// Throws DomainError when b == 0.
  friend Rational operator/(const Rational& a, const Rational& b);

  Rational& operator+=(const Rational& b) {
    q_ += b.q_;
    return *this;
  }
  Rational& operator-=(const Rational& b) {
    q_ -= b.q_;
    return *this;
  }
  Rational& operator*=(const Rational& b) {
    q_ *= b.q_;
    return *this;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

 private:
  mpq_class q_;
};

/// Parses the canonical textual form; see Rational::parse.
Rational rational_from_string(std::string_view text);

/// n! as an exact rational. Throws PreconditionError for negative n.
Rational factorial(int n);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace degbern
