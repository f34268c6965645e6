#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "degbern/rational.hpp"

namespace degbern {

/// Polynomial in the formal indeterminate lambda with rational coefficients.
///
/// coeffs()[i] is the coefficient of lambda^i. The highest stored coefficient
/// is always nonzero; the zero polynomial stores nothing. Equality is
/// therefore coefficient-wise.
class LambdaPoly {
 public:
  LambdaPoly() = default;
  explicit LambdaPoly(std::vector<Rational> coeffs);
  LambdaPoly(std::initializer_list<Rational> coeffs) : LambdaPoly(std::vector<Rational>(coeffs)) {}
  static LambdaPoly constant(const Rational& c);
  /// c * lambda^k
  static LambdaPoly monomial(const Rational& c, std::size_t k);
  static LambdaPoly lambda() { return monomial(Rational(1), 1); }

  [[nodiscard]] const std::vector<Rational>& coeffs() const { return coeffs_; }
  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] bool is_constant() const { return coeffs_.size() <= 1; }
  /// -1 for the zero polynomial.
  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Zero beyond the degree.
  [[nodiscard]] Rational coeff(std::size_t i) const;

  /// Exact division by lambda^k. Throws InternalError if any of the k lowest
  /// coefficients is nonzero.
  [[nodiscard]] LambdaPoly divided_by_lambda_power(std::size_t k) const;
  [[nodiscard]] LambdaPoly times_lambda_power(std::size_t k) const;

  /// Ascending-power text, e.g. "-1/6+1/6*lambda^2"; "0" for zero.
  [[nodiscard]] std::string to_string() const;

  LambdaPoly operator-() const;
  friend LambdaPoly operator+(const LambdaPoly& a, const LambdaPoly& b);
  friend LambdaPoly operator-(const LambdaPoly& a, const LambdaPoly& b);
  friend LambdaPoly operator*(const LambdaPoly& a, const LambdaPoly& b);
  friend LambdaPoly operator*(const LambdaPoly& a, const Rational& c);
  friend LambdaPoly operator*(const Rational& c, const LambdaPoly& a) { return a * c; }
  /// Division by a nonzero rational constant only.
  friend LambdaPoly operator/(const LambdaPoly& a, const Rational& c);

  friend bool operator==(const LambdaPoly& a, const LambdaPoly& b) = default;

 private:
  void trim();

  std::vector<Rational> coeffs_;
};

/// Substitutes lambda := x.
Rational poly_eval(const LambdaPoly& p, const Rational& x);

std::ostream& operator<<(std::ostream& os, const LambdaPoly& p);

}  // namespace degbern
