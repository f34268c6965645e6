#include "degbern/scalar.hpp"

#include <ostream>

#include "degbern/errors.hpp"

namespace degbern {

namespace {

[[noreturn]] void mismatch() { throw DomainError("scalar domain mismatch: rational mixed with lambda polynomial"); }

}  // namespace

const Rational& Scalar::rational() const {
  if (const auto* r = std::get_if<Rational>(&v_)) return *r;
  throw DomainError("expected a rational scalar, found a lambda polynomial");
}

const LambdaPoly& Scalar::poly() const {
  if (const auto* p = std::get_if<LambdaPoly>(&v_)) return *p;
  throw DomainError("expected a lambda polynomial, found a rational scalar");
}

bool Scalar::is_zero() const {
  return std::visit([](const auto& x) { return x.is_zero(); }, v_);
}

bool Scalar::is_unit() const {
  if (const auto* p = std::get_if<LambdaPoly>(&v_)) return p->degree() == 0;
  return !std::get<Rational>(v_).is_zero();
}

Scalar Scalar::inverse() const {
  if (!is_unit()) throw DomainError("scalar " + to_string() + " is not invertible");
  if (const auto* p = std::get_if<LambdaPoly>(&v_)) return LambdaPoly::constant(p->coeff(0).inverse());
  return std::get<Rational>(v_).inverse();
}

Scalar Scalar::constant_like(const Scalar& like, const Rational& c) {
  if (like.is_symbolic()) return LambdaPoly::constant(c);
  return c;
}

std::string Scalar::to_string() const {
  return std::visit([](const auto& x) { return x.to_string(); }, v_);
}

Scalar Scalar::operator-() const {
  return std::visit([](const auto& x) { return Scalar(-x); }, v_);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.v_.index() != b.v_.index()) mismatch();
  if (a.is_symbolic()) return std::get<LambdaPoly>(a.v_) + std::get<LambdaPoly>(b.v_);
  return std::get<Rational>(a.v_) + std::get<Rational>(b.v_);
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  if (a.v_.index() != b.v_.index()) mismatch();
  if (a.is_symbolic()) return std::get<LambdaPoly>(a.v_) - std::get<LambdaPoly>(b.v_);
  return std::get<Rational>(a.v_) - std::get<Rational>(b.v_);
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.v_.index() != b.v_.index()) mismatch();
  if (a.is_symbolic()) return std::get<LambdaPoly>(a.v_) * std::get<LambdaPoly>(b.v_);
  return std::get<Rational>(a.v_) * std::get<Rational>(b.v_);
}

Scalar operator*(const Scalar& a, const Rational& c) {
  return std::visit([&](const auto& x) { return Scalar(x * c); }, a.v_);
}

Scalar operator/(const Scalar& a, const Rational& c) {
  return std::visit([&](const auto& x) { return Scalar(x / c); }, a.v_);
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.v_.index() != b.v_.index()) mismatch();
  return a.v_ == b.v_;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

Domain Domain::parse(std::string_view text) {
  if (text == "sym" || text == "symbolic") return symbolic();
  return evaluated(Rational::parse(text));
}

std::string Domain::descriptor() const { return value_ ? value_->to_string() : std::string("sym"); }

Scalar Domain::lambda() const {
  if (value_) return *value_;
  return LambdaPoly::lambda();
}

Scalar Domain::constant(const Rational& c) const {
  if (value_) return c;
  return LambdaPoly::constant(c);
}

Scalar Domain::lambda_power(std::size_t k) const {
  if (value_) return value_->pow(static_cast<unsigned>(k));
  return LambdaPoly::monomial(Rational(1), k);
}

Scalar Domain::from_poly(const LambdaPoly& p) const {
  if (value_) return poly_eval(p, *value_);
  return p;
}

Scalar Domain::divide_by_lambda_power(const Scalar& s, std::size_t k) const {
  check(s);
  if (k == 0) return s;
  if (!value_) return s.poly().divided_by_lambda_power(k);
  if (value_->is_zero()) throw DomainError("division by lambda^" + std::to_string(k) + " at lambda = 0");
  return s.rational() / value_->pow(static_cast<unsigned>(k));
}

void Domain::require_nonzero_lambda(std::string_view what) const {
  if (lambda_is_zero()) throw DomainError(std::string(what) + " is undefined at lambda = 0");
}

void Domain::check(const Scalar& s) const {
  if (s.is_symbolic() != is_symbolic()) {
    throw DomainError("scalar does not belong to the " + descriptor() + " domain");
  }
}

}  // namespace degbern
