#include "degbern/lambda_poly.hpp"

#include <algorithm>
#include <ostream>

#include "degbern/errors.hpp"

namespace degbern {

LambdaPoly::LambdaPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

LambdaPoly LambdaPoly::constant(const Rational& c) { return LambdaPoly(std::vector<Rational>{c}); }

LambdaPoly LambdaPoly::monomial(const Rational& c, std::size_t k) {
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return LambdaPoly(std::move(v));
}

void LambdaPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational LambdaPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(); }

LambdaPoly LambdaPoly::divided_by_lambda_power(std::size_t k) const {
  const std::size_t low = std::min(k, coeffs_.size());
  for (std::size_t i = 0; i < low; ++i) {
    if (!coeffs_[i].is_zero()) {
      throw InternalError("polynomial " + to_string() + " is not divisible by lambda^" + std::to_string(k));
    }
  }
  if (k >= coeffs_.size()) return {};
  return LambdaPoly(std::vector<Rational>(coeffs_.begin() + static_cast<std::ptrdiff_t>(k), coeffs_.end()));
}

LambdaPoly LambdaPoly::times_lambda_power(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<Rational> v(k);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return LambdaPoly(std::move(v));
}

std::string LambdaPoly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    std::string term;
    if (i == 0) {
      term = c.to_string();
    } else {
      if (c == Rational(1)) {
        term = "";
      } else if (c == Rational(-1)) {
        term = "-";
      } else {
        term = c.to_string() + "*";
      }
      term += "lambda";
      if (i > 1) term += "^" + std::to_string(i);
    }
    if (!out.empty() && term.front() != '-') out += "+";
    out += term;
  }
  return out;
}

LambdaPoly LambdaPoly::operator-() const {
  LambdaPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LambdaPoly operator+(const LambdaPoly& a, const LambdaPoly& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] = a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return LambdaPoly(std::move(v));
}

LambdaPoly operator-(const LambdaPoly& a, const LambdaPoly& b) {
  std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] = a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] -= b.coeffs_[i];
  return LambdaPoly(std::move(v));
}

LambdaPoly operator*(const LambdaPoly& a, const LambdaPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<mpq_class> acc(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      acc[i + j] += a.coeffs_[i].value() * b.coeffs_[j].value();
    }
  }
  std::vector<Rational> v;
  v.reserve(acc.size());
  for (auto& q : acc) v.emplace_back(std::move(q));
  return LambdaPoly(std::move(v));
}

LambdaPoly operator*(const LambdaPoly& a, const Rational& c) {
  if (c.is_zero()) return {};
  LambdaPoly r = a;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

LambdaPoly operator/(const LambdaPoly& a, const Rational& c) { return a * c.inverse(); }

Rational poly_eval(const LambdaPoly& p, const Rational& x) {
  Rational acc;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::ostream& operator<<(std::ostream& os, const LambdaPoly& p) { return os << p.to_string(); }

}  // namespace degbern
