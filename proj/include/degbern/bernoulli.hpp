#pragma once

/**
 * @file bernoulli.hpp
 * @brief Degenerate Bernoulli numbers of the second kind.
 *
 *     t / log_lambda(1+t) = lambda t / ((1+t)^lambda - 1) = sum_n b_{n,lambda} t^n / n!
 *
 * Four independent routes (series inversion, recurrence, composition sum,
 * explicit closed forms), the order-r generalization, and the classical
 * lambda = 0 numbers.
 */

#include <string_view>
#include <vector>

#include "degbern/coeff_a.hpp"
#include "degbern/scalar.hpp"

namespace degbern {

enum class BernoulliProvenance { series, recurrence, multinomial, explicit_form };

std::string_view to_string(BernoulliProvenance p);

struct BernoulliRow {
  int order_r = 1;
  std::vector<Scalar> values;  ///< values[n] = b^{(r)}_{n,lambda}
  BernoulliProvenance provenance = BernoulliProvenance::series;
};

/// n! [t^n] of the reciprocal of ((1+t)^lambda - 1)/(lambda t).
BernoulliRow b_via_series(const Domain& domain, int n_max);

/// b_0 = 1, b_n = -sum_{l<n} C(n,l) (lambda-1)_{n-l} b_l / (n-l+1).
BernoulliRow b_via_recurrence(const Domain& domain, int n_max);

/// Largest n accepted by b_via_multinomial; the composition count is 2^{n-1}.
inline constexpr int kMultinomialMaxN = 24;

/// sum_k (-1)^k sum over compositions (m_1..m_k) of n of
/// C(n; m_1..m_k) prod_j (lambda-1)_{m_j} / (m_j + 1).
Scalar b_via_multinomial(const Domain& domain, int n);

enum class ExplicitForm { a_form, stirling_form, falling_form };

std::string_view to_string(ExplicitForm f);

/// The three closed forms for n >= 1. a_form reads a_{i}(n) and a_{i}(n-1)
/// from `a` (rows up to n are required).
Scalar b_via_explicit(const Domain& domain, int n, ExplicitForm form, const CoeffTable& a);
/// Convenience overload that builds the a-table by recurrence.
Scalar b_via_explicit(const Domain& domain, int n, ExplicitForm form);

/// Rows for n = 0..n_max by one explicit form (b_0 = 1).
BernoulliRow b_explicit_row(const Domain& domain, int n_max, ExplicitForm form);

/// n! [t^n] (lambda t / ((1+t)^lambda - 1))^r.
BernoulliRow b_higher_order(const Domain& domain, int r, int n_max);

/// Classical b_n as the lambda -> 0 value of the symbolic b_{n,lambda}.
std::vector<Rational> classical_b_via_limit(int n_max);
/// b_n = sum_i (-1)^i / (i+1) (s(n,i) + n s(n-1,i)), b_0 = 1.
std::vector<Rational> classical_b_via_stirling(int n_max);
/// Both routes, checked against each other; throws InternalError on disagreement.
std::vector<Rational> classical_b(int n_max);

}  // namespace degbern
