#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "degbern/scalar.hpp"

namespace degbern {

/// (x)_n = x (x-1) ... (x-n+1), with (x)_0 = 1.
Scalar falling_factorial(const Scalar& x, int n);

/// (x)_{n,lambda} = x (x - lambda) ... (x - (n-1) lambda), with (x)_{0,lambda} = 1.
Scalar generalized_falling(const Domain& domain, const Scalar& x, int n);

/// Zero for k < 0 or k > n. Requires n >= 0.
Rational binomial(int n, int k);

/// n! / (m_1! ... m_k!). Throws PreconditionError unless the parts are
/// nonnegative and sum to n.
Rational multinomial(int n, std::span<const int> parts);

enum class StirlingKind {
  first_signed,              ///< s(n,k): coefficients of x^k in (x)_n
  degenerate_second,         ///< S_{2,lambda}(n,k)
  scaled_degenerate_second,  ///< lambda^{n-k} S_{2,1/lambda}(n,k), polynomial in lambda
};

/// Eagerly built triangle 0 <= k <= n <= n_max.
class StirlingTable {
 public:
  StirlingTable(StirlingKind kind, Domain domain, std::vector<std::vector<Scalar>> rows);

  [[nodiscard]] StirlingKind kind() const { return kind_; }
  [[nodiscard]] const Domain& domain() const { return domain_; }
  [[nodiscard]] int n_max() const { return static_cast<int>(rows_.size()) - 1; }
  [[nodiscard]] const std::vector<std::vector<Scalar>>& rows() const { return rows_; }
  /// Zero outside 0 <= k <= n; throws PreconditionError for n outside [0, n_max].
  [[nodiscard]] Scalar at(int n, int k) const;
  /// Copy with one entry replaced (fault injection in verifiers' tests).
  [[nodiscard]] StirlingTable with_entry(int n, int k, Scalar value) const;

 private:
  StirlingKind kind_;
  Domain domain_;
  std::vector<std::vector<Scalar>> rows_;
};

/// s(n+1,k) = s(n,k-1) - n s(n,k), s(0,0) = 1.
StirlingTable stirling1_signed(const Domain& domain, int n_max);

enum class Stirling2Route { generating_function, bell_formula };

/// generating_function: n! [t^n] (e_lambda(t) - 1)^k / k!.
/// bell_formula: (-1)^k / k! sum_l (-1)^l C(k,l) (l)_{n,lambda}.
StirlingTable degenerate_stirling2(const Domain& domain, int n_max, Stirling2Route via);

enum class BellRoute { partition_sum, generating_function };

/// Exponential partial Bell polynomial B_{n,k}(x_1, ..., x_{n-k+1}).
/// xs[0] holds x_1. Requires n >= k >= 0 and xs.size() >= n-k+1 (when k >= 1).
Scalar bell_partial(const Domain& domain, int n, int k, std::span<const Scalar> xs, BellRoute via);

/// Checks B_{n,k}(a b x_1, a b^2 x_2, ...) == a^k b^n B_{n,k}(x_1, x_2, ...).
bool bell_scaling_check(const Domain& domain, int n, int k, const Scalar& a, const Scalar& b,
                        std::span<const Scalar> xs);

/// Calls `visit(i)` for every nonnegative vector i of length n-k+1 with
/// sum i_l = k and sum l i_l = n, in lexicographic order of (i_1, i_2, ...).
template <typename Visit>
void for_each_bell_partition(int n, int k, Visit&& visit);

/// lambda^{N-k} S_{2,1/lambda}(N,k) = B_{N,k}(1, lambda-1, (lambda-1)(lambda-2), ...).
/// Zero for k > N or k < 0.
Scalar scaled_degenerate_stirling(const Domain& domain, int N, int k);

/// The same quantity by N!/k! * lambda^{-k} [t^N] ((1+t)^lambda - 1)^k with the
/// lambda^{-k} removed by a verified exact division. Undefined at lambda = 0.
Scalar scaled_degenerate_stirling_gf(const Domain& domain, int N, int k);

StirlingTable scaled_degenerate_stirling_table(const Domain& domain, int n_max);

// ---------------------------------------------------------------------------

namespace detail {

template <typename Visit>
void bell_partition_rec(std::vector<int>& parts, std::size_t index, int remaining_k, int remaining_n, Visit& visit) {
  const int weight = static_cast<int>(index) + 1;
  if (index + 1 == parts.size()) {
    if (remaining_n == remaining_k * weight) {
      parts[index] = remaining_k;
      visit(static_cast<const std::vector<int>&>(parts));
    }
    return;
  }
  for (int i = 0; i <= remaining_k && i * weight <= remaining_n; ++i) {
    parts[index] = i;
    bell_partition_rec(parts, index + 1, remaining_k - i, remaining_n - i * weight, visit);
  }
  parts[index] = 0;
}

}  // namespace detail

template <typename Visit>
void for_each_bell_partition(int n, int k, Visit&& visit) {
  if (k == 0) {
    if (n == 0) {
      const std::vector<int> empty;
      visit(empty);
    }
    return;
  }
  if (n < k) return;
  std::vector<int> parts(static_cast<std::size_t>(n - k + 1), 0);
  detail::bell_partition_rec(parts, 0, k, n, visit);
}

}  // namespace degbern
