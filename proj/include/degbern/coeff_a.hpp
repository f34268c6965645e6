#pragma once

/**
 * @file coeff_a.hpp
 * @brief Coefficients a_{i,lambda}(N) of the differential equations
 *
 *     (-1)^N (1+t)^N F^{(N)} = sum_{i=0}^N a_{i,lambda}(N) F^{i+1},
 *     F = 1 / log_lambda(1+t).
 *
 * The row-by-row recurrence is the reference builder; the closed forms are
 * independent verification routes. Row N = 0 is the convention [1].
 */

#include <optional>
#include <vector>

#include "degbern/scalar.hpp"

namespace degbern {

class CoeffTable {
 public:
  CoeffTable(Domain domain, std::vector<std::vector<Scalar>> rows);

  [[nodiscard]] const Domain& domain() const { return domain_; }
  [[nodiscard]] int max_N() const { return static_cast<int>(rows_.size()) - 1; }
  [[nodiscard]] const std::vector<std::vector<Scalar>>& rows() const { return rows_; }
  [[nodiscard]] const std::vector<Scalar>& row(int N) const;
  /// Throws PreconditionError outside 0 <= i <= N <= max_N().
  [[nodiscard]] const Scalar& at(int i, int N) const;
  /// Copy with a_{i}(N) replaced; used to inject faults.
  [[nodiscard]] CoeffTable with_entry(int i, int N, Scalar value) const;

  friend bool operator==(const CoeffTable&, const CoeffTable&) = default;

 private:
  Domain domain_;
  std::vector<std::vector<Scalar>> rows_;
};

/// Initial row N = 1. The true values are a_0(1) = lambda, a_1(1) = 1;
/// other seeds exist only to test that verifiers notice.
struct ARecurrenceSeed {
  Scalar a0;
  Scalar a1;
};

/// Rows 0..N_max from
///   a_0(N+1) = (N + lambda) a_0(N)
///   a_{N+1}(N+1) = (N+1) a_N(N)
///   a_i(N+1) = (N + (i+1) lambda) a_i(N) + i a_{i-1}(N),  1 <= i <= N.
CoeffTable a_by_recurrence(const Domain& domain, int N_max, const std::optional<ARecurrenceSeed>& seed = std::nullopt);

/// (-1)^N lambda^{-i} sum_{k=i}^N sum_{l=0}^k (-1)^l C(k,i) C(k,l) (lambda l)_N.
/// The division by lambda^i is a verified exact shift when lambda is symbolic;
/// at lambda = 0 with i > 0 this form is undefined (DomainError).
Scalar a_explicit_falling(const Domain& domain, int i, int N);

/// (-1)^N sum_{k=i}^N (-1)^k k! C(k,i) lambda^{k-i} [lambda^{N-k} S_{2,1/lambda}(N,k)].
Scalar a_explicit_stirling(const Domain& domain, int i, int N);

/// The unrolled form, valid for 1 <= i <= N-1:
///   i! (N + (i+1) lambda - 1)_{N-i}
///     + i sum_{l=0}^{N-i-1} (N + (i+1) lambda - 1)_l a_{i-1}(N-l-1),
/// where the a_{i-1} on the right are themselves produced by this form, with
/// a_0(M) = (M + lambda - 1)_M and a_M(M) = M! at the ends.
Scalar a_alternate_recurrence(const Domain& domain, int i, int N);

/// Whole triangle via a_alternate_recurrence and its two boundary laws.
CoeffTable a_by_alternate_recurrence(const Domain& domain, int N_max);
CoeffTable a_by_explicit_falling(const Domain& domain, int N_max);
CoeffTable a_by_explicit_stirling(const Domain& domain, int N_max);

/// (-1)^{N+i} i! s(N,i), the value of a_{i,lambda}(N) at lambda = 0.
Rational a_limit_at_zero(int i, int N);

}  // namespace degbern
