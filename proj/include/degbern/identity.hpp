#pragma once

/**
 * @file identity.hpp
 * @brief Mechanical verification of the operator identities.
 *
 * Every check compares exact values; there is no tolerance anywhere. Series
 * identities record the exponent range they compared, so a pass is a precise
 * statement about that range and nothing more.
 */

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "degbern/bernoulli.hpp"
#include "degbern/coeff_a.hpp"
#include "degbern/combinatorics.hpp"
#include "degbern/scalar.hpp"

namespace degbern {

enum class Identity {
  ode_family,  ///< (-1)^N (1+t)^N F^{(N)} = sum_i a_i(N) F^{i+1}
  cor_3_4,     ///< convolution identity between rows n and n-1 of the a-table
  eq_41,       ///< N-th derivative of 1/log(1+t)
  eq_42,       ///< n-th derivative of t/log(1+t)
  thm_4_1,     ///< b_{j+N} through higher-order numbers
  cor_4_2,     ///< singular coefficients of the same expansion vanish
  a_routes,          ///< recurrence vs the closed forms of a_i(N)
  b_routes,          ///< series vs recurrence / composition sum / closed forms
  bell_routes,       ///< partition sum vs generating function
  stirling2_routes,  ///< S_{2,lambda} by generating function, alternating sum, Bell polynomial
  stirling_limit,    ///< lambda^{N-k} S_{2,1/lambda}(N,k) at lambda = 0 is s(N,k)
  a_limit,           ///< a_i(N) at lambda = 0 is (-1)^{N+i} i! s(N,i)
  classical_b,       ///< lambda -> 0 route vs Stirling route for b_n
};

std::string_view to_string(Identity id);

struct ReportParams {
  std::optional<int> N;
  std::optional<int> n;
  std::optional<int> j;
  std::optional<int> order;
  std::string lambda;  ///< domain descriptor: "sym" or a rational
};

struct Witness {
  long index = 0;  ///< exponent of t for series identities, otherwise the failing index
  Scalar lhs;
  Scalar rhs;
};

struct IdentityReport {
  Identity identity = Identity::ode_family;
  ReportParams params;
  bool pass = false;
  std::optional<Witness> witness;
  /// Inclusive exponent range compared, for series identities.
  std::optional<std::pair<long, long>> compared_range;
  /// Names the disagreeing routes for route suites; empty otherwise.
  std::string detail;
};

// Series identities ---------------------------------------------------------

/// Requires N >= 1 and order >= N + 2. F is built at order + N.
IdentityReport verify_ode(const Domain& domain, int N, int order, const CoeffTable& a);
IdentityReport verify_ode(const Domain& domain, int N, int order);

enum class ClassicalDerivative { eq41, eq42 };

/// Works at lambda = 0 with 1/log(1+t). `s1` must hold rows up to N.
IdentityReport verify_classical_derivative(int N, int order, ClassicalDerivative which, const StirlingTable& s1);
IdentityReport verify_classical_derivative(int N, int order, ClassicalDerivative which);

// Scalar identities ---------------------------------------------------------

/// sum_{i=1}^j (1)_{j-i}/(j-i)! (a_{n-i}(n) - n a_{n-i}(n-1)) = a_{n-j}(n) - n! (1)_j / j!, 1 <= j <= n.
IdentityReport verify_cor34(const Domain& domain, int j, int n, const CoeffTable& a);

/// higher[r-1] holds b^{(r)}_{m,lambda}.
using HigherOrderTable = std::vector<BernoulliRow>;

/// Which factorial divides the third sum: (l+i)! as the expansion produces
/// it, or (l+1)! as the closed statement prints it (1/(negative)! = 0).
enum class Thm41Variant { expansion_factorial, printed_factorial };

/// Coefficient of t^j in the expansion of (tF)^{(N)} through higher-order
/// numbers, before multiplication by j!. Valid for j >= -N, N >= 1.
Scalar thm41_expansion_coefficient(const Domain& domain, int j, int N, const CoeffTable& a,
                                   const HigherOrderTable& higher, Thm41Variant variant);

/// b_{j+N} (from `reference`) == j! * thm41_expansion_coefficient(j, N).
IdentityReport verify_thm41(const Domain& domain, int j, int N, const CoeffTable& a, const HigherOrderTable& higher,
                            const BernoulliRow& reference, Thm41Variant variant = Thm41Variant::expansion_factorial);
IdentityReport verify_thm41(const Domain& domain, int j, int N);

/// Requires N >= 2 and -(N-1) <= j <= -1; the combination must be zero.
IdentityReport verify_cor42(const Domain& domain, int j, int N, const CoeffTable& a, const HigherOrderTable& higher);
IdentityReport verify_cor42(const Domain& domain, int j, int N);

struct Thm41VariantOutcome {
  int j = 0;
  int N = 0;
  bool expansion_holds = false;
  bool printed_holds = false;
};

/// Evaluates both factorial readings on 0 <= j <= j_max, 1 <= N <= N_max.
std::vector<Thm41VariantOutcome> compare_thm41_variants(const Domain& domain, int j_max, int N_max);

// Cross-route agreement suites ---------------------------------------------

std::vector<IdentityReport> check_a_routes(const Domain& domain, int N_max);
std::vector<IdentityReport> check_b_routes(const Domain& domain, int n_max);
IdentityReport check_bell_routes(const Domain& domain, int n_max);
IdentityReport check_stirling2_routes(const Domain& domain, int n_max);
/// Also cross-checks the Bell and generating-function routes of the scaled table.
IdentityReport check_stirling_limit(int N_max);
IdentityReport check_a_limit(int N_max);
IdentityReport check_classical_b(int n_max);

// Batch ----------------------------------------------------------------------

/// Inputs the table-driven identities read. Exposed so tests can corrupt a
/// single entry and watch a report flip.
struct VerificationTables {
  Domain domain;
  CoeffTable a;             ///< rows 0..N_max by recurrence
  HigherOrderTable higher;  ///< r = 1..N_max+1, n <= j_max + N_max
  BernoulliRow reference;   ///< b_{n,lambda} by series inversion, n <= j_max + N_max
  StirlingTable s1;         ///< signed first kind at lambda = 0, rows <= N_max

  static VerificationTables build(const Domain& domain, int N_max, int j_max);
};

enum class Suite { ode, cor34, eq41, eq42, thm41, cor42, routes, all };

std::string_view to_string(Suite s);
/// Throws ParseError for unknown names.
Suite parse_suite(std::string_view name);

struct VerifyOptions {
  Suite suite = Suite::all;
  int N_max = 8;
  int j_max = 8;
  int n_max = 8;  ///< range of the route-agreement suites
  int order = 24;
  Domain domain = Domain::symbolic();
  unsigned threads = 1;
};

/// Reports in a fixed order independent of `threads`.
std::vector<IdentityReport> verify_all(const VerifyOptions& options);
std::vector<IdentityReport> verify_all(const VerifyOptions& options, const VerificationTables& tables);

}  // namespace degbern
