#pragma once

// Independent reference computations. Deliberately written against raw
// mpq_class / the plain recurrences, not the library's series code.

#include <gmpxx.h>

#include <vector>

#include "degbern/lambda_poly.hpp"

namespace oracle {

// n! [t^n] t/log(1+t), n <= n_max, by inverting log(1+t)/t = sum (-1)^m t^m/(m+1).
inline std::vector<mpq_class> classical_b(int n_max) {
  std::vector<mpq_class> a(n_max + 1), c(n_max + 1);
  for (int m = 0; m <= n_max; ++m) a[m] = mpq_class(m % 2 ? -1 : 1, m + 1);
  for (auto& x : a) x.canonicalize();
  c[0] = 1;
  for (int n = 1; n <= n_max; ++n) {
    mpq_class s = 0;
    for (int k = 1; k <= n; ++k) s += a[k] * c[n - k];
    c[n] = -s;
  }
  mpz_class f = 1;
  for (int n = 0; n <= n_max; ++n) {
    if (n > 0) f *= n;
    c[n] *= f;
  }
  return c;
}

// Coefficients of x^k in x(x-1)...(x-n+1), by multiplying out.
inline std::vector<std::vector<mpz_class>> first_kind(int n_max) {
  std::vector<std::vector<mpz_class>> rows;
  std::vector<mpz_class> p{1};
  for (int n = 0; n <= n_max; ++n) {
    rows.push_back(p);
    std::vector<mpz_class> next(p.size() + 1, 0);
    for (std::size_t k = 0; k < p.size(); ++k) {
      next[k + 1] += p[k];
      next[k] -= p[k] * n;
    }
    p = next;
  }
  return rows;
}

// S(n+1,k) = k S(n,k) + S(n,k-1).
inline std::vector<std::vector<mpz_class>> second_kind(int n_max) {
  std::vector<std::vector<mpz_class>> S(n_max + 1, std::vector<mpz_class>(n_max + 1, 0));
  S[0][0] = 1;
  for (int n = 0; n < n_max; ++n) {
    for (int k = 1; k <= n + 1; ++k) S[n + 1][k] = S[n][k] * k + S[n][k - 1];
  }
  return S;
}

// S_{2,lambda}(n+1,k) = S_{2,lambda}(n,k-1) + (k - n lambda) S_{2,lambda}(n,k).
inline std::vector<std::vector<degbern::LambdaPoly>> degenerate_second_kind(int n_max) {
  using degbern::LambdaPoly;
  std::vector<std::vector<LambdaPoly>> S(n_max + 1, std::vector<LambdaPoly>(n_max + 1));
  S[0][0] = LambdaPoly{1};
  for (int n = 0; n < n_max; ++n) {
    for (int k = 1; k <= n + 1; ++k) {
      S[n + 1][k] = S[n][k - 1] + S[n][k] * LambdaPoly{k, -n};
    }
  }
  return S;
}

}  // namespace oracle
