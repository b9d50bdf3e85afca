#pragma once

// q-combinatorial primitives.

#include "qbern/numerics.hpp"

namespace qbern {

/// [n]_q = 1 + q + ... + q^{n-1}; [0]_q = 0.
Scalar q_number(int n, const QContext& ctx);

/// [n]_q! with [0]_q! = 1.
Scalar q_factorial(int n, const QContext& ctx);

/// Gaussian binomial [n]!/([k]![n-k]!); 0 when k < 0 or k > n.
Scalar q_binomial(int n, int k, const QContext& ctx);

/// Same coefficient through (q;q)_n / ((q;q)_{n-k} (q;q)_k).
Scalar q_binomial_pochhammer(int n, int k, const QContext& ctx);

/// (a;q)_n = prod_{j<n} (1 - q^j a).
Scalar q_pochhammer(const Scalar& a, int n, const QContext& ctx);

/// (a;q)_inf, truncated once |q^j a| < tail_tol. Always float-tagged.
/// Throws NonConvergence past series_max_terms factors.
Scalar q_pochhammer_inf(const Scalar& a, const QContext& ctx);

/// Heine expansion sum_k binom(n,k)_q q^{k(k-1)/2} (-1)^k a^k of (a;q)_n.
Scalar heine_expand(const Scalar& a, int n, const QContext& ctx);

/// (x - a)_q^n = prod_{i<n} (x - a q^i).
Scalar q_power(const Scalar& x, const Scalar& a, int n, const QContext& ctx);

/// q^{k(k-1)/2}.
Scalar q_triangular_power(int k, const QContext& ctx);

}  // namespace qbern
