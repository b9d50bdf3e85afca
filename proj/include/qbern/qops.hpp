#pragma once

// q-derivative, h-difference, Jackson and h-integrals, q-Taylor expansion.
//
// Each operation has an exact polynomial path and a numeric callback
// path. The polynomial path is exact in exact mode.

#include "qbern/function.hpp"
#include "qbern/numerics.hpp"
#include "qbern/polynomial.hpp"

namespace qbern {

// Polynomial algebra ------------------------------------------------------

/// Termwise D_q x^n = [n]_q x^{n-1}.
Polynomial q_derivative(const Polynomial& p, const QContext& ctx);
Polynomial q_derivative_n(const Polynomial& p, int n, const QContext& ctx);

/// Termwise x^n -> x^{n+1}/[n+1]_q, zero constant term.
Polynomial q_antiderivative(const Polynomial& p, const QContext& ctx);

/// (F(x+h) - F(x))/h as a polynomial.
Polynomial h_difference(const Polynomial& p, const QContext& ctx);

// Pointwise operations ----------------------------------------------------

/// D_q f(x) = (f(qx) - f(x)) / (x(q-1)).  At x = 0 polynomials give the
/// ordinary derivative; callbacks need an analytic hook there.
Scalar q_derivative(const FunctionRep& f, const Scalar& x, const QContext& ctx);

/// D_q^n f(x). Callbacks use the n+1 samples f(q^k x):
///   D_q^n f(x) = sum_k (-1)^{n-k} binom(n,k)_q q^{(n-k)(n-k-1)/2} f(q^k x)
///                / ((q-1)^n q^{n(n-1)/2} x^n)
/// Throws BudgetExceeded past the callback's max_derivative_order.
Scalar q_derivative_n(const FunctionRep& f, int n, const Scalar& x, const QContext& ctx);

Scalar h_difference(const FunctionRep& f, const Scalar& x, const QContext& ctx);

// Integrals ---------------------------------------------------------------

/// (1-q) b sum_i q^i f(q^i b); closed form b^{n+1}/[n+1]_q for polynomials.
Scalar jackson_integral_0b(const FunctionRep& f, const Scalar& b, const QContext& ctx);

/// int_0^b - int_0^a, for 0 <= a <= b.
Scalar jackson_integral_ab(const FunctionRep& f, const Scalar& a, const Scalar& b,
                           const QContext& ctx);

/// Limit of int_a^b as b = a+1, a+2, ... until two successive values agree
/// to tail_tol * max(1, |value|).
Scalar jackson_integral_improper(const FunctionRep& f, const Scalar& a,
                                 const QContext& ctx);

/// h (f(a) + f(a+h) + ... + f(b-h)); (b-a)/h must be an integer.
Scalar h_integral(const FunctionRep& f, const Scalar& a, const Scalar& b,
                  const QContext& ctx);

/// sum_n (x-a)_q^n / [n]_q! * D_q^n f(a) over n = 0..deg f.
Scalar q_taylor_eval(const Polynomial& f, const Scalar& a, const Scalar& x,
                     const QContext& ctx);

}  // namespace qbern
