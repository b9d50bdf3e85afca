#pragma once

// Reference computations that share no code with the library: plain mpq_class
// arithmetic, truncated power series and naive recursion.

#include <gmpxx.h>

#include <cmath>
#include <functional>
#include <vector>

namespace oracle {

using Q = mpq_class;
using Series = std::vector<Q>;  // coefficients of t^0, t^1, ...

inline Q qpow(const Q& q, int k) {
  Q r = 1;
  for (int i = 0; i < k; ++i) r *= q;
  return r;
}

// (1 - q^n)/(1 - q)
inline Q qnum(int n, const Q& q) {
  Q r = (Q(1) - qpow(q, n)) / (Q(1) - q);
  r.canonicalize();
  return r;
}

inline Q qfact(int n, const Q& q) {
  Q r = 1;
  for (int i = 1; i <= n; ++i) r *= qnum(i, q);
  return r;
}

inline Q qbinom(int n, int k, const Q& q) { return qfact(n, q) / (qfact(k, q) * qfact(n - k, q)); }

inline Series multiply(const Series& a, const Series& b, int order) {
  Series c(static_cast<std::size_t>(order + 1), Q(0));
  for (int i = 0; i <= order && i < static_cast<int>(a.size()); ++i)
    for (int j = 0; i + j <= order && j < static_cast<int>(b.size()); ++j) c[i + j] += a[i] * b[j];
  return c;
}

inline Series invert(const Series& a, int order) {
  Series b(static_cast<std::size_t>(order + 1), Q(0));
  b[0] = Q(1) / a[0];
  for (int n = 1; n <= order; ++n) {
    Q s = 0;
    for (int k = 1; k <= n && k < static_cast<int>(a.size()); ++k) s += a[k] * b[n - k];
    b[n] = -s / a[0];
  }
  return b;
}

// e_q(c t) truncated at t^order.
inline Series eq_series(const Q& c, const Q& q, int order) {
  Series s;
  for (int n = 0; n <= order; ++n) s.push_back(qpow(c, n) / qfact(n, q));
  return s;
}

// t/(e_q(t) - 1), inverted from (e_q(t) - 1)/t = sum t^n/[n+1]!.
inline Series bernoulli_gf(const Q& q, int order) {
  Series a;
  for (int n = 0; n <= order; ++n) a.push_back(Q(1) / qfact(n + 1, q));
  return invert(a, order);
}

inline std::vector<Q> bernoulli_numbers(const Q& q, int max_n) {
  Series g = bernoulli_gf(q, max_n);
  std::vector<Q> out;
  for (int n = 0; n <= max_n; ++n) out.push_back(g[n] * qfact(n, q));
  return out;
}

// beta_n(x, y) as [n]! [t^n] t e_q(xt) e_q(yt)/(e_q(t) - 1).
inline Q bernoulli_two_var(int n, const Q& x, const Q& y, const Q& q) {
  Series s = multiply(multiply(bernoulli_gf(q, n), eq_series(x, q, n), n), eq_series(y, q, n), n);
  return s[n] * qfact(n, q);
}

inline Q bernoulli_poly(int n, const Q& x, const Q& q) { return bernoulli_two_var(n, x, Q(0), q); }

// Coefficients of beta_n(x) in ascending powers, read off the generating series.
inline std::vector<Q> bernoulli_poly_coefficients(int n, const Q& q) {
  Series g = bernoulli_gf(q, n);
  std::vector<Q> c(static_cast<std::size_t>(n + 1));
  for (int k = 0; k <= n; ++k) c[k] = g[n - k] * qfact(n, q) / qfact(k, q);
  return c;
}

using Fn = std::function<Q(const Q&)>;

// D_q^n by repeated difference quotients, x != 0.
inline Q q_derivative_n(const Fn& f, int n, const Q& x, const Q& q) {
  if (n == 0) return f(x);
  Fn inner = [&](const Q& y) { return q_derivative_n(f, n - 1, y, q); };
  return (inner(q * x) - inner(x)) / ((q - 1) * x);
}

// (1 - q)b sum_{i<terms} q^i f(q^i b)
inline double jackson_truncated(const std::function<double(double)>& f, double b, double q, int terms) {
  double s = 0, qi = 1;
  for (int i = 0; i < terms; ++i, qi *= q) s += qi * f(qi * b);
  return (1 - q) * b * s;
}

inline Q sum_range(const Fn& f, long a, long b) {
  Q s = 0;
  for (long m = a; m < b; ++m) s += f(Q(m));
  return s;
}

inline Q power_sum(int s, long b) {
  Q total = 0;
  for (long m = 0; m < b; ++m) total += qpow(Q(m), s);
  return total;
}

// prod_{k>=0} (1 - a q^k) until the factor is 1 to machine precision.
inline double pochhammer_inf(double a, double q) {
  double p = 1, qk = 1;
  for (int k = 0; k < 100000 && std::abs(a * qk) > 1e-18; ++k, qk *= q) p *= 1 - a * qk;
  return p;
}

inline double eq_series_double(double z, double q) {
  double s = 0, term = 1;
  for (int n = 0; n < 2000; ++n) {
    s += term;
    term *= z * (1 - q) / (1 - std::pow(q, n + 1));
    if (std::abs(term) < 1e-18 * std::abs(s)) break;
  }
  return s;
}

// E_q(z) = ((q-1)z; q)_inf and e_q(z) = 1/((1-q)z; q)_inf.
inline double Eq_product_double(double z, double q) { return pochhammer_inf(-(1 - q) * z, q); }
inline double eq_product_double(double z, double q) { return 1 / pochhammer_inf((1 - q) * z, q); }

// Classical Bernoulli numbers B_0..B_8 (B_1 = -1/2).
inline std::vector<double> classical_bernoulli() {
  return {1, -0.5, 1.0 / 6, 0, -1.0 / 30, 0, 1.0 / 42, 0, -1.0 / 30};
}

}  // namespace oracle
