#include "qbern/qcore.hpp"

#include <cmath>

namespace qbern {

namespace {

void require_nonnegative(int n, const char* what) {
  if (n < 0) throw DomainError(std::string(what) + ": negative order");
}

}  // namespace

Scalar q_number(int n, const QContext& ctx) {
  require_nonnegative(n, "q_number");
  Scalar sum = ctx.lift(0);
  Scalar power = ctx.lift(1);
  for (int i = 0; i < n; ++i) {
    sum += power;
    power *= ctx.q();
  }
  return sum;
}

Scalar q_factorial(int n, const QContext& ctx) {
  require_nonnegative(n, "q_factorial");
  Scalar f = ctx.lift(1);
  for (int i = 2; i <= n; ++i) f *= q_number(i, ctx);
  return f;
}

Scalar q_binomial(int n, int k, const QContext& ctx) {
  require_nonnegative(n, "q_binomial");
  if (k < 0 || k > n) return ctx.lift(0);
  return q_factorial(n, ctx) / (q_factorial(k, ctx) * q_factorial(n - k, ctx));
}

Scalar q_binomial_pochhammer(int n, int k, const QContext& ctx) {
  require_nonnegative(n, "q_binomial_pochhammer");
  if (k < 0 || k > n) return ctx.lift(0);
  const Scalar& q = ctx.q();
  return q_pochhammer(q, n, ctx) /
         (q_pochhammer(q, n - k, ctx) * q_pochhammer(q, k, ctx));
}

Scalar q_pochhammer(const Scalar& a, int n, const QContext& ctx) {
  require_nonnegative(n, "q_pochhammer");
  Scalar p = ctx.lift(1);
  Scalar qj_a = ctx.lift(a);
  for (int j = 0; j < n; ++j) {
    p *= Scalar(1) - qj_a;
    qj_a *= ctx.q();
  }
  return p;
}

Scalar q_pochhammer_inf(const Scalar& a, const QContext& ctx) {
  const double q = ctx.q().to_double();
  double term = a.to_double();
  double p = 1.0;
  for (long j = 0; std::fabs(term) >= ctx.tail_tol(); ++j) {
    if (j >= ctx.series_max_terms())
      throw NonConvergence("(a;q)_inf: term budget exhausted");
    p *= 1.0 - term;
    term *= q;
  }
  return Scalar(p);
}

Scalar q_triangular_power(int k, const QContext& ctx) {
  return pow(ctx.q(), static_cast<unsigned>(k) * (k - 1) / 2);
}

Scalar heine_expand(const Scalar& a, int n, const QContext& ctx) {
  require_nonnegative(n, "heine_expand");
  Scalar sum = ctx.lift(0);
  Scalar a_k = ctx.lift(1);
  for (int k = 0; k <= n; ++k) {
    Scalar term = q_binomial(n, k, ctx) * q_triangular_power(k, ctx) * a_k;
    if (k % 2) sum -= term; else sum += term;
    a_k *= a;
  }
  return sum;
}

Scalar q_power(const Scalar& x, const Scalar& a, int n, const QContext& ctx) {
  require_nonnegative(n, "q_power");
  Scalar p = ctx.lift(1);
  Scalar a_qi = a;
  for (int i = 0; i < n; ++i) {
    p *= x - a_qi;
    a_qi *= ctx.q();
  }
  return p;
}

}  // namespace qbern
