#include "qbern/qexp.hpp"

#include <cmath>

namespace qbern {

namespace {

// Sums terms t_0 = 1, t_n = t_{n-1} * ratio(n) until the term is
// negligible against the running sum.
template <class Ratio>
double sum_series(Ratio ratio, const QContext& ctx, const char* what) {
  double sum = 1.0, term = 1.0;
  for (long n = 1;; ++n) {
    if (n > ctx.series_max_terms())
      throw NonConvergence(std::string(what) + ": term budget exhausted");
    term *= ratio(n);
    sum += term;
    if (term == 0.0 || std::fabs(term) < ctx.tail_tol() * std::fabs(sum)) break;
  }
  return sum;
}

}  // namespace

Scalar eq_series(const Scalar& z, const QContext& ctx) {
  const double q = ctx.q().to_double();
  // |z| (1-q) < 1, decided exactly when possible
  Scalar reach = abs(z) * (Scalar(1) - ctx.q());
  if (reach >= Scalar(1))
    throw DomainError("e_q series: |z| must be below 1/(1-q)");
  const double x = z.to_double();
  double qn = 1.0, bracket = 0.0;  // q^{n-1}, [n]_q
  return Scalar(sum_series(
      [&](long) {
        bracket += qn;
        qn *= q;
        return x / bracket;
      },
      ctx, "e_q series"));
}

Scalar eq_product(const Scalar& z, const QContext& ctx) {
  const double q = ctx.q().to_double();
  const double x = z.to_double();
  double term = (1.0 - q) * x;  // (1-q) q^k z
  double p = 1.0;
  for (long k = 0; std::fabs(term) >= ctx.tail_tol(); ++k) {
    if (k >= ctx.series_max_terms())
      throw NonConvergence("e_q product: factor budget exhausted");
    bool vanishes = term == 1.0;
    if (!vanishes && ctx.exact() && z.is_exact() && std::fabs(1.0 - term) < 1e-9)
      vanishes = (Scalar(1) - ctx.q()) * pow(ctx.q(), k) * z == Scalar(1);
    if (vanishes) throw SingularityError("e_q product: factor vanishes at k=" + std::to_string(k));
    p /= 1.0 - term;
    term *= q;
  }
  return Scalar(p);
}

Scalar Eq_big(const Scalar& z, const QContext& ctx) {
  const double q = ctx.q().to_double();
  double term = (1.0 - q) * z.to_double();
  double p = 1.0;
  for (long k = 0; std::fabs(term) >= ctx.tail_tol(); ++k) {
    if (k >= ctx.series_max_terms())
      throw NonConvergence("E_q product: factor budget exhausted");
    p *= 1.0 + term;
    term *= q;
  }
  return Scalar(p);
}

Scalar Eq_big_series(const Scalar& z, const QContext& ctx) {
  const double q = ctx.q().to_double();
  const double x = z.to_double();
  double qn = 1.0, bracket = 0.0;  // q^{n-1}, [n]_q
  return Scalar(sum_series(
      [&](long) {
        bracket += qn;
        double r = qn * x / bracket;
        qn *= q;
        return r;
      },
      ctx, "E_q series"));
}

Scalar eq_neg(const Scalar& x, const QContext& ctx) {
  if (x.sign() < 0) throw DomainError("eq_neg: x must be nonnegative");
  return Scalar(1.0 / Eq_big(x, ctx).to_double());
}

}  // namespace qbern
