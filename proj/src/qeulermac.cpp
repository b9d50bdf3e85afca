#include "qbern/qeulermac.hpp"

#include "qbern/qbernoulli.hpp"
#include "qbern/qcore.hpp"
#include "qbern/qops.hpp"

#include <algorithm>
#include <cmath>

namespace qbern {

Scalar h_operator(int n, const Scalar& x, const QContext& ctx) {
  if (n < 0) throw DomainError("H_q^n needs n >= 0");
  Scalar p = ctx.lift(1);
  Scalar qi = ctx.lift(1);
  for (int i = 0; i < n; ++i) {
    p *= ctx.h() + (Scalar(1) - qi) * x;
    qi *= ctx.q();
  }
  return p;
}

Scalar h_operator_sum(int n, const Scalar& x, const QContext& ctx) {
  if (n < 0) throw DomainError("H_q^n needs n >= 0");
  const Scalar shifted = x + ctx.h();
  Scalar sum = ctx.lift(0);
  for (int k = 0; k <= n; ++k) {
    Scalar term = q_binomial(n, k, ctx) * q_triangular_power(k, ctx) *
                  pow(shifted, static_cast<unsigned>(n - k)) * pow(x, static_cast<unsigned>(k));
    if (k % 2) sum -= term; else sum += term;
  }
  return sum;
}

std::string_view to_string(EmVariant v) {
  return v == EmVariant::literal ? "literal" : "shifted";
}

EmVariant parse_em_variant(std::string_view text) {
  if (text == "literal") return EmVariant::literal;
  if (text == "shifted") return EmVariant::shifted;
  throw DomainError("unknown Euler-Maclaurin variant '" + std::string(text) + "'");
}

namespace {

void require_unit_step(const QContext& ctx) {
  if (!(ctx.h() == Scalar(1)))
    throw DomainError("Euler-Maclaurin routines are defined for h = 1 only");
}

int correction_order(const FunctionRep& f, std::optional<int> n_max) {
  if (f.is_polynomial()) {
    int full = f.polynomial().degree() + 1;
    return std::clamp(n_max.value_or(full), 0, std::max(full, 0));
  }
  int n = n_max.value_or(8);
  if (n < 1) throw DomainError("correction order N must be >= 1");
  return n;
}

EmTerm grouped_term(int n, const Scalar& a, const Scalar& b, const FunctionRep& f,
                    const BernoulliTable& table, EmVariant variant, const QContext& ctx) {
  EmTerm t;
  t.n = n;
  t.bracket_b = h_operator(n, b, ctx);
  t.bracket_a = h_operator(n, a, ctx);
  t.derivative_b = q_derivative_n(f, n - 1, b, ctx);
  t.derivative_a = q_derivative_n(f, n - 1, a, ctx);
  t.factor = table.number(n) / q_factorial(n, ctx);
  if (variant == EmVariant::literal)
    t.contribution = t.bracket() * (t.derivative_b - t.derivative_a) * t.factor;
  else
    t.contribution = (t.bracket_b * t.derivative_b - t.bracket_a * t.derivative_a) * t.factor;
  return t;
}

std::vector<EmTerm> grouped_terms(int order, const Scalar& a, const Scalar& b, const FunctionRep& f,
                                  const BernoulliTable& table, EmVariant variant,
                                  const QContext& ctx) {
  std::vector<EmTerm> terms;
  for (int n = variant == EmVariant::literal ? 1 : 2; n <= order; ++n)
    terms.push_back(grouped_term(n, a, b, f, table, variant, ctx));
  return terms;
}

Scalar sum_contributions(const std::vector<EmTerm>& terms, const QContext& ctx) {
  Scalar s = ctx.lift(0);
  for (const auto& t : terms) s += t.contribution;
  return s;
}

void finish(EmReport& r, const QContext& ctx) {
  r.formula = r.integral + r.boundary + sum_contributions(r.terms, ctx);
  r.discrepancy = r.formula - r.oracle;
}

}  // namespace

EmReport em_finite(const FunctionRep& f, long a, long b, std::optional<int> n_max,
                   const QContext& ctx, EmVariant variant) {
  require_unit_step(ctx);
  if (a < 0 || !(a < b)) throw DomainError("em_finite needs integers 0 <= a < b");
  const int order = correction_order(f, n_max);
  const BernoulliTable table(order, ctx);
  const Scalar A = ctx.lift(a), B = ctx.lift(b);

  EmReport r;
  r.variant = variant;
  r.terms_used = order;
  r.integral = jackson_integral_ab(f, A, B, ctx);
  r.boundary = -(f(B) - f(A)) / q_number(2, ctx);
  r.terms = grouped_terms(order, A, B, f, table, variant, ctx);
  r.oracle = h_integral(f, A, B, ctx);
  r.oracle_terms = b - a;
  r.limit_b = b;
  finish(r, ctx);
  return r;
}

EmReport em_infinite(const FunctionRep& f, long a, std::optional<int> n_max,
                     const QContext& ctx, EmVariant variant) {
  require_unit_step(ctx);
  if (a < 0) throw DomainError("em_infinite needs a >= 0");
  const int order = correction_order(f, n_max);
  const BernoulliTable table(order, ctx);
  const Scalar A = ctx.lift(a);

  EmReport r;
  r.variant = variant;
  r.terms_used = order;
  r.integral = jackson_integral_improper(f, A, ctx);
  r.boundary = f(A) / q_number(2, ctx);

  // b -> inf limit of the grouped corrections, b - a doubling
  constexpr int kMaxDoublings = 60;
  const long max_steps = std::min<long>(ctx.series_max_terms(), kMaxDoublings);
  bool settled = false;
  Scalar prev;
  for (long step = 0, offset = 1; step < max_steps; ++step, offset *= 2) {
    auto terms = grouped_terms(order, A, ctx.lift(a + offset), f, table, variant, ctx);
    Scalar cur = sum_contributions(terms, ctx);
    r.terms = std::move(terms);
    r.limit_b = a + offset;
    if (step > 0) {
      double scale = std::max(1.0, std::fabs(cur.to_double()));
      double diff = std::fabs((cur - prev).to_double());
      if (!std::isfinite(diff)) break;
      if (diff < ctx.tail_tol() * scale) {
        settled = true;
        break;
      }
    }
    prev = std::move(cur);
  }
  if (!settled)
    throw NonConvergence(f.name() + ": Euler-Maclaurin correction limit b -> inf did not stabilize (" +
                         std::string(to_string(variant)) + " grouping)");

  Scalar sum = ctx.lift(0);
  for (long m = a;; ++m) {
    if (m - a >= ctx.series_max_terms())
      throw NonConvergence(f.name() + ": direct sum did not decay below tail_tol");
    Scalar fm = f(ctx.lift(m));
    sum += fm;
    if (std::fabs(fm.to_double()) < ctx.tail_tol()) {
      r.oracle_terms = m - a + 1;
      break;
    }
  }
  r.oracle = sum;
  finish(r, ctx);
  return r;
}

EmReport sum_of_powers(int s, long b, const QContext& ctx) {
  require_unit_step(ctx);
  if (s < 1) throw DomainError("sum_of_powers needs s >= 1");
  if (b < 1) throw DomainError("sum_of_powers needs b >= 1");
  const BernoulliTable table(s + 1, ctx);
  const Scalar B = ctx.lift(b);
  const auto us = static_cast<unsigned>(s);

  EmReport r;
  r.variant = EmVariant::literal;
  r.terms_used = s + 1;
  r.integral = pow(B, us + 1) / q_number(s + 1, ctx);
  r.boundary = -pow(B, us) / q_number(2, ctx);
  for (int n = 2; n <= s + 1; ++n) {
    EmTerm t;
    t.n = n;
    t.bracket_b = h_operator(n, B, ctx);
    t.bracket_a = ctx.lift(0);
    t.derivative_b = pow(B, static_cast<unsigned>(s - n + 1));
    t.derivative_a = ctx.lift(0);
    t.factor = q_binomial(s, n - 1, ctx) * table.number(n) / q_number(n, ctx);
    t.contribution = t.bracket_b * t.derivative_b * t.factor;
    r.terms.push_back(std::move(t));
  }
  Scalar sum = ctx.lift(0);
  for (long m = 0; m < b; ++m) sum += pow(ctx.lift(m), us);
  r.oracle = sum;
  r.oracle_terms = b;
  r.limit_b = b;
  finish(r, ctx);
  return r;
}

}  // namespace qbern
