#include "qbern/qapprox.hpp"

#include "qbern/qcore.hpp"
#include "qbern/qops.hpp"

#include <cmath>

namespace qbern {

std::vector<Scalar> unit_grid(int points, const QContext& ctx) {
  if (points < 1) throw DomainError("grid needs at least one point");
  std::vector<Scalar> grid;
  grid.reserve(static_cast<std::size_t>(points));
  if (points == 1) {
    grid.push_back(ctx.lift(0));
    return grid;
  }
  for (int j = 0; j < points; ++j) grid.push_back(ctx.lift(Scalar::fraction(j, points - 1)));
  return grid;
}

namespace {

FunctionRep derivative_function(const FunctionRep& f, int n, const QContext& ctx) {
  if (f.is_polynomial()) return q_derivative_n(f.polynomial(), n, ctx);
  Callback d;
  d.name = "D_q^" + std::to_string(n) + " " + f.name();
  d.max_derivative_order = 0;
  d.eval = [f, n, ctx](const Scalar& x) { return q_derivative_n(f, n, x, ctx); };
  return d;
}

bool derivative_defined_at_zero(const FunctionRep& f, int n) {
  return f.is_polynomial() || n == 0 || static_cast<bool>(f.callback().q_derivative);
}

double golden_max(const Polynomial& p, double lo, double hi) {
  const double phi = (std::sqrt(5.0) - 1) / 2;
  auto g = [&](double x) { return std::fabs(p(Scalar(x)).to_double()); };
  double c = hi - phi * (hi - lo), d = lo + phi * (hi - lo);
  double gc = g(c), gd = g(d);
  for (int it = 0; it < 80; ++it) {
    if (gc > gd) {
      hi = d; d = c; gd = gc;
      c = hi - phi * (hi - lo); gc = g(c);
    } else {
      lo = c; c = d; gc = gd;
      d = lo + phi * (hi - lo); gd = g(d);
    }
  }
  return std::max(gc, gd);
}

// sup |p| on [0,1]: exact grid scan, then golden-section refinement of
// interior grid maxima.
Scalar polynomial_sup(const Polynomial& p, const std::vector<Scalar>& grid) {
  if (p.is_zero()) return grid.front().is_exact() ? Scalar(0) : Scalar(0.0);
  std::vector<Scalar> values;
  values.reserve(grid.size());
  for (const auto& x : grid) values.push_back(abs(p(x)));
  Scalar best = values.front();
  for (const auto& v : values) if (v > best) best = v;

  const Polynomial pf = p.as_float();
  double refined = best.to_double();
  for (std::size_t j = 1; j + 1 < grid.size(); ++j) {
    if (values[j] >= values[j - 1] && values[j] >= values[j + 1])
      refined = std::max(refined, golden_max(pf, grid[j - 1].to_double(), grid[j + 1].to_double()));
  }
  if (refined > best.to_double() * (1 + 8 * 1e-16)) return Scalar(refined);
  return best;
}

Scalar sampled_sup(const FunctionRep& g, const std::vector<Scalar>& grid, bool include_zero) {
  Scalar best(0.0);
  bool first = true;
  for (const auto& x : grid) {
    if (x.is_zero() && !include_zero) continue;
    Scalar v = abs(g(x));
    if (first || v > best) best = v;
    first = false;
  }
  return best;
}

}  // namespace

std::vector<Scalar> approx_coefficients(const FunctionRep& f, int N, const QContext& ctx) {
  if (N < 0) throw DomainError("approximation order N must be >= 0");
  std::vector<Scalar> c;
  c.reserve(static_cast<std::size_t>(N) + 1);
  const Scalar one = ctx.lift(1);
  if (f.is_polynomial()) {
    Polynomial d = f.polynomial();
    for (int n = 0; n <= N; ++n) {
      c.push_back(jackson_integral_0b(d, one, ctx) / q_factorial(n, ctx));
      d = q_derivative(d, ctx);
    }
    return c;
  }
  for (int n = 0; n <= N; ++n) {
    if (n > f.callback().max_derivative_order)
      throw BudgetExceeded(f.name() + ": q-derivative order " + std::to_string(n) + " exceeds declared " +
                           std::to_string(f.callback().max_derivative_order));
    c.push_back(jackson_integral_0b(derivative_function(f, n, ctx), one, ctx) / q_factorial(n, ctx));
  }
  return c;
}

Scalar approx_eval(const std::vector<Scalar>& coefficients, const Scalar& x,
                   const BernoulliTable& table) {
  const QContext& ctx = table.context();
  Scalar sum = ctx.lift(0);
  for (std::size_t n = 0; n < coefficients.size(); ++n)
    sum += coefficients[n] * bernoulli_poly_eval(static_cast<int>(n), x, table);
  return sum;
}

Polynomial approx_polynomial(const std::vector<Scalar>& coefficients, const BernoulliTable& table) {
  Polynomial p;
  for (std::size_t n = 0; n < coefficients.size(); ++n)
    p += table.polynomial(static_cast<int>(n)) * coefficients[n];
  return p;
}

RemainderBound remainder_bound(const FunctionRep& f, int N, const QContext& ctx, int grid_points) {
  if (N < 0) throw DomainError("approximation order N must be >= 0");
  const auto grid = unit_grid(grid_points, ctx);
  const BernoulliTable table(N, ctx);
  RemainderBound r;
  r.sup_beta = polynomial_sup(table.polynomial(N), grid);
  if (f.is_polynomial()) {
    r.sup_derivative = polynomial_sup(q_derivative_n(f.polynomial(), N, ctx), grid);
  } else {
    r.sup_derivative = sampled_sup(derivative_function(f, N, ctx), grid, derivative_defined_at_zero(f, N));
  }
  r.bound = pow(ctx.lift(2), static_cast<unsigned>(N)) / q_factorial(N, ctx) * r.sup_beta * r.sup_derivative;
  return r;
}

Scalar l2q_norm(const FunctionRep& g, const QContext& ctx) {
  const Scalar one = ctx.lift(1);
  if (g.is_polynomial()) {
    const Polynomial& p = g.polynomial();
    return sqrt(jackson_integral_0b(p * p, one, ctx));
  }
  Callback sq;
  sq.name = g.name() + "^2";
  sq.eval = [g](const Scalar& x) {
    Scalar v = g(x);
    return v * v;
  };
  return sqrt(jackson_integral_0b(sq, one, ctx));
}

ApproxReport approximate(const FunctionRep& f, int N, const QContext& ctx, const ApproxOptions& options) {
  ApproxReport r;
  r.N = N;
  r.coefficients = approx_coefficients(f, N, ctx);
  const BernoulliTable table(N, ctx);
  const Polynomial series = approx_polynomial(r.coefficients, table);

  auto bound = remainder_bound(f, N, ctx, options.bound_grid);
  r.remainder_bound = bound.bound;
  r.sup_beta = bound.sup_beta;
  r.sup_derivative = bound.sup_derivative;

  if (f.is_polynomial()) {
    r.l2q_error = l2q_norm(f.polynomial() - series, ctx);
  } else {
    Callback diff;
    diff.name = f.name() + " - series";
    diff.eval = [f, series](const Scalar& x) { return f(x) - series(x); };
    r.l2q_error = l2q_norm(diff, ctx);
  }

  r.max_sampled_error = ctx.lift(0);
  bool approximate_samples = false;
  for (const auto& x : unit_grid(options.sample_points, ctx)) {
    ApproxSample s{x, f(x), approx_eval(r.coefficients, x, table)};
    Scalar e = abs(s.error());
    approximate_samples |= !e.is_exact();
    if (e > r.max_sampled_error) r.max_sampled_error = e;
    r.samples.push_back(std::move(s));
  }
  if (approximate_samples) r.max_sampled_error = r.max_sampled_error.as_float();
  return r;
}

}  // namespace qbern
