#include "qbern/qops.hpp"

#include "qbern/qcore.hpp"

#include <algorithm>
#include <cmath>

namespace qbern {

FunctionRep::FunctionRep(Callback c) : rep_(std::move(c)) {
  if (!std::get<Callback>(rep_).eval) throw DomainError("callback without evaluator");
}

std::string FunctionRep::name() const {
  return is_polynomial() ? "polynomial" : callback().name;
}

Scalar FunctionRep::operator()(const Scalar& x) const {
  if (is_polynomial()) return polynomial()(x);
  return callback().eval(x);
}

// Polynomial algebra ------------------------------------------------------

Polynomial q_derivative(const Polynomial& p, const QContext& ctx) {
  std::vector<Scalar> out;
  for (int n = 1; n <= p.degree(); ++n) out.push_back(p.coefficient(n) * q_number(n, ctx));
  return Polynomial(std::move(out));
}

Polynomial q_derivative_n(const Polynomial& p, int n, const QContext& ctx) {
  if (n < 0) throw DomainError("negative derivative order");
  Polynomial d = p;
  for (int i = 0; i < n && !d.is_zero(); ++i) d = q_derivative(d, ctx);
  return d;
}

Polynomial q_antiderivative(const Polynomial& p, const QContext& ctx) {
  std::vector<Scalar> out{ctx.lift(0)};
  for (int n = 0; n <= p.degree(); ++n) out.push_back(p.coefficient(n) / q_number(n + 1, ctx));
  return Polynomial(std::move(out));
}

Polynomial h_difference(const Polynomial& p, const QContext& ctx) {
  // Horner in the ring: p(x + h)
  const Polynomial shift({ctx.h(), Scalar(1)});
  Polynomial shifted;
  for (int n = p.degree(); n >= 0; --n) shifted = shifted * shift + Polynomial::constant(p.coefficient(n));
  return (shifted - p) * (Scalar(1) / ctx.h());
}

// Pointwise operations ----------------------------------------------------

Scalar q_derivative(const FunctionRep& f, const Scalar& x, const QContext& ctx) {
  return q_derivative_n(f, 1, x, ctx);
}

Scalar q_derivative_n(const FunctionRep& f, int n, const Scalar& x, const QContext& ctx) {
  if (n < 0) throw DomainError("negative derivative order");
  if (f.is_polynomial()) return q_derivative_n(f.polynomial(), n, ctx)(ctx.lift(x));
  const Callback& cb = f.callback();
  if (n > cb.max_derivative_order)
    throw BudgetExceeded(cb.name + ": q-derivative order " + std::to_string(n) +
                         " exceeds declared " + std::to_string(cb.max_derivative_order));
  if (cb.q_derivative) return cb.q_derivative(n, x);
  if (n == 0) return cb.eval(x);
  if (x.is_zero()) throw DomainError(cb.name + ": q-derivative of a callback at x = 0");

  const Scalar& q = ctx.q();
  Scalar sum = ctx.lift(0);
  Scalar point = x;  // q^k x
  for (int k = 0; k <= n; ++k) {
    Scalar w = q_binomial(n, k, ctx) * q_triangular_power(n - k, ctx);
    Scalar term = w * cb.eval(point);
    if ((n - k) % 2) sum -= term; else sum += term;
    point *= q;
  }
  Scalar denom = pow(q - Scalar(1), n) * q_triangular_power(n, ctx) * pow(x, n);
  return sum / denom;
}

Scalar h_difference(const FunctionRep& f, const Scalar& x, const QContext& ctx) {
  return (f(x + ctx.h()) - f(x)) / ctx.h();
}

// Integrals ---------------------------------------------------------------

namespace {

Scalar jackson_polynomial_0b(const Polynomial& p, const Scalar& b, const QContext& ctx) {
  Scalar sum = ctx.lift(0);
  Scalar b_pow = ctx.lift(b);
  for (int n = 0; n <= p.degree(); ++n) {
    sum += p.coefficient(n) * b_pow / q_number(n + 1, ctx);
    b_pow *= b;
  }
  return sum;
}

// Exact terms accumulate exactly, double terms with Neumaier compensation.
class MixedSum {
 public:
  void add(const Scalar& v) {
    if (v.is_exact()) {
      exact_ += v;
      return;
    }
    has_float_ = true;
    double x = v.to_double();
    double t = sum_ + x;
    comp_ += std::fabs(sum_) >= std::fabs(x) ? (sum_ - t) + x : (x - t) + sum_;
    sum_ = t;
  }
  Scalar value() const { return has_float_ ? exact_ + Scalar(sum_ + comp_) : exact_; }
  double magnitude() const { return std::fabs(exact_.to_double() + sum_ + comp_); }

 private:
  Scalar exact_;
  double sum_ = 0, comp_ = 0;
  bool has_float_ = false;
};

Scalar jackson_callback_0b(const Callback& cb, const Scalar& b, const QContext& ctx) {
  constexpr long kMinSamples = 8;
  const Scalar& q = ctx.q();
  const double qd = q.to_double();
  MixedSum sum;
  Scalar point = b;              // q^i b
  Scalar weight = ctx.lift(1);   // q^i
  double weight_d = 1.0;
  double sup = 0.0;
  for (long i = 0;; ++i) {
    if (i >= ctx.series_max_terms())
      throw NonConvergence(cb.name + ": Jackson sum budget exhausted");
    Scalar fx = cb.eval(point);
    Scalar term = weight * fx;
    sum.add(term);
    double fabs_x = std::fabs(fx.to_double());
    if (!std::isfinite(fabs_x)) throw NonConvergence(cb.name + ": non-finite sample in Jackson sum");
    sup = std::max(sup, fabs_x);
    double scale = ctx.tail_tol() * std::max(1.0, sum.magnitude());
    double tail = weight_d * qd / (1.0 - qd) * sup;  // geometric bound on the rest
    if (i + 1 >= kMinSamples && std::fabs(term.to_double()) < scale && tail < scale) break;
    point *= q;
    weight *= q;
    weight_d *= qd;
  }
  return (Scalar(1) - q) * b * sum.value();
}

}  // namespace

Scalar jackson_integral_0b(const FunctionRep& f, const Scalar& b, const QContext& ctx) {
  if (f.is_polynomial()) return jackson_polynomial_0b(f.polynomial(), b, ctx);
  if (b.is_zero()) return ctx.lift(0);
  return jackson_callback_0b(f.callback(), b, ctx);
}

Scalar jackson_integral_ab(const FunctionRep& f, const Scalar& a, const Scalar& b,
                           const QContext& ctx) {
  if (a.sign() < 0 || b < a) throw DomainError("Jackson integral needs 0 <= a <= b");
  if (a == b) return ctx.lift(0);
  return jackson_integral_0b(f, b, ctx) - jackson_integral_0b(f, a, ctx);
}

Scalar jackson_integral_improper(const FunctionRep& f, const Scalar& a, const QContext& ctx) {
  if (a.sign() < 0) throw DomainError("improper Jackson integral needs a >= 0");
  const Scalar base = jackson_integral_0b(f, a, ctx);
  Scalar b = a + Scalar(1);
  Scalar prev = jackson_integral_0b(f, b, ctx) - base;
  for (long step = 1; step < ctx.series_max_terms(); ++step) {
    b += Scalar(1);
    Scalar cur = jackson_integral_0b(f, b, ctx) - base;
    double scale = std::max(1.0, std::fabs(cur.to_double()));
    if (std::fabs((cur - prev).to_double()) < ctx.tail_tol() * scale) return cur;
    prev = std::move(cur);
  }
  throw NonConvergence(f.name() + ": improper Jackson integral did not stabilize");
}

Scalar h_integral(const FunctionRep& f, const Scalar& a, const Scalar& b, const QContext& ctx) {
  const Scalar& h = ctx.h();
  Scalar steps = (b - a) / h;
  long count = 0;
  if (steps.is_exact()) {
    if (!is_integer(steps)) throw DomainError("h-integral: (b-a)/h is not an integer");
    count = steps.rational().get_num().get_si();
  } else {
    double k = steps.to_double();
    double r = std::round(k);
    if (!std::isfinite(k) || std::fabs(k - r) > ctx.eps_abs() * std::max(1.0, std::fabs(k)))
      throw DomainError("h-integral: (b-a)/h is not an integer");
    count = static_cast<long>(r);
  }
  if (count == 0) return ctx.lift(0);
  const Scalar& start = count > 0 ? a : b;
  Scalar sum = ctx.lift(0);
  Scalar x = start;
  for (long j = 0; j < std::labs(count); ++j) {
    sum += f(x);
    x += h;
  }
  return count > 0 ? h * sum : -(h * sum);
}

Scalar q_taylor_eval(const Polynomial& f, const Scalar& a, const Scalar& x, const QContext& ctx) {
  Scalar sum = ctx.lift(0);
  Polynomial d = f;
  for (int n = 0; n <= f.degree(); ++n) {
    sum += q_power(x, a, n, ctx) / q_factorial(n, ctx) * d(a);
    d = q_derivative(d, ctx);
  }
  return sum;
}

}  // namespace qbern
