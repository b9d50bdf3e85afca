#include "qbern/verify.hpp"

#include "qbern/qapprox.hpp"
#include "qbern/qcore.hpp"
#include "qbern/qeulermac.hpp"
#include "qbern/qops.hpp"

#include <algorithm>
#include <random>

namespace qbern {

namespace {

class Check {
 public:
  Check(std::string name, const QContext& ctx) : ctx_(ctx) { result_.name = std::move(name); }

  void expect_close(const Scalar& got, const Scalar& want, const std::string& where) {
    ++result_.cases;
    if (scalar_close(got, want, ctx_)) return;
    if (result_.passed)
      result_.detail = where + ": got " + got.to_string() + ", want " + want.to_string();
    result_.passed = false;
  }

  void expect_close(const Polynomial& got, const Polynomial& want, const std::string& where) {
    int deg = std::max(got.degree(), want.degree());
    for (int k = 0; k <= deg; ++k)
      expect_close(got.coefficient(k), want.coefficient(k), where + " [t^" + std::to_string(k) + "]");
    if (deg < 0) ++result_.cases;
  }

  CheckResult done() { return std::move(result_); }

 private:
  const QContext& ctx_;
  CheckResult result_;
};

struct Sampler {
  explicit Sampler(unsigned seed) : rng(seed) {}

  // p/d with |p| <= 9, 1 <= d <= 9; float-tagged in float mode.
  Scalar rational(const QContext& ctx) {
    std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
    return ctx.lift(Scalar::fraction(num(rng), den(rng)));
  }

  // Magnitude at most 1 keeps float-mode cancellation inside eps.
  Scalar unit_rational(const QContext& ctx) {
    std::uniform_int_distribution<int> den(1, 9);
    int d = den(rng);
    std::uniform_int_distribution<int> num(-d, d);
    return ctx.lift(Scalar::fraction(num(rng), d));
  }

  Polynomial polynomial(int degree, const QContext& ctx) {
    std::vector<Scalar> c;
    for (int k = 0; k <= degree; ++k) c.push_back(unit_rational(ctx));
    c.back() = c.back().is_zero() ? ctx.lift(1) : c.back();
    return Polynomial(std::move(c));
  }

  std::mt19937 rng;
};

std::string at(std::string_view label, int n) { return std::string(label) + "=" + std::to_string(n); }

}  // namespace

std::vector<CheckResult> run_identity_suite(const BernoulliTable& table, unsigned seed) {
  const QContext& ctx = table.context();
  const int max_n = table.max_n();
  const Scalar& q = ctx.q();
  const Scalar one = ctx.lift(1), zero = ctx.lift(0);
  Sampler sample(seed);
  std::vector<CheckResult> out;

  {
    Check c("closed forms beta_0..3", ctx);
    c.expect_close(table.number(0), one, "beta_0");
    c.expect_close(table.polynomial(0), Polynomial::constant(one), "beta_0(t)");
    if (max_n >= 1) {
      Scalar b1 = -one / q_number(2, ctx);
      c.expect_close(table.number(1), b1, "beta_1");
      c.expect_close(table.polynomial(1), Polynomial({b1, one}), "beta_1(t)");
    }
    if (max_n >= 2) {
      Scalar b2 = q * q / q_factorial(3, ctx);
      c.expect_close(table.number(2), b2, "beta_2");
      c.expect_close(table.polynomial(2), Polynomial({b2, -one, one}), "beta_2(t)");
    }
    if (max_n >= 3) {
      Scalar b3 = pow(q, 3) * (one - q) / (q_number(5, ctx) + q_number(4, ctx) - one);
      c.expect_close(table.number(3), b3, "beta_3");
      Polynomial row({b3, q * q / q_number(2, ctx), -q_number(3, ctx) / q_number(2, ctx), one});
      c.expect_close(table.polynomial(3), row, "beta_3(t)");
    }
    out.push_back(c.done());
  }
  {
    Check c("monic rows, constant term = beta_n", ctx);
    for (int n = 0; n <= max_n; ++n) {
      const Polynomial& p = table.polynomial(n);
      c.expect_close(Scalar(p.degree()), Scalar(n), at("degree n", n));
      c.expect_close(p.coefficient(n), one, at("leading n", n));
      c.expect_close(p.coefficient(0), table.number(n), at("constant n", n));
    }
    out.push_back(c.done());
  }
  {
    Check c("D_q beta_n = [n] beta_{n-1}", ctx);
    for (int n = 1; n <= max_n; ++n)
      c.expect_close(q_derivative(table.polynomial(n), ctx), table.polynomial(n - 1) * q_number(n, ctx),
                     at("n", n));
    out.push_back(c.done());
  }
  {
    Check c("sum binom(n,k) beta_k/[n-k+1] = delta_0n", ctx);
    for (int n = 0; n <= max_n; ++n) {
      Scalar s = zero;
      for (int k = 0; k <= n; ++k) s += q_binomial(n, k, ctx) * table.number(k) / q_number(n - k + 1, ctx);
      c.expect_close(s, n == 0 ? one : zero, at("n", n));
    }
    out.push_back(c.done());
  }
  {
    Check c("int_0^1 beta_n d_q t = delta_0n", ctx);
    for (int n = 0; n <= max_n; ++n)
      c.expect_close(jackson_integral_0b(table.polynomial(n), one, ctx), n == 0 ? one : zero, at("n", n));
    out.push_back(c.done());
  }
  {
    Check c("beta_n(x,1) - beta_n(x) = [n] x^{n-1}", ctx);
    for (int n = 1; n <= max_n; ++n)
      for (int i = 0; i < 3; ++i) c.expect_close(difference_equation_check(n, sample.unit_rational(ctx), table).derived, zero, at("n", n));
    out.push_back(c.done());
  }
  {
    Check c("Heine expansion = (a;q)_n", ctx);
    for (int n = 0; n <= max_n; ++n)
      for (int i = 0; i < 3; ++i) {
        Scalar a = sample.unit_rational(ctx);
        c.expect_close(heine_expand(a, n, ctx), q_pochhammer(a, n, ctx), at("n", n) + " a=" + a.to_string());
      }
    out.push_back(c.done());
  }
  {
    Check c("q-binomial: factorial form, Pochhammer form, Pascal rule", ctx);
    for (int n = 1; n <= max_n; ++n)
      for (int k = 0; k <= n; ++k) {
        Scalar b = q_binomial(n, k, ctx);
        c.expect_close(b, q_binomial_pochhammer(n, k, ctx), at("n", n) + " " + at("k", k));
        c.expect_close(b, q_binomial(n - 1, k - 1, ctx) + pow(q, static_cast<unsigned>(k)) * q_binomial(n - 1, k, ctx),
                       at("pascal n", n) + " " + at("k", k));
      }
    out.push_back(c.done());
  }
  {
    Check c("H_q^n product = Heine sum = (x+h-x)_q^n", ctx);
    for (int i = 0; i < 4; ++i) {
      Scalar h = sample.unit_rational(ctx);
      if (h.is_zero()) h = one;
      QContext hc = ctx.with_h(h);
      for (int n = 0; n <= max_n; ++n) {
        Scalar x = sample.unit_rational(ctx);
        Scalar prod = h_operator(n, x, hc);
        c.expect_close(prod, h_operator_sum(n, x, hc), at("sum n", n));
        c.expect_close(prod, q_power(x + h, x, n, hc), at("q_power n", n));
      }
    }
    out.push_back(c.done());
  }
  const int poly_degree = std::min(max_n, 8);
  {
    Check c("q-Taylor reconstruction", ctx);
    for (int d = 0; d <= poly_degree; ++d) {
      Polynomial f = sample.polynomial(d, ctx);
      Scalar a = sample.unit_rational(ctx), x = sample.unit_rational(ctx);
      c.expect_close(q_taylor_eval(f, a, x, ctx), f(x), at("deg", d));
    }
    out.push_back(c.done());
  }
  {
    Check c("F(x+h) = sum H^j(x) D_q^j F(x)/[j]!", ctx);
    for (int d = 0; d <= poly_degree; ++d) {
      Polynomial F = sample.polynomial(d, ctx);
      Scalar x = sample.unit_rational(ctx);
      Scalar h = sample.unit_rational(ctx);
      if (h.is_zero()) h = one;
      QContext hc = ctx.with_h(h);
      Scalar sum = zero;
      Polynomial D = F;
      for (int j = 0; j <= d; ++j) {
        sum += h_operator(j, x, hc) * D(x) / q_factorial(j, ctx);
        D = q_derivative(D, ctx);
      }
      c.expect_close(sum, F(x + h), at("deg", d));
    }
    out.push_back(c.done());
  }
  {
    Check c("fundamental theorem of q-calculus", ctx);
    for (int d = 0; d <= poly_degree; ++d) {
      Polynomial f = sample.polynomial(d, ctx);
      Polynomial F = q_antiderivative(f, ctx);
      Scalar b = sample.rational(ctx);
      c.expect_close(q_derivative(F, ctx), f, at("D_q F deg", d));
      if (b.sign() >= 0) c.expect_close(jackson_integral_0b(f, b, ctx), F(b) - F(zero), at("int deg", d));
    }
    out.push_back(c.done());
  }
  {
    Check c("fundamental theorem of h-calculus", ctx);
    for (int span = 1; span <= 10; ++span) {
      Scalar h = sample.unit_rational(ctx);
      if (h.is_zero()) h = one;
      QContext hc = ctx.with_h(h);
      Polynomial F = sample.polynomial(std::min(span, poly_degree), ctx);
      Scalar a = sample.unit_rational(ctx);
      Scalar b = a + h * Scalar(span);
      c.expect_close(h_integral(h_difference(F, hc), a, b, hc), F(b) - F(a), at("span", span));
    }
    out.push_back(c.done());
  }
  {
    Check c("coefficient recovery C(beta_m) = delta_m", ctx);
    for (int m = 0; m <= std::min(max_n, 10); ++m) {
      auto coeffs = approx_coefficients(table.polynomial(m), max_n, ctx);
      for (int n = 0; n <= max_n; ++n)
        c.expect_close(coeffs[static_cast<std::size_t>(n)], n == m ? one : zero, at("m", m) + " " + at("n", n));
    }
    out.push_back(c.done());
  }
  return out;
}

bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

}  // namespace qbern
