#include "qbern/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace qbern {

namespace {

Rational rational_from_double(double v) {
  Rational r(v);  // exact conversion of the binary value
  r.canonicalize();
  return r;
}

template <class ExactOp, class FloatOp>
void apply(std::variant<Rational, double>& lhs,
           const std::variant<Rational, double>& rhs, ExactOp exact_op,
           FloatOp float_op) {
  if (auto* a = std::get_if<Rational>(&lhs)) {
    if (auto* b = std::get_if<Rational>(&rhs)) {
      exact_op(*a, *b);
      return;
    }
    lhs = float_op(a->get_d(), std::get<double>(rhs));
    return;
  }
  double b = std::holds_alternative<double>(rhs) ? std::get<double>(rhs)
                                                 : std::get<Rational>(rhs).get_d();
  lhs = float_op(std::get<double>(lhs), b);
}

bool is_perfect_square(const mpz_class& z) {
  return z >= 0 && mpz_perfect_square_p(z.get_mpz_t()) != 0;
}

}  // namespace

Scalar::Scalar(long long v) {
  mpz_class z;
  // mpz has no long long constructor on every platform.
  mpz_set_str(z.get_mpz_t(), std::to_string(v).c_str(), 10);
  value_ = Rational(z);
}

Scalar::Scalar(Rational v) {
  v.canonicalize();
  value_ = std::move(v);
}

Scalar Scalar::fraction(long long num, long long den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational r = Scalar(num).rational();
  r /= Scalar(den).rational();
  return Scalar(std::move(r));
}

Scalar Scalar::parse(std::string_view text) {
  std::string s(text);
  auto trim = [](std::string& t) {
    auto b = t.find_first_not_of(" \t");
    auto e = t.find_last_not_of(" \t");
    t = b == std::string::npos ? std::string() : t.substr(b, e - b + 1);
  };
  trim(s);
  if (s.empty()) throw DomainError("empty number literal");
  if (s.find_first_of(".eE") != std::string::npos ||
      s == "inf" || s == "nan") {
    std::size_t used = 0;
    double v = 0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      throw DomainError("bad decimal literal '" + s + "'");
    }
    if (used != s.size()) throw DomainError("bad decimal literal '" + s + "'");
    return Scalar(v);
  }
  auto valid_int = [](std::string_view t) {
    if (!t.empty() && (t.front() == '-' || t.front() == '+')) t.remove_prefix(1);
    return !t.empty() &&
           std::all_of(t.begin(), t.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num.front() == '+') num.erase(0, 1);
  if (!valid_int(num) || !valid_int(den) || den.front() == '-' || den.front() == '+')
    throw DomainError("bad rational literal '" + s + "'");
  mpz_class n(num, 10), d(den, 10);
  if (d == 0) throw DomainError("zero denominator in '" + s + "'");
  return Scalar(Rational(n, d));
}

bool Scalar::is_zero() const { return sign() == 0; }

int Scalar::sign() const {
  if (auto* r = std::get_if<Rational>(&value_)) return sgn(*r);
  double d = std::get<double>(value_);
  return (d > 0) - (d < 0);
}

const Rational& Scalar::rational() const {
  if (auto* r = std::get_if<Rational>(&value_)) return *r;
  throw DomainError("value " + decimal_string() + " is not exact");
}

double Scalar::to_double() const {
  if (auto* r = std::get_if<Rational>(&value_)) return r->get_d();
  return std::get<double>(value_);
}

std::string Scalar::exact_string() const {
  if (auto* r = std::get_if<Rational>(&value_)) return r->get_str();
  double d = std::get<double>(value_);
  if (std::isnan(d)) return "nan";
  if (std::isinf(d)) return d > 0 ? "inf" : "-inf";
  return rational_from_double(d).get_str();
}

std::string Scalar::decimal_string() const {
  double d = to_double();
  if (std::isnan(d)) return "nan";
  if (std::isinf(d)) return d > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", d);
  return buf;
}

std::string Scalar::to_string() const {
  return is_exact() ? exact_string() : decimal_string();
}

Scalar Scalar::operator-() const {
  if (auto* r = std::get_if<Rational>(&value_)) return Scalar(Rational(-*r));
  return Scalar(-std::get<double>(value_));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  apply(value_, o.value_, [](Rational& a, const Rational& b) { a += b; },
        [](double a, double b) { return a + b; });
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  apply(value_, o.value_, [](Rational& a, const Rational& b) { a -= b; },
        [](double a, double b) { return a - b; });
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  apply(value_, o.value_, [](Rational& a, const Rational& b) { a *= b; },
        [](double a, double b) { return a * b; });
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (is_exact() && o.is_exact() && o.is_zero())
    throw DomainError("exact division by zero");
  apply(value_, o.value_, [](Rational& a, const Rational& b) { a /= b; },
        [](double a, double b) { return a / b; });
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return a.rational() == b.rational();
  double x = a.to_double(), y = b.to_double();
  if (std::isnan(x) || std::isnan(y)) return false;
  if (a.is_exact() != b.is_exact() && std::isfinite(x) && std::isfinite(y)) {
    const Scalar& f = a.is_exact() ? b : a;
    const Scalar& e = a.is_exact() ? a : b;
    return rational_from_double(f.to_double()) == e.rational();
  }
  return x == y;
}

bool operator<(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return a.rational() < b.rational();
  return a.to_double() < b.to_double();
}

Scalar abs(const Scalar& x) { return x.sign() < 0 ? -x : x; }

Scalar pow(const Scalar& base, unsigned exponent) {
  if (!base.is_exact()) return Scalar(std::pow(base.to_double(), exponent));
  const Rational& r = base.rational();
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), r.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), r.get_den_mpz_t(), exponent);
  return Scalar(Rational(num, den));
}

Scalar sqrt(const Scalar& x) {
  if (x.sign() < 0) throw DomainError("square root of negative value");
  if (x.is_exact()) {
    const Rational& r = x.rational();
    if (is_perfect_square(r.get_num()) && is_perfect_square(r.get_den())) {
      mpz_class n, d;
      mpz_sqrt(n.get_mpz_t(), r.get_num_mpz_t());
      mpz_sqrt(d.get_mpz_t(), r.get_den_mpz_t());
      return Scalar(Rational(n, d));
    }
  }
  return Scalar(std::sqrt(x.to_double()));
}

bool is_integer(const Scalar& x) {
  if (x.is_exact()) return x.rational().get_den() == 1;
  double d = x.to_double();
  return std::isfinite(d) && std::floor(d) == d;
}

// QContext ----------------------------------------------------------------

std::string_view to_string(Mode mode) {
  return mode == Mode::exact ? "exact" : "float";
}

QContext QContext::with_h(const Scalar& h) const {
  return make_context(q_, h, mode_, tol_);
}

QContext make_context(const Scalar& q, const Scalar& h, Mode mode,
                      const Tolerances& tol) {
  if (!(tol.eps_abs > 0) || !(tol.tail_tol > 0) || tol.series_max_terms <= 0)
    throw DomainError("tolerances must be positive");
  if (mode == Mode::exact && (!q.is_exact() || !h.is_exact()))
    throw DomainError("exact mode needs rational q and h");
  Scalar qq = mode == Mode::exact ? q : q.as_float();
  Scalar hh = mode == Mode::exact ? h : h.as_float();
  if (!(qq > Scalar(0) && qq < Scalar(1)))
    throw DomainError("q must lie in (0,1), got " + q.to_string());
  if (hh.is_zero()) throw DomainError("h must be nonzero");
  return QContext(std::move(qq), std::move(hh), mode, tol);
}

bool scalar_close(const Scalar& a, const Scalar& b, const QContext& ctx) {
  if (a.is_exact() && b.is_exact()) return a == b;
  double x = a.to_double(), y = b.to_double();
  double scale = std::max({1.0, std::fabs(x), std::fabs(y)});
  return std::fabs(x - y) <= ctx.eps_abs() * scale;
}

}  // namespace qbern
