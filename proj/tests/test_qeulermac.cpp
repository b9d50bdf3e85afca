#include <doctest.h>

#include "oracles.hpp"
#include "qbern/function_spec.hpp"
#include "qbern/qbernoulli.hpp"
#include "qbern/qcore.hpp"
#include "qbern/qeulermac.hpp"

using namespace qbern;

namespace {
Scalar fr(long long p, long long q) { return Scalar::fraction(p, q); }
const QContext half = make_context(fr(1, 2));
QContext fctx(double q) { return make_context(Scalar(q), Scalar(1), Mode::floating); }
double disc(const EmReport& r) { return std::abs(r.discrepancy.to_double()); }
}  // namespace

TEST_CASE("H operator") {
  CHECK(h_operator(0, fr(3, 5), half) == Scalar(1));
  CHECK(h_operator(1, fr(3, 5), half) == Scalar(1));
  CHECK(h_operator(1, fr(3, 5), half.with_h(fr(2, 7))) == fr(2, 7));
  CHECK(h_operator(2, Scalar(1), half) == fr(3, 2));
  for (int n = 0; n <= 12; ++n) {
    auto hc = half.with_h(fr(-3, 4));
    CHECK(h_operator(n, fr(5, 3), hc) == h_operator_sum(n, fr(5, 3), hc));
    CHECK(h_operator(n, fr(5, 3), hc) == q_power(fr(5, 3) + fr(-3, 4), fr(5, 3), n, hc));
  }
}

TEST_CASE("variant names") {
  CHECK(parse_em_variant("literal") == EmVariant::literal);
  CHECK(parse_em_variant("shifted") == EmVariant::shifted);
  CHECK(to_string(EmVariant::shifted) == "shifted");
  CHECK_THROWS_AS(parse_em_variant("other"), DomainError);
}

TEST_CASE("em_finite fixed examples") {
  auto one = em_finite(Polynomial::constant(Scalar(1)), 0, 1, std::nullopt, half);
  CHECK(one.formula == Scalar(1));
  CHECK(one.oracle == Scalar(1));
  CHECK(one.discrepancy == Scalar(0));

  auto x = em_finite(Polynomial::monomial(1), 0, 2, std::nullopt, half);
  CHECK(x.integral == fr(8, 3));
  CHECK(x.boundary == fr(-4, 3));
  CHECK(x.formula == fr(4, 3));
  CHECK(x.oracle == Scalar(1));
  CHECK(x.discrepancy == fr(1, 3));
  for (const auto& t : x.terms) CHECK(t.contribution == Scalar(0));

  CHECK(disc(em_finite(Polynomial::monomial(1), 0, 2, std::nullopt, fctx(0.999))) < 2e-3);
  CHECK_THROWS_AS(em_finite(Polynomial::monomial(1), 2, 2, std::nullopt, half), DomainError);
  CHECK_THROWS_AS(em_finite(Polynomial::monomial(1), 0, 2, std::nullopt, half.with_h(fr(1, 2))), DomainError);
}

TEST_CASE("em_finite oracle is the direct sum") {
  oracle::Fn f = [](const oracle::Q& x) -> oracle::Q { return 2 * x * x * x - x + oracle::Q(1, 3); };
  Polynomial p(std::vector<Scalar>{fr(1, 3), Scalar(-1), Scalar(0), Scalar(2)});
  for (long a : {0L, 1L, 3L})
    for (long b : {a + 1, a + 4, a + 9}) {
      auto r = em_finite(p, a, b, std::nullopt, half);
      CHECK(r.oracle.rational() == oracle::sum_range(f, a, b));
      CHECK(r.discrepancy == r.formula - r.oracle);
    }
}

TEST_CASE("term values") {
  auto r = em_finite(Polynomial::monomial(2), 0, 5, std::nullopt, half, EmVariant::shifted);
  REQUIRE(r.terms.size() == 2);
  CHECK(r.terms[0].n == 2);
  CHECK(r.terms[1].n == 3);
  BernoulliTable t(3, half);
  // n=2: (H^2(5) D f(5) - H^2(0) D f(0)) beta_2/[2]!
  Scalar want = (h_operator(2, Scalar(5), half) * fr(15, 2) - Scalar(0)) * t.number(2) / q_factorial(2, half);
  CHECK(r.terms[0].contribution == want);
}

TEST_CASE("shifted grouping converges as q -> 1") {
  for (int s = 1; s <= 3; ++s)
    for (long b : {2L, 5L}) {
      double prev = 1e300;
      double oracle_value = 0;
      for (double q : {0.9, 0.99, 0.999}) {
        auto r = em_finite(Polynomial::monomial(s), 0, b, std::nullopt, fctx(q), EmVariant::shifted);
        CHECK(disc(r) < prev);
        prev = disc(r);
        oracle_value = r.oracle.to_double();
      }
      CHECK(prev < 1e-2 * oracle_value);
    }
}

TEST_CASE("shifted grouping reference values") {
  // x^3, b = 5
  CHECK(disc(em_finite(Polynomial::monomial(3), 0, 5, std::nullopt, fctx(0.9), EmVariant::shifted)) ==
        doctest::Approx(24.487648865721823).epsilon(1e-9));
  CHECK(disc(em_finite(Polynomial::monomial(2), 0, 2, std::nullopt, fctx(0.999), EmVariant::shifted)) ==
        doctest::Approx(0.00217).epsilon(2e-3));
}

TEST_CASE("literal grouping stalls for x^2 and x^3") {
  auto r = em_finite(Polynomial::monomial(3), 0, 2, std::nullopt, fctx(0.999));
  CHECK(disc(r) > 0.9);
}

TEST_CASE("em_infinite") {
  auto zero = em_infinite(Polynomial{}, 0, std::nullopt, half);
  CHECK(zero.formula == Scalar(0));
  CHECK(zero.oracle == Scalar(0));
  CHECK_THROWS_AS(em_infinite(Polynomial::constant(Scalar(1)), 0, std::nullopt, half), NonConvergence);

  auto r = em_infinite(eq_neg_function(half), 0, 8, half);
  CHECK(r.oracle.to_double() == doctest::Approx(1.9667892710451855).epsilon(1e-12));
  CHECK(r.integral.to_double() == doctest::Approx(1).epsilon(1e-10));
  CHECK(r.boundary.to_double() == doctest::Approx(2.0 / 3).epsilon(1e-14));
  CHECK(r.formula.to_double() == doctest::Approx(1.72242).epsilon(1e-4));
  CHECK(std::isfinite(r.discrepancy.to_double()));
  CHECK_THROWS_AS(em_infinite(eq_neg_function(half), 0, 8, half, EmVariant::literal), NonConvergence);
}

TEST_CASE("sum_of_powers") {
  CHECK(sum_of_powers(1, 1, half).oracle == Scalar(0));
  auto r = sum_of_powers(1, 2, half);
  CHECK(r.oracle == Scalar(1));
  CHECK(r.formula == fr(92, 63));
  CHECK_FALSE(r.discrepancy == Scalar(0));
  auto near = sum_of_powers(2, 5, fctx(0.9999));
  CHECK(near.oracle.to_double() == 30);
  CHECK(disc(near) < 5e-2);
  for (int s = 1; s <= 6; ++s) CHECK(sum_of_powers(s, 7, half).oracle.rational() == oracle::power_sum(s, 7));
  CHECK_THROWS_AS(sum_of_powers(0, 2, half), DomainError);
  CHECK_THROWS_AS(sum_of_powers(1, 0, half), DomainError);
}
