#include <doctest.h>

#include "oracles.hpp"
#include "qbern/qcore.hpp"

using namespace qbern;

namespace {
const QContext half = make_context(Scalar::fraction(1, 2));
}

TEST_CASE("q_number") {
  CHECK(q_number(0, half) == Scalar(0));
  CHECK(q_number(3, half) == Scalar::fraction(7, 4));
  auto near1 = make_context(Scalar(1 - 1e-6), Scalar(1), Mode::floating);
  CHECK(q_number(5, near1).to_double() == doctest::Approx(5).epsilon(1e-4));
  for (int n = 0; n <= 20; ++n) CHECK(q_number(n, half).rational() == oracle::qnum(n, mpq_class(1, 2)));
}

TEST_CASE("q_factorial") {
  CHECK(q_factorial(0, half) == Scalar(1));
  CHECK(q_factorial(2, half) == Scalar::fraction(3, 2));
  CHECK(q_factorial(3, half) == Scalar::fraction(21, 8));
  CHECK_THROWS_AS(q_factorial(-1, half), DomainError);
}

TEST_CASE("q_binomial") {
  CHECK(q_binomial(5, 0, half) == Scalar(1));
  CHECK(q_binomial(2, 1, half) == Scalar::fraction(3, 2));
  CHECK(q_binomial(4, 2, half) == Scalar::fraction(35, 16));
  CHECK(q_binomial(3, 5, half) == Scalar(0));
  CHECK(q_binomial(3, -1, half) == Scalar(0));
  auto third = make_context(Scalar::fraction(1, 3));
  for (int n = 0; n <= 10; ++n)
    for (int k = 0; k <= n; ++k) {
      CHECK(q_binomial(n, k, third).rational() == oracle::qbinom(n, k, mpq_class(1, 3)));
      CHECK(q_binomial_pochhammer(n, k, third) == q_binomial(n, k, third));
    }
}

TEST_CASE("q_pochhammer") {
  CHECK(q_pochhammer(Scalar(7), 0, half) == Scalar(1));
  CHECK(q_pochhammer(Scalar(1), 3, half) == Scalar(0));
  CHECK(q_pochhammer(Scalar(2), 1, half) == Scalar(-1));
  CHECK(q_pochhammer(Scalar::fraction(1, 2), 3, half) == Scalar::fraction(21, 64));
}

TEST_CASE("q_pochhammer_inf") {
  CHECK(q_pochhammer_inf(Scalar(0), half).to_double() == 1.0);
  CHECK(q_pochhammer_inf(Scalar::fraction(1, 2), half).to_double() == doctest::Approx(0.2887880950866024).epsilon(1e-14));
  CHECK(q_pochhammer_inf(Scalar::fraction(1, 2), half).to_double() ==
        doctest::Approx(oracle::pochhammer_inf(0.5, 0.5)).epsilon(1e-14));
  Tolerances tight;
  tight.series_max_terms = 50;
  auto slow = make_context(Scalar(0.99999), Scalar(1), Mode::floating, tight);
  CHECK_THROWS_AS(q_pochhammer_inf(Scalar(1e9), slow), NonConvergence);
}

TEST_CASE("heine_expand") {
  CHECK(heine_expand(Scalar::fraction(3, 7), 0, half) == Scalar(1));
  CHECK(heine_expand(Scalar::fraction(3, 7), 1, half) == Scalar::fraction(4, 7));
  CHECK(heine_expand(Scalar::fraction(1, 2), 3, half) == Scalar::fraction(21, 64));
  for (int n = 0; n <= 12; ++n)
    CHECK(heine_expand(Scalar::fraction(-5, 3), n, half) == q_pochhammer(Scalar::fraction(-5, 3), n, half));
}

TEST_CASE("q_power") {
  CHECK(q_power(Scalar(3), Scalar(2), 0, half) == Scalar(1));
  CHECK(q_power(Scalar::fraction(2, 5), Scalar(0), 4, half) == pow(Scalar::fraction(2, 5), 4));
  CHECK(q_power(Scalar(1), Scalar(1), 2, half) == Scalar(0));
  // (x-a)(x-qa)(x-q^2 a)
  Scalar x = Scalar::fraction(3, 4), a = Scalar::fraction(1, 3);
  Scalar want = (x - a) * (x - a / Scalar(2)) * (x - a / Scalar(4));
  CHECK(q_power(x, a, 3, half) == want);
}

TEST_CASE("q_triangular_power") {
  CHECK(q_triangular_power(0, half) == Scalar(1));
  CHECK(q_triangular_power(1, half) == Scalar(1));
  CHECK(q_triangular_power(4, half) == Scalar::fraction(1, 64));
}
