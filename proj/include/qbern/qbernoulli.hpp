#pragma once

// q-Bernoulli numbers and polynomials generated by
//   z e_q(zt) / (e_q(z) - 1) = sum_n beta_{n,q}(t) z^n / [n]_q!

#include "qbern/numerics.hpp"
#include "qbern/polynomial.hpp"

#include <vector>

namespace qbern {

/// beta_{0..N,q} and the coefficient rows of beta_{n,q}(t) for one context.
/// Immutable after construction.
class BernoulliTable {
 public:
  /// Numbers from the recurrence
  ///   beta_n = -sum_{k<n} binom(n,k)_q beta_k / [n-k+1]_q,  beta_0 = 1.
  BernoulliTable(int max_n, const QContext& ctx);

  /// Builds the polynomial rows from caller-supplied numbers without
  /// checking them. Used to inject faults into verification runs.
  static BernoulliTable from_numbers(std::vector<Scalar> numbers, const QContext& ctx);

  const QContext& context() const { return ctx_; }
  int max_n() const { return static_cast<int>(numbers_.size()) - 1; }
  const std::vector<Scalar>& numbers() const { return numbers_; }
  const Scalar& number(int n) const;
  /// beta_{n,q}(t) = sum_k binom(n,k)_q beta_k t^{n-k}, monic of degree n.
  const Polynomial& polynomial(int n) const;

 private:
  BernoulliTable(std::vector<Scalar> numbers, const QContext& ctx);
  void build_rows();

  QContext ctx_;
  std::vector<Scalar> numbers_;
  std::vector<Polynomial> rows_;
};

inline BernoulliTable bernoulli_numbers(int max_n, const QContext& ctx) {
  return BernoulliTable(max_n, ctx);
}

Polynomial bernoulli_poly(int n, const BernoulliTable& table);
Scalar bernoulli_poly_eval(int n, const Scalar& t, const BernoulliTable& table);

/// beta_{n,q}(x, y) = sum_k binom(n,k)_q beta_{k,q}(x) y^{n-k}.
Scalar bernoulli_two_var(int n, const Scalar& x, const Scalar& y, const BernoulliTable& table);

/// Residuals of beta_{n,q}(x,1) - beta_{n,q}(x) against the two candidate
/// right-hand sides. `derived` uses [n]_q x^{n-1} and vanishes;
/// `factorial` uses [n]_q! x^{n-1}; the two coincide only for n <= 2.
struct DifferenceCheck {
  Scalar derived;
  Scalar factorial;
};

DifferenceCheck difference_equation_check(int n, const Scalar& x, const BernoulliTable& table);

}  // namespace qbern
