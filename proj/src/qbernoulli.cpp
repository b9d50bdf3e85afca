#include "qbern/qbernoulli.hpp"

#include "qbern/qcore.hpp"

namespace qbern {

BernoulliTable::BernoulliTable(int max_n, const QContext& ctx) : ctx_(ctx) {
  if (max_n < 0) throw DomainError("Bernoulli table size must be nonnegative");
  numbers_.reserve(static_cast<std::size_t>(max_n) + 1);
  numbers_.push_back(ctx.lift(1));
  for (int n = 1; n <= max_n; ++n) {
    Scalar acc = ctx.lift(0);
    for (int k = 0; k < n; ++k)
      acc += q_binomial(n, k, ctx) * numbers_[static_cast<std::size_t>(k)] / q_number(n - k + 1, ctx);
    numbers_.push_back(-acc);
  }
  build_rows();
}

BernoulliTable::BernoulliTable(std::vector<Scalar> numbers, const QContext& ctx)
    : ctx_(ctx), numbers_(std::move(numbers)) {
  if (numbers_.empty()) throw DomainError("Bernoulli table needs beta_0");
  build_rows();
}

BernoulliTable BernoulliTable::from_numbers(std::vector<Scalar> numbers, const QContext& ctx) {
  return BernoulliTable(std::move(numbers), ctx);
}

void BernoulliTable::build_rows() {
  rows_.clear();
  for (int n = 0; n <= max_n(); ++n) {
    std::vector<Scalar> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
      c[static_cast<std::size_t>(n - k)] = q_binomial(n, k, ctx_) * numbers_[static_cast<std::size_t>(k)];
    rows_.emplace_back(std::move(c));
  }
}

const Scalar& BernoulliTable::number(int n) const {
  if (n < 0 || n > max_n())
    throw IndexError("beta_" + std::to_string(n) + " outside table of size " + std::to_string(max_n()));
  return numbers_[static_cast<std::size_t>(n)];
}

const Polynomial& BernoulliTable::polynomial(int n) const {
  if (n < 0 || n > max_n())
    throw IndexError("beta_" + std::to_string(n) + "(t) outside table of size " + std::to_string(max_n()));
  return rows_[static_cast<std::size_t>(n)];
}

Polynomial bernoulli_poly(int n, const BernoulliTable& table) { return table.polynomial(n); }

Scalar bernoulli_poly_eval(int n, const Scalar& t, const BernoulliTable& table) {
  return table.polynomial(n)(table.context().lift(t));
}

Scalar bernoulli_two_var(int n, const Scalar& x, const Scalar& y, const BernoulliTable& table) {
  const QContext& ctx = table.context();
  Scalar sum = ctx.lift(0);
  Scalar y_pow = ctx.lift(1);  // y^{n-k}, k running down from n
  for (int k = n; k >= 0; --k) {
    sum += q_binomial(n, k, ctx) * bernoulli_poly_eval(k, x, table) * y_pow;
    y_pow *= y;
  }
  return sum;
}

DifferenceCheck difference_equation_check(int n, const Scalar& x, const BernoulliTable& table) {
  if (n < 1) throw DomainError("difference equation needs n >= 1");
  const QContext& ctx = table.context();
  Scalar lhs = bernoulli_two_var(n, x, Scalar(1), table) - bernoulli_poly_eval(n, x, table);
  Scalar x_pow = pow(ctx.lift(x), static_cast<unsigned>(n - 1));
  return {lhs - q_number(n, ctx) * x_pow, lhs - q_factorial(n, ctx) * x_pow};
}

}  // namespace qbern
