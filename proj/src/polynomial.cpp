#include "qbern/polynomial.hpp"

#include <algorithm>

namespace qbern {

Polynomial::Polynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

Polynomial Polynomial::constant(const Scalar& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(int degree, const Scalar& c) {
  if (degree < 0) throw DomainError("monomial: negative degree");
  std::vector<Scalar> v(static_cast<std::size_t>(degree) + 1, c.is_exact() ? Scalar(0) : Scalar(0.0));
  v.back() = c;
  return Polynomial(std::move(v));
}

void Polynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Scalar Polynomial::coefficient(int k) const {
  if (k < 0 || k > degree()) return Scalar(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

Scalar Polynomial::operator()(const Scalar& x) const {
  Scalar acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  if (coeffs_.empty() && !x.is_exact()) return Scalar(0.0);
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator*=(const Scalar& c) {
  for (auto& a : coeffs_) a *= c;
  normalize();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(out));
}

Polynomial Polynomial::as_float() const {
  std::vector<Scalar> v;
  v.reserve(coeffs_.size());
  std::transform(coeffs_.begin(), coeffs_.end(), std::back_inserter(v),
                 [](const Scalar& c) { return c.as_float(); });
  return Polynomial(std::move(v));
}

}  // namespace qbern
