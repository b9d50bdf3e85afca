#pragma once

#include "qbern/numerics.hpp"

#include <span>
#include <vector>

namespace qbern {

/// Dense univariate polynomial, ascending coefficients, trailing zeros
/// stripped. The zero polynomial has no coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coeffs);

  static Polynomial constant(const Scalar& c);
  static Polynomial monomial(int degree, const Scalar& c = Scalar(1));

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::span<const Scalar> coefficients() const { return coeffs_; }
  /// Zero beyond the degree.
  Scalar coefficient(int k) const;

  /// Horner evaluation.
  Scalar operator()(const Scalar& x) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Scalar& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Scalar& c) { return a *= c; }
  friend Polynomial operator*(const Scalar& c, Polynomial a) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Every coefficient converted to double.
  Polynomial as_float() const;

 private:
  void normalize();
  std::vector<Scalar> coeffs_;
};

}  // namespace qbern
