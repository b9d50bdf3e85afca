#pragma once

// Numeric tower shared by every q-calculus routine: a mode-tagged Scalar
// (exact GMP rational or binary double) and the validated QContext.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace qbern {

// Errors -----------------------------------------------------------------

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A series, product or limit did not settle within the term budget.
class NonConvergence : public Error {
 public:
  using Error::Error;
};

/// A factor of an infinite product vanished.
class SingularityError : public Error {
 public:
  using Error::Error;
};

/// Requested q-derivative order exceeds what a callback declares.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

// Scalar -----------------------------------------------------------------

using Rational = mpq_class;

/// A real number that is either an exact rational or a double.
///
/// Arithmetic between two exact values stays exact. As soon as a double
/// takes part the result is a double, so an exact-mode computation that
/// passes through a transcendental routine comes out float-tagged; that
/// tag is how results are flagged approximate.
class Scalar {
 public:
  Scalar() : value_(Rational(0)) {}
  Scalar(int v) : value_(Rational(v)) {}                 // NOLINT
  Scalar(long v) : value_(Rational(v)) {}                // NOLINT
  Scalar(long long v);                                   // NOLINT
  Scalar(Rational v);                                    // NOLINT
  Scalar(double v) : value_(v) {}                        // NOLINT

  static Scalar fraction(long long num, long long den);

  /// Parses "p/q", an integer literal, or a decimal literal.
  /// "p/q" and integers are exact; anything with '.', 'e' or 'E' is a
  /// double.
  static Scalar parse(std::string_view text);

  bool is_exact() const { return std::holds_alternative<Rational>(value_); }
  bool is_zero() const;
  int sign() const;

  /// Throws DomainError when the value is a double.
  const Rational& rational() const;
  double to_double() const;

  /// Converts to a double-tagged Scalar.
  Scalar as_float() const { return Scalar(to_double()); }

  /// "p/q" (or "p") for exact values; the exact binary rational of a
  /// finite double; "inf", "-inf", "nan" otherwise.
  std::string exact_string() const;
  /// 17 significant digits.
  std::string decimal_string() const;
  /// exact_string() for exact values, decimal_string() for doubles.
  std::string to_string() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  /// Throws DomainError on exact division by zero.
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  /// Value equality; exact vs double compares the exact rational of the
  /// double.
  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator<(const Scalar& a, const Scalar& b);
  friend bool operator>(const Scalar& a, const Scalar& b) { return b < a; }
  friend bool operator<=(const Scalar& a, const Scalar& b) { return !(b < a); }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return !(a < b); }

 private:
  std::variant<Rational, double> value_;
};

Scalar abs(const Scalar& x);
Scalar pow(const Scalar& base, unsigned exponent);
Scalar sqrt(const Scalar& x);  // exact when x is a perfect rational square
bool is_integer(const Scalar& x);

// QContext ----------------------------------------------------------------

enum class Mode { exact, floating };

std::string_view to_string(Mode mode);

struct Tolerances {
  double eps_abs = 1e-12;
  long series_max_terms = 10'000;
  double tail_tol = 1e-15;
};

/// Deformation parameter, step, arithmetic mode and tolerances.
/// Immutable; obtain one through make_context().
class QContext {
 public:
  const Scalar& q() const { return q_; }
  const Scalar& h() const { return h_; }
  Mode mode() const { return mode_; }
  bool exact() const { return mode_ == Mode::exact; }
  double eps_abs() const { return tol_.eps_abs; }
  long series_max_terms() const { return tol_.series_max_terms; }
  double tail_tol() const { return tol_.tail_tol; }
  const Tolerances& tolerances() const { return tol_; }

  /// Converts a value into this context's arithmetic mode.
  Scalar lift(const Scalar& x) const { return exact() ? x : x.as_float(); }

  /// Same q, mode and tolerances with a different step h.
  QContext with_h(const Scalar& h) const;

 private:
  friend QContext make_context(const Scalar&, const Scalar&, Mode,
                               const Tolerances&);
  QContext(Scalar q, Scalar h, Mode mode, Tolerances tol)
      : q_(std::move(q)), h_(std::move(h)), mode_(mode), tol_(tol) {}

  Scalar q_;
  Scalar h_;
  Mode mode_;
  Tolerances tol_;
};

/// Validates 0 < q < 1, h != 0 and positive tolerances.
QContext make_context(const Scalar& q, const Scalar& h = Scalar(1),
                      Mode mode = Mode::exact, const Tolerances& tol = {});

/// exact mode: a == b.  float mode: |a-b| <= eps_abs * max(1, |a|, |b|).
bool scalar_close(const Scalar& a, const Scalar& b, const QContext& ctx);

}  // namespace qbern
