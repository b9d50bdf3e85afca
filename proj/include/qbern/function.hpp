#pragma once

#include "qbern/polynomial.hpp"

#include <functional>
#include <optional>
#include <string>
#include <variant>

namespace qbern {

/// Black-box real function f: Scalar -> Scalar.
///
/// `max_derivative_order` bounds the q-derivative order the numeric paths
/// may request. `q_derivative`, when set, returns D_q^n f(x) analytically
/// (valid at x = 0, where the sampled difference quotient is undefined).
/// The callable must be re-entrant.
struct Callback {
  std::function<Scalar(const Scalar&)> eval;
  int max_derivative_order = 8;
  std::function<Scalar(int, const Scalar&)> q_derivative;
  std::string name = "callback";
};

/// A function as either an exact polynomial or a callback.
class FunctionRep {
 public:
  FunctionRep(Polynomial p) : rep_(std::move(p)) {}  // NOLINT
  FunctionRep(Callback c);                            // NOLINT

  bool is_polynomial() const { return std::holds_alternative<Polynomial>(rep_); }
  const Polynomial& polynomial() const { return std::get<Polynomial>(rep_); }
  const Callback& callback() const { return std::get<Callback>(rep_); }
  std::string name() const;

  Scalar operator()(const Scalar& x) const;

 private:
  std::variant<Polynomial, Callback> rep_;
};

}  // namespace qbern
