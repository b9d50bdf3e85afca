#pragma once

// q-deformed Euler-Maclaurin summation.
//
// The formulas are formal q-deformations: they reduce to the classical
// Euler-Maclaurin identities as q -> 1 but are not exact for q < 1. Every
// routine therefore returns the formula value together with a direct
// summation and their difference.

#include "qbern/function.hpp"
#include "qbern/numerics.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace qbern {

/// H_q^n(x) = prod_{i<n} (h + (1 - q^i) x); H_q^0 = 1.
Scalar h_operator(int n, const Scalar& x, const QContext& ctx);

/// Heine form sum_k binom(n,k)_q q^{k(k-1)/2} (x+h)^{n-k} (-x)^k.
Scalar h_operator_sum(int n, const Scalar& x, const QContext& ctx);

/// How the correction terms are grouped.
///   literal: (H^n(b) - H^n(a)) (D^{n-1}f(b) - D^{n-1}f(a)) beta_n/[n]!, n >= 1
///   shifted: (H^n(b) D^{n-1}f(b) - H^n(a) D^{n-1}f(a)) beta_n/[n]!,     n >= 2
/// The shifted form drops n = 1, which is the separate -f/[2]_q term; it
/// is the grouping that reproduces classical Euler-Maclaurin as q -> 1.
enum class EmVariant { literal, shifted };

std::string_view to_string(EmVariant v);
EmVariant parse_em_variant(std::string_view text);

/// One correction term. For the infinite form, b is the last b of the
/// limit. sum_of_powers stores b^{s-n+1} as derivative_b and
/// binom(s,n-1)_q beta_n/[n]_q as factor, with the a-side zero.
struct EmTerm {
  int n = 0;
  Scalar bracket_b;     // H_q^n(b)
  Scalar bracket_a;     // H_q^n(a)
  Scalar derivative_b;  // D_q^{n-1} f(b)
  Scalar derivative_a;  // D_q^{n-1} f(a)
  Scalar factor;        // beta_n/[n]_q!
  Scalar contribution;

  /// bracket_b - bracket_a.
  Scalar bracket() const { return bracket_b - bracket_a; }
};

struct EmReport {
  EmVariant variant = EmVariant::literal;
  Scalar integral;  // Jackson-integral term
  Scalar boundary;  // f-boundary term
  std::vector<EmTerm> terms;
  Scalar formula;   // integral + boundary + sum of contributions
  Scalar oracle;    // direct summation
  Scalar discrepancy;  // formula - oracle
  int terms_used = 0;
  long oracle_terms = 0;
  long limit_b = 0;  // last b reached by the infinite-form limit
};

/// sum_{m=a}^{b-1} f(m) against
///   int_a^b f d_q x - (f(b) - f(a))/[2]_q + sum_n (grouped term_n).
/// Requires h = 1, 0 <= a < b. `n_max` defaults to deg f + 1 for
/// polynomials (exact termination) and 8 otherwise.
EmReport em_finite(const FunctionRep& f, long a, long b, std::optional<int> n_max,
                   const QContext& ctx, EmVariant variant = EmVariant::literal);

/// sum_{m>=a} f(m) against int_a^inf f d_q x + f(a)/[2]_q + lim_b sum_n term_n(a,b),
/// the b -> inf limit of em_finite's corrections taken over
/// b = a+1, a+2, a+4, ... until two successive values agree.
EmReport em_infinite(const FunctionRep& f, long a, std::optional<int> n_max,
                     const QContext& ctx, EmVariant variant = EmVariant::shifted);

/// sum_{m=0}^{b-1} m^s against
///   b^{s+1}/[s+1] - b^s/[2] + sum_{n=2}^{s+1} H^n(b) binom(s,n-1)_q b^{s-n+1} beta_n/[n]_q.
EmReport sum_of_powers(int s, long b, const QContext& ctx);

}  // namespace qbern
