#pragma once

// The two q-exponentials
//   e_q(z) = sum z^n/[n]_q!            = prod 1/(1 - (1-q) q^k z),  |z| < 1/(1-q)
//   E_q(z) = sum q^{n(n-1)/2} z^n/[n]! = prod (1 + (1-q) q^k z)
// All results are float-tagged.

#include "qbern/numerics.hpp"

namespace qbern {

/// Series form of e_q. DomainError outside the disk |z| < 1/(1-q).
Scalar eq_series(const Scalar& z, const QContext& ctx);

/// Product form of e_q. SingularityError when a factor vanishes.
Scalar eq_product(const Scalar& z, const QContext& ctx);

/// E_q by its product form, convergent for every real z.
Scalar Eq_big(const Scalar& z, const QContext& ctx);

/// E_q by its series form; kept for cross-checks.
Scalar Eq_big_series(const Scalar& z, const QContext& ctx);

/// e_q(-x) = 1/E_q(x) for x >= 0.
Scalar eq_neg(const Scalar& x, const QContext& ctx);

}  // namespace qbern
