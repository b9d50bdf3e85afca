#pragma once

// Approximation on [0,1] by truncated q-Bernoulli series
//   f(x) ~ sum_{n<=N} C_n beta_{n,q}(x),  C_n = (1/[n]_q!) int_0^1 D_q^n f d_q x.

#include "qbern/function.hpp"
#include "qbern/qbernoulli.hpp"

#include <vector>

namespace qbern {

struct ApproxSample {
  Scalar x;
  Scalar f;
  Scalar approx;
  Scalar error() const { return f - approx; }
};

struct ApproxReport {
  int N = 0;
  std::vector<Scalar> coefficients;
  Scalar remainder_bound;
  Scalar sup_beta;        // sup |beta_{N,q}| on [0,1]
  Scalar sup_derivative;  // sup |D_q^N f| on [0,1]
  Scalar l2q_error;
  Scalar max_sampled_error;
  std::vector<ApproxSample> samples;
};

struct ApproxOptions {
  int sample_points = 1024;  // evenly spaced on [0,1], endpoints included
  int bound_grid = 1024;     // grid for the sups in the remainder bound
};

/// Evenly spaced points j/(n-1), j = 0..n-1; exact in exact mode.
std::vector<Scalar> unit_grid(int points, const QContext& ctx);

std::vector<Scalar> approx_coefficients(const FunctionRep& f, int N, const QContext& ctx);

/// sum_n C_n beta_{n,q}(x).
Scalar approx_eval(const std::vector<Scalar>& coefficients, const Scalar& x,
                   const BernoulliTable& table);

/// The same series collapsed into one polynomial.
Polynomial approx_polynomial(const std::vector<Scalar>& coefficients, const BernoulliTable& table);

struct RemainderBound {
  Scalar bound;  // (2^N/[N]_q!) sup|beta_N| sup|D_q^N f|
  Scalar sup_beta;
  Scalar sup_derivative;
};

RemainderBound remainder_bound(const FunctionRep& f, int N, const QContext& ctx,
                               int grid_points = 1024);

/// (int_0^1 g^2 d_q t)^{1/2}; exact only when the integral is a rational square.
Scalar l2q_norm(const FunctionRep& g, const QContext& ctx);

ApproxReport approximate(const FunctionRep& f, int N, const QContext& ctx,
                         const ApproxOptions& options = {});

}  // namespace qbern
