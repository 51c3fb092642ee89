// Copyright (c) the bfa developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <map>

#include "bfa/sun.hpp"
#include "bfa/verdict.hpp"
#include "bfa/weights.hpp"

namespace bfa::compact {

using MatC = Eigen::MatrixXcd;

/// Finitely supported matrix-valued Fourier coefficients on the SU(n) dual;
/// the block for a label must be d_lambda x d_lambda.
struct FourierCoefficients {
  std::map<sun::HighestWeight, MatC> hat;
};

/// Weighted Fourier-algebra norm: sum over the support of
/// d_pi * w(pi) * ||f^(pi)||_1 for central descriptors, or
/// d_pi * ||W(pi) f^(pi)||_1 with the diagonal torus-extended weight.
double beurling_norm(const FourierCoefficients& c, const weights::WeightDescriptor& d);

/// Descending singular values; throws std::domain_error on singular input.
std::vector<double> singular_values(const MatC& a);

/// Central exponential weight membership on SU(n): a point is in the
/// spectrum iff the partial products of its singular values satisfy
/// sigma_1...sigma_k <= beta for every k < n. The input is normalised to
/// unit |det| (rejected if further than det_tol from it).
Verdict spectrum_member_central_exp(const MatC& a, double beta, double det_tol = 1e-9);

/// Torus-extended membership for diagonal representatives:
/// 1/beta_j <= |x_j| <= beta_j for every 1 <= j <= n-1.
Verdict spectrum_member_torus_extended(const sun::ComplexDiagonal& d,
                                       const std::vector<double>& beta);

struct SweepOptions {
  long long horizon = 200;  // largest lambda_1 visited
  double band = 1e-3;       // inconclusive band around growth factor 1
};

/// Numerical membership sweep for central weights: evaluates the ratio
/// norm(pi,D)/w(pi) over the window and fits the per-step geometric growth
/// factor along every primitive ray; verdicts outside the band are decided
/// by the fitted factor.
Verdict spectrum_sweep(const sun::ComplexDiagonal& d, const weights::WeightDescriptor& desc,
                       const SweepOptions& opt = {});

/// Relative residual of chi_a(x) chi_b(x) against the Clebsch-Gordan sum.
double evaluation_multiplicativity_check(sun::cxd x, int a, int b);

}  // namespace bfa::compact
