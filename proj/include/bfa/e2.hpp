// Copyright (c) the bfa developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>

#include "bfa/verdict.hpp"
#include "bfa/weights.hpp"

namespace bfa::e2 {

using cxd = std::complex<double>;

/// Complexified Euclidean motion group element: (x, y) in C^2, z in C^*.
/// The rotation parameter s (z = e^{is}) is taken in the strip
/// 0 <= Re s < 2 pi. A = sqrt((Im x)^2 + (Im y)^2).
struct E2CPoint {
  cxd x = 0.0, y = 0.0, z = 1.0;

  double a_invariant() const;  // A
  cxd log_s() const;           // s with Re s in [0, 2 pi)
};

/// (x,y,z)(x',y',z') = ((x,y) + rho(z)(x',y'), z z') with rho extended
/// holomorphically through cos/sin of the strip parameter.
E2CPoint e2_mul(const E2CPoint& g, const E2CPoint& h);

/// exp(sS + xX + yY); the removable singularity at s = 0 gives (x, y, 1).
E2CPoint e2_exp(double s, double x, double y);

enum class Gen { S, X, Y };

/// Lie derivative matrices on the basis window e_n, |n| <= N:
/// S is diagonal -i n, X couples i r/2 (e_{n-1} + e_{n+1}),
/// Y couples r/2 (e_{n+1} - e_{n-1}).
Eigen::MatrixXcd e2_lie_op(Gen g, double r, int window);

enum class LapKind { Poly, Exp };

/// Laplacian-derived weight at the mode (n, r): (1 + n^2 + r^2)^m or
/// exp(t sqrt(n^2 + r^2)).
double e2_laplacian_weight(LapKind kind, double param, double r, long long n);

struct E2NormBounds {
  double factored_bound = 0.0;   // exp(rA) * sup_n exp(n Im s - t sqrt(n^2+r^2))
  double truncated_norm = 0.0;   // operator norm of the assembled window matrix
  double aliasing = 0.0;         // trailing symbol-coefficient mass on the theta grid
};

/// Norm of the complexified action against the exponential Laplacian weight
/// at a fixed representation parameter r, via the multiplication/diagonal
/// factorisation and via explicit assembly on the window. Throws
/// std::runtime_error when the window cannot stabilise the supremum.
E2NormBounds e2_complexified_norm(const E2CPoint& p, double t, double r, int window,
                                  double slope_tol = 1e-6);

/// Closed-form membership: e2lap(t) gives the ball
/// (Im x)^2 + (Im y)^2 + (log|z|)^2 <= t^2; abelradial(beta) the disc with
/// |z| = 1; a two-parameter abelexp the rotated box with |z| = 1; a
/// one-parameter abelexp the annulus 1/beta <= |z| <= beta with real x, y.
Verdict e2_spectrum_member(const E2CPoint& p, const weights::WeightDescriptor& d);

struct E2SweepGrid {
  long long nmax = 200;
  double rmin = 0.05, rmax = 50.0;
  int rcount = 50;
  double band = 0.02;
};

/// Numerical cross-check of the e2lap ball: classify by the sign of
/// max (n Im s + r A - t sqrt(n^2+r^2)) / sqrt(n^2+r^2) over the grid.
Verdict e2_spectrum_sweep(const E2CPoint& p, double t, const E2SweepGrid& grid = {});

/// Laplacian coproduct on the doubled window e_{m,n}, |m|,|n| <= N:
/// diagonal part (m+n)^2 + r^2 + s^2 and the anti-diagonal shift pair with
/// coefficient r s. Indexing is row-major over (m + N, n + N).
std::vector<double> e2_coproduct_diag(double r, double s, int window);
Eigen::SparseMatrix<double> e2_coproduct_shift(double r, double s, int window);

/// Operator norm of the truncated shift part, computed blockwise along the
/// anti-diagonals m + n = const (each block is a free tridiagonal).
double e2_coproduct_shift_norm(double r, double s, int window);

/// Radial fusion inequality sup_{|r-s| <= a <= r+s} w(a) <= w(r) w(s),
/// checked on an a-grid per sample pair.
CheckReport e2_radial_submult(const std::function<double(double)>& log_w,
                              const std::vector<std::pair<double, double>>& samples,
                              int a_resolution = 257);

}  // namespace bfa::e2
