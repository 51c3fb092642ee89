// Copyright (c) the bfa developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <functional>

#include "bfa/quadrature.hpp"
#include "bfa/verdict.hpp"
#include "bfa/weights.hpp"

namespace bfa::heis {

using cxd = std::complex<double>;

/// Heisenberg group element in (y, z, x) coordinates; complex coordinates
/// give the complexification. Group law:
/// (y,z,x)(y',z',x') = (y+y', z+z'+x y', x+x').
struct HeisPoint {
  cxd y = 0.0, z = 0.0, x = 0.0;
};

HeisPoint heis_mul(const HeisPoint& g, const HeisPoint& h);
HeisPoint heis_inverse(const HeisPoint& g);
inline HeisPoint heis_identity() { return {}; }

/// exp(xX + yY + zZ) = (y, z + x y / 2, x); verbatim for complex inputs.
HeisPoint heis_exp(cxd x, cxd y, cxd z);

/// Symbol of the extended weight operator at the representation parameter
/// a != 0: W(a) acts on L^2(R) as multiplication by w(a t, -a).
double heis_weight_symbol(const std::function<double(double, double)>& wfun, double a, double t);
double heis_weight_symbol(const weights::WeightDescriptor& d, double a, double t);

/// Test functions f(t,u,s) = sum of separable Gaussian-polynomial factors
/// g1(t) g2(u) g3(s): the family is closed under the 1-D Fourier transforms
/// used by both evaluation routes.
struct TestFunction {
  std::vector<std::array<quad::GaussPoly, 3>> terms;

  static TestFunction gaussian(double a1 = 0.5, double a2 = 0.5, double a3 = 0.5);
};

struct QuadratureSpec {
  int hermite_basis = 8;    // number of Hermite functions in the operator window
  int nodes = 64;           // Gauss-Hermite nodes per axis
  double tolerance = 1e-6;  // rejected as "grid too coarse" above this
};

struct TruncatedOperator {
  Eigen::MatrixXcd mat;
  int basis = 0;
  double est_error = 0.0;  // relative Frobenius difference against half nodes
};

enum class FourierMethod { Kernel, Direct };

/// Integral kernel of the group Fourier transform of the R^3-Fourier image
/// of f at the parameter a: K_f(t,x) = 2 pi * (F_3 f)(-a t, a, t - x).
cxd heis_kernel_value(const TestFunction& f, double a, double t, double x);

/// Matrix of the operator in the Hermite basis. Kernel evaluates the closed
/// form above; Direct quadratures the representation formula
/// int F(y,z,x) e^{-i a (t y - z)} xi(-x+t) dy dz dx with F the 3-D Fourier
/// transform of f. Throws std::runtime_error("grid too coarse ...") when the
/// half-node error estimate exceeds the requested tolerance.
TruncatedOperator heis_fourier(const TestFunction& f, double a, const QuadratureSpec& spec = {},
                               FourierMethod method = FourierMethod::Kernel);

struct PlaneGrid {
  double amax = 20.0, bmax = 20.0;
  int na = 81, nb = 81;
};

/// Membership of a complexified point in the spectrum for a weight extended
/// from the (Y,Z) subgroup. Points whose Cartan direction leaves the
/// subalgebra (Im x != 0) are never in the spectrum. Built-in families are
/// decided in closed form; the grid supremum of e^{y'a + z'b}/w(a,b) is
/// attached as evidence.
Verdict heis_spectrum_member(const HeisPoint& p, const weights::WeightDescriptor& d,
                             const PlaneGrid& grid = {});

/// Grid-only variant for a caller-supplied log-weight on R^2; may return
/// Inconclusive near the boundary (band in log scale).
Verdict heis_spectrum_member(const HeisPoint& p,
                             const std::function<double(double, double)>& log_w,
                             const PlaneGrid& grid = {}, double band = 1e-3);

/// Reduced Heisenberg dual label: an infinite-dimensional series pi^n
/// (n != 0), a character chi_{r,s}, or the aggregate pi^0.
struct RHeisLabel {
  enum class Kind { Discrete, Character, PiZero } kind = Kind::Discrete;
  int n = 1;
  double r = 0.0, s = 0.0;

  static RHeisLabel discrete(int n);
  static RHeisLabel character(double r, double s);
  static RHeisLabel pi_zero();
  std::string str() const;
  bool operator==(const RHeisLabel& o) const;
};

/// Fusion rules: pi^n (x) pi^m = pi^{n+m} (n != -m), pi^n (x) pi^{-n} = pi^0,
/// pi^n (x) chi = pi^n, chi_{r,s} (x) chi_{r',s'} = chi_{r+r',s+s'}.
RHeisLabel rheis_tensor(const RHeisLabel& l1, const RHeisLabel& l2);

/// The four central-weight inequalities on a finite window: discrete
/// sub-multiplicativity, sup w_C <= w(n) w(-n), w_C >= 1, and continuous
/// sub-multiplicativity on grid pairs.
CheckReport rheis_central_weight_check(const std::function<double(int)>& log_wz,
                                       const std::function<double(double, double)>& log_wc,
                                       int window, const PlaneGrid& grid = {});

/// Plancherel point mass |n| / (2 pi) at the discrete series label.
double rheis_plancherel_atom(int n);

}  // namespace bfa::heis
