// Copyright (c) the bfa developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <vector>

namespace bfa::quad {

using cxd = std::complex<double>;

/// Nodes and weights of a Gaussian rule. For Gauss-Hermite, `modified`
/// holds w_i * exp(x_i^2) so that integrals over the real line of functions
/// with a Gaussian envelope can be summed directly.
struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
  std::vector<double> modified;
};

Rule gauss_hermite(int n);  // Golub-Welsch from the Jacobi matrix
Rule gauss_legendre(int n);

/// Gaussian envelope exp(-rate (u - center)^2) describing where an
/// integrand lives; products multiply rates, convolutions combine them
/// harmonically.
struct GaussBand {
  double rate = 0.5;
  double center = 0.0;
};

GaussBand band_product(GaussBand a, GaussBand b);
GaussBand band_convolution(GaussBand a, GaussBand b);

/// Integrate f over the real line against a Gauss-Hermite rule transplanted
/// to the envelope: int f = sum_i modified_i / sqrt(rate) f(center + x_i/sqrt(rate)).
template <class F>
cxd integrate(F&& f, GaussBand band, const Rule& gh) {
  const double inv = 1.0 / std::sqrt(band.rate);
  cxd acc = 0.0;
  for (std::size_t i = 0; i < gh.nodes.size(); ++i)
    acc += gh.modified[i] * f(band.center + gh.nodes[i] * inv);
  return acc * inv;
}

/// phi_0..phi_{count-1} at t via the stable three-term recurrence;
/// orthonormal in L^2(R).
std::vector<double> hermite_functions(int count, double t);

/// P(u) exp(-rho u^2 + b u) with complex polynomial coefficients and shift;
/// closed under differentiation and the unitary Fourier transform
/// g^(xi) = (2 pi)^{-1/2} int g(u) e^{-i xi u} du.
struct GaussPoly {
  std::vector<cxd> coeff;  // P, ascending powers
  double rho = 0.5;
  cxd b = 0.0;

  cxd operator()(double u) const { return eval(u); }
  cxd eval(cxd u) const;
  GaussPoly fourier() const;
  GaussPoly derivative() const;
  GaussBand band() const { return {rho, std::real(b) / (2.0 * rho)}; }

  static GaussPoly gaussian(double rho, cxd b = 0.0, cxd amplitude = 1.0);
};

}  // namespace bfa::quad
