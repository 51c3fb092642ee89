// Copyright (c) the bfa developers
// SPDX-License-Identifier: Apache-2.0

#include "bfa/quadrature.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bfa::quad {

namespace {

Rule golub_welsch(const Eigen::VectorXd& offdiag, double weight_total) {
  const int n = static_cast<int>(offdiag.size()) + 1;
  Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i + 1 < n; ++i) {
    jac(i, i + 1) = offdiag(i);
    jac(i + 1, i) = offdiag(i);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jac);
  Rule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    r.nodes[i] = es.eigenvalues()(i);
    double v0 = es.eigenvectors()(0, i);
    r.weights[i] = weight_total * v0 * v0;
  }
  return r;
}

}  // namespace

Rule gauss_hermite(int n) {
  if (n < 1) throw std::invalid_argument("gauss_hermite: need n >= 1");
  Eigen::VectorXd off(n - 1);
  for (int k = 1; k < n; ++k) off(k - 1) = std::sqrt(k / 2.0);
  Rule r = golub_welsch(off, std::sqrt(std::numbers::pi));
  r.modified.resize(n);
  for (int i = 0; i < n; ++i) r.modified[i] = r.weights[i] * std::exp(r.nodes[i] * r.nodes[i]);
  return r;
}

Rule gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: need n >= 1");
  Eigen::VectorXd off(n - 1);
  for (int k = 1; k < n; ++k) off(k - 1) = k / std::sqrt(4.0 * k * k - 1.0);
  return golub_welsch(off, 2.0);
}

GaussBand band_product(GaussBand a, GaussBand b) {
  double rate = a.rate + b.rate;
  return {rate, (a.rate * a.center + b.rate * b.center) / rate};
}

GaussBand band_convolution(GaussBand a, GaussBand b) {
  return {a.rate * b.rate / (a.rate + b.rate), a.center + b.center};
}

std::vector<double> hermite_functions(int count, double t) {
  std::vector<double> phi(count, 0.0);
  if (count == 0) return phi;
  const double g = std::exp(-t * t / 2.0) / std::pow(std::numbers::pi, 0.25);
  phi[0] = g;
  if (count > 1) phi[1] = std::sqrt(2.0) * t * g;
  for (int n = 1; n + 1 < count; ++n)
    phi[n + 1] = std::sqrt(2.0 / (n + 1.0)) * t * phi[n] - std::sqrt(n / (n + 1.0)) * phi[n - 1];
  return phi;
}

cxd GaussPoly::eval(cxd u) const {
  cxd p = 0.0;
  for (std::size_t k = coeff.size(); k-- > 0;) p = p * u + coeff[k];
  return p * std::exp(-rho * u * u + b * u);
}

namespace {

std::vector<cxd> poly_derivative(const std::vector<cxd>& p) {
  if (p.size() <= 1) return {};
  std::vector<cxd> d(p.size() - 1);
  for (std::size_t k = 1; k < p.size(); ++k) d[k - 1] = p[k] * static_cast<double>(k);
  return d;
}

void poly_add_scaled(std::vector<cxd>& dst, const std::vector<cxd>& src, cxd factor) {
  if (dst.size() < src.size()) dst.resize(src.size(), 0.0);
  for (std::size_t k = 0; k < src.size(); ++k) dst[k] += factor * src[k];
}

// p * (c0 + c1 u)
std::vector<cxd> poly_mul_linear(const std::vector<cxd>& p, cxd c0, cxd c1) {
  std::vector<cxd> r(p.size() + 1, 0.0);
  for (std::size_t k = 0; k < p.size(); ++k) {
    r[k] += c0 * p[k];
    r[k + 1] += c1 * p[k];
  }
  return r;
}

}  // namespace

GaussPoly GaussPoly::fourier() const {
  GaussPoly out;
  out.rho = 1.0 / (4.0 * rho);
  out.b = -cxd(0.0, 1.0) * b / (2.0 * rho);
  const cxd scale = std::exp(b * b / (4.0 * rho)) / std::sqrt(2.0 * rho);

  // iterate q -> i (q' + q E') with E'(xi) = -2 rho' xi + b'
  std::vector<cxd> q = {scale};
  std::vector<cxd> acc;
  const cxd i(0.0, 1.0);
  for (std::size_t k = 0; k < coeff.size(); ++k) {
    poly_add_scaled(acc, q, coeff[k]);
    std::vector<cxd> next = poly_mul_linear(q, out.b, -2.0 * out.rho);
    poly_add_scaled(next, poly_derivative(q), 1.0);
    for (auto& c : next) c *= i;
    q = std::move(next);
  }
  out.coeff = std::move(acc);
  return out;
}

GaussPoly GaussPoly::derivative() const {
  GaussPoly out;
  out.rho = rho;
  out.b = b;
  out.coeff = poly_mul_linear(coeff, b, -2.0 * rho);
  poly_add_scaled(out.coeff, poly_derivative(coeff), 1.0);
  return out;
}

GaussPoly GaussPoly::gaussian(double rho, cxd b, cxd amplitude) {
  if (!(rho > 0.0)) throw std::invalid_argument("GaussPoly: rho must be positive");
  GaussPoly g;
  g.rho = rho;
  g.b = b;
  g.coeff = {amplitude};
  return g;
}

}  // namespace bfa::quad
