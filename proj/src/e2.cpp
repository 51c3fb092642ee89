// Copyright (c) the bfa developers
// SPDX-License-Identifier: Apache-2.0

#include "bfa/e2.hpp"

#include <Eigen/SVD>
#include <Eigen/SparseCore>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace bfa::e2 {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

double E2CPoint::a_invariant() const {
  return std::hypot(std::imag(x), std::imag(y));
}

cxd E2CPoint::log_s() const {
  require(std::abs(z) > 0.0, "E2CPoint: z must be nonzero");
  double theta = std::arg(z);
  if (theta < 0.0) theta += kTwoPi;
  return {theta, -std::log(std::abs(z))};
}

E2CPoint e2_mul(const E2CPoint& g, const E2CPoint& h) {
  require(std::abs(g.z) > 0.0 && std::abs(h.z) > 0.0, "e2_mul: z must be nonzero");
  const cxd c = 0.5 * (g.z + 1.0 / g.z);
  const cxd s = (g.z - 1.0 / g.z) / cxd(0.0, 2.0);
  E2CPoint out;
  out.x = g.x + c * h.x - s * h.y;
  out.y = g.y + s * h.x + c * h.y;
  out.z = g.z * h.z;
  return out;
}

E2CPoint e2_exp(double s, double x, double y) {
  double a, b;  // sin(s)/s and (cos(s)-1)/s with stable small-s branches
  if (std::abs(s) < 1e-4) {
    const double s2 = s * s;
    a = 1.0 - s2 / 6.0 + s2 * s2 / 120.0;
    b = -s / 2.0 + s * s2 / 24.0;
  } else {
    a = std::sin(s) / s;
    b = (std::cos(s) - 1.0) / s;
  }
  E2CPoint out;
  out.x = a * x + b * y;
  out.y = -b * x + a * y;
  out.z = std::exp(cxd(0.0, s));
  return out;
}

Eigen::MatrixXcd e2_lie_op(Gen g, double r, int window) {
  require(r > 0.0, "e2_lie_op: r must be positive");
  require(window >= 1, "e2_lie_op: window must be >= 1");
  const int dim = 2 * window + 1;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  auto idx = [&](int n) { return n + window; };
  for (int n = -window; n <= window; ++n) {
    switch (g) {
      case Gen::S:
        m(idx(n), idx(n)) = cxd(0.0, -static_cast<double>(n));
        break;
      case Gen::X:
        if (n - 1 >= -window) m(idx(n - 1), idx(n)) = cxd(0.0, r / 2.0);
        if (n + 1 <= window) m(idx(n + 1), idx(n)) = cxd(0.0, r / 2.0);
        break;
      case Gen::Y:
        if (n + 1 <= window) m(idx(n + 1), idx(n)) = r / 2.0;
        if (n - 1 >= -window) m(idx(n - 1), idx(n)) = -r / 2.0;
        break;
    }
  }
  return m;
}

double e2_laplacian_weight(LapKind kind, double param, double r, long long n) {
  require(r > 0.0, "e2_laplacian_weight: r must be positive");
  const double nn = static_cast<double>(n);
  if (kind == LapKind::Poly) {
    require(param >= 1.0, "e2_laplacian_weight: polynomial order must be >= 1");
    return std::pow(1.0 + nn * nn + r * r, param);
  }
  require(param > 0.0, "e2_laplacian_weight: t must be positive");
  return std::exp(param * std::sqrt(nn * nn + r * r));
}

E2NormBounds e2_complexified_norm(const E2CPoint& p, double t, double r, int window,
                                  double slope_tol) {
  require(t > 0.0 && r > 0.0, "e2_complexified_norm: t and r must be positive");
  require(window >= 2, "e2_complexified_norm: window must be >= 2");

  const cxd s = p.log_s();
  const double ims = std::imag(s);
  const double res = std::real(s);
  const double A = p.a_invariant();

  // sup over the window of the diagonal factor exponent
  auto h = [&](long long n) {
    return n * ims - t * std::sqrt(static_cast<double>(n) * n + r * r);
  };
  double hmax = -std::numeric_limits<double>::infinity();
  long long arg = 0;
  for (long long n = -window; n <= window; ++n) {
    if (h(n) > hmax) {
      hmax = h(n);
      arg = n;
    }
  }
  if (std::llabs(arg) == window) {
    const long long next = arg > 0 ? arg + 1 : arg - 1;
    if (h(next) - h(arg) > slope_tol)
      throw std::runtime_error("window too small to stabilize the sup: the maximizing n exceeds N");
  }

  E2NormBounds out;
  out.factored_bound = std::exp(r * A + hmax);

  // Assemble S (multiplication by the symbol on a 4N+1 theta grid) composed
  // with the diagonal T, then take the largest singular value.
  const int dim = 2 * window + 1;
  const int pnodes = 4 * window + 1;
  double beta_angle = 0.0;
  if (A > 0.0) beta_angle = std::atan2(-std::imag(p.y), -std::imag(p.x));
  std::vector<cxd> symbol(pnodes);
  for (int k = 0; k < pnodes; ++k) {
    const double th = kTwoPi * k / pnodes;
    double mod = (A > 0.0) ? r * A * std::cos(th - beta_angle) : 0.0;
    const double phase = r * (std::real(p.x) * std::cos(th) + std::real(p.y) * std::sin(th));
    symbol[k] = std::exp(cxd(mod, phase));
  }
  std::vector<cxd> fourier(2 * (2 * window) + 1);
  double cmax = 0.0;
  for (int kk = -2 * window; kk <= 2 * window; ++kk) {
    cxd acc = 0.0;
    for (int k = 0; k < pnodes; ++k) {
      const double th = kTwoPi * k / pnodes;
      acc += symbol[k] * std::exp(cxd(0.0, -kk * th));
    }
    acc /= static_cast<double>(pnodes);
    fourier[kk + 2 * window] = acc;
    cmax = std::max(cmax, std::abs(acc));
  }
  double tail = 0.0;
  for (int kk = 2 * window - 4; kk <= 2 * window; ++kk)
    tail = std::max(tail, std::max(std::abs(fourier[kk + 2 * window]), std::abs(fourier[-kk + 2 * window])));
  out.aliasing = cmax > 0.0 ? tail / cmax : 0.0;

  Eigen::MatrixXcd op(dim, dim);
  for (int m = -window; m <= window; ++m) {
    for (int n = -window; n <= window; ++n) {
      const cxd tn = std::exp(cxd(h(n), -n * res));
      op(m + window, n + window) = fourier[(m - n) + 2 * window] * tn;
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(op);
  out.truncated_norm = svd.singularValues()(0);
  return out;
}

Verdict e2_spectrum_member(const E2CPoint& p, const weights::WeightDescriptor& d) {
  const double imx = std::imag(p.x);
  const double imy = std::imag(p.y);
  const double logz = std::log(std::abs(p.z));
  const double eps = 1e-12;

  Verdict v;
  using F = weights::Family;
  if (d.family == F::E2LaplacianExp) {
    const double lhs = imx * imx + imy * imy + logz * logz;
    v.sup_value = lhs - d.t * d.t;
    v.status = (lhs <= d.t * d.t * (1.0 + eps) + eps) ? Membership::In : Membership::Out;
    return v;
  }
  if (d.family == F::AbelRadial) {  // extension from the translation subgroup, radial weight
    const double lb = std::log(d.beta);
    if (std::abs(std::abs(p.z) - 1.0) > 1e-9)
      return Verdict::make(Membership::Out, logz, "direction outside h (|z| != 1)");
    const double lhs = imx * imx + imy * imy;
    v.sup_value = lhs - lb * lb;
    v.status = (lhs <= lb * lb * (1.0 + eps) + eps) ? Membership::In : Membership::Out;
    return v;
  }
  if (d.family == F::AbelExp && d.betas.size() >= 2) {  // translation subgroup, box weight
    if (std::abs(std::abs(p.z) - 1.0) > 1e-9)
      return Verdict::make(Membership::Out, logz, "direction outside h (|z| != 1)");
    // rotate the imaginary part back through the real rotation factor
    const cxd rotated = std::exp(cxd(0.0, -std::arg(p.z))) * cxd(imx, imy);
    const double m1 = std::abs(std::real(rotated)) - std::log(d.betas[0]);
    const double m2 = std::abs(std::imag(rotated)) - std::log(d.betas[1]);
    v.sup_value = std::max(m1, m2);
    v.status = (m1 <= eps && m2 <= eps) ? Membership::In : Membership::Out;
    return v;
  }
  if (d.family == F::AbelExp && d.betas.size() == 1) {  // rotation subgroup, w(n) = beta^|n|
    if (std::abs(imx) > 1e-9 || std::abs(imy) > 1e-9)
      return Verdict::make(Membership::Out, std::max(std::abs(imx), std::abs(imy)),
                           "direction outside h (Im x or Im y != 0)");
    const double lb = std::log(d.betas[0]);
    v.sup_value = std::abs(logz) - lb;
    v.status = (std::abs(logz) <= lb + eps * (1.0 + lb)) ? Membership::In : Membership::Out;
    return v;
  }
  throw std::invalid_argument("e2_spectrum_member: unsupported weight family");
}

Verdict e2_spectrum_sweep(const E2CPoint& p, double t, const E2SweepGrid& grid) {
  require(t > 0.0, "e2_spectrum_sweep: t must be positive");
  const double ims = std::imag(p.log_s());
  const double A = p.a_invariant();

  double best = -std::numeric_limits<double>::infinity();
  long long bn = 0;
  double br = 0.0;
  const double q = std::pow(grid.rmax / grid.rmin, 1.0 / (grid.rcount - 1));
  for (int k = 0; k < grid.rcount; ++k) {
    const double r = grid.rmin * std::pow(q, k);
    for (long long n = -grid.nmax; n <= grid.nmax; ++n) {
      const double den = std::sqrt(static_cast<double>(n) * n + r * r);
      const double val = (n * ims + r * A - t * den) / den;
      if (val > best) {
        best = val;
        bn = n;
        br = r;
      }
    }
  }
  Verdict v;
  v.sup_value = best;
  std::ostringstream os;
  os << "(n,r)=(" << bn << "," << br << ")";
  v.witness = os.str();
  if (best > grid.band)
    v.status = Membership::Out;
  else if (best < -grid.band)
    v.status = Membership::In;
  else
    v.status = Membership::Inconclusive;
  return v;
}

std::vector<double> e2_coproduct_diag(double r, double s, int window) {
  require(r > 0.0 && s > 0.0, "e2_coproduct: r and s must be positive");
  require(window >= 1, "e2_coproduct: window must be >= 1");
  const int dim = 2 * window + 1;
  std::vector<double> diag(static_cast<std::size_t>(dim) * dim);
  for (int m = -window; m <= window; ++m)
    for (int n = -window; n <= window; ++n)
      diag[static_cast<std::size_t>(m + window) * dim + (n + window)] =
          static_cast<double>(m + n) * (m + n) + r * r + s * s;
  return diag;
}

Eigen::SparseMatrix<double> e2_coproduct_shift(double r, double s, int window) {
  require(r > 0.0 && s > 0.0, "e2_coproduct: r and s must be positive");
  require(window >= 1, "e2_coproduct: window must be >= 1");
  const int dim = 2 * window + 1;
  const int size = dim * dim;
  auto idx = [&](int m, int n) { return (m + window) * dim + (n + window); };
  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(static_cast<std::size_t>(2) * size);
  for (int m = -window; m <= window; ++m) {
    for (int n = -window; n <= window; ++n) {
      if (m - 1 >= -window && n + 1 <= window)
        trip.emplace_back(idx(m - 1, n + 1), idx(m, n), r * s);
      if (m + 1 <= window && n - 1 >= -window)
        trip.emplace_back(idx(m + 1, n - 1), idx(m, n), r * s);
    }
  }
  Eigen::SparseMatrix<double> b(size, size);
  b.setFromTriplets(trip.begin(), trip.end());
  return b;
}

double e2_coproduct_shift_norm(double r, double s, int window) {
  require(r > 0.0 && s > 0.0, "e2_coproduct: r and s must be positive");
  // The shift pair preserves the anti-diagonals m + n = const; on each one it
  // is a free tridiagonal of size 2N+1-|d| with off-diagonal entries r s.
  double best = 0.0;
  for (int d = -2 * window; d <= 2 * window; ++d) {
    const int len = 2 * window + 1 - std::abs(d);
    if (len < 2) continue;
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(len);
    Eigen::VectorXd sub = Eigen::VectorXd::Constant(len - 1, r * s);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    best = std::max(best, std::max(std::abs(es.eigenvalues()(0)), std::abs(es.eigenvalues()(len - 1))));
  }
  return best;
}

CheckReport e2_radial_submult(const std::function<double(double)>& log_w,
                              const std::vector<std::pair<double, double>>& samples,
                              int a_resolution) {
  require(a_resolution >= 2, "e2_radial_submult: need at least two a-nodes");
  CheckReport rep;
  const double slack = 1e-9;
  for (const auto& [r, s] : samples) {
    require(r > 0.0 && s > 0.0, "e2_radial_submult: sample parameters must be positive");
    const double lo = std::abs(r - s);
    const double hi = r + s;
    double sup = -std::numeric_limits<double>::infinity();
    double arg = lo;
    for (int i = 0; i < a_resolution; ++i) {
      double a = lo + (hi - lo) * i / (a_resolution - 1);
      if (a <= 0.0) a = hi * 1e-12;  // the fusion interval is open at 0
      const double v = log_w(a);
      if (v > sup) {
        sup = v;
        arg = a;
      }
    }
    ++rep.checked;
    const double rhs = log_w(r) + log_w(s);
    if (sup > rhs + slack * (1.0 + std::abs(rhs))) {
      std::ostringstream os;
      os << "sup_{|r-s|<=a<=r+s} w(a) <= w(r) w(s) at (r,s)=(" << r << "," << s << "), arg a=" << arg;
      rep.violations.push_back({os.str(), sup, rhs});
    }
  }
  return rep;
}

}  // namespace bfa::e2
