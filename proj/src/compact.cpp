// Copyright (c) the bfa developers
// SPDX-License-Identifier: Apache-2.0

#include "bfa/compact.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bfa::compact {

namespace {

double trace_norm(const MatC& a) {
  Eigen::JacobiSVD<MatC> svd(a);
  return svd.singularValues().sum();
}

}  // namespace

double beurling_norm(const FourierCoefficients& c, const weights::WeightDescriptor& d) {
  double total = 0.0;
  for (const auto& [w, mat] : c.hat) {
    const long long dim = w.dimension();
    if (mat.rows() != dim || mat.cols() != dim)
      throw std::invalid_argument("beurling_norm: block size does not match the tableau count for " + w.str());
    if (weights::is_central_family(d)) {
      total += static_cast<double>(dim) * weights::central_weight(d, w) * trace_norm(mat);
    } else if (d.family == weights::Family::Torus) {
      auto diag = weights::torus_extended_weight(d, w);
      MatC weighted = mat;
      for (long long i = 0; i < dim; ++i) weighted.row(i) *= diag[static_cast<std::size_t>(i)];
      total += static_cast<double>(dim) * trace_norm(weighted);
    } else {
      throw std::invalid_argument("beurling_norm: descriptor must be central or torus-extended");
    }
  }
  return total;
}

std::vector<double> singular_values(const MatC& a) {
  if (a.rows() != a.cols() || a.rows() == 0)
    throw std::invalid_argument("singular_values: need a nonempty square matrix");
  Eigen::JacobiSVD<MatC> svd(a);
  const auto& sv = svd.singularValues();
  if (sv(sv.size() - 1) <= 0.0) throw std::domain_error("singular_values: singular input");
  return std::vector<double>(sv.data(), sv.data() + sv.size());
}

Verdict spectrum_member_central_exp(const MatC& a, double beta, double det_tol) {
  if (beta < 1.0) throw std::invalid_argument("spectrum_member_central_exp: beta must be >= 1");
  const int n = static_cast<int>(a.rows());
  auto sv = singular_values(a);
  double logdet = 0.0;
  for (double s : sv) logdet += std::log(s);  // |det| = product of singular values
  if (std::abs(std::expm1(logdet)) > det_tol)
    throw std::invalid_argument("spectrum_member_central_exp: |det| is not 1 within tolerance");

  // Normalise to unit |det| so boundary comparisons are exact.
  const double shift = logdet / n;
  double worst = -std::numeric_limits<double>::infinity();
  int worst_k = 1;
  double prefix = 0.0;
  const double logb = std::log(beta);
  for (int k = 1; k <= n - 1; ++k) {
    prefix += std::log(sv[k - 1]) - shift;
    if (prefix - logb > worst) {
      worst = prefix - logb;
      worst_k = k;
    }
  }
  Verdict v;
  v.sup_value = worst;  // log of the largest sigma-product/beta ratio
  v.witness = "k=" + std::to_string(worst_k);
  v.status = (worst <= 1e-12) ? Membership::In : Membership::Out;
  return v;
}

Verdict spectrum_member_torus_extended(const sun::ComplexDiagonal& d,
                                       const std::vector<double>& beta) {
  const int n = d.size();
  if (n < 2) throw std::invalid_argument("spectrum_member_torus_extended: need n >= 2");
  if (static_cast<int>(beta.size()) != n - 1)
    throw std::invalid_argument("spectrum_member_torus_extended: need one beta per torus coordinate");
  double logdet = 0.0;
  for (auto x : d.x) {
    if (std::abs(x) == 0.0) throw std::invalid_argument("spectrum_member_torus_extended: zero entry");
    logdet += std::log(std::abs(x));
  }
  if (std::abs(std::expm1(logdet)) > 1e-9)
    throw std::invalid_argument("spectrum_member_torus_extended: |det| is not 1 within tolerance");
  const double shift = logdet / n;

  double worst = -std::numeric_limits<double>::infinity();
  int worst_j = 1;
  for (int j = 1; j <= n - 1; ++j) {
    if (beta[j - 1] < 1.0) throw std::invalid_argument("spectrum_member_torus_extended: betas must be >= 1");
    double lx = std::log(std::abs(d.x[j - 1])) - shift;
    double excess = std::abs(lx) - std::log(beta[j - 1]);
    if (excess > worst) {
      worst = excess;
      worst_j = j;
    }
  }
  Verdict v;
  v.sup_value = worst;
  v.witness = "j=" + std::to_string(worst_j);
  v.status = (worst <= 1e-12) ? Membership::In : Membership::Out;
  return v;
}

namespace {

void enumerate_directions(int n, int cap, std::vector<std::vector<int>>& out) {
  std::vector<int> a(n - 1, 0);
  auto dfs = [&](auto&& self, int i, int budget) -> void {
    if (i == n - 1) {
      int sum = std::accumulate(a.begin(), a.end(), 0);
      if (sum == 0) return;
      int g = 0;
      for (int v : a) g = std::gcd(g, v);
      if (g == 1) out.push_back(a);
      return;
    }
    for (int v = 0; v <= budget; ++v) {
      a[i] = v;
      self(self, i + 1, budget - v);
    }
    a[i] = 0;
  };
  dfs(dfs, 0, cap);
}

}  // namespace

Verdict spectrum_sweep(const sun::ComplexDiagonal& d, const weights::WeightDescriptor& desc,
                       const SweepOptions& opt) {
  if (!weights::is_central_family(desc))
    throw std::invalid_argument("spectrum_sweep: descriptor must be a central family");
  const int n = d.size();
  if (n < 2) throw std::invalid_argument("spectrum_sweep: need n >= 2");

  std::vector<std::vector<int>> dirs;
  enumerate_directions(n, n == 2 ? 1 : 4, dirs);

  Verdict v;
  v.sup_value = -std::numeric_limits<double>::infinity();
  double worst_factor = 0.0;
  std::vector<double> worst_trace;
  std::string worst_dir;

  for (const auto& dir : dirs) {
    const long long dlen = std::accumulate(dir.begin(), dir.end(), 0LL);
    const long long steps = opt.horizon / dlen;
    if (steps < 4) continue;
    std::vector<double> logr(static_cast<std::size_t>(steps));
    std::vector<int> a(n - 1);
    for (long long k = 1; k <= steps; ++k) {
      for (int i = 0; i < n - 1; ++i) a[i] = static_cast<int>(k) * dir[i];
      sun::HighestWeight w(n, a);
      logr[static_cast<std::size_t>(k - 1)] =
          sun::log_complexified_norm_closed(w, d) - weights::log_central_weight(desc, w);
      v.sup_value = std::max(v.sup_value, logr[static_cast<std::size_t>(k - 1)]);
    }
    // per-step slope on the tail half, least squares
    const long long k0 = steps / 2;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    long long m = 0;
    for (long long k = k0; k < steps; ++k) {
      double x = static_cast<double>(k);
      double y = logr[static_cast<std::size_t>(k)];
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
      ++m;
    }
    double slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
    double factor = std::exp(slope);
    if (factor > worst_factor) {
      worst_factor = factor;
      worst_trace.clear();
      const long long stride = std::max<long long>(1, steps / 16);
      for (long long k = 0; k < steps; k += stride) worst_trace.push_back(logr[static_cast<std::size_t>(k)]);
      std::ostringstream os;
      os << "ray a=(";
      for (std::size_t i = 0; i < dir.size(); ++i) os << (i ? "," : "") << dir[i];
      os << ")";
      worst_dir = os.str();
    }
  }

  v.growth_factor = worst_factor;
  v.ratio_trace = std::move(worst_trace);
  v.witness = std::move(worst_dir);
  if (worst_factor > 1.0 + opt.band)
    v.status = Membership::Out;
  else if (worst_factor < 1.0 - opt.band)
    v.status = Membership::In;
  else
    v.status = Membership::Inconclusive;
  return v;
}

double evaluation_multiplicativity_check(sun::cxd x, int a, int b) {
  sun::cxd lhs = sun::su2_character(a, x) * sun::su2_character(b, x);
  sun::cxd rhs = 0.0;
  for (int c : sun::tensor_decompose_su2(a, b)) rhs += sun::su2_character(c, x);
  return std::abs(lhs - rhs) / (1.0 + std::abs(lhs));
}

}  // namespace bfa::compact
