// Copyright (c) the bfa developers
// SPDX-License-Identifier: Apache-2.0

#include "bfa/regularity.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace bfa::reg {

std::string to_string(SeriesClass c) {
  switch (c) {
    case SeriesClass::Convergent: return "convergent";
    case SeriesClass::Divergent: return "divergent";
    case SeriesClass::Inconclusive: return "inconclusive";
  }
  return "?";
}

namespace {

struct Fit {
  double p = 0.0, q = 0.0;
  bool ok = false;
};

// least-squares fit of log t_n = log c - p log n - q log log n
Fit fit_exponents(const std::function<double(long long)>& term, long long lo, long long hi) {
  Fit f;
  std::vector<long long> ns;
  const int count = 160;
  double step = std::log(static_cast<double>(hi) / lo) / (count - 1);
  long long prev = 0;
  for (int i = 0; i < count; ++i) {
    long long n = static_cast<long long>(std::llround(lo * std::exp(i * step)));
    n = std::clamp(n, lo, hi);
    if (n != prev) ns.push_back(n);
    prev = n;
  }
  Eigen::MatrixXd a(ns.size(), 3);
  Eigen::VectorXd y(ns.size());
  std::size_t rows = 0;
  for (long long n : ns) {
    double t = term(n);
    if (!(t > 0.0)) continue;
    a(rows, 0) = 1.0;
    a(rows, 1) = -std::log(static_cast<double>(n));
    a(rows, 2) = -std::log(std::log(static_cast<double>(n)));
    y(rows) = std::log(t);
    ++rows;
  }
  if (rows < 8) return f;
  Eigen::VectorXd sol = a.topRows(rows).colPivHouseholderQr().solve(y.head(rows));
  f.p = sol(1);
  f.q = sol(2);
  f.ok = true;
  return f;
}

}  // namespace

SeriesDiagnostics quasianalytic_test(const std::function<double(double)>& log_w, double x,
                                     long long horizon) {
  if (horizon < 100) throw std::invalid_argument("quasianalytic_test: horizon too small");
  SeriesDiagnostics diag;

  // enforce w >= 1 on the ray; the multiplicative shift only adds a
  // convergent series and is recorded.
  double minlog = 0.0;
  for (long long n = -horizon; n <= horizon; n += std::max<long long>(1, horizon / 512))
    minlog = std::min(minlog, log_w(n * x));
  diag.log_shift = minlog < 0.0 ? -minlog : 0.0;

  auto term_at = [&](long long n) {
    const double tp = (log_w(n * x) + diag.log_shift) / (1.0 + static_cast<double>(n) * n);
    const double tm = (log_w(-n * x) + diag.log_shift) / (1.0 + static_cast<double>(n) * n);
    return tp + tm;
  };

  double sum = log_w(0.0) + diag.log_shift;
  long long next_checkpoint = 10;
  for (long long n = 1; n <= horizon; ++n) {
    sum += term_at(n);
    if (n == next_checkpoint || n == horizon) {
      diag.partial_sums.emplace_back(n, sum);
      next_checkpoint *= 10;
    }
  }

  double tmax = 0.0;
  for (long long n = horizon / 2; n <= horizon; n += std::max<long long>(1, horizon / 64))
    tmax = std::max(tmax, term_at(n));
  if (tmax < 1e-300) {  // identically (near) zero terms: trivially summable
    diag.cls = SeriesClass::Convergent;
    diag.p = 2.0;
    diag.p_split = 2.0;
    return diag;
  }

  const long long lo = std::max<long long>(16, horizon / 1000);
  const long long mid = static_cast<long long>(std::sqrt(static_cast<double>(lo) * horizon));
  Fit full = fit_exponents(term_at, lo, horizon);
  Fit head = fit_exponents(term_at, lo, mid);
  Fit tail = fit_exponents(term_at, mid, horizon);
  if (!full.ok || !head.ok || !tail.ok) {
    diag.cls = SeriesClass::Inconclusive;
    return diag;
  }
  diag.p = full.p;
  diag.q = full.q;
  diag.p_split = tail.p - head.p;
  diag.q_split = tail.q - head.q;

  const bool stable = std::abs(diag.p_split) <= 0.15 && std::abs(diag.q_split) <= 0.75;
  if (!stable) {
    diag.cls = SeriesClass::Inconclusive;
    return diag;
  }
  if (diag.p > 1.0 + kExponentTol) {
    diag.cls = SeriesClass::Convergent;
    diag.tail_estimate = term_at(horizon) * horizon / (diag.p - 1.0);
  } else if (diag.p < 1.0 - kExponentTol) {
    diag.cls = SeriesClass::Divergent;
  } else {
    diag.cls = (diag.q > 1.0 + kExponentTol) ? SeriesClass::Convergent : SeriesClass::Divergent;
  }
  return diag;
}

SeriesDiagnostics quasianalytic_test(const weights::WeightDescriptor& d, double x,
                                     long long horizon) {
  return quasianalytic_test(
      [&](double u) {
        const double pt[1] = {u};
        return weights::log_abelian_weight(d, pt);
      },
      x, horizon);
}

ShilovRadius shilov_radius(const std::function<double(double)>& log_w, double mu,
                           long long horizon) {
  if (horizon < 2) throw std::invalid_argument("shilov_radius: horizon too small");
  ShilovRadius out;
  out.rho = std::exp(log_w(static_cast<double>(horizon) * mu) / static_cast<double>(horizon));
  out.dyadic_monotone = true;
  for (long long k = 1; k <= horizon; k *= 2) {
    const double v = std::exp(log_w(static_cast<double>(k) * mu) / static_cast<double>(k));
    if (!out.dyadic.empty() && v > out.dyadic.back() * (1.0 + 1e-12)) out.dyadic_monotone = false;
    out.dyadic.push_back(v);
  }
  return out;
}

Verdict torus_annulus_member(const std::vector<cxd>& z, const weights::LogWeightFn& log_w,
                             const std::vector<std::vector<int>>& directions, long long horizon,
                             double band) {
  if (directions.empty()) throw std::invalid_argument("torus_annulus_member: need directions");
  const std::size_t dim = z.size();
  for (cxd v : z)
    if (std::abs(v) == 0.0) throw std::invalid_argument("torus_annulus_member: zero coordinate");

  bool any_border = false;
  Verdict verdict;
  verdict.status = Membership::In;
  double worst = -std::numeric_limits<double>::infinity();

  std::vector<double> pt(dim);
  auto log_rho = [&](const std::vector<int>& mu, int sign) {
    for (std::size_t i = 0; i < dim; ++i) pt[i] = static_cast<double>(sign * mu[i]) * horizon;
    return log_w(pt) / static_cast<double>(horizon);
  };

  for (const auto& mu : directions) {
    if (mu.size() != dim) throw std::invalid_argument("torus_annulus_member: direction dimension mismatch");
    double logv = 0.0;
    for (std::size_t i = 0; i < dim; ++i) logv += mu[i] * std::log(std::abs(z[i]));
    const double up = log_rho(mu, +1);
    const double down = log_rho(mu, -1);
    const double margin_up = up - logv;      // >= 0 means inside the outer bound
    const double margin_down = logv + down;  // >= 0 means inside the inner bound
    const double m = std::min(margin_up, margin_down);
    if (-m > worst) {
      worst = -m;
      std::ostringstream os;
      os << "mu=(";
      for (std::size_t i = 0; i < mu.size(); ++i) os << (i ? "," : "") << mu[i];
      os << ")";
      verdict.witness = os.str();
    }
    if (m < -band) {
      verdict.status = Membership::Out;
      verdict.sup_value = worst;
      return verdict;
    }
    if (m <= band) {
      // The estimated rho never undershoots the true one, so borderline
      // points are only certain when |z^mu| = 1, which every annulus of a
      // w >= 1 weight contains.
      if (std::abs(logv) <= 1e-12 && up >= -1e-12 && down >= -1e-12) continue;
      any_border = true;
    }
  }
  verdict.sup_value = worst;
  if (any_border) verdict.status = Membership::Inconclusive;
  return verdict;
}

}  // namespace bfa::reg
