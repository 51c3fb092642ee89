// Copyright (c) the bfa developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "bfa/verdict.hpp"
#include "bfa/weights.hpp"

namespace bfa::reg {

using cxd = std::complex<double>;

enum class SeriesClass { Convergent, Divergent, Inconclusive };

std::string to_string(SeriesClass c);

/// Convergence diagnostics for sum over n of log w(n x) / (1 + n^2).
/// Raw partial sums are recorded at checkpoints; the classification rests on
/// a term-asymptotics fit against c / (n^p (log n)^q), since divergence at
/// p = q = 1 is numerically glacial. `log_shift` is the constant added to
/// log w to enforce w >= 1 on the sampled ray.
struct SeriesDiagnostics {
  std::vector<std::pair<long long, double>> partial_sums;
  double p = 0.0;
  double q = 0.0;
  double p_split = 0.0;  // fit on the two half-windows, for stability
  double q_split = 0.0;
  double log_shift = 0.0;
  double tail_estimate = 0.0;
  SeriesClass cls = SeriesClass::Inconclusive;
};

inline constexpr double kExponentTol = 0.05;

SeriesDiagnostics quasianalytic_test(const std::function<double(double)>& log_w, double x,
                                     long long horizon);
SeriesDiagnostics quasianalytic_test(const weights::WeightDescriptor& d, double x,
                                     long long horizon);

/// rho estimate w(K mu)^{1/K} with the dyadic subsequence w(2^j mu)^{1/2^j};
/// for sub-multiplicative weights the dyadic subsequence is non-increasing
/// and the limit is its infimum.
struct ShilovRadius {
  double rho = 1.0;
  bool dyadic_monotone = false;
  std::vector<double> dyadic;
};

ShilovRadius shilov_radius(const std::function<double(double)>& log_w, double mu, long long horizon);

/// Annulus membership on the complexified n-torus:
/// 1/rho(-mu) <= |z^mu| <= rho(mu) for every tested direction, with rho
/// estimated at the horizon. Points within the relative band of an estimated
/// bound come back Inconclusive, except unit-modulus monomials which every
/// annulus contains.
Verdict torus_annulus_member(const std::vector<cxd>& z, const weights::LogWeightFn& log_w,
                             const std::vector<std::vector<int>>& directions, long long horizon,
                             double band = 1e-3);

}  // namespace bfa::reg
