// Copyright (c) the bfa developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bfa/sun.hpp"
#include "bfa/verdict.hpp"

namespace bfa::weights {

enum class Family {
  DimPower,        // dim(alpha=..):       d_pi^alpha
  LengthPoly,      // lenpoly(alpha=..):   (1+lambda_1)^alpha
  LengthExp,       // lenexp(beta=..):     beta^lambda_1
  LaplacianPoly,   // lappoly(m=..):       (1+n(n+2))^m on SU(2)
  LaplacianExp,    // lapexp(beta=..):     beta^sqrt(n(n+2)) on SU(2)
  Torus,           // torus(beta1=..,..):  maximal-torus extension, prod beta_i^{|j_i|}
  Sun1,            // SU(n-1)-extended central weight (programmatic only)
  AbelExp,         // abelexp(beta1=..,..): prod beta_i^{|x_i|} on R^k or Z^k
  AbelRadial,      // abelradial(beta=..): beta^{|x|_2}
  E2LaplacianExp,  // e2lap(t=..):         exp(t sqrt(n^2+r^2))
  Shilov,          // shilov():            exp(|x|/log(e+|x|))
  PolyAbelian,     // polyw(s=..):         (1+|x|_2)^s
};

/// Tagged weight family plus parameters. All evaluation helpers work in
/// log-space so that beta^lambda_1 never overflows; `scale` is a positive
/// prefactor that never changes a membership verdict.
struct WeightDescriptor {
  Family family = Family::LengthExp;
  double alpha = 0.0;
  double beta = 1.0;
  int order = 1;  // laplacian-poly order m
  double t = 1.0;
  double s = 0.0;
  std::vector<double> betas;
  double scale = 1.0;
  std::shared_ptr<WeightDescriptor> inner;  // Sun1 only

  std::string str() const;
};

/// Parse the key=value descriptor grammar, case-insensitively:
/// dim(alpha=2), lenpoly(alpha=2), lenexp(beta=2), lappoly(m=1),
/// lapexp(beta=1.5), torus(beta1=2,beta2=1), abelexp(beta1=2,beta2=1),
/// abelradial(beta=2), e2lap(t=1), shilov(), polyw(s=2).
WeightDescriptor parse_weight(std::string_view text);

bool is_central_family(const WeightDescriptor& d);

double log_central_weight(const WeightDescriptor& d, const sun::HighestWeight& w);
double central_weight(const WeightDescriptor& d, const sun::HighestWeight& w);

/// Log-space weight function on R^k or Z^k (points passed as doubles).
using LogWeightFn = std::function<double(std::span<const double>)>;

/// Built-in abelian families as log-space callables; dim fixes the expected
/// point dimension (AbelExp broadcasts a single beta across coordinates).
LogWeightFn make_log_weight(const WeightDescriptor& d, int dim);
double log_abelian_weight(const WeightDescriptor& d, std::span<const double> x);

/// Maximal-torus extension on SU(n): diagonal entry for a tableau T is
/// w(t_n - t_1, ..., t_n - t_{n-1}), in enumerate_tableaux order.
std::vector<double> torus_extended_weight(const std::function<double(std::span<const int>)>& wfun,
                                          const sun::HighestWeight& w);
std::vector<double> torus_extended_weight(const WeightDescriptor& d, const sun::HighestWeight& w);

/// SU(n-1)-extended weight: one block value per branching summand, equal to
/// the inner central weight of that summand. Returned in branch_to_sun1
/// order (log scale alongside linear values on demand).
std::vector<double> sun1_extended_log_weight(const WeightDescriptor& inner,
                                             const sun::HighestWeight& w);
std::vector<double> sun1_extended_weight(const WeightDescriptor& inner,
                                         const sun::HighestWeight& w);

/// Verify w(b) <= w(a) w(fund k) over every Pieri triple with lambda_1(a)
/// up to the window, and additionally all SU(2) Clebsch-Gordan triples for
/// n = 2. Violations are collected, not thrown.
CheckReport check_submultiplicative_compact(
    const std::function<double(const sun::HighestWeight&)>& log_w, int n, int window);
CheckReport check_submultiplicative_compact(const WeightDescriptor& d, int n, int window);

/// Exponential domination fit: rho_i is the supremum of the weight on the
/// i-th coordinate segment [-1,1], C their product; holds for every
/// sub-multiplicative weight.
struct GrowthBound {
  bool ok = false;
  double C = 1.0;
  std::vector<double> rho;
  std::string worst;  // sample violating the fitted bound, if any
};

GrowthBound exponential_growth_bound(const LogWeightFn& log_w, int dim,
                                     const std::vector<std::vector<double>>& samples);

}  // namespace bfa::weights
