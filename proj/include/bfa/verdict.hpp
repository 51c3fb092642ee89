// Copyright (c) the bfa developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace bfa {

enum class Membership { In, Out, Inconclusive };

std::string to_string(Membership m);

/// Three-valued spectrum-membership result with the numeric evidence that
/// produced it. `sup_value` is the largest norm/weight ratio seen on the
/// inspected window (log scale unless stated otherwise by the producer),
/// `growth_factor` the fitted per-step geometric factor along the worst ray.
struct Verdict {
  Membership status = Membership::Inconclusive;
  double sup_value = 0.0;
  double growth_factor = 1.0;
  std::string witness;
  std::vector<double> ratio_trace;
  std::string reason;

  bool in() const { return status == Membership::In; }
  bool out() const { return status == Membership::Out; }
  bool inconclusive() const { return status == Membership::Inconclusive; }

  static Verdict make(Membership s, double sup = 0.0, std::string why = {}) {
    Verdict v;
    v.status = s;
    v.sup_value = sup;
    v.reason = std::move(why);
    return v;
  }
};

struct CheckViolation {
  std::string context;  // human-readable triple, e.g. "w(2) <= w(1)*w(1)"
  double log_lhs = 0.0;
  double log_rhs = 0.0;
  double slack() const { return log_lhs - log_rhs; }
};

/// Outcome of an inequality sweep. Violations are reported, never thrown.
struct CheckReport {
  std::size_t checked = 0;
  std::vector<CheckViolation> violations;
  bool pass() const { return violations.empty(); }
};

}  // namespace bfa
