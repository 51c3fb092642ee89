// Copyright (c) the bfa developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <json.hpp>

#include "bfa/regularity.hpp"
#include "bfa/verdict.hpp"
#include "bfa/weights.hpp"

namespace bfa {

using ordered_json = nlohmann::ordered_json;

inline ordered_json to_json(const Verdict& v) {
  ordered_json j;
  j["status"] = to_string(v.status);
  j["sup_value"] = v.sup_value;
  j["growth_factor"] = v.growth_factor;
  if (!v.witness.empty()) j["witness"] = v.witness;
  if (!v.ratio_trace.empty()) j["ratio_trace"] = v.ratio_trace;
  if (!v.reason.empty()) j["reason"] = v.reason;
  return j;
}

inline ordered_json to_json(const CheckReport& r) {
  ordered_json j;
  j["pass"] = r.pass();
  j["checked"] = r.checked;
  ordered_json viols = ordered_json::array();
  for (const auto& v : r.violations) {
    ordered_json item;
    item["context"] = v.context;
    item["log_lhs"] = v.log_lhs;
    item["log_rhs"] = v.log_rhs;
    item["slack"] = v.slack();
    viols.push_back(item);
  }
  j["violations"] = viols;
  return j;
}

inline ordered_json to_json(const weights::GrowthBound& g) {
  ordered_json j;
  j["ok"] = g.ok;
  j["C"] = g.C;
  j["rho"] = g.rho;
  if (!g.worst.empty()) j["worst"] = g.worst;
  return j;
}

inline ordered_json to_json(const reg::SeriesDiagnostics& d) {
  ordered_json j;
  j["classification"] = reg::to_string(d.cls);
  j["p"] = d.p;
  j["q"] = d.q;
  j["p_split"] = d.p_split;
  j["q_split"] = d.q_split;
  j["log_shift"] = d.log_shift;
  j["tail_estimate"] = d.tail_estimate;
  ordered_json sums = ordered_json::array();
  for (const auto& [n, s] : d.partial_sums) sums.push_back({{"n", n}, {"sum", s}});
  j["partial_sums"] = sums;
  return j;
}

inline ordered_json to_json(const reg::ShilovRadius& r) {
  ordered_json j;
  j["rho"] = r.rho;
  j["dyadic_monotone"] = r.dyadic_monotone;
  j["dyadic"] = r.dyadic;
  return j;
}

}  // namespace bfa
