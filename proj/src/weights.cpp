// Copyright (c) the bfa developers
// SPDX-License-Identifier: Apache-2.0

#include "bfa/weights.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace bfa::weights {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

std::string lower(std::string_view s) {
  std::string r;
  r.reserve(s.size());
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) r.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  return r;
}

double l2norm(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v * v;
  return std::sqrt(s);
}

}  // namespace

std::string WeightDescriptor::str() const {
  std::ostringstream os;
  os.precision(12);
  switch (family) {
    case Family::DimPower: os << "dim(alpha=" << alpha << ")"; break;
    case Family::LengthPoly: os << "lenpoly(alpha=" << alpha << ")"; break;
    case Family::LengthExp: os << "lenexp(beta=" << beta << ")"; break;
    case Family::LaplacianPoly: os << "lappoly(m=" << order << ")"; break;
    case Family::LaplacianExp: os << "lapexp(beta=" << beta << ")"; break;
    case Family::Torus: {
      os << "torus(";
      for (std::size_t i = 0; i < betas.size(); ++i) os << (i ? "," : "") << "beta" << i + 1 << "=" << betas[i];
      os << ")";
      break;
    }
    case Family::Sun1: os << "sun1(" << (inner ? inner->str() : std::string("?")) << ")"; break;
    case Family::AbelExp: {
      os << "abelexp(";
      for (std::size_t i = 0; i < betas.size(); ++i) os << (i ? "," : "") << "beta" << i + 1 << "=" << betas[i];
      os << ")";
      break;
    }
    case Family::AbelRadial: os << "abelradial(beta=" << beta << ")"; break;
    case Family::E2LaplacianExp: os << "e2lap(t=" << t << ")"; break;
    case Family::Shilov: os << "shilov()"; break;
    case Family::PolyAbelian: os << "polyw(s=" << s << ")"; break;
  }
  if (scale != 1.0) os << "*" << scale;
  return os.str();
}

WeightDescriptor parse_weight(std::string_view text) {
  const std::string src = lower(text);
  auto lp = src.find('(');
  auto rp = src.rfind(')');
  require(lp != std::string::npos && rp != std::string::npos && rp > lp,
          "weight descriptor: expected name(key=value,...)");
  const std::string name = src.substr(0, lp);
  const std::string body = src.substr(lp + 1, rp - lp - 1);

  std::map<std::string, double> kv;
  std::vector<std::string> order_keys;
  if (!body.empty()) {
    std::size_t pos = 0;
    while (pos <= body.size()) {
      auto comma = body.find(',', pos);
      std::string item = body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      if (!item.empty()) {
        auto eq = item.find('=');
        require(eq != std::string::npos, "weight descriptor: expected key=value in '" + item + "'");
        std::string key = item.substr(0, eq);
        std::size_t used = 0;
        double val = 0.0;
        try {
          val = std::stod(item.substr(eq + 1), &used);
        } catch (const std::exception&) {
          require(false, "weight descriptor: bad numeric value in '" + item + "'");
        }
        require(used == item.size() - eq - 1, "weight descriptor: trailing junk in '" + item + "'");
        require(!kv.count(key), "weight descriptor: duplicate key '" + key + "'");
        kv[key] = val;
        order_keys.push_back(key);
      }
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }

  auto take = [&](const std::string& key, double fallback, bool* present = nullptr) {
    auto it = kv.find(key);
    if (present) *present = it != kv.end();
    if (it == kv.end()) return fallback;
    double v = it->second;
    kv.erase(it);
    return v;
  };
  auto take_betas = [&]() {
    std::vector<double> bs;
    bool single = false;
    double b = take("beta", 1.0, &single);
    if (single) bs.push_back(b);
    for (int i = 1;; ++i) {
      bool present = false;
      double v = take("beta" + std::to_string(i), 1.0, &present);
      if (!present) break;
      bs.push_back(v);
    }
    return bs;
  };
  auto done = [&](WeightDescriptor d) {
    require(kv.empty(), "weight descriptor: unknown key '" + (kv.empty() ? "" : kv.begin()->first) + "'");
    return d;
  };

  WeightDescriptor d;
  if (name == "dim") {
    d.family = Family::DimPower;
    d.alpha = take("alpha", 1.0);
    require(d.alpha >= 0, "dim: alpha must be >= 0");
  } else if (name == "lenpoly") {
    d.family = Family::LengthPoly;
    d.alpha = take("alpha", 1.0);
    require(d.alpha >= 0, "lenpoly: alpha must be >= 0");
  } else if (name == "lenexp") {
    d.family = Family::LengthExp;
    d.beta = take("beta", 1.0);
    require(d.beta >= 1, "lenexp: beta must be >= 1");
  } else if (name == "lappoly") {
    d.family = Family::LaplacianPoly;
    d.order = static_cast<int>(take("m", 1.0));
    require(d.order >= 1, "lappoly: m must be >= 1");
  } else if (name == "lapexp") {
    d.family = Family::LaplacianExp;
    d.beta = take("beta", 1.0);
    require(d.beta >= 1, "lapexp: beta must be >= 1");
  } else if (name == "torus") {
    d.family = Family::Torus;
    d.betas = take_betas();
    require(!d.betas.empty(), "torus: need at least one beta");
    for (double b : d.betas) require(b >= 1, "torus: betas must be >= 1");
  } else if (name == "abelexp") {
    d.family = Family::AbelExp;
    d.betas = take_betas();
    require(!d.betas.empty(), "abelexp: need at least one beta");
    for (double b : d.betas) require(b > 0, "abelexp: betas must be positive");
  } else if (name == "abelradial") {
    d.family = Family::AbelRadial;
    d.beta = take("beta", 1.0);
    require(d.beta >= 1, "abelradial: beta must be >= 1");
  } else if (name == "e2lap") {
    d.family = Family::E2LaplacianExp;
    d.t = take("t", 1.0);
    require(d.t > 0, "e2lap: t must be > 0");
  } else if (name == "shilov") {
    d.family = Family::Shilov;
  } else if (name == "polyw") {
    d.family = Family::PolyAbelian;
    d.s = take("s", 2.0);
    require(d.s >= 0, "polyw: s must be >= 0");
  } else {
    require(false, "weight descriptor: unknown family '" + name + "'");
  }
  d.scale = take("scale", 1.0);
  require(d.scale > 0, "weight descriptor: scale must be positive");
  return done(std::move(d));
}

bool is_central_family(const WeightDescriptor& d) {
  switch (d.family) {
    case Family::DimPower:
    case Family::LengthPoly:
    case Family::LengthExp:
    case Family::LaplacianPoly:
    case Family::LaplacianExp:
      return true;
    default:
      return false;
  }
}

double log_central_weight(const WeightDescriptor& d, const sun::HighestWeight& w) {
  const double logscale = std::log(d.scale);
  switch (d.family) {
    case Family::DimPower:
      return logscale + d.alpha * std::log(static_cast<double>(w.dimension()));
    case Family::LengthPoly:
      return logscale + d.alpha * std::log1p(static_cast<double>(w.lambda1()));
    case Family::LengthExp:
      return logscale + static_cast<double>(w.lambda1()) * std::log(d.beta);
    case Family::LaplacianPoly: {
      require(w.n == 2, "lappoly: Casimir closed form only available on SU(2)");
      const double nn = static_cast<double>(w.a[0]);
      return logscale + d.order * std::log1p(nn * (nn + 2.0));
    }
    case Family::LaplacianExp: {
      require(w.n == 2, "lapexp: Casimir closed form only available on SU(2)");
      const double nn = static_cast<double>(w.a[0]);
      return logscale + std::sqrt(nn * (nn + 2.0)) * std::log(d.beta);
    }
    default:
      throw std::invalid_argument("central_weight: descriptor is not a central family on SU(n)");
  }
}

double central_weight(const WeightDescriptor& d, const sun::HighestWeight& w) {
  return std::exp(log_central_weight(d, w));
}

double log_abelian_weight(const WeightDescriptor& d, std::span<const double> x) {
  const double logscale = std::log(d.scale);
  switch (d.family) {
    case Family::AbelExp: {
      double s = 0.0;
      for (std::size_t i = 0; i < x.size(); ++i) {
        double b = d.betas[std::min(i, d.betas.size() - 1)];
        s += std::abs(x[i]) * std::log(b);
      }
      return logscale + s;
    }
    case Family::AbelRadial:
      return logscale + l2norm(x) * std::log(d.beta);
    case Family::PolyAbelian:
      return logscale + d.s * std::log1p(l2norm(x));
    case Family::Shilov: {
      double r = l2norm(x);
      return logscale + r / std::log(std::exp(1.0) + r);
    }
    case Family::Torus: {  // same formula as abelexp; torus points are integers
      double s = 0.0;
      for (std::size_t i = 0; i < x.size(); ++i) {
        double b = d.betas[std::min(i, d.betas.size() - 1)];
        s += std::abs(x[i]) * std::log(b);
      }
      return logscale + s;
    }
    default:
      throw std::invalid_argument("abelian_weight: descriptor is not an abelian family");
  }
}

LogWeightFn make_log_weight(const WeightDescriptor& d, int dim) {
  if (d.family == Family::AbelExp)
    require(d.betas.size() == 1 || static_cast<int>(d.betas.size()) == dim,
            "abelexp: number of betas must match the dimension");
  WeightDescriptor copy = d;
  return [copy](std::span<const double> x) { return log_abelian_weight(copy, x); };
}

std::vector<double> torus_extended_weight(const std::function<double(std::span<const int>)>& wfun,
                                          const sun::HighestWeight& w) {
  auto tabs = sun::enumerate_tableaux(w);
  std::vector<double> out;
  out.reserve(tabs.size());
  std::vector<int> arg(w.n - 1);
  for (const auto& t : tabs) {
    for (int i = 0; i < w.n - 1; ++i) arg[i] = t.content[w.n - 1] - t.content[i];
    double v = wfun(arg);
    if (!(v > 0.0)) throw std::invalid_argument("torus_extended_weight: weight function must be strictly positive");
    out.push_back(v);
  }
  return out;
}

std::vector<double> torus_extended_weight(const WeightDescriptor& d, const sun::HighestWeight& w) {
  require(d.family == Family::Torus || d.family == Family::AbelExp,
          "torus_extended_weight: descriptor must be a torus family");
  require(d.betas.size() == 1 || static_cast<int>(d.betas.size()) == w.n - 1,
          "torus_extended_weight: need one beta per torus coordinate");
  return torus_extended_weight(
      [&](std::span<const int> j) {
        double s = std::log(d.scale);
        for (std::size_t i = 0; i < j.size(); ++i) {
          double b = d.betas[std::min(i, d.betas.size() - 1)];
          s += std::abs(static_cast<double>(j[i])) * std::log(b);
        }
        return std::exp(s);
      },
      w);
}

std::vector<double> sun1_extended_log_weight(const WeightDescriptor& inner,
                                             const sun::HighestWeight& w) {
  require(is_central_family(inner), "sun1_extended_weight: inner descriptor must be central");
  std::vector<double> out;
  for (const auto& mu : sun::branch_to_sun1(w)) out.push_back(log_central_weight(inner, mu));
  return out;
}

std::vector<double> sun1_extended_weight(const WeightDescriptor& inner,
                                         const sun::HighestWeight& w) {
  auto logs = sun1_extended_log_weight(inner, w);
  std::vector<double> out;
  out.reserve(logs.size());
  for (double v : logs) out.push_back(std::exp(v));
  return out;
}

namespace {

void enumerate_labels(int n, int window, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> a(n - 1, 0);
  auto dfs = [&](auto&& self, int i, int budget) -> void {
    if (i == n - 1) {
      visit(a);
      return;
    }
    for (int v = 0; v <= budget; ++v) {
      a[i] = v;
      self(self, i + 1, budget - v);
    }
    a[i] = 0;
  };
  dfs(dfs, 0, window);
}

std::string label_str(const std::vector<int>& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
  return s + ")";
}

}  // namespace

CheckReport check_submultiplicative_compact(
    const std::function<double(const sun::HighestWeight&)>& log_w, int n, int window) {
  CheckReport rep;
  const double slack = 1e-9;
  enumerate_labels(n, window, [&](const std::vector<int>& a) {
    sun::HighestWeight wa(n, a);
    double la = log_w(wa);
    for (int k = 1; k <= n - 1; ++k) {
      std::vector<int> fund(n - 1, 0);
      fund[k - 1] = 1;
      double lf = log_w(sun::HighestWeight(n, fund));
      for (const auto& b : sun::tensor_with_fundamental(a, k)) {
        ++rep.checked;
        double lb = log_w(sun::HighestWeight(n, b));
        if (lb > la + lf + slack * (1.0 + std::abs(la + lf))) {
          rep.violations.push_back({"w" + label_str(b) + " <= w" + label_str(a) + " * w" + label_str(fund),
                                    lb, la + lf});
        }
      }
    }
  });
  if (n == 2) {
    for (int a = 0; a <= window; ++a) {
      double la = log_w(sun::HighestWeight(2, {a}));
      for (int b = 0; b <= window; ++b) {
        double lb = log_w(sun::HighestWeight(2, {b}));
        for (int c : sun::tensor_decompose_su2(a, b)) {
          ++rep.checked;
          double lc = log_w(sun::HighestWeight(2, {c}));
          if (lc > la + lb + slack * (1.0 + std::abs(la + lb))) {
            rep.violations.push_back({"w(" + std::to_string(c) + ") <= w(" + std::to_string(a) +
                                          ") * w(" + std::to_string(b) + ")",
                                      lc, la + lb});
          }
        }
      }
    }
  }
  return rep;
}

CheckReport check_submultiplicative_compact(const WeightDescriptor& d, int n, int window) {
  require(is_central_family(d), "check_submultiplicative_compact: descriptor must be central");
  return check_submultiplicative_compact(
      [&](const sun::HighestWeight& w) { return log_central_weight(d, w); }, n, window);
}

GrowthBound exponential_growth_bound(const LogWeightFn& log_w, int dim,
                                     const std::vector<std::vector<double>>& samples) {
  require(dim >= 1, "exponential_growth_bound: dimension must be >= 1");
  GrowthBound gb;
  std::vector<double> logm(dim, -std::numeric_limits<double>::infinity());
  std::vector<double> pt(dim, 0.0);
  const int cells = 201;
  for (int i = 0; i < dim; ++i) {
    std::fill(pt.begin(), pt.end(), 0.0);
    for (int k = 0; k < cells; ++k) {
      pt[i] = -1.0 + 2.0 * k / (cells - 1);
      logm[i] = std::max(logm[i], log_w(pt));
    }
  }
  double logC = 0.0;
  gb.rho.resize(dim);
  for (int i = 0; i < dim; ++i) {
    logC += logm[i];
    gb.rho[i] = std::exp(logm[i]);
  }
  gb.C = std::exp(logC);
  gb.ok = true;
  for (const auto& x : samples) {
    require(static_cast<int>(x.size()) == dim, "exponential_growth_bound: sample dimension mismatch");
    double bound = logC;
    for (int i = 0; i < dim; ++i) bound += std::abs(x[i]) * logm[i];
    double v = log_w(x);
    if (v > bound + 1e-9 * (1.0 + std::abs(bound))) {
      gb.ok = false;
      std::ostringstream os;
      os << "w at (";
      for (int i = 0; i < dim; ++i) os << (i ? "," : "") << x[i];
      os << ") exceeds the fitted bound: log w = " << v << " > " << bound;
      gb.worst = os.str();
      break;
    }
  }
  return gb;
}

}  // namespace bfa::weights
