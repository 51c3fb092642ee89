// Copyright (c) the bfa developers
// SPDX-License-Identifier: Apache-2.0

#include "bfa/sun.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bfa::sun {

namespace {

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

HighestWeight::HighestWeight(int rank, std::vector<int> coords) : n(rank), a(std::move(coords)) {
  require(n >= 2, "HighestWeight: rank must be >= 2");
  require(static_cast<int>(a.size()) == n - 1, "HighestWeight: need n-1 a-coordinates");
  for (int v : a) require(v >= 0, "HighestWeight: a-coordinates must be non-negative");
}

HighestWeight HighestWeight::from_lambda(int rank, const std::vector<long long>& lambda) {
  require(rank >= 2, "HighestWeight: rank must be >= 2");
  require(static_cast<int>(lambda.size()) == rank, "HighestWeight: need n lambda entries");
  require(lambda[rank - 1] == 0, "HighestWeight: lambda_n must be 0");
  std::vector<int> a(rank - 1);
  for (int i = 0; i + 1 < rank; ++i) {
    long long d = lambda[i] - lambda[i + 1];
    require(d >= 0, "HighestWeight: lambda must be non-increasing");
    a[i] = static_cast<int>(d);
  }
  return HighestWeight(rank, std::move(a));
}

std::vector<long long> HighestWeight::lambda() const {
  std::vector<long long> l(n, 0);
  long long acc = 0;
  for (int i = n - 2; i >= 0; --i) {
    acc += a[i];
    l[i] = acc;
  }
  return l;
}

long long HighestWeight::lambda1() const {
  return std::accumulate(a.begin(), a.end(), 0LL);
}

long long HighestWeight::dimension() const {
  // Weyl product over pairs i<j of (lambda_i - lambda_j + j - i)/(j - i),
  // kept exact with a running gcd reduction.
  const auto l = lambda();
  unsigned long long num = 1, den = 1;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      unsigned long long top = static_cast<unsigned long long>(l[i] - l[j] + j - i);
      unsigned long long bot = static_cast<unsigned long long>(j - i);
      unsigned long long g1 = std::gcd(top, den);
      top /= g1;
      den /= g1;
      unsigned long long g2 = std::gcd(num, bot);
      num /= g2;
      bot /= g2;
      if (top != 0 && num > (~0ULL) / top) throw std::length_error("instance too large: dimension overflow");
      num *= top;
      den *= bot;
    }
  }
  return static_cast<long long>(num / den);
}

bool HighestWeight::operator<(const HighestWeight& o) const {
  if (n != o.n) return n < o.n;
  return a < o.a;
}

std::string HighestWeight::str() const {
  std::ostringstream os;
  os << "su" << n << "(";
  for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
  os << ")";
  return os.str();
}

cxd ComplexDiagonal::det() const {
  cxd p = 1.0;
  for (cxd v : x) p *= v;
  return p;
}

bool ComplexDiagonal::is_special_linear(double tol) const {
  return std::abs(det() - cxd(1.0)) <= tol;
}

std::vector<Tableau> enumerate_tableaux(const HighestWeight& w, std::int64_t cap) {
  if (w.dimension() > cap) throw std::length_error("instance too large: tableau count exceeds cap");
  const auto l = w.lambda();
  std::vector<int> rowlen;
  for (long long v : l)
    if (v > 0) rowlen.push_back(static_cast<int>(v));

  std::vector<Tableau> out;
  if (rowlen.empty()) {  // trivial representation: the empty tableau
    Tableau t;
    t.content.assign(w.n, 0);
    out.push_back(std::move(t));
    return out;
  }

  std::vector<std::vector<int>> rows(rowlen.size());
  for (std::size_t r = 0; r < rowlen.size(); ++r) rows[r].assign(rowlen[r], 0);

  auto emit = [&]() {
    Tableau t;
    t.rows = rows;
    t.content.assign(w.n, 0);
    for (const auto& row : rows)
      for (int v : row) ++t.content[v - 1];
    out.push_back(std::move(t));
  };

  // Row-major DFS with increasing candidates yields lexicographic order of
  // the row word.
  auto dfs = [&](auto&& self, std::size_t r, int c) -> void {
    if (r == rows.size()) {
      emit();
      return;
    }
    int nr = r;
    int nc = c + 1;
    if (nc >= rowlen[r]) {
      nr = static_cast<int>(r) + 1;
      nc = 0;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, rows[r][c - 1]);
    if (r > 0 && c < rowlen[r - 1]) lo = std::max(lo, rows[r - 1][c] + 1);
    for (int v = lo; v <= w.n; ++v) {
      rows[r][c] = v;
      self(self, nr, nc);
    }
    rows[r][c] = 0;
  };
  dfs(dfs, 0, 0);
  return out;
}

namespace {

cxd ipow(cxd base, long long e) {
  if (e < 0) return 1.0 / ipow(base, -e);
  cxd r = 1.0, b = base;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

}  // namespace

std::vector<cxd> torus_action(const HighestWeight& w, const ComplexDiagonal& d, std::int64_t cap) {
  require(d.size() == w.n, "torus_action: diagonal size must equal the rank");
  for (cxd v : d.x) require(std::abs(v) > 0.0, "torus_action: zero diagonal entry");
  auto tabs = enumerate_tableaux(w, cap);
  std::vector<cxd> eig;
  eig.reserve(tabs.size());
  for (const auto& t : tabs) {
    cxd e = 1.0;
    for (int k = 0; k < w.n; ++k) e *= ipow(d.x[k], t.content[k]);
    eig.push_back(e);
  }
  return eig;
}

std::vector<cxd> lie_derivative_diag(const HighestWeight& w, int j, std::int64_t cap) {
  require(j >= 1 && j <= w.n - 1, "lie_derivative_diag: index out of range");
  auto tabs = enumerate_tableaux(w, cap);
  std::vector<cxd> out;
  out.reserve(tabs.size());
  for (const auto& t : tabs)
    out.emplace_back(0.0, static_cast<double>(t.content[j - 1] - t.content[w.n - 1]));
  return out;
}

double log_complexified_norm_closed(const HighestWeight& w, const ComplexDiagonal& d) {
  require(d.size() == w.n, "complexified_norm: diagonal size must equal the rank");
  std::vector<double> logs;
  logs.reserve(d.x.size());
  for (cxd v : d.x) {
    double m = std::abs(v);
    require(m > 0.0, "complexified_norm: zero diagonal entry");
    logs.push_back(std::log(m));
  }
  std::sort(logs.begin(), logs.end(), std::greater<>());
  double total = 0.0, prefix = 0.0;
  for (int k = 1; k <= w.n - 1; ++k) {
    prefix += logs[k - 1];       // log of the product of the k largest moduli
    total += w.a[k - 1] * prefix;
  }
  return total;
}

double complexified_norm(const HighestWeight& w, const ComplexDiagonal& d, NormMethod method,
                         std::int64_t cap) {
  if (method == NormMethod::Closed) return std::exp(log_complexified_norm_closed(w, d));
  require(d.size() == w.n, "complexified_norm: diagonal size must equal the rank");
  std::vector<double> logs(w.n);
  for (int k = 0; k < w.n; ++k) {
    double m = std::abs(d.x[k]);
    require(m > 0.0, "complexified_norm: zero diagonal entry");
    logs[k] = std::log(m);
  }
  auto tabs = enumerate_tableaux(w, cap);
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& t : tabs) {
    double s = 0.0;
    for (int k = 0; k < w.n; ++k) s += t.content[k] * logs[k];
    best = std::max(best, s);
  }
  return std::exp(best);
}

std::vector<std::vector<int>> tensor_with_fundamental(const std::vector<int>& a, int k) {
  const int n = static_cast<int>(a.size()) + 1;
  require(n >= 2, "tensor_with_fundamental: empty label");
  require(k >= 1 && k <= n - 1, "tensor_with_fundamental: fundamental index out of range");
  for (int v : a) require(v >= 0, "tensor_with_fundamental: invalid a-coordinates");

  std::vector<std::vector<int>> out;
  std::vector<int> pick;
  auto dfs = [&](auto&& self, int next) -> void {
    if (static_cast<int>(pick.size()) == k) {
      std::vector<char> in(n + 1, 0);
      for (int j : pick) in[j] = 1;
      std::vector<int> b = a;
      for (int i = 1; i <= n - 1; ++i) {
        if (!in[i] && in[i + 1]) {
          if (a[i - 1] == 0) return;  // inadmissible subset
          b[i - 1] = a[i - 1] - 1;
        } else if (in[i] && !in[i + 1]) {
          b[i - 1] = a[i - 1] + 1;
        }
      }
      out.push_back(std::move(b));
      return;
    }
    for (int j = next; j <= n; ++j) {
      pick.push_back(j);
      self(self, j + 1);
      pick.pop_back();
    }
  };
  dfs(dfs, 1);
  return out;
}

namespace {

using Multiset = std::map<int, long long>;

const Multiset& su2_tensor_memo(int a, int b) {
  static std::map<std::pair<int, int>, Multiset> memo;
  auto key = std::make_pair(a, b);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  Multiset r;
  if (b == 0) {
    r[a] = 1;
  } else if (b == 1) {
    for (const auto& v : tensor_with_fundamental({a}, 1)) ++r[v[0]];
  } else {
    // chi_a chi_b = (chi_a chi_1) chi_{b-1} - chi_a chi_{b-2}
    for (const auto& [c, mc] : su2_tensor_memo(a, 1)) {
      for (const auto& [e, me] : su2_tensor_memo(c, b - 1)) r[e] += mc * me;
    }
    for (const auto& [e, me] : su2_tensor_memo(a, b - 2)) {
      auto jt = r.find(e);
      if (jt == r.end() || jt->second < me)
        throw std::logic_error("tensor_decompose_su2: negative multiplicity");
      jt->second -= me;
      if (jt->second == 0) r.erase(jt);
    }
  }
  return memo.emplace(key, std::move(r)).first->second;
}

}  // namespace

std::vector<int> tensor_decompose_su2(int a, int b) {
  require(a >= 0 && b >= 0, "tensor_decompose_su2: labels must be non-negative");
  std::vector<int> out;
  for (const auto& [c, m] : su2_tensor_memo(a, b))
    for (long long i = 0; i < m; ++i) out.push_back(c);
  return out;
}

std::vector<HighestWeight> branch_to_sun1(const HighestWeight& w) {
  require(w.n >= 3, "branch_to_sun1: rank must be >= 3");
  const auto l = w.lambda();
  const int m = w.n - 1;  // pattern length
  std::vector<long long> mu(m, 0);
  std::vector<HighestWeight> out;
  auto dfs = [&](auto&& self, int i) -> void {
    if (i == m) {
      std::vector<long long> norm(m);
      for (int j = 0; j < m; ++j) norm[j] = mu[j] - mu[m - 1];
      out.push_back(HighestWeight::from_lambda(m, norm));
      return;
    }
    for (long long v = l[i]; v >= l[i + 1]; --v) {
      mu[i] = v;
      self(self, i + 1);
    }
  };
  dfs(dfs, 0);
  return out;
}

cxd su2_character(int a, cxd x) {
  require(a >= 0, "su2_character: label must be non-negative");
  require(std::abs(x) > 0.0, "su2_character: x must be nonzero");
  cxd step = 1.0 / (x * x);
  cxd term = ipow(x, a);
  cxd sum = 0.0;
  for (int k = 0; k <= a; ++k) {
    sum += term;
    term *= step;
  }
  return sum;
}

}  // namespace bfa::sun
