// Copyright (c) the bfa developers
// SPDX-License-Identifier: Apache-2.0

#include "bfa/heis.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace bfa::heis {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

HeisPoint heis_mul(const HeisPoint& g, const HeisPoint& h) {
  return {g.y + h.y, g.z + h.z + g.x * h.y, g.x + h.x};
}

HeisPoint heis_inverse(const HeisPoint& g) {
  return {-g.y, -g.z + g.x * g.y, -g.x};
}

HeisPoint heis_exp(cxd x, cxd y, cxd z) {
  return {y, z + 0.5 * x * y, x};
}

double heis_weight_symbol(const std::function<double(double, double)>& wfun, double a, double t) {
  require(a != 0.0, "heis_weight_symbol: a must be nonzero");
  double v = wfun(a * t, -a);
  require(v > 0.0, "heis_weight_symbol: weight function must be strictly positive");
  return v;
}

double heis_weight_symbol(const weights::WeightDescriptor& d, double a, double t) {
  require(a != 0.0, "heis_weight_symbol: a must be nonzero");
  const double pt[2] = {a * t, -a};
  return std::exp(weights::log_abelian_weight(d, pt));
}

TestFunction TestFunction::gaussian(double a1, double a2, double a3) {
  TestFunction f;
  f.terms.push_back({quad::GaussPoly::gaussian(a1), quad::GaussPoly::gaussian(a2),
                     quad::GaussPoly::gaussian(a3)});
  return f;
}

cxd heis_kernel_value(const TestFunction& f, double a, double t, double x) {
  require(a != 0.0, "heis_fourier: a must be nonzero");
  cxd acc = 0.0;
  for (const auto& term : f.terms) {
    quad::GaussPoly ghat3 = term[2].fourier();
    acc += term[0](-a * t) * term[1](a) * ghat3.eval(t - x);
  }
  return kTwoPi * acc;
}

namespace {

// phi_j(c) for all j < count at every node of a transplanted rule.
struct HermiteSamples {
  std::vector<double> points;
  std::vector<std::vector<double>> values;  // values[i] = phi_0..phi_{count-1} at points[i]
};

Eigen::MatrixXcd assemble(const TestFunction& f, double a, int basis, int nodes,
                          FourierMethod method) {
  const quad::Rule gh = quad::gauss_hermite(nodes);
  const quad::GaussBand phi_band{0.5, 0.0};
  Eigen::MatrixXcd mat = Eigen::MatrixXcd::Zero(basis, basis);

  for (const auto& term : f.terms) {
    // Both routes reduce to c(a) * g1(-a t) * (convolution against the basis),
    // with the Direct route reaching them through quadrature of the
    // representation formula instead of closed forms.
    quad::GaussPoly G1, G2, G3;
    if (method == FourierMethod::Kernel) {
      G3 = term[2].fourier();
    } else {
      G1 = term[0].fourier();
      G2 = term[1].fourier();
      G3 = term[2].fourier();
    }

    // t-envelope: product of the phi_i factor, g1(-a t), and the x-convolution
    // spread of G3 against phi_j.
    quad::GaussBand g1_band_t{term[0].band().rate * a * a, -term[0].band().center / a};
    quad::GaussBand conv_band = quad::band_convolution(G3.band(), phi_band);
    quad::GaussBand t_band = quad::band_product(quad::band_product(phi_band, g1_band_t), conv_band);

    const double t_inv = 1.0 / std::sqrt(t_band.rate);
    cxd c_a;
    if (method == FourierMethod::Kernel) {
      c_a = kTwoPi * term[1](a);
    } else {
      c_a = quad::integrate([&](double z) { return G2.eval(z) * std::exp(cxd(0.0, a * z)); },
                            G2.band(), gh);
    }

    for (int it = 0; it < nodes; ++it) {
      const double t = t_band.center + gh.nodes[it] * t_inv;
      const double wt = gh.modified[it] * t_inv;
      const auto phi_t = quad::hermite_functions(basis, t);

      cxd left;
      if (method == FourierMethod::Kernel) {
        left = term[0](-a * t);
      } else {
        left = quad::integrate(
            [&](double y) { return G1.eval(y) * std::exp(cxd(0.0, -a * t * y)); }, G1.band(), gh);
      }

      // x-integral: int G3(x) phi_j(t - x) dx for every j.
      quad::GaussBand x_band = quad::band_product(G3.band(), quad::GaussBand{0.5, t});
      const double x_inv = 1.0 / std::sqrt(x_band.rate);
      std::vector<cxd> conv(basis, 0.0);
      for (int ix = 0; ix < nodes; ++ix) {
        const double x = x_band.center + gh.nodes[ix] * x_inv;
        const double wx = gh.modified[ix] * x_inv;
        const cxd gval = G3.eval(x) * wx;
        const auto phis = quad::hermite_functions(basis, t - x);
        for (int j = 0; j < basis; ++j) conv[j] += gval * phis[j];
      }

      const cxd row_factor = wt * left * c_a;
      for (int i = 0; i < basis; ++i) {
        const cxd fi = row_factor * phi_t[i];
        for (int j = 0; j < basis; ++j) mat(i, j) += fi * conv[j];
      }
    }
  }
  return mat;
}

}  // namespace

TruncatedOperator heis_fourier(const TestFunction& f, double a, const QuadratureSpec& spec,
                               FourierMethod method) {
  require(a != 0.0, "heis_fourier: a must be nonzero");
  require(spec.hermite_basis >= 1, "heis_fourier: basis window must be >= 1");
  require(spec.nodes >= 8, "heis_fourier: need at least 8 quadrature nodes");

  TruncatedOperator op;
  op.basis = spec.hermite_basis;
  op.mat = assemble(f, a, spec.hermite_basis, spec.nodes, method);
  Eigen::MatrixXcd coarse = assemble(f, a, spec.hermite_basis, spec.nodes / 2, method);
  const double ref = op.mat.norm();
  op.est_error = ref > 0.0 ? (op.mat - coarse).norm() / ref : (op.mat - coarse).norm();
  if (op.est_error > spec.tolerance) {
    std::ostringstream os;
    os << "grid too coarse: estimated quadrature error " << op.est_error << " exceeds tolerance "
       << spec.tolerance;
    throw std::runtime_error(os.str());
  }
  return op;
}

namespace {

struct CartanYZ {
  bool in_h = false;  // Cartan direction lies in span{Y, Z}
  double yp = 0.0, zp = 0.0;
};

CartanYZ cartan_decompose(const HeisPoint& p) {
  CartanYZ c;
  if (std::abs(std::imag(p.x)) > 1e-12) return c;
  c.in_h = true;
  c.yp = std::imag(p.y);
  c.zp = std::imag(p.z) - std::real(p.x) * std::imag(p.y);
  return c;
}

double grid_sup(const std::function<double(double, double)>& log_w, double yp, double zp,
                const PlaneGrid& grid) {
  double sup = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < grid.na; ++i) {
    const double a = -grid.amax + 2.0 * grid.amax * i / (grid.na - 1);
    for (int j = 0; j < grid.nb; ++j) {
      const double b = -grid.bmax + 2.0 * grid.bmax * j / (grid.nb - 1);
      sup = std::max(sup, yp * a + zp * b - log_w(a, b));
    }
  }
  return sup;
}

}  // namespace

Verdict heis_spectrum_member(const HeisPoint& p, const weights::WeightDescriptor& d,
                             const PlaneGrid& grid) {
  const auto c = cartan_decompose(p);
  if (!c.in_h) return Verdict::make(Membership::Out, 0.0, "direction outside h (Im x != 0)");

  Verdict v;
  const double eps = 1e-12;
  if (d.family == weights::Family::AbelExp) {
    const double b1 = d.betas.at(0);
    const double b2 = d.betas.size() > 1 ? d.betas[1] : d.betas[0];
    const double m1 = std::abs(c.yp) - std::log(b1);
    const double m2 = std::abs(c.zp) - std::log(b2);
    v.sup_value = std::max(m1, m2);
    v.status = (m1 <= eps * (1.0 + std::log(b1)) && m2 <= eps * (1.0 + std::log(b2)))
                   ? Membership::In
                   : Membership::Out;
  } else if (d.family == weights::Family::AbelRadial) {
    const double lb = std::log(d.beta);
    const double r2 = c.yp * c.yp + c.zp * c.zp;
    v.sup_value = r2 - lb * lb;
    v.status = (r2 <= lb * lb + eps * (1.0 + lb * lb)) ? Membership::In : Membership::Out;
  } else {
    throw std::invalid_argument("heis_spectrum_member: unsupported weight family for the closed form");
  }
  auto logw = [&](double a, double b) {
    const double pt[2] = {a, b};
    return weights::log_abelian_weight(d, pt);
  };
  v.ratio_trace.push_back(grid_sup(logw, c.yp, c.zp, grid));
  std::ostringstream os;
  os << "(y',z')=(" << c.yp << "," << c.zp << ")";
  v.witness = os.str();
  return v;
}

Verdict heis_spectrum_member(const HeisPoint& p,
                             const std::function<double(double, double)>& log_w,
                             const PlaneGrid& grid, double band) {
  const auto c = cartan_decompose(p);
  if (!c.in_h) return Verdict::make(Membership::Out, 0.0, "direction outside h (Im x != 0)");

  Verdict v;
  v.sup_value = grid_sup(log_w, c.yp, c.zp, grid);
  // directional slope of h(a,b) = y'a + z'b - log w at the window edge
  const double radius = std::min(grid.amax, grid.bmax);
  double worst = -std::numeric_limits<double>::infinity();
  for (int k = 0; k < 16; ++k) {
    const double th = kTwoPi * k / 16;
    const double ua = std::cos(th), ub = std::sin(th);
    auto h = [&](double r) { return c.yp * r * ua + c.zp * r * ub - log_w(r * ua, r * ub); };
    worst = std::max(worst, (h(radius) - h(radius / 2)) / (radius / 2));
  }
  v.growth_factor = std::exp(worst);
  if (worst > band)
    v.status = Membership::Out;
  else if (worst < -band)
    v.status = Membership::In;
  else
    v.status = Membership::Inconclusive;
  return v;
}

RHeisLabel RHeisLabel::discrete(int n) {
  if (n == 0) throw std::invalid_argument("RHeisLabel: discrete label must be nonzero");
  RHeisLabel l;
  l.kind = Kind::Discrete;
  l.n = n;
  return l;
}

RHeisLabel RHeisLabel::character(double r, double s) {
  RHeisLabel l;
  l.kind = Kind::Character;
  l.r = r;
  l.s = s;
  return l;
}

RHeisLabel RHeisLabel::pi_zero() {
  RHeisLabel l;
  l.kind = Kind::PiZero;
  return l;
}

std::string RHeisLabel::str() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Discrete: os << "pi^" << n; break;
    case Kind::Character: os << "chi_(" << r << "," << s << ")"; break;
    case Kind::PiZero: os << "pi^0"; break;
  }
  return os.str();
}

bool RHeisLabel::operator==(const RHeisLabel& o) const {
  if (kind != o.kind) return false;
  switch (kind) {
    case Kind::Discrete: return n == o.n;
    case Kind::Character: return r == o.r && s == o.s;
    case Kind::PiZero: return true;
  }
  return false;
}

RHeisLabel rheis_tensor(const RHeisLabel& l1, const RHeisLabel& l2) {
  using K = RHeisLabel::Kind;
  if (l1.kind == K::PiZero || l2.kind == K::PiZero)
    throw std::invalid_argument("rheis_tensor: pi^0 is an output label, not an operand");
  if (l1.kind == K::Discrete && l2.kind == K::Discrete) {
    if (l1.n + l2.n == 0) return RHeisLabel::pi_zero();
    return RHeisLabel::discrete(l1.n + l2.n);
  }
  if (l1.kind == K::Discrete) return l1;
  if (l2.kind == K::Discrete) return l2;
  return RHeisLabel::character(l1.r + l2.r, l1.s + l2.s);
}

CheckReport rheis_central_weight_check(const std::function<double(int)>& log_wz,
                                       const std::function<double(double, double)>& log_wc,
                                       int window, const PlaneGrid& grid) {
  CheckReport rep;
  const double slack = 1e-9;
  auto note = [&](std::string what, double lhs, double rhs) {
    if (lhs > rhs + slack * (1.0 + std::abs(rhs))) rep.violations.push_back({std::move(what), lhs, rhs});
  };

  double sup_wc = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < grid.na; ++i) {
    const double r = -grid.amax + 2.0 * grid.amax * i / (grid.na - 1);
    for (int j = 0; j < grid.nb; ++j) {
      const double s = -grid.bmax + 2.0 * grid.bmax * j / (grid.nb - 1);
      sup_wc = std::max(sup_wc, log_wc(r, s));
    }
  }

  for (int n = -window; n <= window; ++n) {
    if (n == 0) continue;
    for (int m = -window; m <= window; ++m) {
      if (m == 0 || n + m == 0) continue;
      ++rep.checked;
      note("w(" + std::to_string(n + m) + ") <= w(" + std::to_string(n) + ") w(" + std::to_string(m) + ")",
           log_wz(n + m), log_wz(n) + log_wz(m));
    }
    ++rep.checked;
    note("sup w_C <= w(" + std::to_string(n) + ") w(" + std::to_string(-n) + ")", sup_wc,
         log_wz(n) + log_wz(-n));
  }

  // w(n) <= w_C(r,s) w(n) on the grid, i.e. w_C >= 1
  for (int i = 0; i < grid.na; i += std::max(1, grid.na / 9)) {
    const double r = -grid.amax + 2.0 * grid.amax * i / (grid.na - 1);
    for (int j = 0; j < grid.nb; j += std::max(1, grid.nb / 9)) {
      const double s = -grid.bmax + 2.0 * grid.bmax * j / (grid.nb - 1);
      ++rep.checked;
      std::ostringstream os;
      os << "1 <= w_C(" << r << "," << s << ")";
      note(os.str(), 0.0, log_wc(r, s));
      // continuous sub-multiplicativity on pair sums inside the window
      for (int i2 = 0; i2 < grid.na; i2 += std::max(1, grid.na / 5)) {
        const double r2 = -grid.amax + 2.0 * grid.amax * i2 / (grid.na - 1);
        for (int j2 = 0; j2 < grid.nb; j2 += std::max(1, grid.nb / 5)) {
          const double s2 = -grid.bmax + 2.0 * grid.bmax * j2 / (grid.nb - 1);
          ++rep.checked;
          std::ostringstream os2;
          os2 << "w_C(" << r + r2 << "," << s + s2 << ") <= w_C(" << r << "," << s << ") w_C(" << r2
              << "," << s2 << ")";
          note(os2.str(), log_wc(r + r2, s + s2), log_wc(r, s) + log_wc(r2, s2));
        }
      }
    }
  }
  return rep;
}

double rheis_plancherel_atom(int n) {
  if (n == 0) throw std::domain_error("rheis_plancherel_atom: n must be nonzero");
  return std::abs(n) / kTwoPi;
}

}  // namespace bfa::heis
