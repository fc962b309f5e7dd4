#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "json.hpp"
#include "starlag/star.hpp"

namespace starlag {

struct GridSpec {
  int nt = 101;
  int ns = 101;
  Interval t_range{};
  Interval s_range{};
};

namespace detail {

// Uniform grid with the singular pairs masked and the mask dilated by one
// cell, so finite stencils and near-branch-point samples stay clean.
struct MaskedGrid {
  std::vector<double> t, s;
  std::vector<char> masked;  // nt * ns, row-major in t

  bool is_masked(int i, int k) const { return masked[i * s.size() + k] != 0; }
};

inline MaskedGrid build_masked_grid(const StarSurface& surf, const GridSpec& g) {
  if (g.nt < 2 || g.ns < 2) throw std::invalid_argument("grid needs nt, ns >= 2");
  MaskedGrid m;
  m.t.resize(g.nt);
  m.s.resize(g.ns);
  std::vector<char> zero_a(g.nt), zero_w(g.ns);
  for (int i = 0; i < g.nt; ++i) {
    m.t[i] = g.t_range.lo + g.t_range.length() * i / (g.nt - 1);
    zero_a[i] = std::abs(surf.alpha().eval(m.t[i]).pos) < 1e-12;
  }
  for (int k = 0; k < g.ns; ++k) {
    m.s[k] = g.s_range.lo + g.s_range.length() * k / (g.ns - 1);
    zero_w[k] = std::abs(surf.omega().eval(m.s[k]).pos) < 1e-12;
  }
  std::vector<char> raw(g.nt * g.ns, 0);
  for (int i = 0; i < g.nt; ++i)
    for (int k = 0; k < g.ns; ++k) raw[i * g.ns + k] = zero_a[i] && zero_w[k];
  m.masked.assign(g.nt * g.ns, 0);
  int live = 0;
  for (int i = 0; i < g.nt; ++i)
    for (int k = 0; k < g.ns; ++k) {
      char v = 0;
      for (int di = -1; di <= 1 && !v; ++di)
        for (int dk = -1; dk <= 1 && !v; ++dk) {
          const int ii = i + di, kk = k + dk;
          if (ii >= 0 && ii < g.nt && kk >= 0 && kk < g.ns && raw[ii * g.ns + kk]) v = 1;
        }
      m.masked[i * g.ns + k] = v;
      live += !v;
    }
  if (live == 0) throw NumericError("classify", "all grid points are singular");
  return m;
}

}  // namespace detail

// max over the masked grid of |(phi_t, phi_s)| / (|phi_t| |phi_s|)
inline double check_lagrangian(const StarSurface& surf, const GridSpec& grid) {
  const auto g = detail::build_masked_grid(surf, grid);
  double worst = 0.0;
  for (std::size_t i = 0; i < g.t.size(); ++i)
    for (std::size_t k = 0; k < g.s.size(); ++k) {
      if (g.is_masked(i, k)) continue;
      const SurfaceJet j = surf.jet(g.t[i], g.s[k]);
      worst = std::max(worst,
                       std::abs(herm(j.phi_t, j.phi_s)) / (norm(j.phi_t) * norm(j.phi_s)));
    }
  return worst;
}

struct SpecialResult {
  double residual = 0.0;  // max |kappa| over both generating curves
  double max_h = 0.0;     // corroborating sup of |H| over the grid
};

// minimal (constant-angle) test: both curvatures vanish identically
inline SpecialResult check_special(const StarSurface& surf, const GridSpec& grid) {
  SpecialResult r;
  for (int i = 0; i <= 256; ++i) {
    const double t = grid.t_range.lo + grid.t_range.length() * i / 256.0;
    const double s = grid.s_range.lo + grid.s_range.length() * i / 256.0;
    r.residual = std::max(r.residual, std::abs(surf.alpha().eval(t).kappa));
    r.residual = std::max(r.residual, std::abs(surf.omega().eval(s).kappa));
  }
  const auto g = detail::build_masked_grid(surf, grid);
  for (std::size_t i = 0; i < g.t.size(); ++i)
    for (std::size_t k = 0; k < g.s.size(); ++k) {
      if (g.is_masked(i, k)) continue;
      r.max_h = std::max(r.max_h, norm(surf.jet(g.t[i], g.s[k]).H));
    }
  return r;
}

// Minimal surfaces from line pairs are graphs of z -> c z^2 under
// (x1+iy1, x2+iy2) -> (y1+iy2, x1-ix2); returns the sup of the graph defect.
inline double holomorphic_correspondence(double a, double b, const GridSpec& grid) {
  if (a == 0.0 && b == 0.0)
    throw std::invalid_argument("holomorphic correspondence needs (a,b) != (0,0)");
  const auto surf = StarSurface::build(make_line(a), make_line(b));
  const Complex ab{a, b};
  const Complex c = -std::conj(ab) * std::conj(ab) / (2.0 * std::pow(std::norm(ab), 2));
  const C2Vector offset = surf.position(0.0, 0.0);  // fix the translation gauge
  double worst = 0.0;
  for (int i = 0; i < grid.nt; ++i)
    for (int k = 0; k < grid.ns; ++k) {
      const double t = grid.t_range.lo + grid.t_range.length() * i / (grid.nt - 1);
      const double s = grid.s_range.lo + grid.s_range.length() * k / (grid.ns - 1);
      const C2Vector p = surf.position(t, s) - offset;
      const Complex w1{p.z1.imag(), p.z2.imag()};
      const Complex w2{p.z1.real(), -p.z2.real()};
      worst = std::max(worst, std::abs(w2 - c * w1 * w1));
    }
  return worst;
}

// parallel mean curvature: the three coupled equations on unit-speed curves
inline double check_pmc(const StarSurface& surf, const GridSpec& grid) {
  const PlanarCurve ua = ensure_unit_speed(surf.alpha());
  const PlanarCurve uw = ensure_unit_speed(surf.omega());
  const int nt = grid.nt, ns = grid.ns;
  std::vector<CurveJet> aj(nt), wj(ns);
  std::vector<double> kpa(nt), kpw(ns);
  for (int i = 0; i < nt; ++i) {
    const double t = ua.domain().lo + ua.domain().length() * i / (nt - 1);
    aj[i] = ua.eval(t);
    kpa[i] = ua.curvature_derivative(t);
  }
  for (int k = 0; k < ns; ++k) {
    const double s = uw.domain().lo + uw.domain().length() * k / (ns - 1);
    wj[k] = uw.eval(s);
    kpw[k] = uw.curvature_derivative(s);
  }
  double worst = 0.0;
  for (int i = 0; i < nt; ++i)
    for (int k = 0; k < ns; ++k) {
      const double na = std::norm(aj[i].pos), nw = std::norm(wj[k].pos);
      if (na < 1e-24 && nw < 1e-24) continue;
      const double conf = na + nw;
      const double ut = std::real(aj[i].pos * std::conj(aj[i].d1)) / conf;
      const double us = std::real(wj[k].pos * std::conj(wj[k].d1)) / conf;
      const double ka = aj[i].kappa, kw = wj[k].kappa;
      const double e1 = kpa[i] - ut * ka + us * kw;
      const double e2 = ut * kw + us * ka;
      const double e3 = kpw[k] - us * kw + ut * ka;
      worst = std::max({worst, std::abs(e1), std::abs(e2), std::abs(e3)});
    }
  return worst;
}

struct HslResult {
  double residual = 0.0;  // sup |kappa_alpha' + kappa_omega'|
  double a = 0.0, b = 0.0, c = 0.0;  // fitted kappa_alpha = a t + b, kappa_omega = -a s + c
};

// Hamiltonian stationary: curvature derivatives cancel in arclength
inline HslResult check_hsl(const StarSurface& surf, const GridSpec& grid) {
  const PlanarCurve ua = ensure_unit_speed(surf.alpha());
  const PlanarCurve uw = ensure_unit_speed(surf.omega());
  const int nt = grid.nt, ns = grid.ns;

  auto sample = [](const PlanarCurve& c, int n, std::vector<double>& x,
                   std::vector<double>& k, std::vector<double>& kp) {
    x.resize(n);
    k.resize(n);
    kp.resize(n);
    for (int i = 0; i < n; ++i) {
      x[i] = c.domain().lo + c.domain().length() * i / (n - 1);
      k[i] = c.eval(x[i]).kappa;
      kp[i] = c.curvature_derivative(x[i]);
    }
  };
  std::vector<double> ta, ka, kpa, sw, kw, kpw;
  sample(ua, nt, ta, ka, kpa);
  sample(uw, ns, sw, kw, kpw);

  HslResult r;
  const auto [amin, amax] = std::minmax_element(kpa.begin(), kpa.end());
  const auto [wmin, wmax] = std::minmax_element(kpw.begin(), kpw.end());
  r.residual = std::max(std::abs(*amax + *wmax), std::abs(*amin + *wmin));

  auto fit_line = [](const std::vector<double>& x, const std::vector<double>& y) {
    const double n = static_cast<double>(x.size());
    const double sx = std::accumulate(x.begin(), x.end(), 0.0);
    const double sy = std::accumulate(y.begin(), y.end(), 0.0);
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      sxx += x[i] * x[i];
      sxy += x[i] * y[i];
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    return std::pair{slope, (sy - slope * sx) / n};
  };
  const auto [slope_a, intercept_a] = fit_line(ta, ka);
  const auto [slope_w, intercept_w] = fit_line(sw, kw);
  r.a = slope_a;
  r.b = intercept_a;
  r.c = intercept_w;
  (void)slope_w;  // equals -a when the residual vanishes
  return r;
}

struct CmcResult {
  double rho = 0.0;       // mean of |H| over the grid
  double residual = 0.0;  // sup | |H| - rho |
  double lambda = 0.0;    // from rho^2 |alpha|^2 - kappa_alpha^2
  double lambda_alt = 0.0;  // from kappa_omega^2 - rho^2 |omega|^2
};

inline CmcResult check_cmc(const StarSurface& surf, const GridSpec& grid) {
  const PlanarCurve ua = ensure_unit_speed(surf.alpha());
  const PlanarCurve uw = ensure_unit_speed(surf.omega());
  const auto usurf = StarSurface::build(ua, uw, ua.domain().lo, uw.domain().lo);
  GridSpec g = grid;
  g.t_range = ua.domain();
  g.s_range = uw.domain();
  const auto mg = detail::build_masked_grid(usurf, g);

  CmcResult r;
  std::vector<double> h_values;
  h_values.reserve(mg.t.size() * mg.s.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < mg.t.size(); ++i)
    for (std::size_t k = 0; k < mg.s.size(); ++k) {
      if (mg.is_masked(i, k)) continue;
      h_values.push_back(norm(usurf.jet(mg.t[i], mg.s[k]).H));
      sum += h_values.back();
    }
  r.rho = sum / static_cast<double>(h_values.size());

  double la = 0.0, lw = 0.0;
  for (const double h : h_values) r.residual = std::max(r.residual, std::abs(h - r.rho));
  for (std::size_t i = 0; i < mg.t.size(); ++i) {
    const CurveJet a = ua.eval(mg.t[i]);
    la += r.rho * r.rho * std::norm(a.pos) - a.kappa * a.kappa;
  }
  for (std::size_t k = 0; k < mg.s.size(); ++k) {
    const CurveJet w = uw.eval(mg.s[k]);
    lw += w.kappa * w.kappa - r.rho * r.rho * std::norm(w.pos);
  }
  r.lambda = la / static_cast<double>(mg.t.size());
  r.lambda_alt = lw / static_cast<double>(mg.s.size());
  return r;
}

struct SelfSimilarResult {
  double residual = 0.0;            // sup |H - sign * phi^perp|
  double condition_residual = 0.0;  // sup of the scalar compatibility defect
  double combined() const { return std::max(residual, condition_residual); }
};

// H = sign * phi^perp, with the scalar necessary condition
// <omega, omega'> <alpha, J alpha'> = <omega', J omega> <alpha, alpha'>.
inline SelfSimilarResult check_self_similar(const StarSurface& surf, int sign,
                                            const GridSpec& grid) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  const auto g = detail::build_masked_grid(surf, grid);
  SelfSimilarResult r;
  for (std::size_t i = 0; i < g.t.size(); ++i)
    for (std::size_t k = 0; k < g.s.size(); ++k) {
      if (g.is_masked(i, k)) continue;
      const SurfaceJet j = surf.jet(g.t[i], g.s[k]);
      const C2Vector perp = surf.normal_project_position(g.t[i], g.s[k]);
      r.residual = std::max(r.residual, norm(j.H - static_cast<double>(sign) * perp));
      const CurveJet a = surf.alpha().eval(g.t[i]);
      const CurveJet w = surf.omega().eval(g.s[k]);
      const double lhs = std::real(w.pos * std::conj(w.d1)) * bracket_j(a.pos, a.d1);
      const double rhs = bracket_j(w.d1, w.pos) * std::real(a.pos * std::conj(a.d1));
      r.condition_residual = std::max(r.condition_residual, std::abs(lhs - rhs));
    }
  return r;
}

struct TranslatingResult {
  double curvature_residual = 0.0;  // defect of the two curvature laws
  double surface_residual = 0.0;    // sup |H - e^perp|
  double combined() const { return std::max(curvature_residual, surface_residual); }
};

// translating soliton with velocity e = (rho e^{i theta}, 0)
inline TranslatingResult check_translating(const StarSurface& surf, double rho,
                                           double theta, const GridSpec& grid) {
  const auto g = detail::build_masked_grid(surf, grid);
  const C2Vector e{std::polar(rho, theta), 0.0};
  const Complex phase = std::polar(1.0, -theta);
  TranslatingResult r;
  for (std::size_t i = 0; i < g.t.size(); ++i)
    for (std::size_t k = 0; k < g.s.size(); ++k) {
      if (g.is_masked(i, k)) continue;
      const CurveJet a = surf.alpha().eval(g.t[i]);
      const CurveJet w = surf.omega().eval(g.s[k]);
      const double ca =
          a.speed * a.kappa - rho * std::imag(phase * a.d1 * std::conj(a.pos));
      const double cw =
          w.speed * w.kappa + rho * std::imag(phase * w.d1 * std::conj(w.pos));
      r.curvature_residual = std::max({r.curvature_residual, std::abs(ca), std::abs(cw)});
      const SurfaceJet j = surf.jet(g.t[i], g.s[k]);
      const C2Vector perp = surf.normal_project_constant(g.t[i], g.s[k], e);
      r.surface_residual = std::max(r.surface_residual, norm(j.H - perp));
    }
  return r;
}

struct WillmoreEnergy {
  double factored = 0.0;  // L(omega) Int kappa_alpha^2 + L(alpha) Int kappa_omega^2
  double direct = 0.0;    // Int |H|^2 dmu over the parameter rectangle
  double identity_defect() const {
    return std::abs(factored - direct) / std::max(1.0, std::abs(factored));
  }
};

inline WillmoreEnergy willmore_energy(const StarSurface& surf) {
  const PlanarCurve ua = ensure_unit_speed(surf.alpha());
  const PlanarCurve uw = ensure_unit_speed(surf.omega());
  const double la = ua.domain().length();
  const double lw = uw.domain().length();

  auto curve_energy = [](const PlanarCurve& c) {
    const int panels = std::clamp<int>(static_cast<int>(std::ceil(c.domain().length() / 0.05)),
                                       32, 4000);
    const PrefixTable<double> tbl(
        [&c](double t) {
          const double k = c.eval(t).kappa;
          return k * k;
        },
        c.domain().lo, c.domain().hi, panels);
    return tbl.eval(c.domain().hi);
  };

  WillmoreEnergy w;
  w.factored = lw * curve_energy(ua) + la * curve_energy(uw);

  const auto usurf = StarSurface::build(ua, uw, ua.domain().lo, uw.domain().lo);
  const int pt = std::clamp<int>(static_cast<int>(std::ceil(la / 0.2)), 16, 400);
  const int ps = std::clamp<int>(static_cast<int>(std::ceil(lw / 0.2)), 16, 400);
  const double ht = la / pt, hs = lw / ps;
  double total = 0.0;
  for (int i = 0; i < pt; ++i) {
    const double t0 = ua.domain().lo + i * ht;
    for (int k = 0; k < ps; ++k) {
      const double s0 = uw.domain().lo + k * hs;
      double panel = 0.0;
      for (int qi = 0; qi < 3; ++qi)
        for (int pm_i = -1; pm_i <= 1; pm_i += 2)
          for (int qk = 0; qk < 3; ++qk)
            for (int pm_k = -1; pm_k <= 1; pm_k += 2) {
              const double t = t0 + 0.5 * ht * (1.0 + pm_i * detail::kGlNode[qi]);
              const double s = s0 + 0.5 * hs * (1.0 + pm_k * detail::kGlNode[qk]);
              const SurfaceJet j = usurf.jet(t, s);
              const double area = std::sqrt(j.E * j.G);
              panel += detail::kGlWeight[qi] * detail::kGlWeight[qk] * norm_sq(j.H) * area;
            }
      total += panel * 0.25 * ht * hs;
    }
  }
  w.direct = total;
  return w;
}

struct TorusResult {
  double closure_alpha = 0.0;
  double closure_omega = 0.0;
  double gap = 0.0;  // sup over samples of the period defect of the position
  double combined() const {
    return std::max({std::abs(closure_alpha), std::abs(closure_omega), gap});
  }
};

inline TorusResult check_torus(const StarSurface& surf, const GridSpec& grid) {
  if (!surf.alpha().period() || !surf.omega().period())
    throw std::invalid_argument("torus check needs periodic generating curves");
  const double T = *surf.alpha().period();
  const double S = *surf.omega().period();
  TorusResult r;
  const double lo_a = surf.alpha().domain().lo;
  const double lo_w = surf.omega().domain().lo;
  r.closure_alpha = surf.prefix_alpha(lo_a + T) - surf.prefix_alpha(lo_a);
  r.closure_omega = surf.prefix_omega(lo_w + S) - surf.prefix_omega(lo_w);
  for (int i = 0; i <= 32; ++i)
    for (int k = 0; k <= 32; ++k) {
      const double t = grid.t_range.lo + grid.t_range.length() * i / 32.0;
      const double s = grid.s_range.lo + grid.s_range.length() * k / 32.0;
      const C2Vector p = surf.position(t, s);
      r.gap = std::max(r.gap, norm(surf.position(t + T, s) - p));
      r.gap = std::max(r.gap, norm(surf.position(t, s + S) - p));
    }
  return r;
}

// ---------------------------------------------------------------------------
// Finite-difference oracles. Second derivatives of the immersion come from
// central differences of the analytic tangent fields.

inline std::array<double, 4> fd_oracle_C(const StarSurface& surf, double t, double s,
                                         double h) {
  const SurfaceJet j = surf.jet(t, s);
  const C2Vector tt =
      (1.0 / (2 * h)) * (surf.jet(t + h, s).phi_t - surf.jet(t - h, s).phi_t);
  const C2Vector ss =
      (1.0 / (2 * h)) * (surf.jet(t, s + h).phi_s - surf.jet(t, s - h).phi_s);
  return {herm(tt, j.phi_t).imag(), herm(tt, j.phi_s).imag(), herm(ss, j.phi_t).imag(),
          herm(ss, j.phi_s).imag()};
}

inline C2Vector fd_oracle_H(const StarSurface& surf, double t, double s, double h) {
  const SurfaceJet j = surf.jet(t, s);
  const C2Vector tt =
      (1.0 / (2 * h)) * (surf.jet(t + h, s).phi_t - surf.jet(t - h, s).phi_t);
  const C2Vector ss =
      (1.0 / (2 * h)) * (surf.jet(t, s + h).phi_s - surf.jet(t, s - h).phi_s);
  auto normal_part = [&j](const C2Vector& v) {
    return v - (euclid(v, j.phi_t) / j.E) * j.phi_t - (euclid(v, j.phi_s) / j.G) * j.phi_s;
  };
  return (1.0 / j.E) * normal_part(tt) + (1.0 / j.G) * normal_part(ss);
}

// Laplacian of the angle in the conformal gauge (unit-speed generators):
// e^{-2u} (beta_tt + beta_ss), with the angle unwrapped around the center.
inline double fd_oracle_laplace_beta(const StarSurface& surf, double t, double s,
                                     double h) {
  const SurfaceJet j = surf.jet(t, s);
  auto beta_at = [&surf, &j](double tt, double ss) {
    const double raw = surf.jet(tt, ss).beta;
    return j.beta + std::remainder(raw - j.beta, 2 * std::numbers::pi);
  };
  const double btt = (beta_at(t + h, s) - 2 * j.beta + beta_at(t - h, s)) / (h * h);
  const double bss = (beta_at(t, s + h) - 2 * j.beta + beta_at(t, s - h)) / (h * h);
  return (btt + bss) / j.conf;
}

// J applied to the finite-difference gradient of the angle; equals H.
inline C2Vector fd_oracle_H_from_beta(const StarSurface& surf, double t, double s,
                                      double h) {
  const SurfaceJet j = surf.jet(t, s);
  const double bt =
      std::remainder(surf.jet(t + h, s).beta - surf.jet(t - h, s).beta, 2 * std::numbers::pi) /
      (2 * h);
  const double bs =
      std::remainder(surf.jet(t, s + h).beta - surf.jet(t, s - h).beta, 2 * std::numbers::pi) /
      (2 * h);
  return jrot2((bt / j.E) * j.phi_t + (bs / j.G) * j.phi_s);
}

// ---------------------------------------------------------------------------
// Report assembly.

struct FamilyResult {
  std::string name;
  double residual = 0.0;
  double threshold = 0.0;
  bool pass = false;
  nlohmann::json details;
};

struct ClassReport {
  GridSpec grid;
  std::vector<FamilyResult> families;

  bool all_pass() const {
    return std::all_of(families.begin(), families.end(),
                       [](const FamilyResult& f) { return f.pass; });
  }

  nlohmann::json to_json() const {
    nlohmann::json out;
    out["grid"] = {{"nt", grid.nt},
                   {"ns", grid.ns},
                   {"t_range", {grid.t_range.lo, grid.t_range.hi}},
                   {"s_range", {grid.s_range.lo, grid.s_range.hi}}};
    out["families"] = nlohmann::json::array();
    for (const auto& f : families) {
      nlohmann::json e = {{"name", f.name},
                          {"residual", f.residual},
                          {"threshold", f.threshold},
                          {"pass", f.pass}};
      if (!f.details.is_null()) e["details"] = f.details;
      out["families"].push_back(e);
    }
    return out;
  }
};

struct CheckParams {
  double translating_rho = 1.0;
  double translating_theta = 0.0;
  double tolerance_override = 0.0;  // > 0 replaces every default threshold
};

inline double default_threshold(const std::string& family, bool ode_backed) {
  if (family == "lagrangian") return 1e-10;
  if (family == "cmc") return ode_backed ? 1e-7 : 1e-9;
  if (family == "translating" || family == "willmore" || family == "torus") return 1e-8;
  return ode_backed ? 1e-8 : 1e-10;
}

inline FamilyResult run_check(const StarSurface& surf, const std::string& name,
                              const GridSpec& grid, const CheckParams& params = {}) {
  const bool ode = surf.alpha().ode_backed() || surf.omega().ode_backed();
  FamilyResult f;
  f.name = name;
  f.threshold = params.tolerance_override > 0 ? params.tolerance_override
                                              : default_threshold(name, ode);
  if (name == "lagrangian") {
    f.residual = check_lagrangian(surf, grid);
  } else if (name == "special") {
    const auto r = check_special(surf, grid);
    f.residual = r.residual;
    f.details = {{"max_H", r.max_h}};
  } else if (name == "pmc") {
    f.residual = check_pmc(surf, grid);
  } else if (name == "hsl") {
    const auto r = check_hsl(surf, grid);
    f.residual = r.residual;
    f.details = {{"a", r.a}, {"b", r.b}, {"c", r.c}};
  } else if (name == "cmc") {
    const auto r = check_cmc(surf, grid);
    f.residual = r.residual;
    f.details = {{"rho", r.rho}, {"lambda", r.lambda}, {"lambda_alt", r.lambda_alt}};
  } else if (name == "shrinker" || name == "expander") {
    const auto r = check_self_similar(surf, name == "shrinker" ? -1 : 1, grid);
    f.residual = r.combined();
    f.details = {{"surface_residual", r.residual},
                 {"condition_residual", r.condition_residual}};
  } else if (name == "translating") {
    const auto r =
        check_translating(surf, params.translating_rho, params.translating_theta, grid);
    f.residual = r.combined();
    f.details = {{"curvature_residual", r.curvature_residual},
                 {"surface_residual", r.surface_residual},
                 {"rho", params.translating_rho},
                 {"theta", params.translating_theta}};
  } else if (name == "willmore") {
    const auto w = willmore_energy(surf);
    f.residual = w.identity_defect();
    f.details = {{"factored", w.factored}, {"direct", w.direct}};
  } else if (name == "torus") {
    const auto r = check_torus(surf, grid);
    f.residual = r.combined();
    f.details = {{"closure_alpha", r.closure_alpha},
                 {"closure_omega", r.closure_omega},
                 {"gap", r.gap}};
  } else {
    throw std::invalid_argument("unknown family check: " + name);
  }
  f.pass = f.residual < f.threshold;
  return f;
}

inline ClassReport run_checks(const StarSurface& surf, const std::vector<std::string>& names,
                              const GridSpec& grid, const CheckParams& params = {}) {
  ClassReport rep;
  rep.grid = grid;
  for (const auto& n : names) rep.families.push_back(run_check(surf, n, grid, params));
  return rep;
}

}  // namespace starlag
