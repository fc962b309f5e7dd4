#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "starlag/classify.hpp"
#include "starlag/curves.hpp"
#include "starlag/star.hpp"

namespace starlag {

struct CurveSpec {
  std::string kind;
  std::vector<double> params;
  std::optional<Interval> domain;
  std::optional<double> theta0;                 // initial tangent angle (ODE kinds)
  std::optional<std::array<double, 2>> p0;      // initial position (ODE kinds)
  std::optional<double> phi0;                   // initial angle (translating kind)
};

struct CheckRequest {
  std::string name;
  double rho = 1.0;    // translating family only
  double theta = 0.0;  // translating family only
};

struct OutputSpec {
  std::string dir = ".";
  std::vector<std::string> formats = {"obj"};
  std::vector<int> projections = {0, 1, 2, 3};
};

struct SurfaceSpec {
  std::string name = "surface";
  CurveSpec alpha;
  CurveSpec omega;
  double t0 = 0.0, s0 = 0.0;
  GridSpec grid;
  std::vector<CheckRequest> checks;
  OutputSpec output;
};

namespace detail {

inline const std::set<std::string>& known_kinds() {
  static const std::set<std::string> k = {
      "line",   "circle",    "circle_angle",   "cornu",      "gerono",
      "lissajous", "lemniscate", "curvature_poly", "cmc_radial", "elastica",
      "translating_curve"};
  return k;
}

inline const std::set<std::string>& known_families() {
  static const std::set<std::string> k = {"lagrangian", "special",     "pmc",
                                          "hsl",        "cmc",         "shrinker",
                                          "expander",   "translating", "willmore",
                                          "torus"};
  return k;
}

inline void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument("surface spec: " + what);
}

}  // namespace detail

inline PlanarCurve make_curve(const CurveSpec& c) {
  const auto& p = c.params;
  auto need = [&](std::size_t n) {
    detail::require(p.size() >= n, c.kind + " needs " + std::to_string(n) + " params");
  };
  auto domain = [&]() {
    detail::require(c.domain.has_value(), c.kind + " needs an explicit domain");
    detail::require(c.domain->length() > 0, "empty domain");
    return *c.domain;
  };
  const double th0 = c.theta0.value_or(0.0);
  const PlanePoint pos0 = c.p0 ? PlanePoint{(*c.p0)[0], (*c.p0)[1]} : PlanePoint{0.0, 0.0};

  if (c.kind == "line") {
    need(1);
    return c.domain ? make_line(p[0], *c.domain) : make_line(p[0]);
  }
  if (c.kind == "circle") {
    need(3);
    return make_circle({p[0], p[1]}, p[2]);
  }
  if (c.kind == "circle_angle") {
    need(3);
    return make_circle_angle({p[0], p[1]}, p[2]);
  }
  if (c.kind == "cornu") {
    need(1);
    return make_cornu(p[0], domain());
  }
  if (c.kind == "gerono") return make_gerono();
  if (c.kind == "lissajous") return make_lissajous();
  if (c.kind == "lemniscate") return make_lemniscate();
  if (c.kind == "curvature_poly") {
    need(1);
    const std::vector<double> coef = p;
    auto kappa = [coef](double t) {
      double acc = 0.0;
      for (std::size_t i = coef.size(); i-- > 0;) acc = acc * t + coef[i];
      return acc;
    };
    auto kappa_prime = [coef](double t) {
      double acc = 0.0;
      for (std::size_t i = coef.size(); i-- > 1;) acc = acc * t + coef[i] * static_cast<double>(i);
      return acc;
    };
    const Interval dom = domain();
    return curve_from_curvature(kappa, dom.lo, th0, pos0, dom, 0.01, kappa_prime);
  }
  if (c.kind == "cmc_radial") {
    need(4);
    return cmc_radial_curve(p[0], p[1], p[2], p[3], domain());
  }
  if (c.kind == "elastica") {
    need(3);
    return elastica_curve(p[0], p[1], p[2], domain(), th0, pos0);
  }
  if (c.kind == "translating_curve") {
    need(3);
    const PlanePoint z0 = c.p0 ? pos0 : PlanePoint{1.0, 0.0};
    return translating_soliton_curve(p[0], p[1], p[2], z0, c.phi0.value_or(0.0), domain());
  }
  throw std::invalid_argument("unknown curve kind: " + c.kind);
}

inline StarSurface make_surface(const SurfaceSpec& spec) {
  return StarSurface::build(make_curve(spec.alpha), make_curve(spec.omega), spec.t0,
                            spec.s0);
}

// ---------------------------------------------------------------------------
// JSON (de)serialization; field names mirror the structs.

inline nlohmann::json to_json(const CurveSpec& c) {
  nlohmann::json j = {{"kind", c.kind}, {"params", c.params}};
  if (c.domain) j["domain"] = {c.domain->lo, c.domain->hi};
  if (c.theta0) j["theta0"] = *c.theta0;
  if (c.p0) j["p0"] = {(*c.p0)[0], (*c.p0)[1]};
  if (c.phi0) j["phi0"] = *c.phi0;
  return j;
}

inline CurveSpec curve_from_json(const nlohmann::json& j) {
  detail::require(j.is_object() && j.contains("kind"), "curve needs a kind");
  CurveSpec c;
  c.kind = j.at("kind").get<std::string>();
  detail::require(detail::known_kinds().count(c.kind) > 0, "unknown curve kind " + c.kind);
  if (j.contains("params")) c.params = j.at("params").get<std::vector<double>>();
  if (j.contains("domain")) {
    const auto d = j.at("domain").get<std::vector<double>>();
    detail::require(d.size() == 2 && d[0] < d[1], "domain must be [lo, hi]");
    c.domain = Interval{d[0], d[1]};
  }
  if (j.contains("theta0")) c.theta0 = j.at("theta0").get<double>();
  if (j.contains("p0")) {
    const auto d = j.at("p0").get<std::vector<double>>();
    detail::require(d.size() == 2, "p0 must be [x, y]");
    c.p0 = std::array<double, 2>{d[0], d[1]};
  }
  if (j.contains("phi0")) c.phi0 = j.at("phi0").get<double>();
  return c;
}

inline nlohmann::json to_json(const SurfaceSpec& s) {
  nlohmann::json j;
  j["name"] = s.name;
  j["alpha"] = to_json(s.alpha);
  j["omega"] = to_json(s.omega);
  j["base"] = {s.t0, s.s0};
  j["grid"] = {{"nt", s.grid.nt},
               {"ns", s.grid.ns},
               {"t_range", {s.grid.t_range.lo, s.grid.t_range.hi}},
               {"s_range", {s.grid.s_range.lo, s.grid.s_range.hi}}};
  j["checks"] = nlohmann::json::array();
  for (const auto& c : s.checks) {
    if (c.name == "translating")
      j["checks"].push_back({{"name", c.name}, {"rho", c.rho}, {"theta", c.theta}});
    else
      j["checks"].push_back(c.name);
  }
  j["output"] = {{"dir", s.output.dir},
                 {"formats", s.output.formats},
                 {"projections", s.output.projections}};
  return j;
}

inline SurfaceSpec surface_from_json(const nlohmann::json& j) {
  detail::require(j.is_object(), "spec must be a JSON object");
  detail::require(j.contains("alpha") && j.contains("omega"),
                  "spec needs alpha and omega curves");
  SurfaceSpec s;
  if (j.contains("name")) s.name = j.at("name").get<std::string>();
  s.alpha = curve_from_json(j.at("alpha"));
  s.omega = curve_from_json(j.at("omega"));
  if (j.contains("base")) {
    const auto b = j.at("base").get<std::vector<double>>();
    detail::require(b.size() == 2, "base must be [t0, s0]");
    s.t0 = b[0];
    s.s0 = b[1];
  }
  detail::require(j.contains("grid"), "spec needs a grid");
  {
    const auto& g = j.at("grid");
    s.grid.nt = g.at("nt").get<int>();
    s.grid.ns = g.at("ns").get<int>();
    const auto tr = g.at("t_range").get<std::vector<double>>();
    const auto sr = g.at("s_range").get<std::vector<double>>();
    detail::require(tr.size() == 2 && sr.size() == 2, "grid ranges must be [lo, hi]");
    detail::require(tr[0] < tr[1] && sr[0] < sr[1], "grid ranges must be non-empty");
    s.grid.t_range = {tr[0], tr[1]};
    s.grid.s_range = {sr[0], sr[1]};
  }
  if (j.contains("checks")) {
    for (const auto& c : j.at("checks")) {
      CheckRequest req;
      if (c.is_string()) {
        req.name = c.get<std::string>();
      } else {
        req.name = c.at("name").get<std::string>();
        if (c.contains("rho")) req.rho = c.at("rho").get<double>();
        if (c.contains("theta")) req.theta = c.at("theta").get<double>();
      }
      detail::require(detail::known_families().count(req.name) > 0,
                      "unknown check " + req.name);
      s.checks.push_back(req);
    }
  }
  if (j.contains("output")) {
    const auto& o = j.at("output");
    if (o.contains("dir")) s.output.dir = o.at("dir").get<std::string>();
    if (o.contains("formats"))
      s.output.formats = o.at("formats").get<std::vector<std::string>>();
    if (o.contains("projections"))
      s.output.projections = o.at("projections").get<std::vector<int>>();
  }
  return s;
}

}  // namespace starlag
