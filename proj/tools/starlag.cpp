// Command-line front end: gallery specs, surface summaries, family
// classification reports, finite-difference verification, and mesh export.
//
// Exit codes: 0 all requested checks pass, 1 a check failed (report still
// written), 2 usage or spec error, 3 numeric failure.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>

#include "CLI11.hpp"
#include "starlag/gallery.hpp"
#include "starlag/meshio.hpp"

namespace fs = std::filesystem;
using namespace starlag;
using nlohmann::json;

namespace {

struct Overrides {
  std::string grid;    // "NTxNS"
  std::string trange;  // "lo:hi"
  std::string srange;  // "lo:hi"
  double tol = 0.0;
  std::string out;
  long seed = -1;
  std::string project = "all";
  std::vector<std::string> formats;
};

SurfaceSpec load_spec(const std::string& arg) {
  constexpr const char* kPrefix = "gallery:";
  if (arg.rfind(kPrefix, 0) == 0) return gallery_spec(arg.substr(std::strlen(kPrefix)));
  std::ifstream in(arg);
  if (!in) throw std::invalid_argument("cannot open spec file: " + arg);
  json j;
  in >> j;
  return surface_from_json(j);
}

Interval parse_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("range must be lo:hi, got " + text);
  const double lo = std::stod(text.substr(0, colon));
  const double hi = std::stod(text.substr(colon + 1));
  if (!(lo < hi)) throw std::invalid_argument("range must satisfy lo < hi");
  return {lo, hi};
}

void apply_overrides(SurfaceSpec& spec, const Overrides& o) {
  if (!o.grid.empty()) {
    int nt = 0, ns = 0;
    if (std::sscanf(o.grid.c_str(), "%dx%d", &nt, &ns) != 2 || nt < 2 || ns < 2)
      throw std::invalid_argument("--grid must be NTxNS with both >= 2");
    spec.grid.nt = nt;
    spec.grid.ns = ns;
  }
  if (!o.trange.empty()) spec.grid.t_range = parse_range(o.trange);
  if (!o.srange.empty()) spec.grid.s_range = parse_range(o.srange);
}

void emit(const json& j, const std::string& out_file) {
  std::cout << j.dump(2) << "\n";
  if (!out_file.empty()) {
    std::ofstream f(out_file);
    if (!f) throw NumericError("cli", "cannot write " + out_file);
    f << j.dump(2) << "\n";
  }
}

int cmd_gallery(const std::string& name, const Overrides& o) {
  if (name.empty()) {
    json j = gallery_names();
    emit(j, o.out);
    return 0;
  }
  emit(to_json(gallery_spec(name)), o.out);
  return 0;
}

int cmd_build(const std::string& spec_arg, const Overrides& o) {
  SurfaceSpec spec = load_spec(spec_arg);
  apply_overrides(spec, o);
  const StarSurface surf = make_surface(spec);
  const auto grid = detail::build_masked_grid(surf, spec.grid);

  int singular = 0;
  double conf_min = 1e300, conf_max = 0.0;
  double h_min = 1e300, h_max = 0.0, h_sum = 0.0;
  long count = 0;
  for (std::size_t i = 0; i < grid.t.size(); ++i)
    for (std::size_t k = 0; k < grid.s.size(); ++k) {
      if (grid.is_masked(i, k)) {
        ++singular;
        continue;
      }
      const SurfaceJet jet = surf.jet(grid.t[i], grid.s[k]);
      conf_min = std::min(conf_min, jet.conf);
      conf_max = std::max(conf_max, jet.conf);
      const double h = norm(jet.H);
      h_min = std::min(h_min, h);
      h_max = std::max(h_max, h);
      h_sum += h;
      ++count;
    }

  json j;
  j["name"] = spec.name;
  j["alpha"] = {{"kind", spec.alpha.kind}, {"period", surf.alpha().period().value_or(0.0)}};
  j["omega"] = {{"kind", spec.omega.kind}, {"period", surf.omega().period().value_or(0.0)}};
  j["grid"] = {{"nt", spec.grid.nt}, {"ns", spec.grid.ns}};
  j["masked_points"] = singular;
  j["lagrangian_residual"] = check_lagrangian(surf, spec.grid);
  j["conformal_factor"] = {{"min", conf_min}, {"max", conf_max}};
  j["mean_curvature"] = {{"min", h_min}, {"max", h_max}, {"mean", h_sum / count}};
  emit(j, o.out);
  return 0;
}

int cmd_classify(const std::string& spec_arg, const Overrides& o) {
  SurfaceSpec spec = load_spec(spec_arg);
  apply_overrides(spec, o);
  const StarSurface surf = make_surface(spec);

  std::vector<CheckRequest> checks = spec.checks;
  if (checks.empty()) checks.push_back({"lagrangian", 1.0, 0.0});

  ClassReport rep;
  rep.grid = spec.grid;
  for (const auto& req : checks) {
    CheckParams params;
    params.translating_rho = req.rho;
    params.translating_theta = req.theta;
    params.tolerance_override = o.tol;
    rep.families.push_back(run_check(surf, req.name, spec.grid, params));
  }
  json j = rep.to_json();
  j["name"] = spec.name;
  j["all_pass"] = rep.all_pass();
  emit(j, o.out);
  return rep.all_pass() ? 0 : 1;
}

int cmd_verify(const std::string& spec_arg, const Overrides& o) {
  SurfaceSpec spec = load_spec(spec_arg);
  apply_overrides(spec, o);
  const StarSurface surf = make_surface(spec);
  const double fd_tol = o.tol > 0 ? o.tol : 1e-6;
  const double h = 1e-4;

  std::vector<std::pair<double, double>> samples;
  const Interval tr = spec.grid.t_range, sr = spec.grid.s_range;
  for (int i = 1; i <= 5; ++i)
    for (int k = 1; k <= 5; ++k)
      samples.push_back({tr.lo + tr.length() * (0.12 + 0.76 * (i - 1) / 4.0),
                         sr.lo + sr.length() * (0.12 + 0.76 * (k - 1) / 4.0)});
  if (o.seed >= 0) {
    std::mt19937_64 rng(static_cast<unsigned long>(o.seed));
    std::uniform_real_distribution<double> ut(tr.lo + 0.05 * tr.length(),
                                              tr.hi - 0.05 * tr.length());
    std::uniform_real_distribution<double> us(sr.lo + 0.05 * sr.length(),
                                              sr.hi - 0.05 * sr.length());
    for (int k = 0; k < 20; ++k) samples.push_back({ut(rng), us(rng)});
  }

  bool unit_speed = true;
  for (int i = 0; i <= 16 && unit_speed; ++i) {
    const double t = tr.lo + tr.length() * i / 16.0;
    const double s = sr.lo + sr.length() * i / 16.0;
    unit_speed = std::abs(surf.alpha().eval(t).speed - 1.0) < 1e-9 &&
                 std::abs(surf.omega().eval(s).speed - 1.0) < 1e-9;
  }

  double worst_c = 0.0, worst_h = 0.0, worst_grad = 0.0, worst_lap = 0.0;
  int used = 0;
  for (const auto& [t, s] : samples) {
    const SurfaceJet jet = surf.jet(t, s);
    if (jet.conf < 1e-3) continue;
    ++used;
    const auto c_fd = fd_oracle_C(surf, t, s, h);
    const double c_scale = std::max({1.0, std::abs(jet.C_ttt), std::abs(jet.C_tts),
                                     std::abs(jet.C_tss), std::abs(jet.C_sss)});
    worst_c = std::max({worst_c, std::abs(c_fd[0] - jet.C_ttt) / c_scale,
                        std::abs(c_fd[1] - jet.C_tts) / c_scale,
                        std::abs(c_fd[2] - jet.C_tss) / c_scale,
                        std::abs(c_fd[3] - jet.C_sss) / c_scale});
    const double h_scale = std::max(1.0, norm(jet.H));
    worst_h = std::max(worst_h, norm(fd_oracle_H(surf, t, s, h) - jet.H) / h_scale);
    worst_grad =
        std::max(worst_grad, norm(fd_oracle_H_from_beta(surf, t, s, h) - jet.H) / h_scale);
    if (unit_speed) {
      const double lap = fd_oracle_laplace_beta(surf, t, s, 1e-3);
      const double analytic = (surf.alpha().curvature_derivative(t) +
                               surf.omega().curvature_derivative(s)) /
                              jet.conf;
      worst_lap = std::max(worst_lap, std::abs(lap - analytic));
    }
  }

  const double lagrangian = check_lagrangian(surf, spec.grid);
  const bool pass = worst_c < fd_tol && worst_h < fd_tol && worst_grad < fd_tol &&
                    (!unit_speed || worst_lap < fd_tol) && lagrangian < 1e-10;

  json j;
  j["name"] = spec.name;
  j["samples"] = used;
  j["fd_step"] = h;
  j["cubic_tensor_defect"] = worst_c;
  j["mean_curvature_defect"] = worst_h;
  j["angle_gradient_defect"] = worst_grad;
  if (unit_speed)
    j["laplace_beta_defect"] = worst_lap;
  else
    j["laplace_beta_defect"] = nullptr;
  j["lagrangian_residual"] = lagrangian;
  j["pass"] = pass;
  emit(j, o.out);
  return pass ? 0 : 1;
}

int cmd_mesh(const std::string& spec_arg, const Overrides& o) {
  SurfaceSpec spec = load_spec(spec_arg);
  apply_overrides(spec, o);
  const StarSurface surf = make_surface(spec);

  const std::string dir = o.out.empty() ? spec.output.dir : o.out;
  fs::create_directories(dir);

  std::vector<std::string> formats =
      o.formats.empty() ? spec.output.formats : o.formats;
  std::vector<int> projections;
  if (o.project == "all") {
    projections = {0, 1, 2, 3};
  } else {
    projections = {std::stoi(o.project)};
  }

  const bool wrap_t = surf.alpha().period() &&
                      std::abs(spec.grid.t_range.length() - *surf.alpha().period()) < 1e-9;
  const bool wrap_s = surf.omega().period() &&
                      std::abs(spec.grid.s_range.length() - *surf.omega().period()) < 1e-9;
  const MeshGrid mesh = sample(surf, spec.grid.t_range, spec.grid.s_range, spec.grid.nt,
                               spec.grid.ns, wrap_t, wrap_s);

  json written = json::array();
  for (const auto& fmt : formats) {
    if (fmt == "csv") {
      const std::string path = dir + "/" + spec.name + ".csv";
      write_csv(mesh, path);
      written.push_back(path);
      continue;
    }
    if (fmt != "obj" && fmt != "ply")
      throw std::invalid_argument("unknown format '" + fmt + "' (obj, ply, csv)");
    for (int axis : projections) {
      if (axis < 0 || axis > 3) throw std::invalid_argument("--project must be 0..3 or all");
      const Mesh3 m3 = project(mesh, axis);
      const std::string path =
          dir + "/" + spec.name + "_p" + std::to_string(axis) + "." + fmt;
      if (fmt == "obj")
        write_obj(m3, path);
      else
        write_ply(m3, path);
      written.push_back(path);
    }
  }
  json j;
  j["name"] = spec.name;
  j["wrap_t"] = mesh.wrap_t;
  j["wrap_s"] = mesh.wrap_s;
  j["files"] = written;
  emit(j, "");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lagrangian surfaces in C^2 built from pairs of planar curves"};
  app.require_subcommand(1);

  Overrides o;
  std::string spec_arg, gallery_name;

  auto add_common = [&](CLI::App* sub, bool needs_spec) {
    if (needs_spec)
      sub->add_option("spec", spec_arg, "spec JSON file or gallery:NAME")->required();
    sub->add_option("--grid", o.grid, "override grid as NTxNS");
    sub->add_option("--trange", o.trange, "override t window as lo:hi");
    sub->add_option("--srange", o.srange, "override s window as lo:hi");
    sub->add_option("--tol", o.tol, "override residual thresholds");
    sub->add_option("--out", o.out, "output file or directory");
    sub->add_option("--seed", o.seed, "seed for extra random verification samples");
  };

  auto* gal = app.add_subcommand("gallery", "print a named example spec");
  gal->add_option("name", gallery_name, "entry name; omit to list all");
  gal->add_option("--out", o.out, "also write the spec to a file");

  auto* bld = app.add_subcommand("build", "build a surface and print a summary");
  add_common(bld, true);

  auto* cls = app.add_subcommand("classify", "run the requested family checks");
  add_common(cls, true);

  auto* ver = app.add_subcommand("verify", "finite-difference oracle comparison");
  add_common(ver, true);

  auto* msh = app.add_subcommand("mesh", "sample and export meshes");
  add_common(msh, true);
  msh->add_option("--project", o.project, "coordinate to drop: 0..3 or all");
  msh->add_option("--format", o.formats, "obj, ply, csv")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gal->parsed()) return cmd_gallery(gallery_name, o);
    if (bld->parsed()) return cmd_build(spec_arg, o);
    if (cls->parsed()) return cmd_classify(spec_arg, o);
    if (ver->parsed()) return cmd_verify(spec_arg, o);
    if (msh->parsed()) return cmd_mesh(spec_arg, o);
  } catch (const std::invalid_argument& e) {
    std::cerr << "spec error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
