#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "starlag/classify.hpp"
#include "support/oracles.hpp"

using namespace starlag;
using std::numbers::pi;

namespace {

GridSpec grid(Interval t, Interval s, int n = 41) { return {n, n, t, s}; }

StarSurface plane_surface() { return StarSurface::build(make_line(0.0), make_line(0.0)); }

StarSurface cylinder_surface(double R) {
  return StarSurface::build(make_circle({0, 0}, 1.0), make_circle_angle({0, 0}, R));
}

StarSurface cornu_surface(double a) {
  return StarSurface::build(make_cornu(a, {-0.2, 3.2}), make_cornu(-a, {-0.2, 3.2}));
}

StarSurface torus_surface() { return StarSurface::build(make_gerono(), make_lissajous()); }

StarSurface lemniscate_surface() {
  return StarSurface::build(make_lemniscate(), make_lemniscate());
}

const GridSpec kPlaneGrid = grid({-1.5, 1.5}, {-1.5, 1.5});
const GridSpec kCylGrid = grid({0, 2 * pi}, {0, 2 * pi});
const GridSpec kCornuGrid = grid({0.3, 2.7}, {0.3, 2.7});
const GridSpec kTorusGrid = grid({0, 2 * pi}, {0, 2 * pi});

}  // namespace

TEST_CASE("lagrangian residual") {
  CHECK(check_lagrangian(plane_surface(), kPlaneGrid) < 1e-14);
  CHECK(check_lagrangian(cylinder_surface(1.0), kCylGrid) < 1e-12);
  CHECK(check_lagrangian(torus_surface(), kTorusGrid) < 1e-10);
}

TEST_CASE("special (minimal) check") {
  const auto lines = StarSurface::build(make_line(1.0), make_line(2.0));
  const auto r = check_special(lines, kPlaneGrid);
  CHECK(r.residual < 1e-12);
  CHECK(r.max_h < 1e-10);

  CHECK(check_special(cylinder_surface(1.0), kCylGrid).residual ==
        Catch::Approx(1.0).margin(1e-12));
  CHECK(check_special(plane_surface(), kPlaneGrid).residual < 1e-15);
}

TEST_CASE("holomorphic correspondence of minimal line pairs") {
  CHECK(holomorphic_correspondence(1.0, 0.0, kPlaneGrid) < 1e-9);
  CHECK(holomorphic_correspondence(0.0, 1.0, kPlaneGrid) < 1e-9);
  CHECK(holomorphic_correspondence(1.0, 2.0, kPlaneGrid) < 1e-9);
  CHECK_THROWS_AS(holomorphic_correspondence(0.0, 0.0, kPlaneGrid), std::invalid_argument);

  // least-squares refit of the quadratic coefficient over the grid
  const double a = 1.0, b = 2.0;
  const auto surf = StarSurface::build(make_line(a), make_line(b));
  const C2Vector offset = surf.position(0.0, 0.0);
  Complex num = 0.0;
  double den = 0.0;
  for (int i = 0; i <= 40; ++i)
    for (int k = 0; k <= 40; ++k) {
      const double t = -1.5 + 3.0 * i / 40.0;
      const double s = -1.5 + 3.0 * k / 40.0;
      const C2Vector p = surf.position(t, s) - offset;
      const Complex w1{p.z1.imag(), p.z2.imag()};
      const Complex w2{p.z1.real(), -p.z2.real()};
      num += w2 * std::conj(w1 * w1);
      den += std::norm(w1 * w1);
    }
  const Complex c_fit = num / den;
  const Complex c_formula = Complex{3.0, 4.0} / 50.0;
  CHECK(std::abs(c_fit - c_formula) < 1e-9);
}

TEST_CASE("parallel mean curvature check") {
  CHECK(check_pmc(cylinder_surface(1.0), kCylGrid) < 1e-10);
  CHECK(check_pmc(cylinder_surface(2.0), kCylGrid) < 1e-10);
  CHECK(check_pmc(plane_surface(), kPlaneGrid) < 1e-14);
  CHECK(check_pmc(cornu_surface(1.0), kCornuGrid) > 1e-3);
}

TEST_CASE("hamiltonian stationary check") {
  const auto cornu = check_hsl(cornu_surface(1.0), kCornuGrid);
  CHECK(cornu.residual < 1e-8);
  CHECK(cornu.a == Catch::Approx(1.0).margin(1e-8));

  // circle x line (constant curvatures)
  const auto cl = StarSurface::build(make_circle({0, 0}, 1.0), make_line(0.0));
  const auto r = check_hsl(cl, grid({0, 2 * pi}, {-2, 2}));
  CHECK(r.residual < 1e-10);
  CHECK(r.a == Catch::Approx(0.0).margin(1e-10));
  CHECK(r.b == Catch::Approx(1.0).margin(1e-10));
  CHECK(r.c == Catch::Approx(0.0).margin(1e-10));

  // two circles not centered at the origin: still HSL
  const auto two = StarSurface::build(make_circle({0.5, 0}, 1.0), make_circle({0.5, 0}, 1.0));
  CHECK(check_hsl(two, kCylGrid).residual < 1e-10);

  // Gerono paired with itself: curvature is not affine in arclength
  const auto gg = StarSurface::build(make_gerono(), make_gerono());
  CHECK(check_hsl(gg, kTorusGrid).residual > 1e-2);
}

TEST_CASE("constant mean curvature check") {
  const double T = lemniscate_period();
  const auto lem = check_cmc(lemniscate_surface(), grid({0, T}, {0, T}, 61));
  CHECK(lem.rho == Catch::Approx(3.0).margin(1e-6));
  CHECK(lem.residual < 1e-6);
  CHECK(std::abs(lem.lambda) < 1e-6);
  CHECK(std::abs(lem.lambda_alt) < 1e-6);

  const auto cyl = check_cmc(cylinder_surface(2.0), kCylGrid);
  CHECK(cyl.rho == Catch::Approx(0.5).margin(1e-10));
  CHECK(cyl.residual < 1e-10);
  CHECK(cyl.lambda == Catch::Approx(-0.75).margin(1e-9));
  CHECK(cyl.lambda_alt == Catch::Approx(-0.75).margin(1e-9));

  const auto flat = check_cmc(plane_surface(), kPlaneGrid);
  CHECK(flat.rho == Catch::Approx(0.0).margin(1e-12));
}

TEST_CASE("self-similar soliton check") {
  const auto shrinker = cylinder_surface(1.0);
  const auto pass = check_self_similar(shrinker, -1, kCylGrid);
  CHECK(pass.residual < 1e-10);
  CHECK(pass.condition_residual < 1e-10);

  const auto fail = check_self_similar(shrinker, +1, kCylGrid);
  CHECK(fail.residual >= 1.0);
  CHECK(fail.residual == Catch::Approx(2.0).margin(1e-8));

  const auto flat = check_self_similar(plane_surface(), -1, kPlaneGrid);
  CHECK(flat.combined() < 1e-11);
  CHECK(check_self_similar(plane_surface(), +1, kPlaneGrid).combined() < 1e-11);
}

TEST_CASE("translating soliton check") {
  const double rho = 1.0, theta = 0.0;
  const auto alpha = translating_soliton_curve(rho, theta, +1.0, {1.0, 0.0}, pi / 2,
                                               {0.0, 3.0});
  const auto omega = translating_soliton_curve(rho, theta, -1.0, {1.0, 0.0}, pi / 2,
                                               {0.0, 3.0});
  const auto surf = StarSurface::build(alpha, omega);
  const auto r = check_translating(surf, rho, theta, grid({0.05, 2.95}, {0.05, 2.95}));
  CHECK(r.curvature_residual < 1e-8);
  CHECK(r.surface_residual < 1e-8);

  const auto cyl = check_translating(cylinder_surface(1.0), 1.0, 0.0, kCylGrid);
  CHECK(cyl.combined() >= 1.0);

  // rho = 0 degenerates to the minimality probe
  const auto flat = check_translating(plane_surface(), 0.0, 0.0, kPlaneGrid);
  CHECK(flat.combined() < 1e-12);
}

TEST_CASE("willmore energy") {
  const auto round = StarSurface::build(make_circle({0, 0}, 1.0), make_circle({0, 0}, 1.0));
  const auto w1 = willmore_energy(round);
  CHECK(w1.factored == Catch::Approx(8 * pi * pi).margin(1e-9));
  CHECK(w1.identity_defect() < 1e-8);

  const auto mixed = StarSurface::build(make_circle({0, 0}, 1.0), make_circle({0, 0}, 2.0));
  const auto w2 = willmore_energy(mixed);
  CHECK(w2.factored == Catch::Approx(10 * pi * pi).margin(1e-9));
  CHECK(w2.identity_defect() < 1e-8);

  const auto patch = StarSurface::build(make_line(0.0, {0.0, 1.0}), make_line(0.0, {0.0, 1.0}));
  const auto w3 = willmore_energy(patch);
  CHECK(std::abs(w3.factored) < 1e-12);
  CHECK(std::abs(w3.direct) < 1e-12);
}

TEST_CASE("torus check") {
  const auto tor = check_torus(torus_surface(), kTorusGrid);
  CHECK(std::abs(tor.closure_alpha) < 1e-10);
  CHECK(std::abs(tor.closure_omega) < 1e-10);
  CHECK(tor.gap < 1e-8);

  const auto cyl = check_torus(cylinder_surface(2.0), kCylGrid);
  CHECK(cyl.closure_alpha == Catch::Approx(2 * pi).margin(1e-9));
  CHECK(cyl.closure_omega == Catch::Approx(8 * pi).margin(1e-9));  // 2 pi R^2
  CHECK(cyl.gap > 1.0);

  const double T = lemniscate_period();
  const auto lem = check_torus(lemniscate_surface(), grid({0, T}, {0, T}));
  CHECK(lem.combined() < 1e-8);

  CHECK_THROWS_AS(check_torus(plane_surface(), kPlaneGrid), std::invalid_argument);
}

TEST_CASE("finite-difference oracles agree with the closed forms") {
  const auto cyl = cylinder_surface(1.3);
  for (double t : {0.4, 2.0})
    for (double s : {0.9, 3.1}) {
      const SurfaceJet j = cyl.jet(t, s);
      const auto c_fd = fd_oracle_C(cyl, t, s, 1e-4);
      const double scale = std::max(
          {1.0, std::abs(j.C_ttt), std::abs(j.C_tts), std::abs(j.C_tss), std::abs(j.C_sss)});
      CHECK(std::abs(c_fd[0] - j.C_ttt) < 1e-6 * scale);
      CHECK(std::abs(c_fd[1] - j.C_tts) < 1e-6 * scale);
      CHECK(std::abs(c_fd[2] - j.C_tss) < 1e-6 * scale);
      CHECK(std::abs(c_fd[3] - j.C_sss) < 1e-6 * scale);
      CHECK(norm(fd_oracle_H(cyl, t, s, 1e-4) - j.H) < 1e-6 * std::max(1.0, norm(j.H)));
      CHECK(norm(fd_oracle_H_from_beta(cyl, t, s, 1e-4) - j.H) <
            1e-6 * std::max(1.0, norm(j.H)));
    }

  // second-order convergence of the H oracle
  const SurfaceJet j = cyl.jet(1.1, 0.7);
  const double e_coarse = norm(fd_oracle_H(cyl, 1.1, 0.7, 2e-3) - j.H);
  const double e_fine = norm(fd_oracle_H(cyl, 1.1, 0.7, 1e-3) - j.H);
  CHECK(e_coarse / e_fine > 3.0);
  CHECK(e_coarse / e_fine < 5.0);

  // harmonic angle on the opposite-parameter spiral pair
  const auto spiral = cornu_surface(1.0);
  for (double t : {0.5, 1.5, 2.5})
    for (double s : {0.5, 1.5, 2.5})
      CHECK(std::abs(fd_oracle_laplace_beta(spiral, t, s, 1e-3)) < 1e-6);

  // flat chart: everything vanishes
  const auto flat = plane_surface();
  const auto c0 = fd_oracle_C(flat, 0.7, -0.4, 1e-2);
  for (double v : c0) CHECK(std::abs(v) < 1e-9);
  CHECK(norm(fd_oracle_H(flat, 0.7, -0.4, 1e-2)) < 1e-9);
  CHECK(std::abs(fd_oracle_laplace_beta(flat, 0.7, -0.4, 1e-2)) < 1e-9);
}

TEST_CASE("family implication chain over the catalog") {
  struct Entry {
    StarSurface surf;
    GridSpec g;
  };
  const Entry entries[] = {
      {plane_surface(), kPlaneGrid},
      {StarSurface::build(make_line(1.0), make_line(2.0)), kPlaneGrid},
      {cylinder_surface(1.0), kCylGrid},
      {cylinder_surface(2.0), kCylGrid},
      {StarSurface::build(make_circle({0, 0}, 1.0), make_line(0.0)),
       grid({0, 2 * pi}, {-2, 2})},
      {cornu_surface(1.0), kCornuGrid},
  };
  for (const auto& e : entries) {
    const bool special = run_check(e.surf, "special", e.g).pass;
    const bool pmc = run_check(e.surf, "pmc", e.g).pass;
    const bool hsl = run_check(e.surf, "hsl", e.g).pass;
    const bool cmc = run_check(e.surf, "cmc", e.g).pass;
    if (special) CHECK(pmc);
    if (pmc) CHECK(hsl);
    if (pmc) CHECK(cmc);
  }
}

TEST_CASE("report assembly and serialization") {
  const auto rep = run_checks(cylinder_surface(1.0), {"lagrangian", "pmc", "hsl", "cmc"},
                              kCylGrid);
  CHECK(rep.all_pass());
  const auto j = rep.to_json();
  CHECK(j["families"].size() == 4);
  CHECK(j["families"][1]["name"] == "pmc");
  CHECK(j["families"][1]["pass"].get<bool>());

  const auto bad = run_checks(cylinder_surface(1.0), {"special"}, kCylGrid);
  CHECK(!bad.all_pass());
  CHECK_THROWS_AS(run_check(cylinder_surface(1.0), "nonsense", kCylGrid),
                  std::invalid_argument);
}
