#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <vector>

#include "starlag/star.hpp"
#include "support/oracles.hpp"
#include "support/references.hpp"

using namespace starlag;
using std::numbers::pi;

namespace {

StarSurface plane_surface() { return StarSurface::build(make_line(0.0), make_line(0.0)); }

StarSurface special_surface(double a, double b) {
  return StarSurface::build(make_line(a), make_line(b));
}

StarSurface cylinder_surface(double R) {
  return StarSurface::build(make_circle({0, 0}, 1.0), make_circle_angle({0, 0}, R));
}

StarSurface torus_surface() { return StarSurface::build(make_gerono(), make_lissajous()); }

StarSurface lemniscate_surface() {
  return StarSurface::build(make_lemniscate(), make_lemniscate());
}

// independent projection onto span{J phi_t, J phi_s} via Gram-Schmidt
C2Vector gram_schmidt_normal_projection(const SurfaceJet& j, const C2Vector& v) {
  const C2Vector n1 = jrot2(j.phi_t);
  C2Vector n2 = jrot2(j.phi_s);
  n2 -= (euclid(n2, n1) / norm_sq(n1)) * n1;
  return (euclid(v, n1) / norm_sq(n1)) * n1 + (euclid(v, n2) / norm_sq(n2)) * n2;
}

}  // namespace

TEST_CASE("plane position matches the totally geodesic chart exactly") {
  const auto surf = plane_surface();
  const C2Vector p = surf.position(1.0, 2.0);
  CHECK(std::abs(p.z1 - Complex(1.5, 0.0)) < 1e-14);
  CHECK(std::abs(p.z2 - Complex(2.0, 0.0)) < 1e-14);

  double worst = 0.0;
  for (int i = 0; i <= 20; ++i)
    for (int k = 0; k <= 20; ++k) {
      const double t = -1.5 + 3.0 * i / 20.0;
      const double s = -1.5 + 3.0 * k / 20.0;
      worst = std::max(worst, norm(surf.position(t, s) - reference::plane(t, s)));
    }
  CHECK(worst < 1e-12);
}

TEST_CASE("line pair surface matches its closed form after one translation") {
  const double a = 1.0, b = 2.0;
  const auto surf = special_surface(a, b);
  std::vector<C2Vector> built, ref;
  for (int i = 0; i <= 15; ++i)
    for (int k = 0; k <= 15; ++k) {
      const double t = -1.5 + 3.0 * i / 15.0;
      const double s = -1.5 + 3.0 * k / 15.0;
      built.push_back(surf.position(t, s));
      ref.push_back(reference::special_lines(a, b, t, s));
    }
  CHECK(reference::residual_after_translation(built, ref) < 1e-10);
}

TEST_CASE("cylinder matches its closed form after one translation") {
  for (double R : {0.5, 1.0, 2.0}) {
    const auto surf = cylinder_surface(R);
    std::vector<C2Vector> built, ref;
    for (int i = 0; i <= 15; ++i)
      for (int k = 0; k <= 15; ++k) {
        const double t = 2 * pi * i / 15.0;
        const double s = 2 * pi * k / 15.0;
        built.push_back(surf.position(t, s));
        ref.push_back(reference::cylinder(R, t, s));
      }
    CHECK(reference::residual_after_translation(built, ref) < 1e-10);
  }
}

TEST_CASE("Gerono x Lissajous torus matches its trigonometric expansion") {
  const auto surf = torus_surface();
  std::vector<C2Vector> built, ref;
  auto g = oracle::rng(31);
  for (int k = 0; k < 40; ++k) {
    const double t = oracle::uniform(g, 0.0, 2 * pi);
    const double s = oracle::uniform(g, 0.0, 2 * pi);
    built.push_back(surf.position(t, s));
    ref.push_back(reference::gerono_lissajous(t, s));
  }
  CHECK(reference::residual_after_translation(built, ref) < 1e-8);
}

TEST_CASE("lemniscate torus matches the elliptic-function expansion") {
  const auto surf = lemniscate_surface();
  const double T = lemniscate_period();
  std::vector<C2Vector> built, ref;
  auto g = oracle::rng(32);
  int kept = 0;
  while (kept < 20) {
    const double t = oracle::uniform(g, 0.0, T);
    const double s = oracle::uniform(g, 0.0, T);
    const auto away = [T](double x) {
      return std::min({std::abs(x), std::abs(x - 0.5 * T), std::abs(x - T)}) > 0.1;
    };
    if (!away(t) || !away(s)) continue;
    built.push_back(surf.position(t, s));
    ref.push_back(reference::lemniscate_torus(t, s));
    ++kept;
  }
  CHECK(reference::residual_after_translation(built, ref) < 1e-8);
}

TEST_CASE("plane jet: flat, minimal, constant angle") {
  const auto surf = plane_surface();
  const SurfaceJet j = surf.jet(0.7, -0.4);
  CHECK(std::abs(j.C_ttt) < 1e-14);
  CHECK(std::abs(j.C_tts) < 1e-14);
  CHECK(std::abs(j.C_tss) < 1e-14);
  CHECK(std::abs(j.C_sss) < 1e-14);
  CHECK(norm(j.H) < 1e-14);
  CHECK(std::abs(std::remainder(j.beta - pi, 2 * pi)) < 1e-14);
}

TEST_CASE("cylinder jet: angle t+s and |H| = 1/R") {
  for (double R : {0.5, 1.0, 2.0}) {
    const auto surf = cylinder_surface(R);
    for (double t : {0.2, 2.0}) {
      for (double s : {0.5, 4.0}) {
        const SurfaceJet j = surf.jet(t, s);
        const double want = std::remainder(t + s - j.beta, 2 * pi);
        CHECK(std::abs(want) < 1e-12);
        CHECK(norm(j.H) == Catch::Approx(1.0 / R).margin(1e-9));
      }
    }
  }
}

TEST_CASE("lemniscate surface has |H|^2 = 9") {
  const auto surf = lemniscate_surface();
  const double T = lemniscate_period();
  double worst = 0.0;
  for (int i = 1; i < 40; ++i)
    for (int k = 1; k < 40; ++k) {
      const double t = T * i / 40.0;
      const double s = T * k / 40.0;
      if (surf.is_singular(t, s)) continue;
      worst = std::max(worst, std::abs(norm_sq(surf.jet(t, s).H) - 9.0));
    }
  CHECK(worst < 1e-6);
}

TEST_CASE("Lagrangian property and metric identities across the catalog") {
  const StarSurface surfaces[] = {plane_surface(), special_surface(1, 2),
                                  cylinder_surface(2.0), torus_surface(),
                                  lemniscate_surface()};
  auto g = oracle::rng(33);
  for (const auto& surf : surfaces) {
    for (int k = 0; k < 60; ++k) {
      const double t = oracle::uniform(g, 0.05, 1.2);
      const double s = oracle::uniform(g, 0.05, 1.2);
      if (surf.is_singular(t, s)) continue;
      const SurfaceJet j = surf.jet(t, s);
      const double scale = norm(j.phi_t) * norm(j.phi_s);
      CHECK(std::abs(herm(j.phi_t, j.phi_s)) < 1e-12 * scale);
      CHECK(std::abs(norm_sq(j.phi_t) - j.E) < 1e-11 * j.E);
      CHECK(std::abs(norm_sq(j.phi_s) - j.G) < 1e-11 * j.G);
      CHECK(j.F == 0.0);
      CHECK(std::abs(j.conf - (std::norm(surf.alpha().eval(t).pos) +
                               std::norm(surf.omega().eval(s).pos))) < 1e-13);
    }
  }
}

TEST_CASE("cubic tensor definition and symmetry") {
  const StarSurface surfaces[] = {cylinder_surface(1.5), torus_surface(),
                                  special_surface(1, 2)};
  auto g = oracle::rng(34);
  for (const auto& surf : surfaces) {
    for (int k = 0; k < 25; ++k) {
      const double t = oracle::uniform(g, 0.1, 2.0);
      const double s = oracle::uniform(g, 0.1, 2.0);
      const SurfaceJet j = surf.jet(t, s);
      const auto d2 = surf.second_derivatives(t, s);
      const double scale = 1.0 + std::abs(j.C_ttt) + std::abs(j.C_sss);
      CHECK(std::abs(herm(d2.phi_tt, j.phi_t).imag() - j.C_ttt) < 1e-11 * scale);
      CHECK(std::abs(herm(d2.phi_tt, j.phi_s).imag() - j.C_tts) < 1e-11 * scale);
      CHECK(std::abs(herm(d2.phi_ss, j.phi_t).imag() - j.C_tss) < 1e-11 * scale);
      CHECK(std::abs(herm(d2.phi_ss, j.phi_s).imag() - j.C_sss) < 1e-11 * scale);
      // full symmetry: mixed second derivative gives the same middle entries
      CHECK(std::abs(herm(d2.phi_ts, j.phi_t).imag() - j.C_tts) < 1e-11 * scale);
      CHECK(std::abs(herm(d2.phi_ts, j.phi_s).imag() - j.C_tss) < 1e-11 * scale);
    }
  }
}

TEST_CASE("tangents match finite differences of the position") {
  const auto surf = torus_surface();
  for (double t : {0.3, 2.2})
    for (double s : {0.7, 3.9}) {
      const SurfaceJet j = surf.jet(t, s);
      C2Vector fd_t{oracle::diff1([&](double x) { return surf.position(x, s).z1; }, t, 1e-5),
                    oracle::diff1([&](double x) { return surf.position(x, s).z2; }, t, 1e-5)};
      C2Vector fd_s{oracle::diff1([&](double x) { return surf.position(t, x).z1; }, s, 1e-5),
                    oracle::diff1([&](double x) { return surf.position(t, x).z2; }, s, 1e-5)};
      CHECK(norm(fd_t - j.phi_t) < 1e-6 * (1.0 + norm(j.phi_t)));
      CHECK(norm(fd_s - j.phi_s) < 1e-6 * (1.0 + norm(j.phi_s)));
    }
}

TEST_CASE("determinant identity for the Lagrangian angle") {
  const StarSurface surfaces[] = {cylinder_surface(0.8), torus_surface()};
  auto g = oracle::rng(35);
  for (const auto& surf : surfaces) {
    for (int k = 0; k < 25; ++k) {
      const double t = oracle::uniform(g, 0.0, 2 * pi);
      const double s = oracle::uniform(g, 0.0, 2 * pi);
      const SurfaceJet j = surf.jet(t, s);
      const CurveJet a = surf.alpha().eval(t);
      const CurveJet w = surf.omega().eval(s);
      const Complex rhs = -a.d1 * w.d1 / (a.speed * w.speed);
      CHECK(std::abs(std::polar(1.0, j.beta) - rhs) < 1e-11);
      // det_C of the normalized tangents gives the same unit complex number
      const C2Vector u = (1.0 / norm(j.phi_t)) * j.phi_t;
      const C2Vector v = (1.0 / norm(j.phi_s)) * j.phi_s;
      const Complex det = u.z1 * v.z2 - u.z2 * v.z1;
      CHECK(std::abs(det - rhs) < 1e-11);
    }
  }
}

TEST_CASE("mean curvature equals J grad beta") {
  const StarSurface surfaces[] = {cylinder_surface(1.3), torus_surface()};
  for (const auto& surf : surfaces) {
    for (double t : {0.4, 2.6})
      for (double s : {1.1, 5.0}) {
        const SurfaceJet j = surf.jet(t, s);
        const double h = 1e-4;
        const double bt =
            std::remainder(surf.jet(t + h, s).beta - surf.jet(t - h, s).beta, 2 * pi) /
            (2 * h);
        const double bs =
            std::remainder(surf.jet(t, s + h).beta - surf.jet(t, s - h).beta, 2 * pi) /
            (2 * h);
        const C2Vector grad = (bt / j.E) * j.phi_t + (bs / j.G) * j.phi_s;
        CHECK(norm(jrot2(grad) - j.H) < 1e-6 * std::max(1.0, norm(j.H)));
      }
  }
}

TEST_CASE("base point change is a constant translation") {
  const auto s1 = StarSurface::build(make_gerono(), make_lissajous(), 0.0, 0.0);
  const auto s2 = StarSurface::build(make_gerono(), make_lissajous(), 1.1, 2.3);
  const C2Vector delta = s2.position(0.5, 0.5) - s1.position(0.5, 0.5);
  double worst = 0.0;
  for (int i = 0; i <= 12; ++i)
    for (int k = 0; k <= 12; ++k) {
      const double t = 2 * pi * i / 12.0;
      const double s = 2 * pi * k / 12.0;
      worst = std::max(worst, norm(s2.position(t, s) - s1.position(t, s) - delta));
    }
  CHECK(worst < 1e-11);
}

TEST_CASE("homothety covariance: (2a) * (2w) = 4 (a * w)") {
  const auto base = StarSurface::build(make_gerono(), make_lissajous());
  const auto scaled = StarSurface::build(scale_curve(make_gerono(), 2.0),
                                         scale_curve(make_lissajous(), 2.0));
  double worst = 0.0;
  for (int i = 0; i <= 12; ++i)
    for (int k = 0; k <= 12; ++k) {
      const double t = 2 * pi * i / 12.0;
      const double s = 2 * pi * k / 12.0;
      worst = std::max(
          worst, norm(scaled.position(t, s) - 4.0 * base.position(t, s)));
    }
  CHECK(worst < 1e-10);
}

TEST_CASE("normal projection of the position vector") {
  // unit-cylinder: H + phi^perp = 0
  const auto cyl = cylinder_surface(1.0);
  auto g = oracle::rng(36);
  for (int k = 0; k < 20; ++k) {
    const double t = oracle::uniform(g, 0.0, 2 * pi);
    const double s = oracle::uniform(g, 0.0, 2 * pi);
    CHECK(norm(cyl.jet(t, s).H + cyl.normal_project_position(t, s)) < 1e-10);
  }

  // plane: the position is tangent, so the normal part vanishes
  const auto flat = plane_surface();
  for (double t : {0.5, 1.2})
    for (double s : {-0.8, 0.9}) {
      CHECK(norm(flat.normal_project_position(t, s)) < 1e-11);
      const SurfaceJet j = flat.jet(t, s);
      const C2Vector tangential = j.phi - flat.normal_project_position(t, s);
      CHECK(std::abs(herm(tangential, j.phi_t).imag()) < 1e-11);
      CHECK(std::abs(herm(tangential, j.phi_s).imag()) < 1e-11);
    }

  // generic surface: agree with an independent Gram-Schmidt projection
  const auto tor = torus_surface();
  for (int k = 0; k < 20; ++k) {
    const double t = oracle::uniform(g, 0.0, 2 * pi);
    const double s = oracle::uniform(g, 0.0, 2 * pi);
    const SurfaceJet j = tor.jet(t, s);
    const C2Vector mine = tor.normal_project_position(t, s);
    const C2Vector ref = gram_schmidt_normal_projection(j, j.phi);
    CHECK(norm(mine - ref) < 1e-10 * std::max(1.0, norm(ref)));
  }
}

TEST_CASE("normal projection of a constant vector") {
  const auto flat = plane_surface();
  CHECK(norm(flat.normal_project_constant(0.4, 0.9, C2Vector{})) == 0.0);

  auto g = oracle::rng(37);
  const C2Vector e{std::polar(1.7, 0.4), 0.0};
  for (int k = 0; k < 20; ++k) {
    const double t = oracle::uniform(g, 0.3, 1.4);
    const double s = oracle::uniform(g, 0.3, 1.4);
    const SurfaceJet j = flat.jet(t, s);
    CHECK(norm(flat.normal_project_constant(t, s, e) -
               gram_schmidt_normal_projection(j, e)) < 1e-11);
  }
}

TEST_CASE("singular points are reported") {
  const auto flat = plane_surface();
  CHECK(flat.is_singular(0.0, 0.0));
  CHECK_THROWS_AS(flat.jet(0.0, 0.0), NumericError);
  CHECK(norm(flat.position(0.0, 0.0)) < 1e-15);  // position itself is fine

  const auto lem = lemniscate_surface();
  CHECK(lem.is_singular(0.0, 0.5 * lemniscate_period()));
  CHECK(!lem.is_singular(0.3, 0.5 * lemniscate_period()));
}

TEST_CASE("prefix tables differentiate back to the bracket") {
  const auto surf = torus_surface();
  for (double t : {0.5, 2.5, 5.5}) {
    const double fd = oracle::diff1_5pt([&](double x) { return surf.prefix_alpha(x); },
                                        t, 1e-3);
    const CurveJet a = surf.alpha().eval(t);
    CHECK(std::abs(fd - bracket_j(a.d1, a.pos)) < 1e-9);
  }
}
