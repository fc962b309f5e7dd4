#pragma once

#include <array>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "starlag/star.hpp"

namespace starlag {

// Sampled rectangular grid of the surface in R^4 = (Re z1, Im z1, Re z2, Im z2).
struct MeshGrid {
  int nt = 0, ns = 0;
  Interval t_range{}, s_range{};
  bool wrap_t = false, wrap_s = false;
  std::vector<std::array<double, 4>> points;  // row-major in t
  std::vector<char> mask;                     // true = singular, skipped in faces

  const std::array<double, 4>& at(int i, int k) const { return points[i * ns + k]; }
  bool masked(int i, int k) const { return mask[i * ns + k] != 0; }

  double node_t(int i) const {
    return t_range.lo + t_range.length() * i / (wrap_t ? nt : nt - 1);
  }
  double node_s(int k) const {
    return s_range.lo + s_range.length() * k / (wrap_s ? ns : ns - 1);
  }
};

struct Mesh3 {
  int nt = 0, ns = 0;
  bool wrap_t = false, wrap_s = false;
  std::vector<std::array<double, 3>> points;
  std::vector<char> mask;
};

namespace detail {

inline std::array<double, 4> to_r4(const C2Vector& v) {
  return {v.z1.real(), v.z1.imag(), v.z2.real(), v.z2.imag()};
}

// quad faces (1-based indices) between adjacent unmasked grid nodes
template <class MeshT>
std::vector<std::array<int, 4>> mesh_faces(const MeshT& m) {
  std::vector<std::array<int, 4>> faces;
  auto idx = [&m](int i, int k) { return i * m.ns + k; };
  const int it_max = m.wrap_t ? m.nt : m.nt - 1;
  const int ks_max = m.wrap_s ? m.ns : m.ns - 1;
  for (int i = 0; i < it_max; ++i)
    for (int k = 0; k < ks_max; ++k) {
      const int i2 = (i + 1) % m.nt;
      const int k2 = (k + 1) % m.ns;
      if (m.mask[idx(i, k)] || m.mask[idx(i2, k)] || m.mask[idx(i2, k2)] ||
          m.mask[idx(i, k2)])
        continue;
      faces.push_back({idx(i, k) + 1, idx(i2, k) + 1, idx(i2, k2) + 1, idx(i, k2) + 1});
    }
  return faces;
}

inline std::string fmt17(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace detail

// Uniform sample of the surface. When wrapping is requested the duplicate
// closing row/column is dropped and the seam is stitched only if the
// position actually repeats to 1e-6.
inline MeshGrid sample(const StarSurface& surf, Interval t_range, Interval s_range,
                       int nt, int ns, bool wrap_t = false, bool wrap_s = false) {
  if (nt < 2 || ns < 2) throw std::invalid_argument("sample: need nt, ns >= 2");
  if (!(t_range.length() > 0) || !(s_range.length() > 0))
    throw std::invalid_argument("sample: empty parameter range");

  if (wrap_t) {
    double gap = 0.0;
    for (int k = 0; k <= 8; ++k) {
      const double s = s_range.lo + s_range.length() * k / 8.0;
      gap = std::max(gap, norm(surf.position(t_range.hi, s) - surf.position(t_range.lo, s)));
    }
    if (gap > 1e-6) wrap_t = false;
  }
  if (wrap_s) {
    double gap = 0.0;
    for (int i = 0; i <= 8; ++i) {
      const double t = t_range.lo + t_range.length() * i / 8.0;
      gap = std::max(gap, norm(surf.position(t, s_range.hi) - surf.position(t, s_range.lo)));
    }
    if (gap > 1e-6) wrap_s = false;
  }

  MeshGrid m;
  m.nt = nt;
  m.ns = ns;
  m.t_range = t_range;
  m.s_range = s_range;
  m.wrap_t = wrap_t;
  m.wrap_s = wrap_s;
  m.points.resize(nt * ns);
  m.mask.resize(nt * ns);
  for (int i = 0; i < nt; ++i) {
    const double t = m.node_t(i);
    for (int k = 0; k < ns; ++k) {
      const double s = m.node_s(k);
      m.points[i * ns + k] = detail::to_r4(surf.position(t, s));
      m.mask[i * ns + k] = surf.is_singular(t, s);
    }
  }
  return m;
}

// Drop one of the four real coordinates (0..3).
inline Mesh3 project(const MeshGrid& mesh, int drop_axis) {
  if (drop_axis < 0 || drop_axis > 3) throw std::invalid_argument("project: axis must be 0..3");
  Mesh3 out;
  out.nt = mesh.nt;
  out.ns = mesh.ns;
  out.wrap_t = mesh.wrap_t;
  out.wrap_s = mesh.wrap_s;
  out.mask = mesh.mask;
  out.points.reserve(mesh.points.size());
  for (const auto& p : mesh.points) {
    std::array<double, 3> q{};
    int w = 0;
    for (int a = 0; a < 4; ++a)
      if (a != drop_axis) q[w++] = p[a];
    out.points.push_back(q);
  }
  return out;
}

inline void write_obj(const Mesh3& mesh, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw NumericError("meshio", "cannot open for writing: " + path);
  for (const auto& p : mesh.points)
    out << "v " << detail::fmt17(p[0]) << ' ' << detail::fmt17(p[1]) << ' '
        << detail::fmt17(p[2]) << '\n';
  for (const auto& f : detail::mesh_faces(mesh))
    out << "f " << f[0] << ' ' << f[1] << ' ' << f[2] << ' ' << f[3] << '\n';
  if (!out) throw NumericError("meshio", "write failed: " + path);
}

inline void write_ply(const Mesh3& mesh, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw NumericError("meshio", "cannot open for writing: " + path);
  const auto faces = detail::mesh_faces(mesh);
  out << "ply\nformat ascii 1.0\n";
  out << "element vertex " << mesh.points.size() << '\n';
  out << "property double x\nproperty double y\nproperty double z\n";
  out << "element face " << faces.size() << '\n';
  out << "property list uchar int vertex_indices\nend_header\n";
  for (const auto& p : mesh.points)
    out << detail::fmt17(p[0]) << ' ' << detail::fmt17(p[1]) << ' ' << detail::fmt17(p[2])
        << '\n';
  for (const auto& f : faces)
    out << "4 " << f[0] - 1 << ' ' << f[1] - 1 << ' ' << f[2] - 1 << ' ' << f[3] - 1 << '\n';
  if (!out) throw NumericError("meshio", "write failed: " + path);
}

inline void write_csv(const MeshGrid& mesh, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw NumericError("meshio", "cannot open for writing: " + path);
  out << "t,s,x1,y1,x2,y2,mask\n";
  for (int i = 0; i < mesh.nt; ++i)
    for (int k = 0; k < mesh.ns; ++k) {
      const auto& p = mesh.at(i, k);
      out << detail::fmt17(mesh.node_t(i)) << ',' << detail::fmt17(mesh.node_s(k)) << ','
          << detail::fmt17(p[0]) << ',' << detail::fmt17(p[1]) << ',' << detail::fmt17(p[2])
          << ',' << detail::fmt17(p[3]) << ',' << (mesh.masked(i, k) ? 1 : 0) << '\n';
    }
  if (!out) throw NumericError("meshio", "write failed: " + path);
}

}  // namespace starlag
