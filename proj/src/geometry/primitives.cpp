// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 sarforge contributors

#include "sarforge/geometry/primitives.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>

#include "sarforge/core/constants.hpp"
#include "sarforge/core/error.hpp"

namespace sarforge::geometry {

namespace {

Vector3 place(const Frame& f, const Vector3& local) { return f.to_world.rotation * local + f.to_world.translation; }

int cells_for(double length, double max_edge) {
  if (max_edge <= 0.0) return 1;
  return std::max(1, static_cast<int>(std::ceil(length / max_edge - 1e-9)));
}

/// Lattice coordinates with exact end points.
std::vector<double> lattice(double lo, double hi, int n) {
  std::vector<double> v(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) v[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / n;
  v.front() = lo;
  v.back() = hi;
  return v;
}

/// Adds triangle a-b-c, reversing the winding if its normal opposes `outward` (world frame).
void oriented_triangle(MeshBuilder& b, std::uint32_t i0, std::uint32_t i1, std::uint32_t i2, const Vector3& p0,
                       const Vector3& p1, const Vector3& p2, const Vector3& outward) {
  if (dot(cross(p1 - p0, p2 - p0), outward) >= 0.0)
    b.triangle(i0, i1, i2);
  else
    b.triangle(i0, i2, i1);
}

/// Two perpendicular unit vectors completing `axis` to a right-handed basis (e1, e2, axis).
std::pair<Vector3, Vector3> perpendicular_basis(const Vector3& axis) {
  const Vector3 helper = std::abs(axis.z) < 0.9 ? Vector3{0, 0, 1} : Vector3{1, 0, 0};
  const Vector3 e1 = normalized(cross(helper, axis));
  const Vector3 e2 = cross(axis, e1);
  return {e1, e2};
}

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) throw InvalidSpecError(std::string(what) + " must be positive");
}

}  // namespace

void add_plate(MeshBuilder& b, double width, double length, double max_edge, const Frame& frame) {
  const int nx = cells_for(width, max_edge);
  const int ny = cells_for(length, max_edge);
  const auto xs = lattice(-width / 2, width / 2, nx);
  const auto ys = lattice(-length / 2, length / 2, ny);
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      const auto v = [&](int ii, int jj) { return b.vertex(place(frame, {xs[ii], ys[jj], 0.0})); };
      // counter-clockwise seen from +z
      b.quad(v(i, j), v(i + 1, j), v(i + 1, j + 1), v(i, j + 1));
    }
  }
}

void add_box(MeshBuilder& b, const Vector3& min, const Vector3& max, double max_edge, bool with_bottom,
             const Frame& frame) {
  const std::array<std::vector<double>, 3> axes = {
      lattice(min.x, max.x, cells_for(max.x - min.x, max_edge)),
      lattice(min.y, max.y, cells_for(max.y - min.y, max_edge)),
      lattice(min.z, max.z, cells_for(max.z - min.z, max_edge))};

  auto lattice_point = [&](std::array<int, 3> idx) {
    return place(frame, {axes[0][idx[0]], axes[1][idx[1]], axes[2][idx[2]]});
  };

  // Each face: fixed axis, fixed side (0 = min, 1 = max), two running axes.
  for (int fixed = 0; fixed < 3; ++fixed) {
    for (int side = 0; side < 2; ++side) {
      if (fixed == 2 && side == 0 && !with_bottom) continue;
      const int ua = (fixed + 1) % 3;
      const int va = (fixed + 2) % 3;
      const int fixed_index = side == 0 ? 0 : static_cast<int>(axes[fixed].size()) - 1;
      const int nu = static_cast<int>(axes[ua].size()) - 1;
      const int nv = static_cast<int>(axes[va].size()) - 1;
      for (int j = 0; j < nv; ++j) {
        for (int i = 0; i < nu; ++i) {
          std::array<Vector3, 4> p;
          std::array<std::uint32_t, 4> id;
          const int du[4] = {0, 1, 1, 0};
          const int dv[4] = {0, 0, 1, 1};
          for (int c = 0; c < 4; ++c) {
            std::array<int, 3> idx{};
            idx[fixed] = fixed_index;
            idx[ua] = i + du[c];
            idx[va] = j + dv[c];
            p[c] = lattice_point(idx);
            id[c] = b.vertex(p[c]);
          }
          Vector3 axis_dir;
          (fixed == 0 ? axis_dir.x : fixed == 1 ? axis_dir.y : axis_dir.z) = side == 0 ? -1.0 : 1.0;
          const Vector3 outward = frame.to_world.rotation * axis_dir;
          oriented_triangle(b, id[0], id[1], id[2], p[0], p[1], p[2], outward);
          oriented_triangle(b, id[0], id[2], id[3], p[0], p[2], p[3], outward);
        }
      }
    }
  }
}

void add_cylinder(MeshBuilder& b, const Vector3& base, const Vector3& axis_in, double radius, double length, int sides,
                  double max_edge, bool base_cap, bool top_cap, const Frame& frame) {
  const Vector3 axis = normalized(axis_in);
  const auto [e1, e2] = perpendicular_basis(axis);
  const int nlen = cells_for(length, max_edge);
  const auto zs = lattice(0.0, length, nlen);

  auto ring = [&](int k, int i) {
    const double th = kTwoPi * (i % sides) / sides;
    return place(frame, base + axis * zs[k] + (e1 * std::cos(th) + e2 * std::sin(th)) * radius);
  };
  const Vector3 world_axis = frame.to_world.rotation * axis;

  for (int k = 0; k < nlen; ++k) {
    for (int i = 0; i < sides; ++i) {
      const Vector3 p0 = ring(k, i), p1 = ring(k, i + 1), p2 = ring(k + 1, i + 1), p3 = ring(k + 1, i);
      const auto i0 = b.vertex(p0), i1 = b.vertex(p1), i2 = b.vertex(p2), i3 = b.vertex(p3);
      const double thm = kTwoPi * (i + 0.5) / sides;
      const Vector3 outward = frame.to_world.rotation * (e1 * std::cos(thm) + e2 * std::sin(thm));
      oriented_triangle(b, i0, i1, i2, p0, p1, p2, outward);
      oriented_triangle(b, i0, i2, i3, p0, p2, p3, outward);
    }
  }
  auto cap = [&](int k, const Vector3& outward) {
    const Vector3 c = place(frame, base + axis * zs[k]);
    const auto ic = b.vertex(c);
    for (int i = 0; i < sides; ++i) {
      const Vector3 p0 = ring(k, i), p1 = ring(k, i + 1);
      oriented_triangle(b, ic, b.vertex(p0), b.vertex(p1), c, p0, p1, outward);
    }
  };
  if (base_cap) cap(0, -world_axis);
  if (top_cap) cap(nlen, world_axis);
}

void add_cone(MeshBuilder& b, const Vector3& base, const Vector3& axis_in, double radius, double height, int sides,
              bool base_cap, const Frame& frame) {
  const Vector3 axis = normalized(axis_in);
  const auto [e1, e2] = perpendicular_basis(axis);
  auto ring = [&](int i) {
    const double th = kTwoPi * (i % sides) / sides;
    return place(frame, base + (e1 * std::cos(th) + e2 * std::sin(th)) * radius);
  };
  const Vector3 apex = place(frame, base + axis * height);
  const Vector3 world_axis = frame.to_world.rotation * axis;
  const auto ia = b.vertex(apex);
  for (int i = 0; i < sides; ++i) {
    const Vector3 p0 = ring(i), p1 = ring(i + 1);
    const double thm = kTwoPi * (i + 0.5) / sides;
    const Vector3 radial = frame.to_world.rotation * (e1 * std::cos(thm) + e2 * std::sin(thm));
    const Vector3 outward = radial * height + world_axis * radius;
    oriented_triangle(b, b.vertex(p0), b.vertex(p1), ia, p0, p1, apex, outward);
  }
  if (base_cap) {
    const Vector3 c = place(frame, base);
    const auto ic = b.vertex(c);
    for (int i = 0; i < sides; ++i) {
      const Vector3 p0 = ring(i), p1 = ring(i + 1);
      oriented_triangle(b, ic, b.vertex(p0), b.vertex(p1), c, p0, p1, -world_axis);
    }
  }
}

void add_missile(MeshBuilder& b, const Vector3& base, const Vector3& axis_in, double radius, double body_length,
                 double nose_length, int sides, double max_edge, const Frame& frame) {
  const Vector3 axis = normalized(axis_in);
  add_cylinder(b, base, axis, radius, body_length, sides, max_edge, true, false, frame);
  // Same ring expression as the cylinder's top ring, so the seam vertices are shared.
  const auto [e1, e2] = perpendicular_basis(axis);
  const int nlen = cells_for(body_length, max_edge);
  const double z_top = lattice(0.0, body_length, nlen).back();
  auto ring = [&](int i) {
    const double th = kTwoPi * (i % sides) / sides;
    return place(frame, base + axis * z_top + (e1 * std::cos(th) + e2 * std::sin(th)) * radius);
  };
  const Vector3 apex = place(frame, base + axis * (body_length + nose_length));
  const Vector3 world_axis = frame.to_world.rotation * axis;
  const auto ia = b.vertex(apex);
  for (int i = 0; i < sides; ++i) {
    const Vector3 p0 = ring(i), p1 = ring(i + 1);
    const double thm = kTwoPi * (i + 0.5) / sides;
    const Vector3 radial = frame.to_world.rotation * (e1 * std::cos(thm) + e2 * std::sin(thm));
    oriented_triangle(b, b.vertex(p0), b.vertex(p1), ia, p0, p1, apex, radial * nose_length + world_axis * radius);
  }
}

void add_extrusion(MeshBuilder& b, std::span<const Point2> profile, const Vector3& origin, const Vector3& axis_a,
                   const Vector3& axis_b, double length, double max_edge, const Frame& frame) {
  const std::size_t n = profile.size();
  if (n < 3) throw InvalidSpecError("extrusion profile needs at least 3 points");
  const Vector3 ea = normalized(axis_a);
  const Vector3 eb = normalized(axis_b);
  const Vector3 ec = normalized(cross(ea, eb));
  const int nt = cells_for(length, max_edge);
  const auto ts = lattice(0.0, length, nt);

  Point2 centroid2;
  for (const Point2& p : profile) {
    centroid2.a += p.a / static_cast<double>(n);
    centroid2.b += p.b / static_cast<double>(n);
  }
  auto point = [&](const Point2& p, double t) { return place(frame, origin + ea * p.a + eb * p.b + ec * t); };
  const Matrix3& R = frame.to_world.rotation;

  for (std::size_t e = 0; e < n; ++e) {
    const Point2& p = profile[e];
    const Point2& q = profile[(e + 1) % n];
    const double edge_len = std::hypot(q.a - p.a, q.b - p.b);
    const int ns = cells_for(edge_len, max_edge);
    auto edge_point = [&](int s) {
      if (s == 0) return p;
      if (s == ns) return q;
      return Point2{p.a + (q.a - p.a) * s / ns, p.b + (q.b - p.b) * s / ns};
    };
    const Point2 mid{(p.a + q.a) / 2 - centroid2.a, (p.b + q.b) / 2 - centroid2.b};
    // In-plane normal of the edge, flipped to point away from the polygon centroid.
    Vector3 edge_normal = ea * (q.b - p.b) - eb * (q.a - p.a);
    if (dot(edge_normal, ea * mid.a + eb * mid.b) < 0.0) edge_normal = -edge_normal;
    const Vector3 outward = R * edge_normal;
    for (int s = 0; s < ns; ++s) {
      for (int k = 0; k < nt; ++k) {
        const Vector3 p0 = point(edge_point(s), ts[k]), p1 = point(edge_point(s + 1), ts[k]);
        const Vector3 p2 = point(edge_point(s + 1), ts[k + 1]), p3 = point(edge_point(s), ts[k + 1]);
        const auto i0 = b.vertex(p0), i1 = b.vertex(p1), i2 = b.vertex(p2), i3 = b.vertex(p3);
        oriented_triangle(b, i0, i1, i2, p0, p1, p2, outward);
        oriented_triangle(b, i0, i2, i3, p0, p2, p3, outward);
      }
    }
  }
  auto cap = [&](double t, const Vector3& outward) {
    const Vector3 c = point(centroid2, t);
    const auto ic = b.vertex(c);
    for (std::size_t e = 0; e < n; ++e) {
      const Vector3 p0 = point(profile[e], t), p1 = point(profile[(e + 1) % n], t);
      oriented_triangle(b, ic, b.vertex(p0), b.vertex(p1), c, p0, p1, outward);
    }
  };
  cap(ts.front(), R * -ec);
  cap(ts.back(), R * ec);
}

void add_sphere(MeshBuilder& b, const Vector3& center, double radius, int subdivisions, const Frame& frame) {
  const double t = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<Vector3> verts = {{-1, t, 0}, {1, t, 0}, {-1, -t, 0}, {1, -t, 0}, {0, -1, t}, {0, 1, t},
                                {0, -1, -t}, {0, 1, -t}, {t, 0, -1}, {t, 0, 1}, {-t, 0, -1}, {-t, 0, 1}};
  for (auto& v : verts) v = normalized(v);
  std::vector<Triangle> faces = {{0, 11, 5}, {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11}, {1, 5, 9}, {5, 11, 4},
                                 {11, 10, 2}, {10, 7, 6}, {7, 1, 8},   {3, 9, 4},  {3, 4, 2},   {3, 2, 6}, {3, 6, 8},
                                 {3, 8, 9},  {4, 9, 5},  {2, 4, 11},  {6, 2, 10}, {8, 6, 7},   {9, 8, 1}};
  for (int level = 0; level < subdivisions; ++level) {
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::uint32_t> midpoint;
    auto mid = [&](std::uint32_t i, std::uint32_t j) {
      const auto key = std::minmax(i, j);
      auto it = midpoint.find(key);
      if (it != midpoint.end()) return it->second;
      verts.push_back(normalized(verts[i] + verts[j]));
      const auto idx = static_cast<std::uint32_t>(verts.size() - 1);
      midpoint.emplace(key, idx);
      return idx;
    };
    std::vector<Triangle> next;
    next.reserve(faces.size() * 4);
    for (const Triangle& f : faces) {
      const auto a = mid(f[0], f[1]), bb = mid(f[1], f[2]), c = mid(f[2], f[0]);
      next.push_back({f[0], a, c});
      next.push_back({f[1], bb, a});
      next.push_back({f[2], c, bb});
      next.push_back({a, bb, c});
    }
    faces = std::move(next);
  }
  for (const Triangle& f : faces) {
    const Vector3 p0 = place(frame, center + verts[f[0]] * radius);
    const Vector3 p1 = place(frame, center + verts[f[1]] * radius);
    const Vector3 p2 = place(frame, center + verts[f[2]] * radius);
    const Vector3 outward = (p0 + p1 + p2) / 3.0 - place(frame, center);
    oriented_triangle(b, b.vertex(p0), b.vertex(p1), b.vertex(p2), p0, p1, p2, outward);
  }
}

Mesh build_primitive(const PrimitiveSpec& spec, std::string name) {
  MeshBuilder b;
  return std::visit(
      [&](const auto& s) -> Mesh {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, PlateSpec>) {
          require_positive(s.width, "plate width");
          require_positive(s.length, "plate length");
          b.begin_part("plate");
          add_plate(b, s.width, s.length, s.max_edge);
          return b.build(name.empty() ? "plate" : name);
        } else if constexpr (std::is_same_v<T, BoxSpec>) {
          require_positive(s.width, "box width");
          require_positive(s.length, "box length");
          require_positive(s.height, "box height");
          b.begin_part("box");
          add_box(b, {-s.width / 2, -s.length / 2, 0.0}, {s.width / 2, s.length / 2, s.height}, s.max_edge);
          return b.build(name.empty() ? "box" : name);
        } else if constexpr (std::is_same_v<T, WallOnGroundSpec>) {
          require_positive(s.wall_length, "wall length");
          require_positive(s.wall_thickness, "wall thickness");
          require_positive(s.wall_height, "wall height");
          require_positive(s.ground_width, "ground width");
          require_positive(s.ground_length, "ground length");
          b.begin_part("ground");
          add_plate(b, s.ground_width, s.ground_length, s.ground_edge);
          b.begin_part("wall");
          add_box(b, {-s.wall_thickness / 2, -s.wall_length / 2, 0.0},
                  {s.wall_thickness / 2, s.wall_length / 2, s.wall_height}, s.wall_edge, false);
          return b.build(name.empty() ? "wall_on_ground" : name);
        } else {
          require_positive(s.radius, "sphere radius");
          if (s.subdivisions < 0 || s.subdivisions > 6) throw InvalidSpecError("sphere subdivisions must be in [0, 6]");
          b.begin_part("sphere");
          add_sphere(b, {}, s.radius, s.subdivisions);
          return b.build(name.empty() ? "sphere" : name);
        }
      },
      spec);
}

}  // namespace sarforge::geometry
