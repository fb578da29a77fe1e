// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 sarforge contributors

#include "sarforge/geometry/mesh.hpp"

#include <algorithm>
#include <cstring>
#include <limits>
#include <map>
#include <tuple>

#include "sarforge/core/digest.hpp"
#include "sarforge/core/error.hpp"

namespace sarforge::geometry {

Facet make_facet(const Vector3& a, const Vector3& b, const Vector3& c) {
  Facet f;
  const Vector3 n = cross(b - a, c - a);
  const double twice_area = norm(n);
  f.area = 0.5 * twice_area;
  f.normal = twice_area > 0.0 ? n / twice_area : Vector3{};
  f.centroid = (a + b + c) / 3.0;
  return f;
}

namespace {

double longest_edge_sq(const Vector3& a, const Vector3& b, const Vector3& c) {
  return std::max({dot(b - a, b - a), dot(c - b, c - b), dot(a - c, a - c)});
}

}  // namespace

Mesh Mesh::from_triangles(std::string name, std::vector<Vector3> vertices, std::span<const Triangle> triangles,
                          std::vector<Part> parts) {
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (!is_finite(vertices[i])) throw InvalidSpecError("vertex " + std::to_string(i) + " is not finite");

  Mesh m;
  m.name_ = std::move(name);
  m.facets_.reserve(triangles.size());
  std::vector<std::size_t> degenerate;
  for (std::size_t t = 0; t < triangles.size(); ++t) {
    const Triangle& tri = triangles[t];
    for (auto idx : tri)
      if (idx >= vertices.size())
        throw InvalidSpecError("facet " + std::to_string(t) + " references missing vertex " + std::to_string(idx));
    const Vector3& a = vertices[tri[0]];
    const Vector3& b = vertices[tri[1]];
    const Vector3& c = vertices[tri[2]];
    Facet f = make_facet(a, b, c);
    f.vertex_indices = tri;
    // Relative test: a sliver whose area is negligible against its own longest edge.
    if (!(f.area > 1e-12 * std::max(longest_edge_sq(a, b, c), 1e-300))) degenerate.push_back(t);
    m.facets_.push_back(f);
  }
  if (!degenerate.empty()) throw DegenerateFacetError(std::move(degenerate));

  for (const Part& p : parts)
    if (p.first_facet + p.facet_count > m.facets_.size())
      throw InvalidSpecError("part '" + p.name + "' exceeds the facet range");
  m.vertices_ = std::move(vertices);
  m.parts_ = std::move(parts);
  return m;
}

std::array<Vector3, 3> Mesh::corners(std::size_t facet) const {
  const Triangle& t = facets_[facet].vertex_indices;
  return {vertices_[t[0]], vertices_[t[1]], vertices_[t[2]]};
}

const Part* Mesh::find_part(const std::string& name) const {
  for (const Part& p : parts_)
    if (p.name == name) return &p;
  return nullptr;
}

Bounds Mesh::bounds() const {
  Part all{"", 0, facets_.size()};
  return part_bounds(all);
}

Bounds Mesh::part_bounds(const Part& part) const {
  constexpr double inf = std::numeric_limits<double>::infinity();
  Bounds b{{inf, inf, inf}, {-inf, -inf, -inf}};
  for (std::size_t f = part.first_facet; f < part.first_facet + part.facet_count; ++f) {
    for (const Vector3& v : corners(f)) {
      b.min = {std::min(b.min.x, v.x), std::min(b.min.y, v.y), std::min(b.min.z, v.z)};
      b.max = {std::max(b.max.x, v.x), std::max(b.max.y, v.y), std::max(b.max.z, v.z)};
    }
  }
  return b;
}

double Mesh::total_area() const {
  double a = 0.0;
  for (const Facet& f : facets_) a += f.area;
  return a;
}

Mesh Mesh::renamed(std::string name) const {
  Mesh m = *this;
  m.name_ = std::move(name);
  return m;
}

Mesh transformed(const Mesh& mesh, const Transform& t) {
  std::vector<Vector3> vertices;
  vertices.reserve(mesh.vertices().size());
  for (const Vector3& v : mesh.vertices()) vertices.push_back(t.rotation * v + t.translation);
  std::vector<Triangle> tris;
  tris.reserve(mesh.facet_count());
  for (const Facet& f : mesh.facets()) tris.push_back(f.vertex_indices);
  return Mesh::from_triangles(mesh.name(), std::move(vertices), tris, mesh.parts());
}

Mesh merge(std::string name, std::span<const Mesh> meshes) {
  std::vector<Vector3> vertices;
  std::vector<Triangle> tris;
  std::vector<Part> parts;
  for (const Mesh& m : meshes) {
    const auto vbase = static_cast<std::uint32_t>(vertices.size());
    const std::size_t fbase = tris.size();
    vertices.insert(vertices.end(), m.vertices().begin(), m.vertices().end());
    for (const Facet& f : m.facets())
      tris.push_back({f.vertex_indices[0] + vbase, f.vertex_indices[1] + vbase, f.vertex_indices[2] + vbase});
    if (m.parts().empty()) {
      parts.push_back({m.name(), fbase, m.facet_count()});
    } else {
      for (Part p : m.parts()) {
        p.first_facet += fbase;
        parts.push_back(std::move(p));
      }
    }
  }
  return Mesh::from_triangles(std::move(name), std::move(vertices), tris, std::move(parts));
}

Vector3 closure_residual(const Mesh& mesh) {
  Vector3 sum;
  for (const Facet& f : mesh.facets()) sum += f.normal * f.area;
  return sum;
}

std::string mesh_hash(const Mesh& mesh) {
  std::string buf;
  auto put = [&buf](const void* p, std::size_t n) { buf.append(static_cast<const char*>(p), n); };
  const std::uint64_t nv = mesh.vertices().size();
  const std::uint64_t nf = mesh.facet_count();
  put(&nv, sizeof nv);
  for (const Vector3& v : mesh.vertices()) {
    put(&v.x, 8);
    put(&v.y, 8);
    put(&v.z, 8);
  }
  put(&nf, sizeof nf);
  for (const Facet& f : mesh.facets()) put(f.vertex_indices.data(), sizeof(Triangle));
  for (const Part& p : mesh.parts()) {
    buf += p.name;
    buf.push_back('\0');
    const std::uint64_t first = p.first_facet, count = p.facet_count;
    put(&first, 8);
    put(&count, 8);
  }
  return sha256_hex(std::string_view(buf));
}

void MeshBuilder::begin_part(std::string name) {
  close_part();
  parts_.push_back({std::move(name), triangles_.size(), 0});
  part_lookup_.clear();
  part_open_ = true;
}

void MeshBuilder::close_part() {
  if (part_open_) parts_.back().facet_count = triangles_.size() - parts_.back().first_facet;
  part_open_ = false;
}

std::uint32_t MeshBuilder::vertex(const Vector3& v) {
  const auto [it, inserted] =
      part_lookup_.try_emplace({v.x, v.y, v.z}, static_cast<std::uint32_t>(vertices_.size()));
  if (inserted) vertices_.push_back(v);
  return it->second;
}

void MeshBuilder::triangle(std::uint32_t a, std::uint32_t b, std::uint32_t c) { triangles_.push_back({a, b, c}); }

void MeshBuilder::quad(std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d) {
  triangle(a, b, c);
  triangle(a, c, d);
}

void MeshBuilder::append(const Mesh& mesh) {
  close_part();
  const auto vbase = static_cast<std::uint32_t>(vertices_.size());
  const std::size_t fbase = triangles_.size();
  vertices_.insert(vertices_.end(), mesh.vertices().begin(), mesh.vertices().end());
  if (mesh.parts().empty()) {
    parts_.push_back({mesh.name(), fbase, mesh.facet_count()});
  } else {
    for (const Part& p : mesh.parts()) parts_.push_back({p.name, fbase + p.first_facet, p.facet_count});
  }
  for (const Facet& f : mesh.facets())
    triangles_.push_back({f.vertex_indices[0] + vbase, f.vertex_indices[1] + vbase, f.vertex_indices[2] + vbase});
  part_lookup_.clear();
}

Mesh MeshBuilder::build(std::string name) const {
  std::vector<Part> parts = parts_;
  if (part_open_) parts.back().facet_count = triangles_.size() - parts.back().first_facet;

  // Canonical order: vertices numbered by first appearance in the facet list.
  constexpr auto unset = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> remap(vertices_.size(), unset);
  std::vector<Vector3> ordered;
  ordered.reserve(vertices_.size());
  std::vector<Triangle> tris;
  tris.reserve(triangles_.size());
  for (const Triangle& t : triangles_) {
    Triangle out{};
    for (int k = 0; k < 3; ++k) {
      if (remap[t[k]] == unset) {
        remap[t[k]] = static_cast<std::uint32_t>(ordered.size());
        ordered.push_back(vertices_[t[k]]);
      }
      out[k] = remap[t[k]];
    }
    tris.push_back(out);
  }
  return Mesh::from_triangles(std::move(name), std::move(ordered), tris, std::move(parts));
}

}  // namespace sarforge::geometry
