// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 sarforge contributors

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "sarforge/geometry/vector3.hpp"

namespace sarforge::geometry {

using Triangle = std::array<std::uint32_t, 3>;

/// Flat triangular facet. normal/area/centroid are derived from the vertex triple
/// and the winding (right-hand rule); they are never set independently.
struct Facet {
  Triangle vertex_indices{};
  Vector3 normal;
  double area = 0.0;
  Vector3 centroid;
};

/// Named contiguous facet range (a sub-solid such as "missile" or "ground").
struct Part {
  std::string name;
  std::size_t first_facet = 0;
  std::size_t facet_count = 0;
};

struct Bounds {
  Vector3 min;
  Vector3 max;
  Vector3 extent() const { return max - min; }
};

/// Immutable triangular-facet PEC surface model.
class Mesh {
 public:
  Mesh() = default;

  /// Validates indices and finiteness, derives facet normals/areas/centroids and rejects
  /// degenerate facets with DegenerateFacetError. Facets not covered by `parts` are left unnamed.
  static Mesh from_triangles(std::string name, std::vector<Vector3> vertices, std::span<const Triangle> triangles,
                             std::vector<Part> parts = {});

  const std::string& name() const noexcept { return name_; }
  const std::vector<Vector3>& vertices() const noexcept { return vertices_; }
  const std::vector<Facet>& facets() const noexcept { return facets_; }
  const std::vector<Part>& parts() const noexcept { return parts_; }
  bool empty() const noexcept { return facets_.empty(); }
  std::size_t facet_count() const noexcept { return facets_.size(); }

  std::array<Vector3, 3> corners(std::size_t facet) const;
  const Part* find_part(const std::string& name) const;

  Bounds bounds() const;
  Bounds part_bounds(const Part& part) const;
  double total_area() const;

  Mesh renamed(std::string name) const;

 private:
  std::string name_;
  std::vector<Vector3> vertices_;
  std::vector<Facet> facets_;
  std::vector<Part> parts_;
};

/// Normal, area and centroid of the triangle (a, b, c); area 0 means degenerate.
Facet make_facet(const Vector3& a, const Vector3& b, const Vector3& c);

/// Rigid transform applied to every vertex: rotation first, then translation.
struct Transform {
  Matrix3 rotation;
  Vector3 translation;
};

Mesh transformed(const Mesh& mesh, const Transform& t);

/// Concatenates meshes; each input contributes its parts (or one part named after the mesh).
Mesh merge(std::string name, std::span<const Mesh> meshes);

/// Sum of normal * area over all facets; zero for a closed, consistently wound surface.
Vector3 closure_residual(const Mesh& mesh);

/// Canonical content digest (SHA-256 hex of vertices, triangles and part table).
std::string mesh_hash(const Mesh& mesh);

/// Incremental builder with exact per-part vertex de-duplication. build() renumbers vertices in
/// order of first use so that an STL save/load round trip reproduces the same vertex order.
class MeshBuilder {
 public:
  void begin_part(std::string name);
  std::uint32_t vertex(const Vector3& v);
  void triangle(std::uint32_t a, std::uint32_t b, std::uint32_t c);
  /// Two triangles (a, b, c), (a, c, d) for a planar quad wound a->b->c->d.
  void quad(std::uint32_t a, std::uint32_t b, std::uint32_t c, std::uint32_t d);
  void append(const Mesh& mesh);
  std::size_t triangle_count() const noexcept { return triangles_.size(); }

  Mesh build(std::string name) const;

 private:
  void close_part();

  std::vector<Vector3> vertices_;
  std::vector<Triangle> triangles_;
  std::vector<Part> parts_;
  std::map<std::tuple<double, double, double>, std::uint32_t> part_lookup_;
  bool part_open_ = false;
};

}  // namespace sarforge::geometry
