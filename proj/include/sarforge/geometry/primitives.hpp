// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 sarforge contributors

#pragma once

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "sarforge/geometry/mesh.hpp"

namespace sarforge::geometry {

/// Single-sided rectangle in the z = 0 plane, centered on the origin, normal +z.
/// max_edge > 0 subdivides into cells no longer than max_edge on a side.
struct PlateSpec {
  double width = 1.0;   // along x
  double length = 1.0;  // along y
  double max_edge = 0.0;
};

/// Closed box, centered in x-y, base on z = 0. "prism" in the forward-scatter experiment.
struct BoxSpec {
  double width = 1.0;   // x
  double length = 1.0;  // y
  double height = 1.0;  // z
  double max_edge = 0.0;
};

/// Wall of length along y and thickness along x standing on a square-celled ground patch.
/// Parts are named "ground" and "wall"; the wall has no bottom face.
struct WallOnGroundSpec {
  double wall_length = 4.0;
  double wall_thickness = 0.2;
  double wall_height = 2.0;
  double ground_width = 10.0;
  double ground_length = 10.0;
  double ground_edge = 0.25;
  double wall_edge = 0.0;
};

/// Icosphere centered on the origin.
struct SphereSpec {
  double radius = 1.0;
  int subdivisions = 2;
};

using PrimitiveSpec = std::variant<PlateSpec, BoxSpec, WallOnGroundSpec, SphereSpec>;

/// Throws InvalidSpecError for non-positive dimensions.
Mesh build_primitive(const PrimitiveSpec& spec, std::string name = {});

// Lower-level solid writers used by the target builders. Every solid is closed and wound
// outward unless stated otherwise; vertices are placed through `frame`.

struct Frame {
  Transform to_world;  // identity by default
};

void add_plate(MeshBuilder& b, double width, double length, double max_edge, const Frame& frame = {});

/// Axis-aligned box [min, max] in the local frame.
void add_box(MeshBuilder& b, const Vector3& min, const Vector3& max, double max_edge, bool with_bottom = true,
             const Frame& frame = {});

/// Faceted circular cylinder: base disk centered at `base`, extruded along unit `axis`.
void add_cylinder(MeshBuilder& b, const Vector3& base, const Vector3& axis, double radius, double length, int sides,
                  double max_edge, bool base_cap = true, bool top_cap = true, const Frame& frame = {});

/// Faceted cone with base disk at `base` and apex at base + height * axis.
void add_cone(MeshBuilder& b, const Vector3& base, const Vector3& axis, double radius, double height, int sides,
              bool base_cap = true, const Frame& frame = {});

/// Cylinder body with a conical nose along `axis`; total length body_length + nose_length.
void add_missile(MeshBuilder& b, const Vector3& base, const Vector3& axis, double radius, double body_length,
                 double nose_length, int sides, double max_edge, const Frame& frame = {});

struct Point2 {
  double a = 0.0;
  double b = 0.0;
};

/// Convex polygon profile in the plane spanned by (axis_a, axis_b) through `origin`, extruded
/// along axis_a x axis_b by `length`.
void add_extrusion(MeshBuilder& b, std::span<const Point2> profile, const Vector3& origin, const Vector3& axis_a,
                   const Vector3& axis_b, double length, double max_edge, const Frame& frame = {});

void add_sphere(MeshBuilder& b, const Vector3& center, double radius, int subdivisions, const Frame& frame = {});

}  // namespace sarforge::geometry
