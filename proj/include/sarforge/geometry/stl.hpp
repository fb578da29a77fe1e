// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 sarforge contributors

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "sarforge/geometry/mesh.hpp"

namespace sarforge::geometry {

struct StlLoadReport {
  std::size_t solids = 0;
  /// Facets whose stored normal disagreed with the winding by more than 1e-6 (stored value ignored).
  std::size_t inconsistent_normals = 0;
};

/// Parses ASCII STL. Each "solid" block becomes a Part; vertices are merged exactly within a
/// solid. Normals, areas and centroids are recomputed from the vertices.
/// Throws ParseError (with line number) or DegenerateFacetError.
Mesh load_mesh(std::string_view text, std::string name = "stl", StlLoadReport* report = nullptr);
Mesh load_mesh_file(const std::filesystem::path& path, StlLoadReport* report = nullptr);

/// ASCII STL with one solid per part and round-trip exact (%.17g) coordinates.
std::string save_mesh(const Mesh& mesh);
void save_mesh_file(const Mesh& mesh, const std::filesystem::path& path);

}  // namespace sarforge::geometry
