// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 sarforge contributors

#pragma once

#include <cstddef>

#include "sarforge/geometry/mesh.hpp"

namespace sarforge::geometry {

struct MeshQualityReport {
  double max_edge_m = 0.0;
  double max_edge_over_lambda = 0.0;  // max_edge_m * f / c
  std::size_t facet_count = 0;
  /// Set when max_edge_over_lambda > 1. Flat facets are integrated exactly, so this only
  /// signals a coarse approximation of curved surfaces.
  bool warning = false;
};

MeshQualityReport mesh_quality(const Mesh& mesh, double frequency_hz);

}  // namespace sarforge::geometry
