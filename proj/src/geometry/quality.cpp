// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 sarforge contributors

#include "sarforge/geometry/quality.hpp"

#include <algorithm>

#include "sarforge/core/constants.hpp"
#include "sarforge/core/error.hpp"

namespace sarforge::geometry {

MeshQualityReport mesh_quality(const Mesh& mesh, double frequency_hz) {
  if (!(frequency_hz > 0.0)) throw InvalidSpecError("frequency must be positive");
  if (mesh.empty()) throw InvalidSpecError("mesh quality of an empty mesh");
  MeshQualityReport r;
  r.facet_count = mesh.facet_count();
  for (std::size_t f = 0; f < mesh.facet_count(); ++f) {
    const auto c = mesh.corners(f);
    r.max_edge_m = std::max({r.max_edge_m, norm(c[1] - c[0]), norm(c[2] - c[1]), norm(c[0] - c[2])});
  }
  r.max_edge_over_lambda = r.max_edge_m * frequency_hz / kSpeedOfLight;
  r.warning = r.max_edge_over_lambda > 1.0;
  return r;
}

}  // namespace sarforge::geometry
