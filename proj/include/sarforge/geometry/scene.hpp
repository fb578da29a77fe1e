// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 sarforge contributors

#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"
#include "sarforge/geometry/mesh.hpp"
#include "sarforge/geometry/targets.hpp"

namespace sarforge::geometry {

/// Scene description:
///   { "name": "...", "objects": [ { "type": ..., "name": ..., "position": [x,y,z],
///                                   "rotation_deg": [rx,ry,rz], ...type fields } ] }
/// Types: plate, box/prism, wall_on_ground, ground, sphere, cylinder, cone, missile,
/// extrusion, target, stl. Dimensions are meters. Relative STL paths resolve against base_dir.
/// Errors are ConfigError carrying the JSON path of the offending field (rooted at `path`).
struct SceneContext {
  std::filesystem::path base_dir = ".";
  std::string path = "$";
  DetailLevel detail = DetailLevel::Coarse;
};

Mesh build_scene(const nlohmann::json& scene, const SceneContext& ctx = {});

}  // namespace sarforge::geometry
