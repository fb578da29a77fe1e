// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 sarforge contributors

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "sarforge/geometry/mesh.hpp"

namespace sarforge::geometry {

/// Ground-vehicle classes: armoured personnel carrier, main battle tank,
/// stinger launcher and land missile launcher.
enum class TargetKind { APC, MBT, STR, MSL };

/// coarse: 16-sided round parts, flat faces split to <= 0.5 m; fine: 32 sides, <= 0.25 m.
enum class DetailLevel { Coarse, Fine };

std::string to_string(TargetKind kind);
std::string to_string(DetailLevel detail);
std::optional<TargetKind> parse_target_kind(std::string_view text);
std::optional<DetailLevel> parse_detail_level(std::string_view text);

/// Component list of a target class in scene-object JSON (dimensions in meters). Every
/// classifiable feature is a named component, e.g. "missile", "canon", "antenna".
nlohmann::json target_recipe(TargetKind kind);

/// Composite faceted PEC solid built from target_recipe(kind). Vehicle centered in x-y,
/// wheels on z = 0, nose toward +x.
Mesh build_target(TargetKind kind, DetailLevel detail);

}  // namespace sarforge::geometry
