// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 sarforge contributors

#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "sarforge/geometry/mesh.hpp"
#include "sarforge/geometry/targets.hpp"
#include "sarforge/imaging/image.hpp"
#include "sarforge/po/excitation.hpp"
#include "sarforge/sweep/config.hpp"
#include "sarforge/sweep/run.hpp"

namespace sarforge::cli {

/// Receive channel used for imaging. Co follows the transmit polarization.
enum class ChannelChoice { Co, Cross, H, V };

struct ImagingDefaults {
  double swath_deg = 36.0;
  std::size_t stride_steps = 10;
  imaging::Window window = imaging::Window::Rectangular;
  std::size_t nx = 128;
  std::size_t ny = 128;
  ChannelChoice channel = ChannelChoice::Co;
  double floor_db = -40.0;
};

struct DatasetPlanConfig {
  std::vector<geometry::TargetKind> targets{geometry::TargetKind::MSL};
  std::vector<double> tx_azimuths_deg;  // empty: 0, 15, ..., 345
  std::vector<double> elevations_deg{10.0, 15.0};
  std::vector<po::Polarization> polarizations{po::Polarization::H, po::Polarization::V};
};

struct RcsOptions {
  double min_prominence_db = 20.0;
  /// Plate dimensions for the broadside closed-form comparison in the summary.
  std::optional<std::pair<double, double>> reference_plate_m;
};

/// Project file, see docs/config.schema.json. Unknown keys are rejected.
struct ProjectConfig {
  std::string name = "project";
  nlohmann::json scene;  // null when absent
  geometry::DetailLevel detail = geometry::DetailLevel::Coarse;
  sweep::SweepConfig sweep;
  ImagingDefaults imaging;
  DatasetPlanConfig dataset;
  RcsOptions rcs;
  bool receiver_occlusion = true;
  std::optional<std::filesystem::path> output_root;
  std::filesystem::path base_dir = ".";
};

ProjectConfig parse_project(const nlohmann::json& j, const std::filesystem::path& base_dir = ".");
/// Throws ConfigError for unreadable files and malformed JSON as well as schema violations.
ProjectConfig load_project(const std::filesystem::path& path);

/// Builds the scene mesh; ConfigError at "$.scene" when the project has none.
geometry::Mesh build_project_scene(const ProjectConfig& project);

/// --out flag, then SARFORGE_OUT, then output.root from the config, then "out".
std::filesystem::path resolve_output_root(const std::optional<std::filesystem::path>& flag,
                                          const ProjectConfig& project);

sweep::Channel imaging_channel(ChannelChoice choice, po::Polarization tx);
std::string to_string(ChannelChoice c);

/// Top-level keys accepted by parse_project.
const std::vector<std::string>& project_keys();

}  // namespace sarforge::cli
