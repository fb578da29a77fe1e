// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 sarforge contributors

#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

#include "sarforge/cli/project.hpp"
#include "sarforge/po/peaks.hpp"
#include "sarforge/po/solver.hpp"
#include "sarforge/sweep/run.hpp"

namespace sarforge::cli {

struct RcsReport {
  std::vector<po::RcsSample> samples;
  std::vector<po::CurvePeak> peaks;  // co-pol, by descending value
  /// Reflection-law prediction, only for in-plane (elevation 0) geometry.
  std::vector<double> predicted_azimuths_deg;
  std::optional<double> monostatic_dbsm;
  std::optional<double> analytic_plate_dbsm;
  std::filesystem::path csv_path;
};

/// Bistatic RCS at the sweep center frequency over the configured receiver azimuths.
/// Writes <out>/rcs.csv.
RcsReport cmd_rcs(const ProjectConfig& project, const std::filesystem::path& out_dir, unsigned jobs);
void print_rcs_summary(std::ostream& out, const RcsReport& report);

struct ShadowReport {
  std::size_t ground_facets = 0;
  std::size_t ground_lit = 0;
  std::size_t ground_shadowed = 0;
  double max_shadowed_current = 0.0;  // A/m
  std::filesystem::path csv_path;
};

/// Surface currents of the scene for the sweep transmitter at the center frequency.
/// The scene needs a non-empty part named "ground". Writes <out>/currents.csv.
ShadowReport cmd_shadowmap(const ProjectConfig& project, const std::filesystem::path& out_dir);

/// Writes <out>/run.bsar.
std::filesystem::path cmd_sweep(const ProjectConfig& project, const std::filesystem::path& out_dir, unsigned jobs);

struct ClipWriteResult {
  std::size_t clips = 0;
  std::size_t skipped = 0;
  std::size_t degraded = 0;
  /// Written files relative to the clip directory, index.json last.
  std::vector<std::string> files;
};

/// Forms the clip series of `run` and writes NNN.png, NNN.json and index.json into `dir`.
/// `provenance` is copied into every sidecar.
ClipWriteResult write_clips(const sweep::RunData& run, const ImagingDefaults& imaging, const std::filesystem::path& dir,
                            const nlohmann::json& provenance, unsigned jobs, double interp_scale_error = 0.0);

/// Reads a run file and writes its clips to <out>/clips.
ClipWriteResult cmd_image(const ProjectConfig& project, const std::filesystem::path& run_path,
                          const std::filesystem::path& out_dir, unsigned jobs, double interp_scale_error = 0.0);

}  // namespace sarforge::cli
