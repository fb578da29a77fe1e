// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 sarforge contributors

#pragma once

#include <filesystem>
#include <ostream>
#include <string>

#include "sarforge/cli/project.hpp"
#include "sarforge/sweep/plan.hpp"

namespace sarforge::cli {

struct DatasetOptions {
  unsigned jobs = 1;
  bool dry_run = false;
  double interp_scale_error = 0.0;  // test hook, see KeystoneOptions
};

struct DatasetReport {
  std::size_t planned = 0;
  std::size_t executed = 0;
  std::size_t resumed = 0;  // complete on disk and left untouched
  std::size_t clips = 0;
  std::size_t skipped_clips = 0;
  std::string tree_hash;
  std::filesystem::path manifest;
};

/// Runs of the project's dataset plan (target x polarization x elevation x tx azimuth).
std::vector<sweep::PlannedRun> project_plan(const ProjectConfig& project);

/// Layout under <root>/dataset: manifest.json and <target>/<run>/{run.bsar, clips/...}.
/// The manifest is written with status "planned" before any run starts and rewritten with
/// per-file SHA-256 digests at the end. Runs whose clips/index.json still matches run.bsar,
/// the planned config and the mesh hash are skipped. Artifacts carry no wall-clock time
/// (SOURCE_DATE_EPOCH is honoured), so identical inputs give an identical tree.
DatasetReport cmd_dataset(const ProjectConfig& project, const std::filesystem::path& root,
                          const DatasetOptions& options, std::ostream& log);

/// SHA-256 over "path\0digest\n" of every regular file under `dir` except manifest.json,
/// in byte order of the relative paths.
std::string tree_hash(const std::filesystem::path& dir);

}  // namespace sarforge::cli
