// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 sarforge contributors

#include "sarforge/cli/dataset.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <mutex>

#include "sarforge/cli/commands.hpp"
#include "sarforge/core/digest.hpp"
#include "sarforge/core/error.hpp"
#include "sarforge/core/parallel.hpp"
#include "sarforge/geometry/targets.hpp"
#include "sarforge/sweep/bsar.hpp"
#include "sarforge/sweep/run.hpp"

namespace sarforge::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr const char* kManifest = "manifest.json";

std::string artifact_timestamp() {
  return std::getenv("SOURCE_DATE_EPOCH") ? sweep::creation_timestamp() : "1970-01-01T00:00:00Z";
}

std::string relative_path(const fs::path& p, const fs::path& base) { return p.lexically_relative(base).generic_string(); }

json imaging_json(const ImagingDefaults& im) {
  return {{"swath_deg", im.swath_deg},
          {"stride_steps", im.stride_steps},
          {"window", imaging::to_string(im.window)},
          {"nx", im.nx},
          {"ny", im.ny},
          {"channel", to_string(im.channel)},
          {"floor_db", im.floor_db}};
}

// True when the run directory holds a finished run for this config and mesh.
bool run_complete(const fs::path& dir, const sweep::SweepConfig& cfg, const std::string& mesh_hash) {
  const fs::path run_file = dir / "run.bsar", index_file = dir / "clips" / "index.json";
  if (!fs::exists(run_file) || !fs::exists(index_file)) return false;
  try {
    const auto header = sweep::load_run_header(run_file);
    if (!(header.config == cfg) || header.mesh_hash != mesh_hash) return false;
    const json idx = json::parse(sweep::read_file(index_file));
    if (idx.at("provenance").at("run_sha256").get<std::string>() != sha256_file(run_file)) return false;
    for (const auto& c : idx.at("clips")) {
      for (const char* kind : {"png", "json"}) {
        const fs::path f = dir / "clips" / c.at(kind).get<std::string>();
        if (!fs::exists(f) || sha256_file(f) != c.at(std::string(kind) + "_sha256").get<std::string>()) return false;
      }
    }
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace

std::vector<sweep::PlannedRun> project_plan(const ProjectConfig& project) {
  std::vector<std::string> names;
  for (auto k : project.dataset.targets) names.push_back(geometry::to_string(k));
  const auto tx = project.dataset.tx_azimuths_deg.empty() ? sweep::default_tx_azimuths() : project.dataset.tx_azimuths_deg;
  return sweep::plan_dataset(names, tx, project.dataset.elevations_deg, project.dataset.polarizations, project.sweep);
}

std::string tree_hash(const fs::path& dir) {
  std::vector<std::pair<std::string, std::string>> files;
  for (const auto& e : fs::recursive_directory_iterator(dir)) {
    if (!e.is_regular_file()) continue;
    const std::string rel = relative_path(e.path(), dir);
    if (rel == kManifest) continue;
    files.emplace_back(rel, sha256_file(e.path()));
  }
  std::sort(files.begin(), files.end());
  std::string text;
  for (const auto& [p, h] : files) text += p + '\0' + h + '\n';
  return sha256_hex(text);
}

DatasetReport cmd_dataset(const ProjectConfig& project, const fs::path& root, const DatasetOptions& options,
                          std::ostream& log) {
  const auto plan = project_plan(project);
  for (const auto& r : plan) sweep::validate(r.config);
  const fs::path base = root / "dataset";
  DatasetReport report;
  report.planned = plan.size();
  report.manifest = base / kManifest;

  json manifest{{"format", "sarforge-dataset"},
                {"version", 1},
                {"name", project.name},
                {"detail", geometry::to_string(project.detail)},
                {"imaging", imaging_json(project.imaging)},
                {"receiver_occlusion", project.receiver_occlusion},
                {"status", "planned"}};
  json runs = json::array();
  for (const auto& r : plan)
    runs.push_back({{"target", r.target},
                    {"directory", r.target + "/" + sweep::run_directory_name(r.config)},
                    {"config", sweep::to_json(r.config)}});
  manifest["runs"] = runs;
  fs::create_directories(base);
  sweep::write_file_atomic(report.manifest, manifest.dump(2) + "\n");
  log << "planned " << plan.size() << " runs -> " << report.manifest.string() << "\n";
  if (options.dry_run) {
    for (const auto& r : runs) log << "  " << r["directory"].get<std::string>() << "\n";
    return report;
  }

  std::map<std::string, geometry::Mesh> meshes;
  for (auto k : project.dataset.targets) meshes.emplace(geometry::to_string(k), geometry::build_target(k, project.detail));
  std::map<std::string, std::string> hashes;
  for (const auto& [name, m] : meshes) hashes[name] = geometry::mesh_hash(m);

  const unsigned jobs = resolve_jobs(options.jobs);
  const unsigned outer = plan.size() >= jobs ? jobs : 1;
  const unsigned inner = outer == 1 ? jobs : 1;
  const std::string created = artifact_timestamp();
  std::vector<ClipWriteResult> results(plan.size());
  std::vector<std::uint8_t> resumed(plan.size(), 0);
  std::mutex log_mutex;

  parallel_for(plan.size(), outer, [&](std::size_t i) {
    const auto& r = plan[i];
    const fs::path dir = base / runs[i]["directory"].get<std::string>();
    const std::string& mesh_hash = hashes.at(r.target);
    if (run_complete(dir, r.config, mesh_hash)) {
      resumed[i] = 1;
      const json idx = json::parse(sweep::read_file(dir / "clips" / "index.json"));
      for (const auto& c : idx["clips"]) {
        results[i].files.push_back(c["png"].get<std::string>());
        results[i].files.push_back(c["json"].get<std::string>());
        ++results[i].clips;
      }
      results[i].skipped = idx["skipped"].size();
      results[i].files.push_back("index.json");
      std::lock_guard lock(log_mutex);
      log << "resumed  " << runs[i]["directory"].get<std::string>() << "\n";
      return;
    }
    // Stale clips from an interrupted or differently configured run would become orphans.
    fs::remove_all(dir / "clips");
    fs::create_directories(dir);
    sweep::SweepOptions so;
    so.jobs = inner;
    so.receiver_occlusion = project.receiver_occlusion;
    so.created = created;
    const auto run = sweep::run_sweep(meshes.at(r.target), r.config, so);
    const fs::path run_file = dir / "run.bsar";
    sweep::save_run(run, run_file);
    json prov{{"target", r.target},
              {"run", runs[i]["directory"]},
              {"mesh_hash", mesh_hash},
              {"run_sha256", sha256_file(run_file)}};
    results[i] = write_clips(run, project.imaging, dir / "clips", prov, inner, options.interp_scale_error);
    std::lock_guard lock(log_mutex);
    log << "finished " << runs[i]["directory"].get<std::string>() << " (" << results[i].clips << " clips)\n";
  });

  for (std::size_t i = 0; i < plan.size(); ++i) {
    const std::string dir = runs[i]["directory"].get<std::string>();
    const fs::path abs = base / dir;
    json& entry = runs[i];
    entry["mesh_hash"] = hashes.at(plan[i].target);
    entry["run"] = {{"path", dir + "/run.bsar"}, {"sha256", sha256_file(abs / "run.bsar")}};
    json clips = json::array();
    for (const auto& f : results[i].files)
      clips.push_back({{"path", dir + "/clips/" + f}, {"sha256", sha256_file(abs / "clips" / f)}});
    entry["clip_files"] = clips;
    entry["clip_count"] = results[i].clips;
    entry["skipped_clips"] = results[i].skipped;
    report.clips += results[i].clips;
    report.skipped_clips += results[i].skipped;
    (resumed[i] ? report.resumed : report.executed) += 1;
  }
  manifest["runs"] = runs;
  manifest["status"] = "complete";
  manifest["clip_count"] = report.clips;
  report.tree_hash = tree_hash(base);
  manifest["tree_hash"] = report.tree_hash;
  sweep::write_file_atomic(report.manifest, manifest.dump(2) + "\n");
  log << "executed " << report.executed << ", resumed " << report.resumed << ", clips " << report.clips
      << ", tree " << report.tree_hash << "\n";
  return report;
}

}  // namespace sarforge::cli
