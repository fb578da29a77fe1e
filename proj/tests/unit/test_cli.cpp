// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 sarforge contributors

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "doctest.h"
#include "sarforge/cli/commands.hpp"
#include "sarforge/cli/dataset.hpp"
#include "sarforge/cli/project.hpp"
#include "sarforge/core/digest.hpp"
#include "sarforge/core/error.hpp"
#include "sarforge/oracle/analytic.hpp"
#include "sarforge/sweep/bsar.hpp"
#include "sarforge/validation/acceptance.hpp"

using namespace sarforge;
using namespace sarforge::cli;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const fs::path kSource = SARFORGE_SOURCE_DIR;

fs::path temp_dir(const std::string& name) {
  auto p = fs::temp_directory_path() / ("sarforge_test_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

json read_json(const fs::path& p) { return json::parse(sweep::read_file(p)); }

std::string config_error_path(const json& j) {
  try {
    parse_project(j);
  } catch (const ConfigError& e) {
    return e.path();
  }
  return "";
}

std::size_t line_count(const fs::path& p) {
  std::ifstream f(p);
  return static_cast<std::size_t>(std::count(std::istreambuf_iterator<char>(f), {}, '\n'));
}

}  // namespace

TEST_CASE("schema and parser agree on field names") {
  const json schema = read_json(kSource / "docs" / "config.schema.json");
  std::set<std::string> top;
  for (const auto& [k, v] : schema["properties"].items()) top.insert(k);
  CHECK(top == std::set<std::string>(project_keys().begin(), project_keys().end()));

  std::set<std::string> sweep_keys, parsed;
  for (const auto& [k, v] : schema["$defs"]["sweep"]["properties"].items()) sweep_keys.insert(k);
  const json defaults = sweep::to_json(sweep::SweepConfig{});
  for (const auto& [k, v] : defaults.items()) parsed.insert(k);
  CHECK(sweep_keys == parsed);
}

TEST_CASE("demo projects load") {
  for (const char* name : {"prism_rcs", "plate_rcs", "wall_shadow", "msl_demo", "msl_on_ground", "full_plan"}) {
    CAPTURE(name);
    const auto p = load_project(kSource / "demos" / (std::string(name) + ".json"));
    CHECK(p.name == name);
    if (!p.scene.is_null()) CHECK_FALSE(build_project_scene(p).empty());
  }
  CHECK(project_plan(load_project(kSource / "demos" / "full_plan.json")).size() == 384);
  CHECK(project_plan(load_project(kSource / "demos" / "msl_demo.json")).size() == 1);
}

TEST_CASE("project diagnostics name the field") {
  CHECK(config_error_path({{"colour", 1}}) == "$.colour");
  CHECK(config_error_path({{"imaging", {{"window", "kaiser"}}}}) == "$.imaging.window");
  CHECK(config_error_path({{"imaging", {{"nx", 0}}}}) == "$.imaging.nx");
  CHECK(config_error_path({{"dataset", {{"targets", {"MSL", "TANK"}}}}}) == "$.dataset.targets[1]");
  CHECK(config_error_path({{"dataset", {{"polarizations", json::array()}}}}) == "$.dataset.polarizations");
  CHECK(config_error_path({{"sweep", {{"tx_elevation_deg", "high"}}}}) == "$.sweep.tx_elevation_deg");
  CHECK(config_error_path({{"rcs", {{"reference_plate_m", {1, -1}}}}}) == "$.rcs.reference_plate_m");
  CHECK(config_error_path({{"output", {{"root", ""}}}}) == "$.output.root");
  CHECK(config_error_path(json::array()) == "$");
  CHECK_THROWS_AS(build_project_scene(parse_project(json::object())), ConfigError);

  const auto dir = temp_dir("bad_config");
  std::ofstream(dir / "broken.json") << "{ \"name\": ";
  CHECK_THROWS_AS(load_project(dir / "broken.json"), ConfigError);
  CHECK_THROWS_AS(load_project(dir / "absent.json"), ConfigError);
  std::ofstream(dir / "stl.json") << R"({"scene": {"objects": [{"type": "stl", "path": "none.stl"}]}})";
  try {
    build_project_scene(load_project(dir / "stl.json"));
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(e.path() == "$.scene.objects[0].path");
  }
}

TEST_CASE("output root precedence") {
  ProjectConfig p;
  unsetenv("SARFORGE_OUT");
  CHECK(resolve_output_root(std::nullopt, p) == "out");
  p.output_root = "/cfg";
  CHECK(resolve_output_root(std::nullopt, p) == "/cfg");
  setenv("SARFORGE_OUT", "/env", 1);
  CHECK(resolve_output_root(std::nullopt, p) == "/env");
  CHECK(resolve_output_root(fs::path("/flag"), p) == "/flag");
  unsetenv("SARFORGE_OUT");
}

TEST_CASE("imaging channel choice") {
  CHECK(imaging_channel(ChannelChoice::Co, po::Polarization::V) == sweep::Channel::V);
  CHECK(imaging_channel(ChannelChoice::Cross, po::Polarization::V) == sweep::Channel::H);
  CHECK(imaging_channel(ChannelChoice::H, po::Polarization::V) == sweep::Channel::H);
}

TEST_CASE("rcs command on the prism and plate demos") {
  const auto dir = temp_dir("rcs");
  const auto prism = cmd_rcs(load_project(kSource / "demos" / "prism_rcs.json"), dir, 1);
  CHECK(line_count(prism.csv_path) == 501);
  CHECK(prism.peaks.size() == 3);
  CHECK(prism.predicted_azimuths_deg.size() == 3);
  std::ostringstream summary;
  print_rcs_summary(summary, prism);
  CHECK(summary.str().find("peaks (prominence >= threshold): 3") != std::string::npos);

  const auto plate = cmd_rcs(load_project(kSource / "demos" / "plate_rcs.json"), dir, 1);
  REQUIRE(plate.monostatic_dbsm);
  CHECK(std::abs(*plate.monostatic_dbsm - oracle::plate_rcs_analytic(1, 1, 1e9)) < 0.5);
}

TEST_CASE("shadowmap command") {
  const auto dir = temp_dir("shadow");
  auto project = load_project(kSource / "demos" / "wall_shadow.json");
  const auto low = cmd_shadowmap(project, dir);
  CHECK(low.ground_shadowed > 0);
  CHECK(low.max_shadowed_current == 0.0);
  CHECK(line_count(low.csv_path) == build_project_scene(project).facet_count() + 1);
  project.sweep.tx_elevation_deg = 45.0;
  const auto high = cmd_shadowmap(project, dir);
  CHECK(high.ground_shadowed < low.ground_shadowed);

  auto no_ground = parse_project({{"scene", {{"objects", {{{"type", "prism"}, {"width", 1}, {"length", 1}, {"height", 1}}}}}}});
  CHECK_THROWS_WITH_AS(cmd_shadowmap(no_ground, dir), doctest::Contains("no ground"), ConfigError);
}

TEST_CASE("sweep and image commands") {
  const auto dir = temp_dir("sweep_image");
  auto project = parse_project({{"scene", {{"objects", {{{"type", "prism"}, {"width", 1}, {"length", 2}, {"height", 1}}}}}},
                                {"sweep", {{"bandwidth_hz", 150e6}, {"rx_azimuth_step_deg", 3.6}}},
                                {"imaging", {{"swath_deg", 36}, {"stride_steps", 10}, {"nx", 32}, {"ny", 32}}}});
  const auto run = cmd_sweep(project, dir, 1);
  CHECK(sweep::load_run_header(run).n_azimuth == 100);
  const auto clips = cmd_image(project, run, dir, 1);
  CHECK(clips.clips + clips.skipped == 10);
  CHECK(fs::exists(dir / "clips" / "index.json"));
  CHECK(read_json(dir / "clips" / "000.json")["provenance"]["run_sha256"] == sha256_file(run));
}

TEST_CASE("dataset: plan, manifest coverage and resume") {
  const auto root = temp_dir("dataset");
  auto project = load_project(kSource / "demos" / "msl_demo.json");
  project.imaging.nx = project.imaging.ny = 64;
  std::ostringstream log;

  DatasetOptions dry;
  dry.dry_run = true;
  const auto planned = cmd_dataset(project, root, dry, log);
  CHECK(planned.planned == 1);
  CHECK(read_json(planned.manifest)["status"] == "planned");
  CHECK_FALSE(fs::exists(root / "dataset" / "MSL"));

  const auto first = cmd_dataset(project, root, {}, log);
  CHECK(first.executed == 1);
  CHECK(first.clips == 50);
  const json manifest = read_json(first.manifest);
  CHECK(manifest["status"] == "complete");
  CHECK(manifest["tree_hash"] == tree_hash(root / "dataset"));

  // Every file on disk is listed, and every listed digest matches.
  std::set<std::string> listed{"manifest.json"};
  for (const auto& run : manifest["runs"]) {
    listed.insert(run["run"]["path"].get<std::string>());
    CHECK(sha256_file(root / "dataset" / run["run"]["path"].get<std::string>()) == run["run"]["sha256"]);
    for (const auto& f : run["clip_files"]) {
      listed.insert(f["path"].get<std::string>());
      CHECK(sha256_file(root / "dataset" / f["path"].get<std::string>()) == f["sha256"]);
    }
  }
  std::set<std::string> on_disk;
  for (const auto& e : fs::recursive_directory_iterator(root / "dataset"))
    if (e.is_regular_file()) on_disk.insert(e.path().lexically_relative(root / "dataset").generic_string());
  CHECK(on_disk == listed);

  const auto again = cmd_dataset(project, root, {}, log);
  CHECK(again.resumed == 1);
  CHECK(again.executed == 0);
  CHECK(again.tree_hash == first.tree_hash);

  // A damaged clip invalidates the run, which is then recomputed to the same bytes.
  std::ofstream(root / "dataset" / "MSL" / "000_15_H" / "clips" / "007.png", std::ios::trunc) << "x";
  const auto repaired = cmd_dataset(project, root, {}, log);
  CHECK(repaired.executed == 1);
  CHECK(repaired.tree_hash == first.tree_hash);
}

TEST_CASE("perturbed interpolation fails the shift-theorem check") {
  validation::ValidationOptions o;
  const auto clean = validation::check_invariances(o);
  CHECK(clean.pass());
  o.interp_scale_error = 0.1;
  const auto bad = validation::check_invariances(o);
  CHECK_FALSE(bad.pass());
  for (const auto& row : bad.rows)
    if (row.name.find("shift theorem") != std::string::npos) CHECK_FALSE(row.pass);
    else CHECK(row.pass);
}
