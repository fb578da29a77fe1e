// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 sarforge contributors

#include "sarforge/cli/project.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>

#include "sarforge/core/error.hpp"
#include "sarforge/geometry/scene.hpp"

namespace sarforge::cli {

namespace {

using nlohmann::json;

void reject_unknown(const json& obj, const std::string& path, std::initializer_list<const char*> allowed) {
  const std::set<std::string> keys(allowed.begin(), allowed.end());
  for (const auto& [k, v] : obj.items())
    if (!keys.count(k)) throw ConfigError(path + "." + k, "unknown field");
}

const json& object_at(const json& j, const std::string& path) {
  if (!j.is_object()) throw ConfigError(path, "expected an object");
  return j;
}

double number_at(const json& j, const std::string& path) {
  if (!j.is_number()) throw ConfigError(path, "expected a number");
  const double d = j.get<double>();
  if (!std::isfinite(d)) throw ConfigError(path, "must be finite");
  return d;
}

std::size_t count_at(const json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<long long>() < 1) throw ConfigError(path, "expected a positive integer");
  return static_cast<std::size_t>(j.get<long long>());
}

std::string string_at(const json& j, const std::string& path) {
  if (!j.is_string()) throw ConfigError(path, "expected a string");
  return j.get<std::string>();
}

template <class F>
auto list_at(const json& j, const std::string& path, F&& item) {
  if (!j.is_array() || j.empty()) throw ConfigError(path, "expected a non-empty array");
  std::vector<decltype(item(j[0], path))> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(item(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

ChannelChoice parse_channel(const json& j, const std::string& path) {
  const auto s = string_at(j, path);
  if (s == "co") return ChannelChoice::Co;
  if (s == "cross") return ChannelChoice::Cross;
  if (s == "H") return ChannelChoice::H;
  if (s == "V") return ChannelChoice::V;
  throw ConfigError(path, "expected 'co', 'cross', 'H' or 'V'");
}

ImagingDefaults parse_imaging(const json& j, const std::string& path) {
  object_at(j, path);
  reject_unknown(j, path, {"swath_deg", "stride_steps", "window", "nx", "ny", "channel", "floor_db"});
  ImagingDefaults d;
  if (j.contains("swath_deg")) {
    d.swath_deg = number_at(j["swath_deg"], path + ".swath_deg");
    if (!(d.swath_deg > 0.0)) throw ConfigError(path + ".swath_deg", "must be positive");
  }
  if (j.contains("stride_steps")) d.stride_steps = count_at(j["stride_steps"], path + ".stride_steps");
  if (j.contains("window")) {
    const auto w = imaging::parse_window(string_at(j["window"], path + ".window"));
    if (!w) throw ConfigError(path + ".window", "expected 'rectangular' or 'raised_cosine'");
    d.window = *w;
  }
  if (j.contains("nx")) d.nx = count_at(j["nx"], path + ".nx");
  if (j.contains("ny")) d.ny = count_at(j["ny"], path + ".ny");
  if (j.contains("channel")) d.channel = parse_channel(j["channel"], path + ".channel");
  if (j.contains("floor_db")) {
    d.floor_db = number_at(j["floor_db"], path + ".floor_db");
    if (!(d.floor_db < 0.0)) throw ConfigError(path + ".floor_db", "must be negative");
  }
  return d;
}

DatasetPlanConfig parse_dataset(const json& j, const std::string& path) {
  object_at(j, path);
  reject_unknown(j, path, {"targets", "tx_azimuths_deg", "elevations_deg", "polarizations"});
  DatasetPlanConfig d;
  if (j.contains("targets"))
    d.targets = list_at(j["targets"], path + ".targets", [](const json& v, const std::string& p) {
      const auto k = geometry::parse_target_kind(string_at(v, p));
      if (!k) throw ConfigError(p, "unknown target kind (APC, MBT, STR, MSL)");
      return *k;
    });
  if (j.contains("tx_azimuths_deg")) d.tx_azimuths_deg = list_at(j["tx_azimuths_deg"], path + ".tx_azimuths_deg", number_at);
  if (j.contains("elevations_deg")) {
    d.elevations_deg = list_at(j["elevations_deg"], path + ".elevations_deg", [](const json& v, const std::string& p) {
      const double e = number_at(v, p);
      if (!(e >= 0.0 && e < 90.0)) throw ConfigError(p, "elevation must lie in [0, 90)");
      return e;
    });
  }
  if (j.contains("polarizations"))
    d.polarizations = list_at(j["polarizations"], path + ".polarizations", [](const json& v, const std::string& p) {
      const auto pol = po::parse_polarization(string_at(v, p));
      if (!pol) throw ConfigError(p, "expected 'H' or 'V'");
      return *pol;
    });
  return d;
}

RcsOptions parse_rcs(const json& j, const std::string& path) {
  object_at(j, path);
  reject_unknown(j, path, {"min_prominence_db", "reference_plate_m"});
  RcsOptions r;
  if (j.contains("min_prominence_db")) r.min_prominence_db = number_at(j["min_prominence_db"], path + ".min_prominence_db");
  if (j.contains("reference_plate_m")) {
    const auto& p = j["reference_plate_m"];
    const std::string pp = path + ".reference_plate_m";
    if (!p.is_array() || p.size() != 2) throw ConfigError(pp, "expected [a, b]");
    const double a = number_at(p[0], pp + "[0]"), b = number_at(p[1], pp + "[1]");
    if (!(a > 0.0 && b > 0.0)) throw ConfigError(pp, "plate dimensions must be positive");
    r.reference_plate_m = std::make_pair(a, b);
  }
  return r;
}

}  // namespace

const std::vector<std::string>& project_keys() {
  static const std::vector<std::string> keys{"name",    "scene", "detail", "sweep", "imaging",
                                             "dataset", "rcs",   "receiver_occlusion", "output"};
  return keys;
}

ProjectConfig parse_project(const json& j, const std::filesystem::path& base_dir) {
  if (!j.is_object()) throw ConfigError("$", "expected a project object");
  for (const auto& [k, v] : j.items())
    if (std::find(project_keys().begin(), project_keys().end(), k) == project_keys().end())
      throw ConfigError("$." + k, "unknown field");
  ProjectConfig p;
  p.base_dir = base_dir;
  if (j.contains("name")) p.name = string_at(j["name"], "$.name");
  if (j.contains("scene")) {
    p.scene = object_at(j["scene"], "$.scene");
  }
  if (j.contains("detail")) {
    const auto d = geometry::parse_detail_level(string_at(j["detail"], "$.detail"));
    if (!d) throw ConfigError("$.detail", "expected 'coarse' or 'fine'");
    p.detail = *d;
  }
  if (j.contains("sweep")) p.sweep = sweep::sweep_config_from_json(j["sweep"], "$.sweep");
  if (j.contains("imaging")) p.imaging = parse_imaging(j["imaging"], "$.imaging");
  if (j.contains("dataset")) p.dataset = parse_dataset(j["dataset"], "$.dataset");
  if (j.contains("rcs")) p.rcs = parse_rcs(j["rcs"], "$.rcs");
  if (j.contains("receiver_occlusion")) {
    if (!j["receiver_occlusion"].is_boolean()) throw ConfigError("$.receiver_occlusion", "expected true or false");
    p.receiver_occlusion = j["receiver_occlusion"].get<bool>();
  }
  if (j.contains("output")) {
    const auto& o = object_at(j["output"], "$.output");
    reject_unknown(o, "$.output", {"root"});
    if (o.contains("root")) {
      std::filesystem::path root = string_at(o["root"], "$.output.root");
      if (root.empty()) throw ConfigError("$.output.root", "must not be empty");
      p.output_root = root.is_absolute() ? root : base_dir / root;
    }
  }
  return p;
}

ProjectConfig load_project(const std::filesystem::path& path) {
  std::ifstream f(path);
  if (!f) throw ConfigError("--config", "cannot read " + path.string());
  json j;
  try {
    j = json::parse(f);
  } catch (const json::parse_error& e) {
    throw ConfigError("$", std::string("invalid JSON: ") + e.what());
  }
  return parse_project(j, path.parent_path().empty() ? std::filesystem::path(".") : path.parent_path());
}

geometry::Mesh build_project_scene(const ProjectConfig& project) {
  if (project.scene.is_null()) throw ConfigError("$.scene", "missing required field");
  geometry::SceneContext ctx;
  ctx.base_dir = project.base_dir;
  ctx.path = "$.scene";
  ctx.detail = project.detail;
  return geometry::build_scene(project.scene, ctx);
}

std::filesystem::path resolve_output_root(const std::optional<std::filesystem::path>& flag,
                                          const ProjectConfig& project) {
  if (flag && !flag->empty()) return *flag;
  if (const char* env = std::getenv("SARFORGE_OUT"); env && *env) return env;
  if (project.output_root) return *project.output_root;
  return "out";
}

sweep::Channel imaging_channel(ChannelChoice choice, po::Polarization tx) {
  const auto same = tx == po::Polarization::H ? sweep::Channel::H : sweep::Channel::V;
  const auto other = tx == po::Polarization::H ? sweep::Channel::V : sweep::Channel::H;
  switch (choice) {
    case ChannelChoice::Co: return same;
    case ChannelChoice::Cross: return other;
    case ChannelChoice::H: return sweep::Channel::H;
    case ChannelChoice::V: return sweep::Channel::V;
  }
  return same;
}

std::string to_string(ChannelChoice c) {
  switch (c) {
    case ChannelChoice::Co: return "co";
    case ChannelChoice::Cross: return "cross";
    case ChannelChoice::H: return "H";
    case ChannelChoice::V: return "V";
  }
  return "co";
}

}  // namespace sarforge::cli
