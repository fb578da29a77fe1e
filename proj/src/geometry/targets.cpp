// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 sarforge contributors

#include "sarforge/geometry/targets.hpp"

#include <cmath>

#include "sarforge/geometry/scene.hpp"

namespace sarforge::geometry {

using nlohmann::json;

std::string to_string(TargetKind kind) {
  switch (kind) {
    case TargetKind::APC: return "APC";
    case TargetKind::MBT: return "MBT";
    case TargetKind::STR: return "STR";
    case TargetKind::MSL: return "MSL";
  }
  return "?";
}

std::string to_string(DetailLevel detail) { return detail == DetailLevel::Fine ? "fine" : "coarse"; }

std::optional<TargetKind> parse_target_kind(std::string_view text) {
  if (text == "APC") return TargetKind::APC;
  if (text == "MBT") return TargetKind::MBT;
  if (text == "STR") return TargetKind::STR;
  if (text == "MSL") return TargetKind::MSL;
  return std::nullopt;
}

std::optional<DetailLevel> parse_detail_level(std::string_view text) {
  if (text == "coarse") return DetailLevel::Coarse;
  if (text == "fine") return DetailLevel::Fine;
  return std::nullopt;
}

namespace {

json box(const char* name, std::initializer_list<double> lo, std::initializer_list<double> hi) {
  return {{"type", "box"}, {"name", name}, {"min", lo}, {"max", hi}, {"max_edge", 0.5}};
}

json wheel(const std::string& name, double x, double y_inner, double y_outer, double z, double radius) {
  const double base_y = y_outer > y_inner ? y_inner : y_outer;
  return {{"type", "cylinder"}, {"name", name}, {"base", {x, base_y, z}}, {"axis", {0, 1, 0}},
          {"radius", radius},   {"length", std::abs(y_outer - y_inner)}};
}

/// Hull extruded across the vehicle width from a side profile in (x, z).
json side_profile_hull(const char* name, json profile, double half_width) {
  // axis_a = +x, axis_b = +z, extrusion along x cross z = -y, so start at +half_width.
  return {{"type", "extrusion"}, {"name", name},     {"profile", std::move(profile)}, {"origin", {0, half_width, 0}},
          {"axis_a", {1, 0, 0}}, {"axis_b", {0, 0, 1}}, {"length", 2 * half_width}};
}

/// Whip antenna as a 0.02 m square strip.
json antenna(const char* name, double x, double y, double z0, double height) {
  return box(name, {x - 0.01, y - 0.01, z0}, {x + 0.01, y + 0.01, z0 + height});
}

json apc() {
  json objs = json::array();
  objs.push_back(side_profile_hull("hull", {{-3.0, 0.45}, {2.4, 0.45}, {3.0, 1.0}, {2.2, 1.9}, {-3.0, 1.9}}, 1.4));
  int i = 0;
  for (double x : {-2.1, -0.7, 0.7, 2.1}) {
    objs.push_back(wheel("wheel_" + std::to_string(++i), x, 1.4, 1.7, 0.45, 0.45));
    objs.push_back(wheel("wheel_" + std::to_string(++i), x, -1.4, -1.7, 0.45, 0.45));
  }
  objs.push_back(antenna("antenna", 1.8, 0.9, 1.9, 2.0));
  return {{"name", "APC"}, {"objects", objs}};
}

json mbt() {
  json objs = json::array();
  objs.push_back(side_profile_hull("hull", {{-3.2, 0.5}, {2.8, 0.5}, {3.3, 1.0}, {3.0, 1.5}, {-3.2, 1.5}}, 1.6));
  int i = 0;
  for (double x : {-2.5, -1.5, -0.5, 0.5, 1.5, 2.5}) {
    objs.push_back(wheel("wheel_" + std::to_string(++i), x, 1.6, 1.95, 0.4, 0.35));
    objs.push_back(wheel("wheel_" + std::to_string(++i), x, -1.6, -1.95, 0.4, 0.35));
  }
  objs.push_back({{"type", "extrusion"},
                  {"name", "turret"},
                  {"profile", {{-1.8, -1.2}, {1.0, -1.2}, {1.8, -0.6}, {1.8, 0.6}, {1.0, 1.2}, {-1.8, 1.2}}},
                  {"origin", {0, 0, 1.5}},
                  {"axis_a", {1, 0, 0}},
                  {"axis_b", {0, 1, 0}},
                  {"length", 0.8}});
  objs.push_back({{"type", "cylinder"}, {"name", "canon"}, {"base", {1.8, 0, 1.9}}, {"axis", {1, 0, 0}},
                  {"radius", 0.08}, {"length", 2.8}});
  objs.push_back(antenna("antenna", -1.5, 0.9, 2.3, 2.0));
  return {{"name", "MBT"}, {"objects", objs}};
}

json str() {
  json objs = json::array();
  objs.push_back(side_profile_hull("body", {{-2.4, 0.5}, {1.9, 0.5}, {2.4, 0.9}, {2.2, 1.4}, {-2.4, 1.4}}, 1.1));
  int i = 0;
  for (double x : {-1.6, 1.6}) {
    objs.push_back(wheel("wheel_" + std::to_string(++i), x, 1.1, 1.4, 0.45, 0.45));
    objs.push_back(wheel("wheel_" + std::to_string(++i), x, -1.1, -1.4, 0.45, 0.45));
  }
  objs.push_back({{"type", "cylinder"}, {"name", "turret"}, {"base", {-0.8, 0, 1.4}}, {"axis", {0, 0, 1}},
                  {"radius", 0.7}, {"length", 0.7}});
  i = 0;
  for (double y : {-0.85, 0.85}) {
    for (double z : {1.75, 1.95}) {
      objs.push_back({{"type", "missile"}, {"name", "stinger_" + std::to_string(++i)}, {"base", {-1.5, y, z}},
                      {"axis", {1, 0, 0}}, {"radius", 0.07}, {"body_length", 1.3}, {"nose_length", 0.2}});
    }
  }
  objs.push_back(box("guidance_antenna", {-1.62, -0.5, 2.1}, {-1.54, 0.5, 2.9}));
  objs.push_back(antenna("antenna", 1.6, -0.8, 1.4, 2.0));
  return {{"name", "STR"}, {"objects", objs}};
}

json msl() {
  json objs = json::array();
  int i = 0;
  for (double x : {-2.2, 2.2}) {
    objs.push_back(wheel("wheel_" + std::to_string(++i), x, 1.1, 1.5, 0.5, 0.5));
    objs.push_back(wheel("wheel_" + std::to_string(++i), x, -1.1, -1.5, 0.5, 0.5));
  }
  objs.push_back(box("body", {-3.25, -1.5, 0.6}, {3.25, 1.5, 1.6}));  // 6.5 x 3 x 1 m base
  objs.push_back(box("cabin", {1.75, -1.5, 1.6}, {3.25, 1.5, 2.8}));
  objs.push_back(box("trolley", {-3.0, -0.4, 1.6}, {1.2, 0.4, 1.8}));
  // 4.0 m long, 0.5 m diameter
  objs.push_back({{"type", "missile"}, {"name", "missile"}, {"base", {-2.9, 0, 2.05}}, {"axis", {1, 0, 0}},
                  {"radius", 0.25}, {"body_length", 3.2}, {"nose_length", 0.8}});
  objs.push_back(antenna("antenna", 3.1, 1.34, 2.8, 1.5));
  return {{"name", "MSL"}, {"objects", objs}};
}

}  // namespace

json target_recipe(TargetKind kind) {
  switch (kind) {
    case TargetKind::APC: return apc();
    case TargetKind::MBT: return mbt();
    case TargetKind::STR: return str();
    case TargetKind::MSL: return msl();
  }
  return {};
}

Mesh build_target(TargetKind kind, DetailLevel detail) {
  json recipe = target_recipe(kind);
  if (detail == DetailLevel::Fine)
    for (json& o : recipe["objects"])
      if (o.contains("max_edge")) o["max_edge"] = 0.25;
  SceneContext ctx;
  ctx.detail = detail;
  ctx.path = "$.target(" + to_string(kind) + ")";
  return build_scene(recipe, ctx);
}

}  // namespace sarforge::geometry
