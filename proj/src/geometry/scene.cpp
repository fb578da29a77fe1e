// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 sarforge contributors

#include "sarforge/geometry/scene.hpp"

#include <cmath>

#include "sarforge/core/error.hpp"
#include "sarforge/geometry/primitives.hpp"
#include "sarforge/geometry/stl.hpp"

namespace sarforge::geometry {

namespace {

using nlohmann::json;

struct ObjectReader {
  const json& obj;
  std::string path;

  std::string field_path(const std::string& key) const { return path + "." + key; }

  bool has(const char* key) const { return obj.contains(key); }

  double number(const char* key) const {
    if (!obj.contains(key)) throw ConfigError(field_path(key), "missing required field");
    const json& v = obj.at(key);
    if (!v.is_number()) throw ConfigError(field_path(key), "expected a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) throw ConfigError(field_path(key), "must be finite");
    return d;
  }
  double positive(const char* key) const {
    const double d = number(key);
    if (!(d > 0.0)) throw ConfigError(field_path(key), "must be positive");
    return d;
  }
  double number_or(const char* key, double fallback) const { return has(key) ? number(key) : fallback; }
  int integer_or(const char* key, int fallback) const {
    if (!has(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_number_integer()) throw ConfigError(field_path(key), "expected an integer");
    return v.get<int>();
  }
  std::string string_or(const char* key, std::string fallback) const {
    if (!has(key)) return fallback;
    const json& v = obj.at(key);
    if (!v.is_string()) throw ConfigError(field_path(key), "expected a string");
    return v.get<std::string>();
  }
  Vector3 vec(const char* key) const {
    if (!obj.contains(key)) throw ConfigError(field_path(key), "missing required field");
    return to_vec(obj.at(key), field_path(key));
  }
  Vector3 vec_or(const char* key, Vector3 fallback) const { return has(key) ? vec(key) : fallback; }

  static Vector3 to_vec(const json& v, const std::string& p) {
    if (!v.is_array() || v.size() != 3) throw ConfigError(p, "expected [x, y, z]");
    for (std::size_t i = 0; i < 3; ++i)
      if (!v[i].is_number() || !std::isfinite(v[i].get<double>()))
        throw ConfigError(p + "[" + std::to_string(i) + "]", "expected a finite number");
    return {v[0].get<double>(), v[1].get<double>(), v[2].get<double>()};
  }
};

struct DetailDefaults {
  int sides;
  double max_edge;
};

DetailDefaults defaults_for(DetailLevel d) { return d == DetailLevel::Fine ? DetailDefaults{32, 0.25} : DetailDefaults{16, 0.5}; }

void build_object(MeshBuilder& b, const json& obj, const std::string& path, const SceneContext& ctx) {
  if (!obj.is_object()) throw ConfigError(path, "expected an object");
  const ObjectReader r{obj, path};
  const std::string type = r.string_or("type", "");
  if (type.empty()) throw ConfigError(r.field_path("type"), "missing required field");
  const std::string name = r.string_or("name", type);
  const DetailDefaults dd = defaults_for(ctx.detail);

  Frame frame;
  {
    const Vector3 rot = r.vec_or("rotation_deg", {});
    frame.to_world.rotation = rotation_xyz(rot.x, rot.y, rot.z);
    frame.to_world.translation = r.vec_or("position", {});
  }

  try {
    if (type == "plate" || type == "ground") {
      b.begin_part(type == "ground" && !r.has("name") ? "ground" : name);
      add_plate(b, r.positive("width"), r.positive("length"), r.number_or("max_edge", type == "ground" ? 0.25 : 0.0),
                frame);
    } else if (type == "box" || type == "prism") {
      b.begin_part(name);
      const double edge = r.number_or("max_edge", 0.0);
      if (r.has("min") || r.has("max")) {
        const Vector3 lo = r.vec("min"), hi = r.vec("max");
        if (!(hi.x > lo.x && hi.y > lo.y && hi.z > lo.z)) throw ConfigError(r.field_path("max"), "must exceed min");
        add_box(b, lo, hi, edge, true, frame);
      } else {
        const double w = r.positive("width"), l = r.positive("length"), h = r.positive("height");
        add_box(b, {-w / 2, -l / 2, 0.0}, {w / 2, l / 2, h}, edge, true, frame);
      }
    } else if (type == "wall_on_ground") {
      WallOnGroundSpec s;
      s.wall_length = r.number_or("wall_length", s.wall_length);
      s.wall_thickness = r.number_or("wall_thickness", s.wall_thickness);
      s.wall_height = r.number_or("wall_height", s.wall_height);
      s.ground_width = r.number_or("ground_width", s.ground_width);
      s.ground_length = r.number_or("ground_length", s.ground_length);
      s.ground_edge = r.number_or("ground_edge", s.ground_edge);
      for (const char* key : {"wall_length", "wall_thickness", "wall_height", "ground_width", "ground_length"})
        if (r.has(key)) r.positive(key);
      Mesh m = build_primitive(s, name);
      if (r.has("position") || r.has("rotation_deg")) m = transformed(m, frame.to_world);
      b.append(m);
    } else if (type == "sphere") {
      b.begin_part(name);
      add_sphere(b, {}, r.positive("radius"), r.integer_or("subdivisions", 2), frame);
    } else if (type == "cylinder") {
      b.begin_part(name);
      add_cylinder(b, r.vec_or("base", {}), r.vec_or("axis", {0, 0, 1}), r.positive("radius"), r.positive("length"),
                   r.integer_or("sides", dd.sides), r.number_or("max_edge", dd.max_edge), true, true, frame);
    } else if (type == "cone") {
      b.begin_part(name);
      add_cone(b, r.vec_or("base", {}), r.vec_or("axis", {0, 0, 1}), r.positive("radius"), r.positive("height"),
               r.integer_or("sides", dd.sides), true, frame);
    } else if (type == "missile") {
      b.begin_part(name);
      add_missile(b, r.vec_or("base", {}), r.vec_or("axis", {1, 0, 0}), r.positive("radius"), r.positive("body_length"),
                  r.positive("nose_length"), r.integer_or("sides", dd.sides), r.number_or("max_edge", dd.max_edge),
                  frame);
    } else if (type == "extrusion") {
      std::vector<Point2> profile;
      if (!obj.contains("profile") || !obj.at("profile").is_array())
        throw ConfigError(r.field_path("profile"), "expected an array of [a, b] points");
      for (std::size_t i = 0; i < obj.at("profile").size(); ++i) {
        const json& p = obj.at("profile")[i];
        const std::string pp = r.field_path("profile") + "[" + std::to_string(i) + "]";
        if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number())
          throw ConfigError(pp, "expected [a, b]");
        profile.push_back({p[0].get<double>(), p[1].get<double>()});
      }
      b.begin_part(name);
      add_extrusion(b, profile, r.vec_or("origin", {}), r.vec_or("axis_a", {1, 0, 0}), r.vec_or("axis_b", {0, 1, 0}),
                    r.positive("length"), r.number_or("max_edge", dd.max_edge), frame);
    } else if (type == "target") {
      const std::string kind_text = r.string_or("kind", "");
      const auto kind = parse_target_kind(kind_text);
      if (!kind) throw ConfigError(r.field_path("kind"), "unknown target kind '" + kind_text + "' (APC, MBT, STR, MSL)");
      DetailLevel detail = ctx.detail;
      if (r.has("detail")) {
        const auto d = parse_detail_level(r.string_or("detail", ""));
        if (!d) throw ConfigError(r.field_path("detail"), "expected 'coarse' or 'fine'");
        detail = *d;
      }
      Mesh m = build_target(*kind, detail);
      if (r.has("position") || r.has("rotation_deg")) m = transformed(m, frame.to_world);
      b.append(m);
    } else if (type == "stl") {
      const std::string rel = r.string_or("path", "");
      if (rel.empty()) throw ConfigError(r.field_path("path"), "missing required field");
      std::filesystem::path p(rel);
      if (p.is_relative()) p = ctx.base_dir / p;
      if (!std::filesystem::exists(p)) throw ConfigError(r.field_path("path"), "mesh file not found: " + p.string());
      Mesh m = load_mesh_file(p);
      if (r.has("position") || r.has("rotation_deg")) m = transformed(m, frame.to_world);
      b.append(m);
    } else {
      throw ConfigError(r.field_path("type"), "unknown object type '" + type + "'");
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const InvalidSpecError& e) {
    throw ConfigError(path, e.what());
  } catch (const ParseError& e) {
    throw ConfigError(r.field_path("path"), e.what());
  }
}

}  // namespace

Mesh build_scene(const json& scene, const SceneContext& ctx) {
  if (!scene.is_object()) throw ConfigError(ctx.path, "expected a scene object");
  SceneContext local = ctx;
  if (scene.contains("detail")) {
    const json& d = scene.at("detail");
    const auto lvl = d.is_string() ? parse_detail_level(d.get<std::string>()) : std::nullopt;
    if (!lvl) throw ConfigError(ctx.path + ".detail", "expected 'coarse' or 'fine'");
    local.detail = *lvl;
  }
  if (!scene.contains("objects") || !scene.at("objects").is_array())
    throw ConfigError(ctx.path + ".objects", "expected an array of scene objects");
  const json& objects = scene.at("objects");
  if (objects.empty()) throw ConfigError(ctx.path + ".objects", "scene has no objects");

  MeshBuilder b;
  for (std::size_t i = 0; i < objects.size(); ++i)
    build_object(b, objects[i], ctx.path + ".objects[" + std::to_string(i) + "]", local);
  const std::string name = scene.contains("name") && scene.at("name").is_string() ? scene.at("name").get<std::string>()
                                                                                   : std::string("scene");
  try {
    return b.build(name);
  } catch (const DegenerateFacetError& e) {
    throw ConfigError(ctx.path + ".objects", e.what());
  }
}

}  // namespace sarforge::geometry
