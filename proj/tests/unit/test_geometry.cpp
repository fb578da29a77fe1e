// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 sarforge contributors

#include <cmath>
#include <random>
#include <set>

#include "doctest.h"
#include "sarforge/core/constants.hpp"
#include "sarforge/core/error.hpp"
#include "sarforge/geometry/angles.hpp"
#include "sarforge/geometry/primitives.hpp"
#include "sarforge/geometry/quality.hpp"
#include "sarforge/geometry/scene.hpp"
#include "sarforge/geometry/stl.hpp"
#include "sarforge/geometry/targets.hpp"

using namespace sarforge;
using namespace sarforge::geometry;

namespace {

void check_closed(const Mesh& m) {
  const Vector3 r = closure_residual(m);
  CHECK(norm(r) <= 1e-9 * m.total_area());
}

void check_facets_recomputable(const Mesh& m) {
  for (std::size_t i = 0; i < m.facet_count(); ++i) {
    const auto c = m.corners(i);
    const Facet f = make_facet(c[0], c[1], c[2]);
    const Facet& s = m.facets()[i];
    REQUIRE(s.area > 0.0);
    CHECK(std::abs(norm(s.normal) - 1.0) <= 1e-12);
    CHECK(std::abs(f.area - s.area) <= 1e-9 * s.area);
    CHECK(norm(f.normal - s.normal) <= 1e-9);
    CHECK(norm(f.centroid - s.centroid) <= 1e-9 * std::max(1.0, norm(s.centroid)));
  }
}

double part_length_along(const Mesh& m, const Part& p, const Vector3& axis) {
  const Bounds b = m.part_bounds(p);
  return std::abs(dot(b.max - b.min, axis));
}

}  // namespace

TEST_CASE("direction_from_angles axis cases") {
  CHECK(direction_from_angles(0, 0) == Vector3{1, 0, 0});
  CHECK(direction_from_angles(90, 0) == Vector3{0, 1, 0});
  CHECK(direction_from_angles(0, 90) == Vector3{0, 0, 1});
  CHECK(direction_from_angles(180, 0) == Vector3{-1, 0, 0});
  CHECK(direction_from_angles(-90, 0) == Vector3{0, -1, 0});
  CHECK(norm(direction_from_angles(450, 0) - Vector3{0, 1, 0}) < 1e-15);
  CHECK_THROWS_AS(direction_from_angles(0, 90.5), InvalidSpecError);
  CHECK_THROWS_AS(direction_from_angles(0, -91), InvalidSpecError);
}

TEST_CASE("direction_from_angles has unit norm") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> az(-720, 720), el(-90, 90);
  for (int i = 0; i < 2000; ++i) {
    const Vector3 d = direction_from_angles(az(rng), el(rng));
    CHECK(std::abs(norm(d) - 1.0) <= 1e-12);
  }
}

TEST_CASE("azimuth and elevation invert direction_from_angles") {
  for (double az : {0.0, 12.5, 135.0, 359.0}) {
    for (double el : {-30.0, 0.0, 15.0, 80.0}) {
      const Vector3 d = direction_from_angles(az, el);
      CHECK(azimuth_of(d) == doctest::Approx(az).epsilon(1e-12));
      CHECK(elevation_of(d) == doctest::Approx(el).epsilon(1e-12));
    }
  }
}

TEST_CASE("polarization basis is orthonormal with V pointing up") {
  for (double az : {0.0, 45.0, 200.0}) {
    for (double el : {0.0, 10.0, 60.0}) {
      const auto [h, v] = polarization_basis(az, el);
      const Vector3 r = direction_from_angles(az, el);
      CHECK(std::abs(dot(h, v)) < 1e-15);
      CHECK(std::abs(dot(h, r)) < 1e-15);
      CHECK(std::abs(dot(v, r)) < 1e-15);
      CHECK(std::abs(norm(h) - 1) < 1e-15);
      CHECK(std::abs(norm(v) - 1) < 1e-15);
      CHECK(v.z > 0.0);
      CHECK(h.z == 0.0);
    }
  }
}

TEST_CASE("prism primitive") {
  const Mesh m = build_primitive(BoxSpec{1, 1, 10, 0}, "prism");
  CHECK(m.facet_count() == 12);
  CHECK(m.total_area() == doctest::Approx(42.0).epsilon(1e-14));
  check_closed(m);
  check_facets_recomputable(m);
  const Bounds b = m.bounds();
  CHECK(b.min == Vector3{-0.5, -0.5, 0});
  CHECK(b.max == Vector3{0.5, 0.5, 10});
}

TEST_CASE("plate primitive") {
  const Mesh m = build_primitive(PlateSpec{1, 1, 0});
  CHECK(m.facet_count() == 2);
  CHECK(m.total_area() == doctest::Approx(1.0).epsilon(1e-15));
  for (const Facet& f : m.facets()) CHECK(f.normal == Vector3{0, 0, 1});

  const Mesh fine = build_primitive(PlateSpec{1, 1, 0.25});
  CHECK(fine.facet_count() == 32);
  CHECK(fine.total_area() == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("wall on ground") {
  const Mesh m = build_primitive(WallOnGroundSpec{});
  const Part* ground = m.find_part("ground");
  const Part* wall = m.find_part("wall");
  REQUIRE(ground);
  REQUIRE(wall);
  for (std::size_t i = ground->first_facet; i < ground->first_facet + ground->facet_count; ++i) {
    const auto c = m.corners(i);
    CHECK(make_facet(c[0], c[1], c[2]).normal == Vector3{0, 0, 1});
  }
  CHECK(ground->facet_count == 2 * 40 * 40);
  const Bounds wb = m.part_bounds(*wall);
  CHECK(wb.extent().x == doctest::Approx(0.2));
  CHECK(wb.extent().y == doctest::Approx(4.0));
  CHECK(wb.extent().z == doctest::Approx(2.0));
  check_facets_recomputable(m);
}

TEST_CASE("primitives reject non-positive dimensions") {
  CHECK_THROWS_AS(build_primitive(BoxSpec{0, 1, 1, 0}), InvalidSpecError);
  CHECK_THROWS_AS(build_primitive(BoxSpec{1, -1, 1, 0}), InvalidSpecError);
  CHECK_THROWS_AS(build_primitive(PlateSpec{1, 0, 0}), InvalidSpecError);
  WallOnGroundSpec w;
  w.wall_height = 0;
  CHECK_THROWS_AS(build_primitive(w), InvalidSpecError);
  CHECK_THROWS_AS(build_primitive(SphereSpec{-1, 2}), InvalidSpecError);
}

TEST_CASE("closed solids close") {
  check_closed(build_primitive(BoxSpec{1, 2, 3, 0.4}));
  check_closed(build_primitive(SphereSpec{1.0, 2}));
  MeshBuilder b;
  b.begin_part("cyl");
  add_cylinder(b, {0, 0, 0}, {0.3, 0.4, 0.866}, 0.5, 2.0, 16, 0.5);
  b.begin_part("missile");
  add_missile(b, {1, 1, 1}, {1, 0, 0}, 0.25, 3.2, 0.8, 16, 0.5);
  b.begin_part("ext");
  const Point2 profile[] = {{0, 0}, {2, 0}, {2.5, 1}, {0, 1}};
  add_extrusion(b, profile, {0, 5, 0}, {1, 0, 0}, {0, 0, 1}, 1.5, 0.5);
  const Mesh m = b.build("mix");
  for (const Part& p : m.parts()) {
    Vector3 r;
    double area = 0.0;
    for (std::size_t i = p.first_facet; i < p.first_facet + p.facet_count; ++i) {
      r = r + m.facets()[i].normal * m.facets()[i].area;
      area += m.facets()[i].area;
    }
    INFO(p.name);
    CHECK(norm(r) <= 1e-9 * area);
  }
}

TEST_CASE("closed solids have outward normals") {
  // Signed volume is positive only for outward winding.
  auto volume = [](const Mesh& m) {
    double v = 0.0;
    for (const Facet& f : m.facets()) v += dot(f.centroid, f.normal) * f.area / 3.0;
    return v;
  };
  CHECK(volume(build_primitive(BoxSpec{1, 1, 10, 0})) == doctest::Approx(10.0));
  CHECK(volume(build_primitive(BoxSpec{2, 3, 4, 0.7})) == doctest::Approx(24.0));
  CHECK(volume(build_primitive(SphereSpec{1.0, 3})) > 0.95 * 4.0 / 3.0 * kPi);
  for (auto kind : {TargetKind::APC, TargetKind::MBT, TargetKind::STR, TargetKind::MSL}) {
    const Mesh m = build_target(kind, DetailLevel::Coarse);
    for (const Part& p : m.parts()) {
      double v = 0.0;
      for (std::size_t i = p.first_facet; i < p.first_facet + p.facet_count; ++i)
        v += dot(m.facets()[i].centroid, m.facets()[i].normal) * m.facets()[i].area / 3.0;
      INFO(to_string(kind), " ", p.name);
      CHECK(v > 0.0);
    }
  }
}

TEST_CASE("MSL target dimensions") {
  const Mesh m = build_target(TargetKind::MSL, DetailLevel::Coarse);
  const Vector3 e = m.bounds().extent();
  CHECK(e.x <= 8.0);
  CHECK(e.y <= 8.0);
  CHECK(e.z <= 8.0);
  CHECK(m.bounds().min.z == doctest::Approx(0.0).epsilon(1e-12));
  const Part* missile = m.find_part("missile");
  REQUIRE(missile);
  CHECK(part_length_along(m, *missile, {1, 0, 0}) == doctest::Approx(4.0).epsilon(1e-12));
  const Bounds mb = m.part_bounds(*missile);
  CHECK(mb.extent().y == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(mb.extent().z == doctest::Approx(0.5).epsilon(1e-12));
  const Part* body = m.find_part("body");
  REQUIRE(body);
  const Vector3 be = m.part_bounds(*body).extent();
  CHECK(be.x == doctest::Approx(6.5));
  CHECK(be.y == doctest::Approx(3.0));
  CHECK(be.z == doctest::Approx(1.0));
  CHECK(m.facet_count() > 500);
  CHECK(m.facet_count() < 5000);
}

TEST_CASE("target classes carry their features") {
  const Mesh mbt = build_target(TargetKind::MBT, DetailLevel::Coarse);
  const Mesh apc = build_target(TargetKind::APC, DetailLevel::Coarse);
  const Mesh str = build_target(TargetKind::STR, DetailLevel::Coarse);
  CHECK(mbt.facet_count() != apc.facet_count());
  CHECK(mbt.find_part("canon"));
  CHECK(mbt.find_part("turret"));
  CHECK(mbt.find_part("wheel_12"));
  CHECK(apc.find_part("antenna"));
  CHECK_FALSE(apc.find_part("canon"));
  for (int i = 1; i <= 4; ++i) CHECK(str.find_part("stinger_" + std::to_string(i)));
  for (const Mesh* m : {&mbt, &apc, &str}) {
    const Vector3 e = m->bounds().extent();
    CHECK(std::max({e.x, e.y, e.z}) <= 8.0);
    check_facets_recomputable(*m);
  }
  const Mesh fine = build_target(TargetKind::MSL, DetailLevel::Fine);
  CHECK(fine.facet_count() > build_target(TargetKind::MSL, DetailLevel::Coarse).facet_count());
}

TEST_CASE("target name parsing") {
  CHECK(parse_target_kind("MSL") == TargetKind::MSL);
  CHECK_FALSE(parse_target_kind("tank"));
  CHECK(parse_detail_level("fine") == DetailLevel::Fine);
  CHECK_FALSE(parse_detail_level("medium"));
  CHECK(to_string(TargetKind::STR) == "STR");
}

TEST_CASE("STL unit right triangle") {
  const char* text =
      "solid tri\n"
      "  facet normal 0 0 1\n"
      "    outer loop\n"
      "      vertex 0 0 0\n"
      "      vertex 1 0 0\n"
      "      vertex 0 1 0\n"
      "    endloop\n"
      "  endfacet\n"
      "endsolid tri\n";
  const Mesh m = load_mesh(text);
  REQUIRE(m.facet_count() == 1);
  CHECK(m.facets()[0].area == 0.5);
  CHECK(m.facets()[0].normal == Vector3{0, 0, 1});
}

TEST_CASE("STL stored normals are ignored when inconsistent") {
  const char* text =
      "solid t\nfacet normal 0 0 -1\nouter loop\nvertex 0 0 0\nvertex 1 0 0\nvertex 0 1 0\nendloop\nendfacet\n"
      "endsolid t\n";
  StlLoadReport report;
  const Mesh m = load_mesh(text, "t", &report);
  CHECK(report.inconsistent_normals == 1);
  CHECK(m.facets()[0].normal == Vector3{0, 0, 1});
}

TEST_CASE("STL roundtrip is bit-stable") {
  for (const Mesh& m : {build_primitive(BoxSpec{1, 1, 10, 0}), build_primitive(WallOnGroundSpec{}),
                        build_target(TargetKind::MSL, DetailLevel::Coarse)}) {
    const Mesh back = load_mesh(save_mesh(m), m.name());
    REQUIRE(back.vertices().size() == m.vertices().size());
    REQUIRE(back.facet_count() == m.facet_count());
    CHECK(back.vertices() == m.vertices());
    for (std::size_t i = 0; i < m.facet_count(); ++i)
      CHECK(back.facets()[i].vertex_indices == m.facets()[i].vertex_indices);
    CHECK(back.parts().size() == m.parts().size());
    CHECK(mesh_hash(back) == mesh_hash(m));
  }
}

TEST_CASE("STL errors") {
  SUBCASE("truncated") {
    const std::string full = save_mesh(build_primitive(BoxSpec{1, 1, 10, 0}));
    for (std::size_t cut : {std::size_t{10}, full.size() / 3, full.size() / 2, full.size() - 12}) {
      try {
        load_mesh(std::string_view(full).substr(0, cut));
        FAIL("expected ParseError");
      } catch (const ParseError& e) {
        CHECK(e.line() > 0);
      }
    }
  }
  SUBCASE("bad number") {
    const char* text = "solid t\nfacet normal 0 0 1\nouter loop\nvertex 0 x 0\n";
    try {
      load_mesh(text);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 4);
    }
  }
  SUBCASE("degenerate facet") {
    const char* text =
        "solid t\n"
        "facet normal 0 0 1\nouter loop\nvertex 0 0 0\nvertex 1 0 0\nvertex 0 1 0\nendloop\nendfacet\n"
        "facet normal 0 0 1\nouter loop\nvertex 0 0 0\nvertex 1 0 0\nvertex 2 0 0\nendloop\nendfacet\n"
        "endsolid t\n";
    try {
      load_mesh(text);
      FAIL("expected DegenerateFacetError");
    } catch (const DegenerateFacetError& e) {
      REQUIRE(e.facets().size() == 1);
      CHECK(e.facets()[0] == 1);
    }
  }
}

TEST_CASE("mesh quality") {
  const Mesh prism = build_primitive(BoxSpec{1, 1, 10, 0});
  const auto q = mesh_quality(prism, 1e9);
  CHECK(q.max_edge_m == doctest::Approx(std::sqrt(101.0)).epsilon(1e-14));
  CHECK(q.max_edge_over_lambda == doctest::Approx(std::sqrt(101.0) * 1e9 / kSpeedOfLight).epsilon(1e-14));
  CHECK(q.max_edge_over_lambda == doctest::Approx(33.5).epsilon(1e-3));
  CHECK(q.facet_count == 12);
  CHECK(q.warning);

  const auto p = mesh_quality(build_primitive(PlateSpec{1, 1, 0}), 299.792458e6);
  CHECK(p.max_edge_over_lambda == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));

  const auto q2 = mesh_quality(prism, 2e9);
  CHECK(q2.max_edge_over_lambda == doctest::Approx(2 * q.max_edge_over_lambda).epsilon(1e-15));

  CHECK_THROWS_AS(mesh_quality(Mesh{}, 1e9), InvalidSpecError);
  CHECK_THROWS_AS(mesh_quality(prism, 0.0), InvalidSpecError);
}

TEST_CASE("mesh transforms") {
  const Mesh m = build_primitive(BoxSpec{1, 2, 3, 0});
  const Mesh t = transformed(m, {rotation_z(90), {1, 2, 3}});
  CHECK(t.total_area() == doctest::Approx(m.total_area()));
  check_closed(t);
  const Bounds b = t.bounds();
  CHECK(b.min.x == doctest::Approx(0.0));
  CHECK(b.max.x == doctest::Approx(2.0));
  CHECK(b.min.z == doctest::Approx(3.0));
  CHECK(mesh_hash(t) != mesh_hash(m));
  CHECK(mesh_hash(m) == mesh_hash(build_primitive(BoxSpec{1, 2, 3, 0})));
}

TEST_CASE("scene JSON") {
  using nlohmann::json;
  const json scene = {{"name", "demo"},
                      {"objects",
                       {{{"type", "box"}, {"name", "prism"}, {"width", 1}, {"length", 1}, {"height", 10}},
                        {{"type", "target"}, {"kind", "MSL"}, {"position", {20, 0, 0}}}}}};
  const Mesh m = build_scene(scene);
  CHECK(m.find_part("prism"));
  CHECK(m.find_part("missile"));
  CHECK(m.name() == "demo");

  SUBCASE("errors carry the field path") {
    json bad = scene;
    bad["objects"][0]["height"] = -1;
    try {
      build_scene(bad);
      FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
      CHECK(e.path() == "$.objects[0].height");
    }
    bad = scene;
    bad["objects"][1]["kind"] = "UFO";
    CHECK_THROWS_WITH_AS(build_scene(bad), doctest::Contains("$.objects[1].kind"), ConfigError);
    bad = {{"objects", {{{"type", "stl"}, {"path", "does/not/exist.stl"}}}}};
    try {
      build_scene(bad);
      FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
      CHECK(e.path() == "$.objects[0].path");
    }
    CHECK_THROWS_AS(build_scene(json{{"objects", json::array()}}), ConfigError);
  }
}
