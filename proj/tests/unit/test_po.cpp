// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 sarforge contributors

#include <cmath>
#include <random>
#include <sstream>

#include "doctest.h"
#include "sarforge/core/constants.hpp"
#include "sarforge/core/error.hpp"
#include "sarforge/geometry/angles.hpp"
#include "sarforge/geometry/primitives.hpp"
#include "sarforge/oracle/analytic.hpp"
#include "sarforge/oracle/quadrature.hpp"
#include "sarforge/po/peaks.hpp"
#include "sarforge/po/phase_integral.hpp"
#include "sarforge/po/solver.hpp"

using namespace sarforge;
using geometry::Vector3;
using cplx = std::complex<double>;

namespace {

po::PlaneWaveExcitation excitation(double az, double el, po::Polarization p, double f = 1e9) {
  po::PlaneWaveExcitation e;
  e.frequency_hz = f;
  e.tx_azimuth_deg = az;
  e.tx_elevation_deg = el;
  e.polarization = p;
  return e;
}

double rel_err(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("excitation validation") {
  CHECK_NOTHROW(po::validate(excitation(0, 0, po::Polarization::H)));
  auto e = excitation(0, 0, po::Polarization::H);
  e.frequency_hz = 0;
  CHECK_THROWS_AS(po::validate(e), InvalidSpecError);
  e = excitation(0, 0, po::Polarization::H);
  e.amplitude = -1;
  CHECK_THROWS_AS(po::validate(e), InvalidSpecError);
  e = excitation(0, 95, po::Polarization::H);
  CHECK_THROWS_AS(po::validate(e), InvalidSpecError);
  CHECK(po::parse_polarization("V") == po::Polarization::V);
  CHECK_FALSE(po::parse_polarization("X"));
}

TEST_CASE("incident field is transverse with |H| = |E| / eta") {
  for (auto p : {po::Polarization::H, po::Polarization::V}) {
    auto e = excitation(30, 20, p);
    e.amplitude = 3.0;
    const auto inc = po::incident_field(e);
    const Vector3 u = po::tx_direction(e);
    CHECK(std::abs(dot(inc.e, u)) < 1e-15);
    CHECK(std::abs(dot(inc.h, u)) < 1e-15);
    CHECK(norm(inc.e) == doctest::Approx(3.0));
    CHECK(norm(inc.h) == doctest::Approx(3.0 / kFreeSpaceImpedance));
    // Power flows along -u: E x H points away from the transmitter.
    CHECK(dot(cross(inc.e, inc.h), u) < 0.0);
  }
}

TEST_CASE("phase integral at q = 0 is the area") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int i = 0; i < 100; ++i) {
    const std::array<Vector3, 3> c{Vector3{u(rng), u(rng), u(rng)}, Vector3{u(rng), u(rng), u(rng)},
                                   Vector3{u(rng), u(rng), u(rng)}};
    const double area = 0.5 * norm(cross(c[1] - c[0], c[2] - c[0]));
    CHECK(po::facet_phase_integral(c, {}) == cplx(area, 0.0));
    CHECK(po::facet_phase_integral_local(c, {0.1, 0.2, 0.3}, {}, area) == cplx(area, 0.0));
  }
}

TEST_CASE("phase integral on the unit right triangle") {
  const std::array<Vector3, 3> c{Vector3{0, 0, 0}, Vector3{1, 0, 0}, Vector3{0, 1, 0}};
  const Vector3 q{kTwoPi, 0, 0};
  const cplx ref = oracle::quadrature_phase_integral(c, q);
  CHECK(rel_err(po::facet_phase_integral(c, q), ref) < 1e-8);
  // Closed form: integral over x of (1 - x) exp(j 2 pi x) = j / (2 pi).
  CHECK(rel_err(ref, cplx(0.0, 1.0 / kTwoPi)) < 1e-12);
}

TEST_CASE("phase integral with q normal to the facet") {
  const std::array<Vector3, 3> c{Vector3{0.3, 0.1, 2.0}, Vector3{1.5, 0.4, 2.0}, Vector3{0.2, 1.9, 2.0}};
  const double area = 0.5 * norm(cross(c[1] - c[0], c[2] - c[0]));
  const Vector3 q{0, 0, 37.0};
  const cplx v = po::facet_phase_integral(c, q);
  CHECK(std::abs(v) == doctest::Approx(area).epsilon(1e-14));
  CHECK(rel_err(v, area * std::polar(1.0, 37.0 * 2.0)) < 1e-13);
}

TEST_CASE("phase integral matches quadrature on random triangles") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> pos(-0.5, 0.5), dir(-1, 1), mag(0, 100);
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const std::array<Vector3, 3> c{Vector3{pos(rng), pos(rng), pos(rng)}, Vector3{pos(rng), pos(rng), pos(rng)},
                                   Vector3{pos(rng), pos(rng), pos(rng)}};
    const Vector3 q = normalized(Vector3{dir(rng), dir(rng), dir(rng)}) * mag(rng);
    worst = std::max(worst, rel_err(po::facet_phase_integral(c, q), oracle::quadrature_phase_integral(c, q)));
  }
  CHECK(worst < 1e-8);
}

TEST_CASE("phase integral is continuous across the series switch-over") {
  const std::array<Vector3, 3> c{Vector3{0, 0, 0}, Vector3{1, 0, 0}, Vector3{0.4, 0.8, 0}};
  for (double s : {1e-6, 5e-5, 9.9e-5, 1.01e-4, 2e-4, 1e-3}) {
    const Vector3 q{s, 0.3 * s, 0};
    const cplx ref = oracle::quadrature_phase_integral(c, q);
    CHECK(rel_err(po::facet_phase_integral(c, q), ref) < 1e-12);
  }
}

TEST_CASE("plate at normal incidence is lit uniformly") {
  const auto plate = geometry::build_primitive(geometry::PlateSpec{1, 1, 0});
  for (auto p : {po::Polarization::H, po::Polarization::V}) {
    const auto map = po::illuminate(plate, excitation(0, 90, p));
    const double h = 1.0 / kFreeSpaceImpedance;
    REQUIRE(map.lit_count() == 2);
    for (const auto& j : map.currents) CHECK(norm(j) == doctest::Approx(2 * h).epsilon(1e-14));
  }
  // Backside illumination leaves the single-sided plate dark.
  const auto dark = po::illuminate(plate, excitation(0, -90, po::Polarization::H));
  CHECK(dark.lit_count() == 0);
}

TEST_CASE("prism back faces are unlit") {
  const auto prism = geometry::build_primitive(geometry::BoxSpec{1, 1, 10, 0});
  const auto map = po::illuminate(prism, excitation(45, 0, po::Polarization::V));
  std::size_t lit = 0;
  for (std::size_t i = 0; i < prism.facet_count(); ++i) {
    const Vector3 n = prism.facets()[i].normal;
    const bool back = n == Vector3{-1, 0, 0} || n == Vector3{0, -1, 0};
    if (back) CHECK_FALSE(map.lit[i]);
    if (map.lit[i]) {
      ++lit;
      CHECK((n == Vector3{1, 0, 0} || n == Vector3{0, 1, 0}));
    }
  }
  CHECK(lit == 4);
}

TEST_CASE("wall casts a hard shadow on the ground") {
  const geometry::WallOnGroundSpec spec;
  const auto scene = geometry::build_primitive(spec);
  const auto* ground = scene.find_part("ground");
  const auto* wall = scene.find_part("wall");
  REQUIRE(ground);
  REQUIRE(wall);
  const geometry::Bounds wb = scene.part_bounds(*wall);
  for (double el : {0.0, 5.0, 30.0}) {
    const auto exc = excitation(0, el, po::Polarization::V);
    const auto map = po::illuminate(scene, exc);
    const Vector3 u = po::tx_direction(exc);
    const double h = 1.0 / kFreeSpaceImpedance;
    std::size_t shadowed = 0;
    for (std::size_t i = ground->first_facet; i < ground->first_facet + ground->facet_count; ++i) {
      const Vector3 c = scene.facets()[i].centroid;
      const bool occluded = oracle::ray_hits_box(c, u, wb.min, wb.max);
      if (el == 0.0) {
        CHECK_FALSE(map.lit[i]);  // grazing: n . u = 0
        continue;
      }
      CHECK(bool(map.lit[i]) == !occluded);
      if (occluded) {
        ++shadowed;
        CHECK(map.currents[i] == geometry::CVector3{});
      } else {
        CHECK(std::abs(norm(map.currents[i]) / (2 * h) - 1.0) <= 1e-9);
      }
    }
    if (el == 5.0) CHECK(shadowed > 100);
  }
}

TEST_CASE("currents are tangential and exactly zero when shadowed") {
  const auto mesh = geometry::build_primitive(geometry::WallOnGroundSpec{});
  for (auto p : {po::Polarization::H, po::Polarization::V}) {
    const auto map = po::illuminate(mesh, excitation(20, 25, p));
    for (std::size_t i = 0; i < mesh.facet_count(); ++i) {
      const auto& j = map.currents[i];
      if (!map.lit[i]) {
        CHECK(j == geometry::CVector3{});
        continue;
      }
      CHECK(std::abs(dot(j, mesh.facets()[i].normal)) <= 1e-10 * norm(j));
    }
  }
}

TEST_CASE("illuminate rejects an empty mesh") {
  CHECK_THROWS_AS(po::illuminate(geometry::Mesh{}, excitation(0, 0, po::Polarization::H)), InvalidSpecError);
}

TEST_CASE("plate broadside RCS") {
  for (double w : {1.0, 2.0}) {
    const auto plate = geometry::build_primitive(geometry::PlateSpec{w, 1, 0});
    for (auto p : {po::Polarization::H, po::Polarization::V}) {
      const auto r = po::bistatic_rcs_sweep(plate, excitation(0, 90, p), 90, {0.0});
      CHECK(r[0].co_dbsm == doctest::Approx(oracle::plate_rcs_analytic(w, 1, 1e9)).epsilon(1e-9));
    }
  }
  CHECK(oracle::plate_rcs_analytic(1, 1, 1e9) == doctest::Approx(21.46).epsilon(2e-4));
  CHECK(oracle::plate_rcs_analytic(1, 1, 2e9) == doctest::Approx(27.48).epsilon(2e-4));
  CHECK(oracle::plate_rcs_analytic(2, 1, 1e9) == doctest::Approx(27.48).epsilon(2e-4));
  CHECK_THROWS_AS(oracle::plate_rcs_analytic(0, 1, 1e9), InvalidSpecError);
}

TEST_CASE("far field is linear in amplitude") {
  const auto mesh = geometry::build_primitive(geometry::BoxSpec{1, 2, 0.5, 0.3});
  auto e1 = excitation(30, 20, po::Polarization::V);
  auto e2 = e1;
  e2.amplitude = 2.0;
  const po::Solver s(mesh);
  const auto m1 = s.illuminate(e1), m2 = s.illuminate(e2);
  for (double az : {0.0, 100.0, 210.0}) {
    const auto a = s.far_field(m1, 1e9, az, 20), b = s.far_field(m2, 1e9, az, 20);
    CHECK(b.e_h == 2.0 * a.e_h);
    CHECK(b.e_v == 2.0 * a.e_v);
  }
}

TEST_CASE("translation adds a phase ramp") {
  const auto mesh = geometry::build_primitive(geometry::BoxSpec{1, 2, 0.5, 0.3});
  const Vector3 delta{0.3, -0.7, 0.2};
  const auto moved = geometry::transformed(mesh, {geometry::Matrix3{}, delta});
  const auto exc = excitation(30, 20, po::Polarization::H);
  const po::Solver s0(mesh), s1(moved);
  const auto c0 = s0.illuminate(exc), c1 = s1.illuminate(exc);
  REQUIRE(c0.lit == c1.lit);
  for (double az : {10.0, 95.0, 230.0}) {
    const auto a = s0.far_field(c0, 1e9, az, 15), b = s1.far_field(c1, 1e9, az, 15);
    const Vector3 q = (po::tx_direction(exc) + geometry::direction_from_angles(az, 15)) * wavenumber(1e9);
    const cplx ramp = std::polar(1.0, dot(q, delta));
    CHECK(rel_err(b.e_h, a.e_h * ramp) < 1e-10);
    CHECK(rel_err(b.e_v, a.e_v * ramp) < 1e-10);
  }
}

TEST_CASE("far field rejects mismatched frequency") {
  const auto plate = geometry::build_primitive(geometry::PlateSpec{1, 1, 0});
  const po::Solver s(plate);
  const auto m = s.illuminate(excitation(0, 90, po::Polarization::H));
  CHECK_THROWS_AS(s.far_field(m, 1.1e9, 0, 90), InvalidSpecError);
}

TEST_CASE("prism bistatic pattern has three peaks") {
  const auto prism = geometry::build_primitive(geometry::BoxSpec{1, 1, 10, 0});
  std::vector<double> az;
  for (int i = 0; i < 500; ++i) az.push_back(i * 0.72);
  const auto r = po::bistatic_rcs_sweep(prism, excitation(45, 0, po::Polarization::V), 0, az);
  std::vector<double> db;
  for (const auto& s : r) db.push_back(s.co_dbsm);
  const auto peaks = po::find_prominent_peaks(db, 20.0, true);
  REQUIRE(peaks.size() == 3);
  CHECK(oracle::azimuth_distance(az[peaks[0].index], 225) <= 2.0);
  std::vector<double> rest{az[peaks[1].index], az[peaks[2].index]};
  std::sort(rest.begin(), rest.end());
  CHECK(oracle::azimuth_distance(rest[0], 135) <= 2.0);
  CHECK(oracle::azimuth_distance(rest[1], 315) <= 2.0);
}

TEST_CASE("rotating mesh, transmitter and receiver together leaves RCS unchanged") {
  const auto mesh = geometry::build_primitive(geometry::BoxSpec{1, 2, 0.7, 0.4});
  const auto rotated = geometry::transformed(mesh, {geometry::rotation_z(90), {}});
  std::vector<double> az, az_rot;
  for (int i = 0; i < 36; ++i) {
    az.push_back(i * 10.0 + 3.0);
    az_rot.push_back(i * 10.0 + 93.0);
  }
  for (auto p : {po::Polarization::H, po::Polarization::V}) {
    const auto a = po::bistatic_rcs_sweep(mesh, excitation(20, 10, p), 10, az);
    const auto b = po::bistatic_rcs_sweep(rotated, excitation(110, 10, p), 10, az_rot);
    for (std::size_t i = 0; i < a.size(); ++i) {
      const double la = std::pow(10.0, a[i].co_dbsm / 10), lb = std::pow(10.0, b[i].co_dbsm / 10);
      CHECK(std::abs(la - lb) <= 1e-9 * la);
    }
  }
}

TEST_CASE("far field is independent of thread count") {
  const auto mesh = geometry::build_primitive(geometry::WallOnGroundSpec{});
  std::vector<double> az;
  for (int i = 0; i < 40; ++i) az.push_back(i * 9.0);
  const auto a = po::bistatic_rcs_sweep(mesh, excitation(0, 10, po::Polarization::H), 10, az, {}, 1);
  const auto b = po::bistatic_rcs_sweep(mesh, excitation(0, 10, po::Polarization::H), 10, az, {}, 4);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].co_dbsm == b[i].co_dbsm);
    CHECK(a[i].cross_dbsm == b[i].cross_dbsm);
  }
}

TEST_CASE("receiver occlusion removes blocked facets only") {
  const auto mesh = geometry::build_primitive(geometry::WallOnGroundSpec{});
  const po::Solver s(mesh);
  const auto map = s.illuminate(excitation(0, 30, po::Polarization::V));
  // Receiver behind the wall sees less lit ground than one in front of it.
  const auto vis_front = s.receiver_visibility(geometry::direction_from_angles(0, 30));
  const auto vis_back = s.receiver_visibility(geometry::direction_from_angles(180, 30));
  std::size_t front = 0, back = 0;
  for (std::size_t i = 0; i < mesh.facet_count(); ++i) {
    if (!map.lit[i]) continue;
    front += vis_front[i];
    back += vis_back[i];
  }
  CHECK(front == map.lit_count());
  CHECK(back < front);
  po::FarFieldOptions off;
  off.receiver_occlusion = false;
  const auto with = s.far_field(map, 1e9, 180, 30);
  const auto without = s.far_field(map, 1e9, 180, 30, off);
  CHECK(with.e_v != without.e_v);
}

TEST_CASE("current map CSV") {
  const auto plate = geometry::build_primitive(geometry::PlateSpec{1, 1, 0.5});
  const auto map = po::illuminate(plate, excitation(0, 90, po::Polarization::H));
  std::ostringstream out;
  po::write_current_csv(out, plate, map);
  const std::string text = out.str();
  CHECK(text.rfind("facet,cx,cy,cz,", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 1 + static_cast<long>(plate.facet_count()));
}

TEST_CASE("curve prominence") {
  const std::vector<double> v{0, 5, 1, 3, 2, 10, 0};
  auto p = po::find_prominent_peaks(v, 0.0, false);
  REQUIRE(p.size() == 3);
  CHECK(p[0].index == 5);
  CHECK(p[0].prominence == 10);
  CHECK(p[1].index == 1);
  CHECK(p[1].prominence == 4);  // saddle at 1 toward the 10 peak
  CHECK(p[2].index == 3);
  CHECK(p[2].prominence == 1);
  CHECK(po::find_prominent_peaks(v, 2.0, false).size() == 2);
  // Circular: the ends join, so the 5 peak's saddle toward 10 is max(1, 0).
  p = po::find_prominent_peaks(std::vector<double>{4, 0, 5, 1, 10, 1}, 0.0, true);
  REQUIRE(p.size() == 3);
  CHECK(p[1].index == 2);
  CHECK(p[1].prominence == 4);
  CHECK(p[2].index == 0);
  CHECK(p[2].prominence == 3);
  CHECK(po::find_prominent_peaks(std::vector<double>{}, 0.0, true).empty());
}

TEST_CASE("specular peak predictor") {
  const std::vector<Vector3> prism{{1, 0, 0}, {0, 1, 0}, {-1, 0, 0}, {0, -1, 0}};
  auto p = oracle::specular_peaks(prism, geometry::direction_from_angles(45, 0));
  REQUIRE(p.size() == 3);
  CHECK(p[0] == doctest::Approx(315));
  CHECK(p[1] == doctest::Approx(135));
  CHECK(p[2] == doctest::Approx(225));

  p = oracle::specular_peaks(prism, geometry::direction_from_angles(0, 0));
  REQUIRE(p.size() == 2);
  CHECK(p[0] == doctest::Approx(0));
  CHECK(p[1] == doctest::Approx(180));

  p = oracle::specular_peaks({{-1, 0, 0}}, geometry::direction_from_angles(0, 0));
  REQUIRE(p.size() == 1);
  CHECK(p[0] == doctest::Approx(180));
}
