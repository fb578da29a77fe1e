// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 sarforge contributors

#include <cmath>
#include <sstream>

#include "doctest.h"
#include "sarforge/core/constants.hpp"
#include "sarforge/core/error.hpp"
#include "sarforge/geometry/angles.hpp"
#include "sarforge/imaging/clips.hpp"
#include "sarforge/oracle/analytic.hpp"
#include "sarforge/oracle/scatterers.hpp"

using namespace sarforge;
using namespace sarforge::oracle;
using cplx = std::complex<double>;

namespace {

sweep::SweepConfig small() {
  sweep::SweepConfig c;
  c.bandwidth_hz = 150e6;
  c.rx_azimuth_step_deg = 7.2;
  c.tx_azimuth_deg = 10;
  c.tx_elevation_deg = 15;
  c.rx_elevation_deg = 15;
  return c;
}

}  // namespace

TEST_CASE("synth_run phase is -K.r at every node") {
  const geometry::Vector3 r{1, 2, 0};
  const auto cfg = small();
  const auto run = synth_run({{r, 1.0}}, cfg);
  const auto tx = geometry::direction_from_angles(cfg.tx_azimuth_deg, cfg.tx_elevation_deg);
  for (std::size_t a = 0; a < run.n_azimuth; ++a)
    for (std::size_t f = 0; f < run.n_frequency; ++f) {
      const auto rx = geometry::direction_from_angles(sweep::rx_azimuth_deg(cfg, a), cfg.rx_elevation_deg);
      const double k = 2 * kPi * sweep::frequency_hz(cfg, f) / kSpeedOfLight;
      const double phase = -k * dot(tx + rx, r);
      CHECK(std::abs(run.at(a, f, sweep::Channel::H) - cplx(std::cos(phase), std::sin(phase))) < 1e-12);
      CHECK(run.at(a, f, sweep::Channel::V) == run.at(a, f, sweep::Channel::H));
    }
}

TEST_CASE("synth_run superposes") {
  const PointScatterer a{{1, 2, 0}, 1.0}, b{{-2, 0.5, 0.3}, cplx{0.2, 0.7}};
  const auto ra = synth_run({a}, small()), rb = synth_run({b}, small()), rab = synth_run({a, b}, small());
  for (std::size_t i = 0; i < rab.samples.size(); ++i) CHECK(rab.samples[i] == ra.samples[i] + rb.samples[i]);
  CHECK_THROWS_AS(synth_run({}, small()), InvalidSpecError);
}

TEST_CASE("scatterer JSON") {
  const auto j = nlohmann::json::parse(R"([{"position": [1, 2, 0]}, {"position": [0, 0, 1], "amplitude": [0.5, -1]}])");
  const auto s = scatterers_from_json(j);
  REQUIRE(s.size() == 2);
  CHECK(s[0].amplitude == cplx{1, 0});
  CHECK(s[1].amplitude == cplx{0.5, -1});
  CHECK(scatterers_from_json(to_json(s))[1].position == s[1].position);
  try {
    scatterers_from_json(nlohmann::json::parse(R"([{"position": [1, 2]}])"), "$.scatterers");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(e.path() == "$.scatterers[0].position");
  }
  CHECK_THROWS_AS(scatterers_from_json(nlohmann::json::array()), ConfigError);
}

TEST_CASE("find_peak on an all-zero image is empty") {
  imaging::SarImage img;
  img.nx = img.ny = 8;
  img.dx = img.dy = 0.1;
  img.pixels.assign(64, cplx{});
  CHECK(find_peak(img).empty());
}

TEST_CASE("find_peak separates two scatterers 1 m apart") {
  sweep::SweepConfig c;
  c.tx_azimuth_deg = 0;
  c.tx_elevation_deg = 15;
  c.rx_elevation_deg = 15;
  const auto run = synth_run({{{0.5, 0, 0}, 0.5}, {{-0.5, 0, 0}, 1.0}}, c);
  const auto img = imaging::form_clip(run, 0, {});
  const auto peaks = find_peak(img);
  REQUIRE(peaks.size() >= 2);
  CHECK(std::hypot(peaks[0].x_m + 0.5, peaks[0].y_m) < img.range_resolution_m);
  CHECK(std::hypot(peaks[1].x_m - 0.5, peaks[1].y_m) < img.range_resolution_m);
  CHECK(peaks[0].amplitude_db > peaks[1].amplitude_db);

  std::ostringstream csv;
  write_peaks_csv(csv, peaks);
  CHECK(csv.str().rfind("rank,x_m,y_m,amplitude_db\n1,", 0) == 0);
}

TEST_CASE("separated scatterers are all recovered up to 120 degrees") {
  const std::vector<PointScatterer> s{{{0, 0, 0}, 1.0}, {{1.5, 1.0, 0}, 1.0}, {{-1.5, 2.0, 0}, 1.0}};
  for (double beta : {10.0, 60.0, 120.0}) {
    CAPTURE(beta);
    sweep::SweepConfig c;
    c.tx_azimuth_deg = 0;
    c.tx_elevation_deg = 0;
    c.rx_elevation_deg = 0;
    c.rx_azimuth_start_deg = beta - 18;
    c.rx_azimuth_end_deg = beta + 18;
    imaging::ClipOptions o;
    const auto img = imaging::form_clip(synth_run(s, c), 0, o);
    const double cell = std::max(img.range_resolution_m, img.crossrange_resolution_m);
    const auto peaks = find_peak(img, {3, 16, -20});
    for (const auto& p : s) {
      double best = 1e9;
      for (const auto& q : peaks) best = std::min(best, std::hypot(q.x_m - p.position.x, q.y_m - p.position.y));
      CHECK(best <= cell);
    }
  }
}

TEST_CASE("analytic plate RCS") {
  CHECK(plate_rcs_analytic(1, 1, 1e9) == doctest::Approx(21.46).epsilon(2e-4));
  CHECK(plate_rcs_analytic(1, 1, 2e9) - plate_rcs_analytic(1, 1, 1e9) == doctest::Approx(6.0206).epsilon(1e-4));
  CHECK(plate_rcs_analytic(2, 1, 1e9) == doctest::Approx(plate_rcs_analytic(1, 1, 2e9)));
}
