// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 sarforge contributors

#include <cmath>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "sarforge/core/error.hpp"
#include "sarforge/geometry/primitives.hpp"
#include "sarforge/sweep/bsar.hpp"
#include "sarforge/sweep/plan.hpp"
#include "sarforge/sweep/run.hpp"

using namespace sarforge;
using namespace sarforge::sweep;

namespace {

std::filesystem::path temp_dir(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("sarforge_test_" + name);
  std::filesystem::remove_all(p);
  std::filesystem::create_directories(p);
  return p;
}

SweepConfig small_config() {
  SweepConfig c;
  c.bandwidth_hz = 150e6;
  c.rx_azimuth_step_deg = 7.2;
  c.tx_azimuth_deg = 30;
  c.tx_elevation_deg = 10;
  c.rx_elevation_deg = 10;
  return c;
}

}  // namespace

TEST_CASE("default grid is 500 azimuths by 51 frequencies") {
  const SweepConfig c;
  CHECK(n_frequencies(c) == 51);
  CHECK(n_azimuths(c) == 500);
  CHECK(frequency_hz(c, 0) == 625e6);
  CHECK(frequency_hz(c, 50) == 1375e6);
  CHECK(rx_azimuth_deg(c, 499) == doctest::Approx(359.28));
  CHECK(is_full_circle(c));
}

TEST_CASE("partial spans include both ends") {
  SweepConfig c;
  c.rx_azimuth_start_deg = 0;
  c.rx_azimuth_end_deg = 36;
  CHECK(n_azimuths(c) == 51);
  CHECK_FALSE(is_full_circle(c));
}

TEST_CASE("config validation") {
  SweepConfig c;
  c.frequency_step_hz = 14e6;
  CHECK_THROWS_AS(validate(c), InvalidSpecError);
  c = {};
  c.rx_azimuth_step_deg = 0.7;
  CHECK_THROWS_AS(validate(c), InvalidSpecError);
  c = {};
  c.bandwidth_hz = 2.5e9;
  c.frequency_step_hz = 25e6;
  CHECK_THROWS_AS(validate(c), InvalidSpecError);
  c = {};
  c.rx_azimuth_step_deg = -0.72;
  CHECK_THROWS_AS(validate(c), InvalidSpecError);
  c = {};
  c.tx_elevation_deg = 91;
  CHECK_THROWS_AS(validate(c), InvalidSpecError);
}

TEST_CASE("config JSON roundtrip and diagnostics") {
  SweepConfig c = small_config();
  c.tx_polarization = po::Polarization::V;
  CHECK(sweep_config_from_json(to_json(c)) == c);
  try {
    sweep_config_from_json({{"bandwidth_hz", "wide"}}, "$.sweep");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(e.path() == "$.sweep.bandwidth_hz");
  }
  CHECK_THROWS_AS(sweep_config_from_json({{"frequency_step_hz", 14e6}}, "$.sweep"), ConfigError);
  CHECK_THROWS_AS(sweep_config_from_json({{"tx_polarization", "X"}}, "$.sweep"), ConfigError);
  CHECK_THROWS_AS(sweep_config_from_json({{"bandwith_hz", 1}}, "$.sweep"), ConfigError);
}

TEST_CASE("run_sweep illuminates once per frequency") {
  const auto mesh = geometry::build_primitive(geometry::BoxSpec{1, 1, 1, 0});
  std::atomic<std::size_t> calls{0};
  SweepOptions o;
  o.illuminate_calls = &calls;
  o.created = "2026-01-01T00:00:00Z";
  const auto run = run_sweep(mesh, small_config(), o);
  CHECK(calls.load() == n_frequencies(small_config()));
  CHECK(run.n_azimuth == 50);
  CHECK(run.n_frequency == 11);
  CHECK(run.samples.size() == 50 * 11 * 2);
  for (const auto& s : run.samples) CHECK((std::isfinite(s.real()) && std::isfinite(s.imag())));
  CHECK(run.mesh_hash == geometry::mesh_hash(mesh));
}

TEST_CASE("run_sweep is bit-identical for any job count") {
  const auto mesh = geometry::build_primitive(geometry::WallOnGroundSpec{});
  SweepOptions a, b;
  a.jobs = 1;
  b.jobs = 4;
  a.created = b.created = "2026-01-01T00:00:00Z";
  const auto r1 = run_sweep(mesh, small_config(), a);
  const auto r2 = run_sweep(mesh, small_config(), b);
  CHECK(encode_run(r1) == encode_run(r2));
}

TEST_CASE("sphere response is nearly isotropic in azimuth") {
  const auto sphere = geometry::build_primitive(geometry::SphereSpec{0.5, 3});
  SweepConfig c = small_config();
  c.bandwidth_hz = 0;
  c.tx_elevation_deg = 0;
  c.rx_elevation_deg = 0;
  c.rx_azimuth_step_deg = 3.6;
  c.tx_azimuth_deg = 0;
  // Arc around the transmitter, away from the forward lobe.
  c.rx_azimuth_start_deg = -45;
  c.rx_azimuth_end_deg = 45;
  const auto run = run_sweep(sphere, c);
  double lo = 1e300, hi = 0;
  for (std::size_t a = 0; a < run.n_azimuth; ++a) {
    const double m = std::abs(run.at(a, 0, Channel::H)) + std::abs(run.at(a, 0, Channel::V));
    lo = std::min(lo, m);
    hi = std::max(hi, m);
  }
  CHECK(20 * std::log10(hi / lo) < 3.0);
}

TEST_CASE("run file roundtrip") {
  const auto dir = temp_dir("run_io");
  const auto mesh = geometry::build_primitive(geometry::BoxSpec{1, 1, 1, 0});
  SweepOptions o;
  o.created = "2026-02-03T04:05:06Z";
  const auto run = run_sweep(mesh, small_config(), o);
  save_run(run, dir / "run.bsar");
  const auto back = load_run(dir / "run.bsar");
  CHECK(back.samples == run.samples);
  CHECK(back.config == run.config);
  CHECK(back.mesh_hash == run.mesh_hash);
  CHECK(back.created == "2026-02-03T04:05:06Z");

  const auto h = load_run_header(dir / "run.bsar");
  CHECK(h.config == run.config);
  CHECK(h.n_azimuth == run.n_azimuth);

  SUBCASE("corrupted payload byte") {
    std::string bytes = read_file(dir / "run.bsar");
    bytes[bytes.size() - 100] ^= 0x10;
    CHECK_THROWS_AS(decode_run(bytes), ChecksumError);
  }
  SUBCASE("truncation") {
    const std::string bytes = read_file(dir / "run.bsar");
    CHECK_THROWS_AS(decode_run(std::string_view(bytes).substr(0, bytes.size() - 7)), FormatError);
    CHECK_THROWS_AS(decode_run(std::string_view(bytes).substr(0, 12)), FormatError);
  }
  SUBCASE("bad magic and version") {
    std::string bytes = read_file(dir / "run.bsar");
    std::string bad = bytes;
    bad[0] = 'X';
    CHECK_THROWS_AS(decode_run(bad), FormatError);
    auto contents = decode_bsar(bytes);
    std::string v2 = encode_bsar(contents.header, contents.samples);
    const auto pos = v2.find("\"version\":1");
    REQUIRE(pos != std::string::npos);
    v2[pos + 10] = '2';
    CHECK_THROWS_WITH_AS(decode_run(v2), doctest::Contains("version"), FormatError);
  }
  SUBCASE("header-only read ignores payload damage") {
    std::string bytes = read_file(dir / "run.bsar");
    bytes.resize(bytes.size() - 500);
    write_file_atomic(dir / "cut.bsar", bytes);
    CHECK(load_run_header(dir / "cut.bsar").config == run.config);
    CHECK_THROWS_AS(load_run(dir / "cut.bsar"), FormatError);
  }
}

TEST_CASE("sample layout is azimuth-major, frequency-minor, H then V") {
  const auto run = RunData::shaped(small_config());
  CHECK(run.index(0, 0, Channel::H) == 0);
  CHECK(run.index(0, 0, Channel::V) == 1);
  CHECK(run.index(0, 1, Channel::H) == 2);
  CHECK(run.index(1, 0, Channel::H) == 2 * run.n_frequency);
}

TEST_CASE("creation timestamp honours SOURCE_DATE_EPOCH") {
  setenv("SOURCE_DATE_EPOCH", "86400", 1);
  CHECK(creation_timestamp() == "1970-01-02T00:00:00Z");
  unsetenv("SOURCE_DATE_EPOCH");
  CHECK(creation_timestamp().size() == 20);
}

TEST_CASE("dataset plan") {
  const auto tx = default_tx_azimuths();
  CHECK(tx.size() == 24);
  const auto one = plan_dataset({"MSL"}, tx, default_elevations(), {po::Polarization::H});
  CHECK(one.size() == 48);
  const auto full = plan_dataset({"APC", "MBT", "STR", "MSL"}, tx, default_elevations(),
                                 {po::Polarization::H, po::Polarization::V});
  CHECK(full.size() == 384);
  CHECK(plan_dataset({}, tx, default_elevations(), {po::Polarization::H}).empty());
  for (const auto& r : full) CHECK(r.config.rx_elevation_deg == r.config.tx_elevation_deg);
  CHECK(run_directory_name(one[3].config) == "045_10_H");
  SweepConfig odd;
  odd.tx_azimuth_deg = 7.5;
  CHECK(run_directory_name(odd) == "007p50_15_H");
}
