// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 sarforge contributors

#include "sarforge/cli/commands.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "sarforge/core/digest.hpp"
#include "sarforge/core/error.hpp"
#include "sarforge/geometry/angles.hpp"
#include "sarforge/imaging/clips.hpp"
#include "sarforge/imaging/predict.hpp"
#include "sarforge/imaging/render.hpp"
#include "sarforge/oracle/analytic.hpp"
#include "sarforge/sweep/bsar.hpp"

namespace sarforge::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

po::PlaneWaveExcitation center_excitation(const sweep::SweepConfig& cfg) {
  po::PlaneWaveExcitation e;
  e.frequency_hz = cfg.center_frequency_hz;
  e.tx_azimuth_deg = cfg.tx_azimuth_deg;
  e.tx_elevation_deg = cfg.tx_elevation_deg;
  e.polarization = cfg.tx_polarization;
  return e;
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

std::string json_text(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

RcsReport cmd_rcs(const ProjectConfig& project, const fs::path& out_dir, unsigned jobs) {
  const geometry::Mesh mesh = build_project_scene(project);
  const sweep::SweepConfig& cfg = project.sweep;
  sweep::validate(cfg);
  const auto exc = center_excitation(cfg);
  std::vector<double> az(sweep::n_azimuths(cfg));
  for (std::size_t i = 0; i < az.size(); ++i) az[i] = sweep::rx_azimuth_deg(cfg, i);

  po::FarFieldOptions ff;
  ff.receiver_occlusion = project.receiver_occlusion;
  RcsReport r;
  r.samples = po::bistatic_rcs_sweep(mesh, exc, cfg.rx_elevation_deg, az, ff, jobs);
  std::vector<double> co(r.samples.size());
  for (std::size_t i = 0; i < co.size(); ++i) co[i] = r.samples[i].co_dbsm;
  r.peaks = po::find_prominent_peaks(co, project.rcs.min_prominence_db, sweep::is_full_circle(cfg));

  if (cfg.tx_elevation_deg == 0.0 && cfg.rx_elevation_deg == 0.0) {
    std::vector<geometry::Vector3> normals;
    for (const auto& f : mesh.facets()) normals.push_back(f.normal);
    r.predicted_azimuths_deg = oracle::specular_peaks(normals, po::tx_direction(exc));
  }
  if (project.rcs.reference_plate_m) {
    const po::Solver solver(mesh);
    const auto map = solver.illuminate(exc);
    const auto e = solver.far_field(map, exc.frequency_hz, cfg.tx_azimuth_deg, cfg.tx_elevation_deg, ff);
    const auto co_e = cfg.tx_polarization == po::Polarization::H ? e.e_h : e.e_v;
    r.monostatic_dbsm = po::to_dbsm(po::rcs_linear(co_e, exc.amplitude));
    const auto [a, b] = *project.rcs.reference_plate_m;
    r.analytic_plate_dbsm = oracle::plate_rcs_analytic(a, b, exc.frequency_hz);
  }

  std::ostringstream csv;
  csv << "rx_azimuth_deg,rx_elevation_deg,co_dbsm,cross_dbsm\n";
  char buf[160];
  for (const auto& s : r.samples) {
    std::snprintf(buf, sizeof buf, "%.6f,%.6f,%.6f,%.6f\n", s.rx_azimuth_deg, s.rx_elevation_deg, s.co_dbsm,
                  s.cross_dbsm);
    csv << buf;
  }
  fs::create_directories(out_dir);
  r.csv_path = out_dir / "rcs.csv";
  sweep::write_file_atomic(r.csv_path, csv.str());
  return r;
}

void print_rcs_summary(std::ostream& out, const RcsReport& r) {
  out << "samples: " << r.samples.size() << "\n";
  out << "peaks (prominence >= threshold): " << r.peaks.size() << "\n";
  out << "  rank  azimuth_deg  co_dbsm  prominence_db  nearest_prediction_deg\n";
  for (std::size_t i = 0; i < r.peaks.size(); ++i) {
    const auto& p = r.peaks[i];
    const double az = r.samples[p.index].rx_azimuth_deg;
    char buf[160];
    std::string near = "-";
    if (!r.predicted_azimuths_deg.empty()) {
      double best = 360.0, at = 0.0;
      for (double q : r.predicted_azimuths_deg)
        if (oracle::azimuth_distance(az, q) < best) best = oracle::azimuth_distance(az, q), at = q;
      near = fmt("%.2f", at);
    }
    std::snprintf(buf, sizeof buf, "  %4zu  %11.2f  %7.2f  %13.2f  %s\n", i + 1, az, p.value, p.prominence,
                  near.c_str());
    out << buf;
  }
  if (!r.predicted_azimuths_deg.empty()) {
    out << "predicted (reflection law + forward):";
    for (double q : r.predicted_azimuths_deg) out << " " << fmt("%.2f", q);
    out << "\n";
  }
  if (r.monostatic_dbsm && r.analytic_plate_dbsm)
    out << "broadside: " << fmt("%.3f", *r.monostatic_dbsm) << " dBsm, closed form "
        << fmt("%.3f", *r.analytic_plate_dbsm) << " dBsm, difference "
        << fmt("%.3f", *r.monostatic_dbsm - *r.analytic_plate_dbsm) << " dB\n";
  out << "csv: " << r.csv_path.string() << "\n";
}

ShadowReport cmd_shadowmap(const ProjectConfig& project, const fs::path& out_dir) {
  const geometry::Mesh mesh = build_project_scene(project);
  const geometry::Part* ground = mesh.find_part("ground");
  if (!ground || ground->facet_count == 0) throw ConfigError("$.scene", "scene has no ground patch");
  const auto map = po::illuminate(mesh, center_excitation(project.sweep));
  ShadowReport r;
  r.ground_facets = ground->facet_count;
  for (std::size_t i = ground->first_facet; i < ground->first_facet + ground->facet_count; ++i) {
    if (map.lit[i]) {
      ++r.ground_lit;
    } else {
      ++r.ground_shadowed;
      r.max_shadowed_current = std::max(r.max_shadowed_current, geometry::norm(map.currents[i]));
    }
  }
  std::ostringstream csv;
  po::write_current_csv(csv, mesh, map);
  fs::create_directories(out_dir);
  r.csv_path = out_dir / "currents.csv";
  sweep::write_file_atomic(r.csv_path, csv.str());
  return r;
}

fs::path cmd_sweep(const ProjectConfig& project, const fs::path& out_dir, unsigned jobs) {
  const geometry::Mesh mesh = build_project_scene(project);
  sweep::SweepOptions o;
  o.jobs = jobs;
  o.receiver_occlusion = project.receiver_occlusion;
  const auto run = sweep::run_sweep(mesh, project.sweep, o);
  fs::create_directories(out_dir);
  const fs::path path = out_dir / "run.bsar";
  sweep::save_run(run, path);
  return path;
}

ClipWriteResult write_clips(const sweep::RunData& run, const ImagingDefaults& imaging, const fs::path& dir,
                            const json& provenance, unsigned jobs, double interp_scale_error) {
  imaging::ClipOptions o;
  o.swath_deg = imaging.swath_deg;
  o.stride_steps = imaging.stride_steps;
  o.nx = imaging.nx;
  o.ny = imaging.ny;
  o.window = imaging.window;
  o.channel = imaging_channel(imaging.channel, run.config.tx_polarization);
  o.keystone.interp_scale_error = interp_scale_error;
  o.jobs = jobs;
  const auto series = imaging::clip_series(run, o);
  const auto starts = imaging::clip_starts(run, o.swath_deg, o.stride_steps);

  fs::create_directories(dir);
  ClipWriteResult res;
  json index = json::array();
  json skipped = json::array();
  for (const auto& s : series.skipped) skipped.push_back({{"start_index", s.start_index}, {"reason", s.reason}});

  for (const auto& clip : series.clips) {
    const std::size_t n = static_cast<std::size_t>(
        std::find(starts.begin(), starts.end(), clip.start_index) - starts.begin());
    char stem[16];
    std::snprintf(stem, sizeof stem, "%03zu", n);
    const std::string png = std::string(stem) + ".png", side = std::string(stem) + ".json";
    const std::string png_bytes = imaging::encode_png16(clip.image, imaging.floor_db);

    json meta = imaging::image_metadata(clip.image);
    meta["clip"] = n;
    meta["start_index"] = clip.start_index;
    meta["end_index"] = clip.end_index;
    meta["rx_azimuth_start_deg"] = sweep::rx_azimuth_deg(run.config, clip.start_index);
    meta["rx_azimuth_end_deg"] = sweep::rx_azimuth_deg(run.config, clip.end_index);
    meta["swath_deg"] = o.swath_deg;
    meta["stride_steps"] = o.stride_steps;
    meta["channel"] = std::string(1, "HV"[static_cast<std::size_t>(o.channel)]);
    meta["degraded"] = clip.degraded;
    meta["floor_db"] = imaging.floor_db;
    try {
      const auto p = imaging::predict_geometry(run.config, o.swath_deg, clip.image.mean_beta_deg);
      meta["predicted_range_resolution_m"] = p.range_res_m;
      meta["predicted_crossrange_resolution_m"] = p.crossrange_res_m;
    } catch (const SupportCollapsedError&) {
      meta["predicted_range_resolution_m"] = nullptr;
      meta["predicted_crossrange_resolution_m"] = nullptr;
    }
    meta["png"] = png;
    meta["png_rows"] = "top row is iy = ny - 1; 16-bit gray, dB above floor_db scaled to full range";
    meta["png_sha256"] = sha256_hex(png_bytes);
    meta["provenance"] = provenance;
    const std::string side_bytes = json_text(meta);

    sweep::write_file_atomic(dir / png, png_bytes);
    sweep::write_file_atomic(dir / side, side_bytes);
    res.files.push_back(png);
    res.files.push_back(side);
    index.push_back({{"clip", n},
                     {"start_index", clip.start_index},
                     {"end_index", clip.end_index},
                     {"degraded", clip.degraded},
                     {"png", png},
                     {"png_sha256", sha256_hex(png_bytes)},
                     {"json", side},
                     {"json_sha256", sha256_hex(side_bytes)}});
    ++res.clips;
    if (clip.degraded) ++res.degraded;
  }
  res.skipped = series.skipped.size();
  json idx{{"provenance", provenance}, {"clips", index}, {"skipped", skipped}};
  sweep::write_file_atomic(dir / "index.json", json_text(idx));
  res.files.push_back("index.json");
  return res;
}

ClipWriteResult cmd_image(const ProjectConfig& project, const fs::path& run_path, const fs::path& out_dir,
                          unsigned jobs, double interp_scale_error) {
  const auto run = sweep::load_run(run_path);
  json prov{{"mesh_name", run.mesh_name}, {"mesh_hash", run.mesh_hash}, {"run_sha256", sha256_file(run_path)}};
  return write_clips(run, project.imaging, out_dir / "clips", prov, jobs, interp_scale_error);
}

}  // namespace sarforge::cli
