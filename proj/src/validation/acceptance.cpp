// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 sarforge contributors

#include "sarforge/validation/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <unistd.h>

#include "sarforge/cli/dataset.hpp"
#include "sarforge/core/constants.hpp"
#include "sarforge/core/error.hpp"
#include "sarforge/geometry/angles.hpp"
#include "sarforge/geometry/primitives.hpp"
#include "sarforge/imaging/clips.hpp"
#include "sarforge/imaging/keystone.hpp"
#include "sarforge/imaging/kspace.hpp"
#include "sarforge/imaging/predict.hpp"
#include "sarforge/oracle/analytic.hpp"
#include "sarforge/oracle/quadrature.hpp"
#include "sarforge/oracle/scatterers.hpp"
#include "sarforge/po/peaks.hpp"
#include "sarforge/po/phase_integral.hpp"
#include "sarforge/po/solver.hpp"
#include "sarforge/sweep/bsar.hpp"

namespace sarforge::validation {

namespace fs = std::filesystem;
using geometry::Vector3;
using cplx = std::complex<double>;

namespace {

class Stopwatch {
 public:
  double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count(); }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string num(double v, const char* f = "%.6g") {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

// Runs body, converting exceptions into a failed result.
CriterionResult guarded(int id, std::string title, const std::function<void(CriterionResult&)>& body) {
  CriterionResult r;
  r.id = id;
  r.title = std::move(title);
  const Stopwatch sw;
  try {
    body(r);
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  r.seconds = sw.seconds();
  return r;
}

void add(CriterionResult& r, std::string name, std::string measured, std::string expected, bool pass) {
  r.rows.push_back({std::move(name), std::move(measured), std::move(expected), pass});
}

po::PlaneWaveExcitation excitation(double az, double el, po::Polarization p, double f = 1e9) {
  po::PlaneWaveExcitation e;
  e.frequency_hz = f;
  e.tx_azimuth_deg = az;
  e.tx_elevation_deg = el;
  e.polarization = p;
  return e;
}

double rel_err(cplx a, cplx b) { return std::abs(a - b) / std::abs(b); }

sweep::SweepConfig oracle_config() {
  sweep::SweepConfig c;
  c.tx_azimuth_deg = 0;
  c.tx_elevation_deg = 15;
  c.rx_elevation_deg = 15;
  return c;
}

imaging::ClipOptions clip_options(const ValidationOptions& o) {
  imaging::ClipOptions c;
  c.keystone.interp_scale_error = o.interp_scale_error;
  return c;
}

}  // namespace

bool CriterionResult::pass() const {
  if (!error.empty() || rows.empty()) return false;
  return std::all_of(rows.begin(), rows.end(), [](const CheckRow& c) { return c.pass; });
}

CriterionResult check_forward_scatter_peaks(const ValidationOptions&) {
  return guarded(1, "three-peak forward scattering (1x1x10 m prism, 1 GHz)", [](CriterionResult& r) {
    const Stopwatch sw;
    const auto prism = geometry::build_primitive(geometry::BoxSpec{1, 1, 10, 0});
    const auto exc = excitation(45, 0, po::Polarization::V);
    std::vector<double> az(500);
    for (std::size_t i = 0; i < az.size(); ++i) az[i] = 0.72 * static_cast<double>(i);
    const auto samples = po::bistatic_rcs_sweep(prism, exc, 0, az);
    std::vector<double> db(samples.size());
    for (std::size_t i = 0; i < db.size(); ++i) db[i] = samples[i].co_dbsm;
    const auto peaks = po::find_prominent_peaks(db, 20.0, true);
    const double t = sw.seconds();

    add(r, "maxima with >= 20 dB prominence", num(static_cast<double>(peaks.size())), "3", peaks.size() == 3);
    for (double want : {135.0, 225.0, 315.0}) {
      double best = 360.0, at = -1.0;
      for (const auto& p : peaks)
        if (oracle::azimuth_distance(az[p.index], want) < best) best = oracle::azimuth_distance(az[p.index], want), at = az[p.index];
      add(r, "peak near " + num(want, "%.0f") + " deg", at < 0 ? "none" : num(at, "%.2f"), num(want, "%.0f") + " +/- 2",
          best <= 2.0);
    }
    const bool fwd_max = !peaks.empty() && oracle::azimuth_distance(az[peaks[0].index], 225.0) <= 2.0;
    add(r, "global maximum", peaks.empty() ? "none" : num(az[peaks[0].index], "%.2f") + " deg", "forward (225 deg)",
        fwd_max);
    std::vector<Vector3> normals;
    for (const auto& f : prism.facets()) normals.push_back(f.normal);
    auto pred = oracle::specular_peaks(normals, po::tx_direction(exc));
    std::sort(pred.begin(), pred.end());
    std::string ptxt;
    for (double p : pred) ptxt += (ptxt.empty() ? "" : " ") + num(p, "%.2f");
    const bool pred_ok = pred.size() == 3 && std::abs(pred[0] - 135) < 1e-6 && std::abs(pred[1] - 225) < 1e-6 &&
                         std::abs(pred[2] - 315) < 1e-6;
    add(r, "reflection-law prediction", ptxt, "135 225 315", pred_ok);
    add(r, "runtime", num(t, "%.3f") + " s", "< 10 s", t < 10.0);
  });
}

CriterionResult check_shadow(const ValidationOptions&) {
  return guarded(2, "hard shadow behind a wall on ground (tx grazing at 5 deg)", [](CriterionResult& r) {
    const Stopwatch sw;
    const auto scene = geometry::build_primitive(geometry::WallOnGroundSpec{});
    const auto exc = excitation(0, 5, po::Polarization::V);
    const auto map = po::illuminate(scene, exc);
    const double t = sw.seconds();

    const auto* ground = scene.find_part("ground");
    const auto* wall = scene.find_part("wall");
    if (!ground || !wall) throw Error("wall-on-ground scene lacks its parts");
    const geometry::Bounds wb = scene.part_bounds(*wall);
    const Vector3 u = po::tx_direction(exc);
    const double h = exc.amplitude / kFreeSpaceImpedance;
    std::size_t occluded = 0, mismatched = 0, nonzero_shadow = 0, lit = 0;
    double worst = 0.0;
    for (std::size_t i = ground->first_facet; i < ground->first_facet + ground->facet_count; ++i) {
      const bool occ = oracle::ray_hits_box(scene.facets()[i].centroid, u, wb.min, wb.max);
      if (bool(map.lit[i]) == occ) ++mismatched;
      if (occ) {
        ++occluded;
        if (!(map.currents[i] == geometry::CVector3{})) ++nonzero_shadow;
      } else {
        ++lit;
        worst = std::max(worst, std::abs(geometry::norm(map.currents[i]) / (2.0 * h) - 1.0));
      }
    }
    add(r, "occluded ground facets (slab oracle)", num(static_cast<double>(occluded)), "> 0", occluded > 0);
    add(r, "lit flag disagreements with oracle", num(static_cast<double>(mismatched)), "0", mismatched == 0);
    add(r, "occluded facets with J != 0", num(static_cast<double>(nonzero_shadow)), "0 (exact)", nonzero_shadow == 0);
    add(r, "lit facets: max | |J|/(2|H|) - 1 |", num(worst, "%.3e") + " over " + num(static_cast<double>(lit)),
        "<= 1e-9", lit > 0 && worst <= 1e-9);
    add(r, "runtime", num(t, "%.3f") + " s", "< 5 s", t < 5.0);
  });
}

CriterionResult check_plate_rcs(const ValidationOptions&) {
  return guarded(3, "plate broadside RCS vs 4 pi A^2 / lambda^2", [](CriterionResult& r) {
    const Stopwatch sw;
    for (double w : {1.0, 2.0}) {
      const auto plate = geometry::build_primitive(geometry::PlateSpec{w, 1, 0});
      const auto s = po::bistatic_rcs_sweep(plate, excitation(0, 90, po::Polarization::H), 90, {0.0});
      const double want = oracle::plate_rcs_analytic(w, 1, 1e9);
      add(r, num(w, "%.0f") + "x1 m plate, 1 GHz", num(s[0].co_dbsm, "%.4f") + " dBsm",
          num(want, "%.4f") + " +/- 0.5 dBsm", std::abs(s[0].co_dbsm - want) <= 0.5);
    }
    const double t = sw.seconds();
    add(r, "runtime", num(t, "%.3f") + " s", "< 1 s", t < 1.0);
  });
}

CriterionResult check_parameter_arithmetic(const ValidationOptions&) {
  return guarded(4, "default parameter arithmetic", [](CriterionResult& r) {
    const sweep::SweepConfig c;
    const auto p = imaging::predict_geometry(c, 36.0, 0.0);
    const double lambda_c = kSpeedOfLight / c.center_frequency_hz;
    const double range_res = kSpeedOfLight / (2.0 * c.bandwidth_hz);
    const double extent = kSpeedOfLight / (2.0 * c.frequency_step_hz);
    const double cr_res = lambda_c / (2.0 * deg_to_rad(36.0));
    const double cr_extent = lambda_c / (2.0 * deg_to_rad(c.rx_azimuth_step_deg));
    add(r, "range resolution = c / 2B", num(p.range_res_m, "%.12f"), num(range_res, "%.12f") + " +/- 1e-9",
        std::abs(p.range_res_m - range_res) <= 1e-9);
    add(r, "range resolution, 3 decimals", num(p.range_res_m, "%.3f") + " m", "0.200 m",
        std::abs(p.range_res_m - 0.200) < 5e-4);
    add(r, "range extent = c / 2 df", num(p.range_extent_m, "%.12f"), num(extent, "%.12f") + " +/- 1e-9",
        std::abs(p.range_extent_m - extent) <= 1e-9);
    add(r, "range extent, 1 decimal", num(p.range_extent_m, "%.1f") + " m", "10.0 m",
        std::abs(p.range_extent_m - 10.0) < 0.05);
    add(r, "cross-range resolution", num(p.crossrange_res_m, "%.12f"), num(cr_res, "%.12f") + " +/- 1e-9 (0.239)",
        std::abs(p.crossrange_res_m - cr_res) <= 1e-9 && std::abs(p.crossrange_res_m - 0.239) < 5e-4);
    add(r, "cross-range extent", num(p.crossrange_extent_m, "%.12f"), num(cr_extent, "%.12f") + " +/- 1e-9 (11.93)",
        std::abs(p.crossrange_extent_m - cr_extent) <= 1e-9 && std::abs(p.crossrange_extent_m - 11.93) < 5e-3);
    const auto nf = sweep::n_frequencies(c), na = sweep::n_azimuths(c);
    add(r, "sample grid (frequencies x azimuths)", std::to_string(nf) + " x " + std::to_string(na), "51 x 500",
        nf == 51 && na == 500);
  });
}

CriterionResult check_point_scatterers(const ValidationOptions& o) {
  return guarded(5, "point-scatterer imaging end to end", [&](CriterionResult& r) {
    const Stopwatch sw;
    const std::vector<oracle::PointScatterer> s{{{0, 0, 0}, 1.0}, {{1, 2, 0}, 0.5}, {{-2, -1, 0}, 1.0}};
    const auto cfg = oracle_config();
    const auto img = imaging::form_clip(oracle::synth_run(s, cfg), 0, clip_options(o));
    const auto peaks = oracle::find_peak(img);
    const double t = sw.seconds();
    const auto pred = imaging::predict_geometry(cfg, 36.0, img.mean_beta_deg);
    add(r, "mean bistatic angle", num(img.mean_beta_deg, "%.2f") + " deg", "<= 30 deg", img.mean_beta_deg <= 30.0);

    const double a = deg_to_rad(img.axis_angle_deg);
    std::vector<double> level(s.size(), -1e300);
    for (std::size_t k = 0; k < s.size(); ++k) {
      const oracle::ImagePeak* best = nullptr;
      double dist = 1e300;
      for (const auto& p : peaks) {
        const double d = std::hypot(p.x_m - s[k].position.x, p.y_m - s[k].position.y);
        if (d < dist) dist = d, best = &p;
      }
      const std::string label = "scatterer (" + num(s[k].position.x) + ", " + num(s[k].position.y) + ")";
      if (!best) {
        add(r, label, "not found", "within one resolution cell", false);
        continue;
      }
      const double ex = best->x_m - s[k].position.x, ey = best->y_m - s[k].position.y;
      const double eu = ex * std::cos(a) + ey * std::sin(a), ev = -ex * std::sin(a) + ey * std::cos(a);
      level[k] = best->amplitude_db;
      add(r, label, "du " + num(eu, "%.3f") + " m, dv " + num(ev, "%.3f") + " m",
          "|du| <= " + num(pred.range_res_m, "%.3f") + ", |dv| <= " + num(pred.crossrange_res_m, "%.3f"),
          std::abs(eu) <= pred.range_res_m && std::abs(ev) <= pred.crossrange_res_m);
    }
    const double ratio = level[0] - level[1];
    add(r, "amplitude ratio 1 : 0.5", num(ratio, "%.2f") + " dB", "6.0 +/- 1 dB", std::abs(ratio - 6.0) <= 1.0);
    add(r, "runtime", num(t, "%.3f") + " s", "< 10 s", t < 10.0);
  });
}

CriterionResult check_bistatic_degradation(const ValidationOptions& o) {
  return guarded(6, "resolution degradation with bistatic angle", [&](CriterionResult& r) {
    auto point_run = [](double center) {
      sweep::SweepConfig c;
      c.tx_azimuth_deg = 0;
      c.tx_elevation_deg = 0;
      c.rx_elevation_deg = 0;
      c.rx_azimuth_start_deg = center - 3.6;
      c.rx_azimuth_end_deg = center + 3.6;
      return oracle::synth_run({{{0, 0, 0}, 1.0}}, c);
    };
    imaging::ClipOptions co = clip_options(o);
    co.swath_deg = 7.92;
    co.nx = co.ny = 512;
    double last = 0.0;
    bool monotone = true;
    for (double beta : {10.0, 60.0, 120.0}) {
      const auto run = point_run(beta);
      const auto img = imaging::form_clip(run, 0, co);
      const double w = oracle::mainlobe_width_u_m(img);
      const double pred = kSpeedOfLight / (2.0 * run.config.bandwidth_hz * std::cos(deg_to_rad(img.mean_beta_deg) / 2));
      add(r, "-3 dB range width at mean beta " + num(img.mean_beta_deg, "%.1f"),
          num(w, "%.4f") + " m (ratio " + num(w / pred, "%.3f") + ")", num(pred, "%.4f") + " m +/- 30%",
          std::abs(w / pred - 1.0) <= 0.3);
      if (w < last) monotone = false;
      last = w;
    }
    add(r, "width non-decreasing in beta", monotone ? "yes" : "no", "yes", monotone);
    const auto run = point_run(177.0);
    const double mean_beta = imaging::extract_patch(run, 0, co.swath_deg).mean_beta_deg();
    std::string outcome = "image formed";
    try {
      imaging::form_clip(run, 0, co);
    } catch (const SupportCollapsedError&) {
      outcome = "support collapsed";
    }
    add(r, "patch at mean beta " + num(mean_beta, "%.2f"), outcome, "support collapsed (beta > 175)",
        mean_beta > 175.0 && outcome == "support collapsed");
  });
}

CriterionResult check_clip_accounting(const ValidationOptions& o) {
  return guarded(7, "clip accounting over a full run", [&](CriterionResult& r) {
    const auto run = oracle::synth_run({{{0, 0, 0}, 1.0}}, oracle_config());
    for (std::size_t stride : {std::size_t{10}, std::size_t{20}}) {
      auto co = clip_options(o);
      co.stride_steps = stride;
      const auto s = imaging::clip_series(run, co);
      const std::size_t want = stride == 10 ? 50 : 25;
      add(r, "swath 36 deg, stride " + std::to_string(stride),
          std::to_string(s.clips.size()) + " clips, " + std::to_string(s.skipped.size()) + " skipped",
          std::to_string(want) + " clips", s.clips.size() == want && s.skipped.empty());
    }
  });
}

CriterionResult check_invariances(const ValidationOptions& o) {
  return guarded(8, "invariance suite", [&](CriterionResult& r) {
    const auto box = geometry::build_primitive(geometry::BoxSpec{1, 2, 0.5, 0.3});
    {
      auto e1 = excitation(30, 20, po::Polarization::V), e2 = e1;
      e2.amplitude = 2.0;
      const po::Solver s(box);
      const auto m1 = s.illuminate(e1), m2 = s.illuminate(e2);
      std::size_t bad = 0, n = 0;
      for (int i = 0; i < 36; ++i, ++n) {
        const auto a = s.far_field(m1, 1e9, 10.0 * i, 20), b = s.far_field(m2, 1e9, 10.0 * i, 20);
        if (!(b.e_h == 2.0 * a.e_h && b.e_v == 2.0 * a.e_v)) ++bad;
      }
      add(r, "linearity: E(2 a) == 2 E(a)", std::to_string(bad) + " of " + std::to_string(n) + " differ", "0 (exact)",
          bad == 0);
    }
    {
      const Vector3 delta{0.3, -0.7, 0.2};
      const auto moved = geometry::transformed(box, {geometry::Matrix3{}, delta});
      const auto exc = excitation(30, 20, po::Polarization::H);
      const po::Solver s0(box), s1(moved);
      const auto c0 = s0.illuminate(exc), c1 = s1.illuminate(exc);
      double worst = 0.0;
      for (int i = 0; i < 36; ++i) {
        const double az = 10.0 * i + 5.0;
        const auto a = s0.far_field(c0, 1e9, az, 15), b = s1.far_field(c1, 1e9, az, 15);
        const Vector3 q = (po::tx_direction(exc) + geometry::direction_from_angles(az, 15)) * wavenumber(1e9);
        const cplx ramp = std::polar(1.0, dot(q, delta));
        if (std::abs(a.e_h) > 0) worst = std::max(worst, rel_err(b.e_h, a.e_h * ramp));
        if (std::abs(a.e_v) > 0) worst = std::max(worst, rel_err(b.e_v, a.e_v * ramp));
      }
      add(r, "translation phase ramp, max relative error", num(worst, "%.3e"), "< 1e-10", worst < 1e-10);
    }
    {
      const auto rotated = geometry::transformed(box, {geometry::rotation_z(90), {}});
      std::vector<double> az, az_rot;
      for (int i = 0; i < 36; ++i) {
        az.push_back(i * 10.0 + 3.0);
        az_rot.push_back(i * 10.0 + 93.0);
      }
      double worst = 0.0;
      for (auto p : {po::Polarization::H, po::Polarization::V}) {
        const auto a = po::bistatic_rcs_sweep(box, excitation(20, 10, p), 10, az);
        const auto b = po::bistatic_rcs_sweep(rotated, excitation(110, 10, p), 10, az_rot);
        for (std::size_t i = 0; i < a.size(); ++i) {
          const double la = std::pow(10.0, a[i].co_dbsm / 10), lb = std::pow(10.0, b[i].co_dbsm / 10);
          worst = std::max(worst, std::abs(la - lb) / la);
        }
      }
      add(r, "rigid rotation, max relative sigma change", num(worst, "%.3e"), "<= 1e-9", worst <= 1e-9);
    }
    {
      const auto run = oracle::synth_run({{{1, 2, 0}, 1.0}, {{-2, -1, 0}, cplx{0.3, -0.4}}}, oracle_config());
      const auto grid = imaging::keystone_resample(imaging::extract_patch(run, 0, 36.0), 128, 128);
      const auto img = imaging::form_image(grid);
      double eg = 0.0, ei = 0.0;
      for (const auto& c : grid.cells) eg += std::norm(c);
      for (const auto& p : img.pixels) ei += std::norm(p);
      const double rel = std::abs(ei - eg) / eg;
      add(r, "Parseval, relative energy difference", num(rel, "%.3e"), "<= 1e-10", rel <= 1e-10);
    }
    {
      const auto opts = clip_options(o);
      const Vector3 delta{2.5, -1.5, 0.0};
      auto locate = [&](const Vector3& at) {
        const auto img = imaging::form_clip(oracle::synth_run({{at, 1.0}}, oracle_config()), 0, opts);
        const auto peaks = oracle::find_peak(img);
        if (peaks.empty()) throw Error("shift theorem: no peak found");
        return std::make_pair(peaks[0], img);
      };
      const auto [p0, img0] = locate({});
      const auto [p1, img1] = locate(delta);
      const auto want = img0.pixel_of(delta.x, delta.y), origin = img0.pixel_of(0, 0);
      const double ex = (p1.ix - p0.ix) - (want.x - origin.x), ey = (p1.iy - p0.iy) - (want.y - origin.y);
      add(r, "shift theorem, peak displacement error", num(ex, "%.3f") + ", " + num(ey, "%.3f") + " px",
          "within 1 px per axis", std::abs(ex) <= 1.0 && std::abs(ey) <= 1.0);
    }
    {
      std::mt19937_64 rng(20260101);
      std::uniform_real_distribution<double> pos(-0.5, 0.5), dir(-1, 1), mag(0, 100);
      double worst = 0.0;
      for (int i = 0; i < 1000; ++i) {
        const std::array<Vector3, 3> c{Vector3{pos(rng), pos(rng), pos(rng)}, Vector3{pos(rng), pos(rng), pos(rng)},
                                       Vector3{pos(rng), pos(rng), pos(rng)}};
        const Vector3 q = normalized(Vector3{dir(rng), dir(rng), dir(rng)}) * mag(rng);
        worst = std::max(worst, rel_err(po::facet_phase_integral(c, q), oracle::quadrature_phase_integral(c, q)));
      }
      add(r, "phase integral vs quadrature, 1000 random triangles", num(worst, "%.3e"), "< 1e-8 relative",
          worst < 1e-8);
    }
  });
}

CriterionResult check_dataset_determinism(const ValidationOptions& o) {
  return guarded(9, "dataset determinism on the MSL demo", [&](CriterionResult& r) {
    const bool own_dir = o.work_dir.empty();
    const fs::path work =
        own_dir ? fs::temp_directory_path() / ("sarforge-validate-" + std::to_string(::getpid())) : o.work_dir;
    fs::remove_all(work);
    cli::ProjectConfig project;
    project.name = "msl_demo";
    project.dataset.targets = {geometry::TargetKind::MSL};
    project.dataset.tx_azimuths_deg = {0.0};
    project.dataset.elevations_deg = {15.0};
    project.dataset.polarizations = {po::Polarization::H};
    cli::DatasetOptions opt;
    opt.interp_scale_error = o.interp_scale_error;
    std::ostringstream log;

    const Stopwatch sw;
    opt.jobs = 1;
    const auto a = cli::cmd_dataset(project, work / "jobs1", opt, log);
    const double t = sw.seconds();
    opt.jobs = o.parallel_jobs;
    const auto b = cli::cmd_dataset(project, work / ("jobs" + std::to_string(o.parallel_jobs)), opt, log);
    const bool same_manifest = sweep::read_file(a.manifest) == sweep::read_file(b.manifest);

    add(r, "runs x clips", std::to_string(a.executed) + " x " + std::to_string(a.clips), "1 x 50",
        a.executed == 1 && a.clips == 50);
    add(r, "tree hash, jobs 1 vs " + std::to_string(o.parallel_jobs), a.tree_hash.substr(0, 16) + " / " + b.tree_hash.substr(0, 16),
        "identical", a.tree_hash == b.tree_hash && !a.tree_hash.empty());
    add(r, "manifest bytes identical", same_manifest ? "yes" : "no", "yes", same_manifest);
    add(r, "runtime (jobs 1)", num(t, "%.2f") + " s", "< 600 s", t < 600.0);
    if (own_dir) fs::remove_all(work);
  });
}

std::vector<CriterionResult> run_all(const ValidationOptions& o,
                                     const std::function<void(const CriterionResult&)>& progress) {
  using Check = CriterionResult (*)(const ValidationOptions&);
  const Check checks[] = {check_forward_scatter_peaks, check_shadow,          check_plate_rcs,
                          check_parameter_arithmetic,  check_point_scatterers, check_bistatic_degradation,
                          check_clip_accounting,       check_invariances,     check_dataset_determinism};
  std::vector<CriterionResult> out;
  for (Check c : checks) {
    out.push_back(c(o));
    if (progress) progress(out.back());
  }
  return out;
}

std::string summary_line(const CriterionResult& r) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%s  criterion %d  %s  (%.2f s)", r.pass() ? "PASS" : "FAIL", r.id, r.title.c_str(),
                r.seconds);
  return buf;
}

void print_table(std::ostream& out, const CriterionResult& r) {
  out << summary_line(r) << "\n";
  if (!r.error.empty()) out << "      error: " << r.error << "\n";
  for (const auto& row : r.rows) {
    char buf[512];
    std::snprintf(buf, sizeof buf, "      [%s] %-48s measured %-34s expected %s\n", row.pass ? "ok" : "!!",
                  row.name.c_str(), row.measured.c_str(), row.expected.c_str());
    out << buf;
  }
}

}  // namespace sarforge::validation
