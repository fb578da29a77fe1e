// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 sarforge contributors

#include "sarforge/oracle/scatterers.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "sarforge/core/constants.hpp"
#include "sarforge/core/error.hpp"
#include "sarforge/geometry/angles.hpp"
#include "sarforge/imaging/kspace.hpp"

namespace sarforge::oracle {

using cplx = std::complex<double>;
using geometry::Vector3;

sweep::RunData synth_run(const std::vector<PointScatterer>& scatterers, const sweep::SweepConfig& cfg) {
  if (scatterers.empty()) throw InvalidSpecError("oracle needs at least one scatterer");
  sweep::RunData run = sweep::RunData::shaped(cfg);
  run.mesh_name = "point-scatterers";
  run.mesh_hash = "oracle";
  run.created = "1970-01-01T00:00:00Z";
  const Vector3 tx = geometry::direction_from_angles(cfg.tx_azimuth_deg, cfg.tx_elevation_deg);
  for (std::size_t a = 0; a < run.n_azimuth; ++a) {
    const Vector3 rx = geometry::direction_from_angles(sweep::rx_azimuth_deg(cfg, a), cfg.rx_elevation_deg);
    for (std::size_t f = 0; f < run.n_frequency; ++f) {
      const Vector3 K = (tx + rx) * wavenumber(sweep::frequency_hz(cfg, f));
      cplx s = 0.0;
      for (const auto& p : scatterers) s += p.amplitude * std::polar(1.0, -dot(K, p.position));
      run.at(a, f, sweep::Channel::H) = s;
      run.at(a, f, sweep::Channel::V) = s;
    }
  }
  return run;
}

std::vector<PointScatterer> scatterers_from_json(const nlohmann::json& j, const std::string& path) {
  if (!j.is_array() || j.empty()) throw ConfigError(path, "expected a non-empty array of scatterers");
  std::vector<PointScatterer> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = path + "[" + std::to_string(i) + "]";
    const auto& s = j[i];
    if (!s.is_object() || !s.contains("position")) throw ConfigError(p + ".position", "missing required field");
    const auto& pos = s["position"];
    if (!pos.is_array() || pos.size() != 3 || !pos[0].is_number() || !pos[1].is_number() || !pos[2].is_number())
      throw ConfigError(p + ".position", "expected [x, y, z]");
    PointScatterer ps;
    ps.position = {pos[0].get<double>(), pos[1].get<double>(), pos[2].get<double>()};
    if (s.contains("amplitude")) {
      const auto& a = s["amplitude"];
      if (a.is_number())
        ps.amplitude = a.get<double>();
      else if (a.is_array() && a.size() == 2 && a[0].is_number() && a[1].is_number())
        ps.amplitude = {a[0].get<double>(), a[1].get<double>()};
      else
        throw ConfigError(p + ".amplitude", "expected a number or [re, im]");
    }
    out.push_back(ps);
  }
  return out;
}

nlohmann::json to_json(const std::vector<PointScatterer>& scatterers) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& s : scatterers)
    j.push_back({{"position", {s.position.x, s.position.y, s.position.z}},
                 {"amplitude", {s.amplitude.real(), s.amplitude.imag()}}});
  return j;
}

namespace {

/// Vertex offset of the parabola through (-1, a), (0, b), (1, c), and its height.
std::pair<double, double> parabola(double a, double b, double c) {
  const double den = a - 2.0 * b + c;
  if (!(den < 0.0)) return {0.0, b};
  const double d = std::clamp(0.5 * (a - c) / den, -0.5, 0.5);
  return {d, b - 0.25 * (a - c) * d};
}

}  // namespace

std::vector<ImagePeak> find_peak(const imaging::SarImage& image, const PeakOptions& options) {
  std::vector<ImagePeak> out;
  const std::size_t nx = image.nx, ny = image.ny;
  if (nx == 0 || ny == 0) return out;
  std::vector<double> db(image.pixels.size());
  double best = 0.0;
  for (std::size_t i = 0; i < db.size(); ++i) {
    const double m = std::abs(image.pixels[i]);
    best = std::max(best, m);
    db[i] = m > 0.0 ? 20.0 * std::log10(m) : -std::numeric_limits<double>::infinity();
  }
  if (best == 0.0) return out;
  const double threshold = 20.0 * std::log10(best) + options.floor_db;
  std::vector<std::uint8_t> excluded(db.size(), 0);
  const double r = options.exclusion_radius_px;
  const auto reach = static_cast<std::ptrdiff_t>(std::ceil(r));

  while (out.size() < options.max_peaks) {
    std::size_t arg = db.size();
    for (std::size_t i = 0; i < db.size(); ++i)
      if (!excluded[i] && (arg == db.size() || db[i] > db[arg])) arg = i;
    if (arg == db.size() || !(db[arg] >= threshold)) break;
    const std::size_t ix = arg % nx, iy = arg / nx;

    auto level = [&](std::ptrdiff_t x, std::ptrdiff_t y) {
      x = std::clamp<std::ptrdiff_t>(x, 0, static_cast<std::ptrdiff_t>(nx) - 1);
      y = std::clamp<std::ptrdiff_t>(y, 0, static_cast<std::ptrdiff_t>(ny) - 1);
      const double v = db[static_cast<std::size_t>(y) * nx + static_cast<std::size_t>(x)];
      return std::isfinite(v) ? v : db[arg] - 300.0;
    };
    const auto sx = static_cast<std::ptrdiff_t>(ix), sy = static_cast<std::ptrdiff_t>(iy);
    const auto [ddx, hx] = parabola(level(sx - 1, sy), db[arg], level(sx + 1, sy));
    const auto [ddy, hy] = parabola(level(sx, sy - 1), db[arg], level(sx, sy + 1));
    ImagePeak p;
    p.ix = static_cast<double>(ix) + ddx;
    p.iy = static_cast<double>(iy) + ddy;
    p.amplitude_db = hx + hy - db[arg];
    const auto pos = image.scene_position(p.ix, p.iy);
    p.x_m = pos.x;
    p.y_m = pos.y;
    out.push_back(p);

    for (std::ptrdiff_t y = sy - reach; y <= sy + reach; ++y)
      for (std::ptrdiff_t x = sx - reach; x <= sx + reach; ++x) {
        if (x < 0 || y < 0 || x >= static_cast<std::ptrdiff_t>(nx) || y >= static_cast<std::ptrdiff_t>(ny)) continue;
        if (static_cast<double>((x - sx) * (x - sx) + (y - sy) * (y - sy)) <= r * r)
          excluded[static_cast<std::size_t>(y) * nx + static_cast<std::size_t>(x)] = 1;
      }
  }
  return out;
}

double mainlobe_width_u_m(const imaging::SarImage& image) {
  if (image.pixels.empty()) return 0.0;
  std::size_t best = 0;
  for (std::size_t i = 1; i < image.pixels.size(); ++i)
    if (std::abs(image.pixels[i]) > std::abs(image.pixels[best])) best = i;
  const double peak = std::abs(image.pixels[best]);
  if (peak == 0.0) return 0.0;
  const double half = peak / std::sqrt(2.0);
  const std::size_t ix = best % image.nx, iy = best / image.nx;
  auto mag = [&](std::size_t x) { return std::abs(image.at(x, iy)); };
  std::size_t r = ix;
  while (r + 1 < image.nx && mag(r + 1) >= half) ++r;
  std::size_t l = ix;
  while (l > 0 && mag(l - 1) >= half) --l;
  const double right = r + 1 < image.nx ? r + (mag(r) - half) / (mag(r) - mag(r + 1)) : static_cast<double>(r);
  const double left = l > 0 ? l - (mag(l) - half) / (mag(l) - mag(l - 1)) : static_cast<double>(l);
  return (right - left) * image.dx;
}

void write_peaks_csv(std::ostream& out, const std::vector<ImagePeak>& peaks) {
  out << "rank,x_m,y_m,amplitude_db\n";
  char buf[128];
  for (std::size_t i = 0; i < peaks.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%zu,%.6f,%.6f,%.4f\n", i + 1, peaks[i].x_m, peaks[i].y_m, peaks[i].amplitude_db);
    out << buf;
  }
}

}  // namespace sarforge::oracle
