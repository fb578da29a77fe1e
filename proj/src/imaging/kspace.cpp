// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 sarforge contributors

#include "sarforge/imaging/kspace.hpp"

#include <algorithm>
#include <cmath>

#include "sarforge/core/constants.hpp"
#include "sarforge/core/error.hpp"
#include "sarforge/geometry/angles.hpp"

namespace sarforge::imaging {

using geometry::Vector3;

KCoord kspace_coords(const Vector3& tx_dir, const Vector3& rx_dir, double frequency_hz) {
  const double k = wavenumber(frequency_hz);
  const Vector3 K = (tx_dir + rx_dir) * k;
  KCoord out;
  out.kx = K.x;
  out.ky = K.y;
  out.k_magnitude = norm(K);
  out.beta_deg = rad_to_deg(std::acos(std::clamp(dot(tx_dir, rx_dir), -1.0, 1.0)));
  return out;
}

double KSpacePatch::mean_beta_deg() const {
  double s = 0.0;
  for (const auto& k : samples) s += k.beta_deg;
  return samples.empty() ? 0.0 : s / static_cast<double>(samples.size());
}

double KSpacePatch::mean_cos_half_beta() const {
  double s = 0.0;
  for (const auto& k : samples) s += std::cos(deg_to_rad(k.beta_deg) / 2.0);
  return samples.empty() ? 0.0 : s / static_cast<double>(samples.size());
}

double KSpacePatch::center_azimuth_deg() const {
  return sweep::rx_azimuth_deg(config, start_index) +
         0.5 * static_cast<double>(n_columns - 1) * config.rx_azimuth_step_deg;
}

std::size_t swath_columns(const sweep::SweepConfig& cfg, double swath_deg) {
  const double r = swath_deg / cfg.rx_azimuth_step_deg;
  const double rounded = std::round(r);
  if (!(std::abs(r - rounded) <= 1e-9)) throw InvalidSpecError("swath is not a multiple of the azimuth step");
  if (rounded < 1.0) throw InvalidSpecError("swath must span at least one azimuth step");
  return static_cast<std::size_t>(rounded);
}

KSpacePatch extract_patch(const sweep::RunData& run, std::size_t start_index, double swath_deg,
                          sweep::Channel channel) {
  const std::size_t cols = swath_columns(run.config, swath_deg);
  if (start_index >= run.n_azimuth) throw InvalidSpecError("patch start index outside the run");
  const bool wrap = sweep::is_full_circle(run.config);
  if (cols > run.n_azimuth) throw InvalidSpecError("swath wider than the run");
  if (!wrap && start_index + cols > run.n_azimuth) throw InvalidSpecError("swath overruns a partial-circle run");

  KSpacePatch p;
  p.config = run.config;
  p.mesh_hash = run.mesh_hash;
  p.channel = channel;
  p.start_index = start_index;
  p.n_columns = cols;
  p.n_frequency = run.n_frequency;
  p.swath_deg = swath_deg;
  for (std::size_t f = 0; f < run.n_frequency; ++f) p.frequencies_hz.push_back(sweep::frequency_hz(run.config, f));

  const Vector3 tx = geometry::direction_from_angles(run.config.tx_azimuth_deg, run.config.tx_elevation_deg);
  p.samples.reserve(cols * run.n_frequency);
  for (std::size_t c = 0; c < cols; ++c) {
    const std::size_t a = (start_index + c) % run.n_azimuth;
    // Unwrapped azimuth keeps the column angles monotonic across 360.
    const double az = sweep::rx_azimuth_deg(run.config, start_index) + static_cast<double>(c) * run.config.rx_azimuth_step_deg;
    p.azimuth_indices.push_back(a);
    p.azimuths_deg.push_back(az);
    const Vector3 rx = geometry::direction_from_angles(az, run.config.rx_elevation_deg);
    for (std::size_t f = 0; f < run.n_frequency; ++f) {
      const KCoord k = kspace_coords(tx, rx, p.frequencies_hz[f]);
      p.samples.push_back({k.kx, k.ky, k.beta_deg, run.at(a, f, channel)});
    }
  }
  return p;
}

}  // namespace sarforge::imaging
