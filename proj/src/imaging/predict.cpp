// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 sarforge contributors

#include "sarforge/imaging/predict.hpp"

#include <cmath>

#include "sarforge/core/constants.hpp"
#include "sarforge/core/error.hpp"

namespace sarforge::imaging {

GeometryPrediction predict_geometry(const sweep::SweepConfig& cfg, double swath_deg, double beta_deg) {
  sweep::validate(cfg);
  if (!(beta_deg >= 0.0)) throw InvalidSpecError("bistatic angle must be non-negative");
  if (beta_deg >= 179.0) throw SupportCollapsedError("resolution unbounded at bistatic angle >= 179 deg");
  if (!(swath_deg > 0.0)) throw InvalidSpecError("swath must be positive");
  if (!(cfg.bandwidth_hz > 0.0)) throw InvalidSpecError("bandwidth must be positive");
  const double ch = std::cos(deg_to_rad(beta_deg) / 2.0);
  const double lambda = wavelength(cfg.center_frequency_hz);
  GeometryPrediction p;
  p.range_res_m = kSpeedOfLight / (2.0 * cfg.bandwidth_hz * ch);
  p.crossrange_res_m = lambda / (2.0 * deg_to_rad(swath_deg) * ch);
  p.range_extent_m = kSpeedOfLight / (2.0 * cfg.frequency_step_hz);
  p.crossrange_extent_m = lambda / (2.0 * deg_to_rad(cfg.rx_azimuth_step_deg));
  return p;
}

}  // namespace sarforge::imaging
