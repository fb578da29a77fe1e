// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 sarforge contributors

#pragma once

#include "sarforge/sweep/config.hpp"

namespace sarforge::imaging {

struct GeometryPrediction {
  double range_res_m = 0.0;
  double crossrange_res_m = 0.0;
  double range_extent_m = 0.0;
  double crossrange_extent_m = 0.0;
};

/// Textbook resolution and alias-free extent at band center:
///   range_res = c / (2 B cos(beta/2)),  crossrange_res = lambda_c / (2 swath cos(beta/2)),
///   range_extent = c / (2 df),          crossrange_extent = lambda_c / (2 step).
/// Angles in radians inside the formulas. SupportCollapsedError for beta >= 179 deg.
GeometryPrediction predict_geometry(const sweep::SweepConfig& cfg, double swath_deg, double beta_deg);

}  // namespace sarforge::imaging
