// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 sarforge contributors

#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace sarforge::po {

struct CurvePeak {
  std::size_t index = 0;
  double value = 0.0;
  double prominence = 0.0;  // height above the highest saddle toward any higher sample
};

/// Local maxima of a sampled curve (e.g. RCS in dB) with topographic prominence of at least
/// min_prominence, sorted by descending value. `circular` joins the last sample to the first.
/// The global maximum's prominence is its height above the curve minimum.
std::vector<CurvePeak> find_prominent_peaks(std::span<const double> values, double min_prominence, bool circular);

}  // namespace sarforge::po
