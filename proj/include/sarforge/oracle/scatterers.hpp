// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 sarforge contributors

#pragma once

#include <complex>
#include <ostream>
#include <vector>

#include "json.hpp"
#include "sarforge/geometry/vector3.hpp"
#include "sarforge/imaging/image.hpp"
#include "sarforge/sweep/run.hpp"

namespace sarforge::oracle {

/// Isotropic, frequency-flat point scatterer.
struct PointScatterer {
  geometry::Vector3 position;
  std::complex<double> amplitude{1.0, 0.0};
};

/// sample(f, rx) = sum_i A_i exp(-j K(f, tx, rx) . r_i), identical on both channels.
sweep::RunData synth_run(const std::vector<PointScatterer>& scatterers, const sweep::SweepConfig& cfg);

/// [{"position": [x, y, z], "amplitude": a | [re, im]}, ...]
std::vector<PointScatterer> scatterers_from_json(const nlohmann::json& j, const std::string& path = "$");
nlohmann::json to_json(const std::vector<PointScatterer>& scatterers);

struct ImagePeak {
  double x_m = 0.0;
  double y_m = 0.0;
  double amplitude_db = 0.0;  // 20 log10 |pixel|, refined
  double ix = 0.0;            // fractional pixel coordinates
  double iy = 0.0;
};

struct PeakOptions {
  double exclusion_radius_px = 3.0;
  std::size_t max_peaks = 16;
  /// Peaks weaker than this many dB below the strongest are dropped.
  double floor_db = -40.0;
};

/// Greedy maxima extraction: take the strongest remaining pixel, refine position and level with
/// a three-point parabola in dB along each axis, exclude its neighbourhood, repeat.
std::vector<ImagePeak> find_peak(const imaging::SarImage& image, const PeakOptions& options = {});

/// CSV: rank, x_m, y_m, amplitude_db
/// -3 dB mainlobe width in meters along the image u (range) axis, through the brightest pixel.
/// Crossings are located by linear interpolation of |pixel|. Zero for an all-zero image.
double mainlobe_width_u_m(const imaging::SarImage& image);

void write_peaks_csv(std::ostream& out, const std::vector<ImagePeak>& peaks);

}  // namespace sarforge::oracle
