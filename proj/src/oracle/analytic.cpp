// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 sarforge contributors

#include "sarforge/oracle/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sarforge/core/constants.hpp"
#include "sarforge/core/error.hpp"
#include "sarforge/geometry/angles.hpp"

namespace sarforge::oracle {

using geometry::Vector3;

double plate_rcs_analytic(double a_m, double b_m, double frequency_hz) {
  if (!(a_m > 0.0 && b_m > 0.0 && frequency_hz > 0.0)) throw InvalidSpecError("plate dimensions and frequency must be positive");
  const double lambda = wavelength(frequency_hz);
  const double area = a_m * b_m;
  return 10.0 * std::log10(4.0 * kPi * area * area / (lambda * lambda));
}

double azimuth_distance(double a_deg, double b_deg) {
  double d = std::fmod(std::abs(a_deg - b_deg), 360.0);
  return d > 180.0 ? 360.0 - d : d;
}

std::vector<double> specular_peaks(const std::vector<Vector3>& face_normals, const Vector3& tx_dir) {
  std::vector<double> out;
  auto add = [&](const Vector3& dir) {
    const double az = geometry::azimuth_of(dir);
    for (double existing : out)
      if (azimuth_distance(existing, az) < 1e-6) return;
    out.push_back(az);
  };
  for (const Vector3& n : face_normals) {
    const double c = dot(n, tx_dir);
    if (c < -1e-12) continue;
    add(-tx_dir + n * (2.0 * c));
  }
  add(-tx_dir);
  return out;
}

bool ray_hits_box(const Vector3& origin, const Vector3& dir, const Vector3& lo, const Vector3& hi) {
  double t0 = 0.0, t1 = std::numeric_limits<double>::infinity();
  for (int a = 0; a < 3; ++a) {
    if (dir[a] == 0.0) {
      if (origin[a] < lo[a] || origin[a] > hi[a]) return false;
      continue;
    }
    double ta = (lo[a] - origin[a]) / dir[a], tb = (hi[a] - origin[a]) / dir[a];
    if (ta > tb) std::swap(ta, tb);
    t0 = std::max(t0, ta);
    t1 = std::min(t1, tb);
  }
  return t0 <= t1;
}

}  // namespace sarforge::oracle
