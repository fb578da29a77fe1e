// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 sarforge contributors

#pragma once

#include <vector>

#include "sarforge/geometry/vector3.hpp"

namespace sarforge::oracle {

/// Broadside PO plate RCS 4 pi (a b)^2 / lambda^2 in dBsm.
double plate_rcs_analytic(double a_m, double b_m, double frequency_hz);

/// Receiver azimuths (deg, [0, 360)) where in-plane scattering peaks are expected: the mirror
/// direction of every face with n . u_tx >= 0, then the forward direction -u_tx.
/// Peaks closer than 1e-6 deg are merged.
std::vector<double> specular_peaks(const std::vector<geometry::Vector3>& face_normals, const geometry::Vector3& tx_dir);

/// Smallest absolute difference between two azimuths in degrees.
double azimuth_distance(double a_deg, double b_deg);

/// Slab test: does the ray origin + t dir, t >= 0, meet the axis-aligned box [lo, hi]?
bool ray_hits_box(const geometry::Vector3& origin, const geometry::Vector3& dir, const geometry::Vector3& lo,
                  const geometry::Vector3& hi);

}  // namespace sarforge::oracle
