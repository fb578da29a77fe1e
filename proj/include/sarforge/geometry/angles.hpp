// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 sarforge contributors

#pragma once

#include "sarforge/geometry/vector3.hpp"

namespace sarforge::geometry {

/// Unit vector from the scene origin toward (azimuth, elevation).
/// Azimuth is counter-clockwise from +x in the ground plane and wraps mod 360;
/// elevation is measured from the ground plane toward +z and must lie in [-90, 90].
Vector3 direction_from_angles(double azimuth_deg, double elevation_deg);

/// Azimuth in [0, 360) of the ground projection of `dir`.
double azimuth_of(const Vector3& dir);

/// Elevation in [-90, 90] of `dir`.
double elevation_of(const Vector3& dir);

/// Polarization unit vectors for a direction given by (azimuth, elevation).
///   h: horizontal, (-sin az, cos az, 0)
///   v: vertical, r x h, in the vertical plane through r and pointing up
struct PolarizationBasis {
  Vector3 h;
  Vector3 v;
};

PolarizationBasis polarization_basis(double azimuth_deg, double elevation_deg);

}  // namespace sarforge::geometry
