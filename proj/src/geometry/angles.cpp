// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 sarforge contributors

#include "sarforge/geometry/angles.hpp"

#include <cmath>

#include "sarforge/core/constants.hpp"
#include "sarforge/core/error.hpp"

namespace sarforge::geometry {

namespace {

// Exact values on the axes keep axis-aligned geometry free of 6e-17 residue.
void exact_sincos_deg(double deg, double& s, double& c) {
  double wrapped = std::fmod(deg, 360.0);
  if (wrapped < 0.0) wrapped += 360.0;
  if (wrapped == 0.0) {
    s = 0.0;
    c = 1.0;
  } else if (wrapped == 90.0) {
    s = 1.0;
    c = 0.0;
  } else if (wrapped == 180.0) {
    s = 0.0;
    c = -1.0;
  } else if (wrapped == 270.0) {
    s = -1.0;
    c = 0.0;
  } else {
    const double rad = deg_to_rad(wrapped);
    s = std::sin(rad);
    c = std::cos(rad);
  }
}

}  // namespace

Matrix3 rotation_x(double deg) {
  double s, c;
  exact_sincos_deg(deg, s, c);
  Matrix3 r;
  r.m[1][1] = c;
  r.m[1][2] = -s;
  r.m[2][1] = s;
  r.m[2][2] = c;
  return r;
}

Matrix3 rotation_y(double deg) {
  double s, c;
  exact_sincos_deg(deg, s, c);
  Matrix3 r;
  r.m[0][0] = c;
  r.m[0][2] = s;
  r.m[2][0] = -s;
  r.m[2][2] = c;
  return r;
}

Matrix3 rotation_z(double deg) {
  double s, c;
  exact_sincos_deg(deg, s, c);
  Matrix3 r;
  r.m[0][0] = c;
  r.m[0][1] = -s;
  r.m[1][0] = s;
  r.m[1][1] = c;
  return r;
}

Matrix3 rotation_xyz(double x_deg, double y_deg, double z_deg) {
  return rotation_z(z_deg) * (rotation_y(y_deg) * rotation_x(x_deg));
}

Vector3 direction_from_angles(double azimuth_deg, double elevation_deg) {
  if (!(elevation_deg >= -90.0 && elevation_deg <= 90.0))
    throw InvalidSpecError("elevation must lie in [-90, 90] degrees");
  double saz, caz, sel, cel;
  exact_sincos_deg(azimuth_deg, saz, caz);
  exact_sincos_deg(elevation_deg, sel, cel);
  return {cel * caz, cel * saz, sel};
}

double azimuth_of(const Vector3& dir) {
  double az = rad_to_deg(std::atan2(dir.y, dir.x));
  if (az < 0.0) az += 360.0;
  if (az >= 360.0) az -= 360.0;
  return az;
}

double elevation_of(const Vector3& dir) {
  return rad_to_deg(std::atan2(dir.z, std::hypot(dir.x, dir.y)));
}

PolarizationBasis polarization_basis(double azimuth_deg, double elevation_deg) {
  double saz, caz, sel, cel;
  exact_sincos_deg(azimuth_deg, saz, caz);
  exact_sincos_deg(elevation_deg, sel, cel);
  PolarizationBasis b;
  b.h = {-saz, caz, 0.0};
  b.v = {-sel * caz, -sel * saz, cel};
  return b;
}

}  // namespace sarforge::geometry
