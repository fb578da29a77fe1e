// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 sarforge contributors

#pragma once

#include <cmath>
#include <complex>

namespace sarforge::geometry {

/// Cartesian vector. x-y is the ground plane, z is up. Meters, or dimensionless for directions.
struct Vector3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Vector3& operator+=(const Vector3& o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  constexpr Vector3& operator-=(const Vector3& o) {
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
  }
  constexpr Vector3& operator*=(double s) {
    x *= s;
    y *= s;
    z *= s;
    return *this;
  }

  constexpr double operator[](int axis) const { return axis == 0 ? x : (axis == 1 ? y : z); }

  friend constexpr bool operator==(const Vector3&, const Vector3&) = default;
};

constexpr Vector3 operator+(Vector3 a, const Vector3& b) { return a += b; }
constexpr Vector3 operator-(Vector3 a, const Vector3& b) { return a -= b; }
constexpr Vector3 operator-(const Vector3& a) { return {-a.x, -a.y, -a.z}; }
constexpr Vector3 operator*(Vector3 a, double s) { return a *= s; }
constexpr Vector3 operator*(double s, Vector3 a) { return a *= s; }
constexpr Vector3 operator/(const Vector3& a, double s) { return {a.x / s, a.y / s, a.z / s}; }

constexpr double dot(const Vector3& a, const Vector3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

constexpr Vector3 cross(const Vector3& a, const Vector3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(const Vector3& a) { return std::sqrt(dot(a, a)); }

inline Vector3 normalized(const Vector3& a) { return a / norm(a); }

inline bool is_finite(const Vector3& a) {
  return std::isfinite(a.x) && std::isfinite(a.y) && std::isfinite(a.z);
}

/// Complex-valued vector (phasor currents and fields).
struct CVector3 {
  std::complex<double> x;
  std::complex<double> y;
  std::complex<double> z;

  CVector3& operator+=(const CVector3& o) {
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  friend bool operator==(const CVector3&, const CVector3&) = default;
};

inline CVector3 operator*(const Vector3& v, std::complex<double> s) { return {v.x * s, v.y * s, v.z * s}; }
inline CVector3 operator*(const CVector3& v, std::complex<double> s) { return {v.x * s, v.y * s, v.z * s}; }

/// Bilinear (non-conjugating) projection of a complex vector onto a real direction.
inline std::complex<double> dot(const CVector3& a, const Vector3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline double norm(const CVector3& a) {
  return std::sqrt(std::norm(a.x) + std::norm(a.y) + std::norm(a.z));
}

/// 3x3 rotation, row-major.
struct Matrix3 {
  double m[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};

  Vector3 operator*(const Vector3& v) const {
    return {m[0][0] * v.x + m[0][1] * v.y + m[0][2] * v.z, m[1][0] * v.x + m[1][1] * v.y + m[1][2] * v.z,
            m[2][0] * v.x + m[2][1] * v.y + m[2][2] * v.z};
  }
  Matrix3 operator*(const Matrix3& o) const {
    Matrix3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.m[i][j] = m[i][0] * o.m[0][j] + m[i][1] * o.m[1][j] + m[i][2] * o.m[2][j];
    return r;
  }
};

Matrix3 rotation_x(double deg);
Matrix3 rotation_y(double deg);
Matrix3 rotation_z(double deg);
/// Rotation applied as x first, then y, then z.
Matrix3 rotation_xyz(double x_deg, double y_deg, double z_deg);

}  // namespace sarforge::geometry
