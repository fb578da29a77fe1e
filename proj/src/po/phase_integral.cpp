// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 sarforge contributors

#include "sarforge/po/phase_integral.hpp"

#include <cmath>

namespace sarforge::po {

using geometry::Vector3;
using cplx = std::complex<double>;

namespace {

constexpr double kSeriesThreshold = 1e-4;

/// (exp(j t) - 1) / (j t), written without cancellation for small t.
cplx expm1_over(double t) {
  if (std::abs(t) < kSeriesThreshold) {
    const double t2 = t * t;
    return {1.0 - t2 / 6.0, t / 2.0 - t * t2 / 24.0};
  }
  const double s = std::sin(0.5 * t);
  return {std::sin(t) / t, 2.0 * s * s / t};
}

/// Divided difference exp[0, j x, j y] for real x, y (integral over the unit simplex, area 1/2).
cplx simplex_integral(double x, double y) {
  const double d = x - y;
  if (std::abs(d) < kSeriesThreshold) {
    // Complete homogeneous polynomials of (jx, jy) over (m + 2)!.
    const cplx a{0.0, x}, b{0.0, y};
    const cplx h1 = a + b;
    const cplx h2 = a * a + a * b + b * b;
    const cplx h3 = a * a * a + a * a * b + a * b * b + b * b * b;
    return 0.5 + h1 / 6.0 + h2 / 24.0 + h3 / 120.0;
  }
  return (expm1_over(x) - expm1_over(y)) / cplx(0.0, d);
}

}  // namespace

cplx facet_phase_integral_local(const std::array<Vector3, 3>& c, const Vector3& reference, const Vector3& q,
                                double area) {
  const double a[3] = {dot(q, c[0] - reference), dot(q, c[1] - reference), dot(q, c[2] - reference)};
  // Base vertex is the one outside the pair with the largest phase spread.
  const double d01 = std::abs(a[0] - a[1]), d02 = std::abs(a[0] - a[2]), d12 = std::abs(a[1] - a[2]);
  int base = 2, i = 0, k = 1;
  if (d02 >= d01 && d02 >= d12) {
    base = 1;
    i = 0;
    k = 2;
  } else if (d12 >= d01 && d12 >= d02) {
    base = 0;
    i = 1;
    k = 2;
  }
  const cplx s = simplex_integral(a[i] - a[base], a[k] - a[base]);
  const cplx e = a[base] == 0.0 ? cplx(1.0, 0.0) : std::polar(1.0, a[base]);
  return 2.0 * area * e * s;
}

cplx facet_phase_integral(const std::array<Vector3, 3>& corners, const Vector3& q) {
  const double area = 0.5 * norm(cross(corners[1] - corners[0], corners[2] - corners[0]));
  if (q == Vector3{}) return area;
  const Vector3 centroid = (corners[0] + corners[1] + corners[2]) / 3.0;
  const cplx local = facet_phase_integral_local(corners, centroid, q, area);
  return std::polar(1.0, dot(q, centroid)) * local;
}

}  // namespace sarforge::po
