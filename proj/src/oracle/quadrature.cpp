// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 sarforge contributors

#include "sarforge/oracle/quadrature.hpp"

#include <cmath>

namespace sarforge::oracle {

using geometry::Vector3;
using cplx = std::complex<double>;
using Tri = std::array<Vector3, 3>;

namespace {

// 12-point Gauss-Legendre on [-1, 1].
constexpr double kNodes[6] = {0.1252334085114689154724414, 0.3678314989981801937526915, 0.5873179542866174472967024,
                              0.7699026741943046870368938, 0.9041172563704748566784659, 0.9815606342467192506905491};
constexpr double kWeights[6] = {0.2491470458134027850005624, 0.2334925365383548087608499,
                                0.2031674267230659217490645, 0.1600783285433462263346525,
                                0.1069393259953184309602547, 0.0471753363865118271946160};

struct Rule {
  double x[12];
  double w[12];
  Rule() {
    for (int i = 0; i < 6; ++i) {
      x[2 * i] = 0.5 * (1.0 - kNodes[i]);
      x[2 * i + 1] = 0.5 * (1.0 + kNodes[i]);
      w[2 * i] = w[2 * i + 1] = 0.5 * kWeights[i];
    }
  }
};

const Rule& rule() {
  static const Rule r;
  return r;
}

// r(u, v) = a + u (b - a) + u v (c - b), Jacobian 2 A u.
cplx integrate_piece(const Tri& t, const Vector3& q) {
  const Rule& r = rule();
  const Vector3 e1 = t[1] - t[0], e2 = t[2] - t[1];
  const double twice_area = norm(cross(t[1] - t[0], t[2] - t[0]));
  cplx sum = 0.0;
  for (int i = 0; i < 12; ++i) {
    const double u = r.x[i];
    cplx inner = 0.0;
    for (int j = 0; j < 12; ++j) {
      const double v = r.x[j];
      const Vector3 p = t[0] + e1 * u + e2 * (u * v);
      inner += r.w[j] * std::polar(1.0, dot(q, p));
    }
    sum += r.w[i] * u * inner;
  }
  return twice_area * sum;
}

std::array<Tri, 4> split(const Tri& t) {
  const Vector3 m01 = (t[0] + t[1]) * 0.5, m12 = (t[1] + t[2]) * 0.5, m20 = (t[2] + t[0]) * 0.5;
  return {Tri{t[0], m01, m20}, Tri{m01, t[1], m12}, Tri{m20, m12, t[2]}, Tri{m01, m12, m20}};
}

cplx adapt(const Tri& t, const Vector3& q, cplx whole, double tol, int depth) {
  const auto kids = split(t);
  cplx parts[4];
  cplx sum = 0.0;
  for (int i = 0; i < 4; ++i) {
    parts[i] = integrate_piece(kids[i], q);
    sum += parts[i];
  }
  if (depth >= 12 || std::abs(sum - whole) <= tol) return sum;
  cplx refined = 0.0;
  for (int i = 0; i < 4; ++i) refined += adapt(kids[i], q, parts[i], tol / 2.0, depth + 1);
  return refined;
}

}  // namespace

cplx quadrature_phase_integral(const Tri& corners, const Vector3& q, double abs_tol) {
  const double area = 0.5 * norm(cross(corners[1] - corners[0], corners[2] - corners[0]));
  return adapt(corners, q, integrate_piece(corners, q), abs_tol * area, 0);
}

}  // namespace sarforge::oracle
