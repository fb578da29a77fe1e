// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 sarforge contributors

#pragma once

#include <array>
#include <complex>

#include "sarforge/geometry/vector3.hpp"

namespace sarforge::oracle {

/// Brute-force reference for the facet phase integral: adaptive 4-way subdivision of the
/// triangle, each piece integrated with a Duffy-mapped 12 x 12 Gauss-Legendre rule.
/// Refinement stops when a piece and its four children agree to abs_tol * area.
std::complex<double> quadrature_phase_integral(const std::array<geometry::Vector3, 3>& corners,
                                               const geometry::Vector3& q, double abs_tol = 1e-14);

}  // namespace sarforge::oracle
