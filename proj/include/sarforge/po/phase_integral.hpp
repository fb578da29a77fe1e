// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 sarforge contributors

#pragma once

#include <array>
#include <complex>

#include "sarforge/geometry/vector3.hpp"

namespace sarforge::po {

/// Closed-form  integral of exp(j q.r) dA  over the flat triangle with the given corners.
/// Exact for q = 0 (returns the area) and switches to a power series when the largest phase
/// difference across the triangle is below 1e-4 rad.
std::complex<double> facet_phase_integral(const std::array<geometry::Vector3, 3>& corners,
                                          const geometry::Vector3& q);

/// Same integral with the phase referred to `reference` instead of the origin:
/// integral of exp(j q.(r - reference)) dA.
std::complex<double> facet_phase_integral_local(const std::array<geometry::Vector3, 3>& corners,
                                                const geometry::Vector3& reference, const geometry::Vector3& q,
                                                double area);

}  // namespace sarforge::po
