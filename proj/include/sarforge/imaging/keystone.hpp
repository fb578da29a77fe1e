// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 sarforge contributors

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "sarforge/imaging/kspace.hpp"

namespace sarforge::imaging {

struct KeystoneOptions {
  /// Grid spacings in rad/m; native spacing from the patch when unset.
  std::optional<double> dku;
  std::optional<double> dkv;
  /// Test hook: scales the interpolation targets by (1 + e), breaking the grid geometry.
  double interp_scale_error = 0.0;
};

/// Uniform rectangular k-space grid in the patch frame: u along the ground-projected K at the
/// swath center (angle axis_angle_deg from +x), v 90 degrees counter-clockwise from u.
/// Cell (ix, iy) sits at ku = ku_center + (ix - nx/2) dku, kv = (iy - ny/2) dkv; stored [iy][ix].
struct KeystoneGrid {
  std::size_t nx = 0;
  std::size_t ny = 0;
  double dku = 0.0;
  double dkv = 0.0;
  double ku_center = 0.0;
  double axis_angle_deg = 0.0;
  double mean_beta_deg = 0.0;
  double mean_cos_half_beta = 0.0;
  /// Ground-projected |K| / (4 pi f / c) of the mean column direction; near zero around
  /// forward scatter, where the image is flagged degraded.
  double support_kappa = 0.0;
  std::vector<std::complex<double>> cells;
  std::vector<std::uint8_t> mask;  // 1 inside the polar support

  std::size_t index(std::size_t ix, std::size_t iy) const { return iy * nx + ix; }
  std::size_t support_count() const;
};

/// Collapse threshold on the patch-mean cos(beta/2).
inline constexpr double kCollapseThreshold = 0.05;

/// Two-pass separable linear interpolation: each column is resampled along its radial line onto
/// ku_m / cos(dpsi), then each row is interpolated across adjacent columns onto the uniform kv
/// grid. Cells outside the support are zero and unmasked.
/// SupportCollapsedError when the patch-mean cos(beta/2) < 0.05 or no cell is supported.
/// InvalidSpecError when nx or ny is smaller than the patch.
KeystoneGrid keystone_resample(const KSpacePatch& patch, std::size_t nx, std::size_t ny,
                               const KeystoneOptions& options = {});

}  // namespace sarforge::imaging
