// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 sarforge contributors

#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sarforge/imaging/keystone.hpp"

namespace sarforge::imaging {

enum class Window { Rectangular, RaisedCosine };

std::string to_string(Window w);
std::optional<Window> parse_window(std::string_view text);

/// Complex image clip. Pixel (ix, iy) sits at u = (ix - nx/2) dx, v = (iy - ny/2) dy in the
/// patch frame, which is rotated by axis_angle_deg from the scene axes. x (u) is down-range
/// along the bistatic bisector, y (v) cross-range. Stored [iy][ix].
struct SarImage {
  std::size_t nx = 0;
  std::size_t ny = 0;
  double dx = 0.0;
  double dy = 0.0;
  double axis_angle_deg = 0.0;
  std::vector<std::complex<double>> pixels;

  Window window = Window::Rectangular;
  double mean_beta_deg = 0.0;
  double support_kappa = 0.0;
  /// 2 pi / extent of the supported k-space region along u and v.
  double range_resolution_m = 0.0;
  double crossrange_resolution_m = 0.0;

  std::size_t index(std::size_t ix, std::size_t iy) const { return iy * nx + ix; }
  const std::complex<double>& at(std::size_t ix, std::size_t iy) const { return pixels[index(ix, iy)]; }

  struct Point {
    double x = 0.0;
    double y = 0.0;
  };
  /// Scene ground-plane position of a (possibly fractional) pixel coordinate.
  Point scene_position(double ix, double iy) const;
  /// Inverse of scene_position.
  Point pixel_of(double x, double y) const;
};

/// Separable window over the bounding box of the support mask, ifftshift, unitary 2-D inverse
/// FFT, fftshift. The scene origin lands on pixel (nx/2, ny/2).
SarImage form_image(const KeystoneGrid& grid, Window window = Window::Rectangular);

/// Unitary 2-D inverse DFT of an ny x nx row-major array (FFTW), in place.
void inverse_fft_2d(std::vector<std::complex<double>>& data, std::size_t nx, std::size_t ny);

}  // namespace sarforge::imaging
