// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 sarforge contributors

#include "sarforge/imaging/image.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstring>
#include <mutex>

#include "sarforge/core/constants.hpp"
#include "sarforge/core/error.hpp"

namespace sarforge::imaging {

using cplx = std::complex<double>;

std::string to_string(Window w) { return w == Window::Rectangular ? "rectangular" : "raised_cosine"; }

std::optional<Window> parse_window(std::string_view text) {
  if (text == "rectangular") return Window::Rectangular;
  if (text == "raised_cosine" || text == "hann") return Window::RaisedCosine;
  return std::nullopt;
}

SarImage::Point SarImage::scene_position(double ix, double iy) const {
  const double u = (ix - static_cast<double>(nx / 2)) * dx;
  const double v = (iy - static_cast<double>(ny / 2)) * dy;
  const double a = deg_to_rad(axis_angle_deg);
  return {u * std::cos(a) - v * std::sin(a), u * std::sin(a) + v * std::cos(a)};
}

SarImage::Point SarImage::pixel_of(double x, double y) const {
  const double a = deg_to_rad(axis_angle_deg);
  const double u = x * std::cos(a) + y * std::sin(a);
  const double v = -x * std::sin(a) + y * std::cos(a);
  return {u / dx + static_cast<double>(nx / 2), v / dy + static_cast<double>(ny / 2)};
}

namespace {

std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftwBuffer {
  fftw_complex* data;
  explicit FftwBuffer(std::size_t n) : data(fftw_alloc_complex(n)) {
    if (!data) throw std::bad_alloc();
  }
  ~FftwBuffer() { fftw_free(data); }
  FftwBuffer(const FftwBuffer&) = delete;
  FftwBuffer& operator=(const FftwBuffer&) = delete;
};

/// Moves index `shift` to 0 along both axes (ifftshift uses n/2, fftshift uses (n+1)/2).
std::vector<cplx> rolled(const std::vector<cplx>& in, std::size_t nx, std::size_t ny, std::size_t sx, std::size_t sy) {
  std::vector<cplx> out(in.size());
  for (std::size_t iy = 0; iy < ny; ++iy)
    for (std::size_t ix = 0; ix < nx; ++ix) out[((iy + ny - sy) % ny) * nx + (ix + nx - sx) % nx] = in[iy * nx + ix];
  return out;
}

double window_weight(Window w, std::size_t i, std::size_t lo, std::size_t hi) {
  if (w == Window::Rectangular) return 1.0;
  if (i < lo || i > hi) return 0.0;
  const double len = static_cast<double>(hi - lo + 1);
  return 0.5 * (1.0 - std::cos(kTwoPi * (static_cast<double>(i - lo) + 1.0) / (len + 1.0)));
}

}  // namespace

void inverse_fft_2d(std::vector<cplx>& data, std::size_t nx, std::size_t ny) {
  const std::size_t n = nx * ny;
  if (data.size() != n) throw InvalidSpecError("FFT buffer size mismatch");
  FftwBuffer buf(n);
  fftw_plan plan;
  {
    std::lock_guard lock(planner_mutex());
    plan = fftw_plan_dft_2d(static_cast<int>(ny), static_cast<int>(nx), buf.data, buf.data, FFTW_BACKWARD,
                            FFTW_ESTIMATE);
  }
  if (!plan) throw Error("FFTW planning failed");
  std::memcpy(buf.data, data.data(), n * sizeof(fftw_complex));
  fftw_execute(plan);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::size_t i = 0; i < n; ++i) data[i] = cplx(buf.data[i][0], buf.data[i][1]) * scale;
  std::lock_guard lock(planner_mutex());
  fftw_destroy_plan(plan);
}

SarImage form_image(const KeystoneGrid& grid, Window window) {
  const std::size_t nx = grid.nx, ny = grid.ny;
  if (grid.cells.size() != nx * ny || nx == 0 || ny == 0) throw InvalidSpecError("malformed k-space grid");

  // Bounding box of the support.
  std::size_t x0 = nx, x1 = 0, y0 = ny, y1 = 0;
  for (std::size_t iy = 0; iy < ny; ++iy)
    for (std::size_t ix = 0; ix < nx; ++ix)
      if (grid.mask[grid.index(ix, iy)]) {
        x0 = std::min(x0, ix);
        x1 = std::max(x1, ix);
        y0 = std::min(y0, iy);
        y1 = std::max(y1, iy);
      }

  std::vector<cplx> data(grid.cells);
  if (x0 <= x1 && window != Window::Rectangular)
    for (std::size_t iy = 0; iy < ny; ++iy)
      for (std::size_t ix = 0; ix < nx; ++ix)
        data[grid.index(ix, iy)] *= window_weight(window, ix, x0, x1) * window_weight(window, iy, y0, y1);

  data = rolled(data, nx, ny, nx / 2, ny / 2);
  inverse_fft_2d(data, nx, ny);
  data = rolled(data, nx, ny, (nx + 1) / 2, (ny + 1) / 2);

  SarImage img;
  img.nx = nx;
  img.ny = ny;
  img.dx = kTwoPi / (static_cast<double>(nx) * grid.dku);
  img.dy = kTwoPi / (static_cast<double>(ny) * grid.dkv);
  img.axis_angle_deg = grid.axis_angle_deg;
  img.pixels = std::move(data);
  img.window = window;
  img.mean_beta_deg = grid.mean_beta_deg;
  img.support_kappa = grid.support_kappa;
  if (x0 <= x1) {
    img.range_resolution_m = kTwoPi / (static_cast<double>(x1 - x0 + 1) * grid.dku);
    img.crossrange_resolution_m = kTwoPi / (static_cast<double>(y1 - y0 + 1) * grid.dkv);
  }
  return img;
}

}  // namespace sarforge::imaging
