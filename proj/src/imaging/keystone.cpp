// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 sarforge contributors

#include "sarforge/imaging/keystone.hpp"

#include <algorithm>
#include <cmath>

#include "sarforge/core/constants.hpp"
#include "sarforge/core/error.hpp"
#include "sarforge/geometry/angles.hpp"

namespace sarforge::imaging {

using cplx = std::complex<double>;
using geometry::Vector3;

std::size_t KeystoneGrid::support_count() const {
  return static_cast<std::size_t>(std::count(mask.begin(), mask.end(), std::uint8_t{1}));
}

namespace {

double wrap_pi(double a) {
  while (a > kPi) a -= kTwoPi;
  while (a <= -kPi) a += kTwoPi;
  return a;
}

/// Ground projection of u_tx + u_rx (dimensionless, |g| <= 2).
Vector3 ground_sum(const sweep::SweepConfig& cfg, double rx_az) {
  const Vector3 s = geometry::direction_from_angles(cfg.tx_azimuth_deg, cfg.tx_elevation_deg) +
                    geometry::direction_from_angles(rx_az, cfg.rx_elevation_deg);
  return {s.x, s.y, 0.0};
}

struct Column {
  bool valid = false;
  double dpsi = 0.0;  // angle from the u axis
  double rho0 = 0.0;  // radius of the first frequency sample
  double drho = 0.0;  // radial spacing
};

}  // namespace

KeystoneGrid keystone_resample(const KSpacePatch& patch, std::size_t nx, std::size_t ny,
                               const KeystoneOptions& options) {
  if (patch.n_columns == 0 || patch.n_frequency == 0) throw InvalidSpecError("empty k-space patch");
  if (nx < patch.n_frequency || ny < patch.n_columns) throw InvalidSpecError("image grid smaller than the patch");

  KeystoneGrid g;
  g.nx = nx;
  g.ny = ny;
  g.mean_beta_deg = patch.mean_beta_deg();
  g.mean_cos_half_beta = patch.mean_cos_half_beta();
  if (g.mean_cos_half_beta < kCollapseThreshold)
    throw SupportCollapsedError("k-space support collapsed: mean cos(beta/2) = " +
                                std::to_string(g.mean_cos_half_beta) + " at mean bistatic angle " +
                                std::to_string(g.mean_beta_deg) + " deg");

  const sweep::SweepConfig& cfg = patch.config;
  const double fc = cfg.center_frequency_hz;
  const double s_per_hz = kTwoPi / kSpeedOfLight;

  // Patch axis: mean ground-projected direction over the columns.
  Vector3 mean_g;
  for (double az : patch.azimuths_deg) mean_g = mean_g + ground_sum(cfg, az);
  mean_g = mean_g / static_cast<double>(patch.n_columns);
  const double mean_g_norm = norm(mean_g);
  g.support_kappa = mean_g_norm / 2.0;
  if (mean_g_norm == 0.0) throw SupportCollapsedError("k-space support collapsed: no ground-plane direction");
  const double psi0 = std::atan2(mean_g.y, mean_g.x);
  g.axis_angle_deg = rad_to_deg(psi0);

  std::vector<Column> cols(patch.n_columns);
  std::vector<double> psis;
  for (std::size_t c = 0; c < patch.n_columns; ++c) {
    const Vector3 gc = ground_sum(cfg, patch.azimuths_deg[c]);
    const double m = norm(gc);
    if (m == 0.0) continue;
    Column& col = cols[c];
    col.dpsi = wrap_pi(std::atan2(gc.y, gc.x) - psi0);
    col.rho0 = m * s_per_hz * patch.frequencies_hz.front();
    col.drho = m * s_per_hz * cfg.frequency_step_hz;
    col.valid = std::cos(col.dpsi) > 0.05;
    psis.push_back(col.dpsi);
  }

  // Native spacings: radial step and mean angular step at the swath center.
  const double ku_c = mean_g_norm * s_per_hz * fc;
  g.ku_center = ku_c;
  g.dku = options.dku.value_or(mean_g_norm * s_per_hz * cfg.frequency_step_hz);
  double dpsi_step;
  if (psis.size() >= 2) {
    std::vector<double> steps;
    for (std::size_t i = 1; i < psis.size(); ++i) steps.push_back(std::abs(wrap_pi(psis[i] - psis[i - 1])));
    std::nth_element(steps.begin(), steps.begin() + steps.size() / 2, steps.end());
    dpsi_step = steps[steps.size() / 2];
  } else {
    const double az = patch.center_azimuth_deg(), h = cfg.rx_azimuth_step_deg / 2.0;
    const Vector3 a = ground_sum(cfg, az - h), b = ground_sum(cfg, az + h);
    dpsi_step = std::abs(wrap_pi(std::atan2(b.y, b.x) - std::atan2(a.y, a.x)));
  }
  g.dkv = options.dkv.value_or(ku_c * dpsi_step);
  if (!(g.dku > 0.0 && g.dkv > 0.0 && std::isfinite(g.dku) && std::isfinite(g.dkv)))
    throw SupportCollapsedError("k-space support collapsed: degenerate grid spacing");

  g.cells.assign(nx * ny, cplx{});
  g.mask.assign(nx * ny, 0);
  const double scale = 1.0 + options.interp_scale_error;
  const std::size_t nf = patch.n_frequency;

  // Pass 1: radial resampling of each column onto rho = ku_m / cos(dpsi).
  std::vector<cplx> radial(patch.n_columns * nx);
  std::vector<std::uint8_t> radial_ok(patch.n_columns * nx, 0);
  for (std::size_t c = 0; c < patch.n_columns; ++c) {
    const Column& col = cols[c];
    if (!col.valid) continue;
    const double inv_cos = 1.0 / std::cos(col.dpsi);
    for (std::size_t m = 0; m < nx; ++m) {
      const double ku = ku_c + (static_cast<double>(m) - static_cast<double>(nx / 2)) * g.dku;
      if (ku <= 0.0) continue;
      const double t = (ku * inv_cos * scale - col.rho0) / col.drho;
      if (t < -1e-9 || t > static_cast<double>(nf - 1) + 1e-9) continue;
      std::size_t i0 = static_cast<std::size_t>(std::clamp(std::floor(t), 0.0, static_cast<double>(nf - 1)));
      if (i0 == nf - 1 && nf > 1) i0 = nf - 2;
      const double w = nf > 1 ? std::clamp(t - static_cast<double>(i0), 0.0, 1.0) : 0.0;
      const cplx a = patch.at(c, i0).value;
      const cplx b = nf > 1 ? patch.at(c, i0 + 1).value : a;
      radial[c * nx + m] = a + w * (b - a);
      radial_ok[c * nx + m] = 1;
    }
  }

  // Pass 2: across columns at fixed ku onto uniform kv.
  const double half_ny = static_cast<double>(ny / 2);
  for (std::size_t m = 0; m < nx; ++m) {
    const double ku = ku_c + (static_cast<double>(m) - static_cast<double>(nx / 2)) * g.dku;
    auto kv_of = [&](std::size_t c) { return ku * std::tan(cols[c].dpsi) * scale; };
    if (patch.n_columns == 1) {
      if (!radial_ok[m]) continue;
      const double kv = kv_of(0);
      const double n = std::round(kv / g.dkv + half_ny);
      if (n < 0.0 || n >= static_cast<double>(ny)) continue;
      if (std::abs((n - half_ny) * g.dkv - kv) > g.dkv / 2.0) continue;
      const std::size_t idx = g.index(m, static_cast<std::size_t>(n));
      g.cells[idx] = radial[m];
      g.mask[idx] = 1;
      continue;
    }
    for (std::size_t c = 0; c + 1 < patch.n_columns; ++c) {
      if (!radial_ok[c * nx + m] || !radial_ok[(c + 1) * nx + m]) continue;
      const double v0 = kv_of(c), v1 = kv_of(c + 1);
      if (v0 == v1) continue;
      const double lo = std::min(v0, v1), hi = std::max(v0, v1);
      const double n_lo = std::ceil(lo / g.dkv + half_ny - 1e-9), n_hi = std::floor(hi / g.dkv + half_ny + 1e-9);
      for (double n = std::max(n_lo, 0.0); n <= std::min(n_hi, static_cast<double>(ny) - 1.0); n += 1.0) {
        const std::size_t idx = g.index(m, static_cast<std::size_t>(n));
        if (g.mask[idx]) continue;
        const double kv = (n - half_ny) * g.dkv;
        const double w = std::clamp((kv - v0) / (v1 - v0), 0.0, 1.0);
        const cplx a = radial[c * nx + m], b = radial[(c + 1) * nx + m];
        g.cells[idx] = a + w * (b - a);
        g.mask[idx] = 1;
      }
    }
  }
  if (g.support_count() == 0) throw SupportCollapsedError("k-space support collapsed: no grid cell inside the support");
  return g;
}

}  // namespace sarforge::imaging
