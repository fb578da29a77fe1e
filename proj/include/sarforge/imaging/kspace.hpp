// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 sarforge contributors

#pragma once

#include <complex>
#include <cstddef>
#include <string>
#include <vector>

#include "sarforge/geometry/vector3.hpp"
#include "sarforge/sweep/run.hpp"

namespace sarforge::imaging {

struct KCoord {
  double kx = 0.0;  // rad/m, ground-plane components of K = k (u_tx + u_rx)
  double ky = 0.0;
  double k_magnitude = 0.0;  // |K| = 2k cos(beta/2)
  double beta_deg = 0.0;     // bistatic angle, acos(u_tx . u_rx)
};

KCoord kspace_coords(const geometry::Vector3& tx_dir, const geometry::Vector3& rx_dir, double frequency_hz);

struct KSample {
  double kx = 0.0;
  double ky = 0.0;
  double beta_deg = 0.0;
  std::complex<double> value;
};

/// Contiguous receiver-azimuth columns of one run, all frequencies, one receive channel.
/// samples[c * n_frequency + f].
struct KSpacePatch {
  sweep::SweepConfig config;
  std::string mesh_hash;
  sweep::Channel channel = sweep::Channel::H;
  std::size_t start_index = 0;
  std::size_t n_columns = 0;
  std::size_t n_frequency = 0;
  double swath_deg = 0.0;
  std::vector<std::size_t> azimuth_indices;
  std::vector<double> azimuths_deg;
  std::vector<double> frequencies_hz;
  std::vector<KSample> samples;

  const KSample& at(std::size_t column, std::size_t f) const { return samples[column * n_frequency + f]; }
  double mean_beta_deg() const;
  double mean_cos_half_beta() const;
  /// Receiver azimuth at the middle of the swath.
  double center_azimuth_deg() const;
};

/// swath_deg / step columns starting at start_index (wrapping for full-circle runs).
/// InvalidSpecError if the swath is not an integral number of steps, is empty or overruns a
/// partial-circle run.
KSpacePatch extract_patch(const sweep::RunData& run, std::size_t start_index, double swath_deg,
                          sweep::Channel channel = sweep::Channel::H);

/// Number of columns for a swath, or InvalidSpecError.
std::size_t swath_columns(const sweep::SweepConfig& cfg, double swath_deg);

}  // namespace sarforge::imaging
