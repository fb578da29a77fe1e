// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 sarforge contributors

#pragma once

#include <cstddef>
#include <string>

#include "json.hpp"
#include "sarforge/po/excitation.hpp"

namespace sarforge::sweep {

/// Fixed transmitter, receiver swept in azimuth at one elevation, stepped frequency.
struct SweepConfig {
  double center_frequency_hz = 1e9;
  double bandwidth_hz = 750e6;
  double frequency_step_hz = 15e6;
  double rx_azimuth_start_deg = 0.0;
  double rx_azimuth_end_deg = 360.0;
  double rx_azimuth_step_deg = 0.72;
  double rx_elevation_deg = 15.0;
  double tx_azimuth_deg = 0.0;
  double tx_elevation_deg = 15.0;
  po::Polarization tx_polarization = po::Polarization::H;

  friend bool operator==(const SweepConfig&, const SweepConfig&) = default;
};

/// Throws InvalidSpecError when a span is not an integral number of steps (+-1e-9), a step is
/// not positive, the lowest frequency is not positive or an elevation is out of range.
void validate(const SweepConfig& cfg);

/// bandwidth / step + 1 (both band edges included).
std::size_t n_frequencies(const SweepConfig& cfg);
/// span / step, end-exclusive when the span is a full circle, otherwise both ends included.
std::size_t n_azimuths(const SweepConfig& cfg);
bool is_full_circle(const SweepConfig& cfg);

double frequency_hz(const SweepConfig& cfg, std::size_t index);
double rx_azimuth_deg(const SweepConfig& cfg, std::size_t index);

po::PlaneWaveExcitation excitation_at(const SweepConfig& cfg, std::size_t frequency_index);

nlohmann::json to_json(const SweepConfig& cfg);
/// Missing keys keep their defaults; wrong types and invalid values raise ConfigError at `path`.
SweepConfig sweep_config_from_json(const nlohmann::json& j, const std::string& path = "$", SweepConfig base = {});

}  // namespace sarforge::sweep
