// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 sarforge contributors

#include "sarforge/sweep/config.hpp"

#include <cmath>

#include "sarforge/core/error.hpp"

namespace sarforge::sweep {

namespace {

constexpr double kIntegralTol = 1e-9;

std::size_t integral_ratio(double num, double den, const char* what) {
  if (!(std::isfinite(den) && den > 0.0)) throw InvalidSpecError(std::string(what) + " step must be positive");
  const double r = num / den;
  const double rounded = std::round(r);
  if (!(std::abs(r - rounded) <= kIntegralTol) || rounded < 0.0)
    throw InvalidSpecError(std::string(what) + " span is not an integral number of steps");
  return static_cast<std::size_t>(rounded);
}

}  // namespace

bool is_full_circle(const SweepConfig& cfg) {
  return std::abs((cfg.rx_azimuth_end_deg - cfg.rx_azimuth_start_deg) - 360.0) <= kIntegralTol;
}

std::size_t n_frequencies(const SweepConfig& cfg) {
  return integral_ratio(cfg.bandwidth_hz, cfg.frequency_step_hz, "frequency") + 1;
}

std::size_t n_azimuths(const SweepConfig& cfg) {
  const std::size_t steps =
      integral_ratio(cfg.rx_azimuth_end_deg - cfg.rx_azimuth_start_deg, cfg.rx_azimuth_step_deg, "azimuth");
  return is_full_circle(cfg) ? steps : steps + 1;
}

void validate(const SweepConfig& cfg) {
  for (double v : {cfg.center_frequency_hz, cfg.bandwidth_hz, cfg.frequency_step_hz, cfg.rx_azimuth_start_deg,
                   cfg.rx_azimuth_end_deg, cfg.rx_azimuth_step_deg, cfg.rx_elevation_deg, cfg.tx_azimuth_deg,
                   cfg.tx_elevation_deg})
    if (!std::isfinite(v)) throw InvalidSpecError("sweep parameters must be finite");
  if (cfg.bandwidth_hz < 0.0) throw InvalidSpecError("bandwidth must be non-negative");
  if (!(cfg.center_frequency_hz - cfg.bandwidth_hz / 2.0 > 0.0))
    throw InvalidSpecError("lowest swept frequency must be positive");
  if (cfg.rx_azimuth_end_deg - cfg.rx_azimuth_start_deg > 360.0 + kIntegralTol)
    throw InvalidSpecError("receiver azimuth span exceeds 360 degrees");
  n_frequencies(cfg);
  if (n_azimuths(cfg) == 0) throw InvalidSpecError("receiver azimuth span is empty");
  for (double el : {cfg.rx_elevation_deg, cfg.tx_elevation_deg})
    if (el < -90.0 || el > 90.0) throw InvalidSpecError("elevation must lie in [-90, 90] degrees");
}

double frequency_hz(const SweepConfig& cfg, std::size_t index) {
  return cfg.center_frequency_hz - cfg.bandwidth_hz / 2.0 + static_cast<double>(index) * cfg.frequency_step_hz;
}

double rx_azimuth_deg(const SweepConfig& cfg, std::size_t index) {
  return cfg.rx_azimuth_start_deg + static_cast<double>(index) * cfg.rx_azimuth_step_deg;
}

po::PlaneWaveExcitation excitation_at(const SweepConfig& cfg, std::size_t frequency_index) {
  po::PlaneWaveExcitation e;
  e.frequency_hz = frequency_hz(cfg, frequency_index);
  e.tx_azimuth_deg = cfg.tx_azimuth_deg;
  e.tx_elevation_deg = cfg.tx_elevation_deg;
  e.polarization = cfg.tx_polarization;
  return e;
}

nlohmann::json to_json(const SweepConfig& c) {
  return {{"center_frequency_hz", c.center_frequency_hz},
          {"bandwidth_hz", c.bandwidth_hz},
          {"frequency_step_hz", c.frequency_step_hz},
          {"rx_azimuth_start_deg", c.rx_azimuth_start_deg},
          {"rx_azimuth_end_deg", c.rx_azimuth_end_deg},
          {"rx_azimuth_step_deg", c.rx_azimuth_step_deg},
          {"rx_elevation_deg", c.rx_elevation_deg},
          {"tx_azimuth_deg", c.tx_azimuth_deg},
          {"tx_elevation_deg", c.tx_elevation_deg},
          {"tx_polarization", po::to_string(c.tx_polarization)}};
}

SweepConfig sweep_config_from_json(const nlohmann::json& j, const std::string& path, SweepConfig c) {
  if (!j.is_object()) throw ConfigError(path, "expected an object");
  auto num = [&](const char* key, double& out) {
    if (!j.contains(key)) return;
    const auto& v = j.at(key);
    if (!v.is_number()) throw ConfigError(path + "." + key, "expected a number");
    out = v.get<double>();
  };
  num("center_frequency_hz", c.center_frequency_hz);
  num("bandwidth_hz", c.bandwidth_hz);
  num("frequency_step_hz", c.frequency_step_hz);
  num("rx_azimuth_start_deg", c.rx_azimuth_start_deg);
  num("rx_azimuth_end_deg", c.rx_azimuth_end_deg);
  num("rx_azimuth_step_deg", c.rx_azimuth_step_deg);
  num("rx_elevation_deg", c.rx_elevation_deg);
  num("tx_azimuth_deg", c.tx_azimuth_deg);
  num("tx_elevation_deg", c.tx_elevation_deg);
  if (j.contains("tx_polarization")) {
    const auto& v = j.at("tx_polarization");
    const auto p = v.is_string() ? po::parse_polarization(v.get<std::string>()) : std::nullopt;
    if (!p) throw ConfigError(path + ".tx_polarization", "expected \"H\" or \"V\"");
    c.tx_polarization = *p;
  }
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (!to_json(SweepConfig{}).contains(key)) throw ConfigError(path + "." + key, "unknown sweep field");
  }
  try {
    validate(c);
  } catch (const InvalidSpecError& e) {
    throw ConfigError(path, e.what());
  }
  return c;
}

}  // namespace sarforge::sweep
