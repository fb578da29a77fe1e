// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 sarforge contributors

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "sarforge/geometry/vector3.hpp"

namespace sarforge::po {

/// Transmit or receive polarization. H is the azimuthal unit vector, V points up.
enum class Polarization { H, V };

std::string to_string(Polarization p);
std::optional<Polarization> parse_polarization(std::string_view text);

/// Far-field plane wave arriving from (tx_azimuth_deg, tx_elevation_deg).
struct PlaneWaveExcitation {
  double frequency_hz = 1e9;
  double tx_azimuth_deg = 0.0;
  double tx_elevation_deg = 0.0;
  Polarization polarization = Polarization::H;
  double amplitude = 1.0;  // V/m
};

/// Throws InvalidSpecError unless frequency and amplitude are positive and finite and
/// the elevation lies in [-90, 90].
void validate(const PlaneWaveExcitation& exc);

/// Unit vector from the scene origin toward the transmitter.
geometry::Vector3 tx_direction(const PlaneWaveExcitation& exc);

/// Incident electric and magnetic field phasors at the origin.
struct IncidentField {
  geometry::Vector3 e;
  geometry::Vector3 h;
};
IncidentField incident_field(const PlaneWaveExcitation& exc);

}  // namespace sarforge::po
