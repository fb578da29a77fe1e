// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 sarforge contributors

#include "sarforge/po/excitation.hpp"

#include <cmath>

#include "sarforge/core/constants.hpp"
#include "sarforge/core/error.hpp"
#include "sarforge/geometry/angles.hpp"

namespace sarforge::po {

using geometry::Vector3;

std::string to_string(Polarization p) { return p == Polarization::H ? "H" : "V"; }

std::optional<Polarization> parse_polarization(std::string_view text) {
  if (text == "H" || text == "h") return Polarization::H;
  if (text == "V" || text == "v") return Polarization::V;
  return std::nullopt;
}

void validate(const PlaneWaveExcitation& exc) {
  if (!(std::isfinite(exc.frequency_hz) && exc.frequency_hz > 0.0))
    throw InvalidSpecError("excitation frequency must be positive");
  if (!(std::isfinite(exc.amplitude) && exc.amplitude > 0.0))
    throw InvalidSpecError("excitation amplitude must be positive");
  if (!std::isfinite(exc.tx_azimuth_deg)) throw InvalidSpecError("transmitter azimuth must be finite");
  if (!(exc.tx_elevation_deg >= -90.0 && exc.tx_elevation_deg <= 90.0))
    throw InvalidSpecError("transmitter elevation must lie in [-90, 90] degrees");
}

Vector3 tx_direction(const PlaneWaveExcitation& exc) {
  return geometry::direction_from_angles(exc.tx_azimuth_deg, exc.tx_elevation_deg);
}

IncidentField incident_field(const PlaneWaveExcitation& exc) {
  const auto basis = geometry::polarization_basis(exc.tx_azimuth_deg, exc.tx_elevation_deg);
  const Vector3 k_inc = -tx_direction(exc);
  const Vector3 e = (exc.polarization == Polarization::H ? basis.h : basis.v) * exc.amplitude;
  return {e, cross(k_inc, e) / kFreeSpaceImpedance};
}

}  // namespace sarforge::po
