// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 sarforge contributors

#pragma once

#include <numbers>

namespace sarforge {

inline constexpr double kSpeedOfLight = 299792458.0;            // m/s, exact
inline constexpr double kFreeSpaceImpedance = 376.730313668;    // ohm
inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

constexpr double deg_to_rad(double deg) { return deg * (kPi / 180.0); }
constexpr double rad_to_deg(double rad) { return rad * (180.0 / kPi); }

/// Free-space wavenumber 2*pi*f/c in rad/m.
constexpr double wavenumber(double frequency_hz) { return kTwoPi * frequency_hz / kSpeedOfLight; }

constexpr double wavelength(double frequency_hz) { return kSpeedOfLight / frequency_hz; }

}  // namespace sarforge
