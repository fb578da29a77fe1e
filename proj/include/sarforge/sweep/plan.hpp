// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 sarforge contributors

#pragma once

#include <string>
#include <vector>

#include "sarforge/po/excitation.hpp"
#include "sarforge/sweep/config.hpp"

namespace sarforge::sweep {

struct PlannedRun {
  std::string target;
  SweepConfig config;
};

/// 0, 15, ..., 345 degrees.
std::vector<double> default_tx_azimuths();
/// 10 and 15 degrees.
std::vector<double> default_elevations();

/// Cartesian product target x polarization x elevation x tx azimuth, in that nesting order.
/// The receiver sweeps at the transmitter elevation; other fields come from `base`.
std::vector<PlannedRun> plan_dataset(const std::vector<std::string>& targets, const std::vector<double>& tx_azimuths,
                                     const std::vector<double>& elevations,
                                     const std::vector<po::Polarization>& polarizations, const SweepConfig& base = {});

/// Directory name for a run: "<tx_az>_<tx_el>_<pol>", e.g. "045_10_H" (angles in whole degrees
/// when integral, otherwise with the decimal point replaced by 'p').
std::string run_directory_name(const SweepConfig& cfg);

}  // namespace sarforge::sweep
