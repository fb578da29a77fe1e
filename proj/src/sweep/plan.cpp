// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 sarforge contributors

#include "sarforge/sweep/plan.hpp"

#include <cmath>
#include <cstdio>

namespace sarforge::sweep {

std::vector<double> default_tx_azimuths() {
  std::vector<double> az;
  for (int i = 0; i < 24; ++i) az.push_back(15.0 * i);
  return az;
}

std::vector<double> default_elevations() { return {10.0, 15.0}; }

std::vector<PlannedRun> plan_dataset(const std::vector<std::string>& targets, const std::vector<double>& tx_azimuths,
                                     const std::vector<double>& elevations,
                                     const std::vector<po::Polarization>& polarizations, const SweepConfig& base) {
  std::vector<PlannedRun> plan;
  for (const auto& t : targets)
    for (auto pol : polarizations)
      for (double el : elevations)
        for (double az : tx_azimuths) {
          SweepConfig c = base;
          c.tx_azimuth_deg = az;
          c.tx_elevation_deg = el;
          c.rx_elevation_deg = el;
          c.tx_polarization = pol;
          plan.push_back({t, c});
        }
  return plan;
}

namespace {

std::string angle_label(double deg, int width) {
  char buf[32];
  if (deg == std::round(deg)) {
    std::snprintf(buf, sizeof buf, "%0*d", width, static_cast<int>(deg));
  } else {
    std::snprintf(buf, sizeof buf, "%0*.2f", width + 3, deg);
    for (char* c = buf; *c; ++c)
      if (*c == '.') *c = 'p';
  }
  return buf;
}

}  // namespace

std::string run_directory_name(const SweepConfig& cfg) {
  return angle_label(cfg.tx_azimuth_deg, 3) + "_" + angle_label(cfg.tx_elevation_deg, 2) + "_" +
         po::to_string(cfg.tx_polarization);
}

}  // namespace sarforge::sweep
