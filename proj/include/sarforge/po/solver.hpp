// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 sarforge contributors

#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <ostream>
#include <vector>

#include "sarforge/geometry/mesh.hpp"
#include "sarforge/po/excitation.hpp"
#include "sarforge/po/occlusion.hpp"

namespace sarforge::po {

/// Physical-optics surface currents for one excitation. Shadowed facets hold exactly zero.
struct CurrentMap {
  PlaneWaveExcitation excitation;
  geometry::Vector3 tx_dir;
  std::vector<geometry::CVector3> currents;  // A/m at each facet centroid, phase referred to the origin
  std::vector<std::uint8_t> lit;
  std::size_t lit_count() const;
};

/// Range-normalized far field r*E (volts) on the receiver H and V unit vectors.
struct FieldSample {
  std::complex<double> e_h;
  std::complex<double> e_v;
  double rx_azimuth_deg = 0.0;
  double rx_elevation_deg = 0.0;
  double frequency_hz = 0.0;
};

struct FarFieldOptions {
  /// Drop lit facets that face the receiver but whose view of it is blocked.
  bool receiver_occlusion = true;
};

/// 4 pi |E|^2 / |E_inc|^2 in dBsm for the co- and cross-polarized receive channels.
struct RcsSample {
  double co_dbsm = 0.0;
  double cross_dbsm = 0.0;
  double rx_azimuth_deg = 0.0;
  double rx_elevation_deg = 0.0;
};

/// Solver bound to one mesh. Holds the occlusion index so repeated illuminations and receiver
/// evaluations share it. The mesh must outlive the solver.
class Solver {
 public:
  explicit Solver(const geometry::Mesh& mesh);

  const geometry::Mesh& mesh() const noexcept { return *mesh_; }
  const OcclusionIndex& occlusion() const noexcept { return *index_; }

  CurrentMap illuminate(const PlaneWaveExcitation& exc) const;

  /// Per-facet flag: 0 when a facet facing rx_dir cannot see the receiver. Depends only on
  /// geometry, so a sweep can compute it once per receiver direction.
  std::vector<std::uint8_t> receiver_visibility(const geometry::Vector3& rx_dir) const;

  FieldSample far_field(const CurrentMap& currents, double frequency_hz, double rx_azimuth_deg,
                        double rx_elevation_deg, const FarFieldOptions& options = {}) const;

  /// far_field with a precomputed receiver_visibility mask (nullptr disables receiver occlusion).
  FieldSample far_field(const CurrentMap& currents, double frequency_hz, double rx_azimuth_deg,
                        double rx_elevation_deg, const std::vector<std::uint8_t>* visibility) const;

 private:
  const geometry::Mesh* mesh_;
  std::unique_ptr<OcclusionIndex> index_;
};

CurrentMap illuminate(const geometry::Mesh& mesh, const PlaneWaveExcitation& exc);

FieldSample far_field(const geometry::Mesh& mesh, const CurrentMap& currents, double frequency_hz,
                      double rx_azimuth_deg, double rx_elevation_deg, const FarFieldOptions& options = {});

double rcs_linear(std::complex<double> e, double incident_amplitude);
double to_dbsm(double sigma_linear);

/// Co-pol channel equals the transmit polarization.
std::vector<RcsSample> bistatic_rcs_sweep(const geometry::Mesh& mesh, const PlaneWaveExcitation& exc,
                                          double rx_elevation_deg, const std::vector<double>& rx_azimuths_deg,
                                          const FarFieldOptions& options = {}, unsigned jobs = 1);

/// CSV: facet, cx, cy, cz, jx_re, jx_im, jy_re, jy_im, jz_re, jz_im, j_abs, lit
void write_current_csv(std::ostream& out, const geometry::Mesh& mesh, const CurrentMap& currents);

}  // namespace sarforge::po
