// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 sarforge contributors

#include "sarforge/po/solver.hpp"

#include <charconv>
#include <cmath>

#include "sarforge/core/constants.hpp"
#include "sarforge/core/error.hpp"
#include "sarforge/core/parallel.hpp"
#include "sarforge/geometry/angles.hpp"
#include "sarforge/po/phase_integral.hpp"

namespace sarforge::po {

using geometry::CVector3;
using geometry::Vector3;
using cplx = std::complex<double>;

std::size_t CurrentMap::lit_count() const {
  std::size_t n = 0;
  for (auto l : lit) n += l ? 1 : 0;
  return n;
}

Solver::Solver(const geometry::Mesh& mesh) : mesh_(&mesh) {
  if (mesh.empty()) throw InvalidSpecError("mesh has no facets");
  index_ = std::make_unique<OcclusionIndex>(mesh);
}

CurrentMap Solver::illuminate(const PlaneWaveExcitation& exc) const {
  validate(exc);
  const auto& facets = mesh_->facets();
  const double k = wavenumber(exc.frequency_hz);
  const IncidentField inc = incident_field(exc);

  CurrentMap map;
  map.excitation = exc;
  map.tx_dir = tx_direction(exc);
  map.currents.assign(facets.size(), CVector3{});
  map.lit.assign(facets.size(), 0);
  for (std::size_t i = 0; i < facets.size(); ++i) {
    const geometry::Facet& f = facets[i];
    if (!(dot(f.normal, map.tx_dir) > 0.0)) continue;
    if (index_->facet_blocked(i, map.tx_dir)) continue;
    map.lit[i] = 1;
    const cplx phase = std::polar(1.0, k * dot(map.tx_dir, f.centroid));
    map.currents[i] = cross(f.normal, inc.h) * (2.0 * phase);
  }
  return map;
}

std::vector<std::uint8_t> Solver::receiver_visibility(const Vector3& rx_dir) const {
  const auto& facets = mesh_->facets();
  std::vector<std::uint8_t> visible(facets.size(), 1);
  for (std::size_t i = 0; i < facets.size(); ++i)
    if (dot(facets[i].normal, rx_dir) > 0.0 && index_->facet_blocked(i, rx_dir)) visible[i] = 0;
  return visible;
}

FieldSample Solver::far_field(const CurrentMap& currents, double frequency_hz, double rx_azimuth_deg,
                              double rx_elevation_deg, const FarFieldOptions& options) const {
  if (!options.receiver_occlusion) return far_field(currents, frequency_hz, rx_azimuth_deg, rx_elevation_deg, nullptr);
  const auto vis = receiver_visibility(geometry::direction_from_angles(rx_azimuth_deg, rx_elevation_deg));
  return far_field(currents, frequency_hz, rx_azimuth_deg, rx_elevation_deg, &vis);
}

FieldSample Solver::far_field(const CurrentMap& currents, double frequency_hz, double rx_azimuth_deg,
                              double rx_elevation_deg, const std::vector<std::uint8_t>* visibility) const {
  if (frequency_hz != currents.excitation.frequency_hz)
    throw InvalidSpecError("far_field frequency differs from the frequency the currents were computed at");
  const auto& facets = mesh_->facets();
  if (currents.currents.size() != facets.size() || currents.lit.size() != facets.size())
    throw InvalidSpecError("current map does not belong to this mesh");
  if (visibility && visibility->size() != facets.size())
    throw InvalidSpecError("receiver visibility mask does not belong to this mesh");

  const double k = wavenumber(frequency_hz);
  const Vector3 rx = geometry::direction_from_angles(rx_azimuth_deg, rx_elevation_deg);
  const auto basis = geometry::polarization_basis(rx_azimuth_deg, rx_elevation_deg);
  const Vector3 q = (currents.tx_dir + rx) * k;

  // Sequential in facet order: the sum is bit-reproducible.
  cplx sum_h = 0.0, sum_v = 0.0;
  for (std::size_t i = 0; i < facets.size(); ++i) {
    if (!currents.lit[i]) continue;
    if (visibility && !(*visibility)[i]) continue;
    const geometry::Facet& f = facets[i];
    // Current phase already carries exp(jk u_tx . r_c); add the receive leg and the in-facet variation.
    const cplx local = facet_phase_integral_local(mesh_->corners(i), f.centroid, q, f.area);
    const cplx w = local * std::polar(1.0, k * dot(rx, f.centroid));
    const CVector3& j = currents.currents[i];
    sum_h += dot(j, basis.h) * w;
    sum_v += dot(j, basis.v) * w;
  }
  const cplx scale(0.0, -k * kFreeSpaceImpedance / (4.0 * kPi));
  FieldSample s;
  s.e_h = scale * sum_h;
  s.e_v = scale * sum_v;
  s.rx_azimuth_deg = rx_azimuth_deg;
  s.rx_elevation_deg = rx_elevation_deg;
  s.frequency_hz = frequency_hz;
  return s;
}

CurrentMap illuminate(const geometry::Mesh& mesh, const PlaneWaveExcitation& exc) {
  return Solver(mesh).illuminate(exc);
}

FieldSample far_field(const geometry::Mesh& mesh, const CurrentMap& currents, double frequency_hz,
                      double rx_azimuth_deg, double rx_elevation_deg, const FarFieldOptions& options) {
  return Solver(mesh).far_field(currents, frequency_hz, rx_azimuth_deg, rx_elevation_deg, options);
}

double rcs_linear(cplx e, double incident_amplitude) {
  return 4.0 * kPi * std::norm(e) / (incident_amplitude * incident_amplitude);
}

double to_dbsm(double sigma_linear) { return 10.0 * std::log10(std::max(sigma_linear, 1e-30)); }

std::vector<RcsSample> bistatic_rcs_sweep(const geometry::Mesh& mesh, const PlaneWaveExcitation& exc,
                                          double rx_elevation_deg, const std::vector<double>& rx_azimuths_deg,
                                          const FarFieldOptions& options, unsigned jobs) {
  if (rx_azimuths_deg.empty()) throw InvalidSpecError("receiver azimuth list is empty");
  const Solver solver(mesh);
  const CurrentMap currents = solver.illuminate(exc);
  std::vector<RcsSample> out(rx_azimuths_deg.size());
  parallel_for(out.size(), jobs, [&](std::size_t i) {
    const FieldSample s = solver.far_field(currents, exc.frequency_hz, rx_azimuths_deg[i], rx_elevation_deg, options);
    const bool h = exc.polarization == Polarization::H;
    out[i].co_dbsm = to_dbsm(rcs_linear(h ? s.e_h : s.e_v, exc.amplitude));
    out[i].cross_dbsm = to_dbsm(rcs_linear(h ? s.e_v : s.e_h, exc.amplitude));
    out[i].rx_azimuth_deg = rx_azimuths_deg[i];
    out[i].rx_elevation_deg = rx_elevation_deg;
  });
  return out;
}

namespace {

void put(std::ostream& out, double v) {
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  out.write(buf, r.ptr - buf);
}

}  // namespace

void write_current_csv(std::ostream& out, const geometry::Mesh& mesh, const CurrentMap& currents) {
  out << "facet,cx,cy,cz,jx_re,jx_im,jy_re,jy_im,jz_re,jz_im,j_abs,lit\n";
  for (std::size_t i = 0; i < mesh.facet_count(); ++i) {
    const Vector3& c = mesh.facets()[i].centroid;
    const CVector3& j = currents.currents[i];
    out << i;
    for (double v : {c.x, c.y, c.z, j.x.real(), j.x.imag(), j.y.real(), j.y.imag(), j.z.real(), j.z.imag(), norm(j)}) {
      out << ',';
      put(out, v);
    }
    out << ',' << int(currents.lit[i]) << '\n';
  }
}

}  // namespace sarforge::po
