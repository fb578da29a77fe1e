// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 sarforge contributors

#include "sarforge/sweep/run.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <ctime>

#include "sarforge/core/error.hpp"
#include "sarforge/core/parallel.hpp"
#include "sarforge/geometry/angles.hpp"
#include "sarforge/po/solver.hpp"
#include "sarforge/sweep/bsar.hpp"

namespace sarforge::sweep {

using cplx = std::complex<double>;

RunData RunData::shaped(const SweepConfig& cfg) {
  validate(cfg);
  RunData r;
  r.config = cfg;
  r.n_azimuth = n_azimuths(cfg);
  r.n_frequency = n_frequencies(cfg);
  r.samples.assign(r.n_azimuth * r.n_frequency * 2, cplx{});
  return r;
}

std::string creation_timestamp() {
  std::time_t t;
  const char* sde = std::getenv("SOURCE_DATE_EPOCH");
  char* end = nullptr;
  const long long epoch = sde ? std::strtoll(sde, &end, 10) : 0;
  if (sde && end != sde && *end == '\0')
    t = static_cast<std::time_t>(epoch);
  else
    t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

RunData run_sweep(const geometry::Mesh& mesh, const SweepConfig& cfg, const SweepOptions& options) {
  RunData run = RunData::shaped(cfg);
  run.mesh_name = mesh.name();
  run.mesh_hash = geometry::mesh_hash(mesh);
  run.created = options.created ? *options.created : creation_timestamp();

  const po::Solver solver(mesh);
  const std::size_t nf = run.n_frequency, naz = run.n_azimuth;

  std::vector<po::CurrentMap> currents(nf);
  parallel_for(nf, options.jobs, [&](std::size_t f) {
    currents[f] = solver.illuminate(excitation_at(cfg, f));
    if (options.illuminate_calls) options.illuminate_calls->fetch_add(1, std::memory_order_relaxed);
  });

  parallel_for(naz, options.jobs, [&](std::size_t a) {
    const double az = rx_azimuth_deg(cfg, a);
    std::vector<std::uint8_t> vis;
    if (options.receiver_occlusion)
      vis = solver.receiver_visibility(geometry::direction_from_angles(az, cfg.rx_elevation_deg));
    for (std::size_t f = 0; f < nf; ++f) {
      const auto s = solver.far_field(currents[f], currents[f].excitation.frequency_hz, az, cfg.rx_elevation_deg,
                                      options.receiver_occlusion ? &vis : nullptr);
      // The solver works in exp(+j q.r); the stored run uses the scene phase exp(-j K.r).
      const cplx h = std::conj(s.e_h), v = std::conj(s.e_v);
      if (!std::isfinite(h.real()) || !std::isfinite(h.imag()) || !std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw Error("non-finite sample at azimuth index " + std::to_string(a) + ", frequency index " +
                    std::to_string(f));
      run.at(a, f, Channel::H) = h;
      run.at(a, f, Channel::V) = v;
    }
  });
  return run;
}

nlohmann::json run_header(const RunData& run) {
  return {{"format", "BSAR1"},
          {"variant", "run"},
          {"config", to_json(run.config)},
          {"mesh", {{"name", run.mesh_name}, {"hash", run.mesh_hash}}},
          {"created", run.created},
          {"dims", {{"n_azimuth", run.n_azimuth}, {"n_frequency", run.n_frequency}, {"n_channel", 2}}},
          {"layout", "azimuth-major, frequency-minor, channel (E_H, E_V)"},
          {"phase_convention", "exp(-jK.r)"}};
}

std::string encode_run(const RunData& run) { return encode_bsar(run_header(run), run.samples); }

namespace {

RunHeader header_fields(const nlohmann::json& h) {
  try {
    if (h.value("variant", "") != "run") throw FormatError("BSAR1 file is not a run (variant " + h.value("variant", "?") + ")");
    RunHeader r;
    r.config = sweep_config_from_json(h.at("config"), "header.config");
    r.mesh_name = h.at("mesh").at("name").get<std::string>();
    r.mesh_hash = h.at("mesh").at("hash").get<std::string>();
    r.created = h.at("created").get<std::string>();
    r.n_azimuth = h.at("dims").at("n_azimuth").get<std::size_t>();
    r.n_frequency = h.at("dims").at("n_frequency").get<std::size_t>();
    if (r.n_azimuth != n_azimuths(r.config) || r.n_frequency != n_frequencies(r.config))
      throw FormatError("run dimensions disagree with its sweep configuration");
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed run header: ") + e.what());
  } catch (const ConfigError& e) {
    throw FormatError(std::string("malformed run header: ") + e.what());
  }
}

}  // namespace

RunData decode_run(std::string_view bytes) {
  BsarContents c = decode_bsar(bytes);
  const RunHeader h = header_fields(c.header);
  RunData run;
  run.config = h.config;
  run.mesh_name = h.mesh_name;
  run.mesh_hash = h.mesh_hash;
  run.created = h.created;
  run.n_azimuth = h.n_azimuth;
  run.n_frequency = h.n_frequency;
  if (c.samples.size() != run.n_azimuth * run.n_frequency * 2) throw FormatError("run sample count mismatch");
  run.samples = std::move(c.samples);
  return run;
}

void save_run(const RunData& run, const std::filesystem::path& path) { write_file_atomic(path, encode_run(run)); }

RunData load_run(const std::filesystem::path& path) { return decode_run(read_file(path)); }

RunHeader load_run_header(const std::filesystem::path& path) { return header_fields(read_bsar_header(path)); }

}  // namespace sarforge::sweep
