// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 sarforge contributors

#pragma once

#include <atomic>
#include <complex>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "sarforge/geometry/mesh.hpp"
#include "sarforge/sweep/config.hpp"

namespace sarforge::sweep {

enum class Channel : std::size_t { H = 0, V = 1 };

/// Scattered-field samples of one run. Layout: azimuth-major, frequency-minor, channel
/// (E_H, E_V) innermost. Samples follow the scene-phase convention: a point scatterer at r
/// contributes exp(-j K.r), K = k (u_tx + u_rx).
struct RunData {
  SweepConfig config;
  std::string mesh_name;
  std::string mesh_hash;
  std::string created;  // ISO-8601 UTC
  std::size_t n_azimuth = 0;
  std::size_t n_frequency = 0;
  std::vector<std::complex<double>> samples;

  std::size_t index(std::size_t az, std::size_t f, Channel ch) const {
    return (az * n_frequency + f) * 2 + static_cast<std::size_t>(ch);
  }
  std::complex<double>& at(std::size_t az, std::size_t f, Channel ch) { return samples[index(az, f, ch)]; }
  const std::complex<double>& at(std::size_t az, std::size_t f, Channel ch) const { return samples[index(az, f, ch)]; }

  /// Empty run shaped for cfg (validated), samples zeroed.
  static RunData shaped(const SweepConfig& cfg);
};

struct SweepOptions {
  unsigned jobs = 1;  // 0: hardware concurrency
  bool receiver_occlusion = true;
  /// Incremented once per illuminate() call (instrumentation).
  std::atomic<std::size_t>* illuminate_calls = nullptr;
  /// Creation stamp; defaults to SOURCE_DATE_EPOCH when set, else the current time.
  std::optional<std::string> created;
};

/// Currents are computed once per frequency and reused for every receiver azimuth. Output is
/// bit-identical for any job count. Throws Error on a non-finite sample.
RunData run_sweep(const geometry::Mesh& mesh, const SweepConfig& cfg, const SweepOptions& options = {});

/// Timestamp used for new artifacts (see SweepOptions::created).
std::string creation_timestamp();

nlohmann::json run_header(const RunData& run);
std::string encode_run(const RunData& run);
RunData decode_run(std::string_view bytes);
void save_run(const RunData& run, const std::filesystem::path& path);
RunData load_run(const std::filesystem::path& path);

struct RunHeader {
  SweepConfig config;
  std::string mesh_name;
  std::string mesh_hash;
  std::string created;
  std::size_t n_azimuth = 0;
  std::size_t n_frequency = 0;
};
/// Metadata only; samples are not read.
RunHeader load_run_header(const std::filesystem::path& path);

}  // namespace sarforge::sweep
