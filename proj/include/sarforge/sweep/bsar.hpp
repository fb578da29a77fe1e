// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 sarforge contributors

#pragma once

#include <complex>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace sarforge::sweep {

/// BSAR1 container: "BSAR1", u32 LE header length, JSON header, complex samples as LE float64
/// (re, im) pairs, then a u32 LE CRC-32 of every byte after the magic.
/// The header must carry "version" (1) and "sample_count".
inline constexpr std::string_view kBsarMagic = "BSAR1";
inline constexpr int kBsarVersion = 1;

struct BsarContents {
  nlohmann::json header;
  std::vector<std::complex<double>> samples;
};

/// Fills in version and sample_count, then serializes.
std::string encode_bsar(nlohmann::json header, std::span<const std::complex<double>> samples);
/// FormatError on bad magic, version or truncation; ChecksumError on CRC mismatch.
BsarContents decode_bsar(std::string_view bytes);

void write_bsar(const std::filesystem::path& path, const nlohmann::json& header,
                std::span<const std::complex<double>> samples);
BsarContents read_bsar(const std::filesystem::path& path);
/// Reads only the magic, length and JSON header.
nlohmann::json read_bsar_header(const std::filesystem::path& path);

/// Writes via a temporary sibling and rename so readers never see a partial file.
void write_file_atomic(const std::filesystem::path& path, std::string_view bytes);
std::string read_file(const std::filesystem::path& path);

}  // namespace sarforge::sweep
