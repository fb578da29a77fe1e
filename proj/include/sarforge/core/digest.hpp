// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 sarforge contributors

#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>

namespace sarforge {

std::uint32_t crc32(std::span<const std::byte> data, std::uint32_t seed = 0);

/// Lower-case hex SHA-256.
std::string sha256_hex(std::span<const std::byte> data);
std::string sha256_hex(std::string_view text);
std::string sha256_file(const std::filesystem::path& path);

}  // namespace sarforge
