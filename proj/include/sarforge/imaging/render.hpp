// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 sarforge contributors

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"
#include "sarforge/imaging/image.hpp"

namespace sarforge::imaging {

/// |pixel| in dB relative to the image peak, clamped at floor_db (<= 0). An all-zero image
/// maps to floor_db everywhere.
std::vector<double> magnitude_db(const SarImage& image, double floor_db = -40.0);

/// dB map scaled linearly from [floor_db, 0] to [0, 65535]. Rows are flipped so +v is up.
std::vector<std::uint16_t> to_gray16(const SarImage& image, double floor_db = -40.0);

std::string encode_pgm16(const SarImage& image, double floor_db = -40.0);
std::string encode_png16(const SarImage& image, double floor_db = -40.0);
/// Format from the extension: ".pgm" or ".png".
void write_rendered(const SarImage& image, const std::filesystem::path& path, double floor_db = -40.0);

nlohmann::json image_metadata(const SarImage& image);
SarImage image_from_metadata(const nlohmann::json& meta);

/// Complex image in the BSAR1 container (variant "image"); `extra` is merged into the header.
void save_image(const SarImage& image, const std::filesystem::path& path, const nlohmann::json& extra = {});
std::string encode_image(const SarImage& image, const nlohmann::json& extra = {});
SarImage load_image(const std::filesystem::path& path);

}  // namespace sarforge::imaging
