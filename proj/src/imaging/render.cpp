// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 sarforge contributors

#include "sarforge/imaging/render.hpp"

#include <png.h>

#include <algorithm>
#include <cmath>

#include "sarforge/core/error.hpp"
#include "sarforge/sweep/bsar.hpp"

namespace sarforge::imaging {

std::vector<double> magnitude_db(const SarImage& image, double floor_db) {
  double peak = 0.0;
  for (const auto& p : image.pixels) peak = std::max(peak, std::abs(p));
  std::vector<double> out(image.pixels.size(), floor_db);
  if (peak == 0.0) return out;
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double m = std::abs(image.pixels[i]);
    if (m > 0.0) out[i] = std::max(floor_db, 20.0 * std::log10(m / peak));
  }
  return out;
}

std::vector<std::uint16_t> to_gray16(const SarImage& image, double floor_db) {
  if (!(floor_db < 0.0)) throw InvalidSpecError("dB floor must be negative");
  const auto db = magnitude_db(image, floor_db);
  std::vector<std::uint16_t> out(db.size());
  for (std::size_t iy = 0; iy < image.ny; ++iy)
    for (std::size_t ix = 0; ix < image.nx; ++ix) {
      const double t = (db[image.index(ix, iy)] - floor_db) / -floor_db;
      out[(image.ny - 1 - iy) * image.nx + ix] = static_cast<std::uint16_t>(std::lround(std::clamp(t, 0.0, 1.0) * 65535.0));
    }
  return out;
}

std::string encode_pgm16(const SarImage& image, double floor_db) {
  const auto g = to_gray16(image, floor_db);
  std::string out = "P5\n" + std::to_string(image.nx) + " " + std::to_string(image.ny) + "\n65535\n";
  out.reserve(out.size() + 2 * g.size());
  for (std::uint16_t v : g) {
    out.push_back(static_cast<char>(v >> 8));
    out.push_back(static_cast<char>(v & 0xFF));
  }
  return out;
}

namespace {

void png_append(png_structp png, png_bytep data, png_size_t len) {
  auto* out = static_cast<std::string*>(png_get_io_ptr(png));
  out->append(reinterpret_cast<const char*>(data), len);
}

void png_flush_noop(png_structp) {}

}  // namespace

std::string encode_png16(const SarImage& image, double floor_db) {
  const auto g = to_gray16(image, floor_db);
  std::string out;
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) throw Error("libpng: cannot create write struct");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_write_struct(&png, nullptr);
    throw Error("libpng: cannot create info struct");
  }
  std::vector<png_byte> row(image.nx * 2);
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw Error("libpng: encoding failed");
  }
  png_set_write_fn(png, &out, png_append, png_flush_noop);
  png_set_IHDR(png, info, static_cast<png_uint_32>(image.nx), static_cast<png_uint_32>(image.ny), 16,
               PNG_COLOR_TYPE_GRAY, PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);
  for (std::size_t y = 0; y < image.ny; ++y) {
    for (std::size_t x = 0; x < image.nx; ++x) {
      const std::uint16_t v = g[y * image.nx + x];
      row[2 * x] = static_cast<png_byte>(v >> 8);
      row[2 * x + 1] = static_cast<png_byte>(v & 0xFF);
    }
    png_write_row(png, row.data());
  }
  png_write_end(png, nullptr);
  png_destroy_write_struct(&png, &info);
  return out;
}

void write_rendered(const SarImage& image, const std::filesystem::path& path, double floor_db) {
  const auto ext = path.extension().string();
  if (ext == ".png")
    sweep::write_file_atomic(path, encode_png16(image, floor_db));
  else if (ext == ".pgm")
    sweep::write_file_atomic(path, encode_pgm16(image, floor_db));
  else
    throw InvalidSpecError("rendered image must be .png or .pgm: " + path.string());
}

nlohmann::json image_metadata(const SarImage& img) {
  return {{"nx", img.nx},
          {"ny", img.ny},
          {"dx_m", img.dx},
          {"dy_m", img.dy},
          {"axis_angle_deg", img.axis_angle_deg},
          {"window", to_string(img.window)},
          {"mean_beta_deg", img.mean_beta_deg},
          {"support_kappa", img.support_kappa},
          {"range_resolution_m", img.range_resolution_m},
          {"crossrange_resolution_m", img.crossrange_resolution_m},
          {"layout", "row-major [iy][ix]; pixel (ix, iy) at u = (ix - nx/2) dx, v = (iy - ny/2) dy"}};
}

SarImage image_from_metadata(const nlohmann::json& m) {
  try {
    SarImage img;
    img.nx = m.at("nx").get<std::size_t>();
    img.ny = m.at("ny").get<std::size_t>();
    img.dx = m.at("dx_m").get<double>();
    img.dy = m.at("dy_m").get<double>();
    img.axis_angle_deg = m.at("axis_angle_deg").get<double>();
    const auto w = parse_window(m.at("window").get<std::string>());
    if (!w) throw FormatError("unknown window in image metadata");
    img.window = *w;
    img.mean_beta_deg = m.at("mean_beta_deg").get<double>();
    img.support_kappa = m.at("support_kappa").get<double>();
    img.range_resolution_m = m.at("range_resolution_m").get<double>();
    img.crossrange_resolution_m = m.at("crossrange_resolution_m").get<double>();
    return img;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed image metadata: ") + e.what());
  }
}

std::string encode_image(const SarImage& image, const nlohmann::json& extra) {
  nlohmann::json header = extra.is_object() ? extra : nlohmann::json::object();
  header["format"] = "BSAR1";
  header["variant"] = "image";
  header["image"] = image_metadata(image);
  return sweep::encode_bsar(header, image.pixels);
}

void save_image(const SarImage& image, const std::filesystem::path& path, const nlohmann::json& extra) {
  sweep::write_file_atomic(path, encode_image(image, extra));
}

SarImage load_image(const std::filesystem::path& path) {
  auto c = sweep::read_bsar(path);
  if (c.header.value("variant", "") != "image") throw FormatError("BSAR1 file is not an image");
  SarImage img = image_from_metadata(c.header.at("image"));
  if (c.samples.size() != img.nx * img.ny) throw FormatError("image sample count mismatch");
  img.pixels = std::move(c.samples);
  return img;
}

}  // namespace sarforge::imaging
