// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 sarforge contributors

#include "sarforge/sweep/bsar.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>

#include "sarforge/core/digest.hpp"
#include "sarforge/core/error.hpp"

namespace sarforge::sweep {

namespace {

void put_u32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFFu));
}

void put_f64(std::string& out, double d) {
  const auto v = std::bit_cast<std::uint64_t>(d);
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFFu));
}

std::uint32_t get_u32(std::string_view s, std::size_t at) {
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(static_cast<unsigned char>(s[at + i])) << (8 * i);
  return v;
}

double get_f64(std::string_view s, std::size_t at) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(static_cast<unsigned char>(s[at + i])) << (8 * i);
  return std::bit_cast<double>(v);
}

std::uint32_t crc_of(std::string_view s) {
  return crc32(std::as_bytes(std::span<const char>(s.data(), s.size())));
}

nlohmann::json parse_header(std::string_view bytes) {
  const std::size_t base = kBsarMagic.size();
  if (bytes.size() < base || bytes.substr(0, base) != kBsarMagic) throw FormatError("not a BSAR1 file (bad magic)");
  if (bytes.size() < base + 4) throw FormatError("truncated BSAR1 file (no header length)");
  const std::uint32_t len = get_u32(bytes, base);
  if (bytes.size() < base + 4 + len) throw FormatError("truncated BSAR1 file (header cut short)");
  nlohmann::json header;
  try {
    header = nlohmann::json::parse(bytes.substr(base + 4, len));
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("corrupt BSAR1 header: ") + e.what());
  }
  if (!header.is_object() || !header.contains("version") || !header["version"].is_number_integer())
    throw FormatError("BSAR1 header has no version");
  if (header["version"].get<int>() != kBsarVersion)
    throw FormatError("unsupported BSAR1 version " + header["version"].dump());
  if (!header.contains("sample_count") || !header["sample_count"].is_number_unsigned())
    throw FormatError("BSAR1 header has no sample_count");
  return header;
}

}  // namespace

std::string encode_bsar(nlohmann::json header, std::span<const std::complex<double>> samples) {
  header["version"] = kBsarVersion;
  header["sample_count"] = samples.size();
  const std::string text = header.dump();
  std::string out(kBsarMagic);
  out.reserve(kBsarMagic.size() + 8 + text.size() + 16 * samples.size());
  put_u32(out, static_cast<std::uint32_t>(text.size()));
  out += text;
  for (const auto& c : samples) {
    put_f64(out, c.real());
    put_f64(out, c.imag());
  }
  put_u32(out, crc_of(std::string_view(out).substr(kBsarMagic.size())));
  return out;
}

BsarContents decode_bsar(std::string_view bytes) {
  BsarContents out;
  out.header = parse_header(bytes);
  const std::size_t count = out.header["sample_count"].get<std::size_t>();
  const std::size_t payload = kBsarMagic.size() + 4 + get_u32(bytes, kBsarMagic.size());
  const std::size_t expected = payload + 16 * count + 4;
  if (bytes.size() < expected) throw FormatError("truncated BSAR1 file (payload cut short)");
  if (bytes.size() > expected) throw FormatError("trailing bytes after BSAR1 payload");
  const std::uint32_t stored = get_u32(bytes, expected - 4);
  if (crc_of(bytes.substr(kBsarMagic.size(), expected - 4 - kBsarMagic.size())) != stored)
    throw ChecksumError("BSAR1 checksum mismatch");
  out.samples.resize(count);
  for (std::size_t i = 0; i < count; ++i)
    out.samples[i] = {get_f64(bytes, payload + 16 * i), get_f64(bytes, payload + 16 * i + 8)};
  return out;
}

void write_file_atomic(const std::filesystem::path& path, std::string_view bytes) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::filesystem::path tmp = path;
  tmp += ".partial";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error("cannot open " + tmp.string() + " for writing");
    f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!f) throw Error("write failed: " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open " + path.string());
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

void write_bsar(const std::filesystem::path& path, const nlohmann::json& header,
                std::span<const std::complex<double>> samples) {
  write_file_atomic(path, encode_bsar(header, samples));
}

BsarContents read_bsar(const std::filesystem::path& path) { return decode_bsar(read_file(path)); }

nlohmann::json read_bsar_header(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error("cannot open " + path.string());
  std::string head(kBsarMagic.size() + 4, '\0');
  f.read(head.data(), static_cast<std::streamsize>(head.size()));
  head.resize(static_cast<std::size_t>(f.gcount()));
  if (head.size() < kBsarMagic.size() + 4) return parse_header(head);
  const std::uint32_t len = get_u32(head, kBsarMagic.size());
  if (len > std::filesystem::file_size(path)) throw FormatError("truncated BSAR1 file (header cut short)");
  std::string text(len, '\0');
  f.read(text.data(), len);
  text.resize(static_cast<std::size_t>(f.gcount()));
  return parse_header(head + text);
}

}  // namespace sarforge::sweep
