// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 sarforge contributors

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sarforge/imaging/image.hpp"
#include "sarforge/sweep/run.hpp"

namespace sarforge::imaging {

struct ClipOptions {
  double swath_deg = 36.0;
  std::size_t stride_steps = 10;
  std::size_t nx = 128;
  std::size_t ny = 128;
  Window window = Window::Rectangular;
  sweep::Channel channel = sweep::Channel::H;
  KeystoneOptions keystone;
  unsigned jobs = 1;
};

/// A clip is flagged degraded when the ground-projected support is weak (support_kappa below
/// the collapse threshold), typically with the receiver opposite the transmitter.
struct Clip {
  std::size_t start_index = 0;
  std::size_t end_index = 0;  // last azimuth index, inclusive (may be < start after wrap)
  bool degraded = false;
  SarImage image;
};

struct SkippedClip {
  std::size_t start_index = 0;
  std::string reason;
};

struct ClipSeries {
  std::vector<Clip> clips;
  std::vector<SkippedClip> skipped;
};

/// Start indices 0, stride, 2 stride, ...: all of them for a full-circle run (patches wrap),
/// otherwise those whose swath fits. Collapsed patches are skipped and reported.
std::vector<std::size_t> clip_starts(const sweep::RunData& run, double swath_deg, std::size_t stride_steps);

ClipSeries clip_series(const sweep::RunData& run, const ClipOptions& options = {});

/// extract_patch -> keystone_resample -> form_image for one start index.
SarImage form_clip(const sweep::RunData& run, std::size_t start_index, const ClipOptions& options);

}  // namespace sarforge::imaging
