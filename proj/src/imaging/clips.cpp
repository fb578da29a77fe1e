// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 sarforge contributors

#include "sarforge/imaging/clips.hpp"

#include <optional>

#include "sarforge/core/error.hpp"
#include "sarforge/core/parallel.hpp"

namespace sarforge::imaging {

std::vector<std::size_t> clip_starts(const sweep::RunData& run, double swath_deg, std::size_t stride_steps) {
  if (stride_steps < 1) throw InvalidSpecError("clip stride must be at least one step");
  const std::size_t cols = swath_columns(run.config, swath_deg);
  if (cols > run.n_azimuth) throw InvalidSpecError("swath wider than the run");
  const bool wrap = sweep::is_full_circle(run.config);
  std::vector<std::size_t> starts;
  for (std::size_t s = 0; s < run.n_azimuth; s += stride_steps) {
    if (!wrap && s + cols > run.n_azimuth) break;
    starts.push_back(s);
  }
  return starts;
}

SarImage form_clip(const sweep::RunData& run, std::size_t start_index, const ClipOptions& options) {
  const KSpacePatch patch = extract_patch(run, start_index, options.swath_deg, options.channel);
  const KeystoneGrid grid = keystone_resample(patch, options.nx, options.ny, options.keystone);
  return form_image(grid, options.window);
}

ClipSeries clip_series(const sweep::RunData& run, const ClipOptions& options) {
  const auto starts = clip_starts(run, options.swath_deg, options.stride_steps);
  const std::size_t cols = swath_columns(run.config, options.swath_deg);
  std::vector<std::optional<Clip>> slots(starts.size());
  std::vector<std::string> reasons(starts.size());
  parallel_for(starts.size(), options.jobs, [&](std::size_t i) {
    try {
      Clip c;
      c.start_index = starts[i];
      c.end_index = (starts[i] + cols - 1) % run.n_azimuth;
      c.image = form_clip(run, starts[i], options);
      c.degraded = c.image.support_kappa < kCollapseThreshold;
      slots[i] = std::move(c);
    } catch (const SupportCollapsedError& e) {
      reasons[i] = e.what();
    }
  });
  ClipSeries out;
  for (std::size_t i = 0; i < starts.size(); ++i) {
    if (slots[i])
      out.clips.push_back(std::move(*slots[i]));
    else
      out.skipped.push_back({starts[i], reasons[i]});
  }
  return out;
}

}  // namespace sarforge::imaging
