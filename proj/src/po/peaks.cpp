// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 sarforge contributors

#include "sarforge/po/peaks.hpp"

#include <algorithm>
#include <limits>
#include <optional>

namespace sarforge::po {

std::vector<CurvePeak> find_prominent_peaks(std::span<const double> v, double min_prominence, bool circular) {
  const std::size_t n = v.size();
  std::vector<CurvePeak> out;
  if (n == 0) return out;
  const double lowest = *std::min_element(v.begin(), v.end());

  auto at = [&](std::ptrdiff_t i) -> std::optional<double> {
    if (circular) return v[static_cast<std::size_t>(((i % static_cast<std::ptrdiff_t>(n)) + n) % n)];
    if (i < 0 || i >= static_cast<std::ptrdiff_t>(n)) return std::nullopt;
    return v[static_cast<std::size_t>(i)];
  };

  // Lowest value met walking from i in `step` direction before reaching a higher sample;
  // nullopt if none is reached.
  auto saddle = [&](std::size_t i, int step) -> std::optional<double> {
    double low = v[i];
    for (std::size_t s = 1; s < n; ++s) {
      const auto x = at(static_cast<std::ptrdiff_t>(i) + step * static_cast<std::ptrdiff_t>(s));
      if (!x) return std::nullopt;
      if (*x > v[i]) return low;
      low = std::min(low, *x);
    }
    return std::nullopt;
  };

  for (std::size_t i = 0; i < n; ++i) {
    const auto left = at(static_cast<std::ptrdiff_t>(i) - 1);
    const auto right = at(static_cast<std::ptrdiff_t>(i) + 1);
    // Plateaus count once, at their first sample.
    if (left && !(*left < v[i])) continue;
    if (right && *right > v[i]) continue;
    if (right && *right == v[i]) {
      std::size_t j = i + 1;
      while (at(static_cast<std::ptrdiff_t>(j)) && *at(static_cast<std::ptrdiff_t>(j)) == v[i] && j < i + n) ++j;
      const auto after = at(static_cast<std::ptrdiff_t>(j));
      if (after && *after > v[i]) continue;
    }
    const auto sl = saddle(i, -1), sr = saddle(i, +1);
    double key;
    if (!sl && !sr) key = lowest;
    else if (!sl) key = *sr;
    else if (!sr) key = *sl;
    else key = std::max(*sl, *sr);
    const double prominence = v[i] - key;
    if (prominence >= min_prominence) out.push_back({i, v[i], prominence});
  }
  std::stable_sort(out.begin(), out.end(), [](const CurvePeak& a, const CurvePeak& b) { return a.value > b.value; });
  return out;
}

}  // namespace sarforge::po
