// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 sarforge contributors

#include "sarforge/core/error.hpp"

namespace sarforge {

namespace {

std::string degenerate_message(const std::vector<std::size_t>& facets) {
  std::string msg = "degenerate facet(s):";
  const std::size_t shown = facets.size() < 20 ? facets.size() : 20;
  for (std::size_t i = 0; i < shown; ++i) msg += " " + std::to_string(facets[i]);
  if (shown < facets.size()) msg += " ... (" + std::to_string(facets.size()) + " total)";
  return msg;
}

}  // namespace

DegenerateFacetError::DegenerateFacetError(std::vector<std::size_t> facets)
    : Error(degenerate_message(facets)), facets_(std::move(facets)) {}

}  // namespace sarforge
