// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 sarforge contributors

#pragma once

#include <cstddef>
#include <array>
#include <cstdint>
#include <vector>

#include "sarforge/geometry/mesh.hpp"

namespace sarforge::po {

/// Bounding-volume hierarchy over the facets of one mesh for any-hit ray queries.
/// Immutable after construction; queries are thread-safe.
class OcclusionIndex {
 public:
  explicit OcclusionIndex(const geometry::Mesh& mesh);

  /// True if the ray origin + t*dir, t > 0, hits any facet other than `skip_facet`.
  /// Uses a watertight ray/triangle test, so rays through shared edges cannot slip between facets.
  bool blocked(const geometry::Vector3& origin, const geometry::Vector3& dir, std::size_t skip_facet) const;

  /// Offset (m) applied along the ray before testing from a facet centroid.
  static constexpr double kSelfOffset = 1e-9;

  /// blocked() for the ray leaving facet f's centroid toward unit direction `dir`.
  bool facet_blocked(std::size_t f, const geometry::Vector3& dir) const;

 private:
  struct Node {
    geometry::Vector3 lo, hi;
    std::uint32_t first = 0;  // leaf: first index into order_; inner: right child
    std::uint32_t count = 0;  // 0 for inner nodes
  };

  std::uint32_t build(std::uint32_t begin, std::uint32_t end);

  std::vector<std::array<geometry::Vector3, 3>> tris_;
  std::vector<geometry::Vector3> centers_;
  std::vector<std::uint32_t> order_;
  std::vector<Node> nodes_;
};

}  // namespace sarforge::po
