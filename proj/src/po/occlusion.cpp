// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 sarforge contributors

#include "sarforge/po/occlusion.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace sarforge::po {

using geometry::Vector3;

namespace {

constexpr std::uint32_t kLeafSize = 4;

bool ray_hits_box(const Vector3& o, const Vector3& inv, const Vector3& lo, const Vector3& hi) {
  double tmin = 0.0, tmax = std::numeric_limits<double>::infinity();
  for (int a = 0; a < 3; ++a) {
    double t0 = (lo[a] - o[a]) * inv[a];
    double t1 = (hi[a] - o[a]) * inv[a];
    if (std::isnan(t0) || std::isnan(t1)) {
      // Ray parallel to the slab and origin on its face; treat as inside.
      if (o[a] < lo[a] || o[a] > hi[a]) return false;
      continue;
    }
    if (t0 > t1) std::swap(t0, t1);
    tmin = std::max(tmin, t0);
    tmax = std::min(tmax, t1);
    if (tmin > tmax * (1.0 + 4.0 * std::numeric_limits<double>::epsilon())) return false;
  }
  return true;
}

/// Watertight ray/triangle intersection (Woop, Benthin, Wald 2013). Hit requires t > 0.
struct WatertightRay {
  int kx, ky, kz;
  double sx, sy, sz;
  Vector3 org;

  WatertightRay(const Vector3& o, const Vector3& d) : org(o) {
    const double ad[3] = {std::abs(d.x), std::abs(d.y), std::abs(d.z)};
    kz = ad[0] > ad[1] ? (ad[0] > ad[2] ? 0 : 2) : (ad[1] > ad[2] ? 1 : 2);
    kx = (kz + 1) % 3;
    ky = (kx + 1) % 3;
    if (d[kz] < 0.0) std::swap(kx, ky);
    sx = d[kx] / d[kz];
    sy = d[ky] / d[kz];
    sz = 1.0 / d[kz];
  }

  bool hits(const std::array<Vector3, 3>& tri) const {
    const Vector3 A = tri[0] - org, B = tri[1] - org, C = tri[2] - org;
    const double Ax = A[kx] - sx * A[kz], Ay = A[ky] - sy * A[kz];
    const double Bx = B[kx] - sx * B[kz], By = B[ky] - sy * B[kz];
    const double Cx = C[kx] - sx * C[kz], Cy = C[ky] - sy * C[kz];
    double U = Cx * By - Cy * Bx;
    double V = Ax * Cy - Ay * Cx;
    double W = Bx * Ay - By * Ax;
    if (U == 0.0 || V == 0.0 || W == 0.0) {
      // Exact edge case: redo in extended precision.
      U = static_cast<double>(static_cast<long double>(Cx) * By - static_cast<long double>(Cy) * Bx);
      V = static_cast<double>(static_cast<long double>(Ax) * Cy - static_cast<long double>(Ay) * Cx);
      W = static_cast<double>(static_cast<long double>(Bx) * Ay - static_cast<long double>(By) * Ax);
    }
    if ((U < 0.0 || V < 0.0 || W < 0.0) && (U > 0.0 || V > 0.0 || W > 0.0)) return false;
    const double det = U + V + W;
    if (det == 0.0) return false;
    const double Az = sz * A[kz], Bz = sz * B[kz], Cz = sz * C[kz];
    const double T = U * Az + V * Bz + W * Cz;
    // t = T / det > 0
    return det > 0.0 ? T > 0.0 : T < 0.0;
  }
};

}  // namespace

OcclusionIndex::OcclusionIndex(const geometry::Mesh& mesh) {
  const std::size_t n = mesh.facet_count();
  tris_.reserve(n);
  centers_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    tris_.push_back(mesh.corners(i));
    centers_.push_back(mesh.facets()[i].centroid);
  }
  order_.resize(n);
  for (std::uint32_t i = 0; i < n; ++i) order_[i] = i;
  if (n > 0) {
    nodes_.reserve(2 * n / kLeafSize + 2);
    build(0, static_cast<std::uint32_t>(n));
  }
}

std::uint32_t OcclusionIndex::build(std::uint32_t begin, std::uint32_t end) {
  const auto id = static_cast<std::uint32_t>(nodes_.size());
  nodes_.push_back({});
  Vector3 lo{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity(),
             std::numeric_limits<double>::infinity()};
  Vector3 hi = -lo;
  Vector3 clo = lo, chi = hi;
  for (std::uint32_t i = begin; i < end; ++i) {
    for (const Vector3& p : tris_[order_[i]]) {
      lo = {std::min(lo.x, p.x), std::min(lo.y, p.y), std::min(lo.z, p.z)};
      hi = {std::max(hi.x, p.x), std::max(hi.y, p.y), std::max(hi.z, p.z)};
    }
    const Vector3& c = centers_[order_[i]];
    clo = {std::min(clo.x, c.x), std::min(clo.y, c.y), std::min(clo.z, c.z)};
    chi = {std::max(chi.x, c.x), std::max(chi.y, c.y), std::max(chi.z, c.z)};
  }
  nodes_[id].lo = lo;
  nodes_[id].hi = hi;
  if (end - begin <= kLeafSize) {
    nodes_[id].first = begin;
    nodes_[id].count = end - begin;
    return id;
  }
  const Vector3 ext = chi - clo;
  const int axis = ext.x >= ext.y ? (ext.x >= ext.z ? 0 : 2) : (ext.y >= ext.z ? 1 : 2);
  const std::uint32_t mid = begin + (end - begin) / 2;
  std::nth_element(order_.begin() + begin, order_.begin() + mid, order_.begin() + end,
                   [&](std::uint32_t a, std::uint32_t b) {
                     const double ca = centers_[a][axis], cb = centers_[b][axis];
                     return ca < cb || (ca == cb && a < b);
                   });
  build(begin, mid);  // left child is id + 1
  const std::uint32_t right = build(mid, end);
  nodes_[id].first = right;
  nodes_[id].count = 0;
  return id;
}

bool OcclusionIndex::blocked(const Vector3& origin, const Vector3& dir, std::size_t skip_facet) const {
  if (nodes_.empty()) return false;
  const Vector3 inv{1.0 / dir.x, 1.0 / dir.y, 1.0 / dir.z};
  const WatertightRay ray(origin, dir);
  std::uint32_t stack[64];
  int top = 0;
  stack[top++] = 0;
  while (top > 0) {
    const Node& node = nodes_[stack[--top]];
    if (!ray_hits_box(origin, inv, node.lo, node.hi)) continue;
    if (node.count > 0) {
      for (std::uint32_t i = node.first; i < node.first + node.count; ++i) {
        const std::uint32_t f = order_[i];
        if (f == skip_facet) continue;
        if (ray.hits(tris_[f])) return true;
      }
    } else {
      const auto self = static_cast<std::uint32_t>(&node - nodes_.data());
      stack[top++] = node.first;
      stack[top++] = self + 1;
    }
  }
  return false;
}

bool OcclusionIndex::facet_blocked(std::size_t f, const Vector3& dir) const {
  return blocked(centers_[f] + dir * kSelfOffset, dir, f);
}

}  // namespace sarforge::po
