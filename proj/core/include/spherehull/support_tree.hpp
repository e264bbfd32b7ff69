// Copyright 2026 The SphereHull Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace spherehull {

/// Static kd-tree answering support queries (argmax of d·p) by
/// branch-and-bound over node bounding boxes. Results are identical to an
/// exhaustive scan using the same dot-product evaluation order.
///
/// Ties on the primary direction are resolved by optional secondary and
/// tertiary directions, then by the lowest original index.
template <std::size_t Dim>
class SupportTree {
 public:
  using Coord = std::array<double, Dim>;

  SupportTree() = default;

  /// `indices` selects which entries of `points` participate; results are
  /// reported as these original indices.
  SupportTree(std::span<const Coord> points, std::span<const std::size_t> indices) {
    items_.reserve(indices.size());
    for (std::size_t idx : indices) items_.push_back({points[idx], idx});
    if (!items_.empty()) {
      nodes_.reserve(2 * items_.size() / kLeafSize + 2);
      Build(0, items_.size());
    }
  }

  bool empty() const { return items_.empty(); }
  std::size_t size() const { return items_.size(); }

  static double Dot(const Coord& a, const Coord& b) {
    double s = a[0] * b[0];
    for (std::size_t k = 1; k < Dim; ++k) s += a[k] * b[k];
    return s;
  }

  /// Returns the original index of the support point, or SIZE_MAX if empty.
  /// `tiebreak` holds up to Dim-1 further directions compared in order.
  std::size_t Query(const Coord& d, std::span<const Coord> tiebreak = {}) const {
    if (items_.empty()) return std::numeric_limits<std::size_t>::max();
    const Item* best = nullptr;
    double best_dot = -std::numeric_limits<double>::infinity();

    auto better = [&](const Item& it, double s) {
      if (best == nullptr || s > best_dot) return true;
      if (s < best_dot) return false;
      for (const Coord& t : tiebreak) {
        const double a = Dot(t, it.p);
        const double b = Dot(t, best->p);
        if (a != b) return a > b;
      }
      return it.index < best->index;
    };

    // Explicit stack; depth is O(log n) because splits are at the median.
    std::array<std::uint32_t, 128> stack{};
    std::size_t top = 0;
    stack[top++] = 0;
    while (top > 0) {
      const Node& node = nodes_[stack[--top]];
      const double bound = Bound(node, d);
      if (best != nullptr && bound < best_dot - Slack(best_dot)) continue;
      if (node.left == kNoChild) {
        for (std::uint32_t i = node.begin; i < node.end; ++i) {
          const Item& it = items_[i];
          const double s = Dot(d, it.p);
          if (better(it, s)) {
            best = &it;
            best_dot = s;
          }
        }
        continue;
      }
      // Push the less promising child first so the better one is popped next.
      const double bl = Bound(nodes_[node.left], d);
      const double br = Bound(nodes_[node.right], d);
      if (bl > br) {
        stack[top++] = node.right;
        stack[top++] = node.left;
      } else {
        stack[top++] = node.left;
        stack[top++] = node.right;
      }
    }
    return best->index;
  }

 private:
  static constexpr std::uint32_t kLeafSize = 8;
  static constexpr std::uint32_t kNoChild = std::numeric_limits<std::uint32_t>::max();

  struct Item {
    Coord p;
    std::size_t index;
  };
  struct Node {
    Coord lo;
    Coord hi;
    std::uint32_t begin;
    std::uint32_t end;
    std::uint32_t left = kNoChild;
    std::uint32_t right = kNoChild;
  };

  static double Slack(double v) { return 1e-12 * (1.0 + std::abs(v)); }

  static double Bound(const Node& n, const Coord& d) {
    double s = std::max(d[0] * n.lo[0], d[0] * n.hi[0]);
    for (std::size_t k = 1; k < Dim; ++k) s += std::max(d[k] * n.lo[k], d[k] * n.hi[k]);
    return s;
  }

  std::uint32_t Build(std::size_t begin, std::size_t end) {
    const auto id = static_cast<std::uint32_t>(nodes_.size());
    nodes_.push_back({});
    Coord lo, hi;
    lo.fill(std::numeric_limits<double>::infinity());
    hi.fill(-std::numeric_limits<double>::infinity());
    for (std::size_t i = begin; i < end; ++i) {
      for (std::size_t k = 0; k < Dim; ++k) {
        lo[k] = std::min(lo[k], items_[i].p[k]);
        hi[k] = std::max(hi[k], items_[i].p[k]);
      }
    }
    nodes_[id].lo = lo;
    nodes_[id].hi = hi;
    nodes_[id].begin = static_cast<std::uint32_t>(begin);
    nodes_[id].end = static_cast<std::uint32_t>(end);
    if (end - begin <= kLeafSize) return id;

    std::size_t axis = 0;
    for (std::size_t k = 1; k < Dim; ++k) {
      if (hi[k] - lo[k] > hi[axis] - lo[axis]) axis = k;
    }
    if (!(hi[axis] > lo[axis])) return id;  // all coincident
    const std::size_t mid = begin + (end - begin) / 2;
    std::nth_element(items_.begin() + begin, items_.begin() + mid, items_.begin() + end,
                     [axis](const Item& a, const Item& b) { return a.p[axis] < b.p[axis]; });
    const std::uint32_t left = Build(begin, mid);
    const std::uint32_t right = Build(mid, end);
    nodes_[id].left = left;
    nodes_[id].right = right;
    return id;
  }

  std::vector<Item> items_;
  std::vector<Node> nodes_;
};

}  // namespace spherehull
