// Copyright 2026 The sctcount Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "sct/degeneracy.hpp"

#include <algorithm>
#include <limits>

namespace sct {

namespace {

constexpr Vertex kNone = std::numeric_limits<Vertex>::max();

// Degree buckets as intrusive doubly linked lists. Insertion is at the tail,
// so each bucket is popped in arrival order.
class BucketQueue {
 public:
  BucketQueue(std::size_t n, std::size_t max_key)
      : head_(max_key + 1, kNone), tail_(max_key + 1, kNone), next_(n, kNone), prev_(n, kNone), key_(n, 0) {}

  void insert(Vertex v, std::uint32_t key) {
    key_[v] = key;
    next_[v] = kNone;
    prev_[v] = tail_[key];
    if (tail_[key] != kNone) next_[tail_[key]] = v;
    else head_[key] = v;
    tail_[key] = v;
  }

  void erase(Vertex v) {
    const std::uint32_t key = key_[v];
    if (prev_[v] != kNone) next_[prev_[v]] = next_[v];
    else head_[key] = next_[v];
    if (next_[v] != kNone) prev_[next_[v]] = prev_[v];
    else tail_[key] = prev_[v];
  }

  void decrement(Vertex v) {
    erase(v);
    insert(v, key_[v] - 1);
  }

  std::uint32_t key(Vertex v) const { return key_[v]; }
  Vertex head(std::uint32_t key) const { return head_[key]; }

 private:
  std::vector<Vertex> head_;
  std::vector<Vertex> tail_;
  std::vector<Vertex> next_;
  std::vector<Vertex> prev_;
  std::vector<std::uint32_t> key_;
};

}  // namespace

DegeneracyOrientation degeneracy_orient(const Graph& g) {
  const std::size_t n = g.vertex_count();
  DegeneracyOrientation o;
  o.order_.reserve(n);
  o.rank_.assign(n, 0);
  o.core_.assign(n, 0);
  if (n == 0) {
    o.out_offsets_.assign(1, 0);
    return o;
  }

  BucketQueue queue(n, g.max_degree());
  for (Vertex v = 0; v < n; ++v) queue.insert(v, static_cast<std::uint32_t>(g.degree(v)));

  std::vector<bool> removed(n, false);
  std::uint32_t floor = 0;  // no remaining vertex has residual degree below this
  std::uint32_t running_core = 0;
  for (std::size_t step = 0; step < n; ++step) {
    while (queue.head(floor) == kNone) ++floor;
    const Vertex v = queue.head(floor);
    queue.erase(v);
    removed[v] = true;
    o.rank_[v] = static_cast<std::uint32_t>(step);
    o.order_.push_back(v);
    running_core = std::max(running_core, floor);
    o.core_[v] = running_core;
    for (Vertex u : g.neighbors(v)) {
      if (!removed[u]) queue.decrement(u);
    }
    // Removing one vertex lowers any residual degree by at most one.
    if (floor > 0) --floor;
  }
  o.degeneracy_ = running_core;

  o.out_offsets_.assign(n + 1, 0);
  for (Vertex v = 0; v < n; ++v) {
    std::uint64_t out = 0;
    for (Vertex u : g.neighbors(v))
      if (o.rank_[u] > o.rank_[v]) ++out;
    o.out_offsets_[v + 1] = o.out_offsets_[v] + out;
  }
  o.out_.reserve(o.out_offsets_[n]);
  // Neighbor lists are sorted, so the filtered lists stay sorted by id.
  for (Vertex v = 0; v < n; ++v)
    for (Vertex u : g.neighbors(v))
      if (o.rank_[u] > o.rank_[v]) o.out_.push_back(u);
  return o;
}

DegeneracyStats degeneracy_stats(const DegeneracyOrientation& o) {
  DegeneracyStats stats;
  stats.alpha = o.degeneracy();
  stats.max_core_size = static_cast<std::size_t>(
      std::count(o.core_numbers().begin(), o.core_numbers().end(), o.degeneracy()));
  stats.order.assign(o.order().begin(), o.order().end());
  return stats;
}

}  // namespace sct
