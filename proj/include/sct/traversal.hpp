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

#pragma once

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sct/bitset.hpp"
#include "sct/degeneracy.hpp"
#include "sct/graph.hpp"
#include "sct/subproblem.hpp"

namespace sct {

/// Link labels collected along the current root-to-leaf path: vertices reached
/// through hold links (always in the represented cliques) and through pivot
/// links (optional). Valid only for the duration of the sink call.
struct PathLabels {
  std::span<const Vertex> hold;
  std::span<const Vertex> pivots;
};

struct TraversalOptions {
  /// Prune any branch whose hold set would grow past this size.
  std::optional<std::size_t> max_hold;
};

/// Shape of the (implicit) succinct clique tree. `node_count` counts every
/// created node except the root, empty leaves included; `max_depth` is the
/// deepest node's distance from the root.
struct TraversalStats {
  std::uint64_t node_count = 0;
  std::uint64_t leaf_count = 0;
  std::uint64_t max_depth = 0;

  TraversalStats& operator+=(const TraversalStats& other) {
    node_count += other.node_count;
    leaf_count += other.leaf_count;
    max_depth = std::max(max_depth, other.max_depth);
    return *this;
  }
  friend bool operator==(const TraversalStats&, const TraversalStats&) = default;
};

/// Depth-first walk of the succinct clique tree that keeps only the current
/// path. One instance holds the scratch state of one traversal: an n-entry
/// index map plus O(alpha^2) bits for the root-child matrix and two masks per
/// tree level. Instances are not thread-safe; use one per worker.
///
/// Each root child v has label N+(v). Below it every node label is a bit-mask
/// over the local ids of that root child's subproblem: a child is produced by
/// masking a row of the matrix, never by copying it. Native recursion is used;
/// its depth is at most alpha + 1.
class Traverser {
 public:
  Traverser(const Graph& g, const DegeneracyOrientation& o)
      : graph_(&g), orientation_(&o), local_of_(o.vertex_count(), SubProblem::kNoLocal) {
    const std::size_t alpha = o.degeneracy();
    const std::size_t stride = bits::words_for(alpha);
    levels_ = alpha + 2;
    arena_.assign(2 * levels_ * stride, 0);
    hold_.reserve(alpha + 1);
    pivots_.reserve(alpha + 1);
  }

  /// Walks the subtree under root child v, adding to `stats`.
  template <typename Sink>
  void run_root(Vertex v, Sink& sink, const TraversalOptions& options, TraversalStats& stats) {
    if (options.max_hold && *options.max_hold < 1) return;
    max_hold_ = options.max_hold;
    root_.assign_out_neighborhood(*orientation_, v, local_of_);
    stride_ = root_.words_per_row();
    hold_.clear();
    pivots_.clear();
    hold_.push_back(v);

    ++stats.node_count;
    stats.max_depth = std::max<std::uint64_t>(stats.max_depth, 1);
    auto top = label(1);
    std::fill(top.begin(), top.end(), 0);
    for (std::size_t i = 0; i < root_.size(); ++i) bits::set(top, i);
    descend(1, sink, stats);
    hold_.pop_back();
  }

  template <typename Sink>
  TraversalStats run_all(Sink& sink, const TraversalOptions& options = {}) {
    TraversalStats stats;
    const auto n = static_cast<Vertex>(orientation_->vertex_count());
    for (Vertex v = 0; v < n; ++v) run_root(v, sink, options, stats);
    return stats;
  }

  std::size_t scratch_words() const noexcept { return arena_.size(); }

 private:
  std::span<bits::Word> label(std::size_t level) { return {arena_.data() + (2 * level) * stride_, stride_}; }
  std::span<bits::Word> outside(std::size_t level) { return {arena_.data() + (2 * level + 1) * stride_, stride_}; }

  template <typename Sink>
  void descend(std::size_t level, Sink& sink, TraversalStats& stats) {
    assert(level < levels_);
    auto here = label(level);
    if (!bits::any(here)) {
      ++stats.leaf_count;
      assert(path_is_clique());
      sink(PathLabels{hold_, pivots_});
      return;
    }

    const std::uint32_t p = select_pivot(root_, here);
    const auto p_row = root_.row(p);

    // Pivot child, created even when N(S, p) is empty.
    bits::assign_and(label(level + 1), p_row, here);
    ++stats.node_count;
    stats.max_depth = std::max<std::uint64_t>(stats.max_depth, level + 1);
    pivots_.push_back(root_.global_id(p));
    descend(level + 1, sink, stats);
    pivots_.pop_back();

    if (max_hold_ && hold_.size() + 1 > *max_hold_) return;

    // Non-neighbors of p inside S, p excluded.
    auto others = outside(level);
    bits::assign_and_not(others, here, p_row);
    bits::reset(others, p);
    // Processing v_i removes it from S, so later children exclude v_1..v_i.
    bits::for_each(std::span<const bits::Word>(others), [&](std::size_t v) {
      bits::assign_and(label(level + 1), root_.row(v), here);
      ++stats.node_count;
      stats.max_depth = std::max<std::uint64_t>(stats.max_depth, level + 1);
      hold_.push_back(root_.global_id(v));
      descend(level + 1, sink, stats);
      hold_.pop_back();
      bits::reset(here, v);
    });
  }

  bool path_is_clique() const {
    const std::size_t h = hold_.size(), total = h + pivots_.size();
    auto at = [&](std::size_t i) { return i < h ? hold_[i] : pivots_[i - h]; };
    for (std::size_t a = 0; a < total; ++a)
      for (std::size_t b = a + 1; b < total; ++b)
        if (!graph_->are_adjacent(at(a), at(b))) return false;
    return true;
  }

  const Graph* graph_;
  const DegeneracyOrientation* orientation_;
  SubProblem root_;
  std::vector<std::uint32_t> local_of_;
  std::vector<bits::Word> arena_;
  std::size_t levels_ = 0;
  std::size_t stride_ = 0;
  std::optional<std::size_t> max_hold_;
  std::vector<Vertex> hold_;
  std::vector<Vertex> pivots_;
};

/// Streams every root-to-leaf path of the succinct clique tree to `sink`,
/// invoked as sink(const PathLabels&). Single-threaded; reentrant across
/// distinct calls.
template <typename Sink>
TraversalStats traverse(const Graph& g, const DegeneracyOrientation& o, Sink&& sink,
                        const TraversalOptions& options = {}) {
  Traverser t(g, o);
  return t.run_all(sink, options);
}

}  // namespace sct
