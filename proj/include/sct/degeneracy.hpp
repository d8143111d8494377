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

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "sct/graph.hpp"

namespace sct {

/// Degeneracy ordering of a graph and the acyclic orientation it induces.
///
/// `order[i]` is the i-th vertex removed by min-degree peeling and `rank` is
/// its inverse. Every edge is directed from the lower to the higher rank, so
/// N+(v) holds the neighbors removed after v; its size never exceeds the
/// degeneracy. Out-neighbor lists are sorted by vertex id.
class DegeneracyOrientation {
 public:
  DegeneracyOrientation() = default;

  std::size_t vertex_count() const noexcept { return order_.size(); }
  std::uint32_t degeneracy() const noexcept { return degeneracy_; }

  std::span<const Vertex> order() const noexcept { return order_; }
  std::uint32_t rank(Vertex v) const { return rank_.at(v); }
  std::uint32_t core_number(Vertex v) const { return core_.at(v); }
  std::span<const std::uint32_t> core_numbers() const noexcept { return core_; }

  std::span<const Vertex> out_neighbors(Vertex v) const {
    return {out_.data() + out_offsets_.at(v), static_cast<std::size_t>(out_offsets_[v + 1] - out_offsets_[v])};
  }
  std::size_t out_degree(Vertex v) const { return out_neighbors(v).size(); }

 private:
  friend DegeneracyOrientation degeneracy_orient(const Graph& g);

  std::vector<Vertex> order_;
  std::vector<std::uint32_t> rank_;
  std::vector<std::uint32_t> core_;
  std::vector<std::uint64_t> out_offsets_;
  std::vector<Vertex> out_;
  std::uint32_t degeneracy_ = 0;
};

/// Peels a minimum residual-degree vertex at every step using a bucket queue;
/// O(n + m).
DegeneracyOrientation degeneracy_orient(const Graph& g);

struct DegeneracyStats {
  std::uint32_t alpha = 0;
  // Number of vertices whose core number equals alpha.
  std::size_t max_core_size = 0;
  std::vector<Vertex> order;
};

DegeneracyStats degeneracy_stats(const DegeneracyOrientation& o);

}  // namespace sct
