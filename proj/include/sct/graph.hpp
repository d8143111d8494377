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
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace sct {

using Vertex = std::uint32_t;
using EdgeId = std::uint64_t;

/// Simple undirected graph in compressed adjacency form.
///
/// Adjacency lists are sorted ascending, duplicate-free and loop-free. Edges
/// have canonical ids: the pairs (u, v) with u < v, ordered lexicographically.
/// Immutable after construction.
class Graph {
 public:
  Graph() = default;

  /// Builds a normalized graph over vertices [0, n). Self-loops are dropped,
  /// duplicate and reversed pairs collapsed. `labels` names each dense id; when
  /// empty the decimal id is used.
  static Graph from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges,
                          std::vector<std::string> labels = {});

  std::size_t vertex_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return adjacency_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }
  std::size_t max_degree() const noexcept;

  /// O(log d) membership test on the shorter of the two lists.
  bool are_adjacent(Vertex u, Vertex v) const;

  /// Canonical id of edge {u, v}, or nullopt when not an edge.
  std::optional<EdgeId> edge_id(Vertex u, Vertex v) const;
  /// Inverse of edge_id; returns (u, v) with u < v.
  std::pair<Vertex, Vertex> edge_endpoints(EdgeId e) const;

  const std::string& label(Vertex v) const;
  std::span<const std::string> labels() const noexcept { return labels_; }

  /// Calls fn(u, v) for every edge with u < v in canonical order.
  template <typename Fn>
  void for_each_edge(Fn&& fn) const {
    const auto n = static_cast<Vertex>(vertex_count());
    for (Vertex u = 0; u < n; ++u) {
      for (std::uint64_t i = upper_start_[u]; i < offsets_[u + 1]; ++i) fn(u, adjacency_[i]);
    }
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(Vertex v) const;

  std::vector<std::uint64_t> offsets_;
  std::vector<Vertex> adjacency_;
  // Index into adjacency_ of the first neighbor greater than the vertex.
  std::vector<std::uint64_t> upper_start_;
  // Canonical id of the first edge (u, v) with u equal to the vertex.
  std::vector<EdgeId> edge_base_;
  std::vector<std::string> labels_;
};

/// Reads "u v" lines. '#' and '%' start comment lines, blank lines are skipped.
/// Labels are arbitrary whitespace-free tokens mapped to dense ids in order of
/// first appearance.
Graph load_edge_list(std::istream& in);
Graph load_edge_list_file(const std::filesystem::path& path);

/// Writes "u v\n" for every edge, u < v, in canonical order of dense ids.
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace sct
