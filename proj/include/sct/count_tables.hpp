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
#include <cstddef>
#include <optional>
#include <vector>

#include "sct/counter.hpp"
#include "sct/graph.hpp"

namespace sct {

/// Global, per-vertex and per-edge k-clique counts.
///
/// Rows are sized lazily to the largest k touched: `global[k - 1]` is C_k,
/// `per_vertex[v][k - 1]` is c_k(v), `per_edge[e][k - 2]` is c_k(e) for the
/// canonical edge id e. Every stored entry is positive, because a k-clique
/// has sub-cliques of every smaller size.
template <typename C>
struct BasicCountTables {
  std::vector<C> global;
  std::vector<std::vector<C>> per_vertex;  // empty unless requested
  std::vector<std::vector<C>> per_edge;    // empty unless requested
  bool has_per_vertex = false;
  bool has_per_edge = false;

  /// Largest k with C_k > 0; 0 for the empty graph.
  std::size_t max_k() const noexcept { return global.size(); }

  C global_count(std::size_t k) const { return at(global, k, 1); }
  C vertex_count(Vertex v, std::size_t k) const { return at(per_vertex.at(v), k, 1); }
  C edge_count(EdgeId e, std::size_t k) const { return at(per_edge.at(e), k, 2); }

  friend bool operator==(const BasicCountTables&, const BasicCountTables&) = default;

  static C at(const std::vector<C>& row, std::size_t k, std::size_t first_k) {
    if (k < first_k || k - first_k >= row.size()) return C{};
    return row[k - first_k];
  }
};

using CountTables = BasicCountTables<BigCount>;

template <typename C>
void add_at(std::vector<C>& row, std::size_t index, const C& value) {
  if (row.size() <= index) row.resize(index + 1);
  row[index] += value;
}

/// Element-wise sum of every table in `from` into `into`.
template <typename C>
void merge_into(BasicCountTables<C>& into, const BasicCountTables<C>& from) {
  auto merge_row = [](std::vector<C>& a, const std::vector<C>& b) {
    for (std::size_t i = 0; i < b.size(); ++i) add_at(a, i, b[i]);
  };
  merge_row(into.global, from.global);
  if (from.has_per_vertex) {
    into.per_vertex.resize(std::max(into.per_vertex.size(), from.per_vertex.size()));
    for (std::size_t v = 0; v < from.per_vertex.size(); ++v) merge_row(into.per_vertex[v], from.per_vertex[v]);
  }
  if (from.has_per_edge) {
    into.per_edge.resize(std::max(into.per_edge.size(), from.per_edge.size()));
    for (std::size_t e = 0; e < from.per_edge.size(); ++e) merge_row(into.per_edge[e], from.per_edge[e]);
  }
  into.has_per_vertex |= from.has_per_vertex;
  into.has_per_edge |= from.has_per_edge;
}

/// Converts a fixed-width table to arbitrary precision. Exact.
template <typename C>
CountTables widen(const BasicCountTables<C>& t) {
  CountTables out;
  auto widen_row = [](const std::vector<C>& row) {
    std::vector<BigCount> r;
    r.reserve(row.size());
    for (const C& c : row) r.push_back(to_big(c));
    return r;
  };
  out.global = widen_row(t.global);
  out.has_per_vertex = t.has_per_vertex;
  out.has_per_edge = t.has_per_edge;
  out.per_vertex.reserve(t.per_vertex.size());
  for (const auto& row : t.per_vertex) out.per_vertex.push_back(widen_row(row));
  out.per_edge.reserve(t.per_edge.size());
  for (const auto& row : t.per_edge) out.per_edge.push_back(widen_row(row));
  return out;
}

/// The k <= max_k prefix of every table.
CountTables truncate(const CountTables& t, std::size_t max_k);

}  // namespace sct
