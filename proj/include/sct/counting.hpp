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
#include <optional>

#include "sct/binomial.hpp"
#include "sct/count_tables.hpp"
#include "sct/degeneracy.hpp"
#include "sct/graph.hpp"
#include "sct/traversal.hpp"

namespace sct {

/// Which local tables to fill besides the global one.
struct CountScope {
  bool per_vertex = false;
  bool per_edge = false;
};

/// Applies one root-to-leaf path's increments. With h = |H| and p = |P|, the
/// path represents C(p, i) cliques of size h + i; a hold vertex lies in all of
/// them, a pivot vertex in C(p - 1, i) of those of size h + i + 1, and an edge
/// in the analogous counts according to how many endpoints are pivots.
/// Sizes above `max_k` are skipped.
template <typename C>
void accumulate_leaf(BasicCountTables<C>& tables, const PathLabels& labels, const BinomialTable<C>& binom,
                     const Graph& g, CountScope scope, std::optional<std::size_t> max_k) {
  const std::size_t h = labels.hold.size();
  const std::size_t p = labels.pivots.size();
  // Number of terms i = 0..limit-1 allowed for a target size base + i.
  auto terms = [&](std::size_t base, std::size_t count) -> std::size_t {
    if (!max_k) return count;
    if (base > *max_k) return 0;
    return std::min(count, *max_k - base + 1);
  };

  const std::size_t hold_terms = terms(h, p + 1);
  for (std::size_t i = 0; i < hold_terms; ++i) add_at(tables.global, h + i - 1, binom(p, i));

  if (scope.per_vertex) {
    for (Vertex v : labels.hold) {
      auto& row = tables.per_vertex[v];
      for (std::size_t i = 0; i < hold_terms; ++i) add_at(row, h + i - 1, binom(p, i));
    }
    if (p >= 1) {
      const std::size_t n_terms = terms(h + 1, p);
      for (Vertex v : labels.pivots) {
        auto& row = tables.per_vertex[v];
        for (std::size_t i = 0; i < n_terms; ++i) add_at(row, h + i, binom(p - 1, i));
      }
    }
  }

  if (scope.per_edge) {
    auto edge_row = [&](Vertex a, Vertex b) -> std::vector<C>& { return tables.per_edge[*g.edge_id(a, b)]; };
    for (std::size_t a = 0; a < h; ++a)
      for (std::size_t b = a + 1; b < h; ++b) {
        auto& row = edge_row(labels.hold[a], labels.hold[b]);
        for (std::size_t i = 0; i < hold_terms; ++i) add_at(row, h + i - 2, binom(p, i));
      }
    if (p >= 1) {
      const std::size_t n_terms = terms(h + 1, p);
      for (Vertex u : labels.pivots)
        for (Vertex v : labels.hold) {
          auto& row = edge_row(u, v);
          for (std::size_t i = 0; i < n_terms; ++i) add_at(row, h + i - 1, binom(p - 1, i));
        }
    }
    if (p >= 2) {
      const std::size_t n_terms = terms(h + 2, p - 1);
      for (std::size_t a = 0; a < p; ++a)
        for (std::size_t b = a + 1; b < p; ++b) {
          auto& row = edge_row(labels.pivots[a], labels.pivots[b]);
          for (std::size_t i = 0; i < n_terms; ++i) add_at(row, h + i, binom(p - 2, i));
        }
    }
  }
}

/// Traversal sink that feeds every leaf to accumulate_leaf.
template <typename C>
class LeafAccumulator {
 public:
  LeafAccumulator(const Graph& g, const BinomialTable<C>& binom, BasicCountTables<C>& tables, CountScope scope,
                  std::optional<std::size_t> max_k)
      : graph_(g), binom_(binom), tables_(tables), scope_(scope), max_k_(max_k) {}

  void operator()(const PathLabels& labels) { accumulate_leaf(tables_, labels, binom_, graph_, scope_, max_k_); }

 private:
  const Graph& graph_;
  const BinomialTable<C>& binom_;
  BasicCountTables<C>& tables_;
  CountScope scope_;
  std::optional<std::size_t> max_k_;
};

/// Empty tables with local rows allocated for every vertex / edge requested.
template <typename C>
BasicCountTables<C> make_tables(const Graph& g, CountScope scope) {
  BasicCountTables<C> t;
  t.has_per_vertex = scope.per_vertex;
  t.has_per_edge = scope.per_edge;
  if (scope.per_vertex) t.per_vertex.resize(g.vertex_count());
  if (scope.per_edge) t.per_edge.resize(g.edge_count());
  return t;
}

struct CountOptions {
  CountScope scope;
  std::optional<std::size_t> max_k;
  /// Worker threads; only global-only runs are parallelized.
  std::size_t threads = 1;
  CounterKind counters = CounterKind::exact;
};

struct CountRun {
  CountTables tables;
  TraversalStats sct;
  std::size_t threads_used = 1;
};

/// Counts over a precomputed orientation of g.
CountRun count_with_orientation(const Graph& g, const DegeneracyOrientation& o, const CountOptions& options);

/// Orients g by degeneracy and counts all cliques (or those up to max_k).
CountTables count(const Graph& g, const CountOptions& options = {});

/// Largest k with C_k > 0; 0 for the empty graph.
std::size_t max_clique_size(const CountTables& tables);

}  // namespace sct
