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

#include "sct/counting.hpp"

#include "sct/errors.hpp"
#include "sct/parallel.hpp"

namespace sct {

namespace {

template <typename C>
CountRun run_sequential(const Graph& g, const DegeneracyOrientation& o, const CountOptions& options) {
  // Pivot sets never exceed a root child's label, whose size is at most alpha.
  const BinomialTable<C> binom(o.degeneracy() + 1);
  auto tables = make_tables<C>(g, options.scope);
  LeafAccumulator<C> sink(g, binom, tables, options.scope, options.max_k);
  CountRun run;
  run.sct = traverse(g, o, sink, TraversalOptions{options.max_k});
  if constexpr (std::is_same_v<C, BigCount>) {
    run.tables = std::move(tables);
  } else {
    run.tables = widen(tables);
  }
  return run;
}

}  // namespace

CountRun count_with_orientation(const Graph& g, const DegeneracyOrientation& o, const CountOptions& options) {
  if (options.threads == 0) throw UsageError("thread count must be at least 1");
  const bool local = options.scope.per_vertex || options.scope.per_edge;
  if (options.threads > 1 && !local) {
    ParallelRun par = count_global_parallel(g, o, options.threads, options.max_k, options.counters);
    CountRun run;
    run.tables = std::move(par.tables);
    run.sct = par.sct;
    run.threads_used = options.threads;
    return run;
  }
  if (options.counters == CounterKind::fast128) return run_sequential<Checked128>(g, o, options);
  return run_sequential<BigCount>(g, o, options);
}

CountTables count(const Graph& g, const CountOptions& options) {
  const DegeneracyOrientation o = degeneracy_orient(g);
  return count_with_orientation(g, o, options).tables;
}

std::size_t max_clique_size(const CountTables& tables) {
  std::size_t k = tables.global.size();
  while (k > 0 && tables.global[k - 1] == 0) --k;
  return k;
}

CountTables truncate(const CountTables& t, std::size_t max_k) {
  CountTables out;
  out.has_per_vertex = t.has_per_vertex;
  out.has_per_edge = t.has_per_edge;
  auto cut = [](const std::vector<BigCount>& row, std::size_t keep) {
    return std::vector<BigCount>(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(std::min(keep, row.size())));
  };
  out.global = cut(t.global, max_k);
  out.per_vertex.reserve(t.per_vertex.size());
  for (const auto& row : t.per_vertex) out.per_vertex.push_back(cut(row, max_k));
  out.per_edge.reserve(t.per_edge.size());
  for (const auto& row : t.per_edge) out.per_edge.push_back(cut(row, max_k >= 2 ? max_k - 1 : 0));
  return out;
}

}  // namespace sct
