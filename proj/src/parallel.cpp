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

#include "sct/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "sct/binomial.hpp"
#include "sct/counting.hpp"
#include "sct/errors.hpp"

namespace sct {

std::vector<Vertex> root_schedule(const DegeneracyOrientation& o) {
  std::vector<Vertex> roots(o.vertex_count());
  for (Vertex v = 0; v < roots.size(); ++v) roots[v] = v;
  std::stable_sort(roots.begin(), roots.end(),
                   [&](Vertex a, Vertex b) { return o.out_degree(a) > o.out_degree(b); });
  return roots;
}

namespace {

template <typename C>
ParallelRun run_parallel(const Graph& g, const DegeneracyOrientation& o, std::size_t workers,
                         std::optional<std::size_t> max_k) {
  const BinomialTable<C> binom(o.degeneracy() + 1);
  const std::vector<Vertex> roots = root_schedule(o);
  const TraversalOptions options{max_k};

  std::vector<WorkerResult<C>> results(workers);
  std::vector<std::exception_ptr> errors(workers);
  std::atomic<std::size_t> cursor{0};

  auto work = [&](std::size_t id) {
    try {
      auto tables = make_tables<C>(g, {});
      LeafAccumulator<C> sink(g, binom, tables, {}, max_k);
      Traverser traverser(g, o);
      auto& mine = results[id];
      for (;;) {
        const std::size_t next = cursor.fetch_add(1, std::memory_order_relaxed);
        if (next >= roots.size()) break;
        traverser.run_root(roots[next], sink, options, mine.stats);
        ++mine.roots;
      }
      mine.global = std::move(tables.global);
    } catch (...) {
      errors[id] = std::current_exception();
      // Drain the queue so the other workers stop early.
      cursor.store(roots.size(), std::memory_order_relaxed);
    }
  };

  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (std::size_t id = 0; id < workers; ++id) threads.emplace_back(work, id);
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  ParallelRun run;
  BasicCountTables<C> merged;
  for (auto& r : results) {
    BasicCountTables<C> part;
    part.global = r.global;
    merge_into(merged, part);
    run.sct += r.stats;
  }
  run.tables = widen(merged);
  run.workers.reserve(workers);
  for (auto& r : results) {
    WorkerResult<BigCount> w;
    for (const C& c : r.global) w.global.push_back(to_big(c));
    w.stats = r.stats;
    w.roots = r.roots;
    run.workers.push_back(std::move(w));
  }
  return run;
}

}  // namespace

ParallelRun count_global_parallel(const Graph& g, const DegeneracyOrientation& o, std::size_t workers,
                                  std::optional<std::size_t> max_k, CounterKind counters) {
  if (workers == 0) throw UsageError("worker count must be at least 1");
  if (counters == CounterKind::fast128) return run_parallel<Checked128>(g, o, workers, max_k);
  return run_parallel<BigCount>(g, o, workers, max_k);
}

}  // namespace sct
