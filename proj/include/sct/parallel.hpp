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
#include <vector>

#include "sct/count_tables.hpp"
#include "sct/counter.hpp"
#include "sct/degeneracy.hpp"
#include "sct/graph.hpp"
#include "sct/traversal.hpp"

namespace sct {

/// One worker's private share of a parallel global count.
template <typename C>
struct WorkerResult {
  std::vector<C> global;  // global[k - 1]
  TraversalStats stats;
  std::size_t roots = 0;
};

/// Root vertices by decreasing |N+(v)|, ties by id. Workers claim them in this
/// order through a shared atomic cursor.
std::vector<Vertex> root_schedule(const DegeneracyOrientation& o);

struct ParallelRun {
  CountTables tables;  // global only
  TraversalStats sct;
  std::vector<WorkerResult<BigCount>> workers;
};

/// Global counts with root children of the clique tree spread over `workers`
/// threads. Each worker owns its traversal scratch and count array; arrays are
/// merged once every worker has joined. The result does not depend on the
/// worker count or on scheduling.
ParallelRun count_global_parallel(const Graph& g, const DegeneracyOrientation& o, std::size_t workers,
                                  std::optional<std::size_t> max_k, CounterKind counters = CounterKind::exact);

}  // namespace sct
