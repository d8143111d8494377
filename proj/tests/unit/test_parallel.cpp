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

#include <doctest.h>

#include <algorithm>

#include "sct/counting.hpp"
#include "sct/generators.hpp"
#include "sct/parallel.hpp"

using namespace sct;

namespace {

CountTables sequential(const Graph& g, std::optional<std::size_t> max_k = std::nullopt) {
  return count(g, {{}, max_k, 1, CounterKind::exact});
}

}  // namespace

TEST_CASE("one worker matches the sequential path") {
  const Graph g = gen::erdos_renyi(30, 0.5, 1);
  const auto o = degeneracy_orient(g);
  const auto run = count_global_parallel(g, o, 1, std::nullopt);
  CHECK(run.tables == sequential(g));
  CHECK(run.workers.size() == 1);
  CHECK(run.workers[0].roots == g.vertex_count());
}

TEST_CASE("worker count does not change the result") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = gen::erdos_renyi(24, 0.5, seed);
    const auto o = degeneracy_orient(g);
    const CountTables reference = count_global_parallel(g, o, 1, std::nullopt).tables;
    CHECK(reference == sequential(g));
    for (std::size_t workers : {2, 4, 8}) {
      const auto run = count_global_parallel(g, o, workers, std::nullopt);
      CHECK(run.tables == reference);
      std::size_t roots = 0;
      for (const auto& w : run.workers) roots += w.roots;
      CHECK(roots == g.vertex_count());
      // Private partial tables add up to the merged one.
      std::vector<BigCount> sum;
      for (const auto& w : run.workers)
        for (std::size_t i = 0; i < w.global.size(); ++i) add_at(sum, i, w.global[i]);
      CHECK(sum == run.tables.global);
    }
  }
}

TEST_CASE("K15 with four workers") {
  const Graph g = gen::complete(15);
  const auto run = count_global_parallel(g, degeneracy_orient(g), 4, std::nullopt);
  BigCount c = 1;
  for (unsigned k = 1; k <= 15; ++k) {
    c = c * (15 - k + 1) / k;
    CHECK(run.tables.global_count(k) == c);
  }
}

TEST_CASE("parallel truncation, fast counters and stats") {
  const Graph g = gen::erdos_renyi(40, 0.4, 3);
  const auto o = degeneracy_orient(g);
  const auto run = count_global_parallel(g, o, 3, 4, CounterKind::fast128);
  CHECK(run.tables == sequential(g, 4));
  CountRun seq = count_with_orientation(g, o, {{}, 4, 1, CounterKind::exact});
  CHECK(run.sct.node_count == seq.sct.node_count);
  CHECK(run.sct.leaf_count == seq.sct.leaf_count);
}

TEST_CASE("schedule orders roots by decreasing out-degree") {
  const Graph g = gen::erdos_renyi(50, 0.3, 8);
  const auto o = degeneracy_orient(g);
  const auto roots = root_schedule(o);
  REQUIRE(roots.size() == g.vertex_count());
  for (std::size_t i = 1; i < roots.size(); ++i) CHECK(o.out_degree(roots[i - 1]) >= o.out_degree(roots[i]));
}

TEST_CASE("count() dispatches to the parallel driver for global mode") {
  const Graph g = gen::erdos_renyi(30, 0.5, 12);
  CHECK(count(g, {{}, std::nullopt, 4, CounterKind::exact}) == sequential(g));
  // Local counts are always sequential.
  const auto o = degeneracy_orient(g);
  const auto local = count_with_orientation(g, o, {{true, false}, std::nullopt, 4, CounterKind::exact});
  CHECK(local.threads_used == 1);
}

TEST_CASE("zero workers is rejected") {
  const Graph g = gen::complete(3);
  CHECK_THROWS(count_global_parallel(g, degeneracy_orient(g), 0, std::nullopt));
}
