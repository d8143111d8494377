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

#include "sct/errors.hpp"
#include "sct/generators.hpp"
#include "sct/subproblem.hpp"

using namespace sct;

namespace {

SubProblem whole(const Graph& g) {
  std::vector<Vertex> all(g.vertex_count());
  for (Vertex v = 0; v < all.size(); ++v) all[v] = v;
  return SubProblem::induced(g, all);
}

void check_matrix(const SubProblem& sp, const Graph& g) {
  for (std::size_t a = 0; a < sp.size(); ++a) {
    CHECK_FALSE(sp.adjacent(a, a));
    for (std::size_t b = 0; b < sp.size(); ++b) {
      CHECK(sp.adjacent(a, b) == sp.adjacent(b, a));
      if (a != b) CHECK(sp.adjacent(a, b) == g.are_adjacent(sp.global_id(a), sp.global_id(b)));
    }
  }
}

}  // namespace

TEST_CASE("induced matrix is symmetric with zero diagonal") {
  const Graph g = gen::erdos_renyi(70, 0.4, 11);  // crosses a word boundary
  const SubProblem sp = whole(g);
  CHECK(sp.size() == 70);
  CHECK(sp.words_per_row() == 2);
  check_matrix(sp, g);
}

TEST_CASE("out-neighborhood build matches the induced build") {
  const Graph g = gen::erdos_renyi(90, 0.35, 5);
  const auto o = degeneracy_orient(g);
  std::vector<std::uint32_t> local_of(g.vertex_count(), SubProblem::kNoLocal);
  SubProblem fast;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    fast.assign_out_neighborhood(o, v, local_of);
    const SubProblem slow = SubProblem::induced(g, o.out_neighbors(v));
    REQUIRE(fast.size() == slow.size());
    CHECK(fast.size() <= o.degeneracy());
    for (std::size_t a = 0; a < fast.size(); ++a) {
      CHECK(fast.global_id(a) == slow.global_id(a));
      for (std::size_t b = 0; b < fast.size(); ++b) CHECK(fast.adjacent(a, b) == slow.adjacent(a, b));
    }
  }
  for (auto x : local_of) CHECK(x == SubProblem::kNoLocal);
}

TEST_CASE("restrict") {
  const Graph k4 = gen::complete(4);
  const SubProblem sp = whole(k4);
  const std::vector<std::uint32_t> three{0, 1, 2};
  const SubProblem k3 = sp.restrict(three);
  CHECK(k3.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) CHECK(k3.degree(i) == 2);

  CHECK(sp.restrict({}).size() == 0);

  const SubProblem path = whole(gen::path(3));
  const std::vector<std::uint32_t> ends{0, 2};
  const SubProblem split = path.restrict(ends);
  CHECK(split.size() == 2);
  CHECK(split.global_id(0) == 0);
  CHECK(split.global_id(1) == 2);
  CHECK_FALSE(split.adjacent(0, 1));
}

TEST_CASE("select_pivot") {
  // K3: every degree is 2, lowest id wins.
  CHECK(select_pivot(whole(gen::complete(3))) == 0);

  // Star with centre as the last vertex: centre has degree 3.
  std::vector<std::pair<Vertex, Vertex>> star{{3, 0}, {3, 1}, {3, 2}};
  CHECK(select_pivot(whole(Graph::from_edges(4, star))) == 3);

  // Two disjoint edges: all degree 1.
  std::vector<std::pair<Vertex, Vertex>> two{{0, 1}, {2, 3}};
  CHECK(select_pivot(whole(Graph::from_edges(4, two))) == 0);

  CHECK_THROWS_AS(select_pivot(SubProblem{}), UsageError);
}

TEST_CASE("select_pivot breaks ties by global id, not local index") {
  const Graph g = gen::complete(3);
  const std::vector<Vertex> reversed{2, 1, 0};
  const SubProblem sp = SubProblem::induced(g, reversed);
  const auto p = select_pivot(sp);
  CHECK(sp.global_id(p) == 0);
}

TEST_CASE("masked pivot only counts neighbors inside the mask") {
  // Vertex 0 has the most neighbors overall, but inside {1,2,3} vertex 1 wins.
  std::vector<std::pair<Vertex, Vertex>> edges{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}};
  const SubProblem sp = whole(Graph::from_edges(5, edges));
  std::vector<bits::Word> mask(sp.words_per_row(), 0);
  for (std::size_t i : {1, 2, 3}) bits::set(mask, i);
  CHECK(select_pivot(sp, mask) == 1);
}
