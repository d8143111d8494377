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
#include <random>
#include <set>
#include <sstream>

#include "sct/errors.hpp"
#include "sct/generators.hpp"
#include "sct/graph.hpp"

using namespace sct;

namespace {

Graph parse(const std::string& text) {
  std::istringstream in(text);
  return load_edge_list(in);
}

void check_invariants(const Graph& g) {
  std::size_t total = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    auto nv = g.neighbors(v);
    total += nv.size();
    CHECK(std::is_sorted(nv.begin(), nv.end()));
    CHECK(std::adjacent_find(nv.begin(), nv.end()) == nv.end());
    for (Vertex u : nv) {
      CHECK(u != v);
      CHECK(u < g.vertex_count());
      auto nu = g.neighbors(u);
      CHECK(std::binary_search(nu.begin(), nu.end(), v));
    }
  }
  CHECK(total == 2 * g.edge_count());
}

}  // namespace

TEST_CASE("triangle loads as three vertices and three edges") {
  const Graph g = parse("0 1\n1 2\n2 0\n");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 3);
  check_invariants(g);
}

TEST_CASE("self-loops and duplicate edges collapse") {
  const Graph g = parse("0 0\n0 1\n1 0\n");
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 1);
}

TEST_CASE("comments, blank lines and string labels") {
  const Graph g = parse("# SNAP header\n% matrix-market style\n\nalice\tbob\n  bob carol  \n");
  REQUIRE(g.vertex_count() == 3);
  CHECK(g.edge_count() == 2);
  CHECK(g.label(0) == "alice");
  CHECK(g.label(1) == "bob");
  CHECK(g.label(2) == "carol");
  CHECK(g.are_adjacent(0, 1));
  CHECK_FALSE(g.are_adjacent(0, 2));
}

TEST_CASE("labels map in first-appearance order") {
  const Graph g = parse("10 7\n7 3\n");
  CHECK(g.label(0) == "10");
  CHECK(g.label(1) == "7");
  CHECK(g.label(2) == "3");
}

TEST_CASE("empty input is an empty graph") {
  const Graph g = parse("");
  CHECK(g.vertex_count() == 0);
  CHECK(g.edge_count() == 0);
  const Graph comments = parse("# nothing here\n");
  CHECK(comments.vertex_count() == 0);
}

TEST_CASE("malformed lines report their line number") {
  try {
    parse("0 1\n# ok\n1 2 3\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse("0 1\n5\n"), ParseError);
}

TEST_CASE("neighbors") {
  CHECK(std::ranges::equal(gen::complete(3).neighbors(0), std::vector<Vertex>{1, 2}));
  CHECK(std::ranges::equal(gen::path(3).neighbors(1), std::vector<Vertex>{0, 2}));
  const Graph k5 = gen::complete(5);
  for (Vertex v = 0; v < 5; ++v) {
    auto nv = k5.neighbors(v);
    CHECK(nv.size() == 4);
    CHECK(std::find(nv.begin(), nv.end(), v) == nv.end());
  }
  CHECK_THROWS_AS(k5.neighbors(5), UsageError);
}

TEST_CASE("are_adjacent") {
  const Graph tri = gen::complete(3);
  CHECK(tri.are_adjacent(0, 1));
  CHECK_FALSE(tri.are_adjacent(0, 0));
  CHECK_FALSE(gen::path(3).are_adjacent(0, 2));
  CHECK_THROWS_AS(tri.are_adjacent(0, 3), UsageError);
}

TEST_CASE("canonical edge ids are dense and invertible") {
  const Graph g = gen::erdos_renyi(30, 0.3, 7);
  EdgeId expected = 0;
  g.for_each_edge([&](Vertex u, Vertex v) {
    CHECK(u < v);
    REQUIRE(g.edge_id(u, v).has_value());
    CHECK(*g.edge_id(u, v) == expected);
    CHECK(*g.edge_id(v, u) == expected);
    CHECK(g.edge_endpoints(expected) == std::pair{u, v});
    ++expected;
  });
  CHECK(expected == g.edge_count());
  CHECK_FALSE(gen::path(3).edge_id(0, 2).has_value());
}

TEST_CASE("random multigraph input normalizes to a simple graph") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + rng() % 40;
    std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::set<std::pair<Vertex, Vertex>> distinct;
    const std::size_t count = rng() % 200;
    for (std::size_t i = 0; i < count; ++i) {
      Vertex u = pick(rng), v = pick(rng);
      if (i % 7 == 0) v = u;  // self-loop
      edges.emplace_back(u, v);
      if (i % 5 == 0) edges.emplace_back(v, u);  // reversed duplicate
      if (u != v) distinct.emplace(std::min(u, v), std::max(u, v));
    }
    const Graph g = Graph::from_edges(n, edges);
    CHECK(g.vertex_count() == n);
    CHECK(g.edge_count() == distinct.size());
    check_invariants(g);
  }
}

TEST_CASE("canonical writer round-trips") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = gen::erdos_renyi(25, 0.25, seed);
    std::ostringstream first;
    write_edge_list(first, g);

    // Reloading names every vertex by its old dense id; the edge set is unchanged.
    const Graph reloaded = parse(first.str());
    std::set<std::pair<long, long>> original, relabeled;
    g.for_each_edge([&](Vertex u, Vertex v) { original.emplace(u, v); });
    reloaded.for_each_edge([&](Vertex u, Vertex v) {
      const long a = std::stol(reloaded.label(u)), b = std::stol(reloaded.label(v));
      relabeled.emplace(std::min(a, b), std::max(a, b));
    });
    CHECK(original == relabeled);
  }
}

TEST_CASE("graph with a canonical first-appearance order reloads identically") {
  const Graph g = gen::complete(6);
  std::ostringstream out;
  write_edge_list(out, g);
  CHECK(parse(out.str()) == g);
}
