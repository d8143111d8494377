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

#include <set>

#include "sct/counting.hpp"
#include "sct/errors.hpp"
#include "sct/generators.hpp"
#include "sct/oracle.hpp"

using namespace sct;

TEST_CASE("triangle census") {
  const auto census = oracle::enumerate_all_cliques(gen::complete(3), oracle::kDefaultCliqueCap, true);
  const std::set<std::vector<Vertex>> got(census.cliques.begin(), census.cliques.end());
  const std::set<std::vector<Vertex>> want{{0}, {1}, {2}, {0, 1}, {0, 2}, {1, 2}, {0, 1, 2}};
  CHECK(got == want);
  CHECK(census.global == std::vector<std::uint64_t>{3, 3, 1});
}

TEST_CASE("complete graphs") {
  CHECK(oracle::enumerate_all_cliques(gen::complete(5)).clique_total == 31);
  for (unsigned n = 1; n <= 20; ++n) {
    const auto census = oracle::enumerate_all_cliques(gen::complete(n));
    std::uint64_t c = 1;
    for (unsigned k = 1; k <= n; ++k) {
      c = c * (n - k + 1) / k;
      CHECK(census.global[k - 1] == c);
    }
  }
}

TEST_CASE("census tables satisfy the double-counting identities") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Graph g = gen::erdos_renyi(15, 0.5, seed);
    const auto census = oracle::enumerate_all_cliques(g, oracle::kDefaultCliqueCap, true);
    CHECK(census.cliques.size() == census.clique_total);
    std::set<std::vector<Vertex>> unique(census.cliques.begin(), census.cliques.end());
    CHECK(unique.size() == census.cliques.size());
    for (std::size_t k = 1; k <= census.global.size(); ++k) {
      std::uint64_t by_vertex = 0, by_edge = 0;
      for (const auto& row : census.per_vertex) by_vertex += k - 1 < row.size() ? row[k - 1] : 0;
      for (const auto& row : census.per_edge) by_edge += k >= 2 && k - 2 < row.size() ? row[k - 2] : 0;
      CHECK(by_vertex == k * census.global[k - 1]);
      CHECK(by_edge == k * (k - 1) / 2 * census.global[k - 1]);
    }
  }
}

TEST_CASE("cap is enforced") {
  CHECK_THROWS_AS(oracle::enumerate_all_cliques(gen::complete(12), 100), SizeLimitError);
}

TEST_CASE("compare passes on matching tables and names a perturbed entry") {
  const Graph g = gen::complete(4);
  const auto census = oracle::enumerate_all_cliques(g);
  CountTables t = count(g, {{true, true}, std::nullopt, 1, CounterKind::exact});
  CHECK(oracle::compare(census, t).pass);

  CountTables global_off = t;
  global_off.global[2] += 1;
  auto v = oracle::compare(census, global_off);
  REQUIRE_FALSE(v.pass);
  CHECK(v.first[0].table == "global");
  CHECK(v.first[0].k == 3);
  CHECK(v.first[0].expected == "4");
  CHECK(v.first[0].got == "5");

  CountTables vertex_off = t;
  vertex_off.per_vertex[2][3] += 1;
  v = oracle::compare(census, vertex_off);
  REQUIRE_FALSE(v.pass);
  CHECK(v.first[0].table == "vertex");
  CHECK(v.first[0].entity == 2);
  CHECK(v.first[0].k == 4);

  CountTables edge_off = t;
  edge_off.per_edge[5][0] += 1;
  v = oracle::compare(census, edge_off);
  REQUIRE_FALSE(v.pass);
  CHECK(v.first[0].table == "edge");
  CHECK(v.first[0].entity == 5);
  CHECK(v.first[0].k == 2);
  CHECK(v.describe() == "mismatch at edge 5 k=2: expected 1, got 2");
}
