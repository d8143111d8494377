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

#include <random>
#include <sstream>

#include <json.hpp>

#include "sct/counting.hpp"
#include "sct/errors.hpp"
#include "sct/generators.hpp"
#include "sct/output.hpp"

using namespace sct;

TEST_CASE("global CSV for a triangle") {
  std::ostringstream out;
  write_global_csv(out, count(gen::complete(3)));
  CHECK(out.str() == "1,3\n2,3\n3,1\n");
}

TEST_CASE("local CSV rows use labels and skip zeros") {
  std::istringstream in("a b\nb c\nc a\nc d\n");
  const Graph g = load_edge_list(in);
  const auto t = count(g, {{true, true}, std::nullopt, 1, CounterKind::exact});
  std::ostringstream pv, pe;
  write_per_vertex_csv(pv, g, t);
  write_per_edge_csv(pe, g, t);
  CHECK(pv.str() ==
        "a,1,1\na,2,2\na,3,1\n"
        "b,1,1\nb,2,2\nb,3,1\n"
        "c,1,1\nc,2,3\nc,3,1\n"
        "d,1,1\nd,2,1\n");
  CHECK(pe.str() ==
        "a,b,2,1\na,b,3,1\n"
        "a,c,2,1\na,c,3,1\n"
        "b,c,2,1\nb,c,3,1\n"
        "c,d,2,1\n");
}

TEST_CASE("global CSV round-trips exactly, including huge counts") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    CountTables t;
    const std::size_t len = rng() % 30;
    for (std::size_t i = 0; i < len; ++i) {
      BigCount c = rng() % 1000 + 1;
      for (std::size_t j = rng() % 6; j > 0; --j) c = c * BigCount(rng()) + 1;
      t.global.push_back(c);
    }
    std::ostringstream out;
    write_global_csv(out, t);
    std::istringstream in(out.str());
    CHECK(parse_global_csv(in) == t.global);
  }
}

TEST_CASE("global CSV parser rejects malformed rows") {
  std::istringstream gap("1,3\n3,1\n");
  CHECK_THROWS_AS(parse_global_csv(gap), ParseError);
  std::istringstream junk("1,x\n");
  CHECK_THROWS_AS(parse_global_csv(junk), ParseError);
  std::istringstream sectioned("# global\n1,2\n# per-vertex\n0,1,1\n");
  CHECK(parse_global_csv(sectioned) == std::vector<BigCount>{2});
}

TEST_CASE("JSON document holds decimal-string counts") {
  const Graph g = gen::complete(4);
  const auto t = count(g, {{true, true}, std::nullopt, 1, CounterKind::exact});
  std::ostringstream out;
  write_json(out, g, t);
  const auto j = nlohmann::json::parse(out.str());
  CHECK(j["global"]["3"] == "4");
  CHECK(j["global"]["4"] == "1");
  REQUIRE(j["per_vertex"].size() == 4);
  CHECK(j["per_vertex"][0]["vertex"] == "0");
  CHECK(j["per_vertex"][0]["counts"]["3"] == "3");
  REQUIRE(j["per_edge"].size() == 6);
  CHECK(j["per_edge"][0]["counts"]["3"] == "2");

  std::ostringstream global_only;
  write_json(global_only, g, count(g));
  const auto k = nlohmann::json::parse(global_only.str());
  CHECK_FALSE(k.contains("per_vertex"));
  CHECK_FALSE(k.contains("per_edge"));
}

TEST_CASE("run report serializes every field") {
  RunReport r;
  r.input = "g.txt";
  r.n = 3;
  r.m = 3;
  r.alpha = 2;
  r.max_clique = 3;
  r.sct_nodes = 6;
  r.mode = "global";
  r.counters = "exact";
  const auto j = nlohmann::json::parse(r.to_json());
  for (const char* key : {"input", "n", "m", "degeneracy", "max_core_size", "max_clique", "sct_nodes", "sct_leaves",
                          "sct_max_depth", "mode", "threads", "max_k", "counters", "seconds"})
    CHECK(j.contains(key));
  CHECK(j["max_k"].is_null());
  CHECK(j["seconds"].contains("count"));
}
