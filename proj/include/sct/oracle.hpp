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
#include <cstdint>
#include <string>
#include <vector>

#include "sct/count_tables.hpp"
#include "sct/graph.hpp"

// Brute-force clique listing used as ground truth. Shares nothing with the
// pivoting code beyond the Graph type.
namespace sct::oracle {

/// Every clique of the graph, tallied directly.
struct CliqueCensus {
  std::vector<std::vector<Vertex>> cliques;  // sorted vertex lists; filled only when requested
  std::uint64_t clique_total = 0;
  std::vector<std::uint64_t> global;                   // global[k - 1]
  std::vector<std::vector<std::uint64_t>> per_vertex;  // [v][k - 1]
  std::vector<std::vector<std::uint64_t>> per_edge;    // [edge id][k - 2]
};

inline constexpr std::uint64_t kDefaultCliqueCap = 10'000'000;

/// Backtracking over the id-ordered DAG: each clique is grown from its
/// smallest vertex by adding larger common neighbors. Throws SizeLimitError
/// once more than `limit` cliques have been found.
CliqueCensus enumerate_all_cliques(const Graph& g, std::uint64_t limit = kDefaultCliqueCap,
                                   bool keep_cliques = false);

struct Mismatch {
  std::string table;  // "global", "vertex" or "edge"
  std::size_t k = 0;
  std::uint64_t entity = 0;  // vertex or edge id; 0 for global
  std::string expected;
  std::string got;
};

struct Verdict {
  bool pass = true;
  std::vector<Mismatch> first;  // at most one entry: the first mismatch found

  std::string describe() const;
};

/// Exact comparison over every k, vertex and edge. Local tables are compared
/// when `tables` carries them.
Verdict compare(const CliqueCensus& census, const CountTables& tables);

}  // namespace sct::oracle
