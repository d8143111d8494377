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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sct/count_tables.hpp"
#include "sct/graph.hpp"

namespace sct {

/// CSV rows without a header. Counts are decimal strings of any length.
///   global:     k,count
///   per-vertex: vertex,k,count      (nonzero entries only)
///   per-edge:   u,v,k,count         (u before v in dense-id order)
/// Vertices are written with their input labels; rows follow dense-id order.
void write_global_csv(std::ostream& out, const CountTables& t);
void write_per_vertex_csv(std::ostream& out, const Graph& g, const CountTables& t);
void write_per_edge_csv(std::ostream& out, const Graph& g, const CountTables& t);

/// Single JSON document: {"global": {"k": "count", ...}, "per_vertex": [...],
/// "per_edge": [...]}. Local arrays are present only when computed.
void write_json(std::ostream& out, const Graph& g, const CountTables& t);

/// Parses the global CSV written above. Throws ParseError on malformed rows.
std::vector<BigCount> parse_global_csv(std::istream& in);

/// Metadata of one CLI run.
struct RunReport {
  std::string input;
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint32_t alpha = 0;
  std::size_t max_core_size = 0;
  std::size_t max_clique = 0;
  std::uint64_t sct_nodes = 0;
  std::uint64_t sct_leaves = 0;
  std::uint64_t sct_depth = 0;
  std::string mode;  // global | per-vertex | per-edge | per-vertex+per-edge
  std::size_t threads = 1;
  std::optional<std::size_t> max_k;
  std::string counters;  // exact | fast128
  double load_seconds = 0;
  double orient_seconds = 0;
  double count_seconds = 0;
  double output_seconds = 0;

  std::string to_json() const;
};

}  // namespace sct
