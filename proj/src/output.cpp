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

#include "sct/output.hpp"

#include <istream>
#include <ostream>
#include <string_view>

#include <json.hpp>

#include "sct/errors.hpp"

namespace sct {

void write_global_csv(std::ostream& out, const CountTables& t) {
  for (std::size_t i = 0; i < t.global.size(); ++i) out << i + 1 << ',' << t.global[i] << '\n';
}

void write_per_vertex_csv(std::ostream& out, const Graph& g, const CountTables& t) {
  for (Vertex v = 0; v < t.per_vertex.size(); ++v) {
    const auto& row = t.per_vertex[v];
    for (std::size_t i = 0; i < row.size(); ++i)
      if (row[i] != 0) out << g.label(v) << ',' << i + 1 << ',' << row[i] << '\n';
  }
}

void write_per_edge_csv(std::ostream& out, const Graph& g, const CountTables& t) {
  EdgeId e = 0;
  g.for_each_edge([&](Vertex u, Vertex v) {
    if (e < t.per_edge.size()) {
      const auto& row = t.per_edge[e];
      for (std::size_t i = 0; i < row.size(); ++i)
        if (row[i] != 0) out << g.label(u) << ',' << g.label(v) << ',' << i + 2 << ',' << row[i] << '\n';
    }
    ++e;
  });
}

namespace {

std::string quote(const std::string& s) { return nlohmann::json(s).dump(); }

void write_row_object(std::ostream& out, const std::vector<BigCount>& row, std::size_t first_k) {
  out << '{';
  bool first = true;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i] == 0) continue;
    out << (first ? "" : ",") << '"' << i + first_k << "\":\"" << row[i] << '"';
    first = false;
  }
  out << '}';
}

}  // namespace

void write_json(std::ostream& out, const Graph& g, const CountTables& t) {
  out << "{\"global\":";
  write_row_object(out, t.global, 1);
  if (t.has_per_vertex) {
    out << ",\n\"per_vertex\":[";
    for (Vertex v = 0; v < t.per_vertex.size(); ++v) {
      out << (v ? ",\n" : "\n") << "{\"vertex\":" << quote(g.label(v)) << ",\"counts\":";
      write_row_object(out, t.per_vertex[v], 1);
      out << '}';
    }
    out << "\n]";
  }
  if (t.has_per_edge) {
    out << ",\n\"per_edge\":[";
    EdgeId e = 0;
    g.for_each_edge([&](Vertex u, Vertex v) {
      out << (e ? ",\n" : "\n") << "{\"u\":" << quote(g.label(u)) << ",\"v\":" << quote(g.label(v))
          << ",\"counts\":";
      write_row_object(out, e < t.per_edge.size() ? t.per_edge[e] : std::vector<BigCount>{}, 2);
      out << '}';
      ++e;
    });
    out << "\n]";
  }
  out << "}\n";
}

std::vector<BigCount> parse_global_csv(std::istream& in) {
  std::vector<BigCount> global;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (line == "# global") continue;
      break;  // start of a local section
    }
    const auto comma = line.find(',');
    if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos)
      throw ParseError(line_no, "expected k,count");
    const std::string k_text = line.substr(0, comma);
    const std::string count_text = line.substr(comma + 1);
    auto all_digits = [](std::string_view s) {
      return !s.empty() && s.find_first_not_of("0123456789") == std::string_view::npos;
    };
    if (!all_digits(k_text) || !all_digits(count_text)) throw ParseError(line_no, "non-numeric field");
    const std::size_t k = std::stoul(k_text);
    if (k != global.size() + 1) throw ParseError(line_no, "rows must list k = 1, 2, ... in order");
    global.emplace_back(count_text);
  }
  return global;
}

std::string RunReport::to_json() const {
  nlohmann::ordered_json j;
  j["input"] = input;
  j["n"] = n;
  j["m"] = m;
  j["degeneracy"] = alpha;
  j["max_core_size"] = max_core_size;
  j["max_clique"] = max_clique;
  j["sct_nodes"] = sct_nodes;
  j["sct_leaves"] = sct_leaves;
  j["sct_max_depth"] = sct_depth;
  j["mode"] = mode;
  j["threads"] = threads;
  j["max_k"] = max_k ? nlohmann::ordered_json(*max_k) : nlohmann::ordered_json(nullptr);
  j["counters"] = counters;
  j["seconds"] = {{"load", load_seconds}, {"orient", orient_seconds}, {"count", count_seconds},
                  {"output", output_seconds}};
  return j.dump(2);
}

}  // namespace sct
