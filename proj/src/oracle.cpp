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

#include "sct/oracle.hpp"

#include <algorithm>
#include <iterator>

#include "sct/errors.hpp"

namespace sct::oracle {

namespace {

void bump(std::vector<std::uint64_t>& row, std::size_t index) {
  if (row.size() <= index) row.resize(index + 1, 0);
  ++row[index];
}

class Enumerator {
 public:
  Enumerator(const Graph& g, std::uint64_t limit, bool keep, CliqueCensus& out)
      : g_(g), limit_(limit), keep_(keep), out_(out) {}

  void run() {
    out_.per_vertex.assign(g_.vertex_count(), {});
    out_.per_edge.assign(g_.edge_count(), {});
    for (Vertex v = 0; v < g_.vertex_count(); ++v) {
      std::vector<Vertex> later;
      for (Vertex u : g_.neighbors(v))
        if (u > v) later.push_back(u);
      current_.push_back(v);
      extend(later);
      current_.pop_back();
    }
  }

 private:
  void extend(const std::vector<Vertex>& candidates) {
    record();
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      const Vertex w = candidates[i];
      std::vector<Vertex> next;
      auto nw = g_.neighbors(w);
      std::set_intersection(candidates.begin() + static_cast<std::ptrdiff_t>(i) + 1, candidates.end(), nw.begin(),
                            nw.end(), std::back_inserter(next));
      current_.push_back(w);
      extend(next);
      current_.pop_back();
    }
  }

  void record() {
    if (++out_.clique_total > limit_) {
      throw SizeLimitError("clique listing exceeds " + std::to_string(limit_) + " cliques");
    }
    const std::size_t k = current_.size();
    bump(out_.global, k - 1);
    for (Vertex v : current_) bump(out_.per_vertex[v], k - 1);
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a + 1; b < k; ++b) bump(out_.per_edge[*g_.edge_id(current_[a], current_[b])], k - 2);
    if (keep_) out_.cliques.push_back(current_);  // ascending by construction
  }

  const Graph& g_;
  std::uint64_t limit_;
  bool keep_;
  CliqueCensus& out_;
  std::vector<Vertex> current_;
};

}  // namespace

CliqueCensus enumerate_all_cliques(const Graph& g, std::uint64_t limit, bool keep_cliques) {
  CliqueCensus census;
  Enumerator(g, limit, keep_cliques, census).run();
  return census;
}

std::string Verdict::describe() const {
  if (pass) return "match";
  const Mismatch& m = first.front();
  std::string where = m.table == "global" ? "C_" + std::to_string(m.k)
                                          : m.table + " " + std::to_string(m.entity) + " k=" + std::to_string(m.k);
  return "mismatch at " + where + ": expected " + m.expected + ", got " + m.got;
}

Verdict compare(const CliqueCensus& census, const CountTables& tables) {
  Verdict verdict;
  // Compares one row; rows may differ in length, missing entries are zero.
  auto check_row = [&](const std::string& table, std::uint64_t entity, std::size_t first_k,
                       const std::vector<std::uint64_t>& want, const std::vector<BigCount>& got) {
    const std::size_t len = std::max(want.size(), got.size());
    for (std::size_t i = 0; i < len; ++i) {
      const BigCount w = i < want.size() ? BigCount(want[i]) : BigCount(0);
      const BigCount h = i < got.size() ? got[i] : BigCount(0);
      if (w != h) {
        verdict.pass = false;
        verdict.first.push_back({table, i + first_k, entity, w.str(), h.str()});
        return false;
      }
    }
    return true;
  };

  if (!check_row("global", 0, 1, census.global, tables.global)) return verdict;
  static const std::vector<BigCount> kEmpty;
  if (tables.has_per_vertex) {
    for (std::size_t v = 0; v < census.per_vertex.size(); ++v) {
      const auto& got = v < tables.per_vertex.size() ? tables.per_vertex[v] : kEmpty;
      if (!check_row("vertex", v, 1, census.per_vertex[v], got)) return verdict;
    }
  }
  if (tables.has_per_edge) {
    for (std::size_t e = 0; e < census.per_edge.size(); ++e) {
      const auto& got = e < tables.per_edge.size() ? tables.per_edge[e] : kEmpty;
      if (!check_row("edge", e, 2, census.per_edge[e], got)) return verdict;
    }
  }
  return verdict;
}

}  // namespace sct::oracle
