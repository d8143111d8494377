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

#include "sct/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>
#include <unordered_map>

#include "sct/errors.hpp"

namespace sct {

Graph Graph::from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges,
                        std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != n) throw UsageError("label count does not match vertex count");

  Graph g;
  g.offsets_.assign(n + 1, 0);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw UsageError("edge endpoint out of range");
    if (u == v) continue;
    ++g.offsets_[u + 1];
    ++g.offsets_[v + 1];
  }
  for (std::size_t i = 0; i < n; ++i) g.offsets_[i + 1] += g.offsets_[i];

  std::vector<Vertex> raw(g.offsets_[n]);
  std::vector<std::uint64_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
  for (auto [u, v] : edges) {
    if (u == v) continue;
    raw[fill[u]++] = v;
    raw[fill[v]++] = u;
  }

  // Sort and deduplicate each list, compacting into the final array.
  g.adjacency_.reserve(raw.size());
  std::vector<std::uint64_t> compact(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    auto first = raw.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
    auto last = raw.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
    std::sort(first, last);
    last = std::unique(first, last);
    g.adjacency_.insert(g.adjacency_.end(), first, last);
    compact[v + 1] = g.adjacency_.size();
  }
  g.offsets_ = std::move(compact);
  g.adjacency_.shrink_to_fit();

  g.upper_start_.resize(n);
  g.edge_base_.resize(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    auto first = g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
    auto last = g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
    auto upper = std::upper_bound(first, last, static_cast<Vertex>(v));
    g.upper_start_[v] = static_cast<std::uint64_t>(upper - g.adjacency_.begin());
    g.edge_base_[v + 1] = g.edge_base_[v] + static_cast<EdgeId>(last - upper);
  }

  if (labels.empty()) {
    labels.reserve(n);
    for (std::size_t v = 0; v < n; ++v) labels.push_back(std::to_string(v));
  }
  g.labels_ = std::move(labels);
  return g;
}

void Graph::check_vertex(Vertex v) const {
  if (v >= vertex_count()) {
    throw UsageError("vertex " + std::to_string(v) + " out of range [0, " +
                     std::to_string(vertex_count()) + ")");
  }
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
  check_vertex(v);
  return {adjacency_.data() + offsets_[v], static_cast<std::size_t>(offsets_[v + 1] - offsets_[v])};
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (std::size_t v = 0; v + 1 < offsets_.size(); ++v)
    best = std::max<std::size_t>(best, offsets_[v + 1] - offsets_[v]);
  return best;
}

bool Graph::are_adjacent(Vertex u, Vertex v) const {
  auto nu = neighbors(u);
  auto nv = neighbors(v);
  if (nu.size() > nv.size()) {
    std::swap(nu, nv);
    std::swap(u, v);
  }
  return std::binary_search(nu.begin(), nu.end(), v);
}

std::optional<EdgeId> Graph::edge_id(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  if (u > v) std::swap(u, v);
  const Vertex* first = adjacency_.data() + upper_start_[u];
  const Vertex* last = adjacency_.data() + offsets_[u + 1];
  const Vertex* it = std::lower_bound(first, last, v);
  if (it == last || *it != v) return std::nullopt;
  return edge_base_[u] + static_cast<EdgeId>(it - first);
}

std::pair<Vertex, Vertex> Graph::edge_endpoints(EdgeId e) const {
  if (e >= edge_count()) throw UsageError("edge id " + std::to_string(e) + " out of range");
  // edge_base_ is non-decreasing; the owner is the last vertex whose base is <= e.
  auto it = std::upper_bound(edge_base_.begin(), edge_base_.end(), e);
  const auto u = static_cast<Vertex>((it - edge_base_.begin()) - 1);
  return {u, adjacency_[upper_start_[u] + (e - edge_base_[u])]};
}

const std::string& Graph::label(Vertex v) const {
  check_vertex(v);
  return labels_[v];
}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

// Splits on whitespace into at most three tokens; the third only signals "too many".
std::size_t tokenize(std::string_view line, std::string_view (&tokens)[3]) {
  std::size_t count = 0;
  std::size_t i = 0;
  while (i < line.size() && count < 3) {
    while (i < line.size() && is_space(line[i])) ++i;
    if (i == line.size()) break;
    std::size_t j = i;
    while (j < line.size() && !is_space(line[j])) ++j;
    tokens[count++] = line.substr(i, j - i);
    i = j;
  }
  return count;
}

}  // namespace

Graph load_edge_list(std::istream& in) {
  std::unordered_map<std::string, Vertex> ids;
  std::vector<std::string> labels;
  std::vector<std::pair<Vertex, Vertex>> edges;

  auto intern = [&](std::string_view token) {
    auto [it, inserted] = ids.try_emplace(std::string(token), static_cast<Vertex>(labels.size()));
    if (inserted) labels.emplace_back(token);
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view(line);
    std::size_t lead = 0;
    while (lead < view.size() && is_space(view[lead])) ++lead;
    if (lead == view.size()) continue;
    if (view[lead] == '#' || view[lead] == '%') continue;

    std::string_view tokens[3];
    const std::size_t count = tokenize(view, tokens);
    if (count != 2) {
      throw ParseError(line_no, "expected 2 tokens, found " + std::string(count > 2 ? "more than 2" : "1"));
    }
    const Vertex u = intern(tokens[0]);
    const Vertex v = intern(tokens[1]);
    edges.emplace_back(u, v);
  }
  if (in.bad()) throw ParseError(line_no, "read error");

  const std::size_t n = labels.size();
  return Graph::from_edges(n, edges, std::move(labels));
}

Graph load_edge_list_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return load_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  g.for_each_edge([&](Vertex u, Vertex v) { out << u << ' ' << v << '\n'; });
}

}  // namespace sct
