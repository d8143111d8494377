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

#include "sct/generators.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>
#include <utility>
#include <vector>

namespace sct::gen {

namespace {
using EdgeList = std::vector<std::pair<Vertex, Vertex>>;
}

Graph complete(std::size_t n) {
  EdgeList edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Graph path(std::size_t n) {
  EdgeList edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  return Graph::from_edges(n, edges);
}

Graph cycle(std::size_t n) {
  EdgeList edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
  if (n >= 3) edges.emplace_back(static_cast<Vertex>(n - 1), 0);
  return Graph::from_edges(n, edges);
}

Graph star(std::size_t leaves) {
  EdgeList edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph::from_edges(leaves + 1, edges);
}

Graph empty(std::size_t n) { return Graph::from_edges(n, {}); }

Graph petersen() {
  EdgeList edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);          // outer cycle
    edges.emplace_back(i, i + 5);                // spokes
    edges.emplace_back(i + 5, (i + 2) % 5 + 5);  // inner pentagram
  }
  return Graph::from_edges(10, edges);
}

Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  EdgeList edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Graph bounded_degeneracy(std::size_t n, std::size_t d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  EdgeList edges;
  edges.reserve(n * d);
  std::unordered_set<Vertex> picked;
  for (Vertex v = 1; v < n; ++v) {
    std::uniform_int_distribution<Vertex> pick(0, v - 1);
    const std::size_t want = std::min<std::size_t>(v, d);
    picked.clear();
    while (picked.size() < want) picked.insert(pick(rng));
    // Iteration order of the set is unspecified; sort for reproducibility.
    std::vector<Vertex> sorted(picked.begin(), picked.end());
    std::sort(sorted.begin(), sorted.end());
    for (Vertex u : sorted) edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges);
}

}  // namespace sct::gen
