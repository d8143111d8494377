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

#include "sct/degeneracy.hpp"
#include "sct/graph.hpp"

namespace sct {

enum class LinkKind { root, hold, pivot };

/// Node of an explicitly built succinct clique tree.
struct SctNode {
  std::vector<Vertex> label;  // global ids, ascending
  std::optional<Vertex> link_vertex;
  LinkKind link_kind = LinkKind::root;
  std::uint32_t parent = 0;
  std::uint32_t depth = 0;
  std::vector<std::uint32_t> children;
};

/// Hold and pivot vertices of one root-to-leaf path, each ascending.
struct LeafPath {
  std::vector<Vertex> hold;
  std::vector<Vertex> pivots;
  friend auto operator<=>(const LeafPath&, const LeafPath&) = default;
};

/// Explicit tree, nodes stored breadth-first; node 0 is the root.
class SctTree {
 public:
  const std::vector<SctNode>& nodes() const noexcept { return nodes_; }
  const SctNode& node(std::uint32_t id) const { return nodes_.at(id); }

  /// Created nodes excluding the root (same convention as TraversalStats).
  std::uint64_t node_count() const noexcept { return nodes_.empty() ? 0 : nodes_.size() - 1; }
  std::uint64_t leaf_count() const;
  std::uint64_t max_depth() const;

  /// (H, P) for every leaf, in node order.
  std::vector<LeafPath> leaf_paths() const;

 private:
  friend SctTree materialize_sct(const Graph&, const DegeneracyOrientation&, std::size_t);
  std::vector<SctNode> nodes_;
};

inline constexpr std::size_t kDefaultTreeNodeCap = 1'000'000;

/// Builds the whole tree breadth-first, with every node's subproblem derived
/// from its parent's by SubProblem::restrict. Throws SizeLimitError when the
/// number of nodes would exceed `node_cap`.
SctTree materialize_sct(const Graph& g, const DegeneracyOrientation& o, std::size_t node_cap = kDefaultTreeNodeCap);

/// One line per node, indented two spaces per level:
///   `{a,b,c} via (v,h)` / `{} via (v,p)` / root line `{...} root`.
/// Vertices are printed with their input labels.
void write_tree_text(std::ostream& out, const SctTree& tree, const Graph& g);

/// Tab-separated rows `id parent kind vertex label` where kind is
/// root|hold|pivot, vertex is `-` for the root and label is a comma-separated
/// list of dense ids (possibly empty). Preceded by a header row.
void write_tree_nodes(std::ostream& out, const SctTree& tree);

struct RepresentationVerdict {
  bool pass = true;
  std::uint64_t expansions = 0;  // (path, subset) pairs examined
  std::string counterexample;    // first failure, empty on pass
};

/// Expands every path into H(T) u Q for each Q subset of P(T) and checks that
/// each expansion is a clique, that no clique appears twice and that the
/// expansions are exactly `cliques` (each a sorted vertex list).
RepresentationVerdict verify_unique_representation(const Graph& g, const SctTree& tree,
                                                   const std::vector<std::vector<Vertex>>& cliques);

}  // namespace sct
