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

#include "sct/sct_tree.hpp"

#include <algorithm>
#include <deque>
#include <ostream>
#include <set>
#include <sstream>

#include "sct/errors.hpp"
#include "sct/subproblem.hpp"

namespace sct {

std::uint64_t SctTree::leaf_count() const {
  std::uint64_t leaves = 0;
  for (std::size_t i = 1; i < nodes_.size(); ++i)
    if (nodes_[i].label.empty()) ++leaves;
  return leaves;
}

std::uint64_t SctTree::max_depth() const {
  std::uint64_t d = 0;
  for (const auto& n : nodes_) d = std::max<std::uint64_t>(d, n.depth);
  return d;
}

std::vector<LeafPath> SctTree::leaf_paths() const {
  std::vector<LeafPath> paths;
  for (std::uint32_t i = 1; i < nodes_.size(); ++i) {
    if (!nodes_[i].label.empty()) continue;
    LeafPath path;
    for (std::uint32_t at = i; at != 0; at = nodes_[at].parent) {
      const auto& n = nodes_[at];
      (n.link_kind == LinkKind::hold ? path.hold : path.pivots).push_back(*n.link_vertex);
    }
    std::sort(path.hold.begin(), path.hold.end());
    std::sort(path.pivots.begin(), path.pivots.end());
    paths.push_back(std::move(path));
  }
  return paths;
}

SctTree materialize_sct(const Graph& g, const DegeneracyOrientation& o, std::size_t node_cap) {
  SctTree tree;
  auto& nodes = tree.nodes_;
  SctNode root;
  root.label.resize(g.vertex_count());
  for (Vertex v = 0; v < root.label.size(); ++v) root.label[v] = v;
  nodes.push_back(std::move(root));

  struct Pending {
    std::uint32_t id;
    SubProblem sp;
  };
  std::deque<Pending> queue;

  auto add_child = [&](std::uint32_t parent, Vertex link, LinkKind kind, SubProblem sp) {
    if (nodes.size() > node_cap) {
      throw SizeLimitError("succinct clique tree exceeds " + std::to_string(node_cap) + " nodes");
    }
    SctNode child;
    child.label.assign(sp.local_ids().begin(), sp.local_ids().end());
    child.link_vertex = link;
    child.link_kind = kind;
    child.parent = parent;
    child.depth = nodes[parent].depth + 1;
    const auto id = static_cast<std::uint32_t>(nodes.size());
    nodes[parent].children.push_back(id);
    nodes.push_back(std::move(child));
    queue.push_back({id, std::move(sp)});
  };

  // Root children: one per vertex, label N+(v); the root has no pivot.
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    add_child(0, v, LinkKind::hold, SubProblem::induced(g, o.out_neighbors(v)));

  std::vector<std::uint32_t> keep;
  while (!queue.empty()) {
    Pending item = std::move(queue.front());
    queue.pop_front();
    const SubProblem& s = item.sp;
    if (s.empty()) continue;

    const std::uint32_t p = select_pivot(s);
    keep.clear();
    for (std::uint32_t u = 0; u < s.size(); ++u)
      if (s.adjacent(p, u)) keep.push_back(u);
    add_child(item.id, s.global_id(p), LinkKind::pivot, s.restrict(keep));

    std::vector<bool> dropped(s.size(), false);
    for (std::uint32_t v = 0; v < s.size(); ++v) {
      if (v == p || s.adjacent(p, v)) continue;
      keep.clear();
      for (std::uint32_t u = 0; u < s.size(); ++u)
        if (!dropped[u] && s.adjacent(v, u)) keep.push_back(u);
      add_child(item.id, s.global_id(v), LinkKind::hold, s.restrict(keep));
      dropped[v] = true;
    }
  }
  return tree;
}

namespace {

const char* kind_name(LinkKind k) {
  switch (k) {
    case LinkKind::root: return "root";
    case LinkKind::hold: return "hold";
    case LinkKind::pivot: return "pivot";
  }
  return "?";
}

}  // namespace

void write_tree_text(std::ostream& out, const SctTree& tree, const Graph& g) {
  if (tree.nodes().empty()) return;
  // Iterative pre-order so deep trees do not recurse.
  std::vector<std::uint32_t> stack{0};
  while (!stack.empty()) {
    const std::uint32_t id = stack.back();
    stack.pop_back();
    const SctNode& n = tree.node(id);
    out << std::string(2 * n.depth, ' ') << '{';
    for (std::size_t i = 0; i < n.label.size(); ++i) out << (i ? "," : "") << g.label(n.label[i]);
    out << '}';
    if (n.link_kind == LinkKind::root) out << " root\n";
    else out << " via (" << g.label(*n.link_vertex) << ',' << (n.link_kind == LinkKind::hold ? 'h' : 'p') << ")\n";
    for (auto it = n.children.rbegin(); it != n.children.rend(); ++it) stack.push_back(*it);
  }
}

void write_tree_nodes(std::ostream& out, const SctTree& tree) {
  out << "id\tparent\tkind\tvertex\tlabel\n";
  for (std::uint32_t id = 0; id < tree.nodes().size(); ++id) {
    const SctNode& n = tree.node(id);
    out << id << '\t';
    if (id == 0) out << '-';
    else out << n.parent;
    out << '\t' << kind_name(n.link_kind) << '\t';
    if (n.link_vertex) out << *n.link_vertex;
    else out << '-';
    out << '\t';
    for (std::size_t i = 0; i < n.label.size(); ++i) out << (i ? "," : "") << n.label[i];
    out << '\n';
  }
}

namespace {

std::string show(const std::vector<Vertex>& s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << '}';
  return os.str();
}

}  // namespace

RepresentationVerdict verify_unique_representation(const Graph& g, const SctTree& tree,
                                                   const std::vector<std::vector<Vertex>>& cliques) {
  RepresentationVerdict verdict;
  const std::set<std::vector<Vertex>> expected(cliques.begin(), cliques.end());
  std::set<std::vector<Vertex>> seen;

  auto fail = [&](std::string why) {
    verdict.pass = false;
    verdict.counterexample = std::move(why);
    return verdict;
  };

  for (const LeafPath& path : tree.leaf_paths()) {
    const std::size_t p = path.pivots.size();
    if (p >= 40) return fail("pivot set too large to expand: " + show(path.pivots));
    for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << p); ++subset) {
      ++verdict.expansions;
      std::vector<Vertex> clique = path.hold;
      for (std::size_t i = 0; i < p; ++i)
        if ((subset >> i) & 1U) clique.push_back(path.pivots[i]);
      std::sort(clique.begin(), clique.end());
      for (std::size_t a = 0; a < clique.size(); ++a)
        for (std::size_t b = a + 1; b < clique.size(); ++b)
          if (!g.are_adjacent(clique[a], clique[b])) {
            return fail("expansion " + show(clique) + " of path H=" + show(path.hold) + " P=" +
                        show(path.pivots) + " is not a clique");
          }
      if (!seen.insert(clique).second) return fail("clique " + show(clique) + " represented twice");
      if (!expected.contains(clique)) return fail("clique " + show(clique) + " missing from the reference listing");
    }
  }
  if (seen.size() != expected.size()) {
    for (const auto& c : expected)
      if (!seen.contains(c)) return fail("clique " + show(c) + " has no representation");
  }
  return verdict;
}

}  // namespace sct
