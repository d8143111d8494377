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

#include "sct/subproblem.hpp"

#include <cassert>

#include "sct/errors.hpp"

namespace sct {

void SubProblem::reset(std::size_t s) {
  stride_ = bits::words_for(s);
  rows_.assign(s * stride_, 0);
}

SubProblem SubProblem::induced(const Graph& g, std::span<const Vertex> vertices) {
  SubProblem sp;
  sp.ids_.assign(vertices.begin(), vertices.end());
  sp.reset(sp.ids_.size());
  for (std::size_t a = 0; a < sp.size(); ++a)
    for (std::size_t b = a + 1; b < sp.size(); ++b)
      if (g.are_adjacent(sp.ids_[a], sp.ids_[b])) {
        bits::set(sp.mutable_row(a), b);
        bits::set(sp.mutable_row(b), a);
      }
  return sp;
}

void SubProblem::assign_out_neighborhood(const DegeneracyOrientation& o, Vertex v,
                                         std::vector<std::uint32_t>& local_of) {
  auto out = o.out_neighbors(v);
  ids_.assign(out.begin(), out.end());
  reset(ids_.size());
  for (std::size_t i = 0; i < ids_.size(); ++i) local_of[ids_[i]] = static_cast<std::uint32_t>(i);
  // Both endpoints of an edge inside N+(v) are in N+(v), and the edge is
  // oriented one way, so scanning out-lists finds each edge exactly once.
  for (std::size_t i = 0; i < ids_.size(); ++i) {
    for (Vertex w : o.out_neighbors(ids_[i])) {
      const std::uint32_t j = local_of[w];
      if (j == kNoLocal) continue;
      bits::set(mutable_row(i), j);
      bits::set(mutable_row(j), i);
    }
  }
  for (Vertex u : ids_) local_of[u] = kNoLocal;
}

SubProblem SubProblem::restrict(std::span<const std::uint32_t> keep) const {
  SubProblem sp;
  sp.ids_.reserve(keep.size());
  for (std::uint32_t k : keep) {
    assert(k < size());
    sp.ids_.push_back(ids_[k]);
  }
  sp.reset(keep.size());
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = a + 1; b < keep.size(); ++b)
      if (adjacent(keep[a], keep[b])) {
        bits::set(sp.mutable_row(a), b);
        bits::set(sp.mutable_row(b), a);
      }
  return sp;
}

std::vector<bits::Word> SubProblem::full_mask() const {
  std::vector<bits::Word> mask(stride_, 0);
  for (std::size_t i = 0; i < size(); ++i) bits::set(mask, i);
  return mask;
}

std::uint32_t select_pivot(const SubProblem& sp, std::span<const bits::Word> mask) {
  std::uint32_t best = SubProblem::kNoLocal;
  std::size_t best_degree = 0;
  bits::for_each(mask, [&](std::size_t u) {
    const std::size_t d = bits::count_and(sp.row(u), mask);
    if (best == SubProblem::kNoLocal || d > best_degree ||
        (d == best_degree && sp.global_id(u) < sp.global_id(best))) {
      best = static_cast<std::uint32_t>(u);
      best_degree = d;
    }
  });
  assert(best != SubProblem::kNoLocal);
  return best;
}

std::uint32_t select_pivot(const SubProblem& sp) {
  if (sp.empty()) throw UsageError("select_pivot on an empty subproblem");
  const auto mask = sp.full_mask();
  return select_pivot(sp, mask);
}

}  // namespace sct
