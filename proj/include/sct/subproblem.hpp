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
#include <span>
#include <vector>

#include "sct/bitset.hpp"
#include "sct/degeneracy.hpp"
#include "sct/graph.hpp"

namespace sct {

/// Induced subgraph on a vertex set S, re-indexed to local ids [0, s), with a
/// dense s x s adjacency bit matrix (symmetric, zero diagonal).
class SubProblem {
 public:
  SubProblem() = default;

  /// Induced subproblem over `vertices` (local i maps to vertices[i]).
  /// Uses Graph::are_adjacent, O(s^2 log d).
  static SubProblem induced(const Graph& g, std::span<const Vertex> vertices);

  /// Rebuilds this subproblem in place as the graph induced on N+(v), reusing
  /// storage. `local_of` must have one entry per graph vertex, all equal to
  /// kNoLocal; it is restored before returning. O(s * alpha).
  void assign_out_neighborhood(const DegeneracyOrientation& o, Vertex v, std::vector<std::uint32_t>& local_of);

  static constexpr std::uint32_t kNoLocal = 0xFFFFFFFFu;

  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }
  std::size_t words_per_row() const noexcept { return stride_; }

  std::span<const Vertex> local_ids() const noexcept { return ids_; }
  Vertex global_id(std::size_t local) const { return ids_[local]; }

  std::span<const bits::Word> row(std::size_t local) const { return {rows_.data() + local * stride_, stride_}; }
  bool adjacent(std::size_t a, std::size_t b) const { return bits::test(row(a), b); }
  /// |N(S, local)|
  std::size_t degree(std::size_t local) const { return bits::count(row(local)); }

  /// Subproblem induced on the given local indices (ascending, in range).
  SubProblem restrict(std::span<const std::uint32_t> keep) const;

  /// Bit-mask with every local index set.
  std::vector<bits::Word> full_mask() const;

 private:
  void reset(std::size_t s);
  std::span<bits::Word> mutable_row(std::size_t local) { return {rows_.data() + local * stride_, stride_}; }

  std::vector<Vertex> ids_;
  std::vector<bits::Word> rows_;
  std::size_t stride_ = 0;
};

/// Local index of the member of `mask` with the most neighbors inside `mask`;
/// ties go to the lowest global vertex id. `mask` must be non-empty.
std::uint32_t select_pivot(const SubProblem& sp, std::span<const bits::Word> mask);

/// select_pivot over the whole subproblem. Throws UsageError when empty.
std::uint32_t select_pivot(const SubProblem& sp);

}  // namespace sct
