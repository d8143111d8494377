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
#include <type_traits>
#include <vector>

#include "sct/counter.hpp"

namespace sct {

/// C(r, i) for 0 <= i <= r <= max_row, built by Pascal's rule in exact
/// arithmetic and then narrowed to the counter type. Entries that do not fit C
/// are recorded as unavailable and throw CounterOverflowError when read.
template <typename C>
class BinomialTable {
 public:
  explicit BinomialTable(std::size_t max_row) : max_row_(max_row) {
    values_.resize(index(max_row + 1, 0));
    fits_.resize(values_.size());
    std::vector<BigCount> prev;
    std::vector<BigCount> cur;
    for (std::size_t r = 0; r <= max_row; ++r) {
      cur.assign(r + 1, BigCount(1));
      for (std::size_t i = 1; i < r; ++i) cur[i] = prev[i - 1] + prev[i];
      for (std::size_t i = 0; i <= r; ++i) fits_[index(r, i)] = try_narrow(cur[i], values_[index(r, i)]);
      prev.swap(cur);
    }
  }

  std::size_t max_row() const noexcept { return max_row_; }

  const C& operator()(std::size_t r, std::size_t i) const {
    const std::size_t at = index(r, i);
    if constexpr (!std::is_same_v<C, BigCount>) {
      if (!fits_[at]) throw CounterOverflowError();
    }
    return values_[at];
  }

 private:
  static constexpr std::size_t index(std::size_t r, std::size_t i) { return r * (r + 1) / 2 + i; }

  std::size_t max_row_;
  std::vector<C> values_;
  std::vector<bool> fits_;
};

}  // namespace sct
