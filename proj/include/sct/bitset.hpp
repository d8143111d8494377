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

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>

// Word-span bit-set helpers shared by the subproblem matrix and the traversal.
namespace sct::bits {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

inline bool test(std::span<const Word> s, std::size_t i) { return (s[i / kWordBits] >> (i % kWordBits)) & 1U; }
inline void set(std::span<Word> s, std::size_t i) { s[i / kWordBits] |= Word{1} << (i % kWordBits); }
inline void reset(std::span<Word> s, std::size_t i) { s[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }

inline bool any(std::span<const Word> s) {
  for (Word w : s)
    if (w) return true;
  return false;
}

inline std::size_t count(std::span<const Word> s) {
  std::size_t c = 0;
  for (Word w : s) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

inline std::size_t count_and(std::span<const Word> a, std::span<const Word> b) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return c;
}

/// out = a & b
inline void assign_and(std::span<Word> out, std::span<const Word> a, std::span<const Word> b) {
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] & b[i];
}

/// out = a & ~b
inline void assign_and_not(std::span<Word> out, std::span<const Word> a, std::span<const Word> b) {
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = a[i] & ~b[i];
}

/// Calls fn(index) for every set bit, ascending.
template <typename Fn>
void for_each(std::span<const Word> s, Fn&& fn) {
  for (std::size_t w = 0; w < s.size(); ++w) {
    Word word = s[w];
    while (word) {
      fn(w * kWordBits + static_cast<std::size_t>(std::countr_zero(word)));
      word &= word - 1;
    }
  }
}

}  // namespace sct::bits
