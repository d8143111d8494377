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

#include <cstdint>
#include <limits>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "sct/errors.hpp"

namespace sct {

/// Arbitrary-precision clique count; the default counter.
using BigCount = boost::multiprecision::cpp_int;

/// 128-bit unsigned counter whose addition throws CounterOverflowError instead
/// of wrapping.
class Checked128 {
 public:
  __extension__ using Raw = unsigned __int128;

  constexpr Checked128() = default;
  constexpr explicit Checked128(Raw v) : value_(v) {}

  Checked128& operator+=(const Checked128& other) {
    if (__builtin_add_overflow(value_, other.value_, &value_)) throw CounterOverflowError();
    return *this;
  }
  friend Checked128 operator+(Checked128 a, const Checked128& b) { return a += b; }

  constexpr Raw raw() const noexcept { return value_; }
  friend constexpr bool operator==(const Checked128&, const Checked128&) = default;

 private:
  Raw value_ = 0;
};

enum class CounterKind { exact, fast128 };

inline BigCount to_big(const BigCount& c) { return c; }
inline BigCount to_big(const Checked128& c) {
  const auto raw = c.raw();
  BigCount out = static_cast<std::uint64_t>(raw >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(raw);
  return out;
}

inline std::string to_decimal(const BigCount& c) { return c.str(); }
inline std::string to_decimal(const Checked128& c) {
  auto raw = c.raw();
  if (raw == 0) return "0";
  std::string digits;
  while (raw != 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(raw % 10)));
    raw /= 10;
  }
  return {digits.rbegin(), digits.rend()};
}

/// Narrows a big value into counter type C; false when it does not fit.
template <typename C>
bool try_narrow(const BigCount& value, C& out);

template <>
inline bool try_narrow<BigCount>(const BigCount& value, BigCount& out) {
  out = value;
  return true;
}

template <>
inline bool try_narrow<Checked128>(const BigCount& value, Checked128& out) {
  if (value < 0 || boost::multiprecision::msb(value == 0 ? BigCount(1) : value) >= 128) return false;
  const auto high = static_cast<std::uint64_t>(value >> 64);
  const auto low = static_cast<std::uint64_t>(value & std::numeric_limits<std::uint64_t>::max());
  out = Checked128((static_cast<Checked128::Raw>(high) << 64) | low);
  return true;
}

}  // namespace sct
