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

// Heap accounting for the process. The global operator new/delete overrides
// live in alloc_tracker.cpp; link it into exactly one executable.
namespace alloc_tracker {

std::size_t current_bytes();
std::size_t peak_bytes();
std::size_t total_bytes();  // cumulative bytes ever allocated
void reset_peak();          // peak := current

}  // namespace alloc_tracker
