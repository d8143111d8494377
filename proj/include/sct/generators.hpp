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

#include "sct/graph.hpp"

// Small synthetic graph families used by tests, the acceptance suite and the
// CLI's self-checks.
namespace sct::gen {

Graph complete(std::size_t n);
Graph path(std::size_t n);
Graph cycle(std::size_t n);
Graph star(std::size_t leaves);
Graph empty(std::size_t n);
Graph petersen();

/// G(n, p) with a seeded 64-bit Mersenne twister.
Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed);

/// Each vertex i >= 1 links to min(i, d) distinct uniformly chosen earlier
/// vertices, so the degeneracy is at most d and m grows linearly in n.
Graph bounded_degeneracy(std::size_t n, std::size_t d, std::uint64_t seed);

}  // namespace sct::gen
