// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Synthetic friendship graphs. Every undirected edge is emitted in both
// directions with probability 0; labels are "0".."n-1".

#ifndef IMCSN_SYNTHETIC_H_
#define IMCSN_SYNTHETIC_H_

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "imcsn/graph.h"

namespace imcsn {

enum class SyntheticKind { kScaleFree, kSmallWorld, kRegular };

SyntheticKind ParseSyntheticKind(std::string_view name);

struct SyntheticParams {
  // Scale-free: preferential-attachment links per new node.
  int attach = 3;
  // Small-world: ring degree (even) and rewiring probability.
  int ring_degree = 4;
  double rewire = 0.1;
  // Regular: degree of every node; n * degree must be even.
  int degree = 3;
};

// kScaleFree: Barabasi-Albert from an (attach + 1)-clique.
// kSmallWorld: Watts-Strogatz; rewires that would create a self-loop or a
//   duplicate keep the lattice edge. The ring degree is capped at n - 1.
// kRegular: circulant graph (plus antipodal links for odd degree) under a
//   random relabeling.
Graph GenerateSynthetic(SyntheticKind kind, std::size_t n, const SyntheticParams& params,
                        std::uint64_t rng_seed);

}  // namespace imcsn

#endif  // IMCSN_SYNTHETIC_H_
