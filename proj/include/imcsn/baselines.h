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

// Heuristic edge selectors used as comparison points: each member picks its
// top out-edges by target degree, by common friends, or at random.

#ifndef IMCSN_BASELINES_H_
#define IMCSN_BASELINES_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "imcsn/graph.h"
#include "imcsn/ksubnetwork.h"

namespace imcsn {

enum class StrategyKind { kDegree, kFof, kRandom };

struct Strategy {
  StrategyKind kind = StrategyKind::kDegree;
  std::uint64_t rng_seed = 0;  // kRandom only
};

// "degree", "fof" or "random"; anything else is kInvalidArgument.
StrategyKind ParseStrategyKind(std::string_view name);
std::string StrategyName(StrategyKind kind);

// |N_out(u) ∩ N_out(v)|.
std::size_t CommonFriends(const Graph& graph, NodeId u, NodeId v);

// Without base: grows from the seeds, visiting members breadth-first in
// discovery order; each visited member takes its top-r out-edges, r being
// its residual budget. With base: keeps every base edge and fills the
// residual budgets of the base members only (newly reached nodes are not
// visited). Edges into seeds are never selected. Score ties go to the
// smaller target id.
KSubnetwork SelectBaseline(const Graph& graph, std::span<const NodeId> seeds, int k,
                           const Strategy& strategy,
                           const KSubnetwork* base = nullptr);

}  // namespace imcsn

#endif  // IMCSN_BASELINES_H_
