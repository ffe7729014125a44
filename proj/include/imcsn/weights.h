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

// Edge-probability models: trivalency and the epidemic-threshold scaled
// intimacy mapping.

#ifndef IMCSN_WEIGHTS_H_
#define IMCSN_WEIGHTS_H_

#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "imcsn/graph.h"

namespace imcsn {

inline constexpr std::array<double, 3> kTrivalencyLevels = {0.1, 0.01, 0.001};

enum class WeightModel { kTrivalency, kIntimacy };

struct WeightModelConfig {
  WeightModel model = WeightModel::kTrivalency;
  double lambda1 = 1.0;
  double lambda2 = 1.0;
  std::uint64_t rng_seed = 0;
};

// Non-negative interaction count per edge, indexed by EdgeId of the graph it
// was read against.
struct IntimacyMap {
  std::vector<std::int64_t> values;
};

// Each edge weight drawn uniformly from kTrivalencyLevels with
// std::mt19937_64 seeded by rng_seed, one draw per edge in edge-id order.
Graph AssignTrivalency(const Graph& graph, std::uint64_t rng_seed);

// sum_v d(v) / (sum_v d(v)^2 - sum_v d(v)) over out-degrees d.
double EpidemicThreshold(const Graph& graph);

// p = (I - min I) / (max I - min I) * (lambda2 - lambda1) * beta_c
//     + lambda1 * beta_c.
// Rejects constant intimacy and lambda1 > lambda2, and any resulting
// probability outside [0, 1].
Graph IntimacyToProbability(const Graph& graph, const IntimacyMap& intimacy,
                            double lambda1, double lambda2);

// Reads "u v I" lines (same label space as `graph`); every edge of `graph`
// must be covered exactly once.
IntimacyMap LoadIntimacy(std::istream& in, const Graph& graph);

Graph ApplyWeightModel(const Graph& graph, const WeightModelConfig& config,
                       const IntimacyMap* intimacy = nullptr);

}  // namespace imcsn

#endif  // IMCSN_WEIGHTS_H_
