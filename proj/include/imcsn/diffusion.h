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

// Independent Cascade simulation and Monte Carlo influence estimation.
//
// Randomness model: in simulation i the coin of edge (u, v) is
//   ToUnitInterval(MixPair(MixPair(rng_seed, i), key(u, v))) < p(u, v)
// where key(u, v) hashes the endpoint labels. Every edge is flipped at most
// once per simulation, which is exactly the IC process, and the outcome of a
// coin depends only on (rng_seed, i, labels). Two consequences:
//   * runs over different thread counts are bit-identical;
//   * estimates on a subnetwork and on its parent graph share coins, so the
//     subnetwork's cascade in simulation i is a subset of the parent's, and
//     re-loading a written subnetwork reproduces its estimate exactly.

#ifndef IMCSN_DIFFUSION_H_
#define IMCSN_DIFFUSION_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "imcsn/graph.h"
#include "imcsn/ksubnetwork.h"

namespace imcsn {

struct InfluenceEstimate {
  double mean = 0.0;
  std::size_t num_sims = 0;
  double std_error = 0.0;
};

// Read-only CSR snapshot of a Graph or a KSubnetwork, in parent node ids.
class DiffusionView {
 public:
  static DiffusionView FromGraph(const Graph& graph);
  // Only member nodes and member edges; non-members are inert.
  static DiffusionView FromSubnetwork(const KSubnetwork& subnet);

  std::size_t num_nodes() const { return active_.size(); }
  bool IsPresent(NodeId u) const { return u < active_.size() && active_[u]; }

  std::span<const NodeId> Targets(NodeId u) const {
    return {targets_.data() + offsets_[u], offsets_[u + 1] - offsets_[u]};
  }
  std::span<const double> Probs(NodeId u) const {
    return {probs_.data() + offsets_[u], offsets_[u + 1] - offsets_[u]};
  }
  std::span<const std::uint64_t> Keys(NodeId u) const {
    return {keys_.data() + offsets_[u], offsets_[u + 1] - offsets_[u]};
  }

 private:
  std::vector<bool> active_;
  std::vector<std::size_t> offsets_{0};
  std::vector<NodeId> targets_;
  std::vector<double> probs_;
  std::vector<std::uint64_t> keys_;
};

std::uint64_t EdgeKey(const std::string& source_label,
                      const std::string& target_label);
std::uint64_t SimulationKey(std::uint64_t rng_seed, std::uint64_t sim_index);

// Reusable scratch space for repeated cascades on one view.
class CascadeWorkspace {
 public:
  explicit CascadeWorkspace(std::size_t num_nodes) : stamp_(num_nodes, 0) {}

  // Runs one cascade and returns the number of active nodes at termination.
  // Seeds absent from the view are skipped.
  std::size_t Run(const DiffusionView& view, std::span<const NodeId> seeds,
                  std::uint64_t sim_key);

  // Nodes activated by the last Run, seeds first, in activation order.
  const std::vector<NodeId>& activated() const { return queue_; }

 private:
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
  std::vector<NodeId> queue_;
};

// Activated set of one cascade (seeds included), in activation order.
std::vector<NodeId> SimulateIcOnce(const DiffusionView& view,
                                   std::span<const NodeId> seeds,
                                   std::uint64_t sim_key);

// Mean activated-set size (seeds included) over num_sims cascades.
InfluenceEstimate EstimateInfluence(const DiffusionView& view,
                                    std::span<const NodeId> seeds,
                                    std::size_t num_sims, std::uint64_t rng_seed);
InfluenceEstimate EstimateInfluence(const Graph& graph,
                                    std::span<const NodeId> seeds,
                                    std::size_t num_sims, std::uint64_t rng_seed);

// sum over s in seeds of the influence of {s} alone; seeds absent from the
// view contribute 0. All seeds share each simulation's coins; std_error is
// computed from the per-simulation totals.
InfluenceEstimate AggregateSeedInfluence(const DiffusionView& view,
                                         std::span<const NodeId> seeds,
                                         std::size_t num_sims,
                                         std::uint64_t rng_seed);
InfluenceEstimate AggregateSeedInfluence(const KSubnetwork& subnet,
                                         std::span<const NodeId> seeds,
                                         std::size_t num_sims,
                                         std::uint64_t rng_seed);

}  // namespace imcsn

#endif  // IMCSN_DIFFUSION_H_
