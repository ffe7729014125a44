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

#include "imcsn/diffusion.h"

#include <cmath>

#include "imcsn/error.h"
#include "imcsn/rng.h"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace imcsn {

std::uint64_t EdgeKey(const std::string& source_label,
                      const std::string& target_label) {
  return MixPair(HashLabel(source_label), HashLabel(target_label));
}

std::uint64_t SimulationKey(std::uint64_t rng_seed, std::uint64_t sim_index) {
  return MixPair(rng_seed, sim_index);
}

DiffusionView DiffusionView::FromGraph(const Graph& graph) {
  DiffusionView view;
  const std::size_t n = graph.num_nodes();
  view.active_.assign(n, true);
  view.offsets_.resize(n + 1);
  view.targets_.reserve(graph.num_edges());
  view.probs_.reserve(graph.num_edges());
  view.keys_.reserve(graph.num_edges());
  for (NodeId u = 0; u < n; ++u) {
    view.offsets_[u] = view.targets_.size();
    const auto targets = graph.OutNeighbors(u);
    const auto probs = graph.OutProbs(u);
    for (std::size_t i = 0; i < targets.size(); ++i) {
      view.targets_.push_back(targets[i]);
      view.probs_.push_back(probs[i]);
      view.keys_.push_back(EdgeKey(graph.label(u), graph.label(targets[i])));
    }
  }
  view.offsets_[n] = view.targets_.size();
  return view;
}

DiffusionView DiffusionView::FromSubnetwork(const KSubnetwork& subnet) {
  const Graph& graph = subnet.parent();
  DiffusionView view;
  const std::size_t n = graph.num_nodes();
  view.active_.assign(n, false);
  view.offsets_.resize(n + 1);
  view.targets_.reserve(subnet.num_edges());
  view.probs_.reserve(subnet.num_edges());
  view.keys_.reserve(subnet.num_edges());
  for (NodeId u = 0; u < n; ++u) {
    view.offsets_[u] = view.targets_.size();
    if (!subnet.Contains(u)) continue;
    view.active_[u] = true;
    for (const SubEdge& e : subnet.OutEdges(u)) {
      view.targets_.push_back(e.target);
      view.probs_.push_back(e.prob);
      view.keys_.push_back(EdgeKey(graph.label(u), graph.label(e.target)));
    }
  }
  view.offsets_[n] = view.targets_.size();
  return view;
}

std::size_t CascadeWorkspace::Run(const DiffusionView& view,
                                  std::span<const NodeId> seeds,
                                  std::uint64_t sim_key) {
  if (++epoch_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 1;
  }
  queue_.clear();
  for (NodeId s : seeds) {
    if (!view.IsPresent(s) || stamp_[s] == epoch_) continue;
    stamp_[s] = epoch_;
    queue_.push_back(s);
  }
  // BFS frontier; each edge out of a newly active node gets one coin.
  for (std::size_t head = 0; head < queue_.size(); ++head) {
    const NodeId u = queue_[head];
    const auto targets = view.Targets(u);
    const auto probs = view.Probs(u);
    const auto keys = view.Keys(u);
    for (std::size_t i = 0; i < targets.size(); ++i) {
      const NodeId v = targets[i];
      if (stamp_[v] == epoch_) continue;
      if (ToUnitInterval(MixPair(sim_key, keys[i])) < probs[i]) {
        stamp_[v] = epoch_;
        queue_.push_back(v);
      }
    }
  }
  return queue_.size();
}

std::vector<NodeId> SimulateIcOnce(const DiffusionView& view,
                                   std::span<const NodeId> seeds,
                                   std::uint64_t sim_key) {
  CascadeWorkspace workspace(view.num_nodes());
  workspace.Run(view, seeds, sim_key);
  return workspace.activated();
}

namespace {

void CheckSeeds(std::span<const NodeId> seeds, std::size_t num_nodes) {
  for (NodeId s : seeds) {
    if (s >= num_nodes) {
      throw Error(ErrorCode::kUnknownNode, "seed " + std::to_string(s) +
                                               " not in graph");
    }
  }
}

InfluenceEstimate Summarize(const std::vector<std::uint64_t>& totals) {
  InfluenceEstimate est;
  est.num_sims = totals.size();
  double sum = 0.0;
  for (std::uint64_t t : totals) sum += static_cast<double>(t);
  est.mean = sum / static_cast<double>(totals.size());
  if (totals.size() > 1) {
    double ss = 0.0;
    for (std::uint64_t t : totals) {
      const double d = static_cast<double>(t) - est.mean;
      ss += d * d;
    }
    const double variance = ss / static_cast<double>(totals.size() - 1);
    est.std_error = std::sqrt(variance / static_cast<double>(totals.size()));
  }
  return est;
}

// Per-simulation totals; the body only depends on the simulation index, so
// the parallel split does not affect the result.
template <typename Body>
std::vector<std::uint64_t> RunSimulations(std::size_t num_nodes,
                                          std::size_t num_sims, Body body) {
  if (num_sims < 1) {
    throw Error(ErrorCode::kInvalidArgument, "num_sims must be >= 1");
  }
  std::vector<std::uint64_t> totals(num_sims, 0);
#pragma omp parallel
  {
    CascadeWorkspace workspace(num_nodes);
#pragma omp for schedule(static)
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(num_sims); ++i) {
      totals[i] = body(workspace, static_cast<std::uint64_t>(i));
    }
  }
  return totals;
}

}  // namespace

InfluenceEstimate EstimateInfluence(const DiffusionView& view,
                                    std::span<const NodeId> seeds,
                                    std::size_t num_sims,
                                    std::uint64_t rng_seed) {
  CheckSeeds(seeds, view.num_nodes());
  return Summarize(RunSimulations(
      view.num_nodes(), num_sims,
      [&](CascadeWorkspace& ws, std::uint64_t i) -> std::uint64_t {
        return ws.Run(view, seeds, SimulationKey(rng_seed, i));
      }));
}

InfluenceEstimate EstimateInfluence(const Graph& graph,
                                    std::span<const NodeId> seeds,
                                    std::size_t num_sims,
                                    std::uint64_t rng_seed) {
  return EstimateInfluence(DiffusionView::FromGraph(graph), seeds, num_sims,
                           rng_seed);
}

InfluenceEstimate AggregateSeedInfluence(const DiffusionView& view,
                                         std::span<const NodeId> seeds,
                                         std::size_t num_sims,
                                         std::uint64_t rng_seed) {
  CheckSeeds(seeds, view.num_nodes());
  return Summarize(RunSimulations(
      view.num_nodes(), num_sims,
      [&](CascadeWorkspace& ws, std::uint64_t i) -> std::uint64_t {
        const std::uint64_t key = SimulationKey(rng_seed, i);
        std::uint64_t total = 0;
        for (NodeId s : seeds) {
          total += ws.Run(view, std::span<const NodeId>(&s, 1), key);
        }
        return total;
      }));
}

InfluenceEstimate AggregateSeedInfluence(const KSubnetwork& subnet,
                                         std::span<const NodeId> seeds,
                                         std::size_t num_sims,
                                         std::uint64_t rng_seed) {
  return AggregateSeedInfluence(DiffusionView::FromSubnetwork(subnet), seeds,
                                num_sims, rng_seed);
}

}  // namespace imcsn
