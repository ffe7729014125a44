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

#include "imcsn/baselines.h"

#include <algorithm>
#include <vector>

#include "imcsn/candidate_graph.h"
#include "imcsn/error.h"
#include "imcsn/rng.h"

namespace imcsn {

StrategyKind ParseStrategyKind(std::string_view name) {
  if (name == "degree") return StrategyKind::kDegree;
  if (name == "fof") return StrategyKind::kFof;
  if (name == "random") return StrategyKind::kRandom;
  throw Error(ErrorCode::kInvalidArgument,
              "unknown baseline strategy '" + std::string(name) + "'");
}

std::string StrategyName(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::kDegree:
      return "degree";
    case StrategyKind::kFof:
      return "fof";
    case StrategyKind::kRandom:
      return "random";
  }
  return "?";
}

std::size_t CommonFriends(const Graph& graph, NodeId u, NodeId v) {
  const auto a = graph.OutNeighbors(u);
  const auto b = graph.OutNeighbors(v);
  std::size_t i = 0, j = 0, common = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      ++common;
      ++i;
      ++j;
    }
  }
  return common;
}

namespace {

class Selector {
 public:
  Selector(const Graph& graph, const Strategy& strategy, const std::vector<bool>& seed_mask)
      : graph_(graph), strategy_(strategy), seed_mask_(seed_mask),
        engine_(DeriveEngine(strategy.rng_seed, 0)) {}

  // Fills u's residual budget; returns the chosen targets.
  std::vector<NodeId> Fill(KSubnetwork& subnet, NodeId u) {
    std::vector<NodeId> chosen;
    const std::size_t residual = subnet.Budget(u) - subnet.OutDegree(u);
    if (residual == 0) return chosen;
    std::vector<NodeId> pool;
    for (NodeId v : graph_.OutNeighbors(u)) {
      if (!seed_mask_[v] && !subnet.HasEdge(u, v)) pool.push_back(v);
    }
    Rank(u, pool);
    if (pool.size() > residual) pool.resize(residual);
    for (NodeId v : pool) {
      subnet.InsertEdge(u, v, EdgeMark::kNative);
      chosen.push_back(v);
    }
    return chosen;
  }

 private:
  // pool arrives in ascending target order.
  void Rank(NodeId u, std::vector<NodeId>& pool) {
    switch (strategy_.kind) {
      case StrategyKind::kDegree:
        std::stable_sort(pool.begin(), pool.end(), [&](NodeId a, NodeId b) {
          return graph_.OutDegree(a) > graph_.OutDegree(b);
        });
        break;
      case StrategyKind::kFof: {
        std::vector<std::pair<std::size_t, NodeId>> scored;
        for (NodeId v : pool) scored.push_back({CommonFriends(graph_, u, v), v});
        std::stable_sort(scored.begin(), scored.end(),
                         [](const auto& a, const auto& b) { return a.first > b.first; });
        for (std::size_t i = 0; i < pool.size(); ++i) pool[i] = scored[i].second;
        break;
      }
      case StrategyKind::kRandom:
        for (std::size_t i = pool.size(); i > 1; --i) {
          std::swap(pool[i - 1], pool[UniformBelow(engine_, i)]);
        }
        break;
    }
  }

  const Graph& graph_;
  const Strategy& strategy_;
  const std::vector<bool>& seed_mask_;
  Engine engine_;
};

// Base members breadth-first from the seeds over base edges, then any
// remaining base members by id.
std::vector<NodeId> BaseVisitOrder(const KSubnetwork& base, std::span<const NodeId> seeds) {
  const std::size_t n = base.parent().num_nodes();
  std::vector<bool> seen(n, false);
  std::vector<NodeId> order;
  for (NodeId s : seeds) {
    if (base.Contains(s) && !seen[s]) {
      seen[s] = true;
      order.push_back(s);
    }
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (const SubEdge& e : base.OutEdges(order[i])) {
      if (!seen[e.target]) {
        seen[e.target] = true;
        order.push_back(e.target);
      }
    }
  }
  std::vector<NodeId> rest;
  for (NodeId u : base.members()) {
    if (!seen[u]) rest.push_back(u);
  }
  std::sort(rest.begin(), rest.end());
  order.insert(order.end(), rest.begin(), rest.end());
  return order;
}

}  // namespace

KSubnetwork SelectBaseline(const Graph& graph, std::span<const NodeId> seeds, int k,
                           const Strategy& strategy, const KSubnetwork* base) {
  if (seeds.empty()) throw Error(ErrorCode::kInvalidArgument, "empty seed set");
  const std::vector<bool> seed_mask = MakeNodeMask(graph.num_nodes(), seeds);
  Selector selector(graph, strategy, seed_mask);

  if (base != nullptr) {
    if (&base->parent() != &graph && !(base->parent() == graph)) {
      throw Error(ErrorCode::kInvalidArgument, "base subnetwork is over another graph");
    }
    if (base->k() != k) {
      throw Error(ErrorCode::kInvalidArgument, "base subnetwork has a different k");
    }
    KSubnetwork subnet(graph, k, base->members());
    for (const Edge& e : base->Edges()) subnet.InsertEdge(e.source, e.target, EdgeMark::kNative);
    for (NodeId u : BaseVisitOrder(*base, seeds)) selector.Fill(subnet, u);
    return subnet;
  }

  std::vector<NodeId> queue;
  std::vector<bool> queued(graph.num_nodes(), false);
  for (NodeId s : seeds) {
    if (!queued[s]) {
      queued[s] = true;
      queue.push_back(s);
    }
  }
  KSubnetwork subnet(graph, k, queue);
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (NodeId v : selector.Fill(subnet, queue[i])) {
      if (!queued[v]) {
        queued[v] = true;
        queue.push_back(v);
      }
    }
  }
  return subnet;
}

}  // namespace imcsn
