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

#include "imcsn/candidate_graph.h"

#include <algorithm>

#include "imcsn/error.h"

namespace imcsn {

bool CandidateGraph::Add(NodeId u, NodeId v, double prob) {
  if (u >= num_nodes() || v >= num_nodes()) {
    throw Error(ErrorCode::kUnknownNode, "candidate endpoint out of range");
  }
  const auto [it, fresh] = index_.emplace(Key(u, v), slots_.size());
  std::uint32_t slot = it->second;
  if (fresh) {
    slots_.push_back({u, v, prob});
    alive_.push_back(false);
    in_[v].push_back(slot);
    out_[u].push_back(slot);
  } else if (alive_[slot]) {
    return false;
  }
  slots_[slot].prob = prob;
  alive_[slot] = true;
  ++in_live_[v];
  ++out_live_[u];
  ++live_;
  return true;
}

void CandidateGraph::Kill(std::uint32_t slot) {
  alive_[slot] = false;
  --in_live_[slots_[slot].target];
  --out_live_[slots_[slot].source];
  --live_;
}

bool CandidateGraph::Remove(NodeId u, NodeId v) {
  const auto it = index_.find(Key(u, v));
  if (it == index_.end() || !alive_[it->second]) return false;
  Kill(it->second);
  return true;
}

std::vector<CandidateEdge> CandidateGraph::RemoveAllOut(NodeId u) {
  std::vector<CandidateEdge> removed;
  for (std::uint32_t slot : out_[u]) {
    if (!alive_[slot]) continue;
    removed.push_back(slots_[slot]);
    Kill(slot);
  }
  return removed;
}

std::vector<CandidateEdge> CandidateGraph::RemoveAllIn(NodeId v) {
  std::vector<CandidateEdge> removed;
  for (std::uint32_t slot : in_[v]) {
    if (!alive_[slot]) continue;
    removed.push_back(slots_[slot]);
    Kill(slot);
  }
  return removed;
}

bool CandidateGraph::Contains(NodeId u, NodeId v) const {
  const auto it = index_.find(Key(u, v));
  return it != index_.end() && alive_[it->second];
}

std::vector<CandidateEdge> CandidateGraph::InCandidates(NodeId v) const {
  std::vector<CandidateEdge> out;
  out.reserve(in_live_[v]);
  ForEachIn(v, [&](const CandidateEdge& e) { out.push_back(e); });
  return out;
}

std::vector<CandidateEdge> CandidateGraph::OutCandidates(NodeId u) const {
  std::vector<CandidateEdge> out;
  out.reserve(out_live_[u]);
  for (std::uint32_t slot : out_[u]) {
    if (alive_[slot]) out.push_back(slots_[slot]);
  }
  return out;
}

std::vector<NodeId> CandidateGraph::Targets() const {
  std::vector<NodeId> targets;
  for (NodeId v = 0; v < num_nodes(); ++v) {
    if (in_live_[v] > 0) targets.push_back(v);
  }
  return targets;
}

std::vector<CandidateEdge> CandidateGraph::Edges() const {
  std::vector<CandidateEdge> edges;
  edges.reserve(live_);
  for (std::size_t slot = 0; slot < slots_.size(); ++slot) {
    if (alive_[slot]) edges.push_back(slots_[slot]);
  }
  std::sort(edges.begin(), edges.end(),
            [](const CandidateEdge& a, const CandidateEdge& b) {
              return a.source != b.source ? a.source < b.source
                                          : a.target < b.target;
            });
  return edges;
}

std::vector<bool> MakeNodeMask(std::size_t num_nodes,
                               std::span<const NodeId> nodes) {
  std::vector<bool> mask(num_nodes, false);
  for (NodeId u : nodes) {
    if (u >= num_nodes) {
      throw Error(ErrorCode::kUnknownNode, "node " + std::to_string(u));
    }
    mask[u] = true;
  }
  return mask;
}

CandidateGraph BuildCandidateGraph(const Graph& graph, const KSubnetwork& subnet,
                                   const std::vector<bool>& forbidden_targets) {
  CandidateGraph candidates(graph.num_nodes());
  std::vector<NodeId> members = subnet.members();
  std::sort(members.begin(), members.end());
  for (NodeId u : members) {
    if (!subnet.HasResidual(u)) continue;
    const auto targets = graph.OutNeighbors(u);
    const auto probs = graph.OutProbs(u);
    for (std::size_t i = 0; i < targets.size(); ++i) {
      const NodeId v = targets[i];
      if (forbidden_targets[v] || subnet.HasEdge(u, v)) continue;
      candidates.Add(u, v, probs[i]);
    }
  }
  return candidates;
}

}  // namespace imcsn
