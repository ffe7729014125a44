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

#ifndef IMCSN_CANDIDATE_GRAPH_H_
#define IMCSN_CANDIDATE_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "imcsn/graph.h"
#include "imcsn/ksubnetwork.h"

namespace imcsn {

struct CandidateEdge {
  NodeId source;
  NodeId target;
  double prob;

  friend bool operator==(const CandidateEdge&, const CandidateEdge&) = default;
};

// Mutable pool of insertable edges with per-node in/out lists.
//
// Removal is lazy: slots are flagged dead and skipped on iteration. Per-node
// lists keep insertion order.
class CandidateGraph {
 public:
  explicit CandidateGraph(std::size_t num_nodes = 0)
      : in_(num_nodes), out_(num_nodes), in_live_(num_nodes, 0),
        out_live_(num_nodes, 0) {}

  std::size_t num_nodes() const { return in_.size(); }
  std::size_t num_edges() const { return live_; }
  bool empty() const { return live_ == 0; }

  // Returns false when (u, v) is already live.
  bool Add(NodeId u, NodeId v, double prob);
  // Returns false when (u, v) is not live.
  bool Remove(NodeId u, NodeId v);
  // Removes every live out-candidate of u; returns them in list order.
  std::vector<CandidateEdge> RemoveAllOut(NodeId u);
  std::vector<CandidateEdge> RemoveAllIn(NodeId v);

  bool Contains(NodeId u, NodeId v) const;
  std::size_t InDegree(NodeId v) const { return in_live_[v]; }
  std::size_t OutDegree(NodeId u) const { return out_live_[u]; }

  std::vector<CandidateEdge> InCandidates(NodeId v) const;
  std::vector<CandidateEdge> OutCandidates(NodeId u) const;

  template <typename Fn>
  void ForEachIn(NodeId v, Fn&& fn) const {
    for (std::uint32_t slot : in_[v]) {
      if (alive_[slot]) fn(slots_[slot]);
    }
  }

  // Nodes with at least one live in-candidate, ascending.
  std::vector<NodeId> Targets() const;
  // Live edges sorted by (source, target).
  std::vector<CandidateEdge> Edges() const;

 private:
  static std::uint64_t Key(NodeId u, NodeId v) {
    return (std::uint64_t{u} << 32) | v;
  }
  void Kill(std::uint32_t slot);

  std::vector<CandidateEdge> slots_;
  std::vector<bool> alive_;
  std::unordered_map<std::uint64_t, std::uint32_t> index_;
  std::vector<std::vector<std::uint32_t>> in_;
  std::vector<std::vector<std::uint32_t>> out_;
  std::vector<std::size_t> in_live_;
  std::vector<std::size_t> out_live_;
  std::size_t live_ = 0;
};

std::vector<bool> MakeNodeMask(std::size_t num_nodes,
                               std::span<const NodeId> nodes);

// Every (u, v) in E with u a member of subnet having residual budget,
// (u, v) not in subnet, and v not forbidden.
CandidateGraph BuildCandidateGraph(const Graph& graph, const KSubnetwork& subnet,
                                   const std::vector<bool>& forbidden_targets);

}  // namespace imcsn

#endif  // IMCSN_CANDIDATE_GRAPH_H_
