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

#ifndef IMCSN_KSUBNETWORK_H_
#define IMCSN_KSUBNETWORK_H_

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "imcsn/graph.h"

namespace imcsn {

enum class EdgeMark : unsigned char { kNative, kInserted };

struct SubEdge {
  NodeId target;
  EdgeId parent_edge;
  double prob;
  EdgeMark mark;
};

// Subgraph of a parent Graph in which every member v has at most
// min(k, |N_out(v)|) outgoing edges. Budget-exempt nodes (the virtual source
// of the multi-seed transform) carry no such limit.
//
// Holds a pointer to the parent graph, which must outlive it.
class KSubnetwork {
 public:
  KSubnetwork(const Graph& parent, int k, std::span<const NodeId> initial_nodes = {});

  const Graph& parent() const { return *parent_; }
  int k() const { return k_; }

  bool Contains(NodeId u) const { return u < member_.size() && member_[u]; }
  // Members in the order they joined.
  const std::vector<NodeId>& members() const { return members_; }
  std::size_t num_members() const { return members_.size(); }
  std::size_t num_edges() const { return num_edges_; }

  void AddNode(NodeId u);

  void SetBudgetExempt(NodeId u);
  bool IsBudgetExempt(NodeId u) const { return exempt_[u]; }

  // min(k, |N^G_out(u)|); unbounded for exempt nodes.
  std::size_t Budget(NodeId u) const;
  std::size_t OutDegree(NodeId u) const { return out_[u].size(); }
  bool HasResidual(NodeId u) const { return OutDegree(u) < Budget(u); }
  bool IsSaturated(NodeId u) const { return !HasResidual(u); }

  std::span<const SubEdge> OutEdges(NodeId u) const { return out_[u]; }
  bool HasEdge(NodeId u, NodeId v) const;

  // Inserts parent edge (u, v); both endpoints become members.
  void InsertEdge(NodeId u, NodeId v, EdgeMark mark);

  void MarkAllNative();
  std::size_t num_inserted() const { return num_inserted_; }

  // Member edges sorted by (source, target).
  std::vector<Edge> Edges() const;

  // Edge list over the parent's labels, sorted by parent edge id.
  void Write(std::ostream& out) const;

  // True when every member respects its budget and every edge exists in the
  // parent graph with matching probability.
  bool SatisfiesBudget() const;

  friend bool operator==(const KSubnetwork& a, const KSubnetwork& b);

 private:
  const Graph* parent_;
  int k_;
  std::vector<bool> member_;
  std::vector<bool> exempt_;
  std::vector<NodeId> members_;
  std::vector<std::vector<SubEdge>> out_;
  std::size_t num_edges_ = 0;
  std::size_t num_inserted_ = 0;
};

}  // namespace imcsn

#endif  // IMCSN_KSUBNETWORK_H_
