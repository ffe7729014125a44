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

#include "imcsn/ksubnetwork.h"

#include <algorithm>
#include <limits>
#include <ostream>

#include "imcsn/error.h"

namespace imcsn {

KSubnetwork::KSubnetwork(const Graph& parent, int k,
                         std::span<const NodeId> initial_nodes)
    : parent_(&parent),
      k_(k),
      member_(parent.num_nodes(), false),
      exempt_(parent.num_nodes(), false),
      out_(parent.num_nodes()) {
  if (k < 1) {
    throw Error(ErrorCode::kInvalidArgument, "k must be >= 1");
  }
  for (NodeId u : initial_nodes) AddNode(u);
}

void KSubnetwork::AddNode(NodeId u) {
  if (u >= member_.size()) {
    throw Error(ErrorCode::kUnknownNode, "node id " + std::to_string(u) +
                                             " not in parent graph");
  }
  if (!member_[u]) {
    member_[u] = true;
    members_.push_back(u);
  }
}

void KSubnetwork::SetBudgetExempt(NodeId u) {
  if (u >= exempt_.size()) {
    throw Error(ErrorCode::kUnknownNode, "node id " + std::to_string(u));
  }
  exempt_[u] = true;
}

std::size_t KSubnetwork::Budget(NodeId u) const {
  if (exempt_[u]) return std::numeric_limits<std::size_t>::max();
  return std::min<std::size_t>(static_cast<std::size_t>(k_),
                               parent_->OutDegree(u));
}

bool KSubnetwork::HasEdge(NodeId u, NodeId v) const {
  if (u >= out_.size()) return false;
  return std::any_of(out_[u].begin(), out_[u].end(),
                     [v](const SubEdge& e) { return e.target == v; });
}

void KSubnetwork::InsertEdge(NodeId u, NodeId v, EdgeMark mark) {
  const auto edge = parent_->FindEdge(u, v);
  if (!edge) {
    throw Error(ErrorCode::kEdgeNotInParent,
                "edge (" + std::to_string(u) + "," + std::to_string(v) +
                    ") not in parent graph");
  }
  if (HasEdge(u, v)) {
    throw Error(ErrorCode::kDuplicateInsert,
                "edge (" + std::to_string(u) + "," + std::to_string(v) +
                    ") already present");
  }
  if (!HasResidual(u)) {
    throw Error(ErrorCode::kBudgetViolation,
                "node " + std::to_string(u) + " already has " +
                    std::to_string(OutDegree(u)) + " out-edges");
  }
  AddNode(u);
  AddNode(v);
  out_[u].push_back({v, *edge, parent_->EdgeProb(*edge), mark});
  ++num_edges_;
  if (mark == EdgeMark::kInserted) ++num_inserted_;
}

void KSubnetwork::MarkAllNative() {
  if (num_inserted_ == 0) return;
  for (NodeId u : members_) {
    for (SubEdge& e : out_[u]) e.mark = EdgeMark::kNative;
  }
  num_inserted_ = 0;
}

std::vector<Edge> KSubnetwork::Edges() const {
  std::vector<Edge> edges;
  edges.reserve(num_edges_);
  for (NodeId u : members_) {
    for (const SubEdge& e : out_[u]) edges.push_back({u, e.target, e.prob});
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return a.source != b.source ? a.source < b.source : a.target < b.target;
  });
  return edges;
}

void KSubnetwork::Write(std::ostream& out) const {
  for (const Edge& e : Edges()) {
    out << parent_->label(e.source) << ' ' << parent_->label(e.target) << ' '
        << FormatProb(e.prob) << '\n';
  }
}

bool KSubnetwork::SatisfiesBudget() const {
  for (NodeId u : members_) {
    if (OutDegree(u) > Budget(u)) return false;
    for (const SubEdge& e : out_[u]) {
      const auto pe = parent_->FindEdge(u, e.target);
      if (!pe || *pe != e.parent_edge || parent_->EdgeProb(*pe) != e.prob) {
        return false;
      }
      if (!Contains(e.target)) return false;
    }
  }
  return true;
}

bool operator==(const KSubnetwork& a, const KSubnetwork& b) {
  if (a.parent_ != b.parent_ || a.k_ != b.k_ || a.member_ != b.member_) {
    return false;
  }
  return a.Edges() == b.Edges();
}

}  // namespace imcsn
