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

// Maximum-probability paths over a KSubnetwork.
//
// SMPP: best path product using native edges only. RMPP: best path product
// using at most one inserted edge. The RMPP influence of a source is the sum
// of RMPP probabilities to every other member; it excludes the source
// itself, unlike IC influence, which counts it.
//
// Path products are non-increasing along a path, so a max-heap Dijkstra keyed
// directly on the product settles nodes correctly. Zero-probability edges
// never improve a path and are not relaxed.

#ifndef IMCSN_PROB_PATHS_H_
#define IMCSN_PROB_PATHS_H_

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

#include "imcsn/candidate_graph.h"
#include "imcsn/graph.h"
#include "imcsn/ksubnetwork.h"

namespace imcsn {

struct SmppResult {
  NodeId source = kNoNode;
  // prob[u] = pr^S(source, u); 0 when unreachable, 1 for the source.
  std::vector<double> prob;
  // Predecessor on the SMPP; kNoNode for the source and unreachable nodes.
  std::vector<NodeId> parent;
  // Nodes in the SMPP tree rooted at u, u included; 0 when unreachable.
  std::vector<std::size_t> subtree_size;
  // Reachable nodes in settle order, source first. Parents precede children.
  std::vector<NodeId> order;

  bool Reachable(NodeId u) const { return prob[u] > 0.0; }
};

// Ties between equal-probability predecessors go to the smaller id among
// those relaxed before the node is settled; equal heap keys pop the smaller
// node id first.
SmppResult ComputeSmpp(const KSubnetwork& subnet, NodeId source);

struct RmppResult {
  NodeId source = kNoNode;
  // Best probability with no inserted edge (equals the SMPP values).
  std::vector<double> native;
  // Best probability with at most one inserted edge; >= native.
  std::vector<double> best;

  // sum over u != source of best[u], accumulated in node-id order.
  double Influence() const;
};

// Two-layer Dijkstra over states (node, inserted edge used?).
RmppResult ComputeRmpp(const KSubnetwork& subnet, NodeId source);
double RmppInfluence(const KSubnetwork& subnet, NodeId source);

// delta(subnet + {(u, v) inserted}) - delta(subnet) given the RMPP state of
// subnet. Only paths that use (u, v) as their single inserted edge can
// improve, so this is a Dijkstra from v over native edges seeded with
// smpp.prob[u] * p(u, v), pruned wherever it fails to beat current.best.
double RmppMarginalGain(const KSubnetwork& subnet, NodeId source,
                        NodeId u, NodeId v, const SmppResult& smpp,
                        const RmppResult& current);
double RmppMarginalGain(const KSubnetwork& subnet, NodeId source,
                        NodeId u, NodeId v, const SmppResult& smpp);

struct CriticalNeighbor {
  NodeId node;
  double score;  // pr^S(s, node) * p(node, v)
};

// argmax over live in-candidates u of v of smpp.prob[u] * p(u, v); ties go
// to the smaller u. nullopt when v has no in-candidates.
std::optional<CriticalNeighbor> FindCriticalNeighbor(NodeId v,
                                                     const CandidateGraph& candidates,
                                                     const SmppResult& smpp);

// "parent child prob" per tree edge, prob being pr^S(source, child).
void WriteSmppTree(std::ostream& out, const Graph& labels, const SmppResult& smpp);

}  // namespace imcsn

#endif  // IMCSN_PROB_PATHS_H_
