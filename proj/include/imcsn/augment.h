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

// Subnetwork augmentation: grows a k-subnetwork around the seeds by inserting
// parent-graph edges chosen through the RMPP influence lower bound.
//
// Building blocks, bottom-up:
//   PracticalEdgeInsertion  one pass; every ranked node receives at most one
//                           in-edge, its critical edge.
//   UpdateCandidateGraph    extends the candidate pool with the out-edges of
//                           nodes that just joined.
//   FillUpRecommendation    replays insertion passes with a frozen ranking
//                           until the pool is drained.
//   Psna                    expansion stage (passes until the relative RMPP
//                           gain drops to epsilon) + one fill-up.
// EdgeInsertionSketch / SubnetworkAugmentationSketch are the exact greedy
// reference used for small-instance comparisons.
//
// Ranking rule shared by insertion and fill-up: members other than the
// source that are reachable in the SMPP tree, by subtree size (desc), then
// SMPP probability (desc), then id; followed by unreachable members and
// non-member candidate targets, by out-degree in the parent graph (desc),
// then id.

#ifndef IMCSN_AUGMENT_H_
#define IMCSN_AUGMENT_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "imcsn/candidate_graph.h"
#include "imcsn/graph.h"
#include "imcsn/ksubnetwork.h"
#include "imcsn/prob_paths.h"

namespace imcsn {

struct InsertionEvent {
  enum class Kind { kInsert, kDelete };
  Kind kind;
  NodeId source;
  NodeId target;
  int round = 0;  // fill-up round (1-based); 0 for single passes

  friend bool operator==(const InsertionEvent&, const InsertionEvent&) = default;
};

using InsertionLog = std::vector<InsertionEvent>;

std::vector<NodeId> RankForInsertion(const Graph& graph, const KSubnetwork& subnet,
                                     const CandidateGraph& candidates,
                                     const SmppResult& smpp);

// Candidate-pool targets that are not yet members, in RankForInsertion's
// out-degree order.
std::vector<NodeId> NonMemberTargets(const Graph& graph, const KSubnetwork& subnet,
                                     const CandidateGraph& candidates);

struct PeiOptions {
  // Expansion skips critical edges whose score is 0: they add no RMPP gain.
  bool skip_zero_score = true;
};

struct PassStats {
  std::size_t inserted = 0;
  std::size_t deleted = 0;
  std::size_t rounds = 0;
};

// One practical insertion pass. Ranking and SMPP scores are computed once at
// entry from the native edges; all inserted edges are marked native on exit.
PassStats PracticalEdgeInsertion(const Graph& graph, KSubnetwork& subnet,
                                 CandidateGraph& candidates, NodeId source,
                                 const PeiOptions& options = {},
                                 InsertionLog* log = nullptr);

// For each u in prev_new_nodes that is now a member with residual budget,
// adds every (u, v) in E with (u, v) not in subnet and v not forbidden.
// Returns the non-member targets of the added edges (each once, in discovery
// order).
std::vector<NodeId> UpdateCandidateGraph(const Graph& graph,
                                         const KSubnetwork& subnet,
                                         CandidateGraph& candidates,
                                         const std::vector<bool>& forbidden_targets,
                                         std::span<const NodeId> prev_new_nodes);

// Drains the candidate pool. Each ranked node's in-candidates are sorted once
// by SMPP score (desc, then source id); a per-node cursor skips entries that
// were consumed or deleted. Zero-score candidates are inserted too.
PassStats FillUpRecommendation(const Graph& graph, KSubnetwork& subnet,
                               CandidateGraph& candidates, NodeId source,
                               InsertionLog* log = nullptr);

struct SketchInsertion {
  NodeId source;
  NodeId target;
  double gain;
};

// Exact greedy: repeatedly inserts the critical edge with the largest RMPP
// marginal gain (ties to the smaller target), settling its target, until no
// target has candidates. Inserted edges stay marked inserted when
// mark_native is false.
std::vector<SketchInsertion> EdgeInsertionSketch(const Graph& graph,
                                                 KSubnetwork& subnet, NodeId seed,
                                                 const std::vector<bool>& forbidden_targets,
                                                 bool mark_native = true);

// Repeats EdgeInsertionSketch from {seed} until a call inserts nothing.
KSubnetwork SubnetworkAugmentationSketch(const Graph& graph, NodeId seed, int k);

// Cr(x) = targets whose critical neighbor is x. True when every x can take
// all of Cr(x) within its residual budget.
bool CriticalSetsFitBudgets(const KSubnetwork& subnet,
                            const CandidateGraph& candidates,
                            const SmppResult& smpp);

// Inserts (u*_v, v) for every candidate target v, marked inserted.
std::vector<Edge> InsertAllCriticalEdges(KSubnetwork& subnet,
                                         const CandidateGraph& candidates,
                                         const SmppResult& smpp);

// Original graph plus a virtual node with probability-1 edges to each seed.
struct VirtualSeedGraph {
  Graph graph;
  NodeId virtual_node = kNoNode;
  std::vector<NodeId> seeds;
};

VirtualSeedGraph AddVirtualSource(const Graph& graph, std::span<const NodeId> seeds);

// Initial subnetwork on the augmented graph: the virtual node (budget
// exempt), every seed, and the seed edges marked native.
KSubnetwork InitialVirtualSubnetwork(const VirtualSeedGraph& vg, int k);

// Drops the virtual node and its edges; result is over `original`.
KSubnetwork StripVirtualSource(const VirtualSeedGraph& vg, const KSubnetwork& subnet,
                               const Graph& original);

// Second node on the SMPP from the virtual node to u.
NodeId RelevantSeed(const SmppResult& from_virtual, NodeId u);

struct PsnaOptions {
  double epsilon = 1e-4;
  int max_iterations = 50;
  bool run_filling = true;
  // Extra expansion passes recorded after the convergence point; they do
  // not change the returned subnetwork. Diagnostic only.
  int diagnostic_passes = 0;
};

struct IterationRecord {
  int iteration;
  double rmpp_influence;
  std::size_t nodes;
  std::size_t edges;
  double elapsed_ms;
};

struct ConvergenceTrace {
  std::vector<IterationRecord> iterations;
  int num_iterations = 0;
  bool converged = false;
  double epsilon = 0.0;
  // Records from diagnostic_passes, after the convergence point.
  std::vector<IterationRecord> diagnostic;
};

struct PsnaResult {
  KSubnetwork subnet;
  // Output of the expansion stage alone (input to the boosted baselines).
  KSubnetwork expansion;
  ConvergenceTrace trace;
  PassStats filling;
  double expansion_ms = 0.0;
  double total_ms = 0.0;
};

// Single seed: runs directly from the seed. Several seeds: runs from a
// virtual source over AddVirtualSource(graph, seeds) and strips it.
PsnaResult Psna(const Graph& graph, std::span<const NodeId> seeds, int k,
                const PsnaOptions& options = {});

void WriteTraceCsv(std::ostream& out, const ConvergenceTrace& trace);

}  // namespace imcsn

#endif  // IMCSN_AUGMENT_H_
