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

#include "imcsn/augment.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <optional>
#include <ostream>
#include <unordered_set>

#include "imcsn/error.h"

namespace imcsn {
namespace {

using Clock = std::chrono::steady_clock;

double MillisSince(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

void Record(InsertionLog* log, InsertionEvent::Kind kind, NodeId u, NodeId v,
            int round) {
  if (log != nullptr) log->push_back({kind, u, v, round});
}

// Inserts (u, v) and drains u's out-candidates if u just saturated.
std::size_t CommitInsertion(KSubnetwork& subnet, CandidateGraph& candidates,
                            NodeId u, NodeId v, InsertionLog* log, int round) {
  subnet.InsertEdge(u, v, EdgeMark::kInserted);
  candidates.Remove(u, v);
  Record(log, InsertionEvent::Kind::kInsert, u, v, round);
  if (!subnet.IsSaturated(u)) return 0;
  const auto dropped = candidates.RemoveAllOut(u);
  for (const CandidateEdge& e : dropped) {
    Record(log, InsertionEvent::Kind::kDelete, e.source, e.target, round);
  }
  return dropped.size();
}

std::vector<bool> ForbiddenMask(std::size_t n, std::span<const NodeId> nodes) {
  return MakeNodeMask(n, nodes);
}

}  // namespace

std::vector<NodeId> NonMemberTargets(const Graph& graph, const KSubnetwork& subnet,
                                     const CandidateGraph& candidates) {
  std::vector<NodeId> out;
  for (NodeId v : candidates.Targets()) {
    if (!subnet.Contains(v)) out.push_back(v);
  }
  std::stable_sort(out.begin(), out.end(), [&](NodeId a, NodeId b) {
    return graph.OutDegree(a) > graph.OutDegree(b);
  });
  return out;
}

std::vector<NodeId> RankForInsertion(const Graph& graph, const KSubnetwork& subnet,
                                     const CandidateGraph& candidates,
                                     const SmppResult& smpp) {
  std::vector<NodeId> reachable;
  std::vector<NodeId> rest;
  for (NodeId u : subnet.members()) {
    if (u == smpp.source || subnet.IsBudgetExempt(u)) continue;
    (smpp.Reachable(u) ? reachable : rest).push_back(u);
  }
  std::sort(reachable.begin(), reachable.end(), [&](NodeId a, NodeId b) {
    if (smpp.subtree_size[a] != smpp.subtree_size[b]) {
      return smpp.subtree_size[a] > smpp.subtree_size[b];
    }
    if (smpp.prob[a] != smpp.prob[b]) return smpp.prob[a] > smpp.prob[b];
    return a < b;
  });
  for (NodeId v : candidates.Targets()) {
    if (!subnet.Contains(v)) rest.push_back(v);
  }
  std::sort(rest.begin(), rest.end(), [&](NodeId a, NodeId b) {
    if (graph.OutDegree(a) != graph.OutDegree(b)) {
      return graph.OutDegree(a) > graph.OutDegree(b);
    }
    return a < b;
  });
  reachable.insert(reachable.end(), rest.begin(), rest.end());
  return reachable;
}

PassStats PracticalEdgeInsertion(const Graph& graph, KSubnetwork& subnet,
                                 CandidateGraph& candidates, NodeId source,
                                 const PeiOptions& options, InsertionLog* log) {
  PassStats stats;
  const SmppResult smpp = ComputeSmpp(subnet, source);
  const std::vector<NodeId> ranking = RankForInsertion(graph, subnet, candidates, smpp);
  for (NodeId v : ranking) {
    std::optional<CriticalNeighbor> critical;
    // Sources saturate only through CommitInsertion, which drains them, so
    // this loop runs once unless a caller handed in a stale pool.
    while ((critical = FindCriticalNeighbor(v, candidates, smpp))) {
      if (subnet.HasResidual(critical->node)) break;
      candidates.RemoveAllOut(critical->node);
    }
    if (!critical) continue;
    if (options.skip_zero_score && critical->score <= 0.0) continue;
    stats.deleted += CommitInsertion(subnet, candidates, critical->node, v, log, 0);
    ++stats.inserted;
  }
  subnet.MarkAllNative();
  stats.rounds = stats.inserted > 0 ? 1 : 0;
  return stats;
}

std::vector<NodeId> UpdateCandidateGraph(const Graph& graph,
                                         const KSubnetwork& subnet,
                                         CandidateGraph& candidates,
                                         const std::vector<bool>& forbidden_targets,
                                         std::span<const NodeId> prev_new_nodes) {
  std::vector<NodeId> frontier;
  std::unordered_set<NodeId> seen;
  for (NodeId u : prev_new_nodes) {
    if (!subnet.Contains(u) || !subnet.HasResidual(u)) continue;
    const auto targets = graph.OutNeighbors(u);
    const auto probs = graph.OutProbs(u);
    for (std::size_t i = 0; i < targets.size(); ++i) {
      const NodeId v = targets[i];
      if (forbidden_targets[v] || subnet.HasEdge(u, v)) continue;
      candidates.Add(u, v, probs[i]);
      if (!subnet.Contains(v) && seen.insert(v).second) frontier.push_back(v);
    }
  }
  return frontier;
}

PassStats FillUpRecommendation(const Graph& graph, KSubnetwork& subnet,
                               CandidateGraph& candidates, NodeId source,
                               InsertionLog* log) {
  PassStats stats;
  if (candidates.empty()) return stats;
  const SmppResult smpp = ComputeSmpp(subnet, source);
  const std::vector<NodeId> ranking = RankForInsertion(graph, subnet, candidates, smpp);

  struct Entry {
    NodeId source;
    double score;
  };
  std::vector<std::vector<Entry>> lists(graph.num_nodes());
  std::vector<std::size_t> cursor(graph.num_nodes(), 0);
  std::vector<NodeId> active;
  for (NodeId v : ranking) {
    if (candidates.InDegree(v) == 0) continue;
    auto& list = lists[v];
    candidates.ForEachIn(v, [&](const CandidateEdge& e) {
      list.push_back({e.source, smpp.prob[e.source] * e.prob});
    });
    std::sort(list.begin(), list.end(), [](const Entry& a, const Entry& b) {
      return a.score != b.score ? a.score > b.score : a.source < b.source;
    });
    active.push_back(v);
  }

  int round = 0;
  while (!active.empty()) {
    ++round;
    std::vector<NodeId> next;
    for (NodeId v : active) {
      auto& list = lists[v];
      for (std::size_t i = cursor[v]; i < list.size(); ++i) {
        const NodeId u = list[i].source;
        if (!candidates.Contains(u, v)) continue;
        if (i + 1 != list.size()) next.push_back(v);
        cursor[v] = i + 1;
        stats.deleted += CommitInsertion(subnet, candidates, u, v, log, round);
        ++stats.inserted;
        break;
      }
    }
    active = std::move(next);
  }
  subnet.MarkAllNative();
  stats.rounds = static_cast<std::size_t>(round);
  return stats;
}

std::vector<SketchInsertion> EdgeInsertionSketch(const Graph& graph,
                                                 KSubnetwork& subnet, NodeId seed,
                                                 const std::vector<bool>& forbidden_targets,
                                                 bool mark_native) {
  std::vector<SketchInsertion> inserted;
  CandidateGraph candidates = BuildCandidateGraph(graph, subnet, forbidden_targets);
  const SmppResult smpp = ComputeSmpp(subnet, seed);
  std::vector<std::optional<CriticalNeighbor>> critical(graph.num_nodes());
  for (NodeId v : candidates.Targets()) {
    critical[v] = FindCriticalNeighbor(v, candidates, smpp);
  }

  while (!candidates.empty()) {
    const RmppResult current = ComputeRmpp(subnet, seed);
    NodeId best_v = kNoNode;
    double best_gain = -1.0;
    for (NodeId v : candidates.Targets()) {
      const double gain =
          RmppMarginalGain(subnet, seed, critical[v]->node, v, smpp, current);
      if (gain > best_gain) {
        best_gain = gain;
        best_v = v;
      }
    }
    const NodeId u = critical[best_v]->node;
    candidates.RemoveAllIn(best_v);
    critical[best_v].reset();
    subnet.InsertEdge(u, best_v, EdgeMark::kInserted);
    inserted.push_back({u, best_v, best_gain});
    if (subnet.IsSaturated(u)) {
      candidates.RemoveAllOut(u);
      for (NodeId v = 0; v < graph.num_nodes(); ++v) {
        if (critical[v] && critical[v]->node == u) {
          critical[v] = FindCriticalNeighbor(v, candidates, smpp);
        }
      }
    }
  }
  if (mark_native) subnet.MarkAllNative();
  return inserted;
}

KSubnetwork SubnetworkAugmentationSketch(const Graph& graph, NodeId seed, int k) {
  const NodeId seeds[] = {seed};
  KSubnetwork subnet(graph, k, seeds);
  const std::vector<bool> forbidden = ForbiddenMask(graph.num_nodes(), seeds);
  while (!EdgeInsertionSketch(graph, subnet, seed, forbidden).empty()) {
  }
  return subnet;
}

bool CriticalSetsFitBudgets(const KSubnetwork& subnet,
                            const CandidateGraph& candidates,
                            const SmppResult& smpp) {
  std::vector<std::size_t> load(subnet.parent().num_nodes(), 0);
  for (NodeId v : candidates.Targets()) {
    const auto critical = FindCriticalNeighbor(v, candidates, smpp);
    ++load[critical->node];
  }
  for (NodeId x = 0; x < load.size(); ++x) {
    if (load[x] > 0 && load[x] > subnet.Budget(x) - subnet.OutDegree(x)) {
      return false;
    }
  }
  return true;
}

std::vector<Edge> InsertAllCriticalEdges(KSubnetwork& subnet,
                                         const CandidateGraph& candidates,
                                         const SmppResult& smpp) {
  std::vector<Edge> inserted;
  for (NodeId v : candidates.Targets()) {
    const auto critical = FindCriticalNeighbor(v, candidates, smpp);
    const auto edge = subnet.parent().FindEdge(critical->node, v);
    subnet.InsertEdge(critical->node, v, EdgeMark::kInserted);
    inserted.push_back(subnet.parent().GetEdge(*edge));
  }
  return inserted;
}

VirtualSeedGraph AddVirtualSource(const Graph& graph, std::span<const NodeId> seeds) {
  if (seeds.empty()) throw Error(ErrorCode::kInvalidArgument, "empty seed set");
  const std::vector<bool> mask = MakeNodeMask(graph.num_nodes(), seeds);
  if (static_cast<std::size_t>(std::count(mask.begin(), mask.end(), true)) !=
      seeds.size()) {
    throw Error(ErrorCode::kInvalidArgument, "duplicate seed");
  }
  VirtualSeedGraph vg;
  vg.virtual_node = static_cast<NodeId>(graph.num_nodes());
  vg.seeds.assign(seeds.begin(), seeds.end());
  std::vector<Edge> edges = graph.Edges();
  for (NodeId s : seeds) edges.push_back({vg.virtual_node, s, 1.0});
  std::vector<std::string> labels = graph.labels();
  std::string label = "__virtual__";
  while (graph.FindLabel(label)) label += '_';
  labels.push_back(label);
  vg.graph = Graph::FromEdges(graph.num_nodes() + 1, std::move(edges), std::move(labels));
  return vg;
}

KSubnetwork InitialVirtualSubnetwork(const VirtualSeedGraph& vg, int k) {
  const NodeId x[] = {vg.virtual_node};
  KSubnetwork subnet(vg.graph, k, x);
  subnet.SetBudgetExempt(vg.virtual_node);
  for (NodeId s : vg.seeds) subnet.InsertEdge(vg.virtual_node, s, EdgeMark::kNative);
  return subnet;
}

KSubnetwork StripVirtualSource(const VirtualSeedGraph& vg, const KSubnetwork& subnet,
                               const Graph& original) {
  std::vector<NodeId> nodes;
  for (NodeId u : subnet.members()) {
    if (u != vg.virtual_node) nodes.push_back(u);
  }
  KSubnetwork out(original, subnet.k(), nodes);
  for (const Edge& e : subnet.Edges()) {
    if (e.source == vg.virtual_node) continue;
    out.InsertEdge(e.source, e.target, EdgeMark::kNative);
  }
  return out;
}

NodeId RelevantSeed(const SmppResult& from_virtual, NodeId u) {
  if (u >= from_virtual.prob.size() || !from_virtual.Reachable(u) ||
      u == from_virtual.source) {
    throw Error(ErrorCode::kUnreachable,
                "node " + std::to_string(u) + " is not reachable from the virtual source");
  }
  while (from_virtual.parent[u] != from_virtual.source) u = from_virtual.parent[u];
  return u;
}

namespace {

struct ExpansionState {
  KSubnetwork& subnet;
  CandidateGraph& candidates;
  const std::vector<bool>& forbidden;
  NodeId source;
  NodeId excluded;  // virtual node or kNoNode
};

IterationRecord MakeRecord(const ExpansionState& st, int iteration, double delta,
                           Clock::time_point start) {
  std::size_t nodes = st.subnet.num_members();
  std::size_t edges = st.subnet.num_edges();
  if (st.excluded != kNoNode) {
    if (st.subnet.Contains(st.excluded)) --nodes;
    edges -= st.subnet.OutDegree(st.excluded);
  }
  return {iteration, delta, nodes, edges, MillisSince(start)};
}

// One expansion iteration: PEI over the pool, then the pool update for the
// nodes that could have joined. Returns the new RMPP influence.
double ExpansionStep(const Graph& graph, ExpansionState& st) {
  const std::vector<NodeId> could_join =
      NonMemberTargets(graph, st.subnet, st.candidates);
  PracticalEdgeInsertion(graph, st.subnet, st.candidates, st.source);
  const double delta = RmppInfluence(st.subnet, st.source);
  UpdateCandidateGraph(graph, st.subnet, st.candidates, st.forbidden, could_join);
  return delta;
}

}  // namespace

PsnaResult Psna(const Graph& graph, std::span<const NodeId> seeds, int k,
                const PsnaOptions& options) {
  if (!(options.epsilon > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "epsilon must be positive");
  }
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "k must be at least 1");
  if (seeds.empty()) throw Error(ErrorCode::kInvalidArgument, "empty seed set");
  if (options.max_iterations < 1) {
    throw Error(ErrorCode::kInvalidArgument, "max_iterations must be at least 1");
  }
  const auto start = Clock::now();

  std::optional<VirtualSeedGraph> vg;
  const Graph* work = &graph;
  NodeId source = seeds[0];
  std::vector<NodeId> forbidden_nodes(seeds.begin(), seeds.end());
  if (seeds.size() > 1) {
    vg = AddVirtualSource(graph, seeds);
    work = &vg->graph;
    source = vg->virtual_node;
    forbidden_nodes.push_back(source);
  }
  const std::vector<bool> forbidden = MakeNodeMask(work->num_nodes(), forbidden_nodes);
  KSubnetwork subnet = vg ? InitialVirtualSubnetwork(*vg, k)
                          : KSubnetwork(graph, k, std::span<const NodeId>(seeds));
  CandidateGraph candidates = BuildCandidateGraph(*work, subnet, forbidden);

  ExpansionState st{subnet, candidates, forbidden, source,
                    vg ? vg->virtual_node : kNoNode};
  ConvergenceTrace trace;
  trace.epsilon = options.epsilon;
  double pre = 1.0;
  for (int it = 1; it <= options.max_iterations; ++it) {
    if (candidates.empty()) break;
    const double delta = ExpansionStep(*work, st);
    trace.iterations.push_back(MakeRecord(st, it, delta, start));
    if (pre <= 0.0 || (delta - pre) / pre <= options.epsilon) {
      trace.converged = true;
      break;
    }
    pre = delta;
  }
  trace.num_iterations = static_cast<int>(trace.iterations.size());
  const double expansion_ms = MillisSince(start);

  KSubnetwork expansion = subnet;
  if (options.diagnostic_passes > 0) {
    KSubnetwork probe = subnet;
    CandidateGraph probe_pool = candidates;
    ExpansionState pst{probe, probe_pool, forbidden, source, st.excluded};
    for (int j = 1; j <= options.diagnostic_passes && !probe_pool.empty(); ++j) {
      const double delta = ExpansionStep(*work, pst);
      trace.diagnostic.push_back(
          MakeRecord(pst, trace.num_iterations + j, delta, start));
    }
  }

  PassStats filling;
  if (options.run_filling) {
    filling = FillUpRecommendation(*work, subnet, candidates, source);
  }

  PsnaResult result{vg ? StripVirtualSource(*vg, subnet, graph) : std::move(subnet),
                    vg ? StripVirtualSource(*vg, expansion, graph) : std::move(expansion),
                    std::move(trace), filling, expansion_ms, 0.0};
  result.total_ms = MillisSince(start);
  return result;
}

void WriteTraceCsv(std::ostream& out, const ConvergenceTrace& trace) {
  out << "iteration,rmpp_influence,nodes,edges,elapsed_ms\n";
  auto row = [&](const IterationRecord& r) {
    out << r.iteration << ',' << FormatProb(r.rmpp_influence) << ',' << r.nodes << ','
        << r.edges << ',' << r.elapsed_ms << '\n';
  };
  for (const auto& r : trace.iterations) row(r);
  for (const auto& r : trace.diagnostic) row(r);
}

}  // namespace imcsn
