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

#include "imcsn/prob_paths.h"

#include <algorithm>
#include <ostream>
#include <queue>

#include "imcsn/error.h"

namespace imcsn {
namespace {

struct HeapEntry {
  double prob;
  NodeId node;
  int layer;
};

// Max-heap on prob; equal keys pop the smaller node (then lower layer).
struct HeapLess {
  bool operator()(const HeapEntry& a, const HeapEntry& b) const {
    if (a.prob != b.prob) return a.prob < b.prob;
    if (a.node != b.node) return a.node > b.node;
    return a.layer > b.layer;
  }
};

using MaxHeap = std::priority_queue<HeapEntry, std::vector<HeapEntry>, HeapLess>;

void RequireMember(const KSubnetwork& subnet, NodeId source) {
  if (!subnet.Contains(source)) {
    throw Error(ErrorCode::kNotAMember,
                "source " + std::to_string(source) + " is not a member");
  }
}

}  // namespace

SmppResult ComputeSmpp(const KSubnetwork& subnet, NodeId source) {
  RequireMember(subnet, source);
  const std::size_t n = subnet.parent().num_nodes();
  SmppResult r;
  r.source = source;
  r.prob.assign(n, 0.0);
  r.parent.assign(n, kNoNode);
  r.subtree_size.assign(n, 0);
  std::vector<bool> settled(n, false);

  MaxHeap heap;
  r.prob[source] = 1.0;
  heap.push({1.0, source, 0});
  while (!heap.empty()) {
    const HeapEntry top = heap.top();
    heap.pop();
    const NodeId u = top.node;
    if (settled[u]) continue;
    settled[u] = true;
    r.order.push_back(u);
    for (const SubEdge& e : subnet.OutEdges(u)) {
      if (e.mark != EdgeMark::kNative || e.prob <= 0.0) continue;
      const NodeId w = e.target;
      if (settled[w]) continue;
      const double c = r.prob[u] * e.prob;
      if (c > r.prob[w] || (c == r.prob[w] && u < r.parent[w])) {
        r.prob[w] = c;
        r.parent[w] = u;
        heap.push({c, w, 0});
      }
    }
  }

  for (NodeId u : r.order) r.subtree_size[u] = 1;
  for (auto it = r.order.rbegin(); it != r.order.rend(); ++it) {
    if (*it != source) r.subtree_size[r.parent[*it]] += r.subtree_size[*it];
  }
  return r;
}

double RmppResult::Influence() const {
  double total = 0.0;
  for (NodeId u = 0; u < best.size(); ++u) {
    if (u != source) total += best[u];
  }
  return total;
}

RmppResult ComputeRmpp(const KSubnetwork& subnet, NodeId source) {
  RequireMember(subnet, source);
  const std::size_t n = subnet.parent().num_nodes();
  RmppResult r;
  r.source = source;
  std::vector<double> dist[2] = {std::vector<double>(n, 0.0),
                                 std::vector<double>(n, 0.0)};
  std::vector<bool> settled[2] = {std::vector<bool>(n, false),
                                  std::vector<bool>(n, false)};
  MaxHeap heap;
  dist[0][source] = 1.0;
  heap.push({1.0, source, 0});
  auto relax = [&](NodeId w, int layer, double c) {
    if (!settled[layer][w] && c > dist[layer][w]) {
      dist[layer][w] = c;
      heap.push({c, w, layer});
    }
  };
  while (!heap.empty()) {
    const HeapEntry top = heap.top();
    heap.pop();
    const NodeId u = top.node;
    const int layer = top.layer;
    if (settled[layer][u]) continue;
    settled[layer][u] = true;
    const double pu = dist[layer][u];
    for (const SubEdge& e : subnet.OutEdges(u)) {
      if (e.prob <= 0.0) continue;
      if (e.mark == EdgeMark::kNative) {
        relax(e.target, layer, pu * e.prob);
      } else if (layer == 0) {
        relax(e.target, 1, pu * e.prob);
      }
    }
  }
  r.native = std::move(dist[0]);
  r.best = std::move(dist[1]);
  for (std::size_t u = 0; u < n; ++u) {
    r.best[u] = std::max(r.best[u], r.native[u]);
  }
  return r;
}

double RmppInfluence(const KSubnetwork& subnet, NodeId source) {
  return ComputeRmpp(subnet, source).Influence();
}

double RmppMarginalGain(const KSubnetwork& subnet, NodeId source,
                        NodeId u, NodeId v, const SmppResult& smpp,
                        const RmppResult& current) {
  RequireMember(subnet, source);
  const Graph& graph = subnet.parent();
  const auto edge = graph.FindEdge(u, v);
  if (!edge || !subnet.Contains(u) || subnet.HasEdge(u, v)) {
    throw Error(ErrorCode::kInvalidArgument,
                "(" + std::to_string(u) + "," + std::to_string(v) +
                    ") is not an insertable candidate");
  }
  const double start = smpp.prob[u] * graph.EdgeProb(*edge);
  if (start <= 0.0) return 0.0;

  // If x gains nothing, no node reached through x natively can gain either:
  // current.best[x] * p already bounds what x could pass on.
  const std::size_t n = graph.num_nodes();
  std::vector<double> value(n, 0.0);
  std::vector<bool> settled(n, false);
  MaxHeap heap;
  double gain = 0.0;
  if (v != source && start > current.best[v]) {
    value[v] = start;
    heap.push({start, v, 0});
  }
  while (!heap.empty()) {
    const HeapEntry top = heap.top();
    heap.pop();
    const NodeId x = top.node;
    if (settled[x]) continue;
    settled[x] = true;
    gain += value[x] - current.best[x];
    for (const SubEdge& e : subnet.OutEdges(x)) {
      if (e.mark != EdgeMark::kNative || e.prob <= 0.0) continue;
      const NodeId w = e.target;
      const double c = value[x] * e.prob;
      if (w == source || settled[w] || c <= current.best[w] || c <= value[w]) {
        continue;
      }
      value[w] = c;
      heap.push({c, w, 0});
    }
  }
  return gain;
}

double RmppMarginalGain(const KSubnetwork& subnet, NodeId source,
                        NodeId u, NodeId v, const SmppResult& smpp) {
  return RmppMarginalGain(subnet, source, u, v, smpp,
                          ComputeRmpp(subnet, source));
}

std::optional<CriticalNeighbor> FindCriticalNeighbor(
    NodeId v, const CandidateGraph& candidates, const SmppResult& smpp) {
  std::optional<CriticalNeighbor> best;
  candidates.ForEachIn(v, [&](const CandidateEdge& e) {
    const double score = smpp.prob[e.source] * e.prob;
    if (!best || score > best->score ||
        (score == best->score && e.source < best->node)) {
      best = CriticalNeighbor{e.source, score};
    }
  });
  return best;
}

void WriteSmppTree(std::ostream& out, const Graph& labels,
                   const SmppResult& smpp) {
  for (NodeId u : smpp.order) {
    if (u == smpp.source) continue;
    out << labels.label(smpp.parent[u]) << ' ' << labels.label(u) << ' '
        << FormatProb(smpp.prob[u]) << '\n';
  }
}

}  // namespace imcsn
