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

#ifndef IMCSN_GRAPH_H_
#define IMCSN_GRAPH_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace imcsn {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

struct Edge {
  NodeId source = kNoNode;
  NodeId target = kNoNode;
  double prob = 0.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Immutable directed weighted graph in CSR form, both directions.
//
// Out-neighbors of every node are sorted by target id, and edge ids follow
// that (source, target) order, so EdgeId e of node u lies in
// [OutEdgeBegin(u), OutEdgeBegin(u) + OutDegree(u)).
class Graph {
 public:
  Graph() = default;

  // Validates: endpoints < num_nodes, no self-loops, no duplicate
  // (source, target) pairs, probabilities in [0, 1]. When `labels` is empty
  // each node is labeled by its decimal id.
  static Graph FromEdges(std::size_t num_nodes, std::vector<Edge> edges,
                         std::vector<std::string> labels = {});

  std::size_t num_nodes() const { return labels_.size(); }
  std::size_t num_edges() const { return targets_.size(); }

  std::size_t OutDegree(NodeId u) const {
    return out_offsets_[u + 1] - out_offsets_[u];
  }
  std::size_t InDegree(NodeId v) const {
    return in_offsets_[v + 1] - in_offsets_[v];
  }
  EdgeId OutEdgeBegin(NodeId u) const { return out_offsets_[u]; }

  std::span<const NodeId> OutNeighbors(NodeId u) const {
    return {targets_.data() + out_offsets_[u], OutDegree(u)};
  }
  std::span<const double> OutProbs(NodeId u) const {
    return {probs_.data() + out_offsets_[u], OutDegree(u)};
  }
  std::span<const NodeId> InNeighbors(NodeId v) const {
    return {in_sources_.data() + in_offsets_[v], InDegree(v)};
  }
  // Edge ids of the in-edges of v, parallel to InNeighbors(v).
  std::span<const EdgeId> InEdgeIds(NodeId v) const {
    return {in_edge_ids_.data() + in_offsets_[v], InDegree(v)};
  }

  std::optional<EdgeId> FindEdge(NodeId u, NodeId v) const;
  bool HasEdge(NodeId u, NodeId v) const { return FindEdge(u, v).has_value(); }

  NodeId EdgeSource(EdgeId e) const { return sources_[e]; }
  NodeId EdgeTarget(EdgeId e) const { return targets_[e]; }
  double EdgeProb(EdgeId e) const { return probs_[e]; }
  Edge GetEdge(EdgeId e) const { return {sources_[e], targets_[e], probs_[e]}; }
  std::vector<Edge> Edges() const;

  const std::string& label(NodeId u) const { return labels_[u]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<NodeId> FindLabel(std::string_view label) const;

  // Same topology and labels; probability of EdgeId e becomes probs[e].
  Graph WithProbabilities(std::vector<double> probs) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.labels_ == b.labels_ && a.out_offsets_ == b.out_offsets_ &&
           a.targets_ == b.targets_ && a.probs_ == b.probs_;
  }

 private:
  std::vector<std::string> labels_;
  std::unordered_map<std::string, NodeId> label_index_;
  std::vector<EdgeId> out_offsets_{0};
  std::vector<NodeId> sources_;
  std::vector<NodeId> targets_;
  std::vector<double> probs_;
  std::vector<EdgeId> in_offsets_{0};
  std::vector<NodeId> in_sources_;
  std::vector<EdgeId> in_edge_ids_;
};

// Reads "u v" (weighted = false) or "u v p" lines. Blank lines and lines
// whose first non-space character is '#' are skipped. Labels are arbitrary
// tokens; ids are assigned in ascending numeric order when every label is a
// non-negative integer and in lexicographic order otherwise, so the
// assignment does not depend on line order. Unweighted edges get prob 0.
Graph LoadEdgeList(std::istream& in, bool weighted);

// Reads undirected "u v" pairs and emits both directions of each.
Graph UndirectedToDirected(std::istream& in);

// Inspects the first data line: true when it has three columns.
bool LooksWeighted(std::string_view text);

// One "label label [prob]" line per edge in edge-id order; probabilities are
// written in shortest round-trip form.
void WriteEdgeList(std::ostream& out, const Graph& graph, bool weighted = true);

// "id label" per node.
void WriteLabelMap(std::ostream& out, const Graph& graph);

std::string FormatProb(double p);

}  // namespace imcsn

#endif  // IMCSN_GRAPH_H_
