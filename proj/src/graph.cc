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

#include "imcsn/graph.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "imcsn/error.h"

namespace imcsn {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMalformedLine: return "malformed line";
    case ErrorCode::kSelfLoop: return "self-loop";
    case ErrorCode::kDuplicateEdge: return "duplicate edge";
    case ErrorCode::kProbabilityOutOfRange: return "probability out of range";
    case ErrorCode::kInvalidArgument: return "invalid argument";
    case ErrorCode::kUnknownNode: return "unknown node";
    case ErrorCode::kBudgetViolation: return "budget violation";
    case ErrorCode::kEdgeNotInParent: return "edge not in parent graph";
    case ErrorCode::kDuplicateInsert: return "duplicate insert";
    case ErrorCode::kNotAMember: return "node is not a member";
    case ErrorCode::kDegenerateGraph: return "degenerate graph";
    case ErrorCode::kConstantIntimacy: return "constant intimacy";
    case ErrorCode::kUnreachable: return "unreachable node";
    case ErrorCode::kPoolTooSmall: return "seed pool too small";
    case ErrorCode::kIo: return "i/o error";
  }
  return "unknown error";
}

namespace {

std::string EdgeText(const std::string& u, const std::string& v) {
  return "(" + u + "," + v + ")";
}

}  // namespace

Graph Graph::FromEdges(std::size_t num_nodes, std::vector<Edge> edges,
                       std::vector<std::string> labels) {
  if (num_nodes >= kNoNode) {
    throw Error(ErrorCode::kInvalidArgument, "too many nodes");
  }
  if (labels.empty()) {
    labels.reserve(num_nodes);
    for (std::size_t i = 0; i < num_nodes; ++i) {
      labels.push_back(std::to_string(i));
    }
  }
  if (labels.size() != num_nodes) {
    throw Error(ErrorCode::kInvalidArgument, "label count != node count");
  }

  Graph g;
  g.labels_ = std::move(labels);
  g.label_index_.reserve(num_nodes);
  for (NodeId u = 0; u < num_nodes; ++u) {
    if (!g.label_index_.emplace(g.labels_[u], u).second) {
      throw Error(ErrorCode::kInvalidArgument,
                  "duplicate node label " + g.labels_[u]);
    }
  }

  for (const Edge& e : edges) {
    if (e.source >= num_nodes || e.target >= num_nodes) {
      throw Error(ErrorCode::kUnknownNode, "edge endpoint out of range");
    }
    if (e.source == e.target) {
      throw Error(ErrorCode::kSelfLoop,
                  "self-loop at " + g.labels_[e.source]);
    }
    if (!(e.prob >= 0.0 && e.prob <= 1.0)) {
      throw Error(ErrorCode::kProbabilityOutOfRange,
                  "probability " + FormatProb(e.prob) + " on " +
                      EdgeText(g.labels_[e.source], g.labels_[e.target]));
    }
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return a.source != b.source ? a.source < b.source : a.target < b.target;
  });
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (edges[i].source == edges[i - 1].source &&
        edges[i].target == edges[i - 1].target) {
      throw Error(ErrorCode::kDuplicateEdge,
                  "duplicate edge " + EdgeText(g.labels_[edges[i].source],
                                               g.labels_[edges[i].target]));
    }
  }

  const std::size_t m = edges.size();
  g.out_offsets_.assign(num_nodes + 1, 0);
  g.in_offsets_.assign(num_nodes + 1, 0);
  g.sources_.resize(m);
  g.targets_.resize(m);
  g.probs_.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    g.sources_[i] = edges[i].source;
    g.targets_[i] = edges[i].target;
    g.probs_[i] = edges[i].prob;
    ++g.out_offsets_[edges[i].source + 1];
    ++g.in_offsets_[edges[i].target + 1];
  }
  std::partial_sum(g.out_offsets_.begin(), g.out_offsets_.end(),
                   g.out_offsets_.begin());
  std::partial_sum(g.in_offsets_.begin(), g.in_offsets_.end(),
                   g.in_offsets_.begin());

  // Filling in-lists in edge-id order keeps each list sorted by source.
  g.in_sources_.resize(m);
  g.in_edge_ids_.resize(m);
  std::vector<EdgeId> cursor(g.in_offsets_.begin(), g.in_offsets_.end() - 1);
  for (EdgeId e = 0; e < m; ++e) {
    const EdgeId slot = cursor[g.targets_[e]]++;
    g.in_sources_[slot] = g.sources_[e];
    g.in_edge_ids_[slot] = e;
  }
  return g;
}

std::optional<EdgeId> Graph::FindEdge(NodeId u, NodeId v) const {
  if (u >= num_nodes() || v >= num_nodes()) return std::nullopt;
  const auto first = targets_.begin() + out_offsets_[u];
  const auto last = targets_.begin() + out_offsets_[u + 1];
  const auto it = std::lower_bound(first, last, v);
  if (it == last || *it != v) return std::nullopt;
  return static_cast<EdgeId>(it - targets_.begin());
}

std::vector<Edge> Graph::Edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (EdgeId e = 0; e < num_edges(); ++e) out.push_back(GetEdge(e));
  return out;
}

std::optional<NodeId> Graph::FindLabel(std::string_view label) const {
  const auto it = label_index_.find(std::string(label));
  if (it == label_index_.end()) return std::nullopt;
  return it->second;
}

Graph Graph::WithProbabilities(std::vector<double> probs) const {
  if (probs.size() != num_edges()) {
    throw Error(ErrorCode::kInvalidArgument, "probability count mismatch");
  }
  for (double p : probs) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw Error(ErrorCode::kProbabilityOutOfRange,
                  "probability " + FormatProb(p));
    }
  }
  Graph g = *this;
  g.probs_ = std::move(probs);
  return g;
}

namespace {

struct RawEdge {
  std::string source;
  std::string target;
  double prob;
  int line;
};

std::vector<std::string_view> Tokenize(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

bool IsComment(const std::vector<std::string_view>& tokens) {
  return tokens.empty() || tokens.front().front() == '#';
}

bool ParseUnsigned(std::string_view s, std::uint64_t* out) {
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), *out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

std::vector<RawEdge> ReadRawEdges(std::istream& in, bool weighted) {
  std::vector<RawEdge> raw;
  std::string line;
  int line_no = 0;
  const std::size_t expected = weighted ? 3 : 2;
  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = Tokenize(line);
    if (IsComment(tokens)) continue;
    if (tokens.size() != expected) {
      throw ParseError(ErrorCode::kMalformedLine, line_no,
                       "expected " + std::to_string(expected) +
                           " columns, got " + std::to_string(tokens.size()));
    }
    RawEdge e{std::string(tokens[0]), std::string(tokens[1]), 0.0, line_no};
    if (weighted) {
      const std::string_view t = tokens[2];
      const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), e.prob);
      if (ec != std::errc() || ptr != t.data() + t.size()) {
        throw ParseError(ErrorCode::kMalformedLine, line_no,
                         "bad probability '" + std::string(t) + "'");
      }
      if (!(e.prob >= 0.0 && e.prob <= 1.0)) {
        throw ParseError(ErrorCode::kProbabilityOutOfRange, line_no,
                         "probability " + std::string(t) + " outside [0,1]");
      }
    }
    if (e.source == e.target) {
      throw ParseError(ErrorCode::kSelfLoop, line_no, "self-loop at " + e.source);
    }
    raw.push_back(std::move(e));
  }
  return raw;
}

std::vector<std::string> AssignLabels(const std::vector<RawEdge>& raw) {
  std::vector<std::string> labels;
  labels.reserve(raw.size() * 2);
  for (const RawEdge& e : raw) {
    labels.push_back(e.source);
    labels.push_back(e.target);
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  std::vector<std::uint64_t> numeric(labels.size());
  bool all_numeric = true;
  for (std::size_t i = 0; i < labels.size() && all_numeric; ++i) {
    // Leading zeros would make distinct labels collide numerically.
    all_numeric = ParseUnsigned(labels[i], &numeric[i]) &&
                  (labels[i].size() == 1 || labels[i][0] != '0');
  }
  if (all_numeric) {
    std::vector<std::size_t> order(labels.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return numeric[a] < numeric[b]; });
    std::vector<std::string> sorted;
    sorted.reserve(labels.size());
    for (std::size_t i : order) sorted.push_back(std::move(labels[i]));
    labels = std::move(sorted);
  }
  return labels;
}

Graph BuildFromRaw(const std::vector<RawEdge>& raw, bool symmetrize) {
  std::vector<std::string> labels = AssignLabels(raw);
  std::unordered_map<std::string_view, NodeId> index;
  index.reserve(labels.size());
  for (NodeId i = 0; i < labels.size(); ++i) index.emplace(labels[i], i);

  // Duplicates are detected here so the error can carry the line number.
  std::unordered_map<std::uint64_t, int> seen;
  seen.reserve(raw.size() * (symmetrize ? 2 : 1));
  std::vector<Edge> edges;
  edges.reserve(raw.size() * (symmetrize ? 2 : 1));
  auto add = [&](NodeId u, NodeId v, double p, int line) {
    const std::uint64_t key = (std::uint64_t{u} << 32) | v;
    const auto [it, inserted] = seen.emplace(key, line);
    if (!inserted) {
      throw ParseError(ErrorCode::kDuplicateEdge, line,
                       "duplicate edge " + EdgeText(labels[u], labels[v]) +
                           " (first seen on line " + std::to_string(it->second) + ")");
    }
    edges.push_back({u, v, p});
  };
  for (const RawEdge& e : raw) {
    const NodeId u = index.at(e.source);
    const NodeId v = index.at(e.target);
    add(u, v, e.prob, e.line);
    if (symmetrize) add(v, u, e.prob, e.line);
  }
  const std::size_t n = labels.size();
  return Graph::FromEdges(n, std::move(edges), std::move(labels));
}

}  // namespace

Graph LoadEdgeList(std::istream& in, bool weighted) {
  return BuildFromRaw(ReadRawEdges(in, weighted), /*symmetrize=*/false);
}

Graph UndirectedToDirected(std::istream& in) {
  return BuildFromRaw(ReadRawEdges(in, /*weighted=*/false), /*symmetrize=*/true);
}

bool LooksWeighted(std::string_view text) {
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    const auto tokens = Tokenize(text.substr(pos, end - pos));
    if (!IsComment(tokens)) return tokens.size() == 3;
    pos = end + 1;
  }
  return false;
}

std::string FormatProb(double p) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), p);
  return std::string(buf, ec == std::errc() ? ptr : buf);
}

void WriteEdgeList(std::ostream& out, const Graph& graph, bool weighted) {
  for (EdgeId e = 0; e < graph.num_edges(); ++e) {
    out << graph.label(graph.EdgeSource(e)) << ' '
        << graph.label(graph.EdgeTarget(e));
    if (weighted) out << ' ' << FormatProb(graph.EdgeProb(e));
    out << '\n';
  }
}

void WriteLabelMap(std::ostream& out, const Graph& graph) {
  for (NodeId u = 0; u < graph.num_nodes(); ++u) {
    out << u << ' ' << graph.label(u) << '\n';
  }
}

}  // namespace imcsn
