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

#include "imcsn/synthetic.h"

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "imcsn/error.h"
#include "imcsn/rng.h"

namespace imcsn {
namespace {

using UndirectedSet = std::set<std::pair<NodeId, NodeId>>;

std::pair<NodeId, NodeId> Ordered(NodeId a, NodeId b) {
  return a < b ? std::pair{a, b} : std::pair{b, a};
}

Graph Symmetrize(std::size_t n, const UndirectedSet& pairs) {
  std::vector<Edge> edges;
  edges.reserve(2 * pairs.size());
  for (const auto& [a, b] : pairs) {
    edges.push_back({a, b, 0.0});
    edges.push_back({b, a, 0.0});
  }
  return Graph::FromEdges(n, std::move(edges));
}

void Require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::kInvalidArgument, what);
}

UndirectedSet ScaleFree(std::size_t n, int attach, Engine& engine) {
  Require(attach >= 1 && static_cast<std::size_t>(attach) < n,
          "scale-free needs 1 <= attach < n");
  const std::size_t m = static_cast<std::size_t>(attach);
  UndirectedSet pairs;
  // Every edge endpoint once: sampling from it is degree-proportional.
  std::vector<NodeId> ends;
  for (NodeId a = 0; a <= m; ++a) {
    for (NodeId b = a + 1; b <= m && b < n; ++b) {
      pairs.insert({a, b});
      ends.push_back(a);
      ends.push_back(b);
    }
  }
  for (NodeId v = static_cast<NodeId>(m + 1); v < n; ++v) {
    std::vector<NodeId> picked;
    while (picked.size() < m) {
      const NodeId t = ends[UniformBelow(engine, ends.size())];
      if (std::find(picked.begin(), picked.end(), t) == picked.end()) picked.push_back(t);
    }
    for (NodeId t : picked) {
      pairs.insert(Ordered(v, t));
      ends.push_back(v);
      ends.push_back(t);
    }
  }
  return pairs;
}

UndirectedSet SmallWorld(std::size_t n, int ring_degree, double rewire, Engine& engine) {
  Require(ring_degree >= 2 && ring_degree % 2 == 0, "small-world ring degree must be even");
  Require(rewire >= 0.0 && rewire <= 1.0, "rewire probability must be in [0,1]");
  const std::size_t half =
      std::max<std::size_t>(1, std::min<std::size_t>(ring_degree / 2, (n - 1) / 2));
  UndirectedSet pairs;
  for (NodeId i = 0; i < n; ++i) {
    for (std::size_t j = 1; j <= half; ++j) {
      const NodeId t = static_cast<NodeId>((i + j) % n);
      if (t != i) pairs.insert(Ordered(i, t));
    }
  }
  // Rewire in lattice order so the outcome is seed-deterministic.
  const std::vector<std::pair<NodeId, NodeId>> lattice(pairs.begin(), pairs.end());
  for (const auto& [a, b] : lattice) {
    if (UniformUnit(engine) >= rewire) continue;
    const NodeId t = static_cast<NodeId>(UniformBelow(engine, n));
    if (t == a || pairs.count(Ordered(a, t))) continue;
    pairs.erase({a, b});
    pairs.insert(Ordered(a, t));
  }
  return pairs;
}

UndirectedSet Regular(std::size_t n, int degree, Engine& engine) {
  Require(degree >= 1 && static_cast<std::size_t>(degree) < n,
          "regular needs 1 <= degree < n");
  Require((n * static_cast<std::size_t>(degree)) % 2 == 0, "n * degree must be even");
  std::vector<NodeId> relabel(n);
  for (NodeId i = 0; i < n; ++i) relabel[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(relabel[i - 1], relabel[UniformBelow(engine, i)]);
  UndirectedSet pairs;
  for (NodeId i = 0; i < n; ++i) {
    for (int j = 1; j <= degree / 2; ++j) {
      pairs.insert(Ordered(relabel[i], relabel[(i + j) % n]));
    }
    if (degree % 2 == 1) pairs.insert(Ordered(relabel[i], relabel[(i + n / 2) % n]));
  }
  return pairs;
}

}  // namespace

SyntheticKind ParseSyntheticKind(std::string_view name) {
  if (name == "scale-free") return SyntheticKind::kScaleFree;
  if (name == "small-world") return SyntheticKind::kSmallWorld;
  if (name == "regular") return SyntheticKind::kRegular;
  throw Error(ErrorCode::kInvalidArgument, "unknown graph kind '" + std::string(name) + "'");
}

Graph GenerateSynthetic(SyntheticKind kind, std::size_t n, const SyntheticParams& params,
                        std::uint64_t rng_seed) {
  Require(n >= 2, "synthetic graphs need at least 2 nodes");
  Engine engine = DeriveEngine(rng_seed, 0);
  switch (kind) {
    case SyntheticKind::kScaleFree:
      return Symmetrize(n, ScaleFree(n, params.attach, engine));
    case SyntheticKind::kSmallWorld:
      return Symmetrize(n, SmallWorld(n, params.ring_degree, params.rewire, engine));
    case SyntheticKind::kRegular:
      return Symmetrize(n, Regular(n, params.degree, engine));
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown graph kind");
}

}  // namespace imcsn
