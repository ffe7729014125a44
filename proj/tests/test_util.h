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

// Shared fixtures and brute-force oracles for the test binaries. The oracles
// deliberately avoid the library's algorithms: path values come from
// exhaustive simple-path enumeration and influence from live-edge worlds.

#ifndef IMCSN_TESTS_TEST_UTIL_H_
#define IMCSN_TESTS_TEST_UTIL_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "imcsn/augment.h"
#include "imcsn/candidate_graph.h"
#include "imcsn/graph.h"
#include "imcsn/ksubnetwork.h"

namespace imcsn::testing {

// Graph builder over string labels; ids follow first mention.
class GraphSpec {
 public:
  GraphSpec& Edge(const std::string& u, const std::string& v, double p);
  NodeId Id(const std::string& label);
  std::unique_ptr<Graph> Build() const;

 private:
  std::vector<std::string> labels_;
  std::vector<imcsn::Edge> edges_;
};

// A graph together with a subnetwork of it and the node lookup.
struct Instance {
  std::unique_ptr<Graph> graph;
  std::unique_ptr<KSubnetwork> subnet;
  NodeId source = kNoNode;

  NodeId Id(const std::string& label) const { return *graph->FindLabel(label); }
};

// Small worked instances.
Instance ChainFixture();              // s->b->c natives plus s->c, c->d, d->e
Instance FrontierFixture();           // PEI ranking e, d, f, g
Instance FillUpFixture();             // two fill-up rounds over e, f

// pr^R(source, u) per node: max over simple paths using at most one edge
// marked inserted (max_inserted = 0 gives pr^S).
std::vector<double> BruteForcePathValues(const KSubnetwork& subnet, NodeId source,
                                         int max_inserted);
double BruteForceRmppInfluence(const KSubnetwork& subnet, NodeId source);

// Exact expected number of active nodes (seeds included) by enumerating all
// live-edge worlds of the given edges. |edges| must be at most 20.
double ExactInfluence(std::size_t num_nodes, std::span<const Edge> edges,
                      std::span<const NodeId> seeds);

struct RandomSpec {
  std::size_t min_nodes = 3;
  std::size_t max_nodes = 8;
  std::size_t max_edges = 14;
  std::vector<double> weights = {0.1, 0.5, 1.0};
  int min_k = 1;
  int max_k = 3;
  // Native edges grown from the source before the instance is returned.
  std::size_t max_native = 4;
};

// Random directed graph, a source, a budget k, and a subnetwork holding a
// few native edges grown from the source.
Instance RandomInstance(std::mt19937_64& rng, const RandomSpec& spec);

// Repeated practical insertion passes with one frozen ranking and frozen
// SMPP scores, until the pool drains. Zero-score candidates are inserted.
void FrozenRankingPasses(const Graph& graph, KSubnetwork& subnet,
                         CandidateGraph& candidates, NodeId source);

// Single-seed PSNA assembled from the public building blocks.
KSubnetwork ReferenceSingleSeedPsna(const Graph& graph, NodeId seed, int k, double epsilon,
                                    int max_iterations);

// Best δ^△ over one-in-edge-per-target selections (or none) from the
// candidate pool that respect residual budgets; selected edges are marked
// inserted.
double BruteForceBestSelection(const KSubnetwork& subnet, const CandidateGraph& candidates,
                               NodeId source);

// Budget and parent-edge checks done independently of SatisfiesBudget.
bool RespectsBudgets(const KSubnetwork& subnet, const Graph& graph);

}  // namespace imcsn::testing

#endif  // IMCSN_TESTS_TEST_UTIL_H_
