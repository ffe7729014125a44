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

#include <algorithm>
#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "imcsn/diffusion.h"
#include "imcsn/ksubnetwork.h"
#include "test_util.h"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace imcsn {
namespace {

Graph Chain(double p) { return Graph::FromEdges(3, {{0, 1, p}, {1, 2, p}}); }

TEST(SimulateIcOnce, DeterministicChain) {
  const Graph g = Chain(1.0);
  const NodeId s[] = {0};
  auto active = SimulateIcOnce(DiffusionView::FromGraph(g), s, 42);
  std::sort(active.begin(), active.end());
  EXPECT_EQ(active, (std::vector<NodeId>{0, 1, 2}));
}

TEST(SimulateIcOnce, ZeroProbabilityKeepsSeedsOnly) {
  const Graph g = Chain(0.0);
  const NodeId s[] = {1};
  for (std::uint64_t key = 0; key < 100; ++key) {
    EXPECT_EQ(SimulateIcOnce(DiffusionView::FromGraph(g), s, key), (std::vector<NodeId>{1}));
  }
}

TEST(SimulateIcOnce, BernoulliFrequency) {
  const Graph g = Graph::FromEdges(2, {{0, 1, 0.5}});
  const auto view = DiffusionView::FromGraph(g);
  const NodeId s[] = {0};
  int hits = 0;
  const int runs = 20000;
  for (int i = 0; i < runs; ++i) hits += SimulateIcOnce(view, s, SimulationKey(9, i)).size() == 2;
  // 4 sigma of a fair coin over 20000 draws is about 0.014.
  EXPECT_NEAR(hits / static_cast<double>(runs), 0.5, 0.015);
}

TEST(EstimateInfluence, DeterministicChainIsExact) {
  const NodeId s[] = {0};
  const auto est = EstimateInfluence(Chain(1.0), s, 100, 1);
  EXPECT_EQ(est.mean, 3.0);
  EXPECT_EQ(est.std_error, 0.0);
  EXPECT_EQ(est.num_sims, 100u);
}

TEST(EstimateInfluence, SingleEdgeHalf) {
  const Graph g = Graph::FromEdges(2, {{0, 1, 0.5}});
  const NodeId s[] = {0};
  const auto est = EstimateInfluence(g, s, 10000, 5);
  EXPECT_NEAR(est.mean, 1.5, 0.02);
  EXPECT_GT(est.std_error, 0.0);
}

TEST(EstimateInfluence, AllNodesSeeded) {
  const Graph g = Chain(0.3);
  const NodeId s[] = {0, 1, 2};
  EXPECT_EQ(EstimateInfluence(g, s, 50, 2).mean, 3.0);
}

TEST(EstimateInfluence, RejectsZeroSims) {
  const NodeId s[] = {0};
  EXPECT_THROW(EstimateInfluence(Chain(0.5), s, 0, 1), std::exception);
}

TEST(EstimateInfluence, BitIdenticalAcrossRunsAndThreads) {
  std::mt19937_64 rng(17);
  testing::RandomSpec spec;
  spec.max_nodes = 30;
  spec.max_edges = 120;
  const auto inst = testing::RandomInstance(rng, spec);
  const NodeId s[] = {0};
  const auto a = EstimateInfluence(*inst.graph, s, 3000, 77);
  const auto b = EstimateInfluence(*inst.graph, s, 3000, 77);
  EXPECT_EQ(a.mean, b.mean);
  EXPECT_EQ(a.std_error, b.std_error);
#ifdef _OPENMP
  const int saved = omp_get_max_threads();
  omp_set_num_threads(3);
  const auto c = EstimateInfluence(*inst.graph, s, 3000, 77);
  omp_set_num_threads(saved);
  EXPECT_EQ(a.mean, c.mean);
#endif
}

TEST(EstimateInfluence, MeanWithinBounds) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const auto inst = testing::RandomInstance(rng, {});
    const NodeId s[] = {0};
    const auto est = EstimateInfluence(*inst.graph, s, 200, trial);
    EXPECT_GE(est.mean, 1.0);
    EXPECT_LE(est.mean, static_cast<double>(inst.graph->num_nodes()));
    EXPECT_GE(est.std_error, 0.0);
  }
}

TEST(EstimateInfluence, AgreesWithLiveEdgeEnumeration) {
  std::mt19937_64 rng(23);
  testing::RandomSpec spec;
  spec.max_edges = 12;
  spec.weights = {0.1, 0.3, 0.5, 0.9};
  for (int trial = 0; trial < 25; ++trial) {
    const auto inst = testing::RandomInstance(rng, spec);
    const NodeId s[] = {0};
    const auto edges = inst.graph->Edges();
    const double exact = testing::ExactInfluence(inst.graph->num_nodes(), edges, s);
    const auto est = EstimateInfluence(*inst.graph, s, 10000, 100 + trial);
    EXPECT_LE(std::abs(est.mean - exact), 4 * est.std_error + 1e-12) << trial;
  }
}

TEST(ExactInfluence, MonotoneUnderEdgeAddition) {
  std::mt19937_64 rng(29);
  testing::RandomSpec spec;
  spec.max_edges = 12;
  for (int trial = 0; trial < 40; ++trial) {
    const auto inst = testing::RandomInstance(rng, spec);
    const NodeId s[] = {0};
    auto edges = inst.graph->Edges();
    std::shuffle(edges.begin(), edges.end(), rng);
    double prev = 0.0;
    for (std::size_t m = 0; m <= edges.size(); ++m) {
      const double cur = testing::ExactInfluence(
          inst.graph->num_nodes(), std::span<const Edge>(edges.data(), m), s);
      EXPECT_GE(cur, prev - 1e-12);
      prev = cur;
    }
  }
}

TEST(AggregateSeedInfluence, SeedOutsideSubnetworkCountsZero) {
  const Graph g = Chain(1.0);
  KSubnetwork sub(g, 2);
  const NodeId s[] = {0};
  EXPECT_EQ(AggregateSeedInfluence(sub, s, 10, 1).mean, 0.0);
}

TEST(AggregateSeedInfluence, DisjointChainsAdd) {
  // 0 -> 1 and 2 -> 3 -> 4, all p = 1.
  const Graph g = Graph::FromEdges(5, {{0, 1, 1.0}, {2, 3, 1.0}, {3, 4, 1.0}});
  KSubnetwork sub(g, 1);
  for (const Edge& e : g.Edges()) sub.InsertEdge(e.source, e.target, EdgeMark::kNative);
  const NodeId s[] = {0, 2};
  EXPECT_EQ(AggregateSeedInfluence(sub, s, 20, 3).mean, 5.0);
}

TEST(AggregateSeedInfluence, FullSubnetworkMatchesGraphEstimate) {
  std::mt19937_64 rng(31);
  testing::RandomSpec spec;
  spec.max_nodes = 15;
  spec.max_edges = 40;
  const auto inst = testing::RandomInstance(rng, spec);
  KSubnetwork full(*inst.graph, static_cast<int>(inst.graph->num_edges()));
  for (const Edge& e : inst.graph->Edges()) full.InsertEdge(e.source, e.target, EdgeMark::kNative);
  const NodeId s[] = {0};
  EXPECT_EQ(AggregateSeedInfluence(full, s, 2000, 4).mean,
            EstimateInfluence(*inst.graph, s, 2000, 4).mean);
}

TEST(AggregateSeedInfluence, SubnetworkNeverExceedsParent) {
  std::mt19937_64 rng(37);
  testing::RandomSpec spec;
  spec.max_nodes = 20;
  spec.max_edges = 60;
  spec.max_native = 15;
  for (int trial = 0; trial < 20; ++trial) {
    const auto inst = testing::RandomInstance(rng, spec);
    const NodeId s[] = {0};
    const auto sub = AggregateSeedInfluence(*inst.subnet, s, 500, trial);
    const auto full = AggregateSeedInfluence(DiffusionView::FromGraph(*inst.graph), s, 500, trial);
    EXPECT_LE(sub.mean, full.mean);
  }
}

}  // namespace
}  // namespace imcsn
