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

#include <cmath>
#include <random>
#include <sstream>

#include "gtest/gtest.h"
#include "imcsn/candidate_graph.h"
#include "imcsn/error.h"
#include "imcsn/prob_paths.h"
#include "test_util.h"

namespace imcsn {
namespace {

using testing::GraphSpec;
using testing::Instance;

template <typename Fn>
std::optional<ErrorCode> CodeOf(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

TEST(Smpp, ChainValues) {
  const Instance inst = testing::ChainFixture();
  const SmppResult smpp = ComputeSmpp(*inst.subnet, inst.source);
  EXPECT_DOUBLE_EQ(smpp.prob[inst.Id("b")], 0.5);
  EXPECT_DOUBLE_EQ(smpp.prob[inst.Id("c")], 0.25);
  EXPECT_EQ(smpp.prob[inst.Id("d")], 0.0);
  EXPECT_EQ(smpp.parent[inst.Id("c")], inst.Id("b"));
  EXPECT_EQ(smpp.subtree_size[inst.source], 3u);
  EXPECT_EQ(smpp.subtree_size[inst.Id("b")], 2u);
  EXPECT_FALSE(smpp.Reachable(inst.Id("d")));
}

TEST(Smpp, DiamondTakesBetterBranch) {
  GraphSpec spec;
  spec.Edge("s", "a", 0.9).Edge("a", "t", 0.9).Edge("s", "b", 0.5).Edge("b", "t", 0.5);
  const auto g = spec.Build();
  const NodeId s[] = {spec.Id("s")};
  KSubnetwork sub(*g, 2, s);
  for (const Edge& e : g->Edges()) sub.InsertEdge(e.source, e.target, EdgeMark::kNative);
  const SmppResult smpp = ComputeSmpp(sub, spec.Id("s"));
  EXPECT_DOUBLE_EQ(smpp.prob[spec.Id("t")], 0.81);
  EXPECT_EQ(smpp.parent[spec.Id("t")], spec.Id("a"));
}

TEST(Smpp, IgnoresInsertedEdges) {
  Instance inst = testing::ChainFixture();
  inst.subnet->InsertEdge(inst.source, inst.Id("c"), EdgeMark::kInserted);
  const SmppResult smpp = ComputeSmpp(*inst.subnet, inst.source);
  EXPECT_DOUBLE_EQ(smpp.prob[inst.Id("c")], 0.25);
}

TEST(Smpp, TieGoesToSmallerParent) {
  // Two equal paths to t; parent must be the smaller id.
  GraphSpec spec;
  spec.Edge("s", "x", 0.5).Edge("s", "y", 0.5).Edge("y", "t", 0.5).Edge("x", "t", 0.5);
  const auto g = spec.Build();
  const NodeId s[] = {spec.Id("s")};
  KSubnetwork sub(*g, 2, s);
  for (const Edge& e : g->Edges()) sub.InsertEdge(e.source, e.target, EdgeMark::kNative);
  EXPECT_EQ(ComputeSmpp(sub, spec.Id("s")).parent[spec.Id("t")], spec.Id("x"));
}

TEST(Smpp, NonMemberSourceRejected) {
  const Instance inst = testing::ChainFixture();
  EXPECT_EQ(CodeOf([&] { ComputeSmpp(*inst.subnet, inst.Id("d")); }), ErrorCode::kNotAMember);
  EXPECT_EQ(CodeOf([&] { ComputeRmpp(*inst.subnet, inst.Id("d")); }), ErrorCode::kNotAMember);
}

TEST(Smpp, TreeInvariantsOnRandomInstances) {
  std::mt19937_64 rng(3);
  testing::RandomSpec spec;
  spec.max_nodes = 12;
  spec.max_edges = 40;
  spec.max_native = 12;
  for (int trial = 0; trial < 200; ++trial) {
    const Instance inst = testing::RandomInstance(rng, spec);
    const SmppResult smpp = ComputeSmpp(*inst.subnet, inst.source);
    const Graph& g = *inst.graph;
    std::size_t reachable = 0;
    double last = 2.0;
    for (NodeId u : smpp.order) {
      EXPECT_LE(smpp.prob[u], last);
      last = smpp.prob[u];
      ++reachable;
      if (u == inst.source) continue;
      const NodeId p = smpp.parent[u];
      ASSERT_NE(p, kNoNode);
      ASSERT_TRUE(inst.subnet->HasEdge(p, u));
      EXPECT_DOUBLE_EQ(smpp.prob[u], smpp.prob[p] * g.EdgeProb(*g.FindEdge(p, u)));
    }
    EXPECT_EQ(smpp.subtree_size[inst.source], reachable);
    for (NodeId u = 0; u < g.num_nodes(); ++u) {
      std::size_t expect = smpp.Reachable(u) ? 1 : 0;
      for (NodeId w = 0; w < g.num_nodes(); ++w) {
        if (w != inst.source && smpp.Reachable(w) && smpp.parent[w] == u) {
          expect += smpp.subtree_size[w];
        }
      }
      EXPECT_EQ(smpp.subtree_size[u], expect);
    }
  }
}

TEST(Rmpp, ChainInfluenceBeforeAndAfterInsertion) {
  Instance inst = testing::ChainFixture();
  EXPECT_DOUBLE_EQ(RmppInfluence(*inst.subnet, inst.source), 0.75);
  inst.subnet->InsertEdge(inst.source, inst.Id("c"), EdgeMark::kInserted);
  const RmppResult r = ComputeRmpp(*inst.subnet, inst.source);
  EXPECT_DOUBLE_EQ(r.native[inst.Id("c")], 0.25);
  EXPECT_DOUBLE_EQ(r.best[inst.Id("c")], 1.0);
  EXPECT_DOUBLE_EQ(r.Influence(), 1.5);
}

TEST(Rmpp, AtMostOneInsertedEdgePerPath) {
  // s -i-> a -i-> b: b is only reachable through two inserted edges.
  const Graph g = Graph::FromEdges(3, {{0, 1, 1.0}, {1, 2, 1.0}});
  const NodeId s[] = {0};
  KSubnetwork sub(g, 1, s);
  sub.InsertEdge(0, 1, EdgeMark::kInserted);
  sub.InsertEdge(1, 2, EdgeMark::kInserted);
  const RmppResult r = ComputeRmpp(sub, 0);
  EXPECT_EQ(r.best[1], 1.0);
  EXPECT_EQ(r.best[2], 0.0);
}

TEST(Rmpp, MatchesBruteForce) {
  std::mt19937_64 rng(5);
  testing::RandomSpec spec;
  spec.max_nodes = 9;
  spec.max_edges = 30;
  spec.max_native = 10;
  spec.weights = {0.1, 0.25, 0.5, 0.8, 1.0};
  for (int trial = 0; trial < 300; ++trial) {
    Instance inst = testing::RandomInstance(rng, spec);
    // Mark a random subset of extra edges as inserted.
    for (NodeId u : std::vector<NodeId>(inst.subnet->members())) {
      for (NodeId v : inst.graph->OutNeighbors(u)) {
        if (inst.subnet->HasResidual(u) && !inst.subnet->HasEdge(u, v) && rng() % 3 == 0) {
          inst.subnet->InsertEdge(u, v, EdgeMark::kInserted);
        }
      }
    }
    const RmppResult r = ComputeRmpp(*inst.subnet, inst.source);
    const auto native = testing::BruteForcePathValues(*inst.subnet, inst.source, 0);
    const auto best = testing::BruteForcePathValues(*inst.subnet, inst.source, 1);
    for (NodeId u = 0; u < inst.graph->num_nodes(); ++u) {
      EXPECT_NEAR(r.native[u], native[u], 1e-12);
      EXPECT_NEAR(r.best[u], best[u], 1e-12);
    }
    EXPECT_NEAR(r.Influence(), testing::BruteForceRmppInfluence(*inst.subnet, inst.source),
                1e-12);
    const SmppResult smpp = ComputeSmpp(*inst.subnet, inst.source);
    for (NodeId u = 0; u < inst.graph->num_nodes(); ++u) {
      EXPECT_NEAR(smpp.prob[u], native[u], 1e-12);
    }
  }
}

TEST(Rmpp, LowerBoundsExpectedInfluence) {
  // Every node's RMPP value is the probability of one path being live, so it
  // cannot exceed its activation probability; summing gives the bound.
  std::mt19937_64 rng(7);
  testing::RandomSpec spec;
  spec.max_nodes = 8;
  spec.max_edges = 18;
  spec.max_native = 8;
  spec.weights = {0.2, 0.5, 0.9};
  for (int trial = 0; trial < 100; ++trial) {
    Instance inst = testing::RandomInstance(rng, spec);
    for (NodeId u : std::vector<NodeId>(inst.subnet->members())) {
      for (NodeId v : inst.graph->OutNeighbors(u)) {
        if (inst.subnet->HasResidual(u) && !inst.subnet->HasEdge(u, v) && rng() % 2 == 0) {
          inst.subnet->InsertEdge(u, v, EdgeMark::kInserted);
        }
      }
    }
    const auto edges = inst.subnet->Edges();
    const NodeId s[] = {inst.source};
    const double exact = testing::ExactInfluence(inst.graph->num_nodes(), edges, s);
    const RmppResult r = ComputeRmpp(*inst.subnet, inst.source);
    EXPECT_LE(r.Influence() + 1.0, exact + 1e-12);
    double smpp_total = 0.0;
    for (NodeId u = 0; u < r.native.size(); ++u) {
      EXPECT_LE(r.native[u], r.best[u]);
      if (u != inst.source) smpp_total += r.native[u];
    }
    EXPECT_LE(smpp_total, r.Influence() + 1e-12);
  }
}

TEST(MarginalGain, ChainValues) {
  const Instance inst = testing::ChainFixture();
  const NodeId s = inst.source, c = inst.Id("c"), d = inst.Id("d");
  const SmppResult smpp = ComputeSmpp(*inst.subnet, s);
  EXPECT_DOUBLE_EQ(RmppMarginalGain(*inst.subnet, s, s, c, smpp), 0.75);
  EXPECT_DOUBLE_EQ(RmppMarginalGain(*inst.subnet, s, c, d, smpp), 0.25);
}

TEST(MarginalGain, ZeroWhenTargetAlreadyBetterServed) {
  GraphSpec spec;
  spec.Edge("s", "a", 0.9).Edge("a", "t", 0.9).Edge("s", "b", 0.1).Edge("b", "t", 0.5);
  const auto g = spec.Build();
  const NodeId s[] = {spec.Id("s")};
  KSubnetwork sub(*g, 2, s);
  sub.InsertEdge(spec.Id("s"), spec.Id("a"), EdgeMark::kNative);
  sub.InsertEdge(spec.Id("a"), spec.Id("t"), EdgeMark::kNative);
  sub.InsertEdge(spec.Id("s"), spec.Id("b"), EdgeMark::kNative);
  const SmppResult smpp = ComputeSmpp(sub, spec.Id("s"));
  EXPECT_EQ(RmppMarginalGain(sub, spec.Id("s"), spec.Id("b"), spec.Id("t"), smpp), 0.0);
}

TEST(MarginalGain, RejectsNonCandidates) {
  const Instance inst = testing::ChainFixture();
  const SmppResult smpp = ComputeSmpp(*inst.subnet, inst.source);
  // Already in the subnetwork.
  EXPECT_EQ(CodeOf([&] {
              RmppMarginalGain(*inst.subnet, inst.source, inst.source, inst.Id("b"), smpp);
            }),
            ErrorCode::kInvalidArgument);
  // Not an edge of the parent graph.
  EXPECT_EQ(CodeOf([&] {
              RmppMarginalGain(*inst.subnet, inst.source, inst.Id("b"), inst.source, smpp);
            }),
            ErrorCode::kInvalidArgument);
}

// Copy of `subnet` with no budget pressure plus (u, v) marked inserted.
KSubnetwork WithInserted(const KSubnetwork& subnet, NodeId u, NodeId v) {
  const Graph& g = subnet.parent();
  KSubnetwork out(g, static_cast<int>(g.num_nodes()), subnet.members());
  for (NodeId x : subnet.members()) {
    for (const SubEdge& e : subnet.OutEdges(x)) out.InsertEdge(x, e.target, e.mark);
  }
  out.InsertEdge(u, v, EdgeMark::kInserted);
  return out;
}

void AddRandomInserted(std::mt19937_64& rng, KSubnetwork& subnet, int one_in) {
  for (NodeId u : std::vector<NodeId>(subnet.members())) {
    for (NodeId v : subnet.parent().OutNeighbors(u)) {
      if (subnet.HasResidual(u) && !subnet.HasEdge(u, v) && rng() % one_in == 0) {
        subnet.InsertEdge(u, v, EdgeMark::kInserted);
      }
    }
  }
}

TEST(MarginalGain, EqualsInfluenceDifference) {
  std::mt19937_64 rng(11);
  testing::RandomSpec spec;
  spec.max_nodes = 9;
  spec.max_edges = 30;
  spec.max_native = 10;
  spec.weights = {0.1, 0.3, 0.5, 0.7, 1.0};
  for (int trial = 0; trial < 200; ++trial) {
    Instance inst = testing::RandomInstance(rng, spec);
    AddRandomInserted(rng, *inst.subnet, 4);
    const double before = testing::BruteForceRmppInfluence(*inst.subnet, inst.source);
    const SmppResult smpp = ComputeSmpp(*inst.subnet, inst.source);
    const RmppResult current = ComputeRmpp(*inst.subnet, inst.source);
    for (NodeId u : inst.subnet->members()) {
      for (NodeId v : inst.graph->OutNeighbors(u)) {
        if (inst.subnet->HasEdge(u, v)) continue;
        const double gain = RmppMarginalGain(*inst.subnet, inst.source, u, v, smpp, current);
        const double after =
            testing::BruteForceRmppInfluence(WithInserted(*inst.subnet, u, v), inst.source);
        EXPECT_NEAR(gain, after - before, 1e-12) << trial << ": " << u << "->" << v;
      }
    }
  }
}

TEST(MarginalGain, CriticalEdgeIsBestInEdgeOfItsTarget) {
  // With only native edges present, the in-candidate with the largest
  // pr^S(u) * p(u, v) has the largest gain among the in-candidates of v.
  std::mt19937_64 rng(13);
  testing::RandomSpec spec;
  spec.max_nodes = 9;
  spec.max_edges = 30;
  spec.max_native = 10;
  spec.min_k = 2;
  spec.max_k = 4;
  spec.weights = {0.1, 0.3, 0.5, 0.7, 1.0};
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const Instance inst = testing::RandomInstance(rng, spec);
    const std::vector<bool> forbidden = MakeNodeMask(inst.graph->num_nodes(),
                                                     std::vector<NodeId>{inst.source});
    const CandidateGraph cand = BuildCandidateGraph(*inst.graph, *inst.subnet, forbidden);
    const SmppResult smpp = ComputeSmpp(*inst.subnet, inst.source);
    for (NodeId v : cand.Targets()) {
      const auto crit = FindCriticalNeighbor(v, cand, smpp);
      ASSERT_TRUE(crit.has_value());
      const double crit_gain =
          RmppMarginalGain(*inst.subnet, inst.source, crit->node, v, smpp);
      for (const CandidateEdge& e : cand.InCandidates(v)) {
        EXPECT_LE(RmppMarginalGain(*inst.subnet, inst.source, e.source, v, smpp),
                  crit_gain + 1e-12);
        EXPECT_LE(smpp.prob[e.source] * e.prob, crit->score);
      }
      ++checked;
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(CriticalNeighbor, PicksLargestScoreThenSmallerId) {
  const Instance inst = testing::FrontierFixture();
  const std::vector<bool> forbidden =
      MakeNodeMask(inst.graph->num_nodes(), std::vector<NodeId>{inst.source});
  const CandidateGraph cand = BuildCandidateGraph(*inst.graph, *inst.subnet, forbidden);
  const SmppResult smpp = ComputeSmpp(*inst.subnet, inst.source);
  // d: b (0.5 * 0.5) beats a (0.5 * 0.2).
  const auto d = FindCriticalNeighbor(inst.Id("d"), cand, smpp);
  ASSERT_TRUE(d);
  EXPECT_EQ(d->node, inst.Id("b"));
  EXPECT_DOUBLE_EQ(d->score, 0.25);
  const auto f = FindCriticalNeighbor(inst.Id("f"), cand, smpp);
  ASSERT_TRUE(f);
  EXPECT_EQ(f->node, inst.Id("c"));
  EXPECT_DOUBLE_EQ(f->score, 0.125);
  EXPECT_FALSE(FindCriticalNeighbor(inst.Id("h"), cand, smpp));

  // Equal scores: the smaller source id wins.
  CandidateGraph tie(inst.graph->num_nodes());
  tie.Add(inst.Id("b"), inst.Id("h"), 0.5);
  tie.Add(inst.Id("a"), inst.Id("h"), 0.5);
  const NodeId smaller = std::min(inst.Id("a"), inst.Id("b"));
  EXPECT_EQ(FindCriticalNeighbor(inst.Id("h"), tie, smpp)->node, smaller);
}

TEST(SmppTree, WritesParentChildLines) {
  const Instance inst = testing::ChainFixture();
  std::ostringstream out;
  WriteSmppTree(out, *inst.graph, ComputeSmpp(*inst.subnet, inst.source));
  EXPECT_EQ(out.str(), "s b 0.5\nb c 0.25\n");
}

}  // namespace
}  // namespace imcsn
