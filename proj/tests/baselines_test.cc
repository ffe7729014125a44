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

#include <random>

#include "gtest/gtest.h"
#include "imcsn/augment.h"
#include "imcsn/baselines.h"
#include "imcsn/error.h"
#include "imcsn/synthetic.h"
#include "imcsn/weights.h"
#include "test_util.h"

namespace imcsn {
namespace {

using testing::GraphSpec;

// s fans out to a, b, c whose out-degrees are 3, 1, 2; a and c share s's
// friends differently. Labels are inserted in the order listed.
struct Fan {
  GraphSpec spec;
  std::unique_ptr<Graph> g;
  Fan() {
    spec.Edge("s", "a", 0.5).Edge("s", "b", 0.5).Edge("s", "c", 0.5)
        .Edge("a", "s", 0.5).Edge("a", "x", 0.5).Edge("a", "y", 0.5)
        .Edge("b", "s", 0.5)
        .Edge("c", "a", 0.5).Edge("c", "b", 0.5);
    g = spec.Build();
  }
  NodeId Id(const char* l) { return spec.Id(l); }
};

TEST(Strategy, ParseAndName) {
  for (auto kind : {StrategyKind::kDegree, StrategyKind::kFof, StrategyKind::kRandom}) {
    EXPECT_EQ(ParseStrategyKind(StrategyName(kind)), kind);
  }
  try {
    ParseStrategyKind("pagerank");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
  }
}

TEST(CommonFriends, CountsSharedOutNeighbors) {
  Fan f;
  EXPECT_EQ(CommonFriends(*f.g, f.Id("s"), f.Id("c")), 2u);  // a, b
  EXPECT_EQ(CommonFriends(*f.g, f.Id("s"), f.Id("a")), 0u);
  EXPECT_EQ(CommonFriends(*f.g, f.Id("a"), f.Id("b")), 1u);  // s
}

TEST(SelectBaseline, DegreePicksHighestOutDegree) {
  Fan f;
  const std::vector<NodeId> seeds = {f.Id("s")};
  const KSubnetwork out = SelectBaseline(*f.g, seeds, 2, {StrategyKind::kDegree, 0});
  EXPECT_TRUE(out.HasEdge(f.Id("s"), f.Id("a")));
  EXPECT_TRUE(out.HasEdge(f.Id("s"), f.Id("c")));
  EXPECT_FALSE(out.HasEdge(f.Id("s"), f.Id("b")));
  // Never into a seed.
  EXPECT_FALSE(out.HasEdge(f.Id("a"), f.Id("s")));
  EXPECT_TRUE(out.HasEdge(f.Id("a"), f.Id("x")));
  EXPECT_TRUE(out.HasEdge(f.Id("a"), f.Id("y")));
  // c's remaining neighbors a and b are both taken.
  EXPECT_TRUE(out.HasEdge(f.Id("c"), f.Id("a")));
  EXPECT_TRUE(out.HasEdge(f.Id("c"), f.Id("b")));
  EXPECT_TRUE(testing::RespectsBudgets(out, *f.g));
}

TEST(SelectBaseline, FofPicksMostCommonFriends) {
  Fan f;
  const std::vector<NodeId> seeds = {f.Id("s")};
  const KSubnetwork out = SelectBaseline(*f.g, seeds, 1, {StrategyKind::kFof, 0});
  // Common friends with s: a 0, b 0, c 2.
  EXPECT_TRUE(out.HasEdge(f.Id("s"), f.Id("c")));
  EXPECT_EQ(out.OutDegree(f.Id("s")), 1u);
}

TEST(SelectBaseline, LargeKTakesEverythingForAllStrategies) {
  Fan f;
  const std::vector<NodeId> seeds = {f.Id("s")};
  const KSubnetwork d = SelectBaseline(*f.g, seeds, 10, {StrategyKind::kDegree, 0});
  const KSubnetwork o = SelectBaseline(*f.g, seeds, 10, {StrategyKind::kFof, 0});
  const KSubnetwork r = SelectBaseline(*f.g, seeds, 10, {StrategyKind::kRandom, 9});
  EXPECT_EQ(d, o);
  EXPECT_EQ(d, r);
  EXPECT_EQ(d.num_edges(), f.g->num_edges() - 2);  // all but the two edges into s
}

TEST(SelectBaseline, RandomIsDeterministicPerSeed) {
  const Graph g = AssignTrivalency(GenerateSynthetic(SyntheticKind::kScaleFree, 300, {}, 4), 4);
  const std::vector<NodeId> seeds = {0, 1, 2};
  const auto a = SelectBaseline(g, seeds, 2, {StrategyKind::kRandom, 11});
  const auto b = SelectBaseline(g, seeds, 2, {StrategyKind::kRandom, 11});
  EXPECT_EQ(a, b);
  bool differs = false;
  for (std::uint64_t s = 12; s < 20 && !differs; ++s) {
    differs = !(SelectBaseline(g, seeds, 2, {StrategyKind::kRandom, s}) == a);
  }
  EXPECT_TRUE(differs);
}

TEST(SelectBaseline, BoostedKeepsBaseAndFillsMembersOnly) {
  Fan f;
  const std::vector<NodeId> seeds = {f.Id("s")};
  KSubnetwork base(*f.g, 2, seeds);
  base.InsertEdge(f.Id("s"), f.Id("b"), EdgeMark::kNative);
  const KSubnetwork out = SelectBaseline(*f.g, seeds, 2, {StrategyKind::kDegree, 0}, &base);
  EXPECT_TRUE(out.HasEdge(f.Id("s"), f.Id("b")));
  EXPECT_TRUE(out.HasEdge(f.Id("s"), f.Id("a")));  // the one residual slot
  EXPECT_EQ(out.OutDegree(f.Id("s")), 2u);
  // a joined through the fill but was not a base member: nothing added for it.
  EXPECT_EQ(out.OutDegree(f.Id("a")), 0u);
  // b's only neighbor is the seed.
  EXPECT_EQ(out.OutDegree(f.Id("b")), 0u);
}

TEST(SelectBaseline, BoostedSaturatedNodeGetsNothing) {
  Fan f;
  const std::vector<NodeId> seeds = {f.Id("s")};
  KSubnetwork base(*f.g, 1, seeds);
  base.InsertEdge(f.Id("s"), f.Id("b"), EdgeMark::kNative);
  const KSubnetwork out = SelectBaseline(*f.g, seeds, 1, {StrategyKind::kDegree, 0}, &base);
  EXPECT_EQ(out, base);
}

TEST(SelectBaseline, BoostedRejectsMismatchedBase) {
  Fan f;
  const std::vector<NodeId> seeds = {f.Id("s")};
  KSubnetwork base(*f.g, 2, seeds);
  EXPECT_THROW(SelectBaseline(*f.g, seeds, 3, {StrategyKind::kDegree, 0}, &base), Error);
  EXPECT_THROW(SelectBaseline(*f.g, std::vector<NodeId>{}, 2, {StrategyKind::kDegree, 0}),
               Error);
}

TEST(SelectBaseline, BudgetsAndSupersetOnSyntheticGraphs) {
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 20; ++trial) {
    const auto kind = static_cast<SyntheticKind>(trial % 3);
    SyntheticParams params;
    const Graph g = AssignTrivalency(GenerateSynthetic(kind, 150, params, trial), trial);
    std::vector<NodeId> seeds = {static_cast<NodeId>(rng() % 150)};
    if (trial % 2 == 1) seeds.push_back((seeds[0] + 1) % 150);
    const int k = 1 + static_cast<int>(rng() % 4);
    const PsnaResult psna = Psna(g, seeds, k, {.run_filling = false});
    std::size_t boosted_edges = 0;
    for (auto kind2 : {StrategyKind::kDegree, StrategyKind::kFof, StrategyKind::kRandom}) {
      const Strategy st{kind2, static_cast<std::uint64_t>(trial)};
      const KSubnetwork ori = SelectBaseline(g, seeds, k, st);
      const KSubnetwork bst = SelectBaseline(g, seeds, k, st, &psna.expansion);
      EXPECT_TRUE(testing::RespectsBudgets(ori, g));
      EXPECT_TRUE(testing::RespectsBudgets(bst, g));
      for (const Edge& e : psna.expansion.Edges()) EXPECT_TRUE(bst.HasEdge(e.source, e.target));
      for (NodeId s : seeds) {
        EXPECT_TRUE(ori.Contains(s));
        EXPECT_TRUE(bst.Contains(s));
      }
      // The boosted edge total depends only on the base, not the strategy.
      if (boosted_edges == 0) boosted_edges = bst.num_edges();
      EXPECT_EQ(bst.num_edges(), boosted_edges);
    }
  }
}

}  // namespace
}  // namespace imcsn
