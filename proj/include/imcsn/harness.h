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

// Experiment orchestration: seed picking, running the selectors, Monte Carlo
// evaluation and CSV reporting.
//
// Every random choice derives from ExperimentConfig::rng_seed:
//   stream 1  weight assignment
//   stream 2  seed picking
//   stream 3  Monte Carlo coins
//   stream 16 + r  r-th random-baseline run

#ifndef IMCSN_HARNESS_H_
#define IMCSN_HARNESS_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "imcsn/augment.h"
#include "imcsn/diffusion.h"
#include "imcsn/graph.h"
#include "imcsn/ksubnetwork.h"
#include "imcsn/weights.h"

namespace imcsn {

inline constexpr int kRandomBaselineRuns = 5;

// Uniform sample without replacement from the ceil(percentile% * n) nodes
// of highest out-degree (ties to the smaller id).
std::vector<NodeId> PickSeeds(const Graph& graph, std::size_t count, double percentile,
                              std::uint64_t rng_seed);

// Edge-list file; weighted when its first data line has three columns.
// undirected reads "u v" friendship pairs and emits both directions.
Graph LoadGraphFile(const std::string& path, bool undirected);

// Comma-separated labels to ids; unknown labels are kUnknownNode.
std::vector<NodeId> ParseSeedList(const Graph& graph, std::string_view list);

std::uint64_t DeriveSeed(std::uint64_t master, std::uint64_t stream);

struct ExperimentConfig {
  std::string graph_path;
  bool undirected = false;  // input is "u v" friendship pairs
  // "file" keeps the probabilities from the graph file.
  std::string weight_model = "trivalency";
  std::string intimacy_path;
  double lambda1 = 1.0;
  double lambda2 = 1.0;
  std::string seeds;  // explicit labels; overrides the sampled rule
  std::size_t seed_count = 10;
  double seed_percentile = 1.0;
  int k = 20;
  double epsilon = 1e-4;
  std::size_t num_sims = 10000;
  std::vector<std::string> algorithms;
  std::string output_dir;  // empty: nothing written
  std::uint64_t rng_seed = 1;
};

// psna, sketch, ori-degree, ori-fof, ori-random, bst-degree, bst-fof,
// bst-random. sketch needs a single seed.
const std::vector<std::string>& KnownAlgorithms();

struct AlgorithmResult {
  std::string algorithm;
  InfluenceEstimate influence;
  double i_ratio = 0.0;
  double e_ratio = 0.0;
  double n_ratio = 0.0;
  int iterations = 0;
  double expansion_ms = 0.0;
  double total_ms = 0.0;
  // One entry, or kRandomBaselineRuns for the random baselines.
  std::vector<KSubnetwork> subnetworks;
};

struct ExperimentReport {
  std::vector<NodeId> seeds;
  InfluenceEstimate full_influence;
  std::vector<AlgorithmResult> results;
  std::optional<ConvergenceTrace> psna_trace;
  std::map<std::string, std::string> metadata;
  std::string failure;  // empty on success
};

// Influence of `subnet` and its ratios against `full`.
void Evaluate(const KSubnetwork& subnet, std::span<const NodeId> seeds, std::size_t num_sims,
              std::uint64_t mc_seed, const InfluenceEstimate& full, AlgorithmResult& out);

// Runs the configured algorithms on an already weighted graph.
ExperimentReport RunOnGraph(const Graph& graph, std::span<const NodeId> seeds,
                            const ExperimentConfig& config);

// Loads and weights the graph, picks seeds, runs, and writes into
// output_dir (when set): report.csv, <algorithm>[-r].edges, psna_trace.csv,
// graph.txt (the weighted graph), labels.map, seeds.txt, metadata.txt. On
// failure the partial report gets a "# FAILED" line and the error is
// rethrown.
ExperimentReport RunExperiment(const ExperimentConfig& config);

void WriteReportCsv(std::ostream& out, const ExperimentReport& report);

// Reads a subnetwork edge file ("label label [prob]") against its parent;
// extra_members (the seeds) join even when they have no edges.
KSubnetwork ReadSubnetwork(std::istream& in, const Graph& parent, int k,
                           std::span<const NodeId> extra_members);

}  // namespace imcsn

#endif  // IMCSN_HARNESS_H_
