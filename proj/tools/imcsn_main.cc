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

// imcsn: command-line front end.
//
//   imcsn gen        --kind scale-free --n 2000 --out g.txt
//   imcsn weights    --graph g.txt --weight-model trivalency --out gw.txt
//   imcsn augment    --graph gw.txt --seeds 1,2 --k 20 --out subnet.edges
//   imcsn simulate   --graph gw.txt --seeds 1,2 --sims 10000
//   imcsn experiment --config exp.cfg

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "imcsn/augment.h"
#include "imcsn/baselines.h"
#include "imcsn/diffusion.h"
#include "imcsn/error.h"
#include "imcsn/graph.h"
#include "imcsn/harness.h"
#include "imcsn/prob_paths.h"
#include "imcsn/synthetic.h"
#include "imcsn/weights.h"

namespace {

using namespace imcsn;

// Writes to `path`, or stdout when it is empty or "-".
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw Error(ErrorCode::kIo, "cannot write " + path);
    }
  }
  std::ostream& get() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

struct GenArgs {
  std::string kind = "scale-free";
  std::size_t n = 1000;
  SyntheticParams params;
  std::uint64_t rng_seed = 1;
  std::string out;
};

struct WeightArgs {
  std::string graph;
  bool undirected = false;
  std::string model = "trivalency";
  std::string intimacy;
  double lambda1 = 1.0;
  double lambda2 = 1.0;
  std::uint64_t rng_seed = 1;
  std::string out;
};

struct AugmentArgs {
  std::string graph;
  std::string seeds;
  int k = 20;
  double eps = 1e-4;
  int max_iterations = 50;
  std::string algorithm = "psna";
  bool boosted = false;
  std::uint64_t rng_seed = 1;
  std::string out;
  std::string trace;
  std::string dump_smpp;
  std::string labels;
};

struct SimulateArgs {
  std::string graph;
  std::string seeds;
  std::size_t sims = 10000;
  std::uint64_t rng_seed = 1;
  std::string subnet;
  int k = 20;
  bool aggregate = false;
};

void RunGen(const GenArgs& a) {
  const Graph g = GenerateSynthetic(ParseSyntheticKind(a.kind), a.n, a.params, a.rng_seed);
  Output out(a.out);
  WriteEdgeList(out.get(), g, /*weighted=*/false);
}

void RunWeights(const WeightArgs& a) {
  const Graph g = LoadGraphFile(a.graph, a.undirected);
  WeightModelConfig config;
  config.lambda1 = a.lambda1;
  config.lambda2 = a.lambda2;
  config.rng_seed = a.rng_seed;
  std::unique_ptr<IntimacyMap> intimacy;
  if (a.model == "intimacy") {
    config.model = WeightModel::kIntimacy;
    std::ifstream in(a.intimacy);
    if (!in) throw Error(ErrorCode::kIo, "cannot open " + a.intimacy);
    intimacy = std::make_unique<IntimacyMap>(LoadIntimacy(in, g));
  } else if (a.model != "trivalency") {
    throw Error(ErrorCode::kInvalidArgument, "unknown weight model '" + a.model + "'");
  }
  Output out(a.out);
  WriteEdgeList(out.get(), ApplyWeightModel(g, config, intimacy.get()));
}

void RunAugment(const AugmentArgs& a) {
  const Graph g = LoadGraphFile(a.graph, false);
  const std::vector<NodeId> seeds = ParseSeedList(g, a.seeds);
  PsnaOptions options;
  options.epsilon = a.eps;
  options.max_iterations = a.max_iterations;

  std::unique_ptr<PsnaResult> psna;
  std::unique_ptr<KSubnetwork> result;
  if (a.algorithm == "psna") {
    if (a.boosted) throw Error(ErrorCode::kInvalidArgument, "--boosted applies to baselines");
    psna = std::make_unique<PsnaResult>(Psna(g, seeds, a.k, options));
    result = std::make_unique<KSubnetwork>(psna->subnet);
  } else if (a.algorithm == "sketch") {
    if (seeds.size() != 1) {
      throw Error(ErrorCode::kInvalidArgument, "sketch supports a single seed only");
    }
    result = std::make_unique<KSubnetwork>(SubnetworkAugmentationSketch(g, seeds[0], a.k));
  } else {
    const Strategy strategy{ParseStrategyKind(a.algorithm), a.rng_seed};
    if (a.boosted) {
      options.run_filling = false;
      psna = std::make_unique<PsnaResult>(Psna(g, seeds, a.k, options));
      result = std::make_unique<KSubnetwork>(
          SelectBaseline(g, seeds, a.k, strategy, &psna->expansion));
    } else {
      result = std::make_unique<KSubnetwork>(SelectBaseline(g, seeds, a.k, strategy));
    }
  }

  Output out(a.out);
  result->Write(out.get());
  if (!a.trace.empty()) {
    if (!psna) throw Error(ErrorCode::kInvalidArgument, "--trace needs psna or --boosted");
    Output trace(a.trace);
    WriteTraceCsv(trace.get(), psna->trace);
  }
  if (!a.labels.empty()) {
    Output labels(a.labels);
    WriteLabelMap(labels.get(), g);
  }
  if (!a.dump_smpp.empty()) {
    if (seeds.size() != 1) {
      throw Error(ErrorCode::kInvalidArgument, "--dump-smpp needs a single seed");
    }
    Output dump(a.dump_smpp);
    WriteSmppTree(dump.get(), g, ComputeSmpp(*result, seeds[0]));
  }
}

void RunSimulate(const SimulateArgs& a) {
  const Graph g = LoadGraphFile(a.graph, false);
  const std::vector<NodeId> seeds = ParseSeedList(g, a.seeds);
  InfluenceEstimate est;
  if (!a.subnet.empty()) {
    std::ifstream in(a.subnet);
    if (!in) throw Error(ErrorCode::kIo, "cannot open " + a.subnet);
    const KSubnetwork subnet = ReadSubnetwork(in, g, a.k, seeds);
    est = AggregateSeedInfluence(subnet, seeds, a.sims, a.rng_seed);
  } else if (a.aggregate) {
    est = AggregateSeedInfluence(DiffusionView::FromGraph(g), seeds, a.sims, a.rng_seed);
  } else {
    est = EstimateInfluence(g, seeds, a.sims, a.rng_seed);
  }
  std::cout << "mean,std_error\n" << FormatProb(est.mean) << ',' << FormatProb(est.std_error)
            << '\n';
}

void RunExperimentCommand(const ExperimentConfig& config, const std::string& algorithms) {
  ExperimentConfig c = config;
  c.algorithms.clear();
  std::size_t pos = 0;
  while (pos <= algorithms.size()) {
    const std::size_t comma = std::min(algorithms.find(',', pos), algorithms.size());
    if (comma > pos) c.algorithms.push_back(algorithms.substr(pos, comma - pos));
    pos = comma + 1;
  }
  const ExperimentReport report = RunExperiment(c);
  WriteReportCsv(std::cout, report);
}

// "key=value" lines; '#' starts a comment. Flags given on the command line
// win over the file.
void ApplyConfigFile(CLI::App& cmd, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  std::string line;
  int line_no = 0;
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return std::string();
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
  };
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line.substr(0, line.find('#')));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParseError(ErrorCode::kMalformedLine, line_no, "expected key=value");
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "config") throw ParseError(ErrorCode::kMalformedLine, line_no, "nested config");
    CLI::Option* opt = nullptr;
    try {
      opt = cmd.get_option("--" + key);
    } catch (const CLI::OptionNotFound&) {
      throw ParseError(ErrorCode::kMalformedLine, line_no, "unknown key '" + key + "'");
    }
    if (opt->count() > 0) continue;
    opt->add_result(value);
    opt->run_callback();
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Influence maximization in closed social networks"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a synthetic friendship graph");
  gen_cmd->add_option("--kind", gen.kind, "scale-free | small-world | regular")
      ->check(CLI::IsMember({"scale-free", "small-world", "regular"}));
  gen_cmd->add_option("--n", gen.n, "Number of nodes");
  gen_cmd->add_option("--attach", gen.params.attach, "Scale-free links per new node");
  gen_cmd->add_option("--ring-degree", gen.params.ring_degree, "Small-world ring degree");
  gen_cmd->add_option("--rewire", gen.params.rewire, "Small-world rewiring probability");
  gen_cmd->add_option("--degree", gen.params.degree, "Regular degree");
  gen_cmd->add_option("--rng-seed", gen.rng_seed);
  gen_cmd->add_option("--out", gen.out, "Output edge list (default stdout)");

  WeightArgs weights;
  auto* w_cmd = app.add_subcommand("weights", "Assign edge probabilities");
  w_cmd->add_option("--graph", weights.graph)->required();
  w_cmd->add_flag("--undirected", weights.undirected, "Input lists friendship pairs");
  w_cmd->add_option("--weight-model", weights.model, "trivalency | intimacy")
      ->check(CLI::IsMember({"trivalency", "intimacy"}));
  w_cmd->add_option("--intimacy", weights.intimacy, "Intimacy file \"u v I\"");
  w_cmd->add_option("--lambda1", weights.lambda1);
  w_cmd->add_option("--lambda2", weights.lambda2);
  w_cmd->add_option("--rng-seed", weights.rng_seed);
  w_cmd->add_option("--out", weights.out, "Output weighted edge list (default stdout)");

  AugmentArgs aug;
  auto* a_cmd = app.add_subcommand("augment", "Build a diffusion k-subnetwork");
  a_cmd->add_option("--graph", aug.graph, "Weighted edge list")->required();
  a_cmd->add_option("--seeds", aug.seeds, "Comma-separated seed labels")->required();
  a_cmd->add_option("--k", aug.k)->check(CLI::PositiveNumber);
  a_cmd->add_option("--eps", aug.eps)->check(CLI::PositiveNumber);
  a_cmd->add_option("--max-iterations", aug.max_iterations)->check(CLI::PositiveNumber);
  a_cmd->add_option("--algorithm", aug.algorithm, "psna | sketch | degree | fof | random")
      ->check(CLI::IsMember({"psna", "sketch", "degree", "fof", "random"}));
  a_cmd->add_flag("--boosted", aug.boosted, "Fill up on top of the expansion stage");
  a_cmd->add_option("--rng-seed", aug.rng_seed, "Random baseline seed");
  a_cmd->add_option("--out", aug.out, "Subnetwork edge list (default stdout)");
  a_cmd->add_option("--trace", aug.trace, "Convergence trace CSV");
  a_cmd->add_option("--dump-smpp", aug.dump_smpp, "SMPP tree of the result");
  a_cmd->add_option("--labels", aug.labels, "Label map \"id label\"");

  SimulateArgs sim;
  auto* s_cmd = app.add_subcommand("simulate", "Monte Carlo influence estimate");
  s_cmd->add_option("--graph", sim.graph)->required();
  s_cmd->add_option("--seeds", sim.seeds)->required();
  s_cmd->add_option("--sims", sim.sims)->check(CLI::PositiveNumber);
  s_cmd->add_option("--rng-seed", sim.rng_seed);
  s_cmd->add_option("--subnet", sim.subnet, "Evaluate this subnetwork of --graph");
  s_cmd->add_option("--k", sim.k, "Budget of --subnet")->check(CLI::PositiveNumber);
  s_cmd->add_flag("--aggregate", sim.aggregate, "Sum of single-seed influences");

  ExperimentConfig exp;
  std::string algorithms = "psna,bst-degree,bst-fof,bst-random,ori-degree,ori-fof,ori-random";
  auto* e_cmd = app.add_subcommand("experiment", "Run and evaluate several algorithms");
  std::string config_path;
  e_cmd->add_option("--config", config_path, "Flat key=value file; keys are the flag names");
  e_cmd->add_option("--graph", exp.graph_path);
  e_cmd->add_flag("--undirected", exp.undirected);
  e_cmd->add_option("--weight-model", exp.weight_model, "file | trivalency | intimacy")
      ->check(CLI::IsMember({"file", "trivalency", "intimacy"}));
  e_cmd->add_option("--intimacy", exp.intimacy_path);
  e_cmd->add_option("--lambda1", exp.lambda1);
  e_cmd->add_option("--lambda2", exp.lambda2);
  e_cmd->add_option("--seeds", exp.seeds, "Explicit seed labels");
  e_cmd->add_option("--seed-count", exp.seed_count);
  e_cmd->add_option("--seed-percentile", exp.seed_percentile);
  e_cmd->add_option("--k", exp.k)->check(CLI::PositiveNumber);
  e_cmd->add_option("--eps", exp.epsilon)->check(CLI::PositiveNumber);
  e_cmd->add_option("--sims", exp.num_sims)->check(CLI::PositiveNumber);
  e_cmd->add_option("--algorithms", algorithms, "Comma-separated algorithm names");
  e_cmd->add_option("--out-dir", exp.output_dir);
  e_cmd->add_option("--rng-seed", exp.rng_seed, "Master seed");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*gen_cmd) RunGen(gen);
    if (*w_cmd) RunWeights(weights);
    if (*a_cmd) RunAugment(aug);
    if (*s_cmd) RunSimulate(sim);
    if (*e_cmd) {
      if (!config_path.empty()) ApplyConfigFile(*e_cmd, config_path);
      if (exp.graph_path.empty()) throw Error(ErrorCode::kInvalidArgument, "--graph is required");
      RunExperimentCommand(exp, algorithms);
    }
  } catch (const Error& e) {
    std::cerr << "error (" << ErrorCodeName(e.code()) << "): " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
