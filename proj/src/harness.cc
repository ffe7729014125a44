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

#include "imcsn/harness.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "imcsn/baselines.h"
#include "imcsn/error.h"
#include "imcsn/rng.h"

namespace imcsn {
namespace {

using Clock = std::chrono::steady_clock;

double MillisSince(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::ifstream OpenInput(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  return in;
}

std::ofstream OpenOutput(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path.string());
  return out;
}

std::string Trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

void Stamp(AlgorithmResult& r, const KSubnetwork& subnet) {
  r.subnetworks.push_back(subnet);
}

}  // namespace

std::uint64_t DeriveSeed(std::uint64_t master, std::uint64_t stream) {
  return MixPair(master, stream);
}

std::vector<NodeId> PickSeeds(const Graph& graph, std::size_t count, double percentile,
                              std::uint64_t rng_seed) {
  if (!(percentile > 0.0) || percentile > 100.0) {
    throw Error(ErrorCode::kInvalidArgument, "percentile must be in (0, 100]");
  }
  if (count == 0) throw Error(ErrorCode::kInvalidArgument, "seed count must be positive");
  const std::size_t n = graph.num_nodes();
  const auto pool_size = std::min<std::size_t>(
      n, static_cast<std::size_t>(std::ceil(percentile / 100.0 * static_cast<double>(n))));
  if (count > pool_size) {
    throw Error(ErrorCode::kPoolTooSmall, "requested " + std::to_string(count) +
                                              " seeds from a pool of " +
                                              std::to_string(pool_size));
  }
  std::vector<NodeId> pool(n);
  for (NodeId u = 0; u < n; ++u) pool[u] = u;
  std::stable_sort(pool.begin(), pool.end(), [&](NodeId a, NodeId b) {
    return graph.OutDegree(a) > graph.OutDegree(b);
  });
  pool.resize(pool_size);
  Engine engine = DeriveEngine(rng_seed, 0);
  for (std::size_t i = 0; i < count; ++i) {
    std::swap(pool[i], pool[i + UniformBelow(engine, pool_size - i)]);
  }
  pool.resize(count);
  return pool;
}

std::vector<NodeId> ParseSeedList(const Graph& graph, std::string_view list) {
  std::vector<NodeId> seeds;
  std::size_t pos = 0;
  while (pos <= list.size()) {
    const std::size_t comma = std::min(list.find(',', pos), list.size());
    const std::string label = Trim(list.substr(pos, comma - pos));
    pos = comma + 1;
    if (label.empty()) continue;
    const auto id = graph.FindLabel(label);
    if (!id) throw Error(ErrorCode::kUnknownNode, "unknown seed '" + label + "'");
    if (std::find(seeds.begin(), seeds.end(), *id) != seeds.end()) {
      throw Error(ErrorCode::kInvalidArgument, "duplicate seed '" + label + "'");
    }
    seeds.push_back(*id);
  }
  if (seeds.empty()) throw Error(ErrorCode::kInvalidArgument, "empty seed list");
  return seeds;
}

const std::vector<std::string>& KnownAlgorithms() {
  static const std::vector<std::string> kAll = {
      "psna",       "sketch",  "ori-degree", "ori-fof",
      "ori-random", "bst-degree", "bst-fof", "bst-random"};
  return kAll;
}

void Evaluate(const KSubnetwork& subnet, std::span<const NodeId> seeds, std::size_t num_sims,
              std::uint64_t mc_seed, const InfluenceEstimate& full, AlgorithmResult& out) {
  const Graph& g = subnet.parent();
  out.influence = AggregateSeedInfluence(subnet, seeds, num_sims, mc_seed);
  out.i_ratio = full.mean > 0.0 ? out.influence.mean / full.mean : 0.0;
  out.e_ratio = g.num_edges() > 0
                    ? static_cast<double>(subnet.num_edges()) / static_cast<double>(g.num_edges())
                    : 0.0;
  out.n_ratio = static_cast<double>(subnet.num_members()) / static_cast<double>(g.num_nodes());
}

ExperimentReport RunOnGraph(const Graph& graph, std::span<const NodeId> seeds,
                            const ExperimentConfig& config) {
  if (config.num_sims < 1) throw Error(ErrorCode::kInvalidArgument, "num_sims must be >= 1");
  for (const std::string& a : config.algorithms) {
    const auto& known = KnownAlgorithms();
    if (std::find(known.begin(), known.end(), a) == known.end()) {
      throw Error(ErrorCode::kInvalidArgument, "unknown algorithm '" + a + "'");
    }
  }
  ExperimentReport report;
  report.seeds.assign(seeds.begin(), seeds.end());
  const std::uint64_t mc_seed = DeriveSeed(config.rng_seed, 3);
  report.metadata["nodes"] = std::to_string(graph.num_nodes());
  report.metadata["edges"] = std::to_string(graph.num_edges());
  report.metadata["k"] = std::to_string(config.k);
  report.metadata["epsilon"] = FormatProb(config.epsilon);
  report.metadata["num_sims"] = std::to_string(config.num_sims);
  report.metadata["rng_seed"] = std::to_string(config.rng_seed);
  report.metadata["mc_seed"] = std::to_string(mc_seed);
  if (config.algorithms.empty()) return report;

  report.full_influence =
      AggregateSeedInfluence(DiffusionView::FromGraph(graph), seeds, config.num_sims, mc_seed);

  std::optional<PsnaResult> psna;
  auto ensure_psna = [&]() -> const PsnaResult& {
    if (!psna) {
      PsnaOptions options;
      options.epsilon = config.epsilon;
      psna = Psna(graph, seeds, config.k, options);
      report.psna_trace = psna->trace;
    }
    return *psna;
  };

  for (const std::string& name : config.algorithms) {
    AlgorithmResult row;
    row.algorithm = name;
    try {
      if (name == "psna") {
        const PsnaResult& p = ensure_psna();
        Stamp(row, p.subnet);
        row.iterations = p.trace.num_iterations;
        row.expansion_ms = p.expansion_ms;
        row.total_ms = p.total_ms;
      } else if (name == "sketch") {
        if (seeds.size() != 1) {
          throw Error(ErrorCode::kInvalidArgument, "sketch supports a single seed only");
        }
        const auto start = Clock::now();
        Stamp(row, SubnetworkAugmentationSketch(graph, seeds[0], config.k));
        row.total_ms = MillisSince(start);
      } else {
        const bool boosted = name.starts_with("bst-");
        Strategy strategy{ParseStrategyKind(name.substr(4)), 0};
        const KSubnetwork* base = nullptr;
        if (boosted) {
          const PsnaResult& p = ensure_psna();
          base = &p.expansion;
          row.iterations = p.trace.num_iterations;
          row.expansion_ms = p.expansion_ms;
        }
        const int runs = strategy.kind == StrategyKind::kRandom ? kRandomBaselineRuns : 1;
        const auto start = Clock::now();
        for (int r = 0; r < runs; ++r) {
          strategy.rng_seed = DeriveSeed(config.rng_seed, 16 + static_cast<std::uint64_t>(r));
          Stamp(row, SelectBaseline(graph, seeds, config.k, strategy, base));
        }
        row.total_ms = row.expansion_ms + MillisSince(start) / runs;
      }

      // Random baselines report the mean over their runs.
      double mean = 0.0, var = 0.0, ir = 0.0, er = 0.0, nr = 0.0;
      for (const KSubnetwork& s : row.subnetworks) {
        AlgorithmResult one;
        Evaluate(s, seeds, config.num_sims, mc_seed, report.full_influence, one);
        mean += one.influence.mean;
        var += one.influence.std_error * one.influence.std_error;
        ir += one.i_ratio;
        er += one.e_ratio;
        nr += one.n_ratio;
      }
      const double runs = static_cast<double>(row.subnetworks.size());
      row.influence = {mean / runs, config.num_sims, std::sqrt(var) / runs};
      row.i_ratio = ir / runs;
      row.e_ratio = er / runs;
      row.n_ratio = nr / runs;
    } catch (const std::exception& e) {
      report.failure = name + ": " + e.what();
      return report;
    }
    report.results.push_back(std::move(row));
  }
  return report;
}

void WriteReportCsv(std::ostream& out, const ExperimentReport& report) {
  out << "algorithm,influence,std_err,i_ratio,e_ratio,n_ratio,iterations,expansion_ms,"
         "total_ms\n";
  for (const AlgorithmResult& r : report.results) {
    out << r.algorithm << ',' << FormatProb(r.influence.mean) << ','
        << FormatProb(r.influence.std_error) << ',' << FormatProb(r.i_ratio) << ','
        << FormatProb(r.e_ratio) << ',' << FormatProb(r.n_ratio) << ',' << r.iterations << ','
        << r.expansion_ms << ',' << r.total_ms << '\n';
  }
  if (!report.failure.empty()) out << "# FAILED " << report.failure << '\n';
}

KSubnetwork ReadSubnetwork(std::istream& in, const Graph& parent, int k,
                           std::span<const NodeId> extra_members) {
  KSubnetwork subnet(parent, k, extra_members);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string a, b;
    if (!(fields >> a) || a[0] == '#') continue;
    if (!(fields >> b)) throw ParseError(ErrorCode::kMalformedLine, line_no, "expected two labels");
    const auto u = parent.FindLabel(a);
    const auto v = parent.FindLabel(b);
    if (!u || !v) {
      throw ParseError(ErrorCode::kUnknownNode, line_no, "unknown label");
    }
    subnet.InsertEdge(*u, *v, EdgeMark::kNative);
  }
  return subnet;
}

Graph LoadGraphFile(const std::string& path, bool undirected) {
  std::ifstream in = OpenInput(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  std::istringstream stream(text);
  return undirected ? UndirectedToDirected(stream) : LoadEdgeList(stream, LooksWeighted(text));
}

ExperimentReport RunExperiment(const ExperimentConfig& config) {
  Graph graph = LoadGraphFile(config.graph_path, config.undirected);
  if (config.weight_model != "file") {
    WeightModelConfig wc;
    wc.lambda1 = config.lambda1;
    wc.lambda2 = config.lambda2;
    wc.rng_seed = DeriveSeed(config.rng_seed, 1);
    std::optional<IntimacyMap> intimacy;
    if (config.weight_model == "trivalency") {
      wc.model = WeightModel::kTrivalency;
    } else if (config.weight_model == "intimacy") {
      wc.model = WeightModel::kIntimacy;
      std::ifstream in = OpenInput(config.intimacy_path);
      intimacy = LoadIntimacy(in, graph);
    } else {
      throw Error(ErrorCode::kInvalidArgument,
                  "unknown weight model '" + config.weight_model + "'");
    }
    graph = ApplyWeightModel(graph, wc, intimacy ? &*intimacy : nullptr);
  }
  const std::vector<NodeId> seeds =
      config.seeds.empty() ? PickSeeds(graph, config.seed_count, config.seed_percentile,
                                       DeriveSeed(config.rng_seed, 2))
                           : ParseSeedList(graph, config.seeds);

  ExperimentReport report = RunOnGraph(graph, seeds, config);
  report.metadata["graph"] = config.graph_path;
  report.metadata["weight_model"] = config.weight_model;

  if (!config.output_dir.empty()) {
    const std::filesystem::path dir(config.output_dir);
    std::filesystem::create_directories(dir);
    {
      auto out = OpenOutput(dir / "report.csv");
      WriteReportCsv(out, report);
    }
    {
      auto out = OpenOutput(dir / "seeds.txt");
      for (NodeId s : seeds) out << graph.label(s) << '\n';
    }
    {
      auto out = OpenOutput(dir / "graph.txt");
      WriteEdgeList(out, graph);
    }
    {
      auto out = OpenOutput(dir / "labels.map");
      WriteLabelMap(out, graph);
    }
    {
      auto out = OpenOutput(dir / "metadata.txt");
      for (const auto& [key, value] : report.metadata) out << key << '=' << value << '\n';
    }
    if (report.psna_trace) {
      auto out = OpenOutput(dir / "psna_trace.csv");
      WriteTraceCsv(out, *report.psna_trace);
    }
    for (const AlgorithmResult& r : report.results) {
      for (std::size_t i = 0; i < r.subnetworks.size(); ++i) {
        const std::string name = r.subnetworks.size() == 1
                                     ? r.algorithm + ".edges"
                                     : r.algorithm + "-" + std::to_string(i) + ".edges";
        auto out = OpenOutput(dir / name);
        r.subnetworks[i].Write(out);
      }
    }
  }
  if (!report.failure.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "experiment failed: " + report.failure);
  }
  return report;
}

}  // namespace imcsn
