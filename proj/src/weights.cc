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

#include "imcsn/weights.h"

#include <algorithm>
#include <charconv>
#include <istream>
#include <sstream>
#include <string>

#include "imcsn/error.h"
#include "imcsn/rng.h"

namespace imcsn {

Graph AssignTrivalency(const Graph& graph, std::uint64_t rng_seed) {
  Engine engine(rng_seed);
  std::vector<double> probs(graph.num_edges());
  for (double& p : probs) {
    p = kTrivalencyLevels[UniformBelow(engine, kTrivalencyLevels.size())];
  }
  return graph.WithProbabilities(std::move(probs));
}

double EpidemicThreshold(const Graph& graph) {
  // Degrees are integers, so the sums are exact well past any real graph.
  std::uint64_t sum = 0;
  std::uint64_t sum_sq = 0;
  for (NodeId v = 0; v < graph.num_nodes(); ++v) {
    const std::uint64_t d = graph.OutDegree(v);
    sum += d;
    sum_sq += d * d;
  }
  if (sum_sq <= sum) {
    throw Error(ErrorCode::kDegenerateGraph,
                "epidemic threshold undefined: sum d^2 <= sum d");
  }
  return static_cast<double>(sum) / static_cast<double>(sum_sq - sum);
}

Graph IntimacyToProbability(const Graph& graph, const IntimacyMap& intimacy,
                            double lambda1, double lambda2) {
  if (intimacy.values.size() != graph.num_edges()) {
    throw Error(ErrorCode::kInvalidArgument,
                "intimacy map does not cover the graph's edges");
  }
  if (!(lambda1 > 0.0) || !(lambda2 > 0.0) || lambda1 > lambda2) {
    throw Error(ErrorCode::kInvalidArgument,
                "need 0 < lambda1 <= lambda2");
  }
  const auto [lo_it, hi_it] =
      std::minmax_element(intimacy.values.begin(), intimacy.values.end());
  if (lo_it == intimacy.values.end() || *lo_it == *hi_it) {
    throw Error(ErrorCode::kConstantIntimacy,
                "intimacy is constant; the mapping is undefined");
  }
  const double beta_c = EpidemicThreshold(graph);
  const double lo = static_cast<double>(*lo_it);
  const double span = static_cast<double>(*hi_it) - lo;
  const double low_p = lambda1 * beta_c;
  const double high_p = lambda2 * beta_c;
  std::vector<double> probs(graph.num_edges());
  for (std::size_t e = 0; e < probs.size(); ++e) {
    const std::int64_t value = intimacy.values[e];
    // Endpoints are pinned so the extremes land exactly on the range bounds.
    if (value == *lo_it) {
      probs[e] = low_p;
    } else if (value == *hi_it) {
      probs[e] = high_p;
    } else {
      const double p = (static_cast<double>(value) - lo) / span *
                           (lambda2 - lambda1) * beta_c + low_p;
      probs[e] = std::clamp(p, low_p, high_p);
    }
  }
  if (high_p > 1.0) {
    throw Error(ErrorCode::kProbabilityOutOfRange,
                "lambda2 * beta_c exceeds 1");
  }
  return graph.WithProbabilities(std::move(probs));
}

IntimacyMap LoadIntimacy(std::istream& in, const Graph& graph) {
  IntimacyMap map;
  map.values.assign(graph.num_edges(), -1);
  std::string line;
  int line_no = 0;
  std::size_t assigned = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string u, v, value_text, extra;
    if (!(fields >> u) || u.front() == '#') continue;
    if (!(fields >> v >> value_text) || (fields >> extra)) {
      throw ParseError(ErrorCode::kMalformedLine, line_no,
                       "expected 'u v intimacy'");
    }
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(
        value_text.data(), value_text.data() + value_text.size(), value);
    if (ec != std::errc() || ptr != value_text.data() + value_text.size() ||
        value < 0) {
      throw ParseError(ErrorCode::kMalformedLine, line_no,
                       "intimacy must be a non-negative integer");
    }
    const auto su = graph.FindLabel(u);
    const auto sv = graph.FindLabel(v);
    const auto edge = (su && sv) ? graph.FindEdge(*su, *sv) : std::nullopt;
    if (!edge) {
      throw ParseError(ErrorCode::kEdgeNotInParent, line_no,
                       "edge (" + u + "," + v + ") not in graph");
    }
    if (map.values[*edge] >= 0) {
      throw ParseError(ErrorCode::kDuplicateEdge, line_no,
                       "duplicate intimacy for (" + u + "," + v + ")");
    }
    map.values[*edge] = value;
    ++assigned;
  }
  if (assigned != graph.num_edges()) {
    throw Error(ErrorCode::kInvalidArgument,
                "intimacy file covers " + std::to_string(assigned) + " of " +
                    std::to_string(graph.num_edges()) + " edges");
  }
  return map;
}

Graph ApplyWeightModel(const Graph& graph, const WeightModelConfig& config,
                       const IntimacyMap* intimacy) {
  switch (config.model) {
    case WeightModel::kTrivalency:
      return AssignTrivalency(graph, config.rng_seed);
    case WeightModel::kIntimacy:
      if (intimacy == nullptr) {
        throw Error(ErrorCode::kInvalidArgument,
                    "intimacy model needs an intimacy map");
      }
      return IntimacyToProbability(graph, *intimacy, config.lambda1,
                                   config.lambda2);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown weight model");
}

}  // namespace imcsn
