// Copyright 2026 The qtn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "qtn/line_graph.hpp"

namespace qtn {

/// A vertex elimination order together with its replayed cost.
struct EliminationOrder {
  std::vector<Label> order;
  /// step_degrees[i]: degree of order[i] after order[0..i) were eliminated.
  std::vector<int> step_degrees;
  /// Contraction width, the maximum of step_degrees (0 when empty).
  int width = 0;

  friend bool operator==(const EliminationOrder&, const EliminationOrder&) = default;
};

/// Orderer signature: (graph, labels that must stay uneliminated) -> order
/// over the remaining vertices. Excluded vertices still accrue fill-in.
using Orderer = std::function<EliminationOrder(const LineGraph&, std::span<const Label>)>;

LineGraph eliminate_vertex(const LineGraph& g, Label v);

/// Replays `order` on a copy of `g`. `order` must be a permutation of the
/// vertices not in `exclude`.
EliminationOrder width_of_order(const LineGraph& g, std::span<const Label> order,
                                std::span<const Label> exclude = {});

/// Minimum-degree greedy elimination; ties go to the smallest label.
EliminationOrder greedy_order(const LineGraph& g, std::span<const Label> exclude = {});

struct RGreedyParams {
  double tau = 0.5;
  int reps = 10;
  std::uint64_t seed = 0;
};

struct RGreedyResult {
  EliminationOrder best;
  std::vector<int> pass_widths;
  int best_pass = 0;
};

/// Boltzmann selection probabilities exp(-degree/tau), normalized.
std::vector<double> boltzmann_probabilities(std::span<const int> degrees, double tau);

/// Randomized greedy: `reps` independent passes, each sampling the next
/// vertex with probability proportional to exp(-degree/tau). Pass k draws
/// from its own stream derived from (seed, k). The narrowest pass wins,
/// earliest pass on ties.
RGreedyResult rgreedy_search(const LineGraph& g, const RGreedyParams& params,
                             std::span<const Label> exclude = {});
EliminationOrder rgreedy_order(const LineGraph& g, const RGreedyParams& params,
                               std::span<const Label> exclude = {});

inline constexpr int kMaxBruteforceVertices = 14;

/// Exact minimum-width order by dynamic programming over eliminated
/// subsets, O(2^V * V^2). Throws for graphs above kMaxBruteforceVertices.
EliminationOrder optimal_order_bruteforce(const LineGraph& g);

Orderer greedy_orderer();
Orderer rgreedy_orderer(RGreedyParams params);

/// "greedy" or "rgreedy_<tau>_<reps>".
std::string orderer_name(const std::string& algo, const RGreedyParams& params);

}  // namespace qtn
