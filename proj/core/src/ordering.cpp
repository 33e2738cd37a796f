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

#include "qtn/ordering.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <set>

#include "qtn/error.hpp"
#include "qtn/random.hpp"

namespace qtn {

namespace {

std::vector<Label> eliminable(const LineGraph& g, std::span<const Label> exclude) {
  std::vector<Label> out;
  const std::set<Label> skip(exclude.begin(), exclude.end());
  for (Label v : g.vertices()) {
    if (!skip.contains(v)) out.push_back(v);
  }
  return out;
}

void push_step(EliminationOrder& order, Label v, int degree) {
  order.order.push_back(v);
  order.step_degrees.push_back(degree);
  order.width = std::max(order.width, degree);
}

}  // namespace

LineGraph eliminate_vertex(const LineGraph& g, Label v) {
  LineGraph out = g;
  out.eliminate(v);
  return out;
}

EliminationOrder width_of_order(const LineGraph& g, std::span<const Label> order,
                                std::span<const Label> exclude) {
  std::vector<Label> expected = eliminable(g, exclude);
  std::vector<Label> given(order.begin(), order.end());
  std::sort(given.begin(), given.end());
  if (given != expected) {
    throw ValidationError("order is not a permutation of the graph's eliminable vertices");
  }
  LineGraph work = g;
  EliminationOrder out;
  out.order.reserve(order.size());
  out.step_degrees.reserve(order.size());
  for (Label v : order) {
    push_step(out, v, work.degree(v));
    work.eliminate(v);
  }
  return out;
}

EliminationOrder greedy_order(const LineGraph& g, std::span<const Label> exclude) {
  std::vector<Label> candidates = eliminable(g, exclude);
  LineGraph work = g;
  EliminationOrder out;
  out.order.reserve(candidates.size());
  out.step_degrees.reserve(candidates.size());
  while (!candidates.empty()) {
    std::size_t best = 0;
    int best_degree = work.degree(candidates[0]);
    for (std::size_t i = 1; i < candidates.size() && best_degree > 0; ++i) {
      const int d = work.degree(candidates[i]);
      if (d < best_degree) {
        best = i;
        best_degree = d;
      }
    }
    const Label v = candidates[best];
    push_step(out, v, best_degree);
    work.eliminate(v);
    candidates.erase(candidates.begin() + static_cast<std::ptrdiff_t>(best));
  }
  return out;
}

std::vector<double> boltzmann_probabilities(std::span<const int> degrees, double tau) {
  if (!(tau > 0.0)) throw ValidationError("tau must be positive");
  std::vector<double> p(degrees.size(), 0.0);
  if (degrees.empty()) return p;
  // Shifting by the minimum degree leaves the distribution unchanged and
  // keeps the weights finite for small tau.
  const int lo = *std::min_element(degrees.begin(), degrees.end());
  double total = 0.0;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    p[i] = std::exp(-static_cast<double>(degrees[i] - lo) / tau);
    total += p[i];
  }
  for (double& x : p) x /= total;
  return p;
}

namespace {

EliminationOrder rgreedy_pass(const LineGraph& g, std::vector<Label> candidates, double tau,
                              std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  LineGraph work = g;
  EliminationOrder out;
  out.order.reserve(candidates.size());
  out.step_degrees.reserve(candidates.size());
  std::vector<int> degrees;
  std::vector<double> weights;
  while (!candidates.empty()) {
    degrees.resize(candidates.size());
    int lo = std::numeric_limits<int>::max();
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      degrees[i] = work.degree(candidates[i]);
      lo = std::min(lo, degrees[i]);
    }
    weights.resize(candidates.size());
    double total = 0.0;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      weights[i] = std::exp(-static_cast<double>(degrees[i] - lo) / tau);
      total += weights[i];
    }
    const double target = uniform01(rng) * total;
    std::size_t pick = candidates.size() - 1;
    double cumulative = 0.0;
    for (std::size_t i = 0; i < candidates.size(); ++i) {
      cumulative += weights[i];
      if (target < cumulative && weights[i] > 0.0) {
        pick = i;
        break;
      }
    }
    // Rounding can leave `pick` on a zero-weight tail; fall back to a minimum.
    if (weights[pick] == 0.0) {
      pick = static_cast<std::size_t>(std::find(degrees.begin(), degrees.end(), lo) - degrees.begin());
    }
    const Label v = candidates[pick];
    push_step(out, v, degrees[pick]);
    work.eliminate(v);
    candidates.erase(candidates.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return out;
}

}  // namespace

RGreedyResult rgreedy_search(const LineGraph& g, const RGreedyParams& params,
                             std::span<const Label> exclude) {
  if (!(params.tau > 0.0)) throw ValidationError("rgreedy: tau must be positive");
  if (params.reps < 1) throw ValidationError("rgreedy: need at least one repetition");
  const std::vector<Label> candidates = eliminable(g, exclude);
  RGreedyResult result;
  for (int pass = 0; pass < params.reps; ++pass) {
    EliminationOrder order = rgreedy_pass(g, candidates, params.tau,
                                          derive_seed(params.seed, static_cast<std::uint64_t>(pass)));
    result.pass_widths.push_back(order.width);
    if (pass == 0 || order.width < result.best.width) {
      result.best = std::move(order);
      result.best_pass = pass;
    }
  }
  return result;
}

EliminationOrder rgreedy_order(const LineGraph& g, const RGreedyParams& params,
                               std::span<const Label> exclude) {
  return rgreedy_search(g, params, exclude).best;
}

EliminationOrder optimal_order_bruteforce(const LineGraph& g) {
  const std::vector<Label> verts = g.vertices();
  const int n = static_cast<int>(verts.size());
  if (n > kMaxBruteforceVertices) {
    throw ValidationError("optimal_order_bruteforce: graph has " + std::to_string(n) +
                          " vertices, limit is " + std::to_string(kMaxBruteforceVertices));
  }
  if (n == 0) return {};

  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (g.adjacent(verts[static_cast<std::size_t>(i)], verts[static_cast<std::size_t>(j)])) {
        adj[static_cast<std::size_t>(i)] |= 1U << j;
      }
    }
  }
  // Degree of v when `eliminated` is already gone: vertices outside the
  // set reachable from v through eliminated vertices only.
  auto step_degree = [&](std::uint32_t eliminated, int v) {
    std::uint32_t component = 1U << v;
    std::uint32_t frontier = adj[static_cast<std::size_t>(v)] & eliminated;
    while (frontier != 0) {
      component |= frontier;
      std::uint32_t next = 0;
      for (std::uint32_t f = frontier; f != 0; f &= f - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
      frontier = next & eliminated & ~component;
    }
    std::uint32_t reach = 0;
    for (std::uint32_t c = component; c != 0; c &= c - 1) reach |= adj[static_cast<std::size_t>(std::countr_zero(c))];
    return std::popcount(reach & ~eliminated & ~(1U << v));
  };

  const std::uint32_t full = (n == 32) ? ~0U : ((1U << n) - 1);
  std::vector<int> best(std::size_t{full} + 1, std::numeric_limits<int>::max());
  std::vector<std::int8_t> last(std::size_t{full} + 1, -1);
  best[0] = 0;
  for (std::uint32_t set = 1; set <= full; ++set) {
    for (std::uint32_t rest = set; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const std::uint32_t before = set & ~(1U << v);
      const int w = std::max(best[before], step_degree(before, v));
      if (w < best[set]) {
        best[set] = w;
        last[set] = static_cast<std::int8_t>(v);
      }
    }
  }
  std::vector<Label> order(static_cast<std::size_t>(n));
  std::uint32_t set = full;
  for (int pos = n - 1; pos >= 0; --pos) {
    const int v = last[set];
    order[static_cast<std::size_t>(pos)] = verts[static_cast<std::size_t>(v)];
    set &= ~(1U << v);
  }
  return width_of_order(g, order);
}

Orderer greedy_orderer() {
  return [](const LineGraph& g, std::span<const Label> exclude) { return greedy_order(g, exclude); };
}

Orderer rgreedy_orderer(RGreedyParams params) {
  return [params](const LineGraph& g, std::span<const Label> exclude) {
    return rgreedy_order(g, params, exclude);
  };
}

std::string orderer_name(const std::string& algo, const RGreedyParams& params) {
  if (algo != "rgreedy") return algo;
  char buf[64];
  std::snprintf(buf, sizeof(buf), "rgreedy_%g_%d", params.tau, params.reps);
  return buf;
}

}  // namespace qtn
