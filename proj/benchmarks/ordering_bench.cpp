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

#include <benchmark/benchmark.h>

#include "qtn/circuit.hpp"
#include "qtn/ordering.hpp"
#include "qtn/tensornet.hpp"

namespace {

qtn::LineGraph qaoa_line_graph(int n, int p) {
  const qtn::ProblemGraph g = qtn::random_regular_graph(n, 3, 11);
  const std::vector<double> angles(static_cast<std::size_t>(p), 0.4);
  const qtn::Circuit c = qtn::build_qaoa_circuit(g, angles, angles);
  const qtn::Bits zeros(static_cast<std::size_t>(n), 0);
  return qtn::line_graph(qtn::apply_fixed(qtn::circuit_to_network(c, zeros, qtn::OutputSpec::fixed(zeros))));
}

void BM_Greedy(benchmark::State& state) {
  const qtn::LineGraph g = qaoa_line_graph(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(qtn::greedy_order(g));
  state.counters["vertices"] = g.num_vertices();
}
BENCHMARK(BM_Greedy)->Arg(60)->Arg(100)->Arg(210);

void BM_RGreedy(benchmark::State& state) {
  const qtn::LineGraph g = qaoa_line_graph(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(qtn::rgreedy_order(g, {0.5, 10, 3}));
  state.counters["vertices"] = g.num_vertices();
}
BENCHMARK(BM_RGreedy)->Arg(60)->Arg(100);

}  // namespace
