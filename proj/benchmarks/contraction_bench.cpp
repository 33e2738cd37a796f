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

#include <random>
#include <vector>

#include "qtn/contraction.hpp"

namespace {

qtn::Tensor random_tensor(std::vector<qtn::Label> labels, std::mt19937_64& rng) {
  std::normal_distribution<double> d;
  std::vector<qtn::Complex> values(std::size_t{1} << labels.size());
  for (auto& v : values) v = {d(rng), d(rng)};
  return qtn::Tensor::from_axes(std::move(labels), std::move(values));
}

// Two rank-k tensors sharing the summed label and half their other labels;
// the result has rank about 3k/2.
void BM_ContractBucket(benchmark::State& state) {
  const int k = static_cast<int>(state.range(0));
  std::mt19937_64 rng(1);
  std::vector<qtn::Label> a{0};
  std::vector<qtn::Label> b{0};
  for (int i = 1; i < k; ++i) {
    a.push_back(i);
    b.push_back(i % 2 ? i : k + i);
  }
  const std::vector<qtn::Tensor> tensors = {random_tensor(a, rng), random_tensor(b, rng)};
  for (auto _ : state) benchmark::DoNotOptimize(qtn::contract_bucket(tensors, 0));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(std::size_t{1} << (k + (k - 1) / 2)));
}
BENCHMARK(BM_ContractBucket)->DenseRange(8, 16, 4);

}  // namespace
