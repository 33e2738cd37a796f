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

#include "qtn/contraction.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <set>
#include <sstream>
#include <unordered_map>

#include "qtn/error.hpp"

namespace qtn {

Tensor contract_bucket(std::span<const Tensor> tensors, Label index) {
  for (const Tensor& t : tensors) {
    if (!t.contains(index)) {
      throw ValidationError("contract_bucket: tensor does not carry index " + std::to_string(index));
    }
  }
  return multiply_and_sum(tensors, index);
}

PartialContraction PartialContraction::from(const std::vector<Tensor>& tensors) {
  PartialContraction state;
  state.tensors.reserve(tensors.size());
  for (const Tensor& t : tensors) {
    if (t.rank() == 0) {
      state.scalar *= t.scalar_value();
    } else {
      state.tensors.push_back(t);
    }
  }
  return state;
}

PartialContraction eliminate_segment(PartialContraction state, std::span<const Label> segment) {
  std::unordered_map<Label, std::size_t> position;
  position.reserve(segment.size() * 2);
  for (std::size_t i = 0; i < segment.size(); ++i) {
    if (!position.emplace(segment[i], i).second) {
      throw ValidationError("elimination order repeats label " + std::to_string(segment[i]));
    }
  }

  std::vector<Bucket> buckets(segment.size());
  for (std::size_t i = 0; i < segment.size(); ++i) buckets[i].index = segment[i];

  PartialContraction out;
  out.scalar = state.scalar;
  out.peak_rank = state.peak_rank;

  auto earliest = [&](const Tensor& t) {
    std::size_t best = segment.size();
    for (Label l : t.labels()) {
      if (const auto it = position.find(l); it != position.end()) best = std::min(best, it->second);
    }
    return best;
  };
  auto route = [&](Tensor t) {
    if (t.rank() == 0) {
      out.scalar *= t.scalar_value();
      return;
    }
    const std::size_t b = earliest(t);
    if (b == segment.size()) {
      out.tensors.push_back(std::move(t));
    } else {
      buckets[b].tensors.push_back(std::move(t));
    }
  };

  for (Tensor& t : state.tensors) route(std::move(t));
  state.tensors.clear();

  for (std::size_t i = 0; i < buckets.size(); ++i) {
    if (buckets[i].tensors.empty()) {
      throw ValidationError("label " + std::to_string(buckets[i].index) +
                            " is carried by no tensor at its elimination step");
    }
    Tensor merged = contract_bucket(buckets[i].tensors, buckets[i].index);
    buckets[i].tensors.clear();
    out.peak_rank = std::max(out.peak_rank, merged.rank());
    route(std::move(merged));
  }
  return out;
}

ContractionResult finish_contraction(PartialContraction state, std::span<const Label> open) {
  const std::set<Label> open_set(open.begin(), open.end());
  std::set<Label> present;
  for (const Tensor& t : state.tensors) {
    for (Label l : t.labels()) {
      if (!open_set.contains(l)) {
        throw ValidationError("label " + std::to_string(l) + " was never eliminated");
      }
      present.insert(l);
    }
  }
  ContractionResult result;
  result.peak_rank = state.peak_rank;
  if (open.empty()) {
    result.value = state.scalar;
    return result;
  }
  // Open labels carried by nothing are broadcast with a ones vector.
  for (Label l : open) {
    if (!present.contains(l)) state.tensors.emplace_back(std::vector<Label>{l}, std::vector<Complex>{1.0, 1.0});
  }
  const Tensor product = multiply_and_sum(state.tensors, std::nullopt);
  result.open_labels.assign(open.begin(), open.end());
  result.batch = values_in_order(product, open);
  for (Complex& v : result.batch) v *= state.scalar;
  return result;
}

std::vector<Label> contraction_labels(const TensorNetwork& net) {
  const std::set<Label> open(net.open.begin(), net.open.end());
  std::set<Label> labels;
  for (const Tensor& t : net.tensors) {
    for (Label l : t.labels()) {
      if (!net.fixed.contains(l) && !open.contains(l)) labels.insert(l);
    }
  }
  return {labels.begin(), labels.end()};
}

ContractionResult contract(const TensorNetwork& net, const EliminationOrder& order) {
  const TensorNetwork work = net.fixed.empty() ? net : apply_fixed(net);
  const std::set<Label> open(work.open.begin(), work.open.end());
  for (Label l : order.order) {
    if (open.contains(l)) throw ValidationError("order contains open label " + std::to_string(l));
  }
  std::vector<Label> given = order.order;
  std::sort(given.begin(), given.end());
  const std::vector<Label> needed = contraction_labels(work);
  if (given != needed) {
    std::vector<Label> missing;
    std::set_difference(needed.begin(), needed.end(), given.begin(), given.end(), std::back_inserter(missing));
    if (!missing.empty()) {
      throw ValidationError("order misses live label " + std::to_string(missing.front()));
    }
    throw ValidationError("order contains labels that are not live in the network");
  }
  PartialContraction state = eliminate_segment(PartialContraction::from(work.tensors), order.order);
  return finish_contraction(std::move(state), work.open);
}

CostEstimate cost_estimate(const EliminationOrder& order) {
  CostEstimate c;
  c.log2_memory = static_cast<double>(order.width) + 4.0;
  if (order.step_degrees.empty()) return c;
  const int top = *std::max_element(order.step_degrees.begin(), order.step_degrees.end());
  double sum = 0.0;
  for (int d : order.step_degrees) sum += std::exp2(static_cast<double>(d - top));
  c.log2_flops = static_cast<double>(top + 1) + std::log2(sum);
  return c;
}

std::vector<CostRecord> cost_profile(const TensorNetwork& net, const EliminationOrder& order) {
  const EliminationOrder replay = width_of_order(line_graph(net), order.order, net.open);
  std::vector<CostRecord> records;
  records.reserve(replay.order.size());
  for (std::size_t i = 0; i < replay.step_degrees.size(); ++i) {
    const int d = replay.step_degrees[i];
    records.push_back({static_cast<int>(i), d, static_cast<double>(d + 1)});
  }
  return records;
}

std::string cost_profile_csv(std::span<const CostRecord> records) {
  std::ostringstream out;
  out << "step,neighbors,log2_cost\n";
  for (const CostRecord& r : records) out << r.step << ',' << r.neighbors << ',' << r.log2_cost << '\n';
  return out.str();
}

}  // namespace qtn
