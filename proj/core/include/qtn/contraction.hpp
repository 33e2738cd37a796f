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

#include <span>
#include <string>
#include <vector>

#include "qtn/ordering.hpp"
#include "qtn/tensor.hpp"
#include "qtn/tensornet.hpp"

namespace qtn {

/// Tensors waiting for `index` to be summed out; every one carries it.
struct Bucket {
  Label index = 0;
  std::vector<Tensor> tensors;
};

struct ContractionResult {
  /// Scalar result (networks without open labels).
  Complex value{0.0, 0.0};
  /// Row-major over `open_labels`, first label most significant.
  std::vector<Complex> batch;
  std::vector<Label> open_labels;
  /// Largest rank of any tensor produced by a bucket contraction.
  int peak_rank = 0;

  bool is_batch() const noexcept { return !open_labels.empty(); }
};

/// Product of `tensors` summed over `index`; result labels ascending.
Tensor contract_bucket(std::span<const Tensor> tensors, Label index);

/// State of a bucket elimination that may be paused between segments of
/// an order. Scalars are folded into `scalar` as soon as they appear.
struct PartialContraction {
  std::vector<Tensor> tensors;
  Complex scalar{1.0, 0.0};
  int peak_rank = 0;

  static PartialContraction from(const std::vector<Tensor>& tensors);
};

/// Eliminates `segment` in order. Each tensor is placed in the bucket of
/// its earliest label in the segment; tensors not touching the segment
/// pass through untouched.
PartialContraction eliminate_segment(PartialContraction state, std::span<const Label> segment);

/// Multiplies the remaining tensors (which may only carry `open` labels)
/// into the final scalar or batch.
ContractionResult finish_contraction(PartialContraction state, std::span<const Label> open);

/// Full bucket-elimination contraction. Fixed labels, if any, are applied
/// first. `order` must cover exactly the non-open labels carried by tensors.
ContractionResult contract(const TensorNetwork& net, const EliminationOrder& order);

/// Labels that an order for `net` must cover: carried by a tensor, not
/// fixed, not open. Ascending.
std::vector<Label> contraction_labels(const TensorNetwork& net);

struct CostEstimate {
  double log2_memory = 0.0;  // bytes, 16-byte complex entries
  double log2_flops = 0.0;
};

CostEstimate cost_estimate(const EliminationOrder& order);

struct CostRecord {
  int step = 0;
  int neighbors = 0;
  double log2_cost = 0.0;
};

/// Per-step cost 2^(neighbors+1), replayed on the network's line graph.
std::vector<CostRecord> cost_profile(const TensorNetwork& net, const EliminationOrder& order);

/// "step,neighbors,log2_cost" CSV.
std::string cost_profile_csv(std::span<const CostRecord> records);

}  // namespace qtn
