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

#include <complex>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace qtn {

using Complex = std::complex<double>;

/// Index label; every index has dimension 2.
using Label = int;

/// Immutable dense tensor over binary indices.
///
/// Labels are kept strictly ascending and values are row-major with the
/// first (smallest) label as the most significant bit. The value buffer is
/// shared between copies, so passing tensors around by value is cheap and
/// many contraction tasks may read the same buffer concurrently.
class Tensor {
 public:
  /// Rank-0 tensor holding 1.
  Tensor();

  /// `labels` must be strictly ascending and values.size() == 2^labels.size().
  Tensor(std::vector<Label> labels, std::vector<Complex> values);

  static Tensor scalar(Complex value);

  /// Builds a tensor from axes in arbitrary label order, transposing the
  /// data into canonical ascending layout. Repeated labels are rejected.
  static Tensor from_axes(std::span<const Label> axis_labels, std::span<const Complex> values);

  int rank() const noexcept { return static_cast<int>(labels_.size()); }
  std::size_t size() const noexcept { return values_->size(); }
  const std::vector<Label>& labels() const noexcept { return labels_; }
  std::span<const Complex> values() const noexcept { return *values_; }

  bool contains(Label label) const;
  /// Position of `label` in labels(), or nullopt.
  std::optional<int> axis_of(Label label) const;

  /// Sub-array with `label` fixed to `bit`; unchanged if the label is absent.
  Tensor slice(Label label, int bit) const;

  /// Value of the rank-0 tensor.
  Complex scalar_value() const;

  /// Value at the assignment of one bit per label (in labels() order).
  Complex at(std::span<const int> bits) const;

 private:
  std::vector<Label> labels_;
  std::shared_ptr<const std::vector<Complex>> values_;
};

/// Elementwise product of `tensors` (broadcast by label), summed over
/// `summed` if given. The result is indexed by the union of the input
/// labels minus `summed`, ascending.
Tensor multiply_and_sum(std::span<const Tensor> tensors, std::optional<Label> summed);

/// Permutes a tensor's data into the given label order (a permutation of
/// its labels); returns the row-major values in that order.
std::vector<Complex> values_in_order(const Tensor& tensor, std::span<const Label> order);

}  // namespace qtn
