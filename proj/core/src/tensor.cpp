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

#include "qtn/tensor.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "qtn/error.hpp"

namespace qtn {

namespace {

std::shared_ptr<const std::vector<Complex>> make_values(std::vector<Complex> v) {
  return std::make_shared<const std::vector<Complex>>(std::move(v));
}

// Table of strided offsets: table[x] = sum of strides of the set bits of x.
std::vector<std::size_t> offset_table(std::span<const std::size_t> bit_strides) {
  std::vector<std::size_t> table(std::size_t{1} << bit_strides.size(), 0);
  for (std::size_t x = 1; x < table.size(); ++x) {
    const int low = std::countr_zero(x);
    table[x] = table[x & (x - 1)] + bit_strides[static_cast<std::size_t>(low)];
  }
  return table;
}

}  // namespace

Tensor::Tensor() : values_(make_values({Complex{1.0, 0.0}})) {}

Tensor::Tensor(std::vector<Label> labels, std::vector<Complex> values)
    : labels_(std::move(labels)) {
  for (std::size_t i = 1; i < labels_.size(); ++i) {
    if (labels_[i - 1] >= labels_[i]) throw ValidationError("tensor labels must be strictly ascending");
  }
  if (labels_.size() >= 63 || values.size() != (std::size_t{1} << labels_.size())) {
    throw ValidationError("tensor of rank " + std::to_string(labels_.size()) + " needs " +
                          "2^rank values, got " + std::to_string(values.size()));
  }
  values_ = make_values(std::move(values));
}

Tensor Tensor::scalar(Complex value) { return Tensor({}, {value}); }

Tensor Tensor::from_axes(std::span<const Label> axis_labels, std::span<const Complex> values) {
  const int rank = static_cast<int>(axis_labels.size());
  std::vector<Label> sorted(axis_labels.begin(), axis_labels.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ValidationError("tensor has a repeated index label");
  }
  if (values.size() != (std::size_t{1} << rank)) {
    throw ValidationError("tensor value count does not match rank");
  }
  // Bit position of each sorted axis inside the source linear index.
  std::vector<int> src_shift(static_cast<std::size_t>(rank));
  for (int k = 0; k < rank; ++k) {
    const auto pos = std::find(axis_labels.begin(), axis_labels.end(), sorted[k]) - axis_labels.begin();
    src_shift[static_cast<std::size_t>(k)] = rank - 1 - static_cast<int>(pos);
  }
  std::vector<Complex> out(values.size());
  for (std::size_t dst = 0; dst < out.size(); ++dst) {
    std::size_t src = 0;
    for (int k = 0; k < rank; ++k) {
      const std::size_t bit = (dst >> (rank - 1 - k)) & 1U;
      src |= bit << src_shift[static_cast<std::size_t>(k)];
    }
    out[dst] = values[src];
  }
  return Tensor(std::move(sorted), std::move(out));
}

bool Tensor::contains(Label label) const { return axis_of(label).has_value(); }

std::optional<int> Tensor::axis_of(Label label) const {
  const auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<int>(it - labels_.begin());
}

Tensor Tensor::slice(Label label, int bit) const {
  const auto axis = axis_of(label);
  if (!axis) return *this;
  const int r = rank();
  const int shift = r - 1 - *axis;
  const std::size_t low_mask = (std::size_t{1} << shift) - 1;
  const std::vector<Complex>& src = *values_;
  std::vector<Complex> out(src.size() / 2);
  const std::size_t b = static_cast<std::size_t>(bit & 1);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const std::size_t old = ((i >> shift) << (shift + 1)) | (b << shift) | (i & low_mask);
    out[i] = src[old];
  }
  std::vector<Label> labels = labels_;
  labels.erase(labels.begin() + *axis);
  return Tensor(std::move(labels), std::move(out));
}

Complex Tensor::scalar_value() const {
  if (rank() != 0) throw ValidationError("scalar_value on a tensor of rank " + std::to_string(rank()));
  return (*values_)[0];
}

Complex Tensor::at(std::span<const int> bits) const {
  if (static_cast<int>(bits.size()) != rank()) throw ValidationError("Tensor::at: wrong bit count");
  std::size_t idx = 0;
  for (int b : bits) idx = idx * 2 + static_cast<std::size_t>(b & 1);
  return (*values_)[idx];
}

Tensor multiply_and_sum(std::span<const Tensor> tensors, std::optional<Label> summed) {
  std::vector<Label> all;
  for (const Tensor& t : tensors) all.insert(all.end(), t.labels().begin(), t.labels().end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());

  std::vector<Label> out_labels;
  out_labels.reserve(all.size());
  for (Label l : all) {
    if (!summed || l != *summed) out_labels.push_back(l);
  }
  const bool has_sum = summed && std::binary_search(all.begin(), all.end(), *summed);
  const std::size_t m = out_labels.size();
  if (m >= 40) throw ValidationError("intermediate tensor rank too large: " + std::to_string(m));

  const std::size_t num_t = tensors.size();
  const std::size_t low_bits = std::min<std::size_t>(m, 10);
  const std::size_t high_bits = m - low_bits;

  std::vector<std::vector<std::size_t>> low_tables(num_t), high_tables(num_t);
  std::vector<std::size_t> sum_stride(num_t, 0);
  std::vector<const Complex*> data(num_t);
  for (std::size_t t = 0; t < num_t; ++t) {
    const Tensor& tensor = tensors[t];
    data[t] = tensor.values().data();
    const int r = tensor.rank();
    // Stride of output linear-index bit b (bit 0 = last output label).
    std::vector<std::size_t> bit_stride(m, 0);
    for (std::size_t j = 0; j < m; ++j) {
      if (const auto axis = tensor.axis_of(out_labels[j])) {
        bit_stride[m - 1 - j] = std::size_t{1} << (r - 1 - *axis);
      }
    }
    if (has_sum) {
      if (const auto axis = tensor.axis_of(*summed)) sum_stride[t] = std::size_t{1} << (r - 1 - *axis);
    }
    low_tables[t] = offset_table(std::span(bit_stride).first(low_bits));
    high_tables[t] = offset_table(std::span(bit_stride).subspan(low_bits, high_bits));
  }

  const std::size_t low_count = std::size_t{1} << low_bits;
  const std::size_t high_count = std::size_t{1} << high_bits;
  std::vector<Complex> out(low_count * high_count);
  std::vector<std::size_t> base(num_t);
  const int terms = has_sum ? 2 : 1;

  for (std::size_t hi = 0; hi < high_count; ++hi) {
    for (std::size_t t = 0; t < num_t; ++t) base[t] = high_tables[t][hi];
    Complex* dst = out.data() + hi * low_count;
    for (std::size_t lo = 0; lo < low_count; ++lo) {
      Complex acc{0.0, 0.0};
      for (int s = 0; s < terms; ++s) {
        Complex prod{1.0, 0.0};
        for (std::size_t t = 0; t < num_t; ++t) {
          prod *= data[t][base[t] + low_tables[t][lo] + static_cast<std::size_t>(s) * sum_stride[t]];
        }
        acc += prod;
      }
      dst[lo] = acc;
    }
  }
  // Summing over a label that no tensor carries multiplies by its dimension.
  if (summed && !has_sum) {
    for (Complex& v : out) v *= 2.0;
  }
  return Tensor(std::move(out_labels), std::move(out));
}

std::vector<Complex> values_in_order(const Tensor& tensor, std::span<const Label> order) {
  const int r = tensor.rank();
  if (static_cast<int>(order.size()) != r) throw ValidationError("values_in_order: label count mismatch");
  std::vector<int> shift(static_cast<std::size_t>(r));
  for (int k = 0; k < r; ++k) {
    const auto axis = tensor.axis_of(order[static_cast<std::size_t>(k)]);
    if (!axis) throw ValidationError("values_in_order: label not in tensor");
    shift[static_cast<std::size_t>(k)] = r - 1 - *axis;
  }
  const auto src = tensor.values();
  std::vector<Complex> out(src.size());
  for (std::size_t dst = 0; dst < out.size(); ++dst) {
    std::size_t idx = 0;
    for (int k = 0; k < r; ++k) {
      idx |= ((dst >> (r - 1 - k)) & 1U) << shift[static_cast<std::size_t>(k)];
    }
    out[dst] = src[idx];
  }
  return out;
}

}  // namespace qtn
