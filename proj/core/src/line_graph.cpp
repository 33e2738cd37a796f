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

#include "qtn/line_graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "qtn/error.hpp"

namespace qtn {

LineGraph::LineGraph(int capacity) { grow(std::max(capacity, 0)); }

void LineGraph::grow(int capacity) {
  if (capacity <= capacity_) return;
  const std::size_t words = (static_cast<std::size_t>(capacity) + 63) / 64;
  std::vector<std::uint64_t> bits(static_cast<std::size_t>(capacity) * words, 0);
  for (int v = 0; v < capacity_; ++v) {
    std::copy_n(row(v), words_, bits.data() + static_cast<std::size_t>(v) * words);
  }
  bits_ = std::move(bits);
  words_ = words;
  capacity_ = capacity;
  present_.resize(static_cast<std::size_t>(capacity), 0);
  degree_.resize(static_cast<std::size_t>(capacity), 0);
}

void LineGraph::check(Label v) const {
  if (!contains(v)) throw ValidationError("vertex " + std::to_string(v) + " is not in the graph");
}

int LineGraph::num_edges() const {
  long total = 0;
  for (int v = 0; v < capacity_; ++v) total += degree_[static_cast<std::size_t>(v)];
  return static_cast<int>(total / 2);
}

int LineGraph::degree(Label v) const {
  check(v);
  return degree_[static_cast<std::size_t>(v)];
}

bool LineGraph::adjacent(Label a, Label b) const {
  if (!contains(a) || !contains(b)) return false;
  return (row(a)[static_cast<std::size_t>(b) / 64] >> (b % 64)) & 1U;
}

std::vector<Label> LineGraph::vertices() const {
  std::vector<Label> out;
  out.reserve(static_cast<std::size_t>(count_));
  for (int v = 0; v < capacity_; ++v) {
    if (present_[static_cast<std::size_t>(v)]) out.push_back(v);
  }
  return out;
}

std::vector<Label> LineGraph::neighbors(Label v) const {
  check(v);
  std::vector<Label> out;
  out.reserve(static_cast<std::size_t>(degree_[static_cast<std::size_t>(v)]));
  const std::uint64_t* r = row(v);
  for (std::size_t w = 0; w < words_; ++w) {
    std::uint64_t word = r[w];
    while (word != 0) {
      out.push_back(static_cast<Label>(w * 64 + static_cast<std::size_t>(std::countr_zero(word))));
      word &= word - 1;
    }
  }
  return out;
}

void LineGraph::add_vertex(Label v) {
  if (v < 0) throw ValidationError("negative vertex label");
  if (v >= capacity_) grow(std::max(v + 1, capacity_ * 2));
  if (!present_[static_cast<std::size_t>(v)]) {
    present_[static_cast<std::size_t>(v)] = 1;
    ++count_;
  }
}

void LineGraph::add_edge(Label a, Label b) {
  add_vertex(a);
  add_vertex(b);
  if (a == b || adjacent(a, b)) return;
  row(a)[static_cast<std::size_t>(b) / 64] |= std::uint64_t{1} << (b % 64);
  row(b)[static_cast<std::size_t>(a) / 64] |= std::uint64_t{1} << (a % 64);
  ++degree_[static_cast<std::size_t>(a)];
  ++degree_[static_cast<std::size_t>(b)];
}

void LineGraph::add_clique(std::span<const Label> labels) {
  for (Label v : labels) add_vertex(v);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    for (std::size_t j = i + 1; j < labels.size(); ++j) add_edge(labels[i], labels[j]);
  }
}

void LineGraph::remove_vertex(Label v) {
  check(v);
  for (Label u : neighbors(v)) {
    row(u)[static_cast<std::size_t>(v) / 64] &= ~(std::uint64_t{1} << (v % 64));
    --degree_[static_cast<std::size_t>(u)];
  }
  std::fill_n(row(v), words_, 0);
  degree_[static_cast<std::size_t>(v)] = 0;
  present_[static_cast<std::size_t>(v)] = 0;
  --count_;
}

void LineGraph::eliminate(Label v) {
  check(v);
  const std::vector<Label> nbrs = neighbors(v);
  const std::vector<std::uint64_t> mask(row(v), row(v) + words_);
  for (Label u : nbrs) {
    std::uint64_t* r = row(u);
    int deg = 0;
    for (std::size_t w = 0; w < words_; ++w) {
      r[w] |= mask[w];
      if (w == static_cast<std::size_t>(u) / 64) r[w] &= ~(std::uint64_t{1} << (u % 64));
      if (w == static_cast<std::size_t>(v) / 64) r[w] &= ~(std::uint64_t{1} << (v % 64));
      deg += std::popcount(r[w]);
    }
    degree_[static_cast<std::size_t>(u)] = deg;
  }
  std::fill_n(row(v), words_, 0);
  degree_[static_cast<std::size_t>(v)] = 0;
  present_[static_cast<std::size_t>(v)] = 0;
  --count_;
}

bool operator==(const LineGraph& a, const LineGraph& b) {
  const auto va = a.vertices();
  if (va != b.vertices()) return false;
  return std::all_of(va.begin(), va.end(), [&](Label v) { return a.neighbors(v) == b.neighbors(v); });
}

}  // namespace qtn
