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
#include <span>
#include <vector>

#include "qtn/tensor.hpp"

namespace qtn {

/// Simple undirected graph over index labels in [0, capacity).
///
/// Adjacency is a dense bit matrix, which keeps vertex elimination (the
/// hot loop of every orderer) to a handful of word-wide ORs per neighbor.
class LineGraph {
 public:
  explicit LineGraph(int capacity = 0);

  int capacity() const noexcept { return capacity_; }
  int num_vertices() const noexcept { return count_; }
  int num_edges() const;

  bool contains(Label v) const noexcept {
    return v >= 0 && v < capacity_ && present_[static_cast<std::size_t>(v)] != 0;
  }
  int degree(Label v) const;
  bool adjacent(Label a, Label b) const;

  std::vector<Label> vertices() const;
  std::vector<Label> neighbors(Label v) const;

  /// Adds the vertex if absent; grows capacity as needed.
  void add_vertex(Label v);
  /// Adds both endpoints and the edge; a == b only adds the vertex.
  void add_edge(Label a, Label b);
  void add_clique(std::span<const Label> labels);

  /// Deletes v and its incident edges without fill-in (slicing).
  void remove_vertex(Label v);
  /// Deletes v after joining its neighborhood into a clique.
  void eliminate(Label v);

  friend bool operator==(const LineGraph& a, const LineGraph& b);

 private:
  std::uint64_t* row(Label v) { return bits_.data() + static_cast<std::size_t>(v) * words_; }
  const std::uint64_t* row(Label v) const {
    return bits_.data() + static_cast<std::size_t>(v) * words_;
  }
  void grow(int capacity);
  void check(Label v) const;

  int capacity_ = 0;
  std::size_t words_ = 0;
  int count_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::uint8_t> present_;
  std::vector<int> degree_;
};

}  // namespace qtn
