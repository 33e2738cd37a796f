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

#include <map>
#include <span>
#include <string>
#include <vector>

#include "qtn/contraction.hpp"
#include "qtn/line_graph.hpp"
#include "qtn/ordering.hpp"
#include "qtn/tensornet.hpp"

namespace qtn {

/// `sliced` labels are fixed after the first `step` vertices of the
/// schedule's prefix order have been eliminated.
struct SliceRound {
  int step = 0;
  std::vector<Label> sliced;

  friend bool operator==(const SliceRound&, const SliceRound&) = default;
};

/// Bit value per sliced label.
using SliceAssignment = std::map<Label, int>;

/// A step-dependent slicing plan.
///
/// Execution eliminates prefix_order[0, rounds[0].step) once, then for each
/// of the 2^n_total assignments slices round by round, eliminating the
/// prefix segment up to the next round's step in between, and finally
/// eliminates final_order. The rounds' steps are nondecreasing and the last
/// round's step equals prefix_order.size().
struct SliceSchedule {
  std::vector<SliceRound> rounds;
  std::vector<Label> prefix_order;
  EliminationOrder final_order;
  int n_total = 0;
  int reported_width = 0;

  /// Sliced labels in round order; bit j of an assignment index (counted
  /// from the most significant of n_total bits) belongs to entry j.
  std::vector<Label> sliced_labels() const;

  friend bool operator==(const SliceSchedule&, const SliceSchedule&) = default;
};

/// Fixes every sliced label to its assigned bit in all tensors carrying it.
/// Throws if a label is carried by no tensor, is open, or is fixed.
TensorNetwork slice_network(const TensorNetwork& net, const SliceAssignment& assignment);

/// Index of the first step attaining the order's width.
std::size_t peak_step(const EliminationOrder& order);

/// Width of one candidate slicing step within a round of the search.
struct CandidateWidth {
  int step = 0;  // position in the schedule's prefix order
  int width = 0;
};

/// Per-round candidate widths collected while searching.
struct SliceSearchTrace {
  int unsliced_width = 0;
  std::vector<std::vector<CandidateWidth>> rounds;
};

/// Step-dependent slicing search. Each round orders the residual graph,
/// then for every step s up to the order's peak eliminates the first s
/// vertices, removes the r highest-degree survivors (smallest label on
/// ties) and re-orders what is left; the best s is committed. Rounds repeat
/// until n labels are sliced; the last round takes n mod r when r does not
/// divide n. Open labels are never eliminated or sliced.
///
/// A candidate's residual order is the better of a fresh `orderer` run and
/// the round's current order with the sliced vertices dropped.
SliceSchedule find_slice_schedule(const LineGraph& g, int n, int r, const Orderer& orderer,
                                  std::span<const Label> open = {}, SliceSearchTrace* trace = nullptr);

/// Classical slicing baseline: the same search with the step fixed to 0.
SliceSchedule find_slice_schedule_at_start(const LineGraph& g, int n, int r, const Orderer& orderer,
                                           std::span<const Label> open = {});

/// Replays the schedule on `g` and returns the realized contraction width.
/// Throws ValidationError if the schedule does not partition the
/// eliminable vertices of `g` or its rounds are malformed.
int replay_schedule_width(const LineGraph& g, const SliceSchedule& schedule,
                          std::span<const Label> open = {});

struct WidthVsNRow {
  int n = 0;
  int step = 0;
  int width = 0;
};

struct WidthVsNReport {
  std::vector<WidthVsNRow> rows;
  /// min_width[n]: best width over candidate steps with n labels sliced.
  std::vector<int> min_width;
  /// Spread max-min of the candidate widths, per n.
  std::vector<int> spread;
};

/// Width against number of sliced labels (one label per round), n = 0..n_max.
WidthVsNReport width_vs_n_report(const LineGraph& g, int n_max, const Orderer& orderer,
                                 std::span<const Label> open = {});

/// "n,step,width" CSV.
std::string width_vs_n_csv(const WidthVsNReport& report);

/// Sums the sliced contractions over all 2^n_total assignments using
/// `parallelism` worker threads. Slice results are reduced by a fixed
/// pairwise tree over the assignment index, so the sum does not depend
/// on the number of workers.
ContractionResult execute_sliced(const TensorNetwork& net, const SliceSchedule& schedule,
                                 int parallelism = 1);

}  // namespace qtn
