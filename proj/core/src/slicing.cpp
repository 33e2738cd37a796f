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

#include "qtn/slicing.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <thread>

#include "qtn/error.hpp"

namespace qtn {

std::vector<Label> SliceSchedule::sliced_labels() const {
  std::vector<Label> out;
  for (const SliceRound& round : rounds) out.insert(out.end(), round.sliced.begin(), round.sliced.end());
  return out;
}

TensorNetwork slice_network(const TensorNetwork& net, const SliceAssignment& assignment) {
  TensorNetwork out = net;
  for (const auto& [label, bit] : assignment) {
    if (bit != 0 && bit != 1) throw ValidationError("slice value must be 0 or 1");
    if (net.fixed.contains(label)) throw ValidationError("cannot slice fixed label " + std::to_string(label));
    if (std::find(net.open.begin(), net.open.end(), label) != net.open.end()) {
      throw ValidationError("cannot slice open label " + std::to_string(label));
    }
    const bool carried = std::any_of(net.tensors.begin(), net.tensors.end(),
                                     [&](const Tensor& t) { return t.contains(label); });
    if (!carried) throw ValidationError("slice label " + std::to_string(label) + " is not in the network");
  }
  for (Tensor& t : out.tensors) {
    for (const auto& [label, bit] : assignment) {
      if (t.contains(label)) t = t.slice(label, bit);
    }
  }
  return out;
}

std::size_t peak_step(const EliminationOrder& order) {
  if (order.step_degrees.empty()) throw ValidationError("peak_step of an empty order");
  return static_cast<std::size_t>(
      std::max_element(order.step_degrees.begin(), order.step_degrees.end()) - order.step_degrees.begin());
}

namespace {

std::vector<Label> eliminable(const LineGraph& g, const std::set<Label>& open) {
  std::vector<Label> out;
  for (Label v : g.vertices()) {
    if (!open.contains(v)) out.push_back(v);
  }
  return out;
}

std::vector<Label> highest_degree(const LineGraph& g, const std::set<Label>& open, int k) {
  std::vector<Label> pool = eliminable(g, open);
  std::stable_sort(pool.begin(), pool.end(),
                   [&](Label a, Label b) { return g.degree(a) > g.degree(b); });
  pool.resize(std::min(pool.size(), static_cast<std::size_t>(k)));
  return pool;
}

struct Candidate {
  std::size_t step = 0;
  std::vector<Label> sliced;
  EliminationOrder residual;
  int prefix_width = 0;
  int width = 0;
};

SliceSchedule search(const LineGraph& g, int n, int r, const Orderer& orderer,
                     std::span<const Label> open_labels, bool step_dependent, SliceSearchTrace* trace) {
  if (n < 0) throw ValidationError("number of sliced labels must be non-negative");
  if (r < 1) throw ValidationError("labels per round must be at least 1");
  const std::set<Label> open(open_labels.begin(), open_labels.end());
  if (static_cast<std::size_t>(n) > eliminable(g, open).size()) {
    throw ValidationError("cannot slice " + std::to_string(n) + " labels from a graph with " +
                          std::to_string(eliminable(g, open).size()) + " eliminable vertices");
  }

  SliceSchedule schedule;
  LineGraph residual = g;
  EliminationOrder current = orderer(residual, open_labels);
  if (trace) {
    trace->unsliced_width = current.width;
    trace->rounds.clear();
  }
  int prefix_width = 0;

  while (schedule.n_total < n) {
    const int k = std::min(r, n - schedule.n_total);
    EliminationOrder fresh = orderer(residual, open_labels);
    const EliminationOrder full = fresh.width <= current.width ? std::move(fresh) : current;

    const std::size_t available = full.order.size();
    // Leave enough vertices for this and every later round.
    std::size_t last_step = available - static_cast<std::size_t>(n - schedule.n_total);
    if (!step_dependent) {
      last_step = 0;
    } else if (!full.order.empty()) {
      last_step = std::min(last_step, peak_step(full));
    }

    std::vector<CandidateWidth> widths;
    std::optional<Candidate> best;
    LineGraph partial = residual;
    int running = prefix_width;
    for (std::size_t s = 0; s <= last_step; ++s) {
      if (s > 0) {
        const Label v = full.order[s - 1];
        running = std::max(running, partial.degree(v));
        partial.eliminate(v);
      }
      Candidate cand;
      cand.step = s;
      cand.sliced = highest_degree(partial, open, k);
      LineGraph reduced = partial;
      for (Label v : cand.sliced) reduced.remove_vertex(v);

      EliminationOrder reordered = orderer(reduced, open_labels);
      std::vector<Label> kept;
      kept.reserve(available - s);
      for (std::size_t i = s; i < available; ++i) {
        if (std::find(cand.sliced.begin(), cand.sliced.end(), full.order[i]) == cand.sliced.end()) {
          kept.push_back(full.order[i]);
        }
      }
      EliminationOrder inherited = width_of_order(reduced, kept, open_labels);
      cand.residual = reordered.width <= inherited.width ? std::move(reordered) : std::move(inherited);
      cand.prefix_width = running;
      cand.width = std::max(running, cand.residual.width);

      widths.push_back({static_cast<int>(schedule.prefix_order.size() + s), cand.width});
      if (!best || cand.width < best->width) best = std::move(cand);
    }

    // Commit the winning step.
    for (std::size_t i = 0; i < best->step; ++i) {
      schedule.prefix_order.push_back(full.order[i]);
      residual.eliminate(full.order[i]);
    }
    for (Label v : best->sliced) residual.remove_vertex(v);
    prefix_width = best->prefix_width;
    schedule.rounds.push_back({static_cast<int>(schedule.prefix_order.size()), best->sliced});
    schedule.n_total += static_cast<int>(best->sliced.size());
    current = std::move(best->residual);
    if (trace) trace->rounds.push_back(std::move(widths));
  }

  schedule.final_order = std::move(current);
  schedule.reported_width = std::max(prefix_width, schedule.final_order.width);
  return schedule;
}

}  // namespace

SliceSchedule find_slice_schedule(const LineGraph& g, int n, int r, const Orderer& orderer,
                                  std::span<const Label> open, SliceSearchTrace* trace) {
  return search(g, n, r, orderer, open, true, trace);
}

SliceSchedule find_slice_schedule_at_start(const LineGraph& g, int n, int r, const Orderer& orderer,
                                           std::span<const Label> open) {
  return search(g, n, r, orderer, open, false, nullptr);
}

int replay_schedule_width(const LineGraph& g, const SliceSchedule& schedule, std::span<const Label> open_labels) {
  const std::set<Label> open(open_labels.begin(), open_labels.end());
  std::vector<Label> all = schedule.prefix_order;
  const std::vector<Label> sliced = schedule.sliced_labels();
  all.insert(all.end(), sliced.begin(), sliced.end());
  all.insert(all.end(), schedule.final_order.order.begin(), schedule.final_order.order.end());
  std::sort(all.begin(), all.end());
  if (all != eliminable(g, open)) {
    throw ValidationError("schedule does not partition the network's eliminable labels");
  }
  if (schedule.n_total != static_cast<int>(sliced.size())) {
    throw ValidationError("schedule n_total disagrees with its rounds");
  }
  const std::size_t prefix_len = schedule.prefix_order.size();
  if (schedule.rounds.empty() ? prefix_len != 0
                              : static_cast<std::size_t>(schedule.rounds.back().step) != prefix_len) {
    throw ValidationError("schedule prefix does not end at the last slicing round");
  }

  LineGraph work = g;
  int width = 0;
  std::size_t pos = 0;
  for (const SliceRound& round : schedule.rounds) {
    if (round.step < 0 || static_cast<std::size_t>(round.step) < pos) {
      throw ValidationError("schedule round steps must be nondecreasing");
    }
    for (; pos < static_cast<std::size_t>(round.step); ++pos) {
      const Label v = schedule.prefix_order[pos];
      width = std::max(width, work.degree(v));
      work.eliminate(v);
    }
    for (Label v : round.sliced) work.remove_vertex(v);
  }
  for (Label v : schedule.final_order.order) {
    width = std::max(width, work.degree(v));
    work.eliminate(v);
  }
  return width;
}

WidthVsNReport width_vs_n_report(const LineGraph& g, int n_max, const Orderer& orderer,
                                 std::span<const Label> open) {
  SliceSearchTrace trace;
  search(g, n_max, 1, orderer, open, true, &trace);
  WidthVsNReport report;
  report.rows.push_back({0, 0, trace.unsliced_width});
  report.min_width.push_back(trace.unsliced_width);
  report.spread.push_back(0);
  for (std::size_t round = 0; round < trace.rounds.size(); ++round) {
    const int n = static_cast<int>(round) + 1;
    int lo = std::numeric_limits<int>::max();
    int hi = std::numeric_limits<int>::min();
    for (const CandidateWidth& c : trace.rounds[round]) {
      report.rows.push_back({n, c.step, c.width});
      lo = std::min(lo, c.width);
      hi = std::max(hi, c.width);
    }
    report.min_width.push_back(lo);
    report.spread.push_back(hi - lo);
  }
  return report;
}

std::string width_vs_n_csv(const WidthVsNReport& report) {
  std::ostringstream out;
  out << "n,step,width\n";
  for (const WidthVsNRow& row : report.rows) out << row.n << ',' << row.step << ',' << row.width << '\n';
  return out.str();
}

namespace {

void add_into(ContractionResult& acc, const ContractionResult& x) {
  acc.value += x.value;
  for (std::size_t i = 0; i < acc.batch.size(); ++i) acc.batch[i] += x.batch[i];
  acc.peak_rank = std::max(acc.peak_rank, x.peak_rank);
}

PartialContraction slice_state(PartialContraction state, Label label, int bit) {
  std::vector<Tensor> tensors;
  tensors.reserve(state.tensors.size());
  for (Tensor& t : state.tensors) {
    if (!t.contains(label)) {
      tensors.push_back(std::move(t));
      continue;
    }
    Tensor s = t.slice(label, bit);
    if (s.rank() == 0) {
      state.scalar *= s.scalar_value();
    } else {
      tensors.push_back(std::move(s));
    }
  }
  state.tensors = std::move(tensors);
  return state;
}

}  // namespace

ContractionResult execute_sliced(const TensorNetwork& net, const SliceSchedule& schedule, int parallelism) {
  const TensorNetwork work = net.fixed.empty() ? net : apply_fixed(net);
  replay_schedule_width(line_graph(work), schedule, work.open);

  if (schedule.rounds.empty()) return contract(work, schedule.final_order);

  // Segment k is eliminated right after round k's labels are sliced.
  std::vector<std::span<const Label>> segments;
  const std::span<const Label> prefix(schedule.prefix_order);
  for (std::size_t k = 0; k + 1 < schedule.rounds.size(); ++k) {
    const auto from = static_cast<std::size_t>(schedule.rounds[k].step);
    const auto to = static_cast<std::size_t>(schedule.rounds[k + 1].step);
    segments.push_back(prefix.subspan(from, to - from));
  }
  segments.push_back(schedule.final_order.order);

  const PartialContraction shared = eliminate_segment(
      PartialContraction::from(work.tensors), prefix.first(static_cast<std::size_t>(schedule.rounds[0].step)));

  const int n = schedule.n_total;
  if (n >= 31) throw ValidationError("too many sliced labels: " + std::to_string(n));
  const std::size_t tasks = std::size_t{1} << n;

  auto run_task = [&](std::size_t index) {
    PartialContraction state = shared;
    int bit_pos = n - 1;
    for (std::size_t k = 0; k < schedule.rounds.size(); ++k) {
      for (Label label : schedule.rounds[k].sliced) {
        const int bit = static_cast<int>((index >> bit_pos) & 1U);
        --bit_pos;
        state = slice_state(std::move(state), label, bit);
      }
      state = eliminate_segment(std::move(state), segments[k]);
    }
    return finish_contraction(std::move(state), work.open);
  };

  std::vector<ContractionResult> results(tasks);
  const std::size_t workers = std::clamp<std::size_t>(static_cast<std::size_t>(std::max(parallelism, 1)), 1, tasks);
  if (workers == 1) {
    for (std::size_t i = 0; i < tasks; ++i) results[i] = run_task(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
      std::vector<std::jthread> pool;
      pool.reserve(workers);
      for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
          for (std::size_t i = next.fetch_add(1); i < tasks; i = next.fetch_add(1)) {
            try {
              results[i] = run_task(i);
            } catch (...) {
              std::lock_guard lock(failure_mutex);
              if (!failure) failure = std::current_exception();
            }
          }
        });
      }
    }
    if (failure) std::rethrow_exception(failure);
  }

  // Fixed pairwise tree: identical rounding for any worker count.
  for (std::size_t width = 1; width < tasks; width *= 2) {
    for (std::size_t i = 0; i + width < tasks; i += 2 * width) add_into(results[i], results[i + width]);
  }
  results[0].peak_rank = std::max(results[0].peak_rank, shared.peak_rank);
  return std::move(results[0]);
}

}  // namespace qtn
