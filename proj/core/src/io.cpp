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

#include "qtn/io.hpp"

#include <json.hpp>

#include "qtn/error.hpp"

namespace qtn {

using nlohmann::json;

namespace {

json parse_json(std::string_view text, const char* what) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ValidationError(std::string(what) + ": " + e.what());
  }
}

template <typename F>
auto with_context(const char* what, F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw ValidationError(std::string(what) + ": " + e.what());
  }
}

}  // namespace

std::string graph_to_json(const ProblemGraph& graph) {
  json edges = json::array();
  for (const auto& [a, b] : graph.edges) edges.push_back({a, b});
  return json{{"n", graph.num_nodes}, {"edges", edges}}.dump();
}

ProblemGraph graph_from_json(std::string_view text) {
  const json doc = parse_json(text, "graph JSON");
  ProblemGraph g = with_context("graph JSON", [&] {
    ProblemGraph out;
    out.num_nodes = doc.at("n").get<int>();
    for (const json& e : doc.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw ValidationError("graph JSON: each edge must be [a, b]");
      out.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return out;
  });
  g.validate();
  return g;
}

std::string order_to_json(const EliminationOrder& order) {
  return json{{"order", order.order}, {"width", order.width}, {"step_degrees", order.step_degrees}}.dump();
}

EliminationOrder order_from_json(std::string_view text) {
  const json doc = parse_json(text, "order JSON");
  return with_context("order JSON", [&] {
    EliminationOrder o;
    o.order = doc.at("order").get<std::vector<Label>>();
    o.width = doc.at("width").get<int>();
    o.step_degrees = doc.value("step_degrees", std::vector<int>{});
    return o;
  });
}

std::string schedule_to_json(const SliceSchedule& schedule) {
  json rounds = json::array();
  for (const SliceRound& r : schedule.rounds) rounds.push_back({{"step", r.step}, {"sliced", r.sliced}});
  return json{{"rounds", rounds},
              {"prefix", schedule.prefix_order},
              {"final_order", schedule.final_order.order},
              {"width", schedule.reported_width}}
      .dump();
}

SliceSchedule schedule_from_json(std::string_view text) {
  const json doc = parse_json(text, "schedule JSON");
  return with_context("schedule JSON", [&] {
    SliceSchedule s;
    for (const json& r : doc.at("rounds")) {
      s.rounds.push_back({r.at("step").get<int>(), r.at("sliced").get<std::vector<Label>>()});
      s.n_total += static_cast<int>(s.rounds.back().sliced.size());
    }
    s.prefix_order = doc.at("prefix").get<std::vector<Label>>();
    s.final_order.order = doc.at("final_order").get<std::vector<Label>>();
    s.reported_width = doc.at("width").get<int>();
    s.final_order.width = s.reported_width;
    return s;
  });
}

}  // namespace qtn
