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

#include "qtn/energy.hpp"

#include "qtn/contraction.hpp"
#include "qtn/tensornet.hpp"

namespace qtn {

EdgeEnergy edge_energy(const Circuit& circuit, const ProblemGraph& graph, std::pair<int, int> edge,
                       const Orderer& orderer) {
  const TensorNetwork net = apply_fixed(energy_network(circuit, graph, edge));
  const EliminationOrder order = orderer(line_graph(net), {});
  const ContractionResult result = contract(net, order);
  EdgeEnergy e;
  e.edge = edge;
  e.zz = result.value.real();
  e.energy = 0.5 * (1.0 - e.zz);
  e.width = order.width;
  return e;
}

EnergyResult maxcut_energy(const Circuit& circuit, const ProblemGraph& graph, const Orderer& orderer) {
  EnergyResult result;
  for (const auto& edge : graph.edges) {
    result.edges.push_back(edge_energy(circuit, graph, edge, orderer));
    result.total += result.edges.back().energy;
  }
  return result;
}

}  // namespace qtn
