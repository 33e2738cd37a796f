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

#include <utility>
#include <vector>

#include "qtn/circuit.hpp"
#include "qtn/ordering.hpp"

namespace qtn {

struct EdgeEnergy {
  std::pair<int, int> edge;
  /// <ZiZj> on the ansatz state.
  double zz = 0.0;
  /// MaxCut contribution (1 - <ZiZj>) / 2.
  double energy = 0.0;
  int width = 0;
};

struct EnergyResult {
  std::vector<EdgeEnergy> edges;
  double total = 0.0;
};

/// Contracts one edge-term network with an order from `orderer`.
EdgeEnergy edge_energy(const Circuit& circuit, const ProblemGraph& graph, std::pair<int, int> edge,
                       const Orderer& orderer);

/// Expected cut size <psi|C|psi>, one network per edge, summed in edge order.
EnergyResult maxcut_energy(const Circuit& circuit, const ProblemGraph& graph, const Orderer& orderer);

}  // namespace qtn
