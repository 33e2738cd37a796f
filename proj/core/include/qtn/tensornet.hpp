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
#include <string_view>
#include <vector>

#include "qtn/circuit.hpp"
#include "qtn/line_graph.hpp"
#include "qtn/tensor.hpp"

namespace qtn {

/// Computational-basis bitstring; entry q is the bit of qubit q.
using Bits = std::vector<int>;

/// Parses "0110" into {0,1,1,0}; rejects anything but '0'/'1'.
Bits bits_from_string(std::string_view text);
std::string bits_to_string(std::span<const int> bits);

/// How the output wires of a circuit network are treated.
struct OutputSpec {
  /// Bit per qubit; used for every qubit not listed in `open_qubits`.
  Bits bits;
  /// Qubits whose output index is left uncontracted, in batch order.
  std::vector<int> open_qubits;

  static OutputSpec fixed(Bits bits) { return {std::move(bits), {}}; }
  static OutputSpec open(std::vector<int> qubits, Bits rest) { return {std::move(rest), std::move(qubits)}; }
};

struct TensorNetwork {
  std::vector<Tensor> tensors;
  int num_indices = 0;
  /// Boundary labels pinned to a bit value.
  std::map<Label, int> fixed;
  /// Uncontracted labels, in the order the batch result is laid out.
  std::vector<Label> open;
  /// Per-qubit wire labels at circuit start/end (empty for hand-built networks).
  std::vector<Label> input_labels;
  std::vector<Label> output_labels;

  /// Throws ValidationError if an invariant is broken.
  void validate() const;
};

/// One diagonal-compressed tensor per gate. Output wires carry labels
/// 0..N-1 and labels grow from circuit end to start, so input wires get the
/// largest labels. A qubit that no non-diagonal gate touches keeps a single
/// label for input and output; mismatched in/out bits on it contribute a
/// zero scalar, and an open output on it gets a basis-vector tensor.
TensorNetwork circuit_to_network(const Circuit& circuit, std::span<const int> in_bits,
                                 const OutputSpec& out);

/// Slices every tensor at its fixed labels and clears `fixed`.
TensorNetwork apply_fixed(const TensorNetwork& net);

/// Vertices: labels that occur in a tensor (or are open) and are not fixed.
/// Each tensor contributes a clique over its live labels.
LineGraph line_graph(const TensorNetwork& net);

/// <0^N| U^dag Z_i Z_j U |0^N> as one network: the circuit, Z on the two
/// edge qubits, then the adjoint circuit in reverse. All boundaries fixed to 0.
TensorNetwork energy_network(const Circuit& circuit, const ProblemGraph& graph,
                             std::pair<int, int> edge);

/// The circuit whose amplitude <0|.|0> is the ZZ expectation on `edge`.
Circuit energy_circuit(const Circuit& circuit, const ProblemGraph& graph, std::pair<int, int> edge);

}  // namespace qtn
