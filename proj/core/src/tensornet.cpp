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

#include "qtn/tensornet.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "qtn/error.hpp"

namespace qtn {

Bits bits_from_string(std::string_view text) {
  Bits bits;
  bits.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') throw ValidationError("bitstring may only contain '0' and '1'");
    bits.push_back(c - '0');
  }
  return bits;
}

std::string bits_to_string(std::span<const int> bits) {
  std::string s;
  for (int b : bits) s.push_back(b ? '1' : '0');
  return s;
}

void TensorNetwork::validate() const {
  std::set<Label> used;
  for (const Tensor& t : tensors) {
    for (Label l : t.labels()) {
      if (l < 0 || l >= num_indices) {
        throw ValidationError("tensor label " + std::to_string(l) + " outside 0.." +
                              std::to_string(num_indices - 1));
      }
      used.insert(l);
    }
  }
  for (const auto& [label, bit] : fixed) {
    if (label < 0 || label >= num_indices) throw ValidationError("fixed label out of range");
    if (bit != 0 && bit != 1) throw ValidationError("fixed value must be 0 or 1");
  }
  std::set<Label> seen_open;
  for (Label l : open) {
    if (fixed.contains(l)) throw ValidationError("label " + std::to_string(l) + " is both open and fixed");
    if (!used.contains(l)) throw ValidationError("open label " + std::to_string(l) + " is in no tensor");
    if (!seen_open.insert(l).second) throw ValidationError("duplicate open label");
  }
}

namespace {

void check_bits(std::span<const int> bits, int n, const char* what) {
  if (static_cast<int>(bits.size()) != n) {
    throw ValidationError(std::string(what) + " has " + std::to_string(bits.size()) +
                          " bits, circuit has " + std::to_string(n) + " qubits");
  }
  for (int b : bits) {
    if (b != 0 && b != 1) throw ValidationError(std::string(what) + " must contain only 0/1");
  }
}

}  // namespace

TensorNetwork circuit_to_network(const Circuit& circuit, std::span<const int> in_bits,
                                 const OutputSpec& out) {
  const int n = circuit.num_qubits();
  check_bits(in_bits, n, "input bitstring");
  check_bits(out.bits, n, "output bitstring");
  std::vector<bool> is_open(static_cast<std::size_t>(n), false);
  for (int q : out.open_qubits) {
    if (q < 0 || q >= n) throw ValidationError("open qubit " + std::to_string(q) + " out of range");
    if (is_open[static_cast<std::size_t>(q)]) throw ValidationError("open qubit listed twice");
    is_open[static_cast<std::size_t>(q)] = true;
  }

  TensorNetwork net;
  std::vector<Label> current(static_cast<std::size_t>(n));
  for (int q = 0; q < n; ++q) current[static_cast<std::size_t>(q)] = q;
  Label next = n;

  // Walk backwards so labels grow from the output towards the input.
  const auto& gates = circuit.gates();
  net.tensors.reserve(gates.size() + 1);
  for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
    const GateTensor gt = gate_tensor(*it);
    std::vector<Label> fresh(it->qubits.size(), -1);
    for (std::size_t slot = 0; slot < it->qubits.size(); ++slot) {
      if (!is_diagonal_on(it->kind, static_cast<int>(slot))) fresh[slot] = next++;
    }
    std::vector<Label> axis_labels;
    axis_labels.reserve(gt.axes.size());
    for (const TensorAxis& axis : gt.axes) {
      const auto slot = static_cast<std::size_t>(
          std::find(it->qubits.begin(), it->qubits.end(), axis.qubit) - it->qubits.begin());
      axis_labels.push_back(axis.role == AxisRole::In ? fresh[slot]
                                                      : current[static_cast<std::size_t>(axis.qubit)]);
    }
    for (std::size_t slot = 0; slot < it->qubits.size(); ++slot) {
      if (fresh[slot] >= 0) current[static_cast<std::size_t>(it->qubits[slot])] = fresh[slot];
    }
    net.tensors.push_back(Tensor::from_axes(axis_labels, gt.values));
  }
  std::reverse(net.tensors.begin(), net.tensors.end());

  net.num_indices = next;
  net.input_labels = current;
  net.output_labels.resize(static_cast<std::size_t>(n));
  for (int q = 0; q < n; ++q) net.output_labels[static_cast<std::size_t>(q)] = q;

  for (int q = 0; q < n; ++q) {
    const auto uq = static_cast<std::size_t>(q);
    const Label in_label = current[uq];
    const bool shared = in_label == q;
    if (is_open[uq]) {
      if (shared) {
        // Input and output share one label: pin it with a basis vector so
        // the batch entry is <b|b_in> on this wire.
        std::vector<Complex> basis(2, 0.0);
        basis[static_cast<std::size_t>(in_bits[uq])] = 1.0;
        net.tensors.emplace_back(std::vector<Label>{q}, std::move(basis));
      } else {
        net.fixed[in_label] = in_bits[uq];
      }
      continue;
    }
    net.fixed[in_label] = in_bits[uq];
    if (shared && out.bits[uq] != in_bits[uq]) {
      net.tensors.push_back(Tensor::scalar(0.0));
    } else {
      net.fixed[q] = out.bits[uq];
    }
  }
  for (int q : out.open_qubits) net.open.push_back(q);
  return net;
}

TensorNetwork apply_fixed(const TensorNetwork& net) {
  TensorNetwork out = net;
  out.fixed.clear();
  for (Tensor& t : out.tensors) {
    for (const auto& [label, bit] : net.fixed) {
      if (t.contains(label)) t = t.slice(label, bit);
    }
  }
  return out;
}

LineGraph line_graph(const TensorNetwork& net) {
  LineGraph g(net.num_indices);
  std::vector<Label> live;
  for (const Tensor& t : net.tensors) {
    live.clear();
    for (Label l : t.labels()) {
      if (!net.fixed.contains(l)) live.push_back(l);
    }
    g.add_clique(live);
  }
  for (Label l : net.open) g.add_vertex(l);
  return g;
}

Circuit energy_circuit(const Circuit& circuit, const ProblemGraph& graph, std::pair<int, int> edge) {
  if (!graph.has_edge(edge.first, edge.second)) {
    throw ValidationError("edge (" + std::to_string(edge.first) + "," + std::to_string(edge.second) +
                          ") is not in the graph");
  }
  if (circuit.num_qubits() != graph.num_nodes) {
    throw ValidationError("circuit and graph disagree on the number of qubits");
  }
  Circuit c(circuit.num_qubits());
  for (const Gate& g : circuit.gates()) c.add(g);
  c.add(Gate::zpow(1.0, edge.first));
  c.add(Gate::zpow(1.0, edge.second));
  for (auto it = circuit.gates().rbegin(); it != circuit.gates().rend(); ++it) c.add(it->adjoint());
  return c;
}

TensorNetwork energy_network(const Circuit& circuit, const ProblemGraph& graph, std::pair<int, int> edge) {
  const Circuit c = energy_circuit(circuit, graph, edge);
  const Bits zeros(static_cast<std::size_t>(c.num_qubits()), 0);
  return circuit_to_network(c, zeros, OutputSpec::fixed(zeros));
}

}  // namespace qtn
