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

#include <complex>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qtn {

using Complex = std::complex<double>;

/// Undirected simple graph on nodes 0..num_nodes-1; the MaxCut instance.
struct ProblemGraph {
  int num_nodes = 0;
  std::vector<std::pair<int, int>> edges;

  bool has_edge(int a, int b) const;
  int degree(int node) const;

  /// Throws ValidationError on self-loops, duplicates or out-of-range ids.
  void validate() const;

  friend bool operator==(const ProblemGraph&, const ProblemGraph&) = default;
};

/// Simple d-regular graph from the configuration model. Pairings that
/// produce a self-loop or multi-edge are discarded and fully resampled
/// (at most 10'000 attempts). Edges are stored as (a < b), sorted.
ProblemGraph random_regular_graph(int n, int d, std::uint64_t seed);

ProblemGraph complete_graph(int n);

enum class GateKind { H, X, ZPow, CNOT, CZ };

std::string_view gate_name(GateKind kind);
int gate_arity(GateKind kind);

/// True if `kind` acts diagonally on its `slot`-th qubit, i.e. one index
/// serves as both input and output of that wire.
bool is_diagonal_on(GateKind kind, int slot);

struct Gate {
  GateKind kind = GateKind::H;
  /// Only meaningful for ZPow: the gate is diag(1, exp(i*pi*exponent)).
  double exponent = 0.0;
  std::vector<int> qubits;

  static Gate h(int q) { return {GateKind::H, 0.0, {q}}; }
  static Gate x(int q) { return {GateKind::X, 0.0, {q}}; }
  static Gate zpow(double t, int q) { return {GateKind::ZPow, t, {q}}; }
  static Gate cnot(int control, int target) { return {GateKind::CNOT, 0.0, {control, target}}; }
  static Gate cz(int a, int b) { return {GateKind::CZ, 0.0, {a, b}}; }

  /// Hermitian conjugate; every kind but ZPow is self-inverse.
  Gate adjoint() const;

  friend bool operator==(const Gate&, const Gate&) = default;
};

class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(int num_qubits);

  int num_qubits() const noexcept { return num_qubits_; }
  const std::vector<Gate>& gates() const noexcept { return gates_; }
  std::size_t size() const noexcept { return gates_.size(); }

  /// Appends a gate after checking arity, distinctness and qubit range.
  void add(Gate gate);

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  int num_qubits_ = 0;
  std::vector<Gate> gates_;
};

/// Standard QAOA ansatz: a layer of H, then per layer k the edge
/// gadgets CNOT(i,j) ZPow(2*gamma_k/pi, j) CNOT(i,j) in graph edge order,
/// then the mixer H ZPow(2*beta_k/pi) H on every qubit.
Circuit build_qaoa_circuit(const ProblemGraph& graph, std::span<const double> gammas,
                           std::span<const double> betas);

/// Line-based text format:
///   qubits N
///   h q | x q | zpow t q | cnot c t | cz a b
/// `#` starts a comment. Errors carry the 1-based line number.
Circuit parse_circuit(std::string_view text);
std::string serialize_circuit(const Circuit& circuit);

enum class AxisRole { Diagonal, In, Out };

struct TensorAxis {
  int qubit;
  AxisRole role;

  friend bool operator==(const TensorAxis&, const TensorAxis&) = default;
};

/// A gate as a diagonal-compressed tensor. `values` is row-major over
/// `axes`, first axis most significant. An entry is <out|G|in>.
///   H, X : (in, out)
///   ZPow : (diag)
///   CZ   : (diag q0, diag q1)
///   CNOT : (diag control, target in, target out)
struct GateTensor {
  std::vector<Complex> values;
  std::vector<TensorAxis> axes;
};

GateTensor gate_tensor(const Gate& gate);

/// Dense 2^k x 2^k unitary of a k-qubit gate, rebuilt from its compressed
/// tensor. Row/column bit order: first gate qubit is most significant.
std::vector<Complex> gate_dense_matrix(const Gate& gate);

}  // namespace qtn
