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

#include "qtn/circuit.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "qtn/error.hpp"
#include "qtn/random.hpp"

namespace qtn {

namespace {

constexpr int kMaxGraphAttempts = 10'000;

std::pair<int, int> normalized(int a, int b) { return a < b ? std::pair{a, b} : std::pair{b, a}; }

}  // namespace

bool ProblemGraph::has_edge(int a, int b) const {
  const auto e = normalized(a, b);
  return std::any_of(edges.begin(), edges.end(),
                     [&](const auto& x) { return normalized(x.first, x.second) == e; });
}

int ProblemGraph::degree(int node) const {
  return static_cast<int>(std::count_if(edges.begin(), edges.end(), [&](const auto& e) {
    return e.first == node || e.second == node;
  }));
}

void ProblemGraph::validate() const {
  if (num_nodes < 0) throw ValidationError("graph: negative node count");
  std::set<std::pair<int, int>> seen;
  for (const auto& [a, b] : edges) {
    if (a < 0 || b < 0 || a >= num_nodes || b >= num_nodes) {
      throw ValidationError("graph: edge (" + std::to_string(a) + "," + std::to_string(b) +
                            ") has a node id out of range");
    }
    if (a == b) throw ValidationError("graph: self-loop on node " + std::to_string(a));
    if (!seen.insert(normalized(a, b)).second) {
      throw ValidationError("graph: duplicate edge (" + std::to_string(a) + "," +
                            std::to_string(b) + ")");
    }
  }
}

ProblemGraph random_regular_graph(int n, int d, std::uint64_t seed) {
  if (n <= 0 || d < 0) throw ValidationError("random_regular_graph: need n > 0 and d >= 0");
  if (d >= n) throw ValidationError("random_regular_graph: infeasible, degree must be < n");
  if ((static_cast<long long>(n) * d) % 2 != 0) {
    throw ValidationError("random_regular_graph: infeasible, n*d must be even");
  }

  std::mt19937_64 rng(derive_seed(seed, 0));
  std::vector<int> stubs;
  stubs.reserve(static_cast<std::size_t>(n) * d);
  for (int v = 0; v < n; ++v) {
    for (int k = 0; k < d; ++k) stubs.push_back(v);
  }

  for (int attempt = 0; attempt < kMaxGraphAttempts; ++attempt) {
    for (std::size_t i = stubs.size(); i > 1; --i) {
      std::swap(stubs[i - 1], stubs[uniform_below(rng, i)]);
    }
    std::set<std::pair<int, int>> edges;
    bool simple = true;
    for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
      if (stubs[i] == stubs[i + 1] || !edges.insert(normalized(stubs[i], stubs[i + 1])).second) {
        simple = false;
        break;
      }
    }
    if (simple) {
      ProblemGraph g{n, {edges.begin(), edges.end()}};
      return g;
    }
  }
  throw ValidationError("random_regular_graph: no simple pairing after 10000 attempts");
}

ProblemGraph complete_graph(int n) {
  ProblemGraph g{n, {}};
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) g.edges.emplace_back(a, b);
  }
  return g;
}

std::string_view gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::H: return "h";
    case GateKind::X: return "x";
    case GateKind::ZPow: return "zpow";
    case GateKind::CNOT: return "cnot";
    case GateKind::CZ: return "cz";
  }
  return "?";
}

int gate_arity(GateKind kind) {
  return kind == GateKind::CNOT || kind == GateKind::CZ ? 2 : 1;
}

bool is_diagonal_on(GateKind kind, int slot) {
  switch (kind) {
    case GateKind::ZPow:
    case GateKind::CZ: return true;
    case GateKind::CNOT: return slot == 0;
    case GateKind::H:
    case GateKind::X: return false;
  }
  return false;
}

Gate Gate::adjoint() const {
  Gate g = *this;
  if (kind == GateKind::ZPow) g.exponent = -exponent;
  return g;
}

Circuit::Circuit(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 0) throw ValidationError("circuit: negative qubit count");
}

void Circuit::add(Gate gate) {
  if (static_cast<int>(gate.qubits.size()) != gate_arity(gate.kind)) {
    throw ValidationError("gate " + std::string(gate_name(gate.kind)) + " expects " +
                          std::to_string(gate_arity(gate.kind)) + " qubit(s)");
  }
  for (int q : gate.qubits) {
    if (q < 0 || q >= num_qubits_) {
      throw ValidationError("qubit " + std::to_string(q) + " out of range for " +
                            std::to_string(num_qubits_) + "-qubit circuit");
    }
  }
  if (gate.qubits.size() == 2 && gate.qubits[0] == gate.qubits[1]) {
    throw ValidationError("gate " + std::string(gate_name(gate.kind)) + " needs distinct qubits");
  }
  if (gate.kind != GateKind::ZPow) gate.exponent = 0.0;
  gates_.push_back(std::move(gate));
}

Circuit build_qaoa_circuit(const ProblemGraph& graph, std::span<const double> gammas,
                           std::span<const double> betas) {
  if (gammas.size() != betas.size()) {
    throw ValidationError("qaoa: gammas and betas must have equal length");
  }
  if (gammas.empty()) throw ValidationError("qaoa: need at least one layer");
  graph.validate();

  Circuit c(graph.num_nodes);
  for (int q = 0; q < graph.num_nodes; ++q) c.add(Gate::h(q));
  for (std::size_t k = 0; k < gammas.size(); ++k) {
    const double phase = 2.0 * gammas[k] / std::numbers::pi;
    for (const auto& [i, j] : graph.edges) {
      c.add(Gate::cnot(i, j));
      c.add(Gate::zpow(phase, j));
      c.add(Gate::cnot(i, j));
    }
    const double mix = 2.0 * betas[k] / std::numbers::pi;
    for (int q = 0; q < graph.num_nodes; ++q) {
      c.add(Gate::h(q));
      c.add(Gate::zpow(mix, q));
      c.add(Gate::h(q));
    }
  }
  return c;
}

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

int parse_int(std::string_view tok, int line, const char* what) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size() || value < 0) {
    throw ParseError(line, std::string("invalid ") + what + " '" + std::string(tok) + "'");
  }
  return value;
}

double parse_real(std::string_view tok, int line) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size() || !std::isfinite(value)) {
    throw ParseError(line, "invalid real '" + std::string(tok) + "'");
  }
  return value;
}

std::string format_real(double x) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, ptr);
}

}  // namespace

Circuit parse_circuit(std::string_view text) {
  std::optional<Circuit> circuit;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;

    if (!circuit) {
      if (tokens[0] != "qubits" || tokens.size() != 2) {
        throw ParseError(line_no, "expected 'qubits N' header");
      }
      circuit.emplace(parse_int(tokens[1], line_no, "qubit count"));
      continue;
    }

    const std::string_view name = tokens[0];
    Gate gate;
    std::size_t first_qubit = 1;
    if (name == "h") {
      gate.kind = GateKind::H;
    } else if (name == "x") {
      gate.kind = GateKind::X;
    } else if (name == "zpow") {
      gate.kind = GateKind::ZPow;
      first_qubit = 2;
    } else if (name == "cnot") {
      gate.kind = GateKind::CNOT;
    } else if (name == "cz") {
      gate.kind = GateKind::CZ;
    } else {
      throw ParseError(line_no, "unknown gate '" + std::string(name) + "'");
    }
    const std::size_t expected = first_qubit + gate_arity(gate.kind);
    if (tokens.size() != expected) {
      throw ParseError(line_no, "gate '" + std::string(name) + "' expects " +
                                    std::to_string(expected - 1) + " argument(s), got " +
                                    std::to_string(tokens.size() - 1));
    }
    if (gate.kind == GateKind::ZPow) gate.exponent = parse_real(tokens[1], line_no);
    for (std::size_t k = first_qubit; k < tokens.size(); ++k) {
      const int q = parse_int(tokens[k], line_no, "qubit id");
      if (q >= circuit->num_qubits()) {
        throw ParseError(line_no, "qubit " + std::to_string(q) + " out of range (circuit has " +
                                      std::to_string(circuit->num_qubits()) + " qubits)");
      }
      gate.qubits.push_back(q);
    }
    try {
      circuit->add(std::move(gate));
    } catch (const ValidationError& e) {
      throw ParseError(line_no, e.what());
    }
  }
  if (!circuit) throw ParseError(line_no, "missing 'qubits N' header");
  return std::move(*circuit);
}

std::string serialize_circuit(const Circuit& circuit) {
  std::ostringstream out;
  out << "qubits " << circuit.num_qubits() << '\n';
  for (const Gate& g : circuit.gates()) {
    out << gate_name(g.kind);
    if (g.kind == GateKind::ZPow) out << ' ' << format_real(g.exponent);
    for (int q : g.qubits) out << ' ' << q;
    out << '\n';
  }
  return out.str();
}

GateTensor gate_tensor(const Gate& gate) {
  const int q0 = gate.qubits.at(0);
  switch (gate.kind) {
    case GateKind::H: {
      const double s = 1.0 / std::numbers::sqrt2;
      return {{s, s, s, -s}, {{q0, AxisRole::In}, {q0, AxisRole::Out}}};
    }
    case GateKind::X:
      return {{0.0, 1.0, 1.0, 0.0}, {{q0, AxisRole::In}, {q0, AxisRole::Out}}};
    case GateKind::ZPow:
      return {{1.0, std::polar(1.0, std::numbers::pi * gate.exponent)},
              {{q0, AxisRole::Diagonal}}};
    case GateKind::CZ: {
      const int q1 = gate.qubits.at(1);
      return {{1.0, 1.0, 1.0, -1.0}, {{q0, AxisRole::Diagonal}, {q1, AxisRole::Diagonal}}};
    }
    case GateKind::CNOT: {
      const int q1 = gate.qubits.at(1);
      GateTensor t{std::vector<Complex>(8, 0.0),
                   {{q0, AxisRole::Diagonal}, {q1, AxisRole::In}, {q1, AxisRole::Out}}};
      for (int c = 0; c < 2; ++c) {
        for (int i = 0; i < 2; ++i) {
          const int o = c == 0 ? i : 1 - i;
          t.values[c * 4 + i * 2 + o] = 1.0;
        }
      }
      return t;
    }
  }
  return {};
}

std::vector<Complex> gate_dense_matrix(const Gate& gate) {
  const GateTensor t = gate_tensor(gate);
  const int k = static_cast<int>(gate.qubits.size());
  const int dim = 1 << k;
  std::vector<Complex> m(static_cast<std::size_t>(dim) * dim, 0.0);
  auto slot_of = [&](int qubit) {
    return static_cast<int>(std::find(gate.qubits.begin(), gate.qubits.end(), qubit) -
                            gate.qubits.begin());
  };
  for (int row = 0; row < dim; ++row) {
    for (int col = 0; col < dim; ++col) {
      std::size_t idx = 0;
      bool consistent = true;
      for (const TensorAxis& axis : t.axes) {
        const int shift = k - 1 - slot_of(axis.qubit);
        const int out_bit = (row >> shift) & 1;
        const int in_bit = (col >> shift) & 1;
        int bit = 0;
        switch (axis.role) {
          case AxisRole::Diagonal:
            consistent = consistent && in_bit == out_bit;
            bit = in_bit;
            break;
          case AxisRole::In: bit = in_bit; break;
          case AxisRole::Out: bit = out_bit; break;
        }
        idx = idx * 2 + static_cast<std::size_t>(bit);
      }
      // A wire with no tensor axis at all is the identity on that qubit.
      for (int slot = 0; slot < k; ++slot) {
        const bool touched = std::any_of(t.axes.begin(), t.axes.end(),
                                         [&](const TensorAxis& a) { return slot_of(a.qubit) == slot; });
        if (!touched && ((row >> (k - 1 - slot)) & 1) != ((col >> (k - 1 - slot)) & 1)) {
          consistent = false;
        }
      }
      if (consistent) m[static_cast<std::size_t>(row) * dim + col] = t.values[idx];
    }
  }
  return m;
}

}  // namespace qtn
