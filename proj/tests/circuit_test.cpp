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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracle.hpp"
#include "qtn/circuit.hpp"
#include "qtn/error.hpp"

using namespace qtn;

namespace {

bool is_simple_regular(const ProblemGraph& g, int d) {
  try {
    g.validate();
  } catch (const ValidationError&) {
    return false;
  }
  for (int v = 0; v < g.num_nodes; ++v) {
    if (g.degree(v) != d) return false;
  }
  return true;
}

}  // namespace

TEST(RandomRegularGraph, FourNodesDegreeThreeIsK4) {
  for (std::uint64_t seed : {0ULL, 1ULL, 99ULL}) {
    const ProblemGraph g = random_regular_graph(4, 3, seed);
    EXPECT_EQ(g, complete_graph(4));
  }
}

TEST(RandomRegularGraph, RejectsInfeasibleParameters) {
  EXPECT_THROW(random_regular_graph(3, 3, 0), ValidationError);
  EXPECT_THROW(random_regular_graph(5, 3, 0), ValidationError);  // n*d odd
  EXPECT_THROW(random_regular_graph(0, 0, 0), ValidationError);
}

TEST(RandomRegularGraph, TenNodesSeedSevenIsCubic) {
  const ProblemGraph g = random_regular_graph(10, 3, 7);
  EXPECT_EQ(g.edges.size(), 15u);
  EXPECT_TRUE(is_simple_regular(g, 3));
}

TEST(RandomRegularGraph, AlwaysSimpleAndRegular) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int n = 4 + static_cast<int>(seed % 30) * 2;
    const int d = 1 + static_cast<int>(seed % 4);
    const ProblemGraph g = random_regular_graph(n, d, seed);
    ASSERT_TRUE(is_simple_regular(g, d)) << "n=" << n << " d=" << d << " seed=" << seed;
  }
}

TEST(RandomRegularGraph, DeterministicPerSeed) {
  EXPECT_EQ(random_regular_graph(30, 3, 5), random_regular_graph(30, 3, 5));
  EXPECT_NE(random_regular_graph(30, 3, 5), random_regular_graph(30, 3, 6));
}

TEST(QaoaCircuit, K4DepthOneMatchesFigureLayout) {
  const double gamma = 0.3, beta = 0.7;
  const std::vector<double> gammas{gamma}, betas{beta};
  const Circuit c = build_qaoa_circuit(complete_graph(4), gammas, betas);
  ASSERT_EQ(c.size(), 34u);
  const auto& gates = c.gates();
  for (int q = 0; q < 4; ++q) EXPECT_EQ(gates[static_cast<std::size_t>(q)], Gate::h(q));
  std::size_t i = 4;
  for (const auto& [a, b] : complete_graph(4).edges) {
    EXPECT_EQ(gates[i++], Gate::cnot(a, b));
    EXPECT_EQ(gates[i++], Gate::zpow(2 * gamma / std::numbers::pi, b));
    EXPECT_EQ(gates[i++], Gate::cnot(a, b));
  }
  for (int q = 0; q < 4; ++q) {
    EXPECT_EQ(gates[i++], Gate::h(q));
    EXPECT_EQ(gates[i++], Gate::zpow(2 * beta / std::numbers::pi, q));
    EXPECT_EQ(gates[i++], Gate::h(q));
  }
}

TEST(QaoaCircuit, GateCountFormula) {
  const ProblemGraph g = random_regular_graph(10, 3, 1);
  const std::vector<double> gammas{0.1, 0.2}, betas{0.3, 0.4};
  EXPECT_EQ(build_qaoa_circuit(g, gammas, betas).size(), 160u);
}

TEST(QaoaCircuit, RejectsMismatchedParameters) {
  const std::vector<double> two{0.1, 0.2}, one{0.3}, none{};
  EXPECT_THROW(build_qaoa_circuit(complete_graph(3), two, one), ValidationError);
  EXPECT_THROW(build_qaoa_circuit(complete_graph(3), none, none), ValidationError);
}

TEST(QaoaCircuit, ZeroAnglesGiveUniformState) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const int n = 4 + 2 * static_cast<int>(seed % 4);
    const ProblemGraph g = random_regular_graph(n, 3, seed);
    const std::vector<double> zeros{0.0, 0.0};
    const Circuit c = build_qaoa_circuit(g, zeros, zeros);
    oracle::StateVector sv(n, Bits(static_cast<std::size_t>(n), 0));
    sv.apply(c);
    const double expected = std::pow(2.0, -n / 2.0);
    for (const auto& a : sv.amplitudes()) {
      ASSERT_NEAR(a.real(), expected, 1e-12);
      ASSERT_NEAR(a.imag(), 0.0, 1e-12);
    }
  }
}

TEST(QaoaCircuit, SingleEdgeZeroAnglesActsAsHadamardPair) {
  const ProblemGraph g{2, {{0, 1}}};
  const std::vector<double> zero{0.0};
  const Circuit c = build_qaoa_circuit(g, zero, zero);
  for (int b = 0; b < 4; ++b) {
    const Bits out{b & 1, (b >> 1) & 1};
    const auto a = oracle::oracle_amplitude(c, Bits{0, 0}, out);
    EXPECT_NEAR(a.real(), 0.5, 1e-12);
    EXPECT_NEAR(a.imag(), 0.0, 1e-12);
  }
}

TEST(CircuitText, ParsesSingleGate) {
  const Circuit c = parse_circuit("qubits 1\nh 0\n");
  EXPECT_EQ(c.num_qubits(), 1);
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c.gates()[0], Gate::h(0));
}

TEST(CircuitText, ParsesTwoQubitAndPhase) {
  const Circuit c = parse_circuit("qubits 2\ncnot 0 1\nzpow 0.5 1\n");
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c.gates()[0], Gate::cnot(0, 1));
  EXPECT_EQ(c.gates()[1], Gate::zpow(0.5, 1));
}

TEST(CircuitText, CommentsBlankLinesAndScientificNotation) {
  const Circuit c = parse_circuit("# header comment\n\nqubits 3  # three\n  zpow -2.5e-1 2\ncz 0 2 # tail\nx 1");
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c.gates()[0], Gate::zpow(-0.25, 2));
  EXPECT_EQ(c.gates()[1], Gate::cz(0, 2));
  EXPECT_EQ(c.gates()[2], Gate::x(1));
}

TEST(CircuitText, ErrorsCarryLineNumbers) {
  auto line_of = [](std::string_view text) {
    try {
      parse_circuit(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return -1;
  };
  EXPECT_EQ(line_of("qubits 2\nh 5\n"), 2);
  EXPECT_EQ(line_of("qubits 2\nh 0\nfoo 1\n"), 3);
  EXPECT_EQ(line_of("qubits 2\n\ncnot 0\n"), 3);
  EXPECT_EQ(line_of("qubits 2\ncz 1 1\n"), 2);
  EXPECT_EQ(line_of("qubits 2\nzpow abc 0\n"), 2);
  EXPECT_EQ(line_of("h 0\n"), 1);
  EXPECT_EQ(line_of(""), 1);
  try {
    parse_circuit("qubits 2\nh 5\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("out of range"), std::string::npos);
  }
}

TEST(CircuitText, RoundTripProperty) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Circuit c = oracle::random_circuit(1 + trial % 8, trial, rng);
    const std::string text = serialize_circuit(c);
    const Circuit back = parse_circuit(text);
    ASSERT_EQ(back, c);
    ASSERT_EQ(serialize_circuit(back), text);
  }
}

TEST(GateTensor, Hadamard) {
  const GateTensor t = gate_tensor(Gate::h(0));
  const double s = 1.0 / std::sqrt(2.0);
  ASSERT_EQ(t.values.size(), 4u);
  EXPECT_NEAR(t.values[0].real(), s, 1e-15);
  EXPECT_NEAR(t.values[1].real(), s, 1e-15);
  EXPECT_NEAR(t.values[2].real(), s, 1e-15);
  EXPECT_NEAR(t.values[3].real(), -s, 1e-15);
}

TEST(GateTensor, ZPowIsCompressedDiagonal) {
  const GateTensor t = gate_tensor(Gate::zpow(1.0, 3));
  ASSERT_EQ(t.values.size(), 2u);
  ASSERT_EQ(t.axes.size(), 1u);
  EXPECT_EQ(t.axes[0], (TensorAxis{3, AxisRole::Diagonal}));
  EXPECT_NEAR(std::abs(t.values[0] - Complex(1, 0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(t.values[1] - Complex(-1, 0)), 0.0, 1e-15);
}

TEST(GateTensor, CnotTruthTable) {
  const GateTensor t = gate_tensor(Gate::cnot(0, 1));
  ASSERT_EQ(t.values.size(), 8u);
  for (int c = 0; c < 2; ++c) {
    for (int i = 0; i < 2; ++i) {
      for (int o = 0; o < 2; ++o) {
        const bool one = (c == 0 && i == o) || (c == 1 && i != o);
        EXPECT_EQ(t.values[static_cast<std::size_t>(c * 4 + i * 2 + o)], Complex(one ? 1.0 : 0.0, 0.0));
      }
    }
  }
}

TEST(GateTensor, DiagonalMetadata) {
  EXPECT_TRUE(is_diagonal_on(GateKind::ZPow, 0));
  EXPECT_TRUE(is_diagonal_on(GateKind::CZ, 0));
  EXPECT_TRUE(is_diagonal_on(GateKind::CZ, 1));
  EXPECT_TRUE(is_diagonal_on(GateKind::CNOT, 0));
  EXPECT_FALSE(is_diagonal_on(GateKind::CNOT, 1));
  EXPECT_FALSE(is_diagonal_on(GateKind::H, 0));
  EXPECT_FALSE(is_diagonal_on(GateKind::X, 0));
}

TEST(GateTensor, DenseMatricesAreUnitary) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> t(-4.0, 4.0);
  std::vector<Gate> gates{Gate::h(0), Gate::x(0), Gate::cnot(0, 1), Gate::cnot(1, 0), Gate::cz(0, 1)};
  for (int i = 0; i < 50; ++i) gates.push_back(Gate::zpow(t(rng), 0));
  for (const Gate& g : gates) {
    const auto m = gate_dense_matrix(g);
    const std::size_t dim = g.qubits.size() == 2 ? 4 : 2;
    for (std::size_t r = 0; r < dim; ++r) {
      for (std::size_t c = 0; c < dim; ++c) {
        Complex dot = 0.0;
        for (std::size_t k = 0; k < dim; ++k) dot += m[r * dim + k] * std::conj(m[c * dim + k]);
        ASSERT_NEAR(std::abs(dot - Complex(r == c ? 1.0 : 0.0, 0.0)), 0.0, 1e-12) << gate_name(g.kind);
      }
    }
  }
}

TEST(GateTensor, DenseCnotIsPermutation) {
  // Rows/cols: first gate qubit (control) is the most significant bit.
  const auto m = gate_dense_matrix(Gate::cnot(0, 1));
  const int expected_col[4] = {0, 1, 3, 2};
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      EXPECT_EQ(m[static_cast<std::size_t>(r * 4 + c)], Complex(c == expected_col[r] ? 1.0 : 0.0, 0.0));
    }
  }
}

TEST(Circuit, AddValidatesGates) {
  Circuit c(2);
  EXPECT_THROW(c.add(Gate::h(2)), ValidationError);
  EXPECT_THROW(c.add(Gate::cnot(1, 1)), ValidationError);
  EXPECT_THROW(c.add(Gate{GateKind::CZ, 0.0, {0}}), ValidationError);
  EXPECT_NO_THROW(c.add(Gate::cz(0, 1)));
}
