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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "oracle.hpp"
#include "qtn/contraction.hpp"
#include "qtn/error.hpp"
#include "qtn/ordering.hpp"
#include "qtn/tensornet.hpp"

using namespace qtn;

TEST(CircuitToNetwork, SingleHadamard) {
  Circuit c(1);
  c.add(Gate::h(0));
  const TensorNetwork net = circuit_to_network(c, Bits{0}, OutputSpec::fixed({0}));
  ASSERT_EQ(net.tensors.size(), 1u);
  EXPECT_EQ(net.num_indices, 2);
  EXPECT_EQ(net.tensors[0].labels(), (std::vector<Label>{0, 1}));
  EXPECT_EQ(net.fixed, (std::map<Label, int>{{0, 0}, {1, 0}}));
  EXPECT_EQ(net.output_labels, std::vector<Label>{0});
  EXPECT_EQ(net.input_labels, std::vector<Label>{1});
  EXPECT_TRUE(line_graph(net).vertices().empty());
}

TEST(CircuitToNetwork, K4QaoaLabeling) {
  const std::vector<double> gammas{0.4}, betas{0.9};
  const Circuit c = build_qaoa_circuit(complete_graph(4), gammas, betas);
  const Bits zeros(4, 0);
  const TensorNetwork net = circuit_to_network(c, zeros, OutputSpec::fixed(zeros));
  // 4 wires + one fresh label per non-diagonal incidence: 4 H, 12 CNOT
  // targets, 8 mixer H.
  EXPECT_EQ(net.num_indices, 28);
  EXPECT_EQ(net.output_labels, (std::vector<Label>{0, 1, 2, 3}));
  std::vector<Label> inputs = net.input_labels;
  std::sort(inputs.begin(), inputs.end());
  EXPECT_EQ(inputs, (std::vector<Label>{24, 25, 26, 27}));
  EXPECT_EQ(net.fixed.size(), 8u);
  EXPECT_EQ(net.tensors.size(), 34u);

  const LineGraph g = line_graph(net);
  EXPECT_EQ(g.num_vertices(), 20);
  std::size_t max_live = 0;
  for (const Tensor& t : net.tensors) {
    std::vector<Label> live;
    for (Label l : t.labels()) {
      if (!net.fixed.contains(l)) live.push_back(l);
    }
    max_live = std::max(max_live, live.size());
    for (std::size_t i = 0; i < live.size(); ++i) {
      for (std::size_t j = i + 1; j < live.size(); ++j) EXPECT_TRUE(g.adjacent(live[i], live[j]));
    }
  }
  EXPECT_EQ(max_live, 3u);
  EXPECT_LE(greedy_order(g).width, 4);
}

TEST(CircuitToNetwork, DiagonalGateSharesWireLabel) {
  Circuit c(2);
  c.add(Gate::zpow(0.25, 0));
  const TensorNetwork net = circuit_to_network(c, Bits{0, 0}, OutputSpec::fixed({0, 0}));
  ASSERT_EQ(net.tensors.size(), 1u);
  EXPECT_EQ(net.tensors[0].rank(), 1);
  EXPECT_EQ(net.tensors[0].labels(), std::vector<Label>{0});
  EXPECT_EQ(net.input_labels[0], net.output_labels[0]);
}

TEST(CircuitToNetwork, LabelCountAndSlotInvariant) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + trial % 6;
    const Circuit c = oracle::random_circuit(n, 30, rng);
    const Bits bits(static_cast<std::size_t>(n), 0);
    const TensorNetwork net = circuit_to_network(c, bits, OutputSpec::fixed(bits));
    int fresh = 0;
    std::map<Label, int> non_diagonal_slots;
    for (std::size_t gi = 0; gi < c.size(); ++gi) {
      const Gate& g = c.gates()[gi];
      for (std::size_t s = 0; s < g.qubits.size(); ++s) fresh += is_diagonal_on(g.kind, static_cast<int>(s)) ? 0 : 1;
      // Compressed rank equals the number of tensor axes.
      ASSERT_EQ(net.tensors[gi].rank(), static_cast<int>(gate_tensor(g).axes.size()));
    }
    ASSERT_EQ(net.num_indices, n + fresh);
    // Every label is carried by at most two non-diagonal slots: count how
    // many tensors use it as a non-diagonal axis via the wire structure.
    std::vector<Label> wire(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q) wire[static_cast<std::size_t>(q)] = net.input_labels[static_cast<std::size_t>(q)];
    for (std::size_t gi = 0; gi < c.size(); ++gi) {
      const Gate& g = c.gates()[gi];
      for (std::size_t s = 0; s < g.qubits.size(); ++s) {
        const Label current = wire[static_cast<std::size_t>(g.qubits[s])];
        ASSERT_TRUE(net.tensors[gi].contains(current));
        if (!is_diagonal_on(g.kind, static_cast<int>(s))) {
          ++non_diagonal_slots[current];
          // The tensor also carries the new wire label.
          const auto& labels = net.tensors[gi].labels();
          const auto it = std::find_if(labels.begin(), labels.end(), [&](Label l) {
            return l != current && std::none_of(g.qubits.begin(), g.qubits.end(), [&](int q) {
              return wire[static_cast<std::size_t>(q)] == l;
            });
          });
          ASSERT_NE(it, labels.end());
          wire[static_cast<std::size_t>(g.qubits[s])] = *it;
          ++non_diagonal_slots[*it];
        }
      }
    }
    for (int q = 0; q < n; ++q) ASSERT_EQ(wire[static_cast<std::size_t>(q)], q);
    for (const auto& [label, count] : non_diagonal_slots) ASSERT_LE(count, 2) << "label " << label;
  }
}

TEST(CircuitToNetwork, RejectsBadBitstrings) {
  Circuit c(2);
  c.add(Gate::h(0));
  EXPECT_THROW(circuit_to_network(c, Bits{0}, OutputSpec::fixed({0, 0})), ValidationError);
  EXPECT_THROW(circuit_to_network(c, Bits{0, 2}, OutputSpec::fixed({0, 0})), ValidationError);
  EXPECT_THROW(circuit_to_network(c, Bits{0, 0}, OutputSpec::open({3}, {0, 0})), ValidationError);
}

TEST(LineGraphOfNetwork, ChainOfTwoTensors) {
  TensorNetwork net;
  net.num_indices = 3;
  net.tensors.emplace_back(std::vector<Label>{0, 1}, std::vector<Complex>(4, 1.0));
  net.tensors.emplace_back(std::vector<Label>{1, 2}, std::vector<Complex>(4, 1.0));
  const LineGraph g = line_graph(net);
  EXPECT_EQ(g.vertices(), (std::vector<Label>{0, 1, 2}));
  EXPECT_EQ(g.num_edges(), 2);
  EXPECT_TRUE(g.adjacent(0, 1));
  EXPECT_TRUE(g.adjacent(1, 2));
  EXPECT_FALSE(g.adjacent(0, 2));
}

TEST(LineGraphOfNetwork, NeverContainsFixedLabels) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 2 + trial % 5;
    const Circuit c = oracle::random_circuit(n, 25, rng);
    const TensorNetwork net =
        circuit_to_network(c, oracle::random_bits(n, rng), OutputSpec::fixed(oracle::random_bits(n, rng)));
    const LineGraph g = line_graph(net);
    for (const auto& [label, bit] : net.fixed) ASSERT_FALSE(g.contains(label));
  }
}

TEST(ApplyFixed, HadamardCorner) {
  Circuit c(1);
  c.add(Gate::h(0));
  const TensorNetwork net = apply_fixed(circuit_to_network(c, Bits{0}, OutputSpec::fixed({0})));
  EXPECT_TRUE(net.fixed.empty());
  ASSERT_EQ(net.tensors.size(), 1u);
  EXPECT_EQ(net.tensors[0].rank(), 0);
  EXPECT_NEAR(std::abs(net.tensors[0].scalar_value() - Complex(1 / std::sqrt(2.0), 0)), 0.0, 1e-15);
}

TEST(ApplyFixed, ZPowDiagonalEntry) {
  const double t = 0.37;
  Circuit c(1);
  c.add(Gate::zpow(t, 0));
  const TensorNetwork net = apply_fixed(circuit_to_network(c, Bits{1}, OutputSpec::fixed({1})));
  ASSERT_EQ(net.tensors.size(), 1u);
  EXPECT_NEAR(std::abs(net.tensors[0].scalar_value() - std::polar(1.0, std::numbers::pi * t)), 0.0, 1e-15);
}

TEST(ApplyFixed, CnotControlOneIsX) {
  TensorNetwork net;
  const GateTensor gt = gate_tensor(Gate::cnot(0, 1));
  net.tensors.push_back(Tensor::from_axes(std::vector<Label>{0, 1, 2}, gt.values));
  net.num_indices = 3;
  net.fixed[0] = 1;
  const TensorNetwork sliced = apply_fixed(net);
  const Tensor& x = sliced.tensors[0];
  EXPECT_EQ(x.labels(), (std::vector<Label>{1, 2}));
  const std::vector<Complex> expected{0.0, 1.0, 1.0, 0.0};
  EXPECT_EQ(std::vector<Complex>(x.values().begin(), x.values().end()), expected);
}

TEST(EnergyNetwork, SingleEdgeZeroAngles) {
  const ProblemGraph g{2, {{0, 1}}};
  const std::vector<double> zero{0.0};
  const Circuit c = build_qaoa_circuit(g, zero, zero);
  const TensorNetwork net = apply_fixed(energy_network(c, g, {0, 1}));
  const Complex zz = contract(net, greedy_order(line_graph(net))).value;
  EXPECT_NEAR(zz.real(), 0.0, 1e-12);
  EXPECT_NEAR(zz.imag(), 0.0, 1e-12);
  EXPECT_NEAR(0.5 * (1.0 - zz.real()), 0.5, 1e-12);
}

TEST(EnergyNetwork, RejectsEdgeOutsideGraph) {
  const ProblemGraph g{3, {{0, 1}}};
  const std::vector<double> a{0.1};
  const Circuit c = build_qaoa_circuit(g, a, a);
  EXPECT_THROW(energy_network(c, g, {1, 2}), ValidationError);
}

TEST(EnergyNetwork, MatchesOracleZZ) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    ProblemGraph g;
    const Circuit c = oracle::random_qaoa(6 + 2 * static_cast<int>(seed % 3), 1 + seed % 2, seed, &g);
    oracle::StateVector sv(g.num_nodes, Bits(static_cast<std::size_t>(g.num_nodes), 0));
    sv.apply(c);
    for (const auto& edge : g.edges) {
      const TensorNetwork net = apply_fixed(energy_network(c, g, edge));
      const Complex zz = contract(net, greedy_order(line_graph(net))).value;
      ASSERT_NEAR(zz.real(), sv.expect_zz(edge.first, edge.second), 1e-10);
      ASSERT_NEAR(zz.imag(), 0.0, 1e-10);
    }
  }
}

TEST(Bits, ParseAndFormat) {
  EXPECT_EQ(bits_from_string("0110"), (Bits{0, 1, 1, 0}));
  EXPECT_EQ(bits_to_string(Bits{1, 0, 1}), "101");
  EXPECT_THROW(bits_from_string("01x"), ValidationError);
}
