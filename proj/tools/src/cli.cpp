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

#include "qtn/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "qtn/circuit.hpp"
#include "qtn/contraction.hpp"
#include "qtn/energy.hpp"
#include "qtn/error.hpp"
#include "qtn/io.hpp"
#include "qtn/ordering.hpp"
#include "qtn/random.hpp"
#include "qtn/slicing.hpp"
#include "qtn/tensornet.hpp"

namespace qtn::cli {

namespace {

using Json = nlohmann::ordered_json;

// Named sub-streams of --seed.
constexpr std::uint64_t kOrderStream = 1;
constexpr std::uint64_t kAngleStream = 2;

struct Options {
  std::uint64_t seed = 0;
  int jobs = 1;
  double tau = 0.5;
  int reps = 10;
  int n_slices = 1;
  int r = 1;
  std::string out;
  bool no_timestamp = false;

  std::string algo = "greedy";
  std::string circuit;
  std::string graph;
  std::string schedule;
  std::string csv;
  std::string bits;
  std::string in_bits;
  std::vector<int> batch;
  std::vector<double> gammas;
  std::vector<double> betas;
  int nodes = 0;
  int degree = 3;
  int p = 1;
  int width_vs_n = -1;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot read " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw ValidationError("cannot write " + path);
  file << text;
  if (!file) throw std::runtime_error("write failed for " + path);
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream s;
  s << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return s.str();
}

Json complex_json(Complex z) { return Json{{"re", z.real()}, {"im", z.imag()}}; }

class Command {
 public:
  Command(std::string name, const Options& opt) : name_(std::move(name)), opt_(opt) {
    meta_["command"] = name_;
    meta_["seed"] = opt.seed;
  }

  Json& meta() { return meta_; }

  RGreedyParams rgreedy_params() const {
    return {opt_.tau, opt_.reps, derive_seed(opt_.seed, kOrderStream)};
  }

  Orderer orderer() {
    meta_["algo"] = opt_.algo;
    if (opt_.algo == "greedy") return greedy_orderer();
    meta_["tau"] = opt_.tau;
    meta_["reps"] = opt_.reps;
    return rgreedy_orderer(rgreedy_params());
  }

  // Document with the meta block first, then the payload's keys.
  std::string finish(const Json& payload) {
    Json doc;
    if (!opt_.no_timestamp) meta_["timestamp"] = utc_timestamp();
    doc["meta"] = meta_;
    for (const auto& [key, value] : payload.items()) doc[key] = value;
    return doc.dump(2) + "\n";
  }

 private:
  std::string name_;
  const Options& opt_;
  Json meta_;
};

Circuit load_circuit(const Options& opt) { return parse_circuit(read_file(opt.circuit)); }

ProblemGraph load_graph(const Options& opt) { return graph_from_json(read_file(opt.graph)); }

// Angles from the flags, or drawn uniformly from [0, pi) when both are absent.
std::pair<std::vector<double>, std::vector<double>> angles(const Options& opt, Command& cmd) {
  if (opt.gammas.empty() != opt.betas.empty()) throw ValidationError("give both --gammas and --betas, or neither");
  std::vector<double> gammas = opt.gammas;
  std::vector<double> betas = opt.betas;
  if (gammas.empty()) {
    if (opt.p < 1) throw ValidationError("--p must be at least 1");
    std::mt19937_64 rng(derive_seed(opt.seed, kAngleStream));
    for (int k = 0; k < opt.p; ++k) {
      gammas.push_back(std::numbers::pi * uniform01(rng));
      betas.push_back(std::numbers::pi * uniform01(rng));
    }
  }
  cmd.meta()["gammas"] = gammas;
  cmd.meta()["betas"] = betas;
  return {gammas, betas};
}

Bits bits_or_zeros(const std::string& text, int n, const char* flag) {
  if (text.empty()) return Bits(static_cast<std::size_t>(n), 0);
  Bits b = bits_from_string(text);
  if (static_cast<int>(b.size()) != n) {
    throw ValidationError(std::string(flag) + " has " + std::to_string(b.size()) + " bits, circuit has " +
                          std::to_string(n) + " qubits");
  }
  return b;
}

// Amplitude (or batch) network for the circuit, with fixed labels applied.
TensorNetwork simulation_network(const Circuit& c, const Options& opt, Command& cmd) {
  const Bits in = bits_or_zeros(opt.in_bits, c.num_qubits(), "--in-bits");
  const Bits out = bits_or_zeros(opt.bits, c.num_qubits(), "--bits");
  cmd.meta()["circuit"] = opt.circuit;
  cmd.meta()["in_bits"] = bits_to_string(in);
  cmd.meta()["bits"] = bits_to_string(out);
  if (!opt.batch.empty()) cmd.meta()["batch"] = opt.batch;
  return apply_fixed(circuit_to_network(c, in, OutputSpec::open(opt.batch, out)));
}

std::string cmd_gen_graph(const Options& opt) {
  Command cmd("gen-graph", opt);
  cmd.meta()["nodes"] = opt.nodes;
  cmd.meta()["degree"] = opt.degree;
  const ProblemGraph g = random_regular_graph(opt.nodes, opt.degree, opt.seed);
  return cmd.finish(Json::parse(graph_to_json(g)));
}

std::string cmd_qaoa(const Options& opt) {
  Command cmd("qaoa", opt);
  const ProblemGraph g = load_graph(opt);
  const auto [gammas, betas] = angles(opt, cmd);
  const Circuit c = build_qaoa_circuit(g, gammas, betas);
  // The circuit format has no metadata block; echo it as a comment line.
  Json meta = cmd.meta();
  meta["graph"] = opt.graph;
  if (!opt.no_timestamp) meta["timestamp"] = utc_timestamp();
  return "# " + meta.dump() + "\n" + serialize_circuit(c);
}

std::string cmd_order(const Options& opt) {
  Command cmd("order", opt);
  const Circuit c = load_circuit(opt);
  const TensorNetwork net = simulation_network(c, opt, cmd);
  const LineGraph g = line_graph(net);
  Json payload;
  if (opt.algo == "rgreedy") {
    cmd.orderer();
    const RGreedyResult r = rgreedy_search(g, cmd.rgreedy_params(), net.open);
    payload = Json::parse(order_to_json(r.best));
    payload["pass_widths"] = r.pass_widths;
    payload["best_pass"] = r.best_pass;
  } else {
    payload = Json::parse(order_to_json(cmd.orderer()(g, net.open)));
  }
  return cmd.finish(payload);
}

std::string cmd_slice_plan(const Options& opt, std::ostream& out) {
  Command cmd("slice-plan", opt);
  const Circuit c = load_circuit(opt);
  const TensorNetwork net = simulation_network(c, opt, cmd);
  const LineGraph g = line_graph(net);
  const Orderer orderer = cmd.orderer();
  const int csv_n = opt.width_vs_n >= 0 ? opt.width_vs_n : opt.n_slices;
  cmd.meta()["n_slices"] = opt.n_slices;
  cmd.meta()["r"] = opt.r;
  cmd.meta()["width_vs_n"] = csv_n;
  const SliceSchedule s = find_slice_schedule(g, opt.n_slices, opt.r, orderer, net.open);
  const WidthVsNReport report = width_vs_n_report(g, csv_n, orderer, net.open);
  Json payload = Json::parse(schedule_to_json(s));
  payload["unsliced_width"] = report.min_width.front();
  const std::string csv = width_vs_n_csv(report);
  std::string csv_path = opt.csv;
  if (csv_path.empty() && !opt.out.empty() && opt.out != "-") csv_path = opt.out + ".widths.csv";
  if (csv_path.empty()) return cmd.finish(payload) + "\n" + csv;
  emit(csv_path, csv, out);
  return cmd.finish(payload);
}

std::string cmd_simulate(const Options& opt) {
  Command cmd("simulate", opt);
  const Circuit c = load_circuit(opt);
  const TensorNetwork net = simulation_network(c, opt, cmd);
  cmd.meta()["jobs"] = opt.jobs;
  const auto start = std::chrono::steady_clock::now();
  ContractionResult result;
  int width = 0;
  if (!opt.schedule.empty()) {
    cmd.meta()["schedule"] = opt.schedule;
    const SliceSchedule s = schedule_from_json(read_file(opt.schedule));
    result = execute_sliced(net, s, opt.jobs);
    width = s.reported_width;
  } else {
    const EliminationOrder order = cmd.orderer()(line_graph(net), net.open);
    result = contract(net, order);
    width = order.width;
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  Json payload;
  if (result.is_batch()) {
    Bits bits = bits_or_zeros(opt.bits, c.num_qubits(), "--bits");
    const std::size_t a = opt.batch.size();
    Json entries = Json::array();
    for (std::size_t i = 0; i < result.batch.size(); ++i) {
      for (std::size_t k = 0; k < a; ++k) bits[static_cast<std::size_t>(opt.batch[k])] = static_cast<int>((i >> (a - 1 - k)) & 1U);
      entries.push_back({{"bits", bits_to_string(bits)}, {"value", complex_json(result.batch[i])}});
    }
    payload["batch"] = entries;
  } else {
    payload["amplitude"] = complex_json(result.value);
  }
  payload["width"] = width;
  payload["peak_rank"] = result.peak_rank;
  if (!opt.no_timestamp) payload["wall_time_s"] = seconds;
  return cmd.finish(payload);
}

std::string cmd_energy(const Options& opt) {
  Command cmd("energy", opt);
  const ProblemGraph g = load_graph(opt);
  cmd.meta()["graph"] = opt.graph;
  const auto [gammas, betas] = angles(opt, cmd);
  const Circuit c = build_qaoa_circuit(g, gammas, betas);
  const EnergyResult r = maxcut_energy(c, g, cmd.orderer());
  Json edges = Json::array();
  for (const EdgeEnergy& e : r.edges) {
    edges.push_back({{"edge", {e.edge.first, e.edge.second}}, {"zz", e.zz}, {"energy", e.energy}, {"width", e.width}});
  }
  return cmd.finish(Json{{"edges", edges}, {"total", r.total}});
}

std::string cmd_cost_profile(const Options& opt) {
  Command cmd("cost-profile", opt);
  const Circuit c = load_circuit(opt);
  const TensorNetwork net = simulation_network(c, opt, cmd);
  const EliminationOrder order = cmd.orderer()(line_graph(net), net.open);
  return cost_profile_csv(cost_profile(net, order));
}

void add_network_flags(CLI::App* sub, Options& opt) {
  sub->add_option("--circuit", opt.circuit, "Circuit text file")->required();
  sub->add_option("--bits", opt.bits, "Output bitstring, qubit 0 first (default all zeros)");
  sub->add_option("--in-bits", opt.in_bits, "Input bitstring (default all zeros)");
  sub->add_option("--batch", opt.batch, "Qubits left open for a batch of amplitudes")->delimiter(',');
}

void add_order_flags(CLI::App* sub, Options& opt) {
  sub->add_option("--algo", opt.algo, "Ordering heuristic")->check(CLI::IsMember({"greedy", "rgreedy"}));
  sub->add_option("--tau", opt.tau, "rgreedy temperature")->check(CLI::PositiveNumber);
  sub->add_option("--reps", opt.reps, "rgreedy passes")->check(CLI::PositiveNumber);
}

void add_angle_flags(CLI::App* sub, Options& opt) {
  sub->add_option("--graph", opt.graph, "Graph JSON file")->required();
  sub->add_option("--p", opt.p, "Depth when angles are drawn from --seed");
  sub->add_option("--gammas", opt.gammas, "Comma-separated cost angles")->delimiter(',');
  sub->add_option("--betas", opt.betas, "Comma-separated mixer angles")->delimiter(',');
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Tensor-network simulation of QAOA circuits", "qtn"};
  app.require_subcommand(1);
  app.add_option("--seed", opt.seed, "Master seed for every random choice");
  app.add_option("--jobs", opt.jobs, "Worker threads for sliced simulation")->check(CLI::PositiveNumber);
  app.add_option("--out", opt.out, "Output file (default stdout)");
  app.add_flag("--no-timestamp", opt.no_timestamp, "Omit timestamp and wall time from outputs");

  CLI::App* gen = app.add_subcommand("gen-graph", "Random regular graph");
  gen->add_option("--nodes", opt.nodes, "Number of nodes")->required();
  gen->add_option("--degree", opt.degree, "Degree");

  CLI::App* qaoa = app.add_subcommand("qaoa", "Build a QAOA circuit for a graph");
  add_angle_flags(qaoa, opt);

  CLI::App* order = app.add_subcommand("order", "Elimination order of an amplitude network");
  add_network_flags(order, opt);
  add_order_flags(order, opt);

  CLI::App* plan = app.add_subcommand("slice-plan", "Step-dependent slicing schedule");
  add_network_flags(plan, opt);
  add_order_flags(plan, opt);
  plan->add_option("--n-slices", opt.n_slices, "Number of labels to slice")->check(CLI::NonNegativeNumber);
  plan->add_option("--r", opt.r, "Labels sliced per round")->check(CLI::PositiveNumber);
  plan->add_option("--csv", opt.csv, "Width-vs-n CSV path (default <out>.widths.csv)");
  plan->add_option("--width-vs-n", opt.width_vs_n, "Largest n in the width-vs-n CSV (default --n-slices)")
      ->check(CLI::NonNegativeNumber);

  CLI::App* sim = app.add_subcommand("simulate", "Compute an amplitude or a batch of amplitudes");
  add_network_flags(sim, opt);
  add_order_flags(sim, opt);
  sim->add_option("--schedule", opt.schedule, "Slicing schedule JSON from slice-plan");

  CLI::App* energy = app.add_subcommand("energy", "MaxCut expectation of a QAOA state");
  add_angle_flags(energy, opt);
  add_order_flags(energy, opt);

  CLI::App* cost = app.add_subcommand("cost-profile", "Per-step contraction cost CSV");
  add_network_flags(cost, opt);
  add_order_flags(cost, opt);

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    std::string text;
    if (gen->parsed()) text = cmd_gen_graph(opt);
    if (qaoa->parsed()) text = cmd_qaoa(opt);
    if (order->parsed()) text = cmd_order(opt);
    if (plan->parsed()) text = cmd_slice_plan(opt, out);
    if (sim->parsed()) text = cmd_simulate(opt);
    if (energy->parsed()) text = cmd_energy(opt);
    if (cost->parsed()) text = cmd_cost_profile(opt);
    emit(opt.out, text, out);
    return 0;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace qtn::cli
