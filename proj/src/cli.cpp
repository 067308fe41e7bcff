// Copyright 2026 The cc832 Authors
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

#include "cc832/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cc832/builders.hpp"
#include "cc832/codes.hpp"
#include "cc832/faults.hpp"
#include "cc832/runner.hpp"
#include "cc832/synth.hpp"

namespace cc832 {

namespace {

int default_threads() {
  if (const char* env = std::getenv("CC832_THREADS")) {
    int t = std::atoi(env);
    if (t >= 1) return t;
  }
  return 1;
}

void write_out(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text << "\n";
  } else {
    std::ofstream f(path);
    if (!f) throw std::invalid_argument("cannot open output file: " + path);
    f << text;
  }
}

Circuit load_circuit(const std::string& name, const std::string& file) {
  if (!file.empty()) {
    std::ifstream f(file);
    if (!f) throw std::invalid_argument("cannot open circuit file: " + file);
    std::stringstream ss;
    ss << f.rdbuf();
    return deserialize(ss.str());
  }
  return circuit_by_name(name);
}

nlohmann::json fault_to_json(const InjectedFault& f) {
  nlohmann::json j;
  j["instruction"] = f.index;
  if (f.flip_record) {
    j["kind"] = "record_flip";
  } else {
    j["kind"] = "pauli";
    j["pauli"] = f.pauli.str();
  }
  return j;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"simulation, synthesis and verification toolkit for the cube-code one-bit adder"};
  app.require_subcommand(1);

  std::string circuit_name = "ft_adder", circuit_file, out_path, format = "json";
  uint64_t shots = 100000, seed = 1, trajectories = 2000;
  double p2 = 0.0, pmeas = 0.0, p1 = 0.0, pinit = 0.0;
  int threads = default_threads();
  std::string mode = "single";
  std::string target = "832_plus3";
  uint64_t node_cap = 10'000'000;
  int dpar = 2, patches = 18;
  bool probe = false;

  auto add_circuit_opts = [&](CLI::App* sub) {
    sub->add_option("--circuit", circuit_name, "registry circuit name");
    sub->add_option("--in", circuit_file, "circuit JSON file (overrides --circuit)");
  };

  CLI::App* build = app.add_subcommand("build", "emit a registry circuit");
  add_circuit_opts(build);
  build->add_option("--format", format, "json|qasm");
  build->add_option("--out", out_path, "output path (default stdout)");

  CLI::App* sim = app.add_subcommand("simulate", "Monte-Carlo shots under Pauli noise");
  add_circuit_opts(sim);
  sim->add_option("--shots", shots);
  sim->add_option("--seed", seed);
  sim->add_option("--p2", p2, "two-qubit depolarizing probability");
  sim->add_option("--pmeas", pmeas, "measurement flip probability");
  sim->add_option("--p1", p1, "single-qubit depolarizing probability");
  sim->add_option("--pinit", pinit, "preparation flip probability");
  sim->add_option("--threads", threads);
  sim->add_option("--format", format, "json|csv");
  sim->add_option("--out", out_path);
  sim->add_flag("--fidelity-probe", probe, "report accepted-trajectory pre-readout fidelity");
  sim->add_option("--trajectories", trajectories, "trajectories for --fidelity-probe");

  CLI::App* flt = app.add_subcommand("faults", "exhaustive fault injection reports");
  add_circuit_opts(flt);
  flt->add_option("--mode", mode, "single|pairs");
  flt->add_option("--threads", threads);
  flt->add_option("--out", out_path);

  CLI::App* syn = app.add_subcommand("synth", "minimal-CNOT preparation search");
  syn->add_option("--target", target, "832_plus3|422_zero2|bell|ghz3");
  syn->add_option("--node-cap", node_cap);
  syn->add_option("--out", out_path);

  CLI::App* aud = app.add_subcommand("audit", "single-fault fault-tolerance audit");
  add_circuit_opts(aud);
  aud->add_option("--out", out_path);

  CLI::App* cmp = app.add_subcommand("compare", "surface-code patch resource estimate");
  cmp->add_option("--d", dpar, "code distance");
  cmp->add_option("--patches", patches, "patch count");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n" << app.help();
    return 2;
  }

  try {
    if (build->parsed()) {
      Circuit c = load_circuit(circuit_name, circuit_file);
      if (format == "qasm") {
        write_out(export_qasm_like(c), out_path, out);
      } else if (format == "json") {
        write_out(serialize(c), out_path, out);
      } else {
        err << "usage error: unknown format " << format << "\n";
        return 2;
      }
    } else if (sim->parsed()) {
      Circuit c = load_circuit(circuit_name, circuit_file);
      NoiseModel nm{p1, p2, pmeas, pinit};
      if (probe) {
        double f = fidelity_probe(c, nm, trajectories, seed, threads);
        nlohmann::json j = {{"circuit", c.name},
                            {"trajectories", trajectories},
                            {"mean_pre_readout_fidelity", f}};
        write_out(j.dump(2), out_path, out);
      } else {
        RunReport rep = run_shots(c, nm, shots, seed, threads);
        write_out(format == "csv" ? rep.to_csv() : rep.to_json(), out_path, out);
      }
    } else if (flt->parsed()) {
      Circuit c = load_circuit(circuit_name, circuit_file);
      nlohmann::json j;
      j["circuit"] = c.name;
      if (mode == "single") {
        AuditReport rep = audit_single_faults(c);
        j["mode"] = "single";
        j["total_faults"] = rep.total_faults;
        j["benign"] = rep.benign;
        j["always_detected"] = rep.always_detected;
        j["malicious"] = rep.malicious;
        j["malicious_entries"] = nlohmann::json::array();
        for (const auto& e : rep.malicious_entries) {
          nlohmann::json je = fault_to_json(e.fault);
          je["witness_records"] = e.outcome.witness_records;
          je["accept_probability"] = e.outcome.accept_probability;
          je["error_probability_given_accept"] = e.outcome.error_probability_given_accept;
          j["malicious_entries"].push_back(std::move(je));
        }
      } else if (mode == "pairs") {
        PairCountReport rep = count_malicious_pairs(c, threads);
        j["mode"] = "pairs";
        j["pairs_total"] = rep.pairs_total;
        j["malicious_pairs"] = rep.malicious;
        j["convention"] = rep.convention;
        j["samples"] = nlohmann::json::array();
        for (const auto& s : rep.samples) {
          j["samples"].push_back({{"fault_a", fault_to_json(s.fault_a)},
                                  {"fault_b", fault_to_json(s.fault_b)},
                                  {"witness_records", s.witness_records}});
        }
      } else {
        err << "usage error: unknown mode " << mode << "\n";
        return 2;
      }
      write_out(j.dump(2), out_path, out);
    } else if (syn->parsed()) {
      StabilizerState st(1);
      if (target == "832_plus3") {
        st = code_832().plus_state();
      } else if (target == "422_zero2") {
        st = code_422().zero_state();
      } else if (target == "bell") {
        st = StabilizerState::from_generators(
            2, {PauliString::parse("XX"), PauliString::parse("ZZ")});
      } else if (target == "ghz3") {
        st = StabilizerState::from_generators(
            3, {PauliString::parse("XXX"), PauliString::parse("ZZI"), PauliString::parse("IZZ")});
      } else {
        err << "usage error: unknown target " << target << "\n";
        return 2;
      }
      SynthOptions opts;
      opts.node_cap = node_cap;
      SynthResult res = min_cnot_prep(st, is_block_product, opts);
      nlohmann::json j;
      j["target"] = target;
      j["total_cnots"] = res.total_cnots;
      j["search_moves"] = res.moves.size();
      j["endpoint_bell_pairs"] = res.endpoint_bell_pairs;
      j["circuit"] = nlohmann::json::parse(serialize(res.prep));
      write_out(j.dump(2), out_path, out);
    } else if (aud->parsed()) {
      Circuit c = load_circuit(circuit_name, circuit_file);
      nlohmann::json j;
      j["circuit"] = c.name;
      if (c.name == "hadamard_double" || c.name == "hadamard_single") {
        ChannelSpec spec;
        spec.hadamard = c.name == "hadamard_double" ? std::array<bool, 3>{true, true, false}
                                                    : std::array<bool, 3>{false, true, false};
        ChannelCheck chk = verify_channel(c, spec);
        AuditReport rep = audit_single_faults_channel(c, spec);
        j["logical_action_exact"] = chk.ok;
        j["total_faults"] = rep.total_faults;
        j["malicious"] = rep.malicious;
      } else if (c.name == "ft_prep" || c.name == "nonft_prep") {
        CodeSpec cube = code_832();
        std::vector<PauliString> gens = cube.stabilizers;
        for (const auto& l : cube.logical_x) gens.push_back(l);
        AuditReport rep = audit_single_faults_state(c, {0, 1, 2, 3, 4, 5, 6, 7}, gens);
        j["total_faults"] = rep.total_faults;
        j["malicious"] = rep.malicious;
      } else {
        AuditReport rep = audit_single_faults(c);
        j["total_faults"] = rep.total_faults;
        j["benign"] = rep.benign;
        j["always_detected"] = rep.always_detected;
        j["malicious"] = rep.malicious;
      }
      write_out(j.dump(2), out_path, out);
      return 0;
    } else if (cmp->parsed()) {
      out << surface_resource_estimate(dpar, patches) << "\n";
    }
  } catch (const ResourceError& e) {
    err << "resource error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace cc832
