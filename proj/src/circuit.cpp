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

#include "cc832/circuit.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace cc832 {

using nlohmann::json;

static const std::set<std::string> kGateNames = {"H", "S",  "SDG", "T",  "TDG", "X",
                                                 "Y", "Z",  "CX",  "CZ", "CCZ", "SWAP"};
static const std::set<std::string> kCliffordGates = {"H", "S", "SDG", "X",  "Y",
                                                     "Z", "CX", "CZ", "SWAP"};

void Circuit::gate(const std::string& name, std::vector<uint32_t> qs) {
  if (!kGateNames.count(name)) throw std::invalid_argument("unknown gate: " + name);
  std::set<uint32_t> uniq(qs.begin(), qs.end());
  if (uniq.size() != qs.size()) throw std::invalid_argument("duplicate qubit operands");
  for (uint32_t q : qs)
    if (q >= n_qubits) throw std::invalid_argument("gate qubit out of range");
  Instruction in;
  in.op = Op::kGate;
  in.gate = name;
  in.qubits = std::move(qs);
  instructions.push_back(std::move(in));
}

int Circuit::measure(uint32_t q, char basis) {
  Instruction in;
  in.op = Op::kMeasure;
  in.qubits = {q};
  in.basis = basis;
  in.record = num_records();
  instructions.push_back(in);
  return in.record;
}

void Circuit::reset(uint32_t q) {
  Instruction in;
  in.op = Op::kReset;
  in.qubits = {q};
  instructions.push_back(in);
}

void Circuit::permute(std::vector<uint32_t> perm) {
  Instruction in;
  in.op = Op::kPermute;
  in.perm = std::move(perm);
  instructions.push_back(in);
}

void Circuit::cond_pauli(std::vector<int> records, PauliString p) {
  Instruction in;
  in.op = Op::kCondPauli;
  in.cond_records = std::move(records);
  in.pauli = std::move(p);
  instructions.push_back(in);
}

void Circuit::post_select(std::vector<int> records, const std::string& label) {
  postselect.push_back({std::move(records), 0, label});
}

int Circuit::two_qubit_gate_count() const {
  int c = 0;
  for (const auto& in : instructions) c += in.is_two_qubit_gate() ? 1 : 0;
  return c;
}

int Circuit::measurement_count() const {
  int c = 0;
  for (const auto& in : instructions) c += in.op == Op::kMeasure ? 1 : 0;
  return c;
}

bool Circuit::is_clifford() const {
  for (const auto& in : instructions) {
    if (in.op == Op::kGate && !kCliffordGates.count(in.gate)) return false;
  }
  return true;
}

void Circuit::validate() const {
  std::set<int> records;
  for (size_t i = 0; i < instructions.size(); i++) {
    const auto& in = instructions[i];
    auto at = [&] { return " at instruction " + std::to_string(i); };
    switch (in.op) {
      case Op::kGate: {
        if (!kGateNames.count(in.gate)) throw std::invalid_argument("unknown gate" + at());
        std::set<uint32_t> qs(in.qubits.begin(), in.qubits.end());
        if (qs.size() != in.qubits.size())
          throw std::invalid_argument("duplicate qubit operands" + at());
        for (uint32_t q : in.qubits)
          if (q >= n_qubits) throw std::invalid_argument("qubit out of range" + at());
        break;
      }
      case Op::kMeasure:
        if (in.qubits.size() != 1 || in.qubits[0] >= n_qubits)
          throw std::invalid_argument("bad measurement qubit" + at());
        if (in.basis != 'Z' && in.basis != 'X')
          throw std::invalid_argument("bad measurement basis" + at());
        if (in.record < 0 || !records.insert(in.record).second)
          throw std::invalid_argument("duplicate or negative record id" + at());
        break;
      case Op::kReset:
        if (in.qubits.size() != 1 || in.qubits[0] >= n_qubits)
          throw std::invalid_argument("bad reset qubit" + at());
        break;
      case Op::kPermute: {
        if (in.perm.size() != n_qubits) throw std::invalid_argument("bad permutation size" + at());
        std::vector<bool> seen(n_qubits, false);
        for (uint32_t v : in.perm) {
          if (v >= n_qubits || seen[v]) throw std::invalid_argument("not a permutation" + at());
          seen[v] = true;
        }
        break;
      }
      case Op::kCondPauli:
        if (in.pauli.n != n_qubits) throw std::invalid_argument("bad conditional Pauli size" + at());
        break;
    }
  }
  // Records dense 0..m-1.
  int m = int(records.size());
  for (int r = 0; r < m; r++)
    if (!records.count(r)) throw std::invalid_argument("record ids are not dense");
  auto check_refs = [&](const std::vector<int>& rs, const std::string& what) {
    for (int r : rs)
      if (r < 0 || r >= m) throw std::invalid_argument(what + " references undefined record");
  };
  for (const auto& ps : postselect) check_refs(ps.records, "postselect " + ps.label);
  for (const auto& in : instructions)
    if (in.op == Op::kCondPauli) check_refs(in.cond_records, "conditional Pauli");
  if (readout.defined) {
    check_refs(readout.a, "readout a");
    check_refs(readout.s0, "readout s0");
    check_refs(readout.s1, "readout s1");
  }
}

bool Circuit::operator==(const Circuit& o) const {
  if (name != o.name || n_qubits != o.n_qubits || instructions.size() != o.instructions.size())
    return false;
  for (size_t i = 0; i < instructions.size(); i++) {
    const auto& a = instructions[i];
    const auto& b = o.instructions[i];
    if (a.op != b.op || a.gate != b.gate || a.qubits != b.qubits || a.basis != b.basis ||
        a.record != b.record || a.perm != b.perm || a.cond_records != b.cond_records ||
        a.pauli != b.pauli)
      return false;
  }
  if (postselect.size() != o.postselect.size()) return false;
  for (size_t i = 0; i < postselect.size(); i++) {
    if (postselect[i].records != o.postselect[i].records ||
        postselect[i].parity != o.postselect[i].parity ||
        postselect[i].label != o.postselect[i].label)
      return false;
  }
  return readout.defined == o.readout.defined && readout.a == o.readout.a &&
         readout.s0 == o.readout.s0 && readout.s1 == o.readout.s1 &&
         pre_readout_cut == o.pre_readout_cut && qubit_roles == o.qubit_roles;
}

ReadoutValue Circuit::eval_readout(const std::vector<int>& records) const {
  if (!readout.defined) throw std::logic_error("circuit has no readout plan");
  ReadoutValue v;
  v.a = parity_of(readout.a, records);
  v.s0 = parity_of(readout.s0, records);
  v.s1 = parity_of(readout.s1, records);
  return v;
}

bool Circuit::accepted(const std::vector<int>& records) const {
  for (const auto& ps : postselect)
    if (parity_of(ps.records, records) != ps.parity) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Serialization

std::string serialize(const Circuit& c) {
  json doc;
  doc["version"] = 1;
  doc["name"] = c.name;
  doc["n_qubits"] = c.n_qubits;
  json instrs = json::array();
  for (const auto& in : c.instructions) {
    json j;
    switch (in.op) {
      case Op::kGate:
        j["op"] = "gate";
        j["gate"] = in.gate;
        j["qubits"] = in.qubits;
        break;
      case Op::kMeasure:
        j["op"] = "measure";
        j["qubit"] = in.qubits[0];
        j["basis"] = std::string(1, in.basis);
        j["record"] = in.record;
        break;
      case Op::kReset:
        j["op"] = "reset";
        j["qubit"] = in.qubits[0];
        break;
      case Op::kPermute:
        j["op"] = "permute";
        j["map"] = in.perm;
        break;
      case Op::kCondPauli:
        j["op"] = "cond_pauli";
        j["records"] = in.cond_records;
        j["pauli"] = in.pauli.str();
        break;
    }
    instrs.push_back(std::move(j));
  }
  doc["instructions"] = std::move(instrs);
  json pss = json::array();
  for (const auto& ps : c.postselect)
    pss.push_back({{"records", ps.records}, {"parity", ps.parity}, {"label", ps.label}});
  doc["postselect"] = std::move(pss);
  if (c.readout.defined) {
    doc["readout"] = {{"a", c.readout.a}, {"s0", c.readout.s0}, {"s1", c.readout.s1}};
  }
  if (c.pre_readout_cut >= 0) doc["pre_readout_cut"] = c.pre_readout_cut;
  if (!c.qubit_roles.empty()) doc["qubit_roles"] = c.qubit_roles;
  return doc.dump(2);
}

Circuit deserialize(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("circuit parse error: ") + e.what());
  }
  auto fail = [](size_t idx, const std::string& why) {
    throw std::invalid_argument("circuit parse error at instruction " + std::to_string(idx) + ": " +
                                why);
  };
  if (!doc.contains("version") || doc["version"] != 1)
    throw std::invalid_argument("circuit parse error: unsupported or missing schema version");
  Circuit c(doc.at("n_qubits").get<uint32_t>());
  c.name = doc.value("name", "");
  size_t idx = 0;
  for (const auto& j : doc.at("instructions")) {
    std::string op = j.value("op", "");
    if (op == "gate") {
      std::string g = j.at("gate").get<std::string>();
      if (!kGateNames.count(g)) fail(idx, "unknown gate name '" + g + "'");
      c.gate(g, j.at("qubits").get<std::vector<uint32_t>>());
    } else if (op == "measure") {
      std::string b = j.value("basis", "Z");
      if (b != "Z" && b != "X") fail(idx, "bad basis '" + b + "'");
      int rec = c.measure(j.at("qubit").get<uint32_t>(), b[0]);
      if (rec != j.at("record").get<int>()) fail(idx, "records out of order");
    } else if (op == "reset") {
      c.reset(j.at("qubit").get<uint32_t>());
    } else if (op == "permute") {
      c.permute(j.at("map").get<std::vector<uint32_t>>());
    } else if (op == "cond_pauli") {
      c.cond_pauli(j.at("records").get<std::vector<int>>(),
                   PauliString::parse(j.at("pauli").get<std::string>()));
    } else {
      fail(idx, "unknown op '" + op + "'");
    }
    idx++;
  }
  for (const auto& ps : doc.value("postselect", json::array())) {
    Postselect p;
    p.records = ps.at("records").get<std::vector<int>>();
    p.parity = ps.value("parity", 0);
    p.label = ps.value("label", "");
    c.postselect.push_back(std::move(p));
  }
  if (doc.contains("readout")) {
    c.readout.defined = true;
    c.readout.a = doc["readout"].at("a").get<std::vector<int>>();
    c.readout.s0 = doc["readout"].at("s0").get<std::vector<int>>();
    c.readout.s1 = doc["readout"].at("s1").get<std::vector<int>>();
  }
  c.pre_readout_cut = doc.value("pre_readout_cut", -1);
  if (doc.contains("qubit_roles"))
    c.qubit_roles = doc["qubit_roles"].get<std::vector<std::string>>();
  c.validate();
  return c;
}

std::string export_qasm_like(const Circuit& c, bool permute_as_swaps) {
  std::ostringstream out;
  out << "// circuit: " << c.name << "\n";
  out << "qubits " << c.n_qubits << ";\n";
  static const std::map<std::string, std::string> lower = {
      {"H", "h"},   {"S", "s"},   {"SDG", "sdg"}, {"T", "t"},     {"TDG", "tdg"}, {"X", "x"},
      {"Y", "y"},   {"Z", "z"},   {"CX", "cx"},   {"CZ", "cz"},   {"CCZ", "ccz"}, {"SWAP", "swap"}};
  for (const auto& in : c.instructions) {
    switch (in.op) {
      case Op::kGate: {
        out << lower.at(in.gate);
        for (size_t i = 0; i < in.qubits.size(); i++)
          out << (i ? ", " : " ") << "q[" << in.qubits[i] << "]";
        out << ";\n";
        break;
      }
      case Op::kMeasure:
        out << (in.basis == 'X' ? "measure_x" : "measure_z") << " q[" << in.qubits[0] << "] -> c["
            << in.record << "];\n";
        break;
      case Op::kReset:
        out << "reset q[" << in.qubits[0] << "];\n";
        break;
      case Op::kPermute: {
        out << "// relabel qubits: ";
        bool first = true;
        for (uint32_t q = 0; q < in.perm.size(); q++) {
          if (in.perm[q] != q) {
            out << (first ? "" : ", ") << q << "->" << in.perm[q];
            first = false;
          }
        }
        out << "\n";
        if (permute_as_swaps) {
          // Decompose into transpositions for hardware without transport.
          std::vector<uint32_t> cur(in.perm.size());
          for (uint32_t q = 0; q < cur.size(); q++) cur[q] = q;
          for (uint32_t q = 0; q < cur.size(); q++) {
            while (cur[q] != in.perm[q]) {
              // Find who should sit at this label and swap toward it.
              uint32_t want = in.perm[q];
              uint32_t where = 0;
              for (uint32_t k = 0; k < cur.size(); k++)
                if (cur[k] == want) where = k;
              out << "swap q[" << q << "], q[" << where << "];\n";
              std::swap(cur[q], cur[where]);
            }
          }
        }
        break;
      }
      case Op::kCondPauli: {
        out << "// if parity(";
        for (size_t i = 0; i < in.cond_records.size(); i++)
          out << (i ? "," : "") << "c[" << in.cond_records[i] << "]";
        out << ") == 1 apply " << in.pauli.str() << "\n";
        break;
      }
    }
  }
  for (const auto& ps : c.postselect) {
    out << "// postselect " << ps.label << ": parity(";
    for (size_t i = 0; i < ps.records.size(); i++) out << (i ? "," : "") << "c[" << ps.records[i] << "]";
    out << ") == " << ps.parity << "\n";
  }
  return out.str();
}

}  // namespace cc832
