// Copyright 2026 The qdilab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// On-disk formats: a JSON netlist interchange format, JSONL transition
// traces, VCD waveform export, and a plain-text stimulus format. Netlist
// references are by net name and gates appear producers-first, so a valid
// document can never describe a combinational cycle.

#ifndef QDI_IO_HPP_
#define QDI_IO_HPP_

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "qdi/netlist.hpp"
#include "qdi/sim.hpp"

namespace qdi {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kNetlistFormat = "qdi-netlist-v1";

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

namespace detail {

// Input pairs are serialized by their shared base name; rails that were
// renamed away from the base.1 / base.0 convention cannot be reconstructed.
inline std::string input_base_name(const Netlist& nl, Rails r) {
  const std::string& n1 = nl.nets()[r.r1].name;
  const std::string& n0 = nl.nets()[r.r0].name;
  if (n1.size() < 3 || n1.substr(n1.size() - 2) != ".1")
    throw IoError("input rail name not of the form base.1: " + n1);
  const std::string base = n1.substr(0, n1.size() - 2);
  if (n0 != base + ".0")
    throw IoError("input pair names do not share a base: " + n1 + ", " + n0);
  return base;
}

}  // namespace detail

inline Json netlist_to_json(const Netlist& nl) {
  Json j;
  j["format"] = std::string(kNetlistFormat);
  j["protocol"] = to_string(nl.protocol());

  Json inputs = Json::array();
  for (int i = 0; i < nl.input_pair_count(); ++i)
    inputs.push_back(detail::input_base_name(nl, nl.input_pair(i)));
  j["inputs"] = std::move(inputs);

  Json constants = Json::array();
  for (const Net& n : nl.nets()) {
    if (n.driver.kind == DriverKind::constant) {
      Json c;
      c["name"] = n.name;
      c["value"] = static_cast<int>(n.driver.value);
      constants.push_back(std::move(c));
    }
  }
  j["constants"] = std::move(constants);

  Json gates = Json::array();
  for (const Gate& g : nl.gates()) {
    Json e;
    e["kind"] = to_string(g.kind);
    Json ins = Json::array();
    for (NetId n : g.input_span()) ins.push_back(nl.nets()[n].name);
    e["inputs"] = std::move(ins);
    e["output"] = nl.nets()[g.output].name;
    gates.push_back(std::move(e));
  }
  j["gates"] = std::move(gates);

  Json outputs = Json::array();
  for (int i = 0; i < nl.output_pair_count(); ++i) {
    const Rails r = nl.output_pair(i);
    outputs.push_back(
        Json::array({nl.nets()[r.r1].name, nl.nets()[r.r0].name}));
  }
  j["outputs"] = std::move(outputs);

  Json acks = Json::array();
  for (const auto& [role, net] : nl.acks()) {
    Json e;
    e["role"] = role;
    e["net"] = nl.nets()[net].name;
    acks.push_back(std::move(e));
  }
  j["acks"] = std::move(acks);
  return j;
}

inline std::string save_netlist(const Netlist& nl) {
  return netlist_to_json(nl).dump(2) + "\n";
}

inline Netlist netlist_from_json(const Json& j) {
  if (!j.is_object()) throw IoError("netlist document must be an object");
  if (j.value("format", "") != kNetlistFormat)
    throw IoError("unsupported netlist format");
  Netlist nl(protocol_from_string(j.at("protocol").get<std::string>()));

  const auto resolve = [&nl](const std::string& name) {
    const auto id = nl.find_net(name);
    if (!id)
      throw IoError("reference to undefined net: " + name +
                    " (nets must be defined before use)");
    return *id;
  };

  for (const auto& e : j.at("inputs")) nl.add_input_pair(e.get<std::string>());

  for (const auto& e : j.at("constants")) {
    const auto name = e.at("name").get<std::string>();
    const int value = e.at("value").get<int>();
    const NetId id = nl.const_net(value);
    if (nl.nets()[id].name != name)
      throw IoError("constant net must be named " + nl.nets()[id].name);
  }

  for (const auto& e : j.at("gates")) {
    const GateKind kind =
        gate_kind_from_string(e.at("kind").get<std::string>());
    std::vector<NetId> ins;
    for (const auto& i : e.at("inputs")) ins.push_back(resolve(i.get<std::string>()));
    if (static_cast<int>(ins.size()) != arity(kind))
      throw IoError("gate arity mismatch for " + std::string(to_string(kind)));
    nl.add_gate(kind, std::span<const NetId>(ins.data(), ins.size()),
                e.at("output").get<std::string>());
  }

  for (const auto& e : j.at("outputs")) {
    if (!e.is_array() || e.size() != 2)
      throw IoError("each output must be a [rail1, rail0] pair");
    nl.mark_output_pair(Rails{resolve(e[0].get<std::string>()),
                              resolve(e[1].get<std::string>())});
  }

  for (const auto& e : j.at("acks"))
    nl.mark_ack(resolve(e.at("net").get<std::string>()),
                e.at("role").get<std::string>());
  return nl;
}

inline Netlist load_netlist(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw IoError(std::string("netlist parse error: ") + e.what());
  }
  return netlist_from_json(j);
}

inline void write_netlist_file(const std::string& path, const Netlist& nl) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << save_netlist(nl);
}

inline Netlist read_netlist_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open netlist file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return load_netlist(ss.str());
}

// --- transition traces ------------------------------------------------------

// One JSON object per line: time, net name, new value, handshake phase.
inline void write_trace_jsonl(std::ostream& os, const Netlist& nl,
                              std::span<const Transition> trace) {
  for (const Transition& t : trace) {
    Json e;
    e["t"] = t.time;
    e["net"] = nl.nets()[t.net].name;
    e["v"] = static_cast<int>(t.value);
    e["phase"] = to_string(t.phase);
    os << e.dump() << "\n";
  }
}

namespace detail {

// Compact VCD identifier codes: printable ASCII, shortest first.
inline std::string vcd_code(std::size_t index) {
  std::string code;
  do {
    code.push_back(static_cast<char>('!' + index % 94));
    index /= 94;
  } while (index > 0);
  return code;
}

}  // namespace detail

// Value-change dump of a transition log. initial holds one value per net,
// indexed by NetId, as captured before the first recorded transition.
inline void write_vcd(std::ostream& os, const Netlist& nl,
                      std::span<const Transition> trace,
                      std::span<const std::int8_t> initial) {
  if (initial.size() != nl.net_count())
    throw IoError("initial state must cover every net");
  os << "$timescale 1ns $end\n";
  os << "$scope module netlist $end\n";
  std::vector<std::string> codes(nl.net_count());
  for (const Net& n : nl.nets()) {
    codes[n.id] = detail::vcd_code(n.id);
    os << "$var wire 1 " << codes[n.id] << " " << n.name << " $end\n";
  }
  os << "$upscope $end\n$enddefinitions $end\n";
  os << "$dumpvars\n";
  for (const Net& n : nl.nets())
    os << static_cast<int>(initial[n.id]) << codes[n.id] << "\n";
  os << "$end\n";
  std::int64_t now = -1;
  for (const Transition& t : trace) {
    if (t.time != now) {
      now = t.time;
      os << "#" << now << "\n";
    }
    os << static_cast<int>(t.value) << codes[t.net] << "\n";
  }
}

// --- stimulus files ---------------------------------------------------------

// One vector per line: the a and b operands in hex and the carry bit.
// Blank lines and lines starting with # are skipped.
inline std::vector<InputVector> parse_vectors(std::string_view text) {
  std::vector<InputVector> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::string a, b, cin, extra;
    if (!(fields >> a >> b >> cin) || (fields >> extra))
      throw IoError("line " + std::to_string(lineno) +
                    ": expected 'a_hex b_hex cin'");
    InputVector v;
    try {
      std::size_t used = 0;
      v.a = std::stoull(a, &used, 16);
      if (used != a.size()) throw std::invalid_argument(a);
      v.b = std::stoull(b, &used, 16);
      if (used != b.size()) throw std::invalid_argument(b);
    } catch (const std::exception&) {
      throw IoError("line " + std::to_string(lineno) + ": bad hex operand");
    }
    if (cin != "0" && cin != "1")
      throw IoError("line " + std::to_string(lineno) + ": carry must be 0 or 1");
    v.cin = cin == "1" ? 1 : 0;
    out.push_back(v);
  }
  return out;
}

inline std::vector<InputVector> read_vector_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open vector file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_vectors(ss.str());
}

inline void write_vectors(std::ostream& os,
                          std::span<const InputVector> vectors) {
  os << "# a_hex b_hex cin\n";
  os << std::hex;
  for (const InputVector& v : vectors)
    os << v.a << " " << v.b << " " << std::dec << v.cin << std::hex << "\n";
  os << std::dec;
}

}  // namespace qdi

#endif  // QDI_IO_HPP_
