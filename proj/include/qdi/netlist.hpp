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

#ifndef QDI_NETLIST_HPP_
#define QDI_NETLIST_HPP_

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qdi/encoding.hpp"

namespace qdi {

using NetId = std::uint32_t;
using GateId = std::uint32_t;
inline constexpr NetId kInvalidNet = 0xffffffffu;

// The full gate alphabet. Dual-rail monotonic logic needs only positive
// unate gates plus state-holding C-elements; NOT exists for test fixtures.
enum class GateKind : std::uint8_t {
  NOT,
  AND2,
  AND3,
  AND4,
  OR2,
  OR3,
  OR4,
  C2,
  C3,
};

inline constexpr int kNumGateKinds = 9;

inline int arity(GateKind k) {
  switch (k) {
    case GateKind::NOT: return 1;
    case GateKind::AND2: case GateKind::OR2: case GateKind::C2: return 2;
    case GateKind::AND3: case GateKind::OR3: case GateKind::C3: return 3;
    case GateKind::AND4: case GateKind::OR4: return 4;
  }
  return 0;
}

inline bool is_c_element(GateKind k) {
  return k == GateKind::C2 || k == GateKind::C3;
}

inline bool is_and(GateKind k) {
  return k == GateKind::AND2 || k == GateKind::AND3 || k == GateKind::AND4;
}

inline bool is_or(GateKind k) {
  return k == GateKind::OR2 || k == GateKind::OR3 || k == GateKind::OR4;
}

// AND and OR of equal arity swap; inverters and C-elements are self-dual.
inline GateKind dual_kind(GateKind k) {
  switch (k) {
    case GateKind::AND2: return GateKind::OR2;
    case GateKind::AND3: return GateKind::OR3;
    case GateKind::AND4: return GateKind::OR4;
    case GateKind::OR2: return GateKind::AND2;
    case GateKind::OR3: return GateKind::AND3;
    case GateKind::OR4: return GateKind::AND4;
    default: return k;
  }
}

inline const char* to_string(GateKind k) {
  switch (k) {
    case GateKind::NOT: return "NOT";
    case GateKind::AND2: return "AND2";
    case GateKind::AND3: return "AND3";
    case GateKind::AND4: return "AND4";
    case GateKind::OR2: return "OR2";
    case GateKind::OR3: return "OR3";
    case GateKind::OR4: return "OR4";
    case GateKind::C2: return "C2";
    case GateKind::C3: return "C3";
  }
  return "?";
}

inline GateKind gate_kind_from_string(std::string_view s) {
  for (int i = 0; i < kNumGateKinds; ++i) {
    const auto k = static_cast<GateKind>(i);
    if (s == to_string(k)) return k;
  }
  throw std::invalid_argument("unknown gate kind: " + std::string(s));
}

enum class DriverKind : std::uint8_t { primary_input, gate, constant, none };

struct Driver {
  DriverKind kind = DriverKind::none;
  GateId gate = 0;        // valid when kind == gate
  std::uint8_t value = 0; // valid when kind == constant
};

struct Fanout {
  GateId gate = 0;
  int pin = 0;

  friend bool operator==(const Fanout&, const Fanout&) = default;
};

struct Net {
  NetId id = kInvalidNet;
  std::string name;
  Driver driver;
  std::vector<Fanout> fanout;
};

struct Gate {
  GateId id = 0;
  GateKind kind = GateKind::NOT;
  std::array<NetId, 4> inputs{};  // first arity(kind) entries are valid
  NetId output = kInvalidNet;
  std::string name;

  std::span<const NetId> input_span() const {
    return {inputs.data(), static_cast<std::size_t>(arity(kind))};
  }
};

// A dual-rail signal as a pair of net ids, (rail1, rail0).
struct Rails {
  NetId r1 = kInvalidNet;
  NetId r0 = kInvalidNet;

  friend bool operator==(const Rails&, const Rails&) = default;
};

enum class FindingKind : std::uint8_t {
  dangling_io,       // input rail with no fanout, or output rail with no driver
  undriven_net,      // internal net with no driver
  unreachable_gate,  // gate not fed, transitively, by any input or constant
  dead_end_net,      // net from which no output or ack is reachable
  rail_pair_violation,
};

inline const char* to_string(FindingKind k) {
  switch (k) {
    case FindingKind::dangling_io: return "dangling_io";
    case FindingKind::undriven_net: return "undriven_net";
    case FindingKind::unreachable_gate: return "unreachable_gate";
    case FindingKind::dead_end_net: return "dead_end_net";
    case FindingKind::rail_pair_violation: return "rail_pair_violation";
  }
  return "?";
}

struct Finding {
  FindingKind kind;
  std::string detail;
  NetId net = kInvalidNet;
  GateId gate = 0;
};

struct ValidationReport {
  std::vector<Finding> findings;

  bool clean() const { return findings.empty(); }
  int count(FindingKind k) const {
    int n = 0;
    for (const Finding& f : findings) n += (f.kind == k) ? 1 : 0;
    return n;
  }
};

struct GateCensus {
  std::array<int, kNumGateKinds> counts{};
  int total_gates = 0;
  int total_nets = 0;
  int depth = 0;  // longest source-to-observable path, in gates

  int count(GateKind k) const { return counts[static_cast<std::size_t>(k)]; }

  // Equality over gate counts only; net totals and depth are composition
  // dependent and compared separately where they matter.
  bool same_counts(const GateCensus& o) const { return counts == o.counts; }

  friend bool operator==(const GateCensus&, const GateCensus&) = default;
};

inline GateCensus scaled(const GateCensus& c, int factor) {
  GateCensus out = c;
  for (auto& n : out.counts) n *= factor;
  out.total_gates *= factor;
  return out;
}

inline GateCensus sum_counts(const GateCensus& a, const GateCensus& b) {
  GateCensus out = a;
  for (std::size_t i = 0; i < out.counts.size(); ++i) out.counts[i] += b.counts[i];
  out.total_gates += b.total_gates;
  return out;
}

// Immutable-after-build gate network. Gates may only reference nets that
// already exist, so gate order is a topological order and the graph is
// acyclic by construction. Every net has at most one driver.
class Netlist {
 public:
  explicit Netlist(Protocol p) : protocol_(p) {}

  Protocol protocol() const { return protocol_; }

  // --- construction ------------------------------------------------------

  NetId add_net(std::string name) {
    return new_net(std::move(name), Driver{DriverKind::none, 0, 0});
  }

  Rails add_input_pair(const std::string& base) {
    Rails r;
    r.r1 = new_net(base + ".1", Driver{DriverKind::primary_input, 0, 0});
    r.r0 = new_net(base + ".0", Driver{DriverKind::primary_input, 0, 0});
    input_rails_.push_back(r.r1);
    input_rails_.push_back(r.r0);
    return r;
  }

  // Tie-off. Constant nets never transition in either phase; they are
  // memoized per value so fanout accumulates on a single net.
  NetId const_net(int value) {
    if (value != 0 && value != 1) throw std::invalid_argument("constant must be 0 or 1");
    NetId& slot = const_nets_[static_cast<std::size_t>(value)];
    if (slot == kInvalidNet) {
      slot = new_net(value ? "const1" : "const0",
                     Driver{DriverKind::constant, 0, static_cast<std::uint8_t>(value)});
    }
    return slot;
  }

  std::pair<GateId, NetId> add_gate(GateKind kind, std::span<const NetId> inputs,
                                    std::string name = {}) {
    if (static_cast<int>(inputs.size()) != arity(kind))
      throw std::invalid_argument(std::string("arity mismatch for ") + to_string(kind));
    for (NetId n : inputs)
      if (n >= nets_.size()) throw std::invalid_argument("unknown input net");
    const GateId gid = static_cast<GateId>(gates_.size());
    Gate g;
    g.id = gid;
    g.kind = kind;
    for (std::size_t i = 0; i < inputs.size(); ++i) g.inputs[i] = inputs[i];
    if (name.empty()) name = "n" + std::to_string(nets_.size());
    g.output = new_net(name, Driver{DriverKind::gate, gid, 0});
    g.name = nets_[g.output].name;
    for (std::size_t i = 0; i < inputs.size(); ++i)
      nets_[inputs[i]].fanout.push_back(Fanout{gid, static_cast<int>(i)});
    gates_.push_back(std::move(g));
    return {gid, gates_.back().output};
  }

  std::pair<GateId, NetId> add_gate(GateKind kind, std::initializer_list<NetId> inputs,
                                    std::string name = {}) {
    return add_gate(kind, std::span<const NetId>(inputs.begin(), inputs.size()),
                    std::move(name));
  }

  void mark_output_pair(Rails r) {
    check_net(r.r1);
    check_net(r.r0);
    output_rails_.push_back(r.r1);
    output_rails_.push_back(r.r0);
  }

  // Completion-detector outputs (single-rail observables).
  void mark_ack(NetId net, std::string role) {
    check_net(net);
    acks_.push_back({std::move(role), net});
  }

  void rename_net(NetId id, const std::string& name) {
    check_net(id);
    if (nets_[id].name == name) return;
    if (name_to_id_.count(name)) throw std::invalid_argument("net name in use: " + name);
    name_to_id_.erase(nets_[id].name);
    nets_[id].name = name;
    name_to_id_.emplace(name, id);
    if (nets_[id].driver.kind == DriverKind::gate)
      gates_[nets_[id].driver.gate].name = name;
  }

  // --- access -------------------------------------------------------------

  const std::vector<Gate>& gates() const { return gates_; }
  const std::vector<Net>& nets() const { return nets_; }
  const std::vector<NetId>& input_rails() const { return input_rails_; }
  const std::vector<NetId>& output_rails() const { return output_rails_; }
  const std::vector<std::pair<std::string, NetId>>& acks() const { return acks_; }

  std::size_t net_count() const { return nets_.size(); }
  std::size_t gate_count() const { return gates_.size(); }

  int input_pair_count() const { return static_cast<int>(input_rails_.size() / 2); }
  int output_pair_count() const { return static_cast<int>(output_rails_.size() / 2); }

  Rails input_pair(int i) const {
    return Rails{input_rails_.at(2 * static_cast<std::size_t>(i)),
                 input_rails_.at(2 * static_cast<std::size_t>(i) + 1)};
  }
  Rails output_pair(int i) const {
    return Rails{output_rails_.at(2 * static_cast<std::size_t>(i)),
                 output_rails_.at(2 * static_cast<std::size_t>(i) + 1)};
  }

  std::optional<NetId> find_net(std::string_view name) const {
    auto it = name_to_id_.find(std::string(name));
    if (it == name_to_id_.end()) return std::nullopt;
    return it->second;
  }

  NetId net_id(std::string_view name) const {
    auto n = find_net(name);
    if (!n) throw std::invalid_argument("unknown net: " + std::string(name));
    return *n;
  }

  std::optional<NetId> ack_net(std::string_view role) const {
    for (const auto& [r, n] : acks_)
      if (r == role) return n;
    return std::nullopt;
  }

  bool has_constants() const {
    return const_nets_[0] != kInvalidNet || const_nets_[1] != kInvalidNet;
  }

  // --- analysis -----------------------------------------------------------

  ValidationReport validate() const {
    ValidationReport rep;
    if (input_rails_.size() % 2 != 0)
      rep.findings.push_back({FindingKind::rail_pair_violation, "odd input rail count"});
    if (output_rails_.size() % 2 != 0)
      rep.findings.push_back({FindingKind::rail_pair_violation, "odd output rail count"});

    std::vector<std::uint8_t> is_output(nets_.size(), 0);
    for (NetId n : output_rails_) is_output[n] = 1;

    for (NetId n : input_rails_)
      if (nets_[n].fanout.empty() && !is_output[n])
        rep.findings.push_back({FindingKind::dangling_io,
                                "input rail drives nothing: " + nets_[n].name, n});
    for (NetId n : output_rails_)
      if (nets_[n].driver.kind == DriverKind::none)
        rep.findings.push_back({FindingKind::dangling_io,
                                "output rail has no driver: " + nets_[n].name, n});
    for (const Net& n : nets_)
      if (n.driver.kind == DriverKind::none && !is_output[n.id])
        rep.findings.push_back({FindingKind::undriven_net,
                                "net has no driver: " + n.name, n.id});

    // Forward reachability from inputs and constants. Gate order is
    // topological, so one pass suffices.
    std::vector<std::uint8_t> reached(nets_.size(), 0);
    for (const Net& n : nets_)
      if (n.driver.kind == DriverKind::primary_input ||
          n.driver.kind == DriverKind::constant)
        reached[n.id] = 1;
    for (const Gate& g : gates_) {
      bool ok = true;
      for (NetId in : g.input_span()) ok = ok && reached[in];
      if (ok) {
        reached[g.output] = 1;
      } else {
        rep.findings.push_back({FindingKind::unreachable_gate,
                                "gate not reachable from inputs: " + g.name,
                                g.output, g.id});
      }
    }

    // Backward reachability from outputs and acks, walking gates in reverse.
    std::vector<std::uint8_t> observable(nets_.size(), 0);
    for (NetId n : output_rails_) observable[n] = 1;
    for (const auto& [role, n] : acks_) observable[n] = 1;
    for (auto it = gates_.rbegin(); it != gates_.rend(); ++it)
      if (observable[it->output])
        for (NetId in : it->input_span()) observable[in] = 1;
    for (const Net& n : nets_)
      if (!observable[n.id])
        rep.findings.push_back({FindingKind::dead_end_net,
                                "net reaches no output or ack: " + n.name, n.id});
    return rep;
  }

  // Per-net flag: does the net's fanout cone contain an output rail or ack?
  // Static companion to the dynamic orphan check.
  std::vector<std::uint8_t> reaches_observable() const {
    std::vector<std::uint8_t> obs(nets_.size(), 0);
    for (NetId n : output_rails_) obs[n] = 1;
    for (const auto& [role, n] : acks_) obs[n] = 1;
    for (auto it = gates_.rbegin(); it != gates_.rend(); ++it)
      if (obs[it->output])
        for (NetId in : it->input_span()) obs[in] = 1;
    return obs;
  }

  GateCensus stats() const {
    GateCensus c;
    for (const Gate& g : gates_) ++c.counts[static_cast<std::size_t>(g.kind)];
    c.total_gates = static_cast<int>(gates_.size());
    c.total_nets = static_cast<int>(nets_.size());
    std::vector<int> depth(nets_.size(), 0);
    for (const Gate& g : gates_) {
      int d = 0;
      for (NetId in : g.input_span()) d = std::max(d, depth[in]);
      depth[g.output] = d + 1;
    }
    for (NetId n : output_rails_) c.depth = std::max(c.depth, depth[n]);
    for (const auto& [role, n] : acks_) c.depth = std::max(c.depth, depth[n]);
    return c;
  }

 private:
  friend Netlist dualize(const Netlist&);

  void check_net(NetId n) const {
    if (n >= nets_.size()) throw std::invalid_argument("unknown net id");
  }

  NetId new_net(std::string name, Driver d) {
    if (name_to_id_.count(name)) throw std::invalid_argument("net name in use: " + name);
    const NetId id = static_cast<NetId>(nets_.size());
    Net n;
    n.id = id;
    n.name = std::move(name);
    n.driver = d;
    name_to_id_.emplace(n.name, id);
    nets_.push_back(std::move(n));
    return id;
  }

  Protocol protocol_;
  std::vector<Net> nets_;
  std::vector<Gate> gates_;
  std::vector<NetId> input_rails_;
  std::vector<NetId> output_rails_;
  std::vector<std::pair<std::string, NetId>> acks_;
  std::array<NetId, 2> const_nets_{kInvalidNet, kInvalidNet};
  std::unordered_map<std::string, NetId> name_to_id_;
};

// Protocol transform: swaps AND/OR kinds, complements tie-off constants,
// flips the protocol tag. Net ids, gate ids and names are preserved, so
// applying it twice reproduces the original netlist exactly.
inline Netlist dualize(const Netlist& src) {
  Netlist out(src.protocol() == Protocol::rtz ? Protocol::rto : Protocol::rtz);
  out.nets_.reserve(src.nets_.size());
  for (const Net& n : src.nets_) {
    Net copy = n;
    if (copy.driver.kind == DriverKind::constant) {
      copy.driver.value ^= 1;
      copy.name = copy.driver.value ? "const1" : "const0";
      out.const_nets_[copy.driver.value] = copy.id;
    }
    out.name_to_id_.emplace(copy.name, copy.id);
    out.nets_.push_back(std::move(copy));
  }
  out.gates_.reserve(src.gates_.size());
  for (const Gate& g : src.gates_) {
    Gate copy = g;
    copy.kind = dual_kind(g.kind);
    out.gates_.push_back(std::move(copy));
  }
  out.input_rails_ = src.input_rails_;
  out.output_rails_ = src.output_rails_;
  out.acks_ = src.acks_;
  return out;
}

}  // namespace qdi

#endif  // QDI_NETLIST_HPP_
