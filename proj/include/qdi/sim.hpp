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
// Discrete-event simulator for dual-rail netlists driving a four-phase
// handshake: apply data, wait for the circuit to settle, apply the spacer,
// wait again. Every net transition is timestamped and tagged with the phase
// it happened in.

#ifndef QDI_SIM_HPP_
#define QDI_SIM_HPP_

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qdi/encoding.hpp"
#include "qdi/logiclib.hpp"
#include "qdi/netlist.hpp"

namespace qdi {

enum class Phase : std::uint8_t { data, spacer };

inline const char* to_string(Phase p) {
  return p == Phase::data ? "data" : "spacer";
}

struct Transition {
  std::int64_t time = 0;
  NetId net = kInvalidNet;
  std::int8_t value = 0;
  Phase phase = Phase::data;
};

// Per-gate-kind propagation delays, in simulator ticks.
struct DelayModel {
  std::array<int, kNumGateKinds> ticks{};

  friend bool operator==(const DelayModel&, const DelayModel&) = default;

  static DelayModel unit() {
    DelayModel m;
    m.ticks.fill(1);
    return m;
  }

  static DelayModel per_kind(const std::array<int, kNumGateKinds>& t) {
    DelayModel m;
    m.ticks = t;
    for (int d : m.ticks)
      if (d < 1) throw std::invalid_argument("gate delay must be at least 1 tick");
    return m;
  }

  int delay(GateKind k) const { return ticks[static_cast<std::size_t>(k)]; }
};

struct SimOptions {
  // Ticks between the circuit settling and the environment switching phases.
  int ack_latency = 0;
  // A settle pass firing more than quiescence_factor * net_count events is
  // treated as an oscillation.
  int quiescence_factor = 10;
  bool record_transitions = true;
  // Raise on an incomplete or illegal output word at the end of the data
  // phase. Fixtures that exercise the checkers turn this off.
  bool throw_on_output_error = true;
};

class SimError : public std::runtime_error {
 public:
  enum class Kind { non_quiescence, output_illegal, output_incomplete };

  SimError(Kind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

struct PhaseMarks {
  std::int64_t data_applied = 0;
  std::int64_t data_settled = 0;
  std::int64_t spacer_applied = 0;
  std::int64_t spacer_settled = 0;
};

// One four-phase handshake cycle. Forward latency (fl) and reverse latency
// (rl) are measured on the output rails alone; fl_cd / rl_cd additionally
// wait for the output-side completion detector when one is present.
struct HandshakeTrace {
  Protocol protocol = Protocol::rtz;
  PhaseMarks marks;
  std::int64_t fl = 0;
  std::int64_t rl = 0;
  std::int64_t ct = 0;
  std::int64_t fl_cd = 0;
  std::int64_t rl_cd = 0;
  std::uint64_t transitions_data = 0;
  std::uint64_t transitions_spacer = 0;
  WordClass out_class = WordClass::spacer;
  std::uint64_t out_value = 0;
  bool restored = false;
  std::vector<Transition> transitions;

  std::uint64_t total_transitions() const {
    return transitions_data + transitions_spacer;
  }
};

struct SettleInfo {
  std::int64_t last_time = 0;         // time of the final event, or start time
  std::int64_t last_output_time = -1;  // last transition on an output rail
  std::int64_t last_ack_out_time = -1;
  std::uint64_t events = 0;
};

class Simulator {
 public:
  // The netlist must outlive the simulator; temporaries are rejected.
  explicit Simulator(const Netlist&& nl, DelayModel dm = DelayModel::unit(),
                     SimOptions opt = SimOptions{}) = delete;

  explicit Simulator(const Netlist& nl, DelayModel dm = DelayModel::unit(),
                     SimOptions opt = SimOptions{})
      : nl_(&nl), delay_(dm), opt_(opt) {
    is_output_rail_.assign(nl.net_count(), 0);
    for (NetId n : nl.output_rails()) is_output_rail_[n] = 1;
    ack_out_ = nl.ack_net("ack_out").value_or(kInvalidNet);
    reset();
  }

  // Recomputes the quiescent state: inputs at spacer, constants pinned, every
  // gate relaxed to a fixed point.
  void reset() {
    const int sp = spacer_level(nl_->protocol());
    values_.assign(nl_->net_count(), static_cast<std::int8_t>(sp));
    for (const Net& n : nl_->nets()) {
      if (n.driver.kind == DriverKind::constant)
        values_[n.id] = static_cast<std::int8_t>(n.driver.value);
    }
    // Gates are appended producer-first, so one in-order sweep reaches the
    // fixed point; extra sweeps guard against hand-assembled orderings.
    bool changed = true;
    std::size_t passes = 0;
    while (changed) {
      changed = false;
      for (const Gate& g : nl_->gates()) {
        const std::int8_t v =
            static_cast<std::int8_t>(eval_gate(g, values_[g.output]));
        if (v != values_[g.output]) {
          values_[g.output] = v;
          changed = true;
        }
      }
      if (++passes > nl_->gate_count() + 1)
        throw SimError(SimError::Kind::non_quiescence,
                       "netlist has no quiescent state");
    }
    rest_ = values_;
    projected_ = values_;
    heap_ = {};
    seq_ = 0;
    now_ = 0;
    buffer_.clear();
  }

  const Netlist& netlist() const { return *nl_; }
  std::int64_t now() const { return now_; }
  void advance_to(std::int64_t t) { now_ = std::max(now_, t); }
  int value(NetId n) const { return values_[n]; }
  bool at_rest() const { return values_ == rest_; }
  // Current value of every net, indexed by NetId.
  const std::vector<std::int8_t>& snapshot() const { return values_; }

  // Drives one input pair to a data bit, or to the spacer when bit is empty.
  void set_pair(std::size_t pair_index, std::optional<int> bit) {
    const Rails r = nl_->input_pair(static_cast<int>(pair_index));
    const RailPair v = bit.has_value()
                           ? encode_bit(*bit, nl_->protocol())
                           : spacer_pair(nl_->protocol());
    drive(r.r1, v.rail1);
    drive(r.r0, v.rail0);
  }

  // Runs the event queue dry. Transitions are tagged with the given phase.
  SettleInfo settle(Phase phase) {
    SettleInfo info;
    info.last_time = now_;
    const std::uint64_t budget =
        static_cast<std::uint64_t>(opt_.quiescence_factor) *
        (nl_->net_count() + 1);
    while (!heap_.empty()) {
      const Event ev = heap_.top();
      heap_.pop();
      if (values_[ev.net] == ev.value) continue;  // superseded
      values_[ev.net] = ev.value;
      now_ = std::max(now_, ev.time);
      info.last_time = std::max(info.last_time, ev.time);
      ++info.events;
      if (info.events > budget)
        throw SimError(SimError::Kind::non_quiescence,
                       "no quiescence after " + std::to_string(info.events) +
                           " events");
      if (is_output_rail_[ev.net])
        info.last_output_time = std::max(info.last_output_time, ev.time);
      if (ev.net == ack_out_)
        info.last_ack_out_time = std::max(info.last_ack_out_time, ev.time);
      if (opt_.record_transitions)
        buffer_.push_back(Transition{ev.time, ev.net, ev.value, phase});
      for (const Fanout& f : nl_->nets()[ev.net].fanout) {
        const Gate& g = nl_->gates()[f.gate];
        const std::int8_t target =
            static_cast<std::int8_t>(eval_gate(g, projected_[g.output]));
        if (target != projected_[g.output]) {
          projected_[g.output] = target;
          heap_.push(Event{ev.time + delay_.delay(g.kind), seq_++, g.output,
                           target});
        }
      }
    }
    return info;
  }

  Decoded decode_outputs() const {
    DualRailWord w;
    w.protocol = nl_->protocol();
    const int pairs = nl_->output_pair_count();
    w.pairs.reserve(static_cast<std::size_t>(pairs));
    for (int i = 0; i < pairs; ++i) {
      const Rails r = nl_->output_pair(i);
      w.pairs.push_back(RailPair{static_cast<std::uint8_t>(values_[r.r1]),
                                 static_cast<std::uint8_t>(values_[r.r0])});
    }
    return decode_word(w);
  }

  std::vector<Transition> take_transitions() { return std::move(buffer_); }

  // One full handshake: data in, settle, spacer in, settle. bits holds one
  // value per input pair, in pair order.
  HandshakeTrace run_cycle(std::span<const int> bits) {
    if (bits.size() != static_cast<std::size_t>(nl_->input_pair_count()))
      throw std::invalid_argument("expected " +
                                  std::to_string(nl_->input_pair_count()) +
                                  " input bits, got " +
                                  std::to_string(bits.size()));
    buffer_.clear();
    HandshakeTrace tr;
    tr.protocol = nl_->protocol();
    const std::int64_t t0 = now_;
    tr.marks.data_applied = t0;
    for (std::size_t i = 0; i < bits.size(); ++i) set_pair(i, bits[i]);
    const SettleInfo d = settle(Phase::data);
    tr.marks.data_settled = d.last_time;
    tr.transitions_data = d.events;
    tr.fl = d.last_output_time < 0 ? 0 : d.last_output_time - t0;
    tr.fl_cd = d.last_ack_out_time < 0 ? tr.fl : d.last_ack_out_time - t0;
    const Decoded out = decode_outputs();
    tr.out_class = out.cls;
    tr.out_value = out.value;
    if (nl_->output_pair_count() > 0 && opt_.throw_on_output_error) {
      if (out.cls == WordClass::illegal)
        throw SimError(SimError::Kind::output_illegal,
                       "illegal output code at end of data phase");
      if (out.cls != WordClass::data)
        throw SimError(SimError::Kind::output_incomplete,
                       "output word incomplete at end of data phase");
    }
    const std::int64_t t1 = d.last_time + opt_.ack_latency;
    advance_to(t1);
    tr.marks.spacer_applied = t1;
    for (std::size_t i = 0; i < bits.size(); ++i) set_pair(i, std::nullopt);
    const SettleInfo s = settle(Phase::spacer);
    tr.marks.spacer_settled = s.last_time;
    tr.transitions_spacer = s.events;
    tr.rl = s.last_output_time < 0 ? 0 : s.last_output_time - t1;
    tr.rl_cd = s.last_ack_out_time < 0 ? tr.rl : s.last_ack_out_time - t1;
    tr.ct = tr.fl + tr.rl;
    tr.restored = at_rest();
    tr.transitions = std::move(buffer_);
    buffer_.clear();
    return tr;
  }

  // Adder convention: pairs are the a word, then the b word, then carry-in.
  HandshakeTrace run_cycle(const InputVector& v) {
    const std::size_t pairs = nl_->input_pair_count();
    if (pairs < 3 || pairs % 2 == 0)
      throw std::logic_error("netlist does not take two words and a carry");
    const int width = static_cast<int>((pairs - 1) / 2);
    std::vector<int> bits(pairs);
    for (int i = 0; i < width; ++i) {
      bits[static_cast<std::size_t>(i)] = static_cast<int>((v.a >> i) & 1);
      bits[static_cast<std::size_t>(width + i)] = static_cast<int>((v.b >> i) & 1);
    }
    bits[pairs - 1] = v.cin;
    return run_cycle(bits);
  }

 private:
  struct Event {
    std::int64_t time;
    std::uint64_t seq;
    NetId net;
    std::int8_t value;

    bool operator>(const Event& o) const {
      if (time != o.time) return time > o.time;
      return seq > o.seq;
    }
  };

  int eval_gate(const Gate& g, int prev) const {
    const auto ins = g.input_span();
    switch (g.kind) {
      case GateKind::NOT:
        return values_[ins[0]] ? 0 : 1;
      case GateKind::AND2:
      case GateKind::AND3:
      case GateKind::AND4: {
        for (NetId n : ins)
          if (!values_[n]) return 0;
        return 1;
      }
      case GateKind::OR2:
      case GateKind::OR3:
      case GateKind::OR4: {
        for (NetId n : ins)
          if (values_[n]) return 1;
        return 0;
      }
      case GateKind::C2:
      case GateKind::C3: {
        bool all0 = true, all1 = true;
        for (NetId n : ins) {
          all0 = all0 && !values_[n];
          all1 = all1 && values_[n];
        }
        if (all1) return 1;
        if (all0) return 0;
        return prev;
      }
    }
    throw std::logic_error("unknown gate kind");
  }

  void drive(NetId net, int v) {
    if (projected_[net] == static_cast<std::int8_t>(v)) return;
    projected_[net] = static_cast<std::int8_t>(v);
    heap_.push(Event{now_, seq_++, net, static_cast<std::int8_t>(v)});
  }

  const Netlist* nl_;
  DelayModel delay_;
  SimOptions opt_;
  std::vector<std::int8_t> values_;
  std::vector<std::int8_t> projected_;
  std::vector<std::int8_t> rest_;
  std::vector<std::uint8_t> is_output_rail_;
  NetId ack_out_ = kInvalidNet;
  std::priority_queue<Event, std::vector<Event>, std::greater<Event>> heap_;
  std::uint64_t seq_ = 0;
  std::int64_t now_ = 0;
  std::vector<Transition> buffer_;
};

// Aggregates over a batch of handshake cycles.
struct SequenceStats {
  std::vector<std::int64_t> fl, rl, ct;
  std::uint64_t transitions = 0;
  bool all_restored = true;
  std::size_t cycles = 0;

  static double mean(const std::vector<std::int64_t>& v) {
    if (v.empty()) return 0.0;
    std::int64_t s = 0;
    for (auto x : v) s += x;
    return static_cast<double>(s) / static_cast<double>(v.size());
  }

  static std::int64_t max(const std::vector<std::int64_t>& v) {
    return v.empty() ? 0 : *std::max_element(v.begin(), v.end());
  }

  static std::int64_t min(const std::vector<std::int64_t>& v) {
    return v.empty() ? 0 : *std::min_element(v.begin(), v.end());
  }

  static std::size_t distinct(const std::vector<std::int64_t>& v) {
    return std::set<std::int64_t>(v.begin(), v.end()).size();
  }
};

using TraceObserver =
    std::function<void(const HandshakeTrace&, const InputVector&)>;

inline SequenceStats run_sequence(Simulator& sim,
                                  std::span<const InputVector> vectors,
                                  const TraceObserver& observe = nullptr) {
  SequenceStats st;
  st.fl.reserve(vectors.size());
  st.rl.reserve(vectors.size());
  st.ct.reserve(vectors.size());
  for (const InputVector& v : vectors) {
    HandshakeTrace tr = sim.run_cycle(v);
    st.fl.push_back(tr.fl);
    st.rl.push_back(tr.rl);
    st.ct.push_back(tr.ct);
    st.transitions += tr.total_transitions();
    st.all_restored = st.all_restored && tr.restored;
    ++st.cycles;
    if (observe) observe(tr, v);
  }
  return st;
}

}  // namespace qdi

#endif  // QDI_SIM_HPP_
