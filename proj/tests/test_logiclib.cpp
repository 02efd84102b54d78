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

#include "qdi/logiclib.hpp"

#include <gtest/gtest.h>

#include <vector>

#include "qdi/sim.hpp"

namespace qdi {
namespace {

TEST(CElement, EvalSemantics) {
  const std::vector<int> all1{1, 1, 1};
  const std::vector<int> all0{0, 0, 0};
  const std::vector<int> mixed{1, 0, 1};
  EXPECT_EQ(c_element_eval(0, all1), 1);
  EXPECT_EQ(c_element_eval(1, all0), 0);
  EXPECT_EQ(c_element_eval(0, mixed), 0);
  EXPECT_EQ(c_element_eval(1, mixed), 1);
}

TEST(FullAdder, StrongCensus) {
  const Netlist nl = build_full_adder(Indication::strong, Protocol::rtz);
  const GateCensus c = nl.stats();
  EXPECT_EQ(c.count(GateKind::C3), 8);
  EXPECT_EQ(c.count(GateKind::OR4), 4);
  EXPECT_EQ(c.total_gates, 12);
  EXPECT_EQ(c.depth, 2);
  EXPECT_TRUE(nl.validate().clean());
}

TEST(FullAdder, WeakCensus) {
  const Netlist nl = build_full_adder(Indication::weak, Protocol::rtz);
  const GateCensus c = nl.stats();
  EXPECT_EQ(c.count(GateKind::C3), 8);
  EXPECT_EQ(c.count(GateKind::OR4), 2);
  EXPECT_EQ(c.count(GateKind::C2), 6);
  EXPECT_EQ(c.count(GateKind::OR3), 2);
  EXPECT_EQ(c.total_gates, 18);
  EXPECT_TRUE(nl.validate().clean());
}

TEST(FullAdder, EarlyCensus) {
  const Netlist nl = build_full_adder(Indication::early, Protocol::rtz);
  const GateCensus c = nl.stats();
  EXPECT_EQ(c.count(GateKind::AND2), 12);
  EXPECT_EQ(c.count(GateKind::OR2), 6);
  EXPECT_EQ(c.total_gates, 18);
  EXPECT_TRUE(nl.validate().clean());
}

TEST(FullAdder, ExhaustiveArithmeticAllFlavorsBothProtocols) {
  for (Indication f : {Indication::strong, Indication::weak, Indication::early}) {
    for (Protocol p : {Protocol::rtz, Protocol::rto}) {
      const Netlist nl = build_full_adder(f, p);
      Simulator sim(nl);
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
          for (int cin = 0; cin < 2; ++cin) {
            const std::vector<int> bits{a, b, cin};
            const HandshakeTrace tr = sim.run_cycle(bits);
            EXPECT_EQ(tr.out_value, static_cast<std::uint64_t>(a + b + cin))
                << to_string(f) << " " << to_string(p) << " " << a << b << cin;
            EXPECT_TRUE(tr.restored);
            EXPECT_EQ(tr.ct, tr.fl + tr.rl);
          }
    }
  }
}

TEST(FullAdder, EarlyCarryCompletesBeforeCarryIn) {
  const Netlist nl = build_full_adder(Indication::early, Protocol::rtz);
  Simulator sim(nl);
  sim.set_pair(0, 1);  // a
  sim.set_pair(1, 1);  // b
  sim.settle(Phase::data);
  const Rails cout = nl.output_pair(1);
  const RailPair cv{static_cast<std::uint8_t>(sim.value(cout.r1)),
                    static_cast<std::uint8_t>(sim.value(cout.r0))};
  EXPECT_EQ(classify_pair(cv, Protocol::rtz), PairClass::data1);
  const Rails sum = nl.output_pair(0);
  const RailPair sv{static_cast<std::uint8_t>(sim.value(sum.r1)),
                    static_cast<std::uint8_t>(sim.value(sum.r0))};
  EXPECT_EQ(classify_pair(sv, Protocol::rtz), PairClass::spacer);
}

TEST(FullAdder, StrongWithholdsOutputsUntilAllInputs) {
  const Netlist nl = build_full_adder(Indication::strong, Protocol::rtz);
  Simulator sim(nl);
  sim.set_pair(0, 1);
  sim.set_pair(1, 1);
  const SettleInfo info = sim.settle(Phase::data);
  EXPECT_LT(info.last_output_time, 0);  // nothing observable moved
  for (int i = 0; i < nl.output_pair_count(); ++i) {
    const Rails r = nl.output_pair(i);
    EXPECT_EQ(sim.value(r.r1), 0);
    EXPECT_EQ(sim.value(r.r0), 0);
  }
}

TEST(Dbfa, ExhaustiveArithmetic) {
  for (Protocol p : {Protocol::rtz, Protocol::rto}) {
    const Netlist nl = build_dbfa(p);
    Simulator sim(nl);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int cin = 0; cin < 2; ++cin) {
          // Pair order: a0, a1, b0, b1, cin.
          const std::vector<int> bits{a & 1, a >> 1, b & 1, b >> 1, cin};
          const HandshakeTrace tr = sim.run_cycle(bits);
          EXPECT_EQ(tr.out_value, static_cast<std::uint64_t>(a + b + cin));
          EXPECT_TRUE(tr.restored);
        }
  }
}

TEST(Dbfa, BlockCarryBypassesInternalRipple) {
  const Netlist nl = build_dbfa(Protocol::rtz);
  Simulator sim(nl);
  sim.set_pair(0, 1);
  sim.set_pair(1, 1);
  sim.set_pair(2, 1);
  sim.set_pair(3, 1);
  sim.settle(Phase::data);
  // a = 3, b = 3 generates the block carry with carry-in still at spacer.
  const Rails cout = nl.output_pair(2);
  const RailPair cv{static_cast<std::uint8_t>(sim.value(cout.r1)),
                    static_cast<std::uint8_t>(sim.value(cout.r0))};
  EXPECT_EQ(classify_pair(cv, Protocol::rtz), PairClass::data1);
}

TEST(Mux2, SelectSemantics) {
  for (Protocol p : {Protocol::rtz, Protocol::rto}) {
    const Netlist nl = build_mux2(p);
    Simulator sim(nl);
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y)
        for (int s = 0; s < 2; ++s) {
          const std::vector<int> bits{x, y, s};
          const HandshakeTrace tr = sim.run_cycle(bits);
          EXPECT_EQ(tr.out_value, static_cast<std::uint64_t>(s ? y : x));
          EXPECT_TRUE(tr.restored);
        }
  }
}

TEST(Mux2, Census) {
  const Netlist nl = build_mux2(Protocol::rtz);
  const GateCensus c = nl.stats();
  EXPECT_EQ(c.count(GateKind::C2), 4);
  EXPECT_EQ(c.count(GateKind::OR2), 2);
  EXPECT_EQ(c.total_gates, 6);
}

TEST(Mux2, OutputWaitsForSelect) {
  const Netlist nl = build_mux2(Protocol::rtz);
  Simulator sim(nl);
  sim.set_pair(0, 1);
  sim.set_pair(1, 0);
  sim.settle(Phase::data);
  const Rails z = nl.output_pair(0);
  EXPECT_EQ(sim.value(z.r1), 0);
  EXPECT_EQ(sim.value(z.r0), 0);
}

TEST(Mux2, SelectedInputSuffices) {
  const Netlist nl = build_mux2(Protocol::rtz);
  Simulator sim(nl);
  sim.set_pair(1, 1);  // y
  sim.set_pair(2, 1);  // select
  sim.settle(Phase::data);
  const Rails z = nl.output_pair(0);
  const RailPair zv{static_cast<std::uint8_t>(sim.value(z.r1)),
                    static_cast<std::uint8_t>(sim.value(z.r0))};
  EXPECT_EQ(classify_pair(zv, Protocol::rtz), PairClass::data1);
}

TEST(CompletionDetector, DegeneratesToSingleOrGate) {
  const Netlist nl = build_completion_detector(1, Protocol::rtz);
  const GateCensus c = nl.stats();
  EXPECT_EQ(c.count(GateKind::OR2), 1);
  EXPECT_EQ(c.total_gates, 1);
  EXPECT_EQ(c.depth, 1);
}

TEST(CompletionDetector, ThreePairShapes) {
  const Netlist rtz = build_completion_detector(3, Protocol::rtz);
  EXPECT_EQ(rtz.stats().count(GateKind::OR2), 3);
  EXPECT_EQ(rtz.stats().count(GateKind::C3), 1);
  EXPECT_EQ(rtz.stats().total_gates, 4);

  const Netlist rto = build_completion_detector(3, Protocol::rto);
  EXPECT_EQ(rto.stats().count(GateKind::AND2), 3);
  EXPECT_EQ(rto.stats().count(GateKind::C3), 1);
}

TEST(CompletionDetector, AckTracksBusState) {
  for (Protocol p : {Protocol::rtz, Protocol::rto}) {
    const Netlist nl = build_completion_detector(5, p);
    Simulator sim(nl);
    const NetId ack = *nl.ack_net("ack");
    const int rest = sim.value(ack);
    for (int i = 0; i < 5; ++i) sim.set_pair(static_cast<std::size_t>(i), i & 1);
    sim.settle(Phase::data);
    EXPECT_NE(sim.value(ack), rest);
    for (int i = 0; i < 5; ++i) sim.set_pair(static_cast<std::size_t>(i), std::nullopt);
    sim.settle(Phase::spacer);
    EXPECT_EQ(sim.value(ack), rest);
    EXPECT_TRUE(sim.at_rest());
  }
}

TEST(CompletionDetector, AckWaitsForEveryPair) {
  const Netlist nl = build_completion_detector(4, Protocol::rtz);
  Simulator sim(nl);
  const NetId ack = *nl.ack_net("ack");
  for (int i = 0; i < 3; ++i) sim.set_pair(static_cast<std::size_t>(i), 1);
  sim.settle(Phase::data);
  EXPECT_EQ(sim.value(ack), 0);
  sim.set_pair(3, 0);
  sim.settle(Phase::data);
  EXPECT_EQ(sim.value(ack), 1);
}

TEST(Trees, BalancedShapes) {
  // Eight leaves: two AND4 feeding an AND2, everything at equal depth.
  Netlist nl(Protocol::rtz);
  std::vector<NetId> leaves;
  for (int i = 0; i < 8; ++i)
    leaves.push_back(nl.add_input_pair("x" + std::to_string(i)).r1);
  const NetId root = emit_and_tree(nl, leaves, "root");
  nl.mark_ack(root, "probe");
  EXPECT_EQ(nl.stats().count(GateKind::AND4), 2);
  EXPECT_EQ(nl.stats().count(GateKind::AND2), 1);
  EXPECT_EQ(nl.stats().depth, 2);
}

TEST(Trees, CElementTreeCapsAtArityThree) {
  Netlist nl(Protocol::rtz);
  std::vector<NetId> leaves;
  for (int i = 0; i < 9; ++i)
    leaves.push_back(nl.add_input_pair("x" + std::to_string(i)).r1);
  const NetId root = emit_c_tree(nl, leaves, "root");
  nl.mark_ack(root, "probe");
  EXPECT_EQ(nl.stats().count(GateKind::C3), 4);
  EXPECT_EQ(nl.stats().depth, 2);
}

TEST(Bclg, NonRedundantCarryTruth) {
  for (Protocol p : {Protocol::rtz, Protocol::rto}) {
    const Netlist nl = build_bclg(4, p, false);
    Simulator sim(nl);
    for (int a = 0; a < 16; ++a)
      for (int b = 0; b < 16; ++b)
        for (int cin = 0; cin < 2; ++cin) {
          std::vector<int> bits;
          for (int i = 0; i < 4; ++i) bits.push_back((a >> i) & 1);
          for (int i = 0; i < 4; ++i) bits.push_back((b >> i) & 1);
          bits.push_back(cin);
          const HandshakeTrace tr = sim.run_cycle(bits);
          EXPECT_EQ(tr.out_value, static_cast<std::uint64_t>(a + b + cin >= 16));
          EXPECT_TRUE(tr.restored);
        }
  }
}

TEST(Bclg, RedundantSliceCarryTruth) {
  const Netlist nl = build_bclg(4, Protocol::rtz, true);
  Simulator sim(nl);
  const auto vectors = random_vectors(8, 300, 11);
  for (const InputVector& v : vectors) {
    std::vector<int> bits;
    for (int i = 0; i < 8; ++i) bits.push_back(static_cast<int>((v.a >> i) & 1));
    for (int i = 0; i < 8; ++i) bits.push_back(static_cast<int>((v.b >> i) & 1));
    bits.push_back(v.cin);
    const HandshakeTrace tr = sim.run_cycle(bits);
    EXPECT_EQ(tr.out_value,
              static_cast<std::uint64_t>(v.a + v.b +
                                             static_cast<std::uint64_t>(v.cin) >=
                                         256));
    EXPECT_TRUE(tr.restored);
  }
}

TEST(Bclg, RejectsUnsupportedBlockWidth) {
  EXPECT_THROW(build_bclg(5, Protocol::rtz, false), std::invalid_argument);
}

TEST(Dualization, CensusSwapsAndOrOnEveryBlock) {
  const auto check = [](const Netlist& rtz) {
    const Netlist rto = dualize(rtz);
    const GateCensus a = rtz.stats();
    const GateCensus b = rto.stats();
    EXPECT_EQ(a.total_gates, b.total_gates);
    EXPECT_EQ(a.count(GateKind::AND2), b.count(GateKind::OR2));
    EXPECT_EQ(a.count(GateKind::OR2), b.count(GateKind::AND2));
    EXPECT_EQ(a.count(GateKind::AND3), b.count(GateKind::OR3));
    EXPECT_EQ(a.count(GateKind::OR4), b.count(GateKind::AND4));
    EXPECT_EQ(a.count(GateKind::C2), b.count(GateKind::C2));
    EXPECT_EQ(a.count(GateKind::C3), b.count(GateKind::C3));
  };
  check(build_full_adder(Indication::strong, Protocol::rtz));
  check(build_full_adder(Indication::weak, Protocol::rtz));
  check(build_full_adder(Indication::early, Protocol::rtz));
  check(build_dbfa(Protocol::rtz));
  check(build_mux2(Protocol::rtz));
  check(build_bclg(4, Protocol::rtz, true));
}

TEST(Emitters, RequireRtzPolarity) {
  Netlist rto(Protocol::rto);
  const Rails a = rto.add_input_pair("a");
  const Rails b = rto.add_input_pair("b");
  const Rails cin = rto.add_input_pair("cin");
  EXPECT_THROW(emit_full_adder(rto, Indication::early, a, b, cin, "fa"),
               std::logic_error);
}

}  // namespace
}  // namespace qdi
