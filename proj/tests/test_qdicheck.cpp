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

#include "qdi/qdicheck.hpp"

#include <gtest/gtest.h>

#include <set>
#include <string>
#include <vector>

#include "qdi/adders.hpp"
#include "qdi/io.hpp"
#include "qdi/logiclib.hpp"
#include "qdi/sim.hpp"

namespace qdi {
namespace {

Netlist load_fixture(const std::string& name) {
  return read_netlist_file(std::string(QDILAB_DATA_DIR) + "/fixtures/" + name);
}

HandshakeTrace run_bits(const Netlist& nl, std::vector<int> bits) {
  SimOptions opt;
  opt.throw_on_output_error = false;
  Simulator sim(nl, DelayModel::unit(), opt);
  return sim.run_cycle(std::span<const int>(bits.data(), bits.size()));
}

TEST(Monotonic, CleanOnGeneratedAdders) {
  for (Protocol p : {Protocol::rtz, Protocol::rto}) {
    AdderSpec s;
    s.architecture = Architecture::bclarc;
    s.width = 8;
    s.protocol = p;
    const Netlist nl = generate(s);
    Simulator sim(nl);
    for (const InputVector& v : random_vectors(8, 25, 11)) {
      const HandshakeTrace tr = sim.run_cycle(v);
      EXPECT_TRUE(check_monotonic(nl, tr.transitions).clean());
    }
  }
}

TEST(Monotonic, AcceptsFallingDataUnderRto) {
  const Netlist nl = build_full_adder(Indication::early, Protocol::rto);
  Simulator sim(nl);
  const HandshakeTrace tr = sim.run_cycle(std::vector<int>{1, 0, 1});
  ASSERT_GT(tr.transitions_data, 0);
  EXPECT_TRUE(check_monotonic(nl, tr.transitions).clean());
}

TEST(Monotonic, FlagsGlitchFixture) {
  const Netlist nl = load_fixture("glitch.json");
  const HandshakeTrace tr = run_bits(nl, {1});
  const CheckReport mono = check_monotonic(nl, tr.transitions);
  EXPECT_GE(mono.count(ViolationKind::monotonicity), 1);

  // The hazard is purely combinational: the cycle still restores and every
  // transition is absorbed, so the round-trip check stays quiet.
  const CheckReport rt = check_round_trip(nl, tr.transitions);
  EXPECT_TRUE(rt.clean());
  EXPECT_TRUE(tr.restored);
}

TEST(RoundTrip, CleanOnGeneratedAdders) {
  for (Protocol p : {Protocol::rtz, Protocol::rto}) {
    AdderSpec s;
    s.architecture = Architecture::rca_sbfa;
    s.width = 8;
    s.protocol = p;
    s.fa_flavor = Indication::early;
    const Netlist nl = generate(s);
    Simulator sim(nl);
    std::vector<InputVector> vecs = random_vectors(8, 25, 12);
    vecs.push_back(all_propagate_vector(8));
    for (const InputVector& v : vecs) {
      const HandshakeTrace tr = sim.run_cycle(v);
      EXPECT_TRUE(check_round_trip(nl, tr.transitions).clean());
      EXPECT_TRUE(tr.restored);
    }
  }
}

TEST(RoundTrip, WeakCarryIsCoveredAtCycleGranularity) {
  const Netlist nl = build_full_adder(Indication::weak, Protocol::rtz);
  Simulator sim(nl);
  const HandshakeTrace tr = sim.run_cycle(std::vector<int>{1, 1, 1});
  EXPECT_TRUE(check_round_trip(nl, tr.transitions).clean());
}

TEST(RoundTrip, FlagsDeadEndFixture) {
  const Netlist nl = load_fixture("dead_end.json");

  const ValidationReport stat = nl.validate();
  EXPECT_GE(stat.count(FindingKind::dead_end_net), 1);

  const HandshakeTrace tr = run_bits(nl, {1, 1});
  const CheckReport rep = check_round_trip(nl, tr.transitions);
  EXPECT_GE(rep.count(ViolationKind::orphan), 1);
  EXPECT_EQ(rep.count(ViolationKind::non_restoring), 0);
  EXPECT_TRUE(check_monotonic(nl, tr.transitions).clean());

  const auto stub = nl.find_net("stub");
  ASSERT_TRUE(stub.has_value());
  bool stub_flagged = false;
  for (const Violation& v : rep.violations)
    stub_flagged |= (v.kind == ViolationKind::orphan && v.net == *stub);
  EXPECT_TRUE(stub_flagged);
}

TEST(RoundTrip, FlagsStuckFixture) {
  const Netlist nl = load_fixture("stuck.json");
  const HandshakeTrace tr = run_bits(nl, {1});
  EXPECT_FALSE(tr.restored);

  const CheckReport rep = check_round_trip(nl, tr.transitions);
  EXPECT_EQ(rep.count(ViolationKind::non_restoring), 2);
  EXPECT_EQ(rep.count(ViolationKind::orphan), 0);
  EXPECT_TRUE(check_monotonic(nl, tr.transitions).clean());

  std::set<std::string> stuck_nets;
  for (const Violation& v : rep.violations)
    stuck_nets.insert(nl.nets()[v.net].name);
  EXPECT_EQ(stuck_nets, (std::set<std::string>{"latch", "z.1"}));
}

TEST(RoundTrip, StrictModeFlagsEarlyResetInternals) {
  const Netlist nl = build_full_adder(Indication::early, Protocol::rtz);
  Simulator sim(nl);
  const HandshakeTrace tr = sim.run_cycle(std::vector<int>{1, 0, 1});

  EXPECT_TRUE(check_round_trip(nl, tr.transitions).clean());
  const CheckReport strict =
      check_round_trip(nl, tr.transitions, RoundTripOptions{true});
  EXPECT_GE(strict.count(ViolationKind::orphan), 1);
}

TEST(RoundTrip, StrictModeAcceptsFullIndication) {
  const Netlist nl = build_full_adder(Indication::strong, Protocol::rtz);
  Simulator sim(nl);
  for (int v = 0; v < 8; ++v) {
    const HandshakeTrace tr =
        sim.run_cycle(std::vector<int>{v & 1, (v >> 1) & 1, (v >> 2) & 1});
    EXPECT_TRUE(
        check_round_trip(nl, tr.transitions, RoundTripOptions{true}).clean());
  }
}

TEST(RoundTrip, StrictModeSeesStaggeredWeakCarrySets) {
  // When the operands arrive first, the carry output commits on one majority
  // C-element; the other majority terms then fire without any downstream
  // gate moving again, which only the per-transition mode notices.
  const Netlist nl = build_full_adder(Indication::weak, Protocol::rtz);
  SimOptions opt;
  opt.throw_on_output_error = false;
  Simulator sim(nl, DelayModel::unit(), opt);

  sim.set_pair(0, 1);  // a
  sim.set_pair(1, 1);  // b
  sim.settle(Phase::data);
  sim.set_pair(2, 1);  // cin
  sim.settle(Phase::data);
  const std::vector<Transition> trace = sim.take_transitions();

  const CheckReport strict =
      check_round_trip(nl, trace, RoundTripOptions{true});
  int late_majority_sets = 0;
  for (const Violation& v : strict.violations) {
    if (v.kind != ViolationKind::orphan) continue;
    const Net& n = nl.nets()[v.net];
    if (n.driver.kind == DriverKind::gate &&
        nl.gates()[n.driver.gate].kind == GateKind::C2) {
      ++late_majority_sets;
    }
  }
  EXPECT_EQ(late_majority_sets, 2);
}

TEST(Dsop, EarlyAdderCoversAreDisjoint) {
  for (Protocol p : {Protocol::rtz, Protocol::rto}) {
    const Netlist nl = build_full_adder(Indication::early, p);
    for (const char* net : {"sum.1", "sum.0", "cout.1", "cout.0"}) {
      const CubeList cl = extract_cover(nl, *nl.find_net(net));
      EXPECT_TRUE(check_dsop(cl).clean()) << net << " under " << to_string(p);
    }
  }
}

TEST(Dsop, DbfaAndMuxCoversAreDisjoint) {
  const Netlist dbfa = build_dbfa(Protocol::rtz);
  for (const char* net :
       {"sum0.1", "sum0.0", "sum1.1", "sum1.0", "cout.1", "cout.0"}) {
    const CubeList cl = extract_cover(dbfa, *dbfa.find_net(net));
    EXPECT_TRUE(check_dsop(cl).clean()) << net;
  }
  const Netlist mux = build_mux2(Protocol::rtz);
  for (const char* net : {"z.1", "z.0"}) {
    const CubeList cl = extract_cover(mux, *mux.find_net(net));
    EXPECT_TRUE(check_dsop(cl).clean()) << net;
  }
}

TEST(Dsop, BlockLookaheadCoversAreDisjoint) {
  const Netlist nl = build_bclg(4, Protocol::rtz, false);
  const struct {
    const char* net;
    std::size_t cubes;
  } cases[] = {{"blk/G", 15}, {"blk/K", 15}, {"blk/P", 16}};
  for (const auto& c : cases) {
    const CubeList cl = extract_cover(nl, *nl.find_net(c.net));
    EXPECT_EQ(cl.cubes.size(), c.cubes) << c.net;
    EXPECT_TRUE(check_dsop(cl).clean()) << c.net;
  }
  for (const char* net : {"cout.1", "cout.0"}) {
    const CubeList cl = extract_cover(nl, *nl.find_net(net));
    EXPECT_TRUE(check_dsop(cl).clean()) << net;
  }
}

TEST(Dsop, WeakMajorityCarryOverlapsByDesign) {
  const Netlist nl = build_full_adder(Indication::weak, Protocol::rtz);
  const CubeList cl = extract_cover(nl, *nl.find_net("cout.1"));
  ASSERT_EQ(cl.cubes.size(), 3u);
  EXPECT_EQ(check_dsop(cl).count(ViolationKind::dsop_overlap), 3);
}

TEST(Dsop, FlagsSharedLiteralCubes) {
  // a1*b1 and b1*cin1 can both be active when a = b = cin = 1.
  CubeList cl;
  cl.variables = {"a", "b", "cin"};
  cl.cubes.push_back({make_literal(0, 1), make_literal(1, 1)});
  cl.cubes.push_back({make_literal(1, 1), make_literal(2, 1)});
  const CheckReport rep = check_dsop(cl);
  EXPECT_EQ(rep.count(ViolationKind::dsop_overlap), 1);

  cl.cubes.pop_back();
  EXPECT_TRUE(check_dsop(cl).clean());
}

TEST(Dsop, CoverExtractionHandlesConstants) {
  Netlist nl(Protocol::rtz);
  const Rails a = nl.add_input_pair("a");
  const auto [g1, z1] = nl.add_gate(GateKind::AND2, {a.r1, nl.const_net(1)}, "z.1");
  const auto [g0, z0] = nl.add_gate(GateKind::AND2, {a.r0, nl.const_net(0)}, "z.0");
  (void)g1;
  (void)g0;
  nl.mark_output_pair(Rails{z1, z0});

  const CubeList always = extract_cover(nl, z1);
  ASSERT_EQ(always.cubes.size(), 1u);
  EXPECT_EQ(always.cubes[0], std::vector<int>{make_literal(0, 1)});

  const CubeList never = extract_cover(nl, z0);
  EXPECT_TRUE(never.cubes.empty());
  EXPECT_TRUE(check_dsop(never).clean());
}

TEST(Dsop, CoverExtractionRejectsInverters) {
  const Netlist nl = load_fixture("glitch.json");
  EXPECT_THROW(extract_cover(nl, *nl.find_net("z")), std::invalid_argument);
}

TEST(Dsop, CoverExtractionCapsBlowups) {
  AdderSpec s;
  s.architecture = Architecture::rca_sbfa;
  s.width = 4;
  s.fa_flavor = Indication::strong;
  s.with_completion_detectors = false;
  const Netlist nl = generate(s);
  EXPECT_THROW(extract_cover(nl, *nl.find_net("cout.1"), 16), CoverTooLarge);
}

TEST(Code, DataWordsFormAnUnorderedCode) {
  for (Protocol p : {Protocol::rtz, Protocol::rto}) {
    std::vector<DualRailWord> words;
    for (std::uint64_t v = 0; v < 16; ++v) words.push_back(encode_word(v, 4, p));
    EXPECT_TRUE(check_code(words).clean()) << to_string(p);
  }
}

TEST(Code, FlagsContainedActiveSets) {
  // (1,0) is a codeword prefix of the malformed (1,1): a receiver cannot
  // tell the complete smaller word from the larger one still arriving.
  std::vector<DualRailWord> words(2);
  words[0].protocol = Protocol::rtz;
  words[0].pairs = {RailPair{1, 0}};
  words[1].protocol = Protocol::rtz;
  words[1].pairs = {RailPair{1, 1}};
  const CheckReport rep = check_code(words);
  ASSERT_EQ(rep.count(ViolationKind::illegal_code), 1);
  EXPECT_EQ(rep.violations[0].index, 1u);
}

TEST(Code, SpacerIsDominatedByEveryWord) {
  std::vector<DualRailWord> words = {spacer_word(2, Protocol::rtz),
                                     encode_word(1, 2, Protocol::rtz)};
  EXPECT_GE(check_code(words).count(ViolationKind::illegal_code), 1);
}

TEST(Code, RejectsMixedShapes) {
  std::vector<DualRailWord> widths = {encode_word(1, 2, Protocol::rtz),
                                      encode_word(1, 3, Protocol::rtz)};
  EXPECT_THROW(check_code(widths), std::invalid_argument);
  std::vector<DualRailWord> protocols = {encode_word(1, 2, Protocol::rtz),
                                         encode_word(1, 2, Protocol::rto)};
  EXPECT_THROW(check_code(protocols), std::invalid_argument);
}

TEST(Classify, FullAddersLandInTheirOwnClasses) {
  for (Protocol p : {Protocol::rtz, Protocol::rto}) {
    for (Indication f :
         {Indication::strong, Indication::weak, Indication::early}) {
      const Netlist nl = build_full_adder(f, p);
      EXPECT_EQ(classify_indication(nl), f) << to_string(f) << " " << to_string(p);
    }
  }
}

TEST(Classify, StableAcrossDelayModels) {
  const DelayModel skewed =
      DelayModel::per_kind({3, 2, 2, 2, 1, 1, 1, 4, 5});
  for (Indication f :
       {Indication::strong, Indication::weak, Indication::early}) {
    const Netlist nl = build_full_adder(f, Protocol::rtz);
    EXPECT_EQ(classify_indication(nl, skewed), f) << to_string(f);
  }
}

TEST(Classify, CompositionOfFullIndicationIsNotFull) {
  AdderSpec s;
  s.architecture = Architecture::rca_sbfa;
  s.width = 2;
  s.fa_flavor = Indication::strong;
  s.with_completion_detectors = false;
  const Netlist nl = generate(s);
  EXPECT_EQ(classify_indication(nl), Indication::weak);
}

TEST(Classify, RejectsDegenerateNetlists) {
  const Netlist cd = build_completion_detector(3, Protocol::rtz);
  EXPECT_THROW(classify_indication(cd), std::invalid_argument);
}

TEST(Soundness, GeneratedAddersPassDynamicChecks) {
  for (Protocol p : {Protocol::rtz, Protocol::rto}) {
    for (Architecture arch :
         {Architecture::rca_sbfa, Architecture::rca_dbfa, Architecture::ccla,
          Architecture::bclarc}) {
      AdderSpec s;
      s.architecture = arch;
      s.width = 8;
      s.protocol = p;
      const Netlist nl = generate(s);
      Simulator sim(nl);

      std::vector<InputVector> vecs = random_vectors(8, 12, 21);
      vecs.push_back(all_propagate_vector(8));
      std::vector<DualRailWord> outputs;
      for (const InputVector& v : vecs) {
        const HandshakeTrace tr = sim.run_cycle(v);
        ASSERT_TRUE(check_monotonic(nl, tr.transitions).clean());
        ASSERT_TRUE(check_round_trip(nl, tr.transitions).clean());
        ASSERT_TRUE(tr.restored);
        outputs.push_back(encode_word(tr.out_value, nl.output_pair_count(), p));
      }
      std::sort(outputs.begin(), outputs.end(),
                [](const DualRailWord& x, const DualRailWord& y) {
                  return decode_word(x).value < decode_word(y).value;
                });
      outputs.erase(std::unique(outputs.begin(), outputs.end()),
                    outputs.end());
      EXPECT_TRUE(check_code(outputs).clean());
    }
  }
}

}  // namespace
}  // namespace qdi
