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

#include "qdi/adders.hpp"

#include <gtest/gtest.h>

#include <vector>

#include "qdi/sim.hpp"

namespace qdi {
namespace {

AdderSpec make_spec(Architecture arch, int width, Protocol p,
                    bool cds = true) {
  AdderSpec s;
  s.architecture = arch;
  s.width = width;
  s.protocol = p;
  s.with_completion_detectors = cds;
  if (arch == Architecture::csla && width % 8 != 0)
    s.partition = std::vector<int>(static_cast<std::size_t>(width / 2), 2);
  return s;
}

// Every architecture at a width it supports, small enough for quick sweeps.
std::vector<AdderSpec> small_specs(Protocol p) {
  std::vector<AdderSpec> specs;
  for (Indication f :
       {Indication::strong, Indication::weak, Indication::early}) {
    AdderSpec s = make_spec(Architecture::rca_sbfa, 4, p);
    s.fa_flavor = f;
    specs.push_back(s);
  }
  specs.push_back(make_spec(Architecture::rca_dbfa, 4, p));
  specs.push_back(make_spec(Architecture::hybrid_rca, 4, p));
  specs.push_back(make_spec(Architecture::csla, 4, p));
  specs.push_back(make_spec(Architecture::ccla, 4, p));
  specs.push_back(make_spec(Architecture::bcla, 4, p));
  specs.push_back(make_spec(Architecture::bclarc, 4, p));
  AdderSpec hybrid = make_spec(Architecture::hybrid_bclarc_rca, 8, p);
  hybrid.lsb_rca_width = 4;
  specs.push_back(hybrid);
  return specs;
}

TEST(AdderSpec, ValidationRejectsBadShapes) {
  AdderSpec s;
  s.width = 1;
  EXPECT_THROW(s.validate(), std::invalid_argument);
  s.width = 63;
  EXPECT_THROW(s.validate(), std::invalid_argument);

  s = AdderSpec{};
  s.architecture = Architecture::ccla;
  s.width = 10;
  EXPECT_THROW(s.validate(), std::invalid_argument);

  s = AdderSpec{};
  s.architecture = Architecture::rca_dbfa;
  s.width = 7;
  EXPECT_THROW(s.validate(), std::invalid_argument);

  s = AdderSpec{};
  s.architecture = Architecture::csla;
  s.width = 12;  // not a multiple of 8 and no explicit partition
  EXPECT_THROW(s.validate(), std::invalid_argument);
  s.partition = {4, 4, 4};
  EXPECT_NO_THROW(s.validate());
  s.partition = {4, 4};
  EXPECT_THROW(s.validate(), std::invalid_argument);

  s = AdderSpec{};
  s.architecture = Architecture::rca_sbfa;
  s.partition = {8};
  EXPECT_THROW(s.validate(), std::invalid_argument);

  s = AdderSpec{};
  s.architecture = Architecture::hybrid_bclarc_rca;
  s.width = 32;
  s.lsb_rca_width = 6;
  EXPECT_THROW(s.validate(), std::invalid_argument);
  s.lsb_rca_width = 32;
  EXPECT_THROW(s.validate(), std::invalid_argument);
  s.lsb_rca_width = 12;
  EXPECT_NO_THROW(s.validate());
}

TEST(AdderSpec, LabelsNameTheVariant) {
  AdderSpec s;
  s.architecture = Architecture::rca_sbfa;
  s.fa_flavor = Indication::weak;
  EXPECT_EQ(s.label(), "rca-weak");

  s = AdderSpec{};
  s.architecture = Architecture::csla;
  s.width = 32;
  EXPECT_EQ(s.label(), "csla-8888");

  s = AdderSpec{};
  s.architecture = Architecture::hybrid_bclarc_rca;
  s.lsb_rca_width = 8;
  EXPECT_EQ(s.label(), "hybrid-bclarc-rca-8");

  s = AdderSpec{};
  s.architecture = Architecture::bclarc;
  EXPECT_EQ(s.label(), "bclarc");
}

TEST(AdderSpec, ArchitectureNamesRoundTrip) {
  for (Architecture a :
       {Architecture::rca_sbfa, Architecture::rca_dbfa, Architecture::hybrid_rca,
        Architecture::csla, Architecture::ccla, Architecture::bcla,
        Architecture::bclarc, Architecture::hybrid_bclarc_rca}) {
    EXPECT_EQ(architecture_from_string(to_string(a)), a);
  }
  EXPECT_THROW(architecture_from_string("rca"), std::invalid_argument);
}

TEST(Generate, ExhaustiveSmallWidths) {
  for (Protocol p : {Protocol::rtz, Protocol::rto}) {
    for (const AdderSpec& spec : small_specs(p)) {
      const Netlist nl = generate(spec);
      Simulator sim(nl);
      const int w = spec.width;
      const std::uint64_t lim = 1ull << w;
      // Exhaustive at width 4; a fixed stride keeps the width-8 hybrid quick.
      const std::uint64_t step = w <= 4 ? 1 : 41;
      for (std::uint64_t ab = 0; ab < lim * lim; ab += step) {
        for (int cin = 0; cin < 2; ++cin) {
          const InputVector v{ab % lim, ab / lim, cin};
          const HandshakeTrace tr = sim.run_cycle(v);
          ASSERT_EQ(tr.out_value, reference_sum(v, w))
              << spec.label() << " " << to_string(p) << " a=" << v.a
              << " b=" << v.b << " cin=" << v.cin;
          ASSERT_TRUE(tr.restored) << spec.label();
          ASSERT_EQ(tr.ct, tr.fl + tr.rl);
        }
      }
    }
  }
}

TEST(Generate, RandomWidth32AllArchitectures) {
  for (Protocol p : {Protocol::rtz, Protocol::rto}) {
    std::vector<AdderSpec> specs;
    for (Architecture arch :
         {Architecture::rca_sbfa, Architecture::rca_dbfa,
          Architecture::hybrid_rca, Architecture::csla, Architecture::ccla,
          Architecture::bcla, Architecture::bclarc,
          Architecture::hybrid_bclarc_rca}) {
      specs.push_back(make_spec(arch, 32, p));
    }
    for (const AdderSpec& spec : specs) {
      const Netlist nl = generate(spec);
      Simulator sim(nl);
      for (const InputVector& v : random_vectors(32, 50, 2026)) {
        const HandshakeTrace tr = sim.run_cycle(v);
        ASSERT_EQ(tr.out_value, reference_sum(v, 32))
            << spec.label() << " " << to_string(p);
        ASSERT_TRUE(tr.restored);
      }
    }
  }
}

TEST(Generate, GateBudgetsMatchHandCounts) {
  AdderSpec s = make_spec(Architecture::rca_sbfa, 32, Protocol::rtz, false);
  s.fa_flavor = Indication::strong;
  const GateCensus strong = generate(s).stats();
  EXPECT_EQ(strong.count(GateKind::C3), 256);
  EXPECT_EQ(strong.count(GateKind::OR4), 128);
  EXPECT_EQ(strong.total_gates, 384);

  const GateCensus dbfa =
      generate(make_spec(Architecture::rca_dbfa, 32, Protocol::rtz, false))
          .stats();
  EXPECT_EQ(dbfa.total_gates, 16 * 43);

  const GateCensus csla =
      generate(make_spec(Architecture::csla, 32, Protocol::rtz, false))
          .stats();
  EXPECT_EQ(csla.total_gates, 7 * 144 + 27 * 6);

  const GateCensus hybrid =
      generate(make_spec(Architecture::hybrid_rca, 32, Protocol::rtz, false))
          .stats();
  EXPECT_EQ(hybrid.total_gates, 2 * 18 + 15 * 43);
}

TEST(Generate, CompletionDetectorsAreOptional) {
  const Netlist with =
      generate(make_spec(Architecture::rca_sbfa, 8, Protocol::rtz, true));
  EXPECT_TRUE(with.ack_net("ack_in").has_value());
  EXPECT_TRUE(with.ack_net("ack_out").has_value());

  const Netlist without =
      generate(make_spec(Architecture::rca_sbfa, 8, Protocol::rtz, false));
  EXPECT_FALSE(without.ack_net("ack_in").has_value());
  EXPECT_FALSE(without.ack_net("ack_out").has_value());

  Simulator sim(with);
  const HandshakeTrace tr = sim.run_cycle(InputVector{200, 55, 1});
  EXPECT_GE(tr.fl_cd, tr.fl);  // the detector fires after the last output rail
  EXPECT_GE(tr.rl_cd, tr.rl);
}

TEST(Generate, StructurallyCleanEverywhere) {
  for (Protocol p : {Protocol::rtz, Protocol::rto}) {
    for (const AdderSpec& spec : small_specs(p)) {
      const ValidationReport rep = generate(spec).validate();
      EXPECT_TRUE(rep.clean())
          << spec.label() << ": " << rep.findings.size() << " findings";
    }
  }
}

TEST(Generate, OnlySegmentedSelectionUsesConstants) {
  EXPECT_TRUE(
      generate(make_spec(Architecture::csla, 16, Protocol::rtz)).has_constants());
  for (Architecture arch :
       {Architecture::rca_sbfa, Architecture::rca_dbfa, Architecture::ccla,
        Architecture::bcla, Architecture::bclarc}) {
    EXPECT_FALSE(generate(make_spec(arch, 16, Protocol::rtz)).has_constants())
        << to_string(arch);
  }
}

TEST(Generate, DualizeRoundTripsWholeAdders) {
  const Netlist rtz = generate(make_spec(Architecture::ccla, 8, Protocol::rtz));
  const Netlist back = dualize(dualize(rtz));
  EXPECT_EQ(back.protocol(), Protocol::rtz);
  EXPECT_EQ(back.net_count(), rtz.net_count());
  for (std::size_t i = 0; i < rtz.gates().size(); ++i) {
    EXPECT_EQ(back.gates()[i].kind, rtz.gates()[i].kind);
    EXPECT_EQ(back.gates()[i].name, rtz.gates()[i].name);
  }
}

TEST(Generate, RtoSpecProducesDualGates) {
  const GateCensus rtz =
      generate(make_spec(Architecture::rca_sbfa, 8, Protocol::rtz)).stats();
  const GateCensus rto =
      generate(make_spec(Architecture::rca_sbfa, 8, Protocol::rto)).stats();
  EXPECT_EQ(rtz.count(GateKind::AND2), rto.count(GateKind::OR2));
  EXPECT_EQ(rtz.count(GateKind::OR2), rto.count(GateKind::AND2));
  EXPECT_EQ(rtz.total_gates, rto.total_gates);
}

TEST(Latency, IndicatingLookaheadIsSymmetricPerVector) {
  const Netlist nl = generate(make_spec(Architecture::ccla, 8, Protocol::rtz));
  Simulator sim(nl);
  std::vector<InputVector> vecs = random_vectors(8, 25, 7);
  vecs.push_back(all_propagate_vector(8));
  for (const InputVector& v : vecs) {
    const HandshakeTrace tr = sim.run_cycle(v);
    EXPECT_EQ(tr.fl, tr.rl) << "a=" << v.a << " b=" << v.b << " cin=" << v.cin;
  }
}

TEST(Latency, StrongRippleIsSymmetricPerVector) {
  const Netlist nl = [] {
    AdderSpec s = make_spec(Architecture::rca_sbfa, 8, Protocol::rtz);
    s.fa_flavor = Indication::strong;
    return generate(s);
  }();
  Simulator sim(nl);
  for (const InputVector& v : random_vectors(8, 50, 3)) {
    const HandshakeTrace tr = sim.run_cycle(v);
    EXPECT_EQ(tr.fl, tr.rl);
  }
}

TEST(Latency, EarlyRippleResetIsWidthIndependent) {
  std::vector<std::int64_t> rls;
  for (int w : {8, 16}) {
    const Netlist nl = generate(make_spec(Architecture::rca_sbfa, w, Protocol::rtz));
    Simulator sim(nl);
    const SequenceStats st = run_sequence(sim, random_vectors(w, 50, 5));
    EXPECT_EQ(SequenceStats::distinct(st.rl), 1u) << "width " << w;
    rls.push_back(st.rl.front());
  }
  EXPECT_EQ(rls[0], rls[1]);
}

TEST(Latency, RedundantCarryShortensReset) {
  for (Protocol p : {Protocol::rtz, Protocol::rto}) {
    const InputVector v = all_propagate_vector(16);
    const Netlist nl_bcla = generate(make_spec(Architecture::bcla, 16, p));
    const Netlist nl_bclarc = generate(make_spec(Architecture::bclarc, 16, p));
    Simulator bcla(nl_bcla);
    Simulator bclarc(nl_bclarc);
    const HandshakeTrace a = bcla.run_cycle(v);
    const HandshakeTrace b = bclarc.run_cycle(v);
    EXPECT_LT(b.rl, a.rl) << to_string(p);
    EXPECT_LT(b.ct, a.ct) << to_string(p);
  }
}

TEST(Generate, HybridWithZeroRcaMatchesPureSection) {
  AdderSpec h = make_spec(Architecture::hybrid_bclarc_rca, 16, Protocol::rtz);
  h.lsb_rca_width = 0;
  const GateCensus a = generate(h).stats();
  const GateCensus b =
      generate(make_spec(Architecture::bclarc, 16, Protocol::rtz)).stats();
  EXPECT_TRUE(a.same_counts(b));
}

}  // namespace
}  // namespace qdi
