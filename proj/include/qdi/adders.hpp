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
// Word-level adder generators. Every architecture is assembled from the
// logiclib primitives in RTZ polarity; RTO instances are the gate-for-gate
// dual. Inputs are the a word, the b word, then carry-in; outputs are the
// sum word followed by carry-out, with optional completion detectors on
// both sides.

#ifndef QDI_ADDERS_HPP_
#define QDI_ADDERS_HPP_

#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qdi/encoding.hpp"
#include "qdi/logiclib.hpp"
#include "qdi/netlist.hpp"

namespace qdi {

enum class Architecture : std::uint8_t {
  rca_sbfa,
  rca_dbfa,
  hybrid_rca,
  csla,
  ccla,
  bcla,
  bclarc,
  hybrid_bclarc_rca,
};

inline const char* to_string(Architecture a) {
  switch (a) {
    case Architecture::rca_sbfa: return "rca-sbfa";
    case Architecture::rca_dbfa: return "rca-dbfa";
    case Architecture::hybrid_rca: return "hybrid-rca";
    case Architecture::csla: return "csla";
    case Architecture::ccla: return "ccla";
    case Architecture::bcla: return "bcla";
    case Architecture::bclarc: return "bclarc";
    case Architecture::hybrid_bclarc_rca: return "hybrid-bclarc-rca";
  }
  return "?";
}

inline Architecture architecture_from_string(std::string_view s) {
  if (s == "rca-sbfa") return Architecture::rca_sbfa;
  if (s == "rca-dbfa") return Architecture::rca_dbfa;
  if (s == "hybrid-rca") return Architecture::hybrid_rca;
  if (s == "csla") return Architecture::csla;
  if (s == "ccla") return Architecture::ccla;
  if (s == "bcla") return Architecture::bcla;
  if (s == "bclarc") return Architecture::bclarc;
  if (s == "hybrid-bclarc-rca") return Architecture::hybrid_bclarc_rca;
  throw std::invalid_argument("unknown architecture: " + std::string(s));
}

struct AdderSpec {
  Architecture architecture = Architecture::rca_sbfa;
  int width = 32;
  Protocol protocol = Protocol::rtz;
  Indication fa_flavor = Indication::early;  // rca_sbfa only
  std::vector<int> partition;                // csla only
  int lsb_rca_width = 4;                     // hybrid_bclarc_rca only
  bool with_completion_detectors = true;

  friend bool operator==(const AdderSpec&, const AdderSpec&) = default;

  void validate() const {
    if (width < 2 || width > 62)
      throw std::invalid_argument("width must be between 2 and 62");
    const bool is_block = architecture == Architecture::ccla ||
                          architecture == Architecture::bcla ||
                          architecture == Architecture::bclarc;
    if (is_block && width % 4 != 0)
      throw std::invalid_argument(
          "block architectures need a width divisible by 4");
    if ((architecture == Architecture::rca_dbfa ||
         architecture == Architecture::hybrid_rca) &&
        width % 2 != 0)
      throw std::invalid_argument("dual-bit architectures need an even width");
    if (architecture == Architecture::hybrid_rca && width < 4)
      throw std::invalid_argument("hybrid-rca needs width of at least 4");
    if (architecture == Architecture::csla) {
      std::vector<int> part = effective_partition();
      int total = 0;
      for (int m : part) {
        if (m < 1) throw std::invalid_argument("csla partition entries must be positive");
        total += m;
      }
      if (total != width)
        throw std::invalid_argument("csla partition must sum to the width");
    } else if (!partition.empty()) {
      throw std::invalid_argument("partition applies to csla only");
    }
    if (architecture == Architecture::hybrid_bclarc_rca) {
      if (lsb_rca_width != 0 && lsb_rca_width != 4 && lsb_rca_width != 8 &&
          lsb_rca_width != 12)
        throw std::invalid_argument("lsb_rca_width must be one of 0, 4, 8, 12");
      if (lsb_rca_width >= width)
        throw std::invalid_argument("lsb_rca_width must be smaller than width");
      if ((width - lsb_rca_width) % 4 != 0)
        throw std::invalid_argument(
            "width minus lsb_rca_width must be divisible by 4");
    }
  }

  std::vector<int> effective_partition() const {
    if (architecture != Architecture::csla) return {};
    if (!partition.empty()) return partition;
    if (width % 8 != 0)
      throw std::invalid_argument(
          "csla needs an explicit partition unless width is a multiple of 8");
    return std::vector<int>(static_cast<std::size_t>(width / 8), 8);
  }

  std::string label() const {
    switch (architecture) {
      case Architecture::rca_sbfa:
        return std::string("rca-") + to_string(fa_flavor);
      case Architecture::csla: {
        std::string s = "csla-";
        for (int m : effective_partition()) s += std::to_string(m);
        return s;
      }
      case Architecture::hybrid_bclarc_rca:
        return "hybrid-bclarc-rca-" + std::to_string(lsb_rca_width);
      default:
        return to_string(architecture);
    }
  }
};

namespace detail {

struct WordAdder {
  std::vector<Rails> sum;
  Rails cout;
};

inline WordAdder emit_early_rca(Netlist& nl, std::span<const Rails> a,
                                std::span<const Rails> b, Rails cin,
                                const std::string& pfx) {
  WordAdder out;
  Rails c = cin;
  for (std::size_t i = 0; i < a.size(); ++i) {
    FaOuts fa = emit_early_full_adder(nl, a[i], b[i], c,
                                      pfx + "/fa" + std::to_string(i));
    out.sum.push_back(fa.sum);
    c = fa.cout;
  }
  out.cout = c;
  return out;
}

// Sum rails for one lookahead block, reusing the block's per-bit g/k/p nets
// for the early sum sections and the internal carry ripple.
inline std::vector<Rails> emit_block_sums(Netlist& nl, const BlockGpk& bg,
                                          Rails cin, const std::string& pfx) {
  std::vector<Rails> sums;
  Rails c = cin;
  for (int i = 0; i < 4; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    const std::string bit = pfx + "/b" + std::to_string(i);
    const NetId e =
        nl.add_gate(GateKind::OR2, {bg.g[idx], bg.k[idx]}, bit + "/e").second;
    EarlyPe pe;
    pe.p = bg.p[idx];
    pe.e = e;
    sums.push_back(emit_early_sum(nl, pe, c, bit));
    if (i < 3) c = emit_early_cout_gpk(nl, bg.g[idx], bg.k[idx], bg.p[idx], c, bit);
  }
  return sums;
}

// Prefix covers for one lookahead block, flattened to the operand rails so
// each product is a balanced AND tree over nets that switch together. That
// keeps per-net set and reset times equal, which is what gives the whole
// adder identical forward and reverse latencies.
struct CclaPrefix {
  std::array<Gpk, 4> at{};       // generate/propagate/kill over bits 0..j
  std::array<NetId, 4> diff{};   // per-bit operand-difference rail
  std::array<NetId, 4> eq{};     // per-bit operand-equality rail
};

inline CclaPrefix emit_ccla_prefix(Netlist& nl, std::span<const Rails> a,
                                   std::span<const Rails> b,
                                   const std::string& pfx) {
  CclaPrefix pre;
  std::array<NetId, 4> g{}, k{};
  for (int i = 0; i < 4; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    const std::string bit = pfx + "/b" + std::to_string(i);
    g[idx] = nl.add_gate(GateKind::AND2, {a[idx].r1, b[idx].r1}, bit + "/g").second;
    k[idx] = nl.add_gate(GateKind::AND2, {a[idx].r0, b[idx].r0}, bit + "/k").second;
    const NetId da = nl.add_gate(GateKind::AND2, {a[idx].r1, b[idx].r0}, bit + "/da").second;
    const NetId db = nl.add_gate(GateKind::AND2, {a[idx].r0, b[idx].r1}, bit + "/db").second;
    pre.diff[idx] = nl.add_gate(GateKind::OR2, {da, db}, bit + "/diff").second;
    pre.eq[idx] = nl.add_gate(GateKind::OR2, {g[idx], k[idx]}, bit + "/eq").second;
  }
  // Expands runs of per-bit propagate into their two rail products. A run of
  // length zero degenerates to the per-bit generate/kill net itself.
  const auto expand = [&](int seed_bit, bool seed_rail1, int j,
                          std::vector<std::vector<NetId>>& products) {
    const int np = j - seed_bit;
    const auto sb = static_cast<std::size_t>(seed_bit);
    if (np == 0) {
      products.push_back({seed_rail1 ? g[sb] : k[sb]});
      return;
    }
    for (std::uint32_t mask = 0; mask < (1u << np); ++mask) {
      std::vector<NetId> lits;
      lits.push_back(seed_rail1 ? a[sb].r1 : a[sb].r0);
      lits.push_back(seed_rail1 ? b[sb].r1 : b[sb].r0);
      for (int t = 0; t < np; ++t) {
        const auto bit = static_cast<std::size_t>(seed_bit + 1 + t);
        if (mask & (1u << t)) {
          lits.push_back(a[bit].r1);
          lits.push_back(b[bit].r0);
        } else {
          lits.push_back(a[bit].r0);
          lits.push_back(b[bit].r1);
        }
      }
      products.push_back(std::move(lits));
    }
  };
  pre.at[0] = Gpk{g[0], pre.diff[0], k[0]};
  for (int j = 1; j < 4; ++j) {
    const auto jd = static_cast<std::size_t>(j);
    const std::string tag = pfx + "/pre" + std::to_string(j);
    std::vector<std::vector<NetId>> gen, kill, prop;
    for (int i = j; i >= 0; --i) {
      expand(i, true, j, gen);
      expand(i, false, j, kill);
    }
    // Full-propagate: every bit differs; 2^(j+1) rail choices.
    for (std::uint32_t mask = 0; mask < (1u << (j + 1)); ++mask) {
      std::vector<NetId> lits;
      for (int t = 0; t <= j; ++t) {
        const auto bit = static_cast<std::size_t>(t);
        if (mask & (1u << t)) {
          lits.push_back(a[bit].r1);
          lits.push_back(b[bit].r0);
        } else {
          lits.push_back(a[bit].r0);
          lits.push_back(b[bit].r1);
        }
      }
      prop.push_back(std::move(lits));
    }
    pre.at[jd].g = emit_cover(nl, gen, tag + "/G");
    pre.at[jd].k = emit_cover(nl, kill, tag + "/K");
    pre.at[jd].p = emit_cover(nl, prop, tag + "/P");
  }
  return pre;
}

// Indicating lookahead carry: every active path holds a C-element on the
// carry-in, so the carry acknowledges cin in both phases and its set and
// reset delays coincide.
inline Rails emit_ccla_carry(Netlist& nl, const Gpk& pre, Rails cin,
                             const std::string& pfx) {
  Rails c;
  const NetId gc1 = nl.add_gate(GateKind::C2, {pre.g, cin.r1}, pfx + "/gc1").second;
  const NetId gc0 = nl.add_gate(GateKind::C2, {pre.g, cin.r0}, pfx + "/gc0").second;
  const NetId pc1 = nl.add_gate(GateKind::C2, {pre.p, cin.r1}, pfx + "/pc1").second;
  c.r1 = nl.add_gate(GateKind::OR3, {gc1, gc0, pc1}, pfx + ".1").second;
  const NetId kc1 = nl.add_gate(GateKind::C2, {pre.k, cin.r1}, pfx + "/kc1").second;
  const NetId kc0 = nl.add_gate(GateKind::C2, {pre.k, cin.r0}, pfx + "/kc0").second;
  const NetId pc0 = nl.add_gate(GateKind::C2, {pre.p, cin.r0}, pfx + "/pc0").second;
  c.r0 = nl.add_gate(GateKind::OR3, {kc1, kc0, pc0}, pfx + ".0").second;
  return c;
}

inline Rails emit_ccla_sum(Netlist& nl, NetId diff, NetId eq, Rails c,
                           const std::string& pfx) {
  Rails sum;
  const NetId s1d = nl.add_gate(GateKind::C2, {diff, c.r0}, pfx + "/s1d").second;
  const NetId s1e = nl.add_gate(GateKind::C2, {eq, c.r1}, pfx + "/s1e").second;
  sum.r1 = nl.add_gate(GateKind::OR2, {s1d, s1e}, pfx + "/sum.1").second;
  const NetId s0d = nl.add_gate(GateKind::C2, {diff, c.r1}, pfx + "/s0d").second;
  const NetId s0e = nl.add_gate(GateKind::C2, {eq, c.r0}, pfx + "/s0e").second;
  sum.r0 = nl.add_gate(GateKind::OR2, {s0d, s0e}, pfx + "/sum.0").second;
  return sum;
}

inline WordAdder emit_ccla_block(Netlist& nl, std::span<const Rails> a,
                                 std::span<const Rails> b, Rails cin,
                                 const std::string& pfx) {
  const CclaPrefix pre = emit_ccla_prefix(nl, a, b, pfx);
  WordAdder out;
  Rails c = cin;
  for (int i = 0; i < 4; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    if (i > 0)
      c = emit_ccla_carry(nl, pre.at[idx - 1], cin, pfx + "/c" + std::to_string(i));
    out.sum.push_back(emit_ccla_sum(nl, pre.diff[idx], pre.eq[idx], c,
                                    pfx + "/b" + std::to_string(i)));
  }
  out.cout = emit_ccla_carry(nl, pre.at[3], cin, pfx + "/cout");
  return out;
}

// Redundant-carry lookahead section over a multiple of four bits.
inline WordAdder emit_bclarc_section(Netlist& nl, std::span<const Rails> a,
                                     std::span<const Rails> b, Rails cin,
                                     const std::string& pfx) {
  const std::size_t nb = a.size() / 4;
  std::vector<BlockGpk> bg;
  bg.reserve(nb);
  for (std::size_t k = 0; k < nb; ++k)
    bg.push_back(emit_block_gpk(nl, a.subspan(4 * k, 4), b.subspan(4 * k, 4),
                                pfx + std::to_string(k)));
  std::vector<Rails> c(nb + 1);
  c[0] = cin;
  if (nb >= 1) c[1] = emit_bclg_carry(nl, bg[0].block, cin, pfx + "0");
  for (std::size_t k = 1; k < nb; ++k)
    c[k + 1] = emit_bclarc_carry(nl, bg[k].block, bg[k - 1].block, c[k - 1],
                                 pfx + std::to_string(k));
  WordAdder out;
  for (std::size_t k = 0; k < nb; ++k) {
    auto sums = emit_block_sums(nl, bg[k], c[k], pfx + std::to_string(k));
    out.sum.insert(out.sum.end(), sums.begin(), sums.end());
  }
  out.cout = c[nb];
  return out;
}

}  // namespace detail

// Builds the requested adder. RTZ is constructed directly; RTO is its dual.
inline Netlist generate(const AdderSpec& spec) {
  spec.validate();
  Netlist nl(Protocol::rtz);
  const int w = spec.width;
  std::vector<Rails> a, b;
  a.reserve(static_cast<std::size_t>(w));
  b.reserve(static_cast<std::size_t>(w));
  for (int i = 0; i < w; ++i) a.push_back(nl.add_input_pair("a" + std::to_string(i)));
  for (int i = 0; i < w; ++i) b.push_back(nl.add_input_pair("b" + std::to_string(i)));
  const Rails cin = nl.add_input_pair("cin");
  const std::span<const Rails> as(a.data(), a.size());
  const std::span<const Rails> bs(b.data(), b.size());

  detail::WordAdder out;
  switch (spec.architecture) {
    case Architecture::rca_sbfa: {
      Rails c = cin;
      for (int i = 0; i < w; ++i) {
        const auto idx = static_cast<std::size_t>(i);
        FaOuts fa = emit_full_adder(nl, spec.fa_flavor, a[idx], b[idx], c,
                                    "fa" + std::to_string(i));
        out.sum.push_back(fa.sum);
        c = fa.cout;
      }
      out.cout = c;
      break;
    }
    case Architecture::rca_dbfa: {
      Rails c = cin;
      for (int i = 0; i < w; i += 2) {
        const auto idx = static_cast<std::size_t>(i);
        DbfaOuts d = emit_dbfa(nl, a[idx], a[idx + 1], b[idx], b[idx + 1], c,
                               "dbfa" + std::to_string(i / 2));
        out.sum.push_back(d.sum0);
        out.sum.push_back(d.sum1);
        c = d.cout;
      }
      out.cout = c;
      break;
    }
    case Architecture::hybrid_rca: {
      detail::WordAdder low =
          detail::emit_early_rca(nl, as.subspan(0, 2), bs.subspan(0, 2), cin, "lsb");
      out.sum = low.sum;
      Rails c = low.cout;
      for (int i = 2; i < w; i += 2) {
        const auto idx = static_cast<std::size_t>(i);
        DbfaOuts d = emit_dbfa(nl, a[idx], a[idx + 1], b[idx], b[idx + 1], c,
                               "dbfa" + std::to_string(i / 2));
        out.sum.push_back(d.sum0);
        out.sum.push_back(d.sum1);
        c = d.cout;
      }
      out.cout = c;
      break;
    }
    case Architecture::csla: {
      const std::vector<int> part = spec.effective_partition();
      std::size_t base = 0;
      Rails carry;
      for (std::size_t s = 0; s < part.size(); ++s) {
        const auto m = static_cast<std::size_t>(part[s]);
        const std::string seg = "seg" + std::to_string(s);
        if (s == 0) {
          detail::WordAdder wa = detail::emit_early_rca(
              nl, as.subspan(base, m), bs.subspan(base, m), cin, seg);
          out.sum = wa.sum;
          carry = wa.cout;
        } else {
          const Rails zero{nl.const_net(0), nl.const_net(1)};
          const Rails one{nl.const_net(1), nl.const_net(0)};
          detail::WordAdder w0 = detail::emit_early_rca(
              nl, as.subspan(base, m), bs.subspan(base, m), zero, seg + "l");
          detail::WordAdder w1 = detail::emit_early_rca(
              nl, as.subspan(base, m), bs.subspan(base, m), one, seg + "h");
          for (std::size_t i = 0; i < m; ++i)
            out.sum.push_back(emit_mux2(nl, w0.sum[i], w1.sum[i], carry,
                                        seg + "/mux" + std::to_string(i)));
          carry = emit_mux2(nl, w0.cout, w1.cout, carry, seg + "/muxc");
        }
        base += m;
      }
      out.cout = carry;
      break;
    }
    case Architecture::ccla: {
      Rails c = cin;
      for (int k = 0; k < w / 4; ++k) {
        const auto base = static_cast<std::size_t>(4 * k);
        detail::WordAdder blk =
            detail::emit_ccla_block(nl, as.subspan(base, 4), bs.subspan(base, 4),
                                    c, "blk" + std::to_string(k));
        out.sum.insert(out.sum.end(), blk.sum.begin(), blk.sum.end());
        c = blk.cout;
      }
      out.cout = c;
      break;
    }
    case Architecture::bcla: {
      const int nb = w / 4;
      std::vector<BlockGpk> bg;
      bg.reserve(static_cast<std::size_t>(nb));
      for (int k = 0; k < nb; ++k) {
        const auto base = static_cast<std::size_t>(4 * k);
        bg.push_back(emit_block_gpk(nl, as.subspan(base, 4), bs.subspan(base, 4),
                                    "blk" + std::to_string(k)));
      }
      Rails c = cin;
      for (int k = 0; k < nb; ++k) {
        const auto idx = static_cast<std::size_t>(k);
        auto sums =
            detail::emit_block_sums(nl, bg[idx], c, "blk" + std::to_string(k));
        out.sum.insert(out.sum.end(), sums.begin(), sums.end());
        c = emit_bclg_carry(nl, bg[idx].block, c, "blk" + std::to_string(k));
      }
      out.cout = c;
      break;
    }
    case Architecture::bclarc: {
      out = detail::emit_bclarc_section(nl, as, bs, cin, "blk");
      break;
    }
    case Architecture::hybrid_bclarc_rca: {
      const auto lsb = static_cast<std::size_t>(spec.lsb_rca_width);
      Rails c = cin;
      if (lsb > 0) {
        detail::WordAdder low = detail::emit_early_rca(
            nl, as.subspan(0, lsb), bs.subspan(0, lsb), cin, "rca");
        out.sum = low.sum;
        c = low.cout;
      }
      detail::WordAdder high = detail::emit_bclarc_section(
          nl, as.subspan(lsb), bs.subspan(lsb), c, "blk");
      out.sum.insert(out.sum.end(), high.sum.begin(), high.sum.end());
      out.cout = high.cout;
      break;
    }
  }

  for (int i = 0; i < w; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    nl.rename_net(out.sum[idx].r1, "sum" + std::to_string(i) + ".1");
    nl.rename_net(out.sum[idx].r0, "sum" + std::to_string(i) + ".0");
    nl.mark_output_pair(out.sum[idx]);
  }
  nl.rename_net(out.cout.r1, "cout.1");
  nl.rename_net(out.cout.r0, "cout.0");
  nl.mark_output_pair(out.cout);

  if (spec.with_completion_detectors) {
    std::vector<Rails> ins = a;
    ins.insert(ins.end(), b.begin(), b.end());
    ins.push_back(cin);
    const NetId ack_in = emit_completion_detector(
        nl, std::span<const Rails>(ins.data(), ins.size()), "cdi");
    nl.mark_ack(ack_in, "ack_in");
    std::vector<Rails> outs = out.sum;
    outs.push_back(out.cout);
    const NetId ack_out = emit_completion_detector(
        nl, std::span<const Rails>(outs.data(), outs.size()), "cdo");
    nl.mark_ack(ack_out, "ack_out");
  }

  if (spec.protocol == Protocol::rto) return dualize(nl);
  return nl;
}

// Oracle for functional checks: plain integer addition.
inline std::uint64_t reference_sum(const InputVector& v, int width) {
  const std::uint64_t mask =
      width >= 64 ? ~0ull : ((1ull << width) - 1ull);
  const std::uint64_t out_mask = (mask << 1) | 1ull;
  return ((v.a & mask) + (v.b & mask) + static_cast<std::uint64_t>(v.cin)) &
         out_mask;
}

}  // namespace qdi

#endif  // QDI_ADDERS_HPP_
