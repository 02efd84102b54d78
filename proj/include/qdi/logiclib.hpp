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
// Gate-level building blocks for dual-rail circuits. Emitters append gates
// to a netlist under construction and are written for RTZ polarity; the RTO
// versions of the standalone builders are obtained with dualize().

#ifndef QDI_LOGICLIB_HPP_
#define QDI_LOGICLIB_HPP_

#include <cassert>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qdi/encoding.hpp"
#include "qdi/netlist.hpp"

namespace qdi {

// Muller C-element: output follows the inputs when they agree, holds
// otherwise.
inline int c_element_eval(int prev, std::span<const int> inputs) {
  bool all0 = true, all1 = true;
  for (int v : inputs) {
    all0 = all0 && v == 0;
    all1 = all1 && v != 0;
  }
  if (all1) return 1;
  if (all0) return 0;
  return prev;
}

// Indication discipline of a circuit: how much of the input alphabet an
// output transition vouches for.
enum class Indication : std::uint8_t { strong, weak, early };

inline const char* to_string(Indication c) {
  switch (c) {
    case Indication::strong: return "strong";
    case Indication::weak: return "weak";
    case Indication::early: return "early";
  }
  return "?";
}

inline Indication indication_from_string(std::string_view s) {
  if (s == "strong") return Indication::strong;
  if (s == "weak") return Indication::weak;
  if (s == "early") return Indication::early;
  throw std::invalid_argument("unknown indication flavor: " + std::string(s));
}

namespace detail {

inline GateKind and_kind(int n) {
  switch (n) {
    case 2: return GateKind::AND2;
    case 3: return GateKind::AND3;
    case 4: return GateKind::AND4;
  }
  throw std::invalid_argument("no AND gate of arity " + std::to_string(n));
}

inline GateKind or_kind(int n) {
  switch (n) {
    case 2: return GateKind::OR2;
    case 3: return GateKind::OR3;
    case 4: return GateKind::OR4;
  }
  throw std::invalid_argument("no OR gate of arity " + std::to_string(n));
}

inline GateKind c_kind(int n) {
  switch (n) {
    case 2: return GateKind::C2;
    case 3: return GateKind::C3;
  }
  throw std::invalid_argument("no C-element of arity " + std::to_string(n));
}

// Builds a tree with every leaf at the same depth, which keeps the set and
// reset schedules of a product identical when all live leaves move together.
// max_arity is 4 for AND/OR trees and 3 for C-element trees.
template <typename KindFn>
NetId emit_balanced_tree(Netlist& nl, std::span<const NetId> leaves, int max_arity,
                         KindFn kind_of, const std::string& name, int* counter) {
  const int n = static_cast<int>(leaves.size());
  assert(n >= 1);
  if (n == 1) return leaves[0];
  if (n <= max_arity) {
    return nl.add_gate(kind_of(n), leaves, name).second;
  }
  // Smallest depth d with max_arity^d >= n, then split into children that
  // each need depth exactly d-1.
  std::int64_t cap = max_arity;
  int depth = 1;
  while (cap < n) {
    cap *= max_arity;
    ++depth;
  }
  const std::int64_t child_cap = cap / max_arity;
  int parts = static_cast<int>((n + child_cap - 1) / child_cap);
  if (parts < 2) parts = 2;
  std::vector<NetId> children;
  children.reserve(static_cast<std::size_t>(parts));
  int offset = 0;
  for (int i = 0; i < parts; ++i) {
    // Even split: distribute the remainder across the first children.
    const int take = n / parts + ((i < n % parts) ? 1 : 0);
    std::string child_name = name + "_t" + std::to_string((*counter)++);
    children.push_back(emit_balanced_tree(nl, leaves.subspan(offset, take),
                                          max_arity, kind_of, child_name, counter));
    offset += take;
  }
  return nl.add_gate(kind_of(parts),
                     std::span<const NetId>(children.data(), children.size()), name)
      .second;
}

}  // namespace detail

inline NetId emit_and_tree(Netlist& nl, std::span<const NetId> nets,
                           const std::string& name) {
  int counter = 0;
  return detail::emit_balanced_tree(nl, nets, 4, detail::and_kind, name, &counter);
}

inline NetId emit_or_tree(Netlist& nl, std::span<const NetId> nets,
                          const std::string& name) {
  int counter = 0;
  return detail::emit_balanced_tree(nl, nets, 4, detail::or_kind, name, &counter);
}

inline NetId emit_c_tree(Netlist& nl, std::span<const NetId> nets,
                         const std::string& name) {
  int counter = 0;
  return detail::emit_balanced_tree(nl, nets, 3, detail::c_kind, name, &counter);
}

// Disjoint sum of products: one balanced AND tree per product, OR-ed
// together. Single-literal products pass through unchanged.
inline NetId emit_cover(Netlist& nl, const std::vector<std::vector<NetId>>& products,
                        const std::string& name) {
  if (products.empty()) throw std::invalid_argument("empty cover");
  std::vector<NetId> terms;
  terms.reserve(products.size());
  int i = 0;
  for (const auto& lits : products) {
    if (lits.empty()) throw std::invalid_argument("empty product");
    terms.push_back(emit_and_tree(
        nl, std::span<const NetId>(lits.data(), lits.size()),
        products.size() == 1 ? name : name + "_p" + std::to_string(i)));
    ++i;
  }
  return emit_or_tree(nl, std::span<const NetId>(terms.data(), terms.size()), name);
}

// Completion detector. Per pair, an OR2 raises when the pair leaves the RTZ
// spacer; a C-element tree then waits for every pair. The RTO dual uses AND2
// per pair and the same tree.
inline NetId emit_completion_detector(Netlist& nl, std::span<const Rails> pairs,
                                      const std::string& prefix) {
  if (nl.protocol() != Protocol::rtz)
    throw std::logic_error("emitters build RTZ forms; dualize for RTO");
  if (pairs.empty()) throw std::invalid_argument("completion detector needs pairs");
  std::vector<NetId> done;
  done.reserve(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i)
    done.push_back(nl.add_gate(GateKind::OR2, {pairs[i].r1, pairs[i].r0},
                               prefix + "/d" + std::to_string(i))
                       .second);
  return emit_c_tree(nl, std::span<const NetId>(done.data(), done.size()),
                     prefix + "/ack");
}

struct FaOuts {
  Rails sum;
  Rails cout;
};

namespace detail {

struct EarlyPe {
  NetId p = kInvalidNet;  // operand bits differ
  NetId e = kInvalidNet;  // operand bits equal
};

inline EarlyPe emit_early_pe(Netlist& nl, Rails a, Rails b, const std::string& pfx) {
  EarlyPe pe;
  const NetId t0 = nl.add_gate(GateKind::AND2, {a.r1, b.r0}, pfx + "/p_a1b0").second;
  const NetId t1 = nl.add_gate(GateKind::AND2, {a.r0, b.r1}, pfx + "/p_a0b1").second;
  pe.p = nl.add_gate(GateKind::OR2, {t0, t1}, pfx + "/p").second;
  const NetId t2 = nl.add_gate(GateKind::AND2, {a.r1, b.r1}, pfx + "/e_a1b1").second;
  const NetId t3 = nl.add_gate(GateKind::AND2, {a.r0, b.r0}, pfx + "/e_a0b0").second;
  pe.e = nl.add_gate(GateKind::OR2, {t2, t3}, pfx + "/e").second;
  return pe;
}

inline Rails emit_early_sum(Netlist& nl, const EarlyPe& pe, Rails cin,
                            const std::string& pfx) {
  Rails sum;
  const NetId s1a = nl.add_gate(GateKind::AND2, {pe.p, cin.r0}, pfx + "/s1p").second;
  const NetId s1b = nl.add_gate(GateKind::AND2, {pe.e, cin.r1}, pfx + "/s1e").second;
  sum.r1 = nl.add_gate(GateKind::OR2, {s1a, s1b}, pfx + "/sum.1").second;
  const NetId s0a = nl.add_gate(GateKind::AND2, {pe.p, cin.r1}, pfx + "/s0p").second;
  const NetId s0b = nl.add_gate(GateKind::AND2, {pe.e, cin.r0}, pfx + "/s0e").second;
  sum.r0 = nl.add_gate(GateKind::OR2, {s0a, s0b}, pfx + "/sum.0").second;
  return sum;
}

// Early carry from existing generate/kill/propagate nets.
inline Rails emit_early_cout_gpk(Netlist& nl, NetId g, NetId k, NetId p,
                                 Rails cin, const std::string& pfx) {
  Rails cout;
  const NetId cp1 = nl.add_gate(GateKind::AND2, {p, cin.r1}, pfx + "/cp1").second;
  cout.r1 = nl.add_gate(GateKind::OR2, {g, cp1}, pfx + "/cout.1").second;
  const NetId cp0 = nl.add_gate(GateKind::AND2, {p, cin.r0}, pfx + "/cp0").second;
  cout.r0 = nl.add_gate(GateKind::OR2, {k, cp0}, pfx + "/cout.0").second;
  return cout;
}

inline Rails emit_early_cout(Netlist& nl, Rails a, Rails b, NetId p, Rails cin,
                             const std::string& pfx) {
  const NetId g = nl.add_gate(GateKind::AND2, {a.r1, b.r1}, pfx + "/cg").second;
  const NetId k = nl.add_gate(GateKind::AND2, {a.r0, b.r0}, pfx + "/ck").second;
  return emit_early_cout_gpk(nl, g, k, p, cin, pfx);
}

// The eight DIMS minterms over (a, b, cin) as C3 gates; the caller picks the
// OR groupings.
inline std::array<NetId, 8> emit_dims_minterms(Netlist& nl, Rails a, Rails b,
                                               Rails cin, const std::string& pfx) {
  std::array<NetId, 8> m{};
  for (int i = 0; i < 8; ++i) {
    const NetId ra = (i & 4) ? a.r1 : a.r0;
    const NetId rb = (i & 2) ? b.r1 : b.r0;
    const NetId rc = (i & 1) ? cin.r1 : cin.r0;
    m[static_cast<std::size_t>(i)] =
        nl.add_gate(GateKind::C3, {ra, rb, rc},
                    pfx + "/m" + std::to_string((i >> 2) & 1) +
                        std::to_string((i >> 1) & 1) + std::to_string(i & 1))
            .second;
  }
  return m;
}

inline Rails emit_dims_sum(Netlist& nl, const std::array<NetId, 8>& m,
                           const std::string& pfx) {
  Rails sum;
  sum.r1 = nl.add_gate(GateKind::OR4, {m[1], m[2], m[4], m[7]}, pfx + "/sum.1").second;
  sum.r0 = nl.add_gate(GateKind::OR4, {m[0], m[3], m[5], m[6]}, pfx + "/sum.0").second;
  return sum;
}

}  // namespace detail

// Strong indication: full DIMS decomposition; every output waits for every
// input in both phases.
inline FaOuts emit_strong_full_adder(Netlist& nl, Rails a, Rails b, Rails cin,
                                     const std::string& pfx) {
  const auto m = detail::emit_dims_minterms(nl, a, b, cin, pfx);
  FaOuts out;
  out.sum = detail::emit_dims_sum(nl, m, pfx);
  out.cout.r1 =
      nl.add_gate(GateKind::OR4, {m[3], m[5], m[6], m[7]}, pfx + "/cout.1").second;
  out.cout.r0 =
      nl.add_gate(GateKind::OR4, {m[0], m[1], m[2], m[4]}, pfx + "/cout.0").second;
  return out;
}

// Weak indication: DIMS sum plus the classic majority carry built from
// two-input C-elements. The carry cover is deliberately not disjoint.
inline FaOuts emit_weak_full_adder(Netlist& nl, Rails a, Rails b, Rails cin,
                                   const std::string& pfx) {
  const auto m = detail::emit_dims_minterms(nl, a, b, cin, pfx);
  FaOuts out;
  out.sum = detail::emit_dims_sum(nl, m, pfx);
  const NetId c1a = nl.add_gate(GateKind::C2, {a.r1, b.r1}, pfx + "/cab1").second;
  const NetId c1b = nl.add_gate(GateKind::C2, {b.r1, cin.r1}, pfx + "/cbc1").second;
  const NetId c1c = nl.add_gate(GateKind::C2, {a.r1, cin.r1}, pfx + "/cac1").second;
  out.cout.r1 = nl.add_gate(GateKind::OR3, {c1a, c1b, c1c}, pfx + "/cout.1").second;
  const NetId c0a = nl.add_gate(GateKind::C2, {a.r0, b.r0}, pfx + "/cab0").second;
  const NetId c0b = nl.add_gate(GateKind::C2, {b.r0, cin.r0}, pfx + "/cbc0").second;
  const NetId c0c = nl.add_gate(GateKind::C2, {a.r0, cin.r0}, pfx + "/cac0").second;
  out.cout.r0 = nl.add_gate(GateKind::OR3, {c0a, c0b, c0c}, pfx + "/cout.0").second;
  return out;
}

// Early output: pure AND/OR logic over disjoint covers. A spacer on the
// operands kills every first-level AND regardless of the carry, so reset is
// constant-time.
inline FaOuts emit_early_full_adder(Netlist& nl, Rails a, Rails b, Rails cin,
                                    const std::string& pfx) {
  const auto pe = detail::emit_early_pe(nl, a, b, pfx);
  FaOuts out;
  out.sum = detail::emit_early_sum(nl, pe, cin, pfx);
  out.cout = detail::emit_early_cout(nl, a, b, pe.p, cin, pfx);
  return out;
}

inline FaOuts emit_full_adder(Netlist& nl, Indication flavor, Rails a, Rails b,
                              Rails cin, const std::string& pfx) {
  if (nl.protocol() != Protocol::rtz)
    throw std::logic_error("emitters build RTZ forms; dualize for RTO");
  switch (flavor) {
    case Indication::strong: return emit_strong_full_adder(nl, a, b, cin, pfx);
    case Indication::weak: return emit_weak_full_adder(nl, a, b, cin, pfx);
    case Indication::early: return emit_early_full_adder(nl, a, b, cin, pfx);
  }
  throw std::invalid_argument("bad flavor");
}

struct DbfaOuts {
  Rails sum0;  // lower sum bit
  Rails sum1;  // upper sum bit
  Rails cout;
};

// Two-bit early-output block: sums ripple through an internal carry, the
// block carry-out comes from two-bit generate/kill/propagate covers and is
// independent of the sum ripple depth.
inline DbfaOuts emit_dbfa(Netlist& nl, Rails a0, Rails a1, Rails b0, Rails b1,
                          Rails cin, const std::string& pfx) {
  if (nl.protocol() != Protocol::rtz)
    throw std::logic_error("emitters build RTZ forms; dualize for RTO");
  DbfaOuts out;
  const auto pe0 = detail::emit_early_pe(nl, a0, b0, pfx + "/l");
  out.sum0 = detail::emit_early_sum(nl, pe0, cin, pfx + "/l");
  const Rails c1 = detail::emit_early_cout(nl, a0, b0, pe0.p, cin, pfx + "/l");
  const auto pe1 = detail::emit_early_pe(nl, a1, b1, pfx + "/h");
  out.sum1 = detail::emit_early_sum(nl, pe1, c1, pfx + "/h");

  const NetId g0 = nl.add_gate(GateKind::AND2, {a0.r1, b0.r1}, pfx + "/g0").second;
  const NetId g1 = nl.add_gate(GateKind::AND2, {a1.r1, b1.r1}, pfx + "/g1").second;
  const NetId k0 = nl.add_gate(GateKind::AND2, {a0.r0, b0.r0}, pfx + "/k0").second;
  const NetId k1 = nl.add_gate(GateKind::AND2, {a1.r0, b1.r0}, pfx + "/k1").second;
  const NetId pg = nl.add_gate(GateKind::AND2, {pe1.p, g0}, pfx + "/p1g0").second;
  const NetId pk = nl.add_gate(GateKind::AND2, {pe1.p, k0}, pfx + "/p1k0").second;
  const NetId g2 = nl.add_gate(GateKind::OR2, {g1, pg}, pfx + "/G2").second;
  const NetId k2 = nl.add_gate(GateKind::OR2, {k1, pk}, pfx + "/K2").second;
  const NetId p2 = nl.add_gate(GateKind::AND2, {pe1.p, pe0.p}, pfx + "/P2").second;
  const NetId cg = nl.add_gate(GateKind::AND2, {p2, cin.r1}, pfx + "/P2c1").second;
  const NetId ck = nl.add_gate(GateKind::AND2, {p2, cin.r0}, pfx + "/P2c0").second;
  out.cout.r1 = nl.add_gate(GateKind::OR2, {g2, cg}, pfx + "/cout.1").second;
  out.cout.r0 = nl.add_gate(GateKind::OR2, {k2, ck}, pfx + "/cout.0").second;
  return out;
}

// Two-way select. C-elements pair the select rail with the chosen operand so
// the output indicates both; the two products are disjoint.
inline Rails emit_mux2(Netlist& nl, Rails x, Rails y, Rails sel,
                       const std::string& pfx) {
  if (nl.protocol() != Protocol::rtz)
    throw std::logic_error("emitters build RTZ forms; dualize for RTO");
  Rails z;
  const NetId z1x = nl.add_gate(GateKind::C2, {sel.r0, x.r1}, pfx + "/z1x").second;
  const NetId z1y = nl.add_gate(GateKind::C2, {sel.r1, y.r1}, pfx + "/z1y").second;
  z.r1 = nl.add_gate(GateKind::OR2, {z1x, z1y}, pfx + "/z.1").second;
  const NetId z0x = nl.add_gate(GateKind::C2, {sel.r0, x.r0}, pfx + "/z0x").second;
  const NetId z0y = nl.add_gate(GateKind::C2, {sel.r1, y.r0}, pfx + "/z0y").second;
  z.r0 = nl.add_gate(GateKind::OR2, {z0x, z0y}, pfx + "/z.0").second;
  return z;
}

// One-of-three block carry code: exactly one of generate/propagate/kill is
// active once the block operands are data.
struct Gpk {
  NetId g = kInvalidNet;
  NetId p = kInvalidNet;
  NetId k = kInvalidNet;
};

struct BlockGpk {
  Gpk block;
  std::array<NetId, 4> g{}, k{}, p{};  // per-bit signals, LSB first
};

// Four-bit block generate/kill/propagate as layered disjoint covers over the
// per-bit g/k/p signals.
inline BlockGpk emit_block_gpk(Netlist& nl, std::span<const Rails> a,
                               std::span<const Rails> b, const std::string& pfx) {
  if (a.size() != 4 || b.size() != 4)
    throw std::invalid_argument("block gpk covers four bit positions");
  BlockGpk out;
  auto& g = out.g;
  auto& k = out.k;
  auto& p = out.p;
  for (int i = 0; i < 4; ++i) {
    const auto& ai = a[static_cast<std::size_t>(i)];
    const auto& bi = b[static_cast<std::size_t>(i)];
    const std::string bit = pfx + "/b" + std::to_string(i);
    g[static_cast<std::size_t>(i)] =
        nl.add_gate(GateKind::AND2, {ai.r1, bi.r1}, bit + "/g").second;
    k[static_cast<std::size_t>(i)] =
        nl.add_gate(GateKind::AND2, {ai.r0, bi.r0}, bit + "/k").second;
    const NetId pa = nl.add_gate(GateKind::AND2, {ai.r1, bi.r0}, bit + "/pa").second;
    const NetId pb = nl.add_gate(GateKind::AND2, {ai.r0, bi.r1}, bit + "/pb").second;
    p[static_cast<std::size_t>(i)] =
        nl.add_gate(GateKind::OR2, {pa, pb}, bit + "/p").second;
  }
  const NetId t2 = nl.add_gate(GateKind::AND2, {p[3], g[2]}, pfx + "/Gp3g2").second;
  const NetId t1 = nl.add_gate(GateKind::AND3, {p[3], p[2], g[1]}, pfx + "/Gp32g1").second;
  const NetId t0 =
      nl.add_gate(GateKind::AND4, {p[3], p[2], p[1], g[0]}, pfx + "/Gp321g0").second;
  out.block.g = nl.add_gate(GateKind::OR4, {g[3], t2, t1, t0}, pfx + "/G").second;
  const NetId u2 = nl.add_gate(GateKind::AND2, {p[3], k[2]}, pfx + "/Kp3k2").second;
  const NetId u1 = nl.add_gate(GateKind::AND3, {p[3], p[2], k[1]}, pfx + "/Kp32k1").second;
  const NetId u0 =
      nl.add_gate(GateKind::AND4, {p[3], p[2], p[1], k[0]}, pfx + "/Kp321k0").second;
  out.block.k = nl.add_gate(GateKind::OR4, {k[3], u2, u1, u0}, pfx + "/K").second;
  out.block.p = nl.add_gate(GateKind::AND4, {p[3], p[2], p[1], p[0]}, pfx + "/P").second;
  return out;
}

// Non-redundant block carry: the C-element on (P, cin) makes the incoming
// carry explicitly indicated, so block resets ripple one block per step.
inline Rails emit_bclg_carry(Netlist& nl, const Gpk& blk, Rails cin,
                             const std::string& pfx) {
  Rails cout;
  const NetId pc1 = nl.add_gate(GateKind::C2, {blk.p, cin.r1}, pfx + "/Pc1").second;
  cout.r1 = nl.add_gate(GateKind::OR2, {blk.g, pc1}, pfx + "/cout.1").second;
  const NetId pc0 = nl.add_gate(GateKind::C2, {blk.p, cin.r0}, pfx + "/Pc0").second;
  cout.r0 = nl.add_gate(GateKind::OR2, {blk.k, pc0}, pfx + "/cout.0").second;
  return cout;
}

// Redundant (flattened) block carry: inlines the previous block's recurrence
// so the residual C-element reaches two blocks back. Reset hops two blocks
// per step, halving the worst chain.
inline Rails emit_bclarc_carry(Netlist& nl, const Gpk& hi, const Gpk& lo,
                               Rails cin_two_back, const std::string& pfx) {
  Rails cout;
  const NetId pp = nl.add_gate(GateKind::AND2, {hi.p, lo.p}, pfx + "/PP").second;
  const NetId pg = nl.add_gate(GateKind::AND2, {hi.p, lo.g}, pfx + "/PG").second;
  const NetId pk = nl.add_gate(GateKind::AND2, {hi.p, lo.k}, pfx + "/PK").second;
  const NetId c1 =
      nl.add_gate(GateKind::C2, {pp, cin_two_back.r1}, pfx + "/PPc1").second;
  cout.r1 = nl.add_gate(GateKind::OR3, {hi.g, pg, c1}, pfx + "/cout.1").second;
  const NetId c0 =
      nl.add_gate(GateKind::C2, {pp, cin_two_back.r0}, pfx + "/PPc0").second;
  cout.r0 = nl.add_gate(GateKind::OR3, {hi.k, pk, c0}, pfx + "/cout.0").second;
  return cout;
}

// --- standalone fragments -------------------------------------------------

namespace detail {

inline Netlist finish_protocol(Netlist&& nl, Protocol p) {
  if (p == Protocol::rto) return dualize(nl);
  return std::move(nl);
}

}  // namespace detail

inline Netlist build_full_adder(Indication flavor, Protocol p) {
  Netlist nl(Protocol::rtz);
  const Rails a = nl.add_input_pair("a");
  const Rails b = nl.add_input_pair("b");
  const Rails cin = nl.add_input_pair("cin");
  FaOuts fa = emit_full_adder(nl, flavor, a, b, cin, "fa");
  nl.rename_net(fa.sum.r1, "sum.1");
  nl.rename_net(fa.sum.r0, "sum.0");
  nl.rename_net(fa.cout.r1, "cout.1");
  nl.rename_net(fa.cout.r0, "cout.0");
  nl.mark_output_pair(fa.sum);
  nl.mark_output_pair(fa.cout);
  return detail::finish_protocol(std::move(nl), p);
}

inline Netlist build_dbfa(Protocol p) {
  Netlist nl(Protocol::rtz);
  const Rails a0 = nl.add_input_pair("a0");
  const Rails a1 = nl.add_input_pair("a1");
  const Rails b0 = nl.add_input_pair("b0");
  const Rails b1 = nl.add_input_pair("b1");
  const Rails cin = nl.add_input_pair("cin");
  DbfaOuts d = emit_dbfa(nl, a0, a1, b0, b1, cin, "dbfa");
  nl.rename_net(d.sum0.r1, "sum0.1");
  nl.rename_net(d.sum0.r0, "sum0.0");
  nl.rename_net(d.sum1.r1, "sum1.1");
  nl.rename_net(d.sum1.r0, "sum1.0");
  nl.rename_net(d.cout.r1, "cout.1");
  nl.rename_net(d.cout.r0, "cout.0");
  nl.mark_output_pair(d.sum0);
  nl.mark_output_pair(d.sum1);
  nl.mark_output_pair(d.cout);
  return detail::finish_protocol(std::move(nl), p);
}

inline Netlist build_mux2(Protocol p) {
  Netlist nl(Protocol::rtz);
  const Rails x = nl.add_input_pair("x");
  const Rails y = nl.add_input_pair("y");
  const Rails sel = nl.add_input_pair("sel");
  Rails z = emit_mux2(nl, x, y, sel, "mux");
  nl.rename_net(z.r1, "z.1");
  nl.rename_net(z.r0, "z.0");
  nl.mark_output_pair(z);
  return detail::finish_protocol(std::move(nl), p);
}

inline Netlist build_completion_detector(int pairs, Protocol p) {
  if (pairs < 1) throw std::invalid_argument("completion detector needs pairs");
  Netlist nl(Protocol::rtz);
  std::vector<Rails> in;
  in.reserve(static_cast<std::size_t>(pairs));
  for (int i = 0; i < pairs; ++i)
    in.push_back(nl.add_input_pair("x" + std::to_string(i)));
  const NetId ack = emit_completion_detector(
      nl, std::span<const Rails>(in.data(), in.size()), "cd");
  nl.mark_ack(ack, "ack");
  return detail::finish_protocol(std::move(nl), p);
}

// Non-redundant form: one four-bit block, carry-out from (G, P, K, cin).
// Redundant form: an eight-bit two-block slice whose carry-out inlines the
// low block's recurrence, leaving a single C-element on the slice carry-in.
inline Netlist build_bclg(int block_width, Protocol p, bool redundant) {
  if (block_width != 4)
    throw std::invalid_argument("unsupported block width " +
                                std::to_string(block_width));
  Netlist nl(Protocol::rtz);
  const int bits = redundant ? 8 : 4;
  std::vector<Rails> a, b;
  for (int i = 0; i < bits; ++i) a.push_back(nl.add_input_pair("a" + std::to_string(i)));
  for (int i = 0; i < bits; ++i) b.push_back(nl.add_input_pair("b" + std::to_string(i)));
  const Rails cin = nl.add_input_pair("cin");
  Rails cout;
  if (!redundant) {
    const BlockGpk blk = emit_block_gpk(nl, std::span<const Rails>(a.data(), 4),
                                        std::span<const Rails>(b.data(), 4), "blk");
    cout = emit_bclg_carry(nl, blk.block, cin, "blk");
  } else {
    const BlockGpk lo = emit_block_gpk(nl, std::span<const Rails>(a.data(), 4),
                                       std::span<const Rails>(b.data(), 4), "lo");
    const BlockGpk hi = emit_block_gpk(nl, std::span<const Rails>(a.data() + 4, 4),
                                       std::span<const Rails>(b.data() + 4, 4), "hi");
    cout = emit_bclarc_carry(nl, hi.block, lo.block, cin, "slice");
  }
  nl.rename_net(cout.r1, "cout.1");
  nl.rename_net(cout.r0, "cout.0");
  nl.mark_output_pair(cout);
  return detail::finish_protocol(std::move(nl), p);
}

}  // namespace qdi

#endif  // QDI_LOGICLIB_HPP_
