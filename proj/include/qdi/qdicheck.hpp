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
// Safety analyses for dual-rail handshake circuits: monotonic switching,
// orphan transitions, disjointness of product covers, unordered output
// codes, end-of-cycle state restoration, and an operational classifier for
// how much of its input arrival a circuit indicates on its outputs.

#ifndef QDI_QDICHECK_HPP_
#define QDI_QDICHECK_HPP_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "qdi/encoding.hpp"
#include "qdi/logiclib.hpp"
#include "qdi/netlist.hpp"
#include "qdi/sim.hpp"

namespace qdi {

enum class ViolationKind : std::uint8_t {
  monotonicity,
  orphan,
  dsop_overlap,
  illegal_code,
  non_restoring,
};

inline const char* to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::monotonicity: return "MONOTONICITY";
    case ViolationKind::orphan: return "ORPHAN";
    case ViolationKind::dsop_overlap: return "DSOP_OVERLAP";
    case ViolationKind::illegal_code: return "ILLEGAL_CODE";
    case ViolationKind::non_restoring: return "NON_RESTORING";
  }
  return "?";
}

struct Violation {
  ViolationKind kind = ViolationKind::monotonicity;
  NetId net = kInvalidNet;                 // offending net, when net-scoped
  std::size_t index = SIZE_MAX;            // cube or codeword index otherwise
  std::optional<std::int64_t> time;
  std::string detail;
};

struct CheckReport {
  std::vector<Violation> violations;

  bool clean() const { return violations.empty(); }
  int count(ViolationKind k) const {
    int n = 0;
    for (const Violation& v : violations) n += (v.kind == k) ? 1 : 0;
    return n;
  }
};

// --- monotonic switching ----------------------------------------------------

// A net may transition at most once per phase, and only toward the phase's
// level: data application raises nets under RTZ and lowers them under RTO,
// the spacer phase undoes it. The trace must cover a single handshake cycle.
inline CheckReport check_monotonic(const Netlist& nl,
                                   std::span<const Transition> trace) {
  CheckReport rep;
  const int data_level = nl.protocol() == Protocol::rtz ? 1 : 0;
  std::map<std::pair<NetId, Phase>, int> seen;
  for (const Transition& t : trace) {
    const int want = t.phase == Phase::data ? data_level : 1 - data_level;
    if (t.value != want) {
      rep.violations.push_back(Violation{
          ViolationKind::monotonicity, t.net, SIZE_MAX, t.time,
          "net " + nl.nets()[t.net].name + " moved to " +
              std::to_string(int(t.value)) + " during the " +
              to_string(t.phase) + " phase"});
    }
    const int n = ++seen[{t.net, t.phase}];
    if (n == 2) {
      rep.violations.push_back(Violation{
          ViolationKind::monotonicity, t.net, SIZE_MAX, t.time,
          "net " + nl.nets()[t.net].name + " switched more than once in the " +
              to_string(t.phase) + " phase"});
    }
  }
  return rep;
}

// --- cycle round trip -------------------------------------------------------

struct RoundTripOptions {
  // Default acknowledgment is cycle-granular: a transition is covered when
  // its fanout cone contains an output rail or detector output that moved at
  // some point in the cycle. The strict mode instead demands a direct-fanout
  // gate transition strictly later in the same phase, which also flags
  // transitions that are only absorbed during the opposite phase.
  bool strict = false;
};

inline CheckReport check_round_trip(const Netlist& nl,
                                    std::span<const Transition> trace,
                                    RoundTripOptions opt = {}) {
  CheckReport rep;

  std::vector<int> flips(nl.net_count(), 0);
  std::vector<std::int64_t> first_time(nl.net_count(), -1);
  std::vector<std::int64_t> last_time(nl.net_count(), -1);
  for (const Transition& t : trace) {
    ++flips[t.net];
    if (first_time[t.net] < 0) first_time[t.net] = t.time;
    last_time[t.net] = t.time;
  }

  for (const Net& n : nl.nets()) {
    if (flips[n.id] % 2 != 0) {
      rep.violations.push_back(Violation{
          ViolationKind::non_restoring, n.id, SIZE_MAX, last_time[n.id],
          "net " + n.name + " did not return to its rest value"});
    }
  }

  std::vector<std::uint8_t> observable(nl.net_count(), 0);
  for (NetId r : nl.output_rails()) observable[r] = 1;
  for (const auto& [role, net] : nl.acks()) observable[net] = 1;

  // A net is covered when it reaches an observable that moved this cycle.
  // Gates are stored producers-first, so one reverse sweep propagates
  // coverage from observables back through their input cones.
  std::vector<std::uint8_t> covered(nl.net_count(), 0);
  for (const Net& n : nl.nets())
    if (observable[n.id] && flips[n.id] > 0) covered[n.id] = 1;
  const auto& gates = nl.gates();
  for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
    if (!covered[it->output]) continue;
    for (NetId in : it->input_span()) covered[in] = 1;
  }
  for (const Net& n : nl.nets()) {
    if (flips[n.id] > 0 && !covered[n.id]) {
      rep.violations.push_back(Violation{
          ViolationKind::orphan, n.id, SIZE_MAX, first_time[n.id],
          "activity on net " + n.name +
              " never reaches a switching output or detector"});
    }
  }

  if (opt.strict) {
    std::map<NetId, std::vector<std::pair<std::int64_t, Phase>>> by_net;
    for (const Transition& t : trace) by_net[t.net].push_back({t.time, t.phase});
    for (const Transition& t : trace) {
      if (observable[t.net]) continue;
      bool acked = false;
      for (const Fanout& f : nl.nets()[t.net].fanout) {
        const NetId out = nl.gates()[f.gate].output;
        const auto it = by_net.find(out);
        if (it == by_net.end()) continue;
        for (const auto& [time, phase] : it->second) {
          if (phase == t.phase && time > t.time) {
            acked = true;
            break;
          }
        }
        if (acked) break;
      }
      if (!acked) {
        rep.violations.push_back(Violation{
            ViolationKind::orphan, t.net, SIZE_MAX, t.time,
            "transition on net " + nl.nets()[t.net].name + " at t=" +
                std::to_string(t.time) + " has no same-phase acknowledgment"});
      }
    }
  }
  return rep;
}

// --- product cover disjointness ----------------------------------------------

// Products over the rails of declared dual-rail variables. A literal names
// one rail of one variable: literal = 2 * variable + rail, with rail 1 for
// the rail that carries a one and rail 0 for its partner.
struct CubeList {
  std::vector<std::string> variables;
  std::vector<std::vector<int>> cubes;
};

inline int make_literal(int variable, int rail) { return 2 * variable + rail; }

namespace detail {

inline bool cube_consistent(const std::vector<int>& lits) {
  for (std::size_t i = 0; i < lits.size(); ++i)
    for (std::size_t j = i + 1; j < lits.size(); ++j)
      if (lits[i] / 2 == lits[j] / 2 && lits[i] != lits[j]) return false;
  return true;
}

inline std::string cube_to_string(const CubeList& cl,
                                  const std::vector<int>& lits) {
  if (lits.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < lits.size(); ++i) {
    if (i > 0) s += "*";
    s += cl.variables[static_cast<std::size_t>(lits[i] / 2)];
    s += lits[i] % 2 ? ".1" : ".0";
  }
  return s;
}

}  // namespace detail

// Flags every pair of cubes whose conjunction is satisfiable. Two cubes can
// be active together exactly when their union names no variable on both
// rails.
inline CheckReport check_dsop(const CubeList& cl) {
  CheckReport rep;
  for (std::size_t i = 0; i < cl.cubes.size(); ++i) {
    for (std::size_t j = i + 1; j < cl.cubes.size(); ++j) {
      std::vector<int> both = cl.cubes[i];
      both.insert(both.end(), cl.cubes[j].begin(), cl.cubes[j].end());
      if (detail::cube_consistent(both)) {
        rep.violations.push_back(Violation{
            ViolationKind::dsop_overlap, kInvalidNet, i, std::nullopt,
            "cubes " + detail::cube_to_string(cl, cl.cubes[i]) + " and " +
                detail::cube_to_string(cl, cl.cubes[j]) + " overlap"});
      }
    }
  }
  return rep;
}

class CoverTooLarge : public std::runtime_error {
 public:
  explicit CoverTooLarge(const std::string& what) : std::runtime_error(what) {}
};

// Flattens the function of one net into a cover over the netlist's input
// pairs. AND gates and C-elements multiply covers, OR gates union them; the
// roles swap under RTO where the active level is low. Inverters have no
// monotone cover and are rejected. Covers beyond max_cubes raise
// CoverTooLarge; the cap keeps extraction usable on leaf fragments without
// ever silently truncating.
inline CubeList extract_cover(const Netlist& nl, NetId net,
                              std::size_t max_cubes = 4096) {
  CubeList cl;
  std::map<NetId, int> rail_literal;
  for (int p = 0; p < nl.input_pair_count(); ++p) {
    const Rails r = nl.input_pair(p);
    const std::string& n1 = nl.nets()[r.r1].name;
    cl.variables.push_back(n1.size() > 2 && n1.substr(n1.size() - 2) == ".1"
                               ? n1.substr(0, n1.size() - 2)
                               : n1);
    rail_literal[r.r1] = make_literal(p, 1);
    rail_literal[r.r0] = make_literal(p, 0);
  }

  using Cover = std::vector<std::vector<int>>;
  const bool active_high = nl.protocol() == Protocol::rtz;
  std::map<NetId, Cover> memo;

  const std::function<const Cover&(NetId)> cover = [&](NetId n) -> const Cover& {
    const auto hit = memo.find(n);
    if (hit != memo.end()) return hit->second;
    Cover c;
    const Net& info = nl.nets()[n];
    switch (info.driver.kind) {
      case DriverKind::primary_input:
        c.push_back({rail_literal.at(n)});
        break;
      case DriverKind::constant:
        if ((info.driver.value == 1) == active_high) c.push_back({});
        break;
      case DriverKind::none:
        throw std::invalid_argument("cover of undriven net " + info.name);
      case DriverKind::gate: {
        const Gate& g = nl.gates()[info.driver.gate];
        if (g.kind == GateKind::NOT)
          throw std::invalid_argument(
              "inverters have no monotone cover (net " + info.name + ")");
        const bool product =
            is_c_element(g.kind) || (active_high ? is_and(g.kind) : is_or(g.kind));
        if (product) {
          c.push_back({});
          for (NetId in : g.input_span()) {
            const Cover& rhs = cover(in);
            Cover next;
            for (const auto& x : c) {
              for (const auto& y : rhs) {
                std::vector<int> lits = x;
                lits.insert(lits.end(), y.begin(), y.end());
                std::sort(lits.begin(), lits.end());
                lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
                if (!detail::cube_consistent(lits)) continue;
                next.push_back(std::move(lits));
                if (next.size() > max_cubes)
                  throw CoverTooLarge("cover of " + nl.nets()[net].name +
                                      " exceeds " + std::to_string(max_cubes) +
                                      " cubes");
              }
            }
            c = std::move(next);
          }
        } else {
          std::set<std::vector<int>> seen;
          for (NetId in : g.input_span()) {
            for (const auto& y : cover(in)) {
              if (seen.insert(y).second) c.push_back(y);
              if (c.size() > max_cubes)
                throw CoverTooLarge("cover of " + nl.nets()[net].name +
                                    " exceeds " + std::to_string(max_cubes) +
                                    " cubes");
            }
          }
        }
        break;
      }
    }
    return memo.emplace(n, std::move(c)).first->second;
  };

  cl.cubes = cover(net);
  std::sort(cl.cubes.begin(), cl.cubes.end());
  return cl;
}

// --- unordered code ---------------------------------------------------------

// A delay-insensitive code must be unordered: no codeword's active-rail set
// may contain another's, or the smaller word would be indistinguishable from
// an in-flight larger one.
inline CheckReport check_code(std::span<const DualRailWord> codewords) {
  CheckReport rep;
  if (codewords.empty()) return rep;
  const std::size_t width = codewords.front().pairs.size();
  const Protocol protocol = codewords.front().protocol;
  for (const DualRailWord& w : codewords) {
    if (w.pairs.size() != width)
      throw std::invalid_argument("codewords must share one width");
    if (w.protocol != protocol)
      throw std::invalid_argument("codewords must share one protocol");
  }
  const std::uint8_t active = protocol == Protocol::rtz ? 1 : 0;

  std::vector<std::vector<int>> sets(codewords.size());
  for (std::size_t i = 0; i < codewords.size(); ++i) {
    for (std::size_t p = 0; p < width; ++p) {
      if (codewords[i].pairs[p].rail0 == active)
        sets[i].push_back(static_cast<int>(2 * p));
      if (codewords[i].pairs[p].rail1 == active)
        sets[i].push_back(static_cast<int>(2 * p + 1));
    }
  }
  for (std::size_t i = 0; i < codewords.size(); ++i) {
    for (std::size_t j = 0; j < codewords.size(); ++j) {
      if (i == j) continue;
      if (std::includes(sets[j].begin(), sets[j].end(), sets[i].begin(),
                        sets[i].end())) {
        rep.violations.push_back(Violation{
            ViolationKind::illegal_code, kInvalidNet, j, std::nullopt,
            "codeword " + std::to_string(j) + " dominates codeword " +
                std::to_string(i)});
      }
    }
  }
  return rep;
}

// --- indication classification ----------------------------------------------

// How much of its input arrival a circuit indicates on its outputs, probed
// by staggered experiments: hold back part of the input word (or withdraw
// only part of it) and watch how far the output word gets.
//   strong: no partial input set or reset ever moves an output pair.
//   early:  some partial set completes, or some partial reset clears, the
//           whole output word.
//   weak:   anything in between.
// After each experiment the remaining inputs are applied (or withdrawn) so
// the circuit passes through a complete, clean handshake.
inline Indication classify_indication(const Netlist& nl,
                                      DelayModel dm = DelayModel::unit()) {
  const int pairs = nl.input_pair_count();
  const int outs = nl.output_pair_count();
  if (pairs < 2) throw std::invalid_argument("need at least two input pairs");
  if (outs < 1) throw std::invalid_argument("need at least one output pair");

  SimOptions opt;
  opt.record_transitions = false;
  opt.throw_on_output_error = false;
  Simulator sim(nl, dm, opt);

  const auto pair_class = [&](int i) {
    const Rails r = nl.output_pair(i);
    return classify_pair(RailPair{static_cast<std::uint8_t>(sim.value(r.r1)),
                                  static_cast<std::uint8_t>(sim.value(r.r0))},
                         nl.protocol());
  };
  const auto count_outputs = [&](PairClass cls) {
    int n = 0;
    for (int i = 0; i < outs; ++i) n += (pair_class(i) == cls) ? 1 : 0;
    return n;
  };

  std::vector<std::uint64_t> words;
  std::vector<std::uint64_t> subsets;
  if (pairs <= 6) {
    for (std::uint64_t w = 0; w < (1ull << pairs); ++w) words.push_back(w);
    for (std::uint64_t s = 1; s + 1 < (1ull << pairs); ++s) subsets.push_back(s);
  } else {
    std::mt19937_64 rng(0x51ab0dd5u);
    const std::uint64_t wmask =
        pairs >= 64 ? ~0ull : ((1ull << pairs) - 1ull);
    for (int i = 0; i < 48; ++i) words.push_back(rng() & wmask);
    while (subsets.size() < 24) {
      const std::uint64_t s = rng() & wmask;
      if (s != 0 && s != wmask) subsets.push_back(s);
    }
  }

  bool any_effect = false;
  bool full_effect = false;

  for (const std::uint64_t word : words) {
    for (const std::uint64_t subset : subsets) {
      // Partial set: only the subset carries data.
      for (int i = 0; i < pairs; ++i) {
        if (subset & (1ull << i))
          sim.set_pair(static_cast<std::size_t>(i),
                       static_cast<int>((word >> i) & 1));
      }
      sim.settle(Phase::data);
      const int data_now = count_outputs(PairClass::data1) +
                           count_outputs(PairClass::data0);
      if (data_now > 0) any_effect = true;
      if (data_now == outs) full_effect = true;

      // Complete the word, then a full spacer, for a clean handshake.
      for (int i = 0; i < pairs; ++i)
        sim.set_pair(static_cast<std::size_t>(i),
                     static_cast<int>((word >> i) & 1));
      sim.settle(Phase::data);
      for (int i = 0; i < pairs; ++i)
        sim.set_pair(static_cast<std::size_t>(i), std::nullopt);
      sim.settle(Phase::spacer);
      if (!sim.at_rest())
        throw std::runtime_error("circuit does not restore between experiments");

      // Partial reset: withdraw only the subset from a full data word.
      for (int i = 0; i < pairs; ++i)
        sim.set_pair(static_cast<std::size_t>(i),
                     static_cast<int>((word >> i) & 1));
      sim.settle(Phase::data);
      for (int i = 0; i < pairs; ++i) {
        if (subset & (1ull << i))
          sim.set_pair(static_cast<std::size_t>(i), std::nullopt);
      }
      sim.settle(Phase::spacer);
      const int spacer_now = count_outputs(PairClass::spacer);
      if (spacer_now > 0) any_effect = true;
      if (spacer_now == outs) full_effect = true;

      for (int i = 0; i < pairs; ++i)
        sim.set_pair(static_cast<std::size_t>(i), std::nullopt);
      sim.settle(Phase::spacer);
      if (!sim.at_rest())
        throw std::runtime_error("circuit does not restore between experiments");
    }
  }

  if (full_effect) return Indication::early;
  if (!any_effect) return Indication::strong;
  return Indication::weak;
}

}  // namespace qdi

#endif  // QDI_QDICHECK_HPP_
