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
// Comparison quantities for adder benchmarks: latency means, a weighted
// gate-count area proxy, a switching-activity power proxy, their product
// PCTP, normalization for plotting, and ordinal comparison against the
// bundled reference table. The proxies rank circuits; they do not predict
// absolute nanoseconds, square micrometers, or microwatts.

#ifndef QDI_METRICS_HPP_
#define QDI_METRICS_HPP_

#include <algorithm>
#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qdi/netlist.hpp"
#include "qdi/reference_data.hpp"
#include "qdi/sim.hpp"

namespace qdi {

// Relative gate sizes, indexed by GateKind. The defaults follow typical
// standard-cell footprints: an n-input simple gate costs n units doubled,
// state-holding elements cost more than their fan-in suggests.
struct AreaWeights {
  std::array<double, kNumGateKinds> weight{};

  static AreaWeights defaults() {
    AreaWeights w;
    w.set(GateKind::NOT, 1);
    w.set(GateKind::AND2, 2);
    w.set(GateKind::AND3, 3);
    w.set(GateKind::AND4, 4);
    w.set(GateKind::OR2, 2);
    w.set(GateKind::OR3, 3);
    w.set(GateKind::OR4, 4);
    w.set(GateKind::C2, 4);
    w.set(GateKind::C3, 6);
    return w;
  }

  void set(GateKind k, double v) {
    if (v <= 0) throw std::invalid_argument("area weight must be positive");
    weight[static_cast<std::size_t>(k)] = v;
  }
  double of(GateKind k) const { return weight[static_cast<std::size_t>(k)]; }
};

inline double area_proxy(const Netlist& nl,
                         const AreaWeights& w = AreaWeights::defaults()) {
  if (!nl.validate().clean())
    throw std::invalid_argument("area proxy needs a structurally clean netlist");
  double area = 0;
  for (const Gate& g : nl.gates()) area += w.of(g.kind);
  return area;
}

// Mean switching activity: total transitions per handshake cycle, averaged
// over the supplied traces. Primary input edges count; constants never move.
inline double power_proxy(std::span<const HandshakeTrace> traces) {
  if (traces.empty())
    throw std::invalid_argument("power proxy needs at least one trace");
  double sum = 0;
  for (const HandshakeTrace& t : traces)
    sum += static_cast<double>(t.total_transitions());
  return sum / static_cast<double>(traces.size());
}

inline double pctp(double power, double ct) { return power * ct; }

// Scales a series so its maximum is exactly 1.0, preserving order.
inline std::vector<double> normalize(std::span<const double> values) {
  if (values.empty())
    throw std::invalid_argument("cannot normalize an empty series");
  for (double v : values)
    if (v <= 0) throw std::invalid_argument("normalize needs positive values");
  const double top = *std::max_element(values.begin(), values.end());
  std::vector<double> out;
  out.reserve(values.size());
  for (double v : values) out.push_back(v == top ? 1.0 : v / top);
  return out;
}

// One benchmarked configuration. Latencies are means over the measured
// vector set and exclude the completion detector stage; the cycle time is
// their sum by construction, mirroring how per-trace cycle times decompose.
struct MetricsRow {
  std::string legend;
  std::string architecture;
  Protocol protocol = Protocol::rtz;
  double fl = 0;
  double rl = 0;
  double ct = 0;
  double area = 0;
  double power = 0;
  double pctp = 0;
};

inline MetricsRow measure(const Netlist& nl,
                          std::span<const InputVector> vectors,
                          DelayModel dm = DelayModel::unit(),
                          const AreaWeights& w = AreaWeights::defaults()) {
  if (vectors.empty())
    throw std::invalid_argument("measurement needs at least one vector");
  Simulator sim(nl, dm);
  const SequenceStats stats = run_sequence(sim, vectors);

  MetricsRow row;
  row.protocol = nl.protocol();
  row.fl = SequenceStats::mean(stats.fl);
  row.rl = SequenceStats::mean(stats.rl);
  row.ct = row.fl + row.rl;
  row.area = area_proxy(nl, w);
  row.power = static_cast<double>(stats.transitions) /
              static_cast<double>(stats.cycles);
  row.pctp = pctp(row.power, row.ct);
  return row;
}

// --- ordinal comparison -------------------------------------------------

enum class Metric : std::uint8_t { fl, rl, ct, area, power, pctp };

inline constexpr std::array<Metric, 6> kAllMetrics = {
    Metric::fl, Metric::rl, Metric::ct, Metric::area, Metric::power,
    Metric::pctp};

inline const char* to_string(Metric m) {
  switch (m) {
    case Metric::fl: return "fl";
    case Metric::rl: return "rl";
    case Metric::ct: return "ct";
    case Metric::area: return "area";
    case Metric::power: return "power";
    case Metric::pctp: return "pctp";
  }
  return "?";
}

inline double metric_of(const MetricsRow& r, Metric m) {
  switch (m) {
    case Metric::fl: return r.fl;
    case Metric::rl: return r.rl;
    case Metric::ct: return r.ct;
    case Metric::area: return r.area;
    case Metric::power: return r.power;
    case Metric::pctp: return r.pctp;
  }
  return 0;
}

inline double metric_of(const ReferenceRow& r, Metric m) {
  switch (m) {
    case Metric::fl: return r.fl;
    case Metric::rl: return r.rl;
    case Metric::ct: return r.ct;
    case Metric::area: return r.area;
    case Metric::power: return r.power;
    case Metric::pctp: return r.pctp();
  }
  return 0;
}

struct OrdinalEntry {
  std::string lhs;
  std::string rhs;
  Metric metric = Metric::ct;
  int measured_sign = 0;   // sign of measured(lhs) - measured(rhs)
  int reference_sign = 0;  // sign of reference(lhs) - reference(rhs)
  bool agree = false;
};

struct OrdinalReport {
  std::vector<OrdinalEntry> entries;

  double agreement() const {
    if (entries.empty()) return 1.0;
    std::size_t ok = 0;
    for (const OrdinalEntry& e : entries) ok += e.agree ? 1 : 0;
    return static_cast<double>(ok) / static_cast<double>(entries.size());
  }

  double agreement_for(Metric m) const {
    std::size_t total = 0, ok = 0;
    for (const OrdinalEntry& e : entries) {
      if (e.metric != m) continue;
      ++total;
      ok += e.agree ? 1 : 0;
    }
    return total == 0 ? 1.0
                      : static_cast<double>(ok) / static_cast<double>(total);
  }
};

namespace detail {
inline int sign_of(double d) { return d > 0 ? 1 : (d < 0 ? -1 : 0); }
}  // namespace detail

// For every legend pair and metric, asks whether the measured ranking
// reproduces the published one. Measured rows are matched to reference rows
// by legend.
inline OrdinalReport compare_ordinal(
    std::span<const MetricsRow> measured, const ReferenceTable& reference,
    std::span<const std::pair<std::string, std::string>> pairs,
    std::span<const Metric> metrics = kAllMetrics) {
  const auto measured_row = [&](const std::string& legend) -> const MetricsRow& {
    for (const MetricsRow& r : measured)
      if (r.legend == legend) return r;
    throw UnknownLegend(legend);
  };

  OrdinalReport report;
  for (const auto& [lhs, rhs] : pairs) {
    const MetricsRow& mx = measured_row(lhs);
    const MetricsRow& my = measured_row(rhs);
    const ReferenceRow& rx = reference.row(lhs);
    const ReferenceRow& ry = reference.row(rhs);
    for (Metric m : metrics) {
      OrdinalEntry e;
      e.lhs = lhs;
      e.rhs = rhs;
      e.metric = m;
      e.measured_sign = detail::sign_of(metric_of(mx, m) - metric_of(my, m));
      e.reference_sign = detail::sign_of(metric_of(rx, m) - metric_of(ry, m));
      e.agree = e.measured_sign == e.reference_sign;
      report.entries.push_back(std::move(e));
    }
  }
  return report;
}

}  // namespace qdi

#endif  // QDI_METRICS_HPP_
