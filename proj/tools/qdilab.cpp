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
// Command-line front end. Exit codes: 0 success, 1 usage or input errors,
// 2 safety or handshake violations found.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "qdi/adders.hpp"
#include "qdi/config.hpp"
#include "qdi/io.hpp"
#include "qdi/metrics.hpp"
#include "qdi/qdicheck.hpp"
#include "qdi/reference_data.hpp"
#include "qdi/sim.hpp"

namespace {

using namespace qdi;

std::string format_double(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
  return buf;
}

constexpr const char* kMetricsHeader =
    "legend,architecture,fl,rl,ct,area,power,pctp,protocol";

std::string metrics_csv(const std::vector<MetricsRow>& rows) {
  std::ostringstream out;
  out << kMetricsHeader << "\n";
  for (const MetricsRow& r : rows) {
    out << r.legend << "," << r.architecture << "," << format_double(r.fl, 4)
        << "," << format_double(r.rl, 4) << "," << format_double(r.ct, 4)
        << "," << format_double(r.area, 1) << "," << format_double(r.power, 4)
        << "," << format_double(r.pctp, 4) << "," << to_string(r.protocol)
        << "\n";
  }
  return out.str();
}

std::vector<MetricsRow> parse_metrics_csv(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<MetricsRow> rows;
  bool header = false;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (!header) {
      if (line != kMetricsHeader)
        throw std::invalid_argument("metrics header mismatch");
      header = true;
      continue;
    }
    std::vector<std::string> f;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) f.push_back(cell);
    if (f.size() != 9)
      throw std::invalid_argument("metrics row needs 9 fields: " + line);
    MetricsRow r;
    r.legend = f[0];
    r.architecture = f[1];
    r.fl = std::stod(f[2]);
    r.rl = std::stod(f[3]);
    r.ct = std::stod(f[4]);
    r.area = std::stod(f[5]);
    r.power = std::stod(f[6]);
    r.pctp = std::stod(f[7]);
    r.protocol = protocol_from_string(f[8]);
    rows.push_back(std::move(r));
  }
  if (!header) throw std::invalid_argument("metrics file has no header");
  return rows;
}

std::string resolve_out_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("QDILAB_OUT"); env && *env) return env;
  return ".";
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << content;
}

// --- shared vector plumbing -------------------------------------------------

struct VectorChoice {
  std::string file;
  std::size_t random = 0;
  std::uint64_t seed = 2026;
  std::vector<std::string> bits;  // raw per-pair assignments, one per cycle
};

void add_vector_flags(CLI::App* cmd, VectorChoice* v) {
  cmd->add_option("--vectors", v->file, "operand file: a_hex b_hex cin lines");
  cmd->add_option("--random", v->random, "number of seeded random operand sets");
  cmd->add_option("--seed", v->seed, "seed for --random (default 2026)");
  cmd->add_option("--bits", v->bits,
                  "raw per-pair bits for one cycle, e.g. 1,0 (repeatable)")
      ->delimiter(0);
}

std::vector<std::vector<int>> raw_cycles(const VectorChoice& v, int pairs) {
  std::vector<std::vector<int>> cycles;
  for (const std::string& line : v.bits) {
    std::vector<int> bits;
    std::istringstream cells(line);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      if (cell != "0" && cell != "1")
        throw std::invalid_argument("--bits entries must be 0 or 1: " + line);
      bits.push_back(cell == "1" ? 1 : 0);
    }
    if (static_cast<int>(bits.size()) != pairs)
      throw std::invalid_argument("--bits needs one bit per input pair (" +
                                  std::to_string(pairs) + "): " + line);
    cycles.push_back(std::move(bits));
  }
  return cycles;
}

int adder_width(const Netlist& nl) {
  const int pairs = nl.input_pair_count();
  if (pairs < 3 || pairs % 2 == 0)
    throw std::invalid_argument(
        "netlist is not operand shaped; drive it with --bits");
  return (pairs - 1) / 2;
}

std::vector<InputVector> word_cycles(const VectorChoice& v, int width) {
  if (!v.file.empty()) return read_vector_file(v.file);
  const std::size_t n = v.random ? v.random : 100;
  return random_vectors(width, n, v.seed);
}

// --- generate ---------------------------------------------------------------

struct GenerateOptions {
  std::string arch;
  int width = 32;
  std::string flavor = "early";
  std::string protocol = "rtz";
  std::string partition;
  int lsb = 4;
  bool no_cd = false;
  std::string out;
};

AdderSpec spec_from_options(const GenerateOptions& o) {
  AdderSpec s;
  s.architecture =
      architecture_from_string(o.arch == "rca" ? "rca-sbfa" : o.arch);
  s.width = o.width;
  s.protocol = protocol_from_string(o.protocol);
  s.fa_flavor = indication_from_string(o.flavor);
  s.lsb_rca_width = o.lsb;
  s.with_completion_detectors = !o.no_cd;
  if (!o.partition.empty()) {
    std::istringstream cells(o.partition);
    std::string cell;
    while (std::getline(cells, cell, ','))
      s.partition.push_back(std::stoi(cell));
  }
  s.validate();
  return s;
}

int cmd_generate(const GenerateOptions& o) {
  const Netlist nl = generate(spec_from_options(o));
  const std::string text = save_netlist(nl);
  if (o.out.empty()) {
    std::cout << text;
  } else {
    write_file(o.out, text);
    std::cerr << "wrote " << o.out << " (" << nl.gate_count() << " gates)\n";
  }
  return 0;
}

// --- simulate ---------------------------------------------------------------

struct SimulateOptions {
  std::string netlist;
  VectorChoice vectors;
  std::string delay = "unit";
  std::string trace_path;
  std::string vcd_path;
};

int cmd_simulate(const SimulateOptions& o) {
  const Netlist nl = read_netlist_file(o.netlist);
  const DelayModel dm = delay_from_string(o.delay);
  Simulator sim(nl, dm);
  const std::vector<std::int8_t> initial = sim.snapshot();

  std::vector<Transition> all;
  SequenceStats stats;
  int rc = 0;

  const auto report = [&](std::size_t cycle, const HandshakeTrace& tr,
                          const InputVector* v) {
    Json line;
    line["cycle"] = cycle;
    if (v) {
      line["a"] = v->a;
      line["b"] = v->b;
      line["cin"] = v->cin;
    }
    line["class"] = to_string(tr.out_class);
    if (tr.out_class == WordClass::data) line["value"] = tr.out_value;
    line["fl"] = tr.fl;
    line["rl"] = tr.rl;
    line["ct"] = tr.ct;
    line["restored"] = tr.restored;
    std::cout << line.dump() << "\n";
    all.insert(all.end(), tr.transitions.begin(), tr.transitions.end());
    stats.fl.push_back(tr.fl);
    stats.rl.push_back(tr.rl);
    stats.ct.push_back(tr.ct);
    stats.transitions += tr.total_transitions();
    stats.all_restored = stats.all_restored && tr.restored;
    ++stats.cycles;
  };

  try {
    if (!o.vectors.bits.empty()) {
      const auto cycles = raw_cycles(o.vectors, nl.input_pair_count());
      for (std::size_t i = 0; i < cycles.size(); ++i) {
        const HandshakeTrace tr = sim.run_cycle(std::span<const int>(
            cycles[i].data(), cycles[i].size()));
        report(i, tr, nullptr);
      }
    } else {
      const auto cycles = word_cycles(o.vectors, adder_width(nl));
      for (std::size_t i = 0; i < cycles.size(); ++i) {
        const HandshakeTrace tr = sim.run_cycle(cycles[i]);
        report(i, tr, &cycles[i]);
      }
    }
  } catch (const SimError& e) {
    std::cerr << "simulation error: " << e.what() << "\n";
    rc = 2;
  }

  Json summary;
  summary["cycles"] = stats.cycles;
  summary["fl_mean"] = SequenceStats::mean(stats.fl);
  summary["rl_mean"] = SequenceStats::mean(stats.rl);
  summary["ct_mean"] = SequenceStats::mean(stats.ct);
  summary["transitions"] = stats.transitions;
  summary["all_restored"] = stats.all_restored;
  std::cout << summary.dump() << "\n";

  if (!o.trace_path.empty()) {
    std::ofstream out(o.trace_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write " + o.trace_path);
    write_trace_jsonl(out, nl, all);
  }
  if (!o.vcd_path.empty()) {
    std::ofstream out(o.vcd_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write " + o.vcd_path);
    write_vcd(out, nl, all,
              std::span<const std::int8_t>(initial.data(), initial.size()));
  }
  return rc;
}

// --- verify -----------------------------------------------------------------

struct VerifyOptions {
  std::string netlist;
  VectorChoice vectors;
  std::string delay = "unit";
  bool strict = false;
};

int cmd_verify(const VerifyOptions& o) {
  const Netlist nl = read_netlist_file(o.netlist);
  const DelayModel dm = delay_from_string(o.delay);
  SimOptions opt;
  opt.throw_on_output_error = false;
  Simulator sim(nl, dm, opt);

  Json diagnostics = Json::array();
  std::size_t cycles = 0;

  const auto record = [&](std::size_t cycle, const CheckReport& rep) {
    for (const Violation& v : rep.violations) {
      Json d;
      d["cycle"] = cycle;
      d["kind"] = to_string(v.kind);
      if (v.net != kInvalidNet) d["net"] = nl.nets()[v.net].name;
      if (v.index != SIZE_MAX) d["index"] = v.index;
      if (v.time) d["time"] = *v.time;
      d["detail"] = v.detail;
      diagnostics.push_back(std::move(d));
    }
  };

  const auto check_cycle = [&](std::size_t i, const HandshakeTrace& tr) {
    record(i, check_monotonic(nl, tr.transitions));
    record(i, check_round_trip(nl, tr.transitions, RoundTripOptions{o.strict}));
    if (nl.output_pair_count() > 0 && tr.out_class != WordClass::data) {
      CheckReport functional;
      functional.violations.push_back(
          Violation{ViolationKind::illegal_code, kInvalidNet, SIZE_MAX,
                    std::nullopt,
                    std::string("output word settled as ") +
                        to_string(tr.out_class) + " instead of data"});
      record(i, functional);
    }
    ++cycles;
  };

  if (!o.vectors.bits.empty()) {
    const auto raw = raw_cycles(o.vectors, nl.input_pair_count());
    for (std::size_t i = 0; i < raw.size(); ++i)
      check_cycle(i, sim.run_cycle(std::span<const int>(raw[i].data(),
                                                        raw[i].size())));
  } else {
    const auto words = word_cycles(o.vectors, adder_width(nl));
    for (std::size_t i = 0; i < words.size(); ++i)
      check_cycle(i, sim.run_cycle(words[i]));
  }

  Json out;
  out["netlist"] = o.netlist;
  out["protocol"] = to_string(nl.protocol());
  out["cycles"] = cycles;
  out["strict"] = o.strict;
  out["violations"] = std::move(diagnostics);
  out["clean"] = out["violations"].empty();
  std::cout << out.dump(2) << "\n";
  return out["clean"].get<bool>() ? 0 : 2;
}

// --- bench ------------------------------------------------------------------

struct BenchOptions {
  std::string config_path;
  std::vector<std::string> protocols;
  std::string legends;
  std::size_t vectors = 0;
  std::optional<std::uint64_t> seed;
  std::string out_dir;
  std::string delay;
};

std::vector<std::string> mapped_legends(Protocol p) {
  std::vector<std::string> out;
  const char prefix = p == Protocol::rtz ? 'Z' : 'O';
  for (int i = 1; i <= 31; ++i) {
    const std::string legend = std::string(1, prefix) + std::to_string(i);
    if (has_legend_spec(legend)) out.push_back(legend);
  }
  return out;
}

int cmd_bench(const BenchOptions& o) {
  ExperimentConfig cfg;
  if (!o.config_path.empty()) cfg = load_config_file(o.config_path);
  if (!o.protocols.empty()) {
    cfg.protocols.clear();
    for (const std::string& p : o.protocols)
      cfg.protocols.push_back(protocol_from_string(p));
  }
  if (o.vectors) cfg.count = o.vectors;
  if (o.seed) cfg.seed = *o.seed;
  if (!o.delay.empty()) cfg.delay = delay_from_string(o.delay);
  if (!o.out_dir.empty()) cfg.out_dir = o.out_dir;
  const std::string out_dir = resolve_out_dir(cfg.out_dir);
  std::filesystem::create_directories(out_dir);

  std::vector<std::string> explicit_legends;
  if (!o.legends.empty()) {
    std::istringstream cells(o.legends);
    std::string cell;
    while (std::getline(cells, cell, ',')) explicit_legends.push_back(cell);
  }

  // Archive the effective configuration next to the results. The directory
  // itself identifies where the run went, so out_dir is not baked in and the
  // archive stays byte-identical across relocations of the same run.
  {
    ExperimentConfig archived = cfg;
    archived.out_dir.clear();
    write_file(out_dir + "/bench_config.txt", write_config(archived));
  }

  for (Protocol p : cfg.protocols) {
    // One job per published legend (default), per requested legend, or per
    // configured spec.
    std::vector<std::pair<std::string, AdderSpec>> jobs;
    if (!explicit_legends.empty()) {
      for (const std::string& legend : explicit_legends) {
        AdderSpec s = legend_spec(legend);
        if (s.protocol == p) jobs.emplace_back(legend, std::move(s));
      }
    } else if (!cfg.specs.empty()) {
      for (AdderSpec s : cfg.specs) {
        s.protocol = p;
        jobs.emplace_back("", std::move(s));
      }
    } else {
      for (const std::string& legend : mapped_legends(p))
        jobs.emplace_back(legend, legend_spec(legend));
    }
    if (jobs.empty()) continue;

    std::vector<MetricsRow> rows;
    for (const auto& [legend, spec] : jobs) {
      const Netlist nl = generate(spec);
      std::vector<InputVector> vecs;
      if (cfg.source == VectorSource::file) {
        vecs = read_vector_file(cfg.vector_file);
      } else {
        vecs = random_vectors(spec.width, cfg.count, cfg.seed);
      }
      MetricsRow row = measure(nl, vecs, cfg.delay);
      row.legend = legend;
      row.architecture = spec.label();
      rows.push_back(std::move(row));
    }

    const std::string suffix = to_string(p);
    const std::string csv = metrics_csv(rows);
    write_file(out_dir + "/metrics_" + suffix + ".csv", csv);

    for (const std::string& fmt : cfg.formats) {
      if (fmt != "json") continue;
      Json arr = Json::array();
      for (const MetricsRow& r : rows) {
        Json e;
        e["legend"] = r.legend;
        e["architecture"] = r.architecture;
        e["fl"] = r.fl;
        e["rl"] = r.rl;
        e["ct"] = r.ct;
        e["area"] = r.area;
        e["power"] = r.power;
        e["pctp"] = r.pctp;
        e["protocol"] = to_string(r.protocol);
        arr.push_back(std::move(e));
      }
      write_file(out_dir + "/metrics_" + suffix + ".json", arr.dump(2) + "\n");
    }

    std::vector<double> cts, pctps;
    for (const MetricsRow& r : rows) {
      cts.push_back(r.ct);
      pctps.push_back(r.pctp);
    }
    const std::vector<double> ct_norm = normalize(cts);
    const std::vector<double> pctp_norm = normalize(pctps);
    std::ostringstream series;
    series << "legend,architecture,ct_norm,pctp_norm\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
      series << rows[i].legend << "," << rows[i].architecture << ","
             << format_double(ct_norm[i], 6) << ","
             << format_double(pctp_norm[i], 6) << "\n";
    }
    write_file(out_dir + "/normalized_" + suffix + ".csv", series.str());

    std::cout << "protocol " << suffix << " (" << rows.size() << " rows, "
              << cfg.count << " vectors, seed " << cfg.seed << ")\n";
    std::cout << "  legend  architecture            fl        rl        ct"
                 "      area     power\n";
    for (const MetricsRow& r : rows) {
      std::cout << "  " << std::left << std::setw(7) << r.legend
                << std::setw(22) << r.architecture << std::right
                << std::setw(10) << format_double(r.fl, 4) << std::setw(10)
                << format_double(r.rl, 4) << std::setw(10)
                << format_double(r.ct, 4) << std::setw(10)
                << format_double(r.area, 1) << std::setw(10)
                << format_double(r.power, 1) << "\n";
    }
  }
  std::cerr << "results in " << out_dir << "\n";
  return 0;
}

// --- compare ----------------------------------------------------------------

struct CompareOptions {
  std::string pairs;
  std::string measured_path;
  std::string reference_path;
  std::size_t vectors = 1000;
  std::uint64_t seed = 2026;
  std::string delay = "unit";
};

int cmd_compare(const CompareOptions& o) {
  std::vector<std::pair<std::string, std::string>> pairs;
  {
    std::istringstream cells(o.pairs);
    std::string cell;
    while (std::getline(cells, cell, ',')) {
      const std::size_t colon = cell.find(':');
      if (colon == std::string::npos)
        throw std::invalid_argument("pairs are LEGEND:LEGEND, got " + cell);
      pairs.emplace_back(cell.substr(0, colon), cell.substr(colon + 1));
    }
  }
  if (pairs.empty()) throw std::invalid_argument("no pairs given");

  const ReferenceTable owned =
      o.reference_path.empty() ? ReferenceTable{} : load_reference_file(o.reference_path);
  const ReferenceTable& reference =
      o.reference_path.empty() ? bundled_reference_table() : owned;

  std::vector<MetricsRow> measured;
  if (!o.measured_path.empty()) {
    std::ifstream in(o.measured_path, std::ios::binary);
    if (!in)
      throw std::invalid_argument("cannot open measured rows: " +
                                  o.measured_path);
    std::ostringstream buf;
    buf << in.rdbuf();
    measured = parse_metrics_csv(buf.str());
  } else {
    std::set<std::string> legends;
    for (const auto& [a, b] : pairs) {
      legends.insert(a);
      legends.insert(b);
    }
    const DelayModel dm = delay_from_string(o.delay);
    for (const std::string& legend : legends) {
      const AdderSpec spec = legend_spec(legend);
      const Netlist nl = generate(spec);
      const std::vector<InputVector> vecs =
          random_vectors(spec.width, o.vectors, o.seed);
      MetricsRow row = measure(nl, vecs, dm);
      row.legend = legend;
      row.architecture = spec.label();
      measured.push_back(std::move(row));
    }
  }

  const OrdinalReport report = compare_ordinal(measured, reference, pairs);

  std::cout << "pair         metric  measured  reference  agree\n";
  for (const OrdinalEntry& e : report.entries) {
    const auto show = [](int sign) {
      return sign > 0 ? "lhs>rhs" : (sign < 0 ? "lhs<rhs" : "lhs=rhs");
    };
    std::cout << "  " << std::left << std::setw(4) << e.lhs << ":"
              << std::setw(6) << e.rhs << std::setw(8) << to_string(e.metric)
              << std::setw(10) << show(e.measured_sign) << std::setw(11)
              << show(e.reference_sign) << (e.agree ? "yes" : "NO") << "\n";
  }
  std::cout << std::right;
  std::cout << "agreement overall " << format_double(report.agreement(), 4)
            << ", ct " << format_double(report.agreement_for(Metric::ct), 4)
            << ", fl " << format_double(report.agreement_for(Metric::fl), 4)
            << ", rl " << format_double(report.agreement_for(Metric::rl), 4)
            << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "qdilab: generate, simulate, verify, and benchmark dual-rail "
      "handshake adders"};
  app.require_subcommand(1);

  GenerateOptions gen;
  CLI::App* g = app.add_subcommand("generate", "emit an adder netlist as JSON");
  g->add_option("--arch", gen.arch,
                "rca|rca-sbfa|rca-dbfa|hybrid-rca|csla|ccla|bcla|bclarc|"
                "hybrid-bclarc-rca")
      ->required();
  g->add_option("--width", gen.width, "operand width in bits (default 32)");
  g->add_option("--flavor", gen.flavor, "strong|weak|early (default early)");
  g->add_option("--protocol", gen.protocol, "rtz|rto (default rtz)");
  g->add_option("--partition", gen.partition, "selection block sizes, e.g. 8,8,8,8");
  g->add_option("--lsb", gen.lsb, "ripple section width for hybrid-bclarc-rca");
  g->add_flag("--no-cd", gen.no_cd, "omit completion detectors");
  g->add_option("-o,--out", gen.out, "output file (default stdout)");
  g->callback([&gen] {
    if (const int rc = cmd_generate(gen); rc != 0) throw CLI::RuntimeError(rc);
  });

  SimulateOptions sim;
  CLI::App* s = app.add_subcommand("simulate", "run handshake cycles and report timing");
  s->add_option("--netlist", sim.netlist, "netlist JSON file")->required();
  add_vector_flags(s, &sim.vectors);
  s->add_option("--delay", sim.delay, "unit or per-kind:KIND=ticks,...");
  s->add_option("--trace", sim.trace_path, "write transitions as JSON lines");
  s->add_option("--vcd", sim.vcd_path, "write a value-change dump");
  s->callback([&sim] {
    if (const int rc = cmd_simulate(sim); rc != 0) throw CLI::RuntimeError(rc);
  });

  VerifyOptions ver;
  CLI::App* v = app.add_subcommand("verify", "run safety checks over handshake cycles");
  v->add_option("--netlist", ver.netlist, "netlist JSON file")->required();
  add_vector_flags(v, &ver.vectors);
  v->add_option("--delay", ver.delay, "unit or per-kind:KIND=ticks,...");
  v->add_flag("--strict", ver.strict,
              "require per-transition same-phase acknowledgment");
  v->callback([&ver] {
    if (const int rc = cmd_verify(ver); rc != 0) throw CLI::RuntimeError(rc);
  });

  BenchOptions ben;
  CLI::App* b = app.add_subcommand("bench", "measure configured adders and emit tables");
  b->add_option("--config", ben.config_path, "experiment config file");
  b->add_option("--protocol", ben.protocols, "rtz and/or rto (repeatable)");
  b->add_option("--legends", ben.legends, "comma list, e.g. Z8,Z28 (default: all mapped)");
  b->add_option("--vectors", ben.vectors, "random vectors per adder");
  b->add_option("--seed", ben.seed, "random vector seed");
  b->add_option("--out", ben.out_dir, "output directory (default $QDILAB_OUT or .)");
  b->add_option("--delay", ben.delay, "unit or per-kind:KIND=ticks,...");
  b->callback([&ben] {
    if (const int rc = cmd_bench(ben); rc != 0) throw CLI::RuntimeError(rc);
  });

  CompareOptions cmp;
  CLI::App* c = app.add_subcommand(
      "compare", "check measured rankings against the published table");
  c->add_option("--pairs", cmp.pairs, "legend pairs, e.g. Z22:Z23,Z27:Z28")
      ->required();
  c->add_option("--measured", cmp.measured_path, "bench metrics CSV (default: measure now)");
  c->add_option("--reference", cmp.reference_path, "reference table CSV (default: bundled)");
  c->add_option("--vectors", cmp.vectors, "random vectors when measuring (default 1000)");
  c->add_option("--seed", cmp.seed, "seed when measuring (default 2026)");
  c->add_option("--delay", cmp.delay, "unit or per-kind:KIND=ticks,...");
  c->callback([&cmp] {
    if (const int rc = cmd_compare(cmp); rc != 0) throw CLI::RuntimeError(rc);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::RuntimeError& e) {
    return e.get_exit_code();
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
