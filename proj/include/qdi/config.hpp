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
// Experiment descriptions for the benchmark front end, stored in a
// line-oriented key = value format. Repeated keys build lists, '#' starts a
// comment, and writing a parsed config reproduces it byte for byte, so runs
// can be archived and replayed. Random runs always carry their seed.

#ifndef QDI_CONFIG_HPP_
#define QDI_CONFIG_HPP_

#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qdi/adders.hpp"
#include "qdi/encoding.hpp"
#include "qdi/logiclib.hpp"
#include "qdi/netlist.hpp"
#include "qdi/sim.hpp"

namespace qdi {

enum class VectorSource : std::uint8_t { random, file };

inline const char* to_string(VectorSource s) {
  return s == VectorSource::random ? "random" : "file";
}

inline VectorSource vector_source_from_string(std::string_view s) {
  if (s == "random") return VectorSource::random;
  if (s == "file") return VectorSource::file;
  throw std::invalid_argument("unknown vector source: " + std::string(s));
}

struct ExperimentConfig {
  std::vector<AdderSpec> specs;
  std::vector<Protocol> protocols = {Protocol::rtz, Protocol::rto};
  VectorSource source = VectorSource::random;
  std::uint64_t seed = 2026;
  std::size_t count = 1000;
  std::string vector_file;
  std::string out_dir;
  std::vector<std::string> formats = {"csv"};
  DelayModel delay = DelayModel::unit();

  friend bool operator==(const ExperimentConfig&,
                         const ExperimentConfig&) = default;
};

namespace detail {

inline std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t')) --e;
  return std::string(s.substr(b, e - b));
}

inline std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace detail

// One adder configuration on one line, e.g.
//   arch=bclarc width=32 flavor=early cd=1
// The protocol is not part of a spec line; the config's protocol list says
// which handshakes every spec runs under.
inline std::string spec_to_kv(const AdderSpec& s) {
  std::ostringstream out;
  out << "arch=" << to_string(s.architecture) << " width=" << s.width
      << " flavor=" << to_string(s.fa_flavor);
  if (s.architecture == Architecture::csla && !s.partition.empty()) {
    out << " partition=";
    for (std::size_t i = 0; i < s.partition.size(); ++i)
      out << (i ? "," : "") << s.partition[i];
  }
  if (s.architecture == Architecture::hybrid_bclarc_rca)
    out << " lsb=" << s.lsb_rca_width;
  out << " cd=" << (s.with_completion_detectors ? 1 : 0);
  return out.str();
}

inline AdderSpec spec_from_kv(std::string_view text) {
  AdderSpec s;
  bool have_arch = false;
  for (const std::string& token : detail::split(text, ' ')) {
    if (token.empty()) continue;
    const std::size_t eq = token.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("spec token needs key=value: " + token);
    const std::string key = token.substr(0, eq);
    const std::string value = token.substr(eq + 1);
    if (key == "arch") {
      s.architecture = architecture_from_string(value);
      have_arch = true;
    } else if (key == "width") {
      s.width = std::stoi(value);
    } else if (key == "flavor") {
      s.fa_flavor = indication_from_string(value);
    } else if (key == "partition") {
      s.partition.clear();
      for (const std::string& part : detail::split(value, ','))
        s.partition.push_back(std::stoi(part));
    } else if (key == "lsb") {
      s.lsb_rca_width = std::stoi(value);
    } else if (key == "cd") {
      s.with_completion_detectors = value != "0";
    } else {
      throw std::invalid_argument("unknown spec key: " + key);
    }
  }
  if (!have_arch) throw std::invalid_argument("spec line needs arch=");
  s.validate();
  return s;
}

inline std::string delay_to_string(const DelayModel& m) {
  if (m == DelayModel::unit()) return "unit";
  std::ostringstream out;
  out << "per-kind:";
  for (int i = 0; i < kNumGateKinds; ++i) {
    const auto k = static_cast<GateKind>(i);
    out << (i ? "," : "") << to_string(k) << "="
        << m.ticks[static_cast<std::size_t>(i)];
  }
  return out.str();
}

inline DelayModel delay_from_string(std::string_view text) {
  if (text == "unit") return DelayModel::unit();
  constexpr std::string_view kPrefix = "per-kind:";
  if (text.substr(0, kPrefix.size()) != kPrefix)
    throw std::invalid_argument("delay must be unit or per-kind:...: " +
                                std::string(text));
  std::array<int, kNumGateKinds> ticks{};
  ticks.fill(1);
  for (const std::string& token :
       detail::split(text.substr(kPrefix.size()), ',')) {
    const std::size_t eq = token.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("delay token needs KIND=ticks: " + token);
    const GateKind k = gate_kind_from_string(token.substr(0, eq));
    ticks[static_cast<std::size_t>(k)] = std::stoi(token.substr(eq + 1));
  }
  return DelayModel::per_kind(ticks);
}

inline ExperimentConfig parse_config(std::string_view text) {
  ExperimentConfig cfg;
  cfg.specs.clear();
  cfg.protocols.clear();
  cfg.formats.clear();

  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    const std::string line = detail::trim(raw);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  " needs key = value");
    const std::string key = detail::trim(line.substr(0, eq));
    const std::string value = detail::trim(line.substr(eq + 1));
    try {
      if (key == "spec") {
        cfg.specs.push_back(spec_from_kv(value));
      } else if (key == "protocol") {
        cfg.protocols.push_back(protocol_from_string(value));
      } else if (key == "source") {
        cfg.source = vector_source_from_string(value);
      } else if (key == "seed") {
        cfg.seed = std::stoull(value);
      } else if (key == "count") {
        cfg.count = std::stoull(value);
      } else if (key == "vector_file") {
        cfg.vector_file = value;
      } else if (key == "out_dir") {
        cfg.out_dir = value;
      } else if (key == "format") {
        cfg.formats.push_back(value);
      } else if (key == "delay") {
        cfg.delay = delay_from_string(value);
      } else {
        throw std::invalid_argument("unknown config key: " + key);
      }
    } catch (const std::exception& e) {
      throw std::invalid_argument("config line " + std::to_string(lineno) +
                                  ": " + e.what());
    }
  }
  if (cfg.protocols.empty())
    cfg.protocols = {Protocol::rtz, Protocol::rto};
  if (cfg.formats.empty()) cfg.formats = {"csv"};
  if (cfg.source == VectorSource::file && cfg.vector_file.empty())
    throw std::invalid_argument("source = file needs a vector_file");
  return cfg;
}

inline std::string write_config(const ExperimentConfig& cfg) {
  std::ostringstream out;
  for (Protocol p : cfg.protocols) out << "protocol = " << to_string(p) << "\n";
  out << "source = " << to_string(cfg.source) << "\n";
  out << "seed = " << cfg.seed << "\n";
  out << "count = " << cfg.count << "\n";
  if (!cfg.vector_file.empty()) out << "vector_file = " << cfg.vector_file << "\n";
  if (!cfg.out_dir.empty()) out << "out_dir = " << cfg.out_dir << "\n";
  for (const std::string& f : cfg.formats) out << "format = " << f << "\n";
  out << "delay = " << delay_to_string(cfg.delay) << "\n";
  for (const AdderSpec& s : cfg.specs) out << "spec = " << spec_to_kv(s) << "\n";
  return out.str();
}

inline ExperimentConfig load_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open config: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

}  // namespace qdi

#endif  // QDI_CONFIG_HPP_
