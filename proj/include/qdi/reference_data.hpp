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
// Published 32-bit design metrics that the benchmark results are compared
// against, bundled as a CSV asset with an embedded copy so the library works
// without data files. Legends Z1..Z31 cover RTZ designs, O1..O31 the RTO
// duals. The ref column cites the design source in the originating survey's
// numbering and is carried as opaque text.

#ifndef QDI_REFERENCE_DATA_HPP_
#define QDI_REFERENCE_DATA_HPP_

#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qdi/adders.hpp"
#include "qdi/encoding.hpp"

namespace qdi {

class UnknownLegend : public std::invalid_argument {
 public:
  explicit UnknownLegend(const std::string& legend)
      : std::invalid_argument("unknown adder legend: " + legend) {}
};

struct ReferenceRow {
  std::string legend;
  std::string architecture;
  std::string ref;
  double fl = 0;
  double rl = 0;
  double ct = 0;
  double area = 0;
  double power = 0;
  Protocol protocol = Protocol::rtz;

  double pctp() const { return power * ct; }
};

inline constexpr std::string_view kReferenceCsv =
    "# reference-metrics-v1\n"
    "legend,architecture,ref,fl_ns,rl_ns,ct_ns,area_um2,power_uw,protocol\n"
    "Z1,RCA-SBFA,[44],14.61,14.61,29.22,2529.00,2190,rtz\n"
    "Z2,RCA-SBFA,[45],9.26,9.26,18.52,2504.60,2181,rtz\n"
    "Z3,RCA-SBFA,[26],9.04,9.04,18.08,2293.14,2172,rtz\n"
    "Z4,RCA-SBFA,[45],8.24,8.24,16.48,2423.27,2177,rtz\n"
    "Z5,RCA-SBFA,[46],7.00,7.00,14.00,2016.63,2171,rtz\n"
    "Z6,RCA-SBFA,[47],4.43,0.58,5.01,2097.96,2174,rtz\n"
    "Z7,RCA-SBFA,[48],3.32,0.73,4.05,2049.16,2171,rtz\n"
    "Z8,RCA-SBFA,[21],3.10,0.61,3.71,1658.80,2161,rtz\n"
    "Z9,RCA-DBFA,[49],2.23,0.78,3.01,2488.33,2173,rtz\n"
    "Z10,Hybrid RCA,[50],2.16,0.78,2.94,2436.48,2173,rtz\n"
    "Z11,RCA-DBFA,[51],2.19,0.93,3.12,2000.36,2183,rtz\n"
    "Z12,Hybrid RCA,[51],2.19,0.93,3.12,1979.01,2182,rtz\n"
    "Z13,Uniform CSLA,,2.46,1.89,4.35,3000.17,2293,rtz\n"
    "Z14,Non-uniform CSLA,[52],3.23,3.23,6.46,3384.44,2312,rtz\n"
    "Z15,BCLA,,3.31,2.93,6.24,2951.88,2191,rtz\n"
    "Z16,BCLARC,[53],2.46,1.69,4.15,2987.46,2192,rtz\n"
    "Z17,BCLA,,3.14,2.88,6.02,2915.29,2188,rtz\n"
    "Z18,BCLARC,[53],2.32,1.68,4.00,2950.87,2189,rtz\n"
    "Z19,CCLA,[54],2.75,2.75,5.50,2569.65,2177,rtz\n"
    "Z20,BCLA,,3.13,2.88,6.01,2524.92,2178,rtz\n"
    "Z21,BCLARC,[55],2.31,1.67,3.98,2560.50,2179,rtz\n"
    "Z22,BCLA,,2.76,2.50,5.26,2209.78,2174,rtz\n"
    "Z23,BCLARC,,2.01,1.38,3.39,2245.36,2176,rtz\n"
    "Z24,Hybrid BCLARC-RCA1,[36],1.93,1.38,3.31,2171.41,2174,rtz\n"
    "Z25,Hybrid BCLARC-RCA1,,1.97,1.38,3.35,2097.45,2172,rtz\n"
    "Z26,Hybrid BCLARC-RCA1,,2.23,1.38,3.61,2023.49,2170,rtz\n"
    "Z27,BCLA,,3.46,3.20,6.66,2307.37,2187,rtz\n"
    "Z28,BCLARC,,1.76,1.11,2.87,2342.95,2188,rtz\n"
    "Z29,Hybrid BCLARC-RCA1,[39],1.86,1.11,2.97,2256.80,2184,rtz\n"
    "Z30,Hybrid BCLARC-RCA2,,2.11,1.11,3.22,2170.64,2181,rtz\n"
    "Z31,Hybrid BCLARC-RCA3,,2.36,1.11,3.47,2084.49,2178,rtz\n"
    "O1,RCA-SBFA,[44],14.15,14.15,28.30,2529.00,2185,rto\n"
    "O2,RCA-SBFA,[45],8.74,8.74,17.48,2374.48,2167,rto\n"
    "O3,RCA-SBFA,[26],8.88,8.88,17.76,2293.15,2168,rto\n"
    "O4,RCA-SBFA,[45],8.03,8.03,16.06,2358.21,2167,rto\n"
    "O5,RCA-SBFA,[46],6.95,6.95,13.90,2016.63,2167,rto\n"
    "O6,RCA-SBFA,[47],3.79,0.56,4.35,2097.96,2170,rto\n"
    "O7,RCA-SBFA,[48],3.31,0.72,4.03,2049.16,2167,rto\n"
    "O8,RCA-SBFA,[21],2.93,0.61,3.54,1658.80,2157,rto\n"
    "O9,RCA-DBFA,[49],2.23,0.79,3.02,2716.07,2177,rto\n"
    "O10,Hybrid RCA,[50],2.16,0.79,2.95,2649.97,2176,rto\n"
    "O11,RCA-DBFA,[51],2.17,0.91,3.08,2000.36,2179,rto\n"
    "O12,Hybrid RCA,[51],2.19,0.91,3.10,1979.01,2177,rto\n"
    "O13,Uniform CSLA,,2.38,1.85,4.23,3000.17,2285,rto\n"
    "O14,Non-uniform CSLA,[52],3.15,3.08,6.23,3384.44,2303,rto\n"
    "O15,BCLA,,3.19,2.86,6.05,2984.41,2184,rto\n"
    "O16,BCLARC,[53],2.36,1.69,4.05,3019.99,2185,rto\n"
    "O17,BCLA,,3.10,2.84,5.94,2947.82,2182,rto\n"
    "O18,BCLARC,[53],2.30,1.67,3.97,2983.40,2183,rto\n"
    "O19,CCLA,[54],2.73,2.73,5.46,2553.39,2169,rto\n"
    "O20,BCLA,,3.06,2.76,5.82,2557.45,2171,rto\n"
    "O21,BCLARC,[55],2.26,1.66,3.92,2593.03,2172,rto\n"
    "O22,BCLA,,2.73,2.50,5.23,2193.52,2167,rto\n"
    "O23,BCLARC,,1.95,1.37,3.32,2229.10,2168,rto\n"
    "O24,Hybrid BCLARC-RCA1,[36],1.88,1.37,3.25,2157.17,2167,rto\n"
    "O25,Hybrid BCLARC-RCA1,,1.89,1.37,3.26,2085.25,2165,rto\n"
    "O26,Hybrid BCLARC-RCA1,,2.13,1.37,3.50,2013.33,2164,rto\n"
    "O27,BCLA,,3.38,3.14,6.52,2315.51,2180,rto\n"
    "O28,BCLARC,,1.74,1.15,2.89,2351.09,2181,rto\n"
    "O29,Hybrid BCLARC-RCA1,[39],1.78,1.15,2.93,2263.92,2178,rto\n"
    "O30,Hybrid BCLARC-RCA2,,2.02,1.15,3.17,2176.74,2175,rto\n"
    "O31,Hybrid BCLARC-RCA3,,2.26,1.15,3.41,2089.57,2172,rto\n";

class ReferenceTable {
 public:
  void add(ReferenceRow row) {
    if (index_.count(row.legend))
      throw std::invalid_argument("duplicate legend: " + row.legend);
    index_[row.legend] = rows_.size();
    rows_.push_back(std::move(row));
  }

  const std::vector<ReferenceRow>& rows() const { return rows_; }
  bool has(const std::string& legend) const { return index_.count(legend) > 0; }

  const ReferenceRow& row(const std::string& legend) const {
    const auto it = index_.find(legend);
    if (it == index_.end()) throw UnknownLegend(legend);
    return rows_[it->second];
  }

 private:
  std::vector<ReferenceRow> rows_;
  std::map<std::string, std::size_t> index_;
};

inline ReferenceTable parse_reference_csv(std::string_view text) {
  constexpr std::string_view kHeader =
      "legend,architecture,ref,fl_ns,rl_ns,ct_ns,area_um2,power_uw,protocol";
  ReferenceTable table;
  std::istringstream in{std::string(text)};
  std::string line;
  bool header_seen = false;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      if (line != kHeader)
        throw std::invalid_argument("reference table header mismatch on line " +
                                    std::to_string(lineno));
      header_seen = true;
      continue;
    }
    std::vector<std::string> f;
    std::istringstream fields(line);
    std::string cell;
    while (std::getline(fields, cell, ',')) f.push_back(cell);
    if (line.back() == ',') f.push_back("");
    if (f.size() != 9)
      throw std::invalid_argument("reference row needs 9 fields on line " +
                                  std::to_string(lineno));
    ReferenceRow r;
    r.legend = f[0];
    r.architecture = f[1];
    r.ref = f[2];
    try {
      r.fl = std::stod(f[3]);
      r.rl = std::stod(f[4]);
      r.ct = std::stod(f[5]);
      r.area = std::stod(f[6]);
      r.power = std::stod(f[7]);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad number in reference row on line " +
                                  std::to_string(lineno));
    }
    r.protocol = protocol_from_string(f[8]);
    if (std::abs(r.ct - (r.fl + r.rl)) > 0.01)
      throw std::invalid_argument("cycle time of " + r.legend +
                                  " is not the sum of its latencies");
    table.add(std::move(r));
  }
  if (!header_seen)
    throw std::invalid_argument("reference table has no header line");
  return table;
}

inline const ReferenceTable& bundled_reference_table() {
  static const ReferenceTable table = parse_reference_csv(kReferenceCsv);
  return table;
}

inline ReferenceTable load_reference_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open reference table: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_reference_csv(buf.str());
}

// Maps a published legend to the adder configuration this laboratory builds
// for it. Rows whose circuit is not reconstructed here (full adders outside
// the generator set, and the non-uniform selection adder) have no mapping.
inline AdderSpec legend_spec(const std::string& legend) {
  if (legend.size() < 2) throw UnknownLegend(legend);
  AdderSpec s;
  s.width = 32;
  s.protocol = legend[0] == 'O' ? Protocol::rto : Protocol::rtz;
  if (legend[0] != 'Z' && legend[0] != 'O') throw UnknownLegend(legend);
  const std::string n = legend.substr(1);

  const auto is = [&n](std::initializer_list<const char*> names) {
    for (const char* x : names)
      if (n == x) return true;
    return false;
  };

  if (is({"1", "2", "3"})) {
    s.architecture = Architecture::rca_sbfa;
    s.fa_flavor = Indication::strong;
  } else if (is({"4", "5"})) {
    s.architecture = Architecture::rca_sbfa;
    s.fa_flavor = Indication::weak;
  } else if (is({"8"})) {
    s.architecture = Architecture::rca_sbfa;
    s.fa_flavor = Indication::early;
  } else if (is({"9", "11"})) {
    s.architecture = Architecture::rca_dbfa;
  } else if (is({"10", "12"})) {
    s.architecture = Architecture::hybrid_rca;
  } else if (is({"13"})) {
    s.architecture = Architecture::csla;
  } else if (is({"15", "17", "20", "22", "27"})) {
    s.architecture = Architecture::bcla;
  } else if (is({"16", "18", "21", "23", "28"})) {
    s.architecture = Architecture::bclarc;
  } else if (is({"19"})) {
    s.architecture = Architecture::ccla;
  } else if (is({"24", "29"})) {
    s.architecture = Architecture::hybrid_bclarc_rca;
    s.lsb_rca_width = 4;
  } else if (is({"25", "30"})) {
    s.architecture = Architecture::hybrid_bclarc_rca;
    s.lsb_rca_width = 8;
  } else if (is({"26", "31"})) {
    s.architecture = Architecture::hybrid_bclarc_rca;
    s.lsb_rca_width = 12;
  } else {
    throw UnknownLegend(legend);
  }
  s.validate();
  return s;
}

inline bool has_legend_spec(const std::string& legend) {
  try {
    legend_spec(legend);
    return true;
  } catch (const UnknownLegend&) {
    return false;
  }
}

}  // namespace qdi

#endif  // QDI_REFERENCE_DATA_HPP_
