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

#ifndef QDI_ENCODING_HPP_
#define QDI_ENCODING_HPP_

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace qdi {

// Four-phase handshake styles. RTZ (return-to-zero) rests with every rail
// low; RTO (return-to-one) rests with every rail high. The two encodings are
// bitwise complements of each other.
enum class Protocol : std::uint8_t { rtz, rto };

inline const char* to_string(Protocol p) {
  return p == Protocol::rtz ? "rtz" : "rto";
}

inline Protocol protocol_from_string(std::string_view s) {
  if (s == "rtz") return Protocol::rtz;
  if (s == "rto") return Protocol::rto;
  throw std::invalid_argument("unknown protocol: " + std::string(s));
}

// Rail level every wire of the protocol settles to between data items.
inline int spacer_level(Protocol p) { return p == Protocol::rtz ? 0 : 1; }

// One dual-rail signal. rail1 carries the "value is 1" indication, rail0 the
// "value is 0" indication; which polarity asserts a rail depends on the
// protocol.
struct RailPair {
  std::uint8_t rail1 = 0;
  std::uint8_t rail0 = 0;

  friend bool operator==(const RailPair&, const RailPair&) = default;
};

enum class PairClass : std::uint8_t { data0, data1, spacer, illegal };
enum class WordClass : std::uint8_t { data, spacer, partial, illegal };

inline const char* to_string(PairClass c) {
  switch (c) {
    case PairClass::data0: return "data0";
    case PairClass::data1: return "data1";
    case PairClass::spacer: return "spacer";
    case PairClass::illegal: return "illegal";
  }
  return "?";
}

inline const char* to_string(WordClass c) {
  switch (c) {
    case WordClass::data: return "data";
    case WordClass::spacer: return "spacer";
    case WordClass::partial: return "partial";
    case WordClass::illegal: return "illegal";
  }
  return "?";
}

inline RailPair encode_bit(int value, Protocol p) {
  if (value != 0 && value != 1) throw std::invalid_argument("bit must be 0 or 1");
  if (p == Protocol::rtz) {
    return value ? RailPair{1, 0} : RailPair{0, 1};
  }
  return value ? RailPair{0, 1} : RailPair{1, 0};
}

inline RailPair spacer_pair(Protocol p) {
  const auto s = static_cast<std::uint8_t>(spacer_level(p));
  return RailPair{s, s};
}

// Total over all four rail combinations.
inline PairClass classify_pair(RailPair r, Protocol p) {
  const std::uint8_t s = static_cast<std::uint8_t>(spacer_level(p));
  if (r.rail1 == s && r.rail0 == s) return PairClass::spacer;
  if (r.rail1 != s && r.rail0 != s) return PairClass::illegal;
  // Exactly one rail is active (away from the spacer level).
  return r.rail1 != s ? PairClass::data1 : PairClass::data0;
}

// A vector of rail pairs, least significant bit first.
struct DualRailWord {
  Protocol protocol = Protocol::rtz;
  std::vector<RailPair> pairs;

  int width() const { return static_cast<int>(pairs.size()); }

  friend bool operator==(const DualRailWord&, const DualRailWord&) = default;
};

inline DualRailWord encode_word(std::uint64_t value, int width, Protocol p) {
  if (width < 1 || width > 63) throw std::invalid_argument("width out of range");
  if (width < 63 && (value >> width) != 0)
    throw std::invalid_argument("value does not fit in width");
  DualRailWord w;
  w.protocol = p;
  w.pairs.reserve(static_cast<std::size_t>(width));
  for (int i = 0; i < width; ++i)
    w.pairs.push_back(encode_bit(static_cast<int>((value >> i) & 1u), p));
  return w;
}

inline DualRailWord spacer_word(int width, Protocol p) {
  if (width < 1) throw std::invalid_argument("width out of range");
  DualRailWord w;
  w.protocol = p;
  w.pairs.assign(static_cast<std::size_t>(width), spacer_pair(p));
  return w;
}

inline WordClass classify_word(const DualRailWord& w) {
  bool any_data = false, any_spacer = false;
  for (const RailPair& r : w.pairs) {
    switch (classify_pair(r, w.protocol)) {
      case PairClass::illegal: return WordClass::illegal;
      case PairClass::spacer: any_spacer = true; break;
      default: any_data = true; break;
    }
  }
  if (any_data && any_spacer) return WordClass::partial;
  return any_data ? WordClass::data : WordClass::spacer;
}

struct Decoded {
  WordClass cls = WordClass::spacer;
  std::uint64_t value = 0;  // meaningful only when cls == WordClass::data
};

inline Decoded decode_word(const DualRailWord& w) {
  Decoded d;
  d.cls = classify_word(w);
  if (d.cls != WordClass::data) return d;
  for (int i = 0; i < w.width(); ++i)
    if (classify_pair(w.pairs[static_cast<std::size_t>(i)], w.protocol) ==
        PairClass::data1)
      d.value |= std::uint64_t{1} << i;
  return d;
}

// One applied input word set for an adder: operands plus carry-in.
struct InputVector {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  int cin = 0;

  friend bool operator==(const InputVector&, const InputVector&) = default;
};

// Deterministic operand stream. Raw engine words are masked rather than fed
// through a distribution so the sequence is identical on every platform.
inline std::vector<InputVector> random_vectors(int width, std::size_t count,
                                               std::uint64_t seed) {
  if (width < 1 || width > 63) throw std::invalid_argument("width out of range");
  std::mt19937_64 rng(seed);
  const std::uint64_t mask = (std::uint64_t{1} << width) - 1;
  std::vector<InputVector> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    InputVector v;
    v.a = rng() & mask;
    v.b = rng() & mask;
    v.cin = static_cast<int>(rng() & 1u);
    out.push_back(v);
  }
  return out;
}

// Worst-case carry chain: every bit position propagates, carry-in ripples
// through the full width.
inline InputVector all_propagate_vector(int width) {
  if (width < 1 || width > 63) throw std::invalid_argument("width out of range");
  return InputVector{(std::uint64_t{1} << width) - 1, 0, 1};
}

}  // namespace qdi

#endif  // QDI_ENCODING_HPP_
