// Copyright 2026 The gcanon Authors
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

// Graph6 and Sparse6 string formats, byte-exact with the published format
// description that ships with nauty (formats.txt).
//
// Graph6:  N(n) R(x), where x is the upper triangle in column order
//          x(0,1), x(0,2), x(1,2), x(0,3), ... packed 6 bits per byte.
// Sparse6: ':' N(n) R(z), where z is a stream of (b, x) items of 1 + k bits,
//          k being the bit width of n - 1.
//
// Every byte of R and N is a 6-bit value plus 63. Headers up to n = 258047
// are supported.

#ifndef GCANON_CODEC_HPP_
#define GCANON_CODEC_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gcanon/error.hpp"
#include "gcanon/graph.hpp"

namespace gcanon {

namespace detail {

inline constexpr int kSmallHeaderMax = 62;

inline void append_order(std::string& out, int n) {
  if (n <= kSmallHeaderMax) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
}

inline void check_encodable(const Graph& g) {
  if (g.order() == 0) throw ZeroVertexError();
  if (g.order() > kHardMaxVertices) {
    throw CapacityError("order too large for a 4-byte Graph6 header");
  }
}

// Big-endian 6-bit packer.
class SixBitWriter {
 public:
  explicit SixBitWriter(std::string& out) : out_(out) {}

  void put(unsigned bit) {
    acc_ = static_cast<unsigned>((acc_ << 1) | (bit & 1U));
    if (++used_ == 6) flush();
  }

  void put_bits(std::uint32_t value, int width) {
    for (int i = width - 1; i >= 0; --i) put((value >> i) & 1U);
  }

  int pending() const { return used_; }

  // Zero-pads the last group.
  void finish() {
    while (used_ != 0) put(0);
  }

 private:
  void flush() {
    out_.push_back(static_cast<char>(acc_ + 63));
    acc_ = 0;
    used_ = 0;
  }

  std::string& out_;
  unsigned acc_ = 0;
  int used_ = 0;
};

inline std::string_view strip_newline(std::string_view s) {
  if (!s.empty() && s.back() == '\n') s.remove_suffix(1);
  return s;
}

inline int check_byte(std::string_view s, std::size_t pos) {
  const auto c = static_cast<unsigned char>(s[pos]);
  if (c < 63 || c > 126) {
    throw DecodeError(pos, "byte " + std::to_string(c) + " outside 63..126");
  }
  return c - 63;
}

// Parses N(n) starting at pos; advances pos past the header.
inline int read_order(std::string_view s, std::size_t& pos) {
  if (pos >= s.size()) throw DecodeError(pos, "missing size header");
  int first = check_byte(s, pos);
  if (first != 63) {
    ++pos;
    if (first == 0) throw DecodeError(pos - 1, "zero-vertex graphs are not supported");
    return first;
  }
  if (pos + 1 < s.size() && s[pos + 1] == '~') {
    throw DecodeError(pos, "8-byte size header (n > 258047) is not supported");
  }
  if (pos + 4 > s.size()) throw DecodeError(s.size(), "truncated size header");
  int n = 0;
  for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | check_byte(s, pos + i);
  if (n <= kSmallHeaderMax) {
    throw DecodeError(pos, "long size header used for n = " + std::to_string(n));
  }
  pos += 4;
  return n;
}

inline int checked_order(int n, std::size_t header_pos) {
  if (n > max_vertices()) {
    throw DecodeError(header_pos, "graph order " + std::to_string(n) +
                                      " exceeds the vertex cap of " +
                                      std::to_string(max_vertices()));
  }
  return n;
}

inline Graph decode_graph6(std::string_view s) {
  std::size_t pos = 0;
  const int n = checked_order(read_order(s, pos), 0);
  for (std::size_t i = pos; i < s.size(); ++i) check_byte(s, i);
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t payload = (bits + 5) / 6;
  if (s.size() < pos + payload) {
    throw DecodeError(s.size(), "truncated payload: expected " + std::to_string(payload) +
                                    " bytes, found " + std::to_string(s.size() - pos));
  }
  if (s.size() > pos + payload) throw DecodeError(pos + payload, "trailing bytes");

  Graph::Builder b(n);
  std::size_t k = 0;
  for (Vertex v = 1; v < n; ++v) {
    for (Vertex u = 0; u < v; ++u, ++k) {
      const int group = s[pos + k / 6] - 63;
      if ((group >> (5 - k % 6)) & 1) b.add_edge(u, v);
    }
  }
  if (bits % 6 != 0) {
    const std::size_t at = pos + payload - 1;
    const int group = s[at] - 63;
    const int pad_mask = (1 << (6 - bits % 6)) - 1;
    if (group & pad_mask) throw DecodeError(at, "non-zero padding bits");
  }
  return std::move(b).build();
}

inline int sparse6_width(int n) {
  int k = 0;
  for (int i = n - 1; i > 0; i >>= 1) ++k;
  return k;
}

inline Graph decode_sparse6(std::string_view s) {
  std::size_t pos = 1;  // past ':'
  const int n = checked_order(read_order(s, pos), 1);
  const int k = sparse6_width(n);
  for (std::size_t i = pos; i < s.size(); ++i) check_byte(s, i);

  const std::size_t total = (s.size() - pos) * 6;
  auto bit_at = [&](std::size_t i) -> unsigned {
    const int group = s[pos + i / 6] - 63;
    return static_cast<unsigned>((group >> (5 - i % 6)) & 1);
  };

  Graph::Builder b(n);
  std::size_t i = 0;
  long long v = 0;
  while (i + 1 + static_cast<std::size_t>(k) <= total) {
    const std::size_t item_start = i;
    if (bit_at(i++)) ++v;
    long long x = 0;
    for (int j = 0; j < k; ++j) x = (x << 1) | bit_at(i++);
    if (v >= n) {
      i = item_start;
      break;
    }
    if (x > v) {
      v = x;
      if (v >= n) break;
      continue;
    }
    const std::size_t at = pos + item_start / 6;
    if (x == v) throw DecodeError(at, "loop at vertex " + std::to_string(v));
    if (b.has_edge(static_cast<Vertex>(x), static_cast<Vertex>(v))) {
      throw DecodeError(at, "repeated edge {" + std::to_string(x) + "," +
                                std::to_string(v) + "}");
    }
    b.add_edge(static_cast<Vertex>(x), static_cast<Vertex>(v));
  }
  // Whatever follows the end of the edge list must fit in the last byte.
  if (total - i >= 6) {
    throw DecodeError(pos + (i + 5) / 6, "data continues past vertex " +
                                             std::to_string(n - 1));
  }
  return std::move(b).build();
}

}  // namespace detail

inline std::string encode_graph6(const Graph& g) {
  detail::check_encodable(g);
  const int n = g.order();
  std::string out;
  out.reserve(4 + (static_cast<std::size_t>(n) * (n - 1) / 2 + 5) / 6);
  detail::append_order(out, n);
  detail::SixBitWriter w(out);
  for (Vertex v = 1; v < n; ++v)
    for (Vertex u = 0; u < v; ++u) w.put(g.adjacent(u, v) ? 1U : 0U);
  w.finish();
  return out;
}

inline std::string encode_sparse6(const Graph& g) {
  detail::check_encodable(g);
  const int n = g.order();
  const int k = detail::sparse6_width(n);
  std::string out(1, ':');
  detail::append_order(out, n);
  detail::SixBitWriter w(out);

  Vertex current = 0;
  for (const Edge& e : g.edges()) {  // sorted by larger endpoint
    if (e.v == current) {
      w.put(0);
    } else {
      w.put(1);
      if (e.v > current + 1) {
        w.put_bits(static_cast<std::uint32_t>(e.v), k);
        w.put(0);
      }
      current = e.v;
    }
    w.put_bits(static_cast<std::uint32_t>(e.u), k);
  }

  if (w.pending() != 0) {
    const int pad = 6 - w.pending();
    // All-ones padding would read as the loop {n-1, n-1} in this case.
    if (k < 6 && n == (1 << k) && current == n - 2 && pad > k) w.put(0);
    while (w.pending() != 0) w.put(1);
  }
  return out;
}

// Decodes a Graph6 or Sparse6 string (Sparse6 when it starts with ':'). One
// trailing '\n' is ignored.
inline Graph decode(std::string_view text) {
  std::string_view s = detail::strip_newline(text);
  if (s.empty()) throw DecodeError(0, "empty string");
  if (s.front() == ':') return detail::decode_sparse6(s);
  return detail::decode_graph6(s);
}

}  // namespace gcanon

#endif  // GCANON_CODEC_HPP_
