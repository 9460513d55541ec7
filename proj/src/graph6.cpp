#include "pcube/graph6.hpp"

#include <cstdint>

#include "pcube/errors.hpp"

namespace pcube {

namespace {

constexpr int kLo = 63;   // '?'
constexpr int kHi = 126;  // '~'
constexpr std::string_view kHeader = ">>graph6<<";

int need_byte(std::string_view s, size_t i) {
  if (i >= s.size()) throw ParseError("graph6: truncated input");
  unsigned char c = static_cast<unsigned char>(s[i]);
  if (c < kLo || c > kHi) throw ParseError("graph6: character out of range");
  return c - kLo;
}

}  // namespace

Graph parse_graph6(std::string_view line) {
  std::string_view s = line;
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  if (s.substr(0, kHeader.size()) == kHeader) s.remove_prefix(kHeader.size());
  if (s.empty()) throw ParseError("graph6: empty line");

  size_t pos = 0;
  int64_t n = 0;
  int b0 = need_byte(s, pos++);
  if (b0 < 63) {
    n = b0;
  } else {
    // b0 == 63 means '~': extended length field.
    int b1 = need_byte(s, pos);
    if (b1 < 63) {
      n = int64_t(need_byte(s, pos)) << 12;
      ++pos;
      n |= int64_t(need_byte(s, pos++)) << 6;
      n |= need_byte(s, pos++);
      if (n < 63) throw ParseError("graph6: non-canonical length field");
    } else {
      ++pos;  // second '~'
      for (int k = 0; k < 6; ++k) n = (n << 6) | need_byte(s, pos++);
      if (n < 258048) throw ParseError("graph6: non-canonical length field");
    }
  }
  if (n > (1 << 28))
    throw SizeLimit("graph6: vertex count beyond supported scale");

  int64_t bits = n * (n - 1) / 2;
  size_t body = size_t((bits + 5) / 6);
  if (s.size() - pos != body) throw ParseError("graph6: body length mismatch");

  std::vector<Edge> edges;
  int64_t bit = 0;
  int cur = 0, have = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++bit) {
      if (have == 0) {
        cur = need_byte(s, pos++);
        have = 6;
      }
      if (cur & (1 << (have - 1))) edges.emplace_back(u, v);
      --have;
    }
  }
  if (have > 0 && (cur & ((1 << have) - 1)) != 0)
    throw ParseError("graph6: nonzero padding bits");
  return Graph::from_edges(static_cast<int>(n), edges);
}

std::string write_graph6(const Graph& g) {
  int64_t n = g.n;
  if (n >= (int64_t(1) << 36)) throw SizeLimit("graph6: vertex count too large");
  std::string out;
  if (n <= 62) {
    out.push_back(char(kLo + n));
  } else if (n <= 258047) {
    out.push_back(char(kHi));
    out.push_back(char(kLo + ((n >> 12) & 63)));
    out.push_back(char(kLo + ((n >> 6) & 63)));
    out.push_back(char(kLo + (n & 63)));
  } else {
    out.push_back(char(kHi));
    out.push_back(char(kHi));
    for (int k = 5; k >= 0; --k) out.push_back(char(kLo + ((n >> (6 * k)) & 63)));
  }

  int cur = 0, have = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      cur = (cur << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++have == 6) {
        out.push_back(char(kLo + cur));
        cur = have = 0;
      }
    }
  }
  if (have > 0) out.push_back(char(kLo + (cur << (6 - have))));
  return out;
}

}  // namespace pcube
