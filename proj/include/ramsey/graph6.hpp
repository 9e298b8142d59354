#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

class Graph6Error : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

namespace detail {

inline void graph6_size(std::string& out, int n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 0x3f) + 63));
    }
  }
}

}  // namespace detail

/// graph6 encoding (no header, no trailing newline).
inline std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  detail::graph6_size(out, n);
  int acc = 0;
  int fill = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++fill == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        fill = 0;
      }
    }
  }
  if (fill) out.push_back(static_cast<char>((acc << (6 - fill)) + 63));
  return out;
}

/// Parses one graph6 string. An optional ">>graph6<<" header and trailing
/// whitespace are accepted.
inline Graph parse_graph6(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) {
    text.remove_suffix(1);
  }
  if (text.empty()) throw Graph6Error("graph6: empty input");
  for (char ch : text) {
    if (ch < 63 || ch > 126) {
      throw Graph6Error(std::string("graph6: character out of range: '") + ch + "'");
    }
  }

  std::size_t pos = 0;
  long n = 0;
  if (text[0] != '~') {
    n = text[0] - 63;
    pos = 1;
  } else if (text.size() >= 2 && text[1] == '~') {
    if (text.size() < 8) throw Graph6Error("graph6: truncated size field");
    for (std::size_t k = 2; k < 8; ++k) n = (n << 6) | (text[k] - 63);
    pos = 8;
  } else {
    if (text.size() < 4) throw Graph6Error("graph6: truncated size field");
    for (std::size_t k = 1; k < 4; ++k) n = (n << 6) | (text[k] - 63);
    pos = 4;
  }
  if (n > Graph::kMaxOrder) {
    throw Graph6Error("graph6: order " + std::to_string(n) + " exceeds the vertex cap");
  }

  const long bits = n * (n - 1) / 2;
  const std::size_t want = static_cast<std::size_t>((bits + 5) / 6);
  const std::size_t have = text.size() - pos;
  if (have < want) throw Graph6Error("graph6: truncated bit vector");
  if (have > want) throw Graph6Error("graph6: trailing characters");

  std::vector<Edge> es;
  long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int word = text[pos + static_cast<std::size_t>(k / 6)] - 63;
      if ((word >> (5 - k % 6)) & 1) es.emplace_back(i, j);
    }
  }
  if (want > 0) {
    const int pad = static_cast<int>(want * 6 - bits);
    const int last = text.back() - 63;
    if (last & ((1 << pad) - 1)) throw Graph6Error("graph6: non-zero padding bits");
  }
  return Graph::from_edges(static_cast<int>(n), es);
}

}  // namespace ramsey
