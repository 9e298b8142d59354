#pragma once

// Brute-force reference implementations. They share nothing with the
// library beyond the Graph value type and are only meant for tiny inputs.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ramsey/graph.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;
using EdgeList = std::vector<std::pair<int, int>>;

inline Matrix matrix_of(int n, const EdgeList& es) {
  Matrix m(n, std::vector<bool>(n, false));
  for (auto [a, b] : es) m[a][b] = m[b][a] = true;
  return m;
}

inline EdgeList edge_list(const ramsey::Graph& g) {
  EdgeList out;
  for (const auto& e : g.edges()) out.emplace_back(e.u, e.v);
  return out;
}

// Try every injective assignment of pattern vertices to host vertices.
inline bool embeds(const Matrix& host, const Matrix& pat, std::vector<int>& img, std::vector<bool>& used) {
  const int k = static_cast<int>(img.size());
  const int p = static_cast<int>(pat.size());
  if (k == p) return true;
  for (int h = 0; h < static_cast<int>(host.size()); ++h) {
    if (used[h]) continue;
    bool ok = true;
    for (int j = 0; j < k && ok; ++j) {
      if (pat[k][j] && !host[h][img[j]]) ok = false;
    }
    if (!ok) continue;
    used[h] = true;
    img.push_back(h);
    if (embeds(host, pat, img, used)) return true;
    img.pop_back();
    used[h] = false;
  }
  return false;
}

inline bool contains(const Matrix& host, const Matrix& pat) {
  if (pat.size() > host.size()) return false;
  std::vector<int> img;
  std::vector<bool> used(host.size(), false);
  return embeds(host, pat, img, used);
}

// Patterns are compared without their isolated vertices.
inline Matrix pattern_of(const ramsey::Graph& g) {
  return matrix_of(g.without_isolated().order(), edge_list(g.without_isolated()));
}

inline bool contains(const ramsey::Graph& host, const ramsey::Graph& pat) {
  return contains(matrix_of(host.order(), edge_list(host)), pattern_of(pat));
}

/// F -> (G, H) by trying all 2^|E(F)| colourings.
inline bool naive_arrows(const ramsey::Graph& f, const ramsey::Graph& g, const ramsey::Graph& h) {
  const EdgeList es = edge_list(f);
  const Matrix pg = pattern_of(g), ph = pattern_of(h);
  const int m = static_cast<int>(es.size());
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    EdgeList red, blue;
    for (int i = 0; i < m; ++i) ((mask >> i) & 1u ? red : blue).push_back(es[i]);
    if (!contains(matrix_of(f.order(), red), pg) && !contains(matrix_of(f.order(), blue), ph)) {
      return false;
    }
  }
  return true;
}

/// Lexicographically smallest upper-triangle bit string over all relabellings.
inline std::string brute_canonical(const ramsey::Graph& g) {
  const int n = g.order();
  const Matrix m = matrix_of(n, edge_list(g));
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string s;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) s += m[perm[a]][perm[b]] ? '1' : '0';
    }
    if (best.empty() || s < best) best = s;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::to_string(n) + ":" + best;
}

/// Every labelled graph on n vertices (n <= 6).
inline std::vector<ramsey::Graph> labelled_graphs(int n) {
  std::vector<ramsey::Edge> slots;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) slots.emplace_back(a, b);
  }
  std::vector<ramsey::Graph> out;
  for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
    std::vector<ramsey::Edge> es;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if ((mask >> i) & 1u) es.push_back(slots[i]);
    }
    out.push_back(ramsey::Graph::from_edges(n, es));
  }
  return out;
}

/// One representative per isomorphism class on exactly n vertices with no
/// isolated vertex, by generate-and-dedupe.
inline std::vector<ramsey::Graph> naive_classes(int n) {
  std::set<std::string> seen;
  std::vector<ramsey::Graph> out;
  for (const ramsey::Graph& g : labelled_graphs(n)) {
    if (g.isolated_count() > 0) continue;
    if (seen.insert(brute_canonical(g)).second) out.push_back(g);
  }
  return out;
}

struct Fraction {
  long long num = 0;
  long long den = 1;
  bool operator<(const Fraction& o) const { return num * o.den < o.num * den; }
  bool operator==(const Fraction& o) const { return num * o.den == o.num * den; }
};

enum class Objective { kRho, kM2, kPair };

/// Maximum over every subgraph (vertex subset and any edge subset of it).
/// kPair scores e / (v - 2 + b/a) for the second graph's m2 = a/b, i.e.
/// e*a / ((v-2)*a + b).
inline Fraction all_subgraph_max(const ramsey::Graph& x, Objective obj, Fraction m2_other = {}) {
  const int n = x.order();
  const EdgeList es = edge_list(x);
  bool have = false;
  Fraction best;
  for (std::uint32_t vs = 1; vs < (1u << n); ++vs) {
    const int v = __builtin_popcount(vs);
    EdgeList inside;
    for (auto [a, b] : es) {
      if ((vs >> a & 1u) && (vs >> b & 1u)) inside.emplace_back(a, b);
    }
    for (std::uint32_t sub = 0; sub < (1u << inside.size()); ++sub) {
      const long long e = __builtin_popcount(sub);
      Fraction f;
      switch (obj) {
        case Objective::kRho: f = {e, v}; break;
        case Objective::kM2:
          if (v < 3) continue;
          f = {e - 1, v - 2};
          break;
        case Objective::kPair:
          if (v < 2) continue;
          f = {e * m2_other.num, (v - 2) * m2_other.num + m2_other.den};
          break;
      }
      if (!have || best < f) best = f;
      have = true;
    }
  }
  return best;
}

/// Graphs with 1..max_edges edges and no isolated vertices, built as
/// multisets of connected pieces drawn from `connected` (sorted by edges).
inline void unions_up_to(const std::vector<ramsey::Graph>& connected, int max_edges, std::size_t from,
                         const ramsey::Graph& acc, std::vector<ramsey::Graph>& out) {
  for (std::size_t i = from; i < connected.size(); ++i) {
    const ramsey::Graph next = ramsey::disjoint_union(acc, connected[i]);
    if (next.edge_count() > max_edges) continue;
    out.push_back(next);
    unions_up_to(connected, max_edges, i, next, out);
  }
}

}  // namespace oracle
