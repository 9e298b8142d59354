#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "ramsey/canonical.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

/// Hosts for embedding search fit one 64-bit word per adjacency row.
inline constexpr int kSearchVertexCap = 64;

/// Backtracking subgraph (not induced) search for a fixed pattern.
///
/// Pattern vertices are visited in a connectivity order per component,
/// largest component first; candidates for each vertex are the common
/// neighbourhood of its already placed neighbours, filtered by degree.
class PatternMatcher {
 public:
  /// `pinned` = false skips the per-edge plans needed by find_through.
  explicit PatternMatcher(const Graph& pattern, bool pinned = true) : pattern_(pattern) {
    if (pattern.order() > kSearchVertexCap) {
      throw InvalidArgument("pattern exceeds " + std::to_string(kSearchVertexCap) + " vertices");
    }
    for (Vertex v = 0; v < pattern.order(); ++v) {
      max_degree_ = std::max(max_degree_, pattern.degree(v));
    }
    free_plan_ = make_plan({});
    if (!pinned) return;
    // One pinned plan per orbit of directed pattern edges.
    std::set<std::string> seen;
    for (const Edge& e : pattern.edges()) {
      for (auto [a, b] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
        std::vector<int> colours(pattern.order(), 0);
        colours[a] = 1;
        colours[b] = 2;
        if (seen.insert(canonical_form(pattern, colours).certificate).second) {
          pinned_plans_.push_back(make_plan({a, b}));
        }
      }
    }
  }

  const Graph& pattern() const { return pattern_; }
  int edge_count() const { return pattern_.edge_count(); }

  /// Any copy of the pattern in the host given by adjacency rows.
  /// Returns pattern-vertex -> host-vertex.
  std::optional<std::vector<Vertex>> find(std::span<const std::uint64_t> rows) const {
    State st(*this, rows);
    if (!st.feasible()) return std::nullopt;
    std::array<Vertex, kSearchVertexCap> map{};
    if (!extend(free_plan_, 0, 0, st, map)) return std::nullopt;
    return unpack(free_plan_, map);
  }

  /// A copy that uses host edge `pinned` (which must be present in `rows`).
  std::optional<std::vector<Vertex>> find_through(std::span<const std::uint64_t> rows,
                                                  Edge pinned) const {
    if (rows.size() < static_cast<std::size_t>(pattern_.order())) return std::nullopt;
    State st(*this, rows);
    if (!st.feasible()) return std::nullopt;
    std::array<Vertex, kSearchVertexCap> map{};
    const std::uint64_t used = (std::uint64_t{1} << pinned.u) | (std::uint64_t{1} << pinned.v);
    for (const Plan& plan : pinned_plans_) {
      if (!((st.degree_ok[plan.degree[0]] >> pinned.u) & 1U)) continue;
      if (!((st.degree_ok[plan.degree[1]] >> pinned.v) & 1U)) continue;
      map[0] = pinned.u;
      map[1] = pinned.v;
      if (extend(plan, 2, used, st, map)) return unpack(plan, map);
    }
    return std::nullopt;
  }

  bool contains(std::span<const std::uint64_t> rows) const { return find(rows).has_value(); }

  bool contains_through(std::span<const std::uint64_t> rows, Edge pinned) const {
    return find_through(rows, pinned).has_value();
  }

 private:
  struct Plan {
    std::vector<Vertex> order;              // position -> pattern vertex
    std::vector<std::vector<int>> back;     // earlier adjacent positions
    std::vector<int> degree;                // pattern degree per position
  };

  struct State {
    State(const PatternMatcher& m, std::span<const std::uint64_t> r) : rows(r) {
      const int n = static_cast<int>(rows.size());
      all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
      edges = 0;
      for (int v = 0; v < n; ++v) {
        const int d = std::popcount(rows[v]);
        edges += d;
        for (int t = 0; t <= std::min(d, m.max_degree_); ++t) degree_ok[t] |= std::uint64_t{1} << v;
      }
      edges /= 2;
      pattern_order = m.pattern_.order();
      pattern_edges = m.pattern_.edge_count();
    }
    bool feasible() const {
      return static_cast<int>(rows.size()) >= pattern_order && edges >= pattern_edges;
    }
    std::span<const std::uint64_t> rows;
    std::uint64_t all = 0;
    std::array<std::uint64_t, kSearchVertexCap> degree_ok{};
    int edges = 0;
    int pattern_order = 0;
    int pattern_edges = 0;
  };

  Plan make_plan(std::vector<Vertex> seed) const {
    const int n = pattern_.order();
    std::vector<bool> placed(n, false);
    Plan plan;
    auto place = [&](Vertex v) {
      placed[v] = true;
      plan.order.push_back(v);
    };
    for (Vertex v : seed) place(v);

    auto comps = components(pattern_);
    std::stable_sort(comps.begin(), comps.end(), [](const Component& a, const Component& b) {
      return a.graph.edge_count() > b.graph.edge_count();
    });
    // Seeded component first.
    if (!seed.empty()) {
      std::stable_partition(comps.begin(), comps.end(), [&](const Component& c) {
        return std::binary_search(c.vertices.begin(), c.vertices.end(), seed.front());
      });
    }
    for (const Component& c : comps) {
      bool started = std::any_of(c.vertices.begin(), c.vertices.end(), [&](Vertex v) { return placed[v]; });
      if (!started) {
        Vertex root = c.vertices.front();
        for (Vertex v : c.vertices) {
          if (pattern_.degree(v) > pattern_.degree(root)) root = v;
        }
        place(root);
      }
      // Grow greedily: most placed neighbours, then highest degree.
      while (true) {
        Vertex pick = -1;
        int pick_links = -1;
        int pick_deg = -1;
        for (Vertex v : c.vertices) {
          if (placed[v]) continue;
          int links = 0;
          for (Vertex w : pattern_.neighbors(v)) links += placed[w];
          if (links == 0) continue;
          const int deg = pattern_.degree(v);
          if (links > pick_links || (links == pick_links && deg > pick_deg)) {
            pick = v;
            pick_links = links;
            pick_deg = deg;
          }
        }
        if (pick < 0) break;
        place(pick);
      }
    }

    std::vector<int> position(n, -1);
    for (int i = 0; i < n; ++i) position[plan.order[i]] = i;
    plan.back.resize(n);
    plan.degree.resize(n);
    for (int i = 0; i < n; ++i) {
      const Vertex v = plan.order[i];
      plan.degree[i] = pattern_.degree(v);
      for (Vertex w : pattern_.neighbors(v)) {
        if (position[w] < i) plan.back[i].push_back(position[w]);
      }
    }
    return plan;
  }

  bool extend(const Plan& plan, int pos, std::uint64_t used, const State& st,
              std::array<Vertex, kSearchVertexCap>& map) const {
    if (pos == static_cast<int>(plan.order.size())) return true;
    std::uint64_t cand = st.all & ~used & st.degree_ok[plan.degree[pos]];
    for (int q : plan.back[pos]) cand &= st.rows[map[q]];
    while (cand) {
      const Vertex w = std::countr_zero(cand);
      cand &= cand - 1;
      map[pos] = w;
      if (extend(plan, pos + 1, used | (std::uint64_t{1} << w), st, map)) return true;
    }
    return false;
  }

  std::vector<Vertex> unpack(const Plan& plan,
                             const std::array<Vertex, kSearchVertexCap>& map) const {
    std::vector<Vertex> out(pattern_.order());
    for (std::size_t i = 0; i < plan.order.size(); ++i) out[plan.order[i]] = map[i];
    return out;
  }

  Graph pattern_;
  int max_degree_ = 0;
  Plan free_plan_;
  std::vector<Plan> pinned_plans_;
};

namespace detail {

inline std::vector<std::uint64_t> rows64(const Graph& g) {
  if (g.order() > kSearchVertexCap) {
    throw InvalidArgument("graph exceeds the " + std::to_string(kSearchVertexCap) +
                          "-vertex search cap");
  }
  std::vector<std::uint64_t> rows(g.order());
  for (Vertex v = 0; v < g.order(); ++v) rows[v] = g.row64(v);
  return rows;
}

}  // namespace detail

/// Y ⪯ X: an injective map from pattern vertices to host vertices carrying
/// every pattern edge onto a host edge, if one exists.
inline std::optional<std::vector<Vertex>> contains_copy(const Graph& host, const Graph& pattern) {
  if (pattern.order() > host.order() || pattern.edge_count() > host.edge_count()) {
    return std::nullopt;
  }
  const auto rows = detail::rows64(host);
  return PatternMatcher(pattern, false).find(rows);
}

}  // namespace ramsey
