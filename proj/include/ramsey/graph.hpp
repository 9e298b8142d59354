#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ramsey {

/// Raised when an operation's precondition is violated by its input.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using Vertex = int;

/// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable finite simple graph on vertices 0..order()-1.
///
/// Adjacency is stored as one bitset row per vertex. Rows span as many
/// 64-bit words as the order needs, so the value type also carries large
/// composite targets such as S(3) + 122K2; the search modules impose their
/// own single-word limits on the graphs they accept.
class Graph {
 public:
  static constexpr int kMaxOrder = 4096;

  Graph() = default;

  /// Edgeless graph on `order` vertices.
  explicit Graph(int order) : order_(order), words_(words_for(order)) {
    if (order < 0 || order > kMaxOrder) {
      throw InvalidArgument("graph order " + std::to_string(order) +
                            " outside [0, " + std::to_string(kMaxOrder) + "]");
    }
    bits_.assign(static_cast<std::size_t>(order_) * words_, 0);
  }

  static Graph from_edges(int order, std::span<const Edge> edges) {
    Graph g(order);
    for (const Edge& e : edges) g.insert(e);
    return g;
  }

  static Graph from_edges(int order, std::initializer_list<Edge> edges) {
    return from_edges(order, std::span<const Edge>(edges.begin(), edges.size()));
  }

  int order() const { return order_; }
  int edge_count() const { return edge_count_; }
  int words_per_row() const { return words_; }

  bool adjacent(Vertex a, Vertex b) const {
    check_vertex(a);
    check_vertex(b);
    return test(a, b);
  }

  bool has_edge(Edge e) const { return e.u != e.v && adjacent(e.u, e.v); }

  int degree(Vertex v) const {
    check_vertex(v);
    int d = 0;
    for (std::uint64_t w : row(v)) d += std::popcount(w);
    return d;
  }

  std::span<const std::uint64_t> row(Vertex v) const {
    return {bits_.data() + static_cast<std::size_t>(v) * words_,
            static_cast<std::size_t>(words_)};
  }

  /// Neighbourhood as a single word; only valid when order() <= 64.
  std::uint64_t row64(Vertex v) const {
    if (order_ > 64) throw InvalidArgument("row64 requires order <= 64");
    return words_ == 0 ? 0 : bits_[static_cast<std::size_t>(v)];
  }

  std::vector<Vertex> neighbors(Vertex v) const {
    check_vertex(v);
    std::vector<Vertex> out;
    for (int w = 0; w < words_; ++w) {
      std::uint64_t bits = row(v)[w];
      while (bits) {
        out.push_back(w * 64 + std::countr_zero(bits));
        bits &= bits - 1;
      }
    }
    return out;
  }

  /// All edges, sorted lexicographically.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order_; ++u) {
      for (Vertex v : neighbors(u)) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  std::vector<int> degrees() const {
    std::vector<int> out(order_);
    for (Vertex v = 0; v < order_; ++v) out[v] = degree(v);
    return out;
  }

  int isolated_count() const {
    int k = 0;
    for (Vertex v = 0; v < order_; ++v) k += degree(v) == 0;
    return k;
  }

  Graph with_edge(Edge e) const {
    Graph g = *this;
    g.insert(e);
    return g;
  }

  /// Copy with edge `e` removed. Vertices are retained, so endpoints may
  /// become isolated.
  Graph without_edge(Edge e) const {
    if (!has_edge(e)) {
      throw InvalidArgument("edge {" + std::to_string(e.u) + "," +
                            std::to_string(e.v) + "} not present");
    }
    Graph g = *this;
    g.set(e.u, e.v, false);
    g.set(e.v, e.u, false);
    --g.edge_count_;
    return g;
  }

  /// Relabel: vertex v of this graph becomes vertex image[v].
  Graph permuted(std::span<const Vertex> image) const {
    if (static_cast<int>(image.size()) != order_) {
      throw InvalidArgument("permutation size mismatch");
    }
    std::vector<bool> seen(order_, false);
    for (Vertex v : image) {
      if (v < 0 || v >= order_ || seen[v]) throw InvalidArgument("not a permutation");
      seen[v] = true;
    }
    Graph g(order_);
    for (const Edge& e : edges()) g.insert(Edge(image[e.u], image[e.v]));
    return g;
  }

  /// Subgraph induced on `keep`; the i-th listed vertex becomes vertex i.
  Graph induced(std::span<const Vertex> keep) const {
    Graph g(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i) {
      for (std::size_t j = i + 1; j < keep.size(); ++j) {
        if (adjacent(keep[i], keep[j])) {
          g.insert(Edge(static_cast<Vertex>(i), static_cast<Vertex>(j)));
        }
      }
    }
    return g;
  }

  /// Non-isolated vertices, ascending.
  std::vector<Vertex> support() const {
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < order_; ++v) {
      if (degree(v) > 0) keep.push_back(v);
    }
    return keep;
  }

  Graph without_isolated() const {
    auto keep = support();
    return induced(keep);
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.order_ == b.order_ && a.bits_ == b.bits_;
  }

 private:
  static int words_for(int order) { return order <= 0 ? 0 : (order + 63) / 64; }

  void check_vertex(Vertex v) const {
    if (v < 0 || v >= order_) {
      throw InvalidArgument("vertex " + std::to_string(v) + " out of range");
    }
  }

  bool test(Vertex a, Vertex b) const {
    return (bits_[static_cast<std::size_t>(a) * words_ + b / 64] >> (b % 64)) & 1U;
  }

  void set(Vertex a, Vertex b, bool on) {
    std::uint64_t& w = bits_[static_cast<std::size_t>(a) * words_ + b / 64];
    const std::uint64_t bit = std::uint64_t{1} << (b % 64);
    w = on ? (w | bit) : (w & ~bit);
  }

  void insert(Edge e) {
    check_vertex(e.u);
    check_vertex(e.v);
    if (e.u == e.v) throw InvalidArgument("self-loop at vertex " + std::to_string(e.u));
    if (test(e.u, e.v)) return;
    set(e.u, e.v, true);
    set(e.v, e.u, true);
    ++edge_count_;
  }

  int order_ = 0;
  int words_ = 0;
  int edge_count_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// X - e.
inline Graph delete_edge(const Graph& g, Edge e) { return g.without_edge(e); }

/// Disjoint union; vertices of `b` are shifted past those of `a`.
inline Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> es = a.edges();
  for (const Edge& e : b.edges()) es.emplace_back(e.u + a.order(), e.v + a.order());
  return Graph::from_edges(a.order() + b.order(), es);
}

// Building blocks.

inline Graph complete_graph(int n) {
  if (n < 1) throw InvalidArgument("K(n) requires n >= 1");
  std::vector<Edge> es;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) es.emplace_back(u, v);
  return Graph::from_edges(n, es);
}

/// S(r) = K_{1,r}; vertex 0 is the centre.
inline Graph star_graph(int r) {
  if (r < 1) throw InvalidArgument("S(r) requires r >= 1");
  std::vector<Edge> es;
  for (Vertex v = 1; v <= r; ++v) es.emplace_back(0, v);
  return Graph::from_edges(r + 1, es);
}

/// jK2; 0K2 is the empty graph.
inline Graph matching_graph(int j) {
  if (j < 0) throw InvalidArgument("jK2 requires j >= 0");
  std::vector<Edge> es;
  for (Vertex i = 0; i < j; ++i) es.emplace_back(2 * i, 2 * i + 1);
  return Graph::from_edges(2 * j, es);
}

/// Path on n vertices.
inline Graph path_graph(int n) {
  if (n < 1) throw InvalidArgument("P(n) requires n >= 1");
  std::vector<Edge> es;
  for (Vertex v = 0; v + 1 < n; ++v) es.emplace_back(v, v + 1);
  return Graph::from_edges(n, es);
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw InvalidArgument("C(n) requires n >= 3");
  std::vector<Edge> es;
  for (Vertex v = 0; v < n; ++v) es.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, es);
}

inline Graph complement(const Graph& g) {
  std::vector<Edge> es;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v = u + 1; v < g.order(); ++v)
      if (!g.adjacent(u, v)) es.emplace_back(u, v);
  return Graph::from_edges(g.order(), es);
}

// Components.

enum class ComponentKind {
  kIsolated,  // single vertex, no edges
  kEdge,      // K2
  kStar,      // S(r), r >= 2
  kTree,      // acyclic, not a star (diameter >= 3)
  kCyclic,
};

inline const char* to_string(ComponentKind k) {
  switch (k) {
    case ComponentKind::kIsolated: return "isolated";
    case ComponentKind::kEdge: return "K2";
    case ComponentKind::kStar: return "star";
    case ComponentKind::kTree: return "non-star tree";
    case ComponentKind::kCyclic: return "cyclic";
  }
  return "?";
}

struct Component {
  Graph graph;
  std::vector<Vertex> vertices;  // in the parent graph, ascending
  ComponentKind kind = ComponentKind::kIsolated;
  int star_size = 0;  // r for kEdge (1) and kStar; 0 otherwise

  bool is_odd_star() const {
    return (kind == ComponentKind::kEdge || kind == ComponentKind::kStar) && star_size % 2 == 1;
  }
};

/// Connected components in order of their smallest vertex, each tagged
/// with exactly one kind.
inline std::vector<Component> components(const Graph& g) {
  std::vector<Component> out;
  std::vector<bool> seen(g.order(), false);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> verts{s};
    seen[s] = true;
    for (std::size_t head = 0; head < verts.size(); ++head) {
      for (Vertex w : g.neighbors(verts[head])) {
        if (!seen[w]) {
          seen[w] = true;
          verts.push_back(w);
        }
      }
    }
    std::sort(verts.begin(), verts.end());
    Component c;
    c.graph = g.induced(verts);
    c.vertices = std::move(verts);
    const int n = c.graph.order();
    const int m = c.graph.edge_count();
    if (m == 0) {
      c.kind = ComponentKind::kIsolated;
    } else if (m >= n) {
      c.kind = ComponentKind::kCyclic;
    } else if (m == 1) {
      c.kind = ComponentKind::kEdge;
      c.star_size = 1;
    } else {
      bool has_centre = false;
      for (Vertex v = 0; v < n; ++v) has_centre = has_centre || c.graph.degree(v) == n - 1;
      c.kind = has_centre ? ComponentKind::kStar : ComponentKind::kTree;
      c.star_size = has_centre ? m : 0;
    }
    out.push_back(std::move(c));
  }
  return out;
}

inline bool is_forest(const Graph& g) {
  for (const Component& c : components(g)) {
    if (c.kind == ComponentKind::kCyclic) return false;
  }
  return true;
}

/// True iff g has at least one edge and every non-isolated component is K2.
inline bool is_matching(const Graph& g) {
  if (g.edge_count() == 0) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) > 1) return false;
  }
  return true;
}

inline bool has_k2_component(const Graph& g) {
  for (const Component& c : components(g)) {
    if (c.kind == ComponentKind::kEdge) return true;
  }
  return false;
}

}  // namespace ramsey
