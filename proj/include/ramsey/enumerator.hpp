#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "ramsey/arrowing.hpp"
#include "ramsey/canonical.hpp"
#include "ramsey/density.hpp"
#include "ramsey/embedding.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/graph6.hpp"

namespace ramsey {

/// Exhaustive enumeration stays at desk scale.
inline constexpr int kEnumerationVertexCap = 12;

struct SearchBounds {
  int max_vertices = 0;
  int max_edges = 0;
  std::uint64_t node_budget = kDefaultNodeBudget;  // per arrowing call

  void validate() const {
    if (max_vertices < 0 || max_edges < 0) throw InvalidArgument("bounds must be non-negative");
    if (max_vertices > kEnumerationVertexCap) {
      throw InvalidArgument("max_vertices exceeds the enumeration cap of " +
                            std::to_string(kEnumerationVertexCap));
    }
  }
};

namespace detail {

// Canonical augmentation on a fixed vertex count: a child P + e is kept iff
// e lies in the automorphism orbit of the child's canonical deletion edge
// (the edge whose canonical image is lexicographically last). Children of
// one parent are deduplicated by certificate.
class OrderlyGenerator {
 public:
  OrderlyGenerator(int order, int max_edges, const std::function<void(const Graph&)>& visit)
      : order_(order), max_edges_(max_edges), visit_(visit) {}

  void run() { grow(Graph(order_)); }

 private:
  void grow(const Graph& parent) {
    visit_(parent);
    if (parent.edge_count() >= max_edges_) return;
    std::set<std::string> children;
    for (Vertex u = 0; u < order_; ++u) {
      for (Vertex v = u + 1; v < order_; ++v) {
        if (parent.adjacent(u, v)) continue;
        const Edge added(u, v);
        Graph child = parent.with_edge(added);
        const CanonicalForm cf = canonical_form(child);
        if (!is_canonical_deletion(child, cf, added)) continue;
        if (!children.insert(cf.certificate).second) continue;
        grow(child);
      }
    }
  }

  static std::string marked(const Graph& g, Edge e) {
    std::vector<int> colours(g.order(), 0);
    colours[e.u] = 1;
    colours[e.v] = 1;
    return canonical_form(g, colours).certificate;
  }

  bool is_canonical_deletion(const Graph& child, const CanonicalForm& cf, Edge added) const {
    Edge last;
    bool have = false;
    Edge last_image;
    for (const Edge& e : child.edges()) {
      const Edge image(cf.labeling[e.u], cf.labeling[e.v]);
      if (!have || std::pair(image.v, image.u) > std::pair(last_image.v, last_image.u)) {
        have = true;
        last = e;
        last_image = image;
      }
    }
    if (last == added) return true;
    return marked(child, last) == marked(child, added);
  }

  int order_;
  int max_edges_;
  const std::function<void(const Graph&)>& visit_;
};

}  // namespace detail

/// Calls `visit` once per isomorphism class of graphs with 1..max_vertices
/// vertices, at most max_edges edges and no isolated vertices, in order of
/// increasing vertex count.
inline void enumerate_graphs(const SearchBounds& bounds,
                             const std::function<void(const Graph&)>& visit) {
  bounds.validate();
  for (int n = 2; n <= bounds.max_vertices; ++n) {
    // A graph without isolated vertices on n vertices has >= n/2 edges.
    if ((n + 1) / 2 > bounds.max_edges) break;
    const std::function<void(const Graph&)> keep = [&](const Graph& g) {
      if (g.isolated_count() == 0) visit(g);
    };
    detail::OrderlyGenerator(n, bounds.max_edges, keep).run();
  }
}

inline std::vector<Graph> enumerate_graphs(const SearchBounds& bounds) {
  std::vector<Graph> out;
  enumerate_graphs(bounds, [&](const Graph& g) { out.push_back(g); });
  return out;
}

struct CatalogMember {
  Graph graph;  // canonical representative
  std::string graph6;
  MinimalityReport report;
};

struct MinimalCatalog {
  Graph g;
  Graph h;
  SearchBounds bounds;
  std::vector<CatalogMember> members;
  bool complete = true;       // false when some arrowing call hit its budget
  int undecided = 0;          // candidates left undecided by the budget
  std::uint64_t candidates = 0;
  SearchStats stats;
};

/// All Ramsey-minimal graphs for (g, h) within `bounds`, one per
/// isomorphism class, sorted by (edges, vertices, graph6).
inline MinimalCatalog enumerate_ramsey_minimal(const Graph& g, const Graph& h,
                                               const SearchBounds& bounds) {
  bounds.validate();
  detail::check_target(g, "G");
  detail::check_target(h, "H");
  MinimalCatalog cat{g, h, bounds, {}, true, 0, 0, {}};
  const PatternMatcher has_g(g, false);
  const PatternMatcher has_h(h, false);
  SearchOptions opts;
  opts.node_budget = bounds.node_budget;
  const int min_edges = std::max(g.edge_count(), h.edge_count());

  enumerate_graphs(bounds, [&](const Graph& f) {
    ++cat.candidates;
    if (f.edge_count() < min_edges) return;
    std::vector<std::uint64_t> rows(f.order());
    for (Vertex v = 0; v < f.order(); ++v) rows[v] = f.row64(v);
    if (!has_g.contains(rows) || !has_h.contains(rows)) return;
    MinimalityReport rep = is_ramsey_minimal(f, g, h, opts, /*stop_on_failure=*/true);
    cat.stats += rep.stats;
    if (rep.is_minimal == Answer::kUnknown) {
      cat.complete = false;
      ++cat.undecided;
      return;
    }
    if (rep.is_minimal == Answer::kYes) {
      const Graph canon = canonical_graph(f);
      // Re-key witnesses onto the canonical labelling.
      cat.members.push_back({canon, emit_graph6(canon), is_ramsey_minimal(canon, g, h, opts)});
    }
  });
  std::sort(cat.members.begin(), cat.members.end(), [](const CatalogMember& a, const CatalogMember& b) {
    return std::tuple(a.graph.edge_count(), a.graph.order(), a.graph6) <
           std::tuple(b.graph.edge_count(), b.graph.order(), b.graph6);
  });
  return cat;
}

/// No member is isomorphic to a subgraph of another member.
inline bool is_antichain(const MinimalCatalog& cat) {
  for (std::size_t i = 0; i < cat.members.size(); ++i) {
    for (std::size_t j = 0; j < cat.members.size(); ++j) {
      if (i != j && contains_copy(cat.members[j].graph, cat.members[i].graph)) return false;
    }
  }
  return true;
}

/// Every stored per-edge colouring is a good colouring of F - e.
inline bool witnesses_verify(const MinimalCatalog& cat) {
  for (const CatalogMember& m : cat.members) {
    if (m.report.is_minimal != Answer::kYes) return false;
    if (m.report.per_edge.size() != static_cast<std::size_t>(m.graph.edge_count())) return false;
    for (const EdgeWitness& w : m.report.per_edge) {
      if (!w.coloring) return false;
      if (!(w.coloring->host == m.graph.without_edge(w.edge))) return false;
      if (!is_good_coloring(*w.coloring, cat.g, cat.h)) return false;
    }
  }
  return true;
}

struct DensityAuditEntry {
  std::string graph6;
  bool contains_targets = false;
  Rational rho;
  bool exceeds = false;  // rho(F) > m2(G, H)
};

struct DensityAudit {
  Rational threshold;  // m2(G, H)
  std::vector<DensityAuditEntry> entries;
  bool passed = true;
  std::vector<std::string> falsifications;
};

/// Checks rho(F) > m2(G, H) for every member graph. Members that do not
/// contain both targets are rejected before the density comparison.
inline DensityAudit catalog_density_audit(const std::vector<Graph>& members, const Graph& g,
                                          const Graph& h) {
  DensityAudit audit;
  audit.threshold = m2_pair(g, h).value;
  for (const Graph& f : members) {
    DensityAuditEntry e;
    e.graph6 = emit_graph6(f);
    e.contains_targets = contains_copy(f, g).has_value() && contains_copy(f, h).has_value();
    if (!e.contains_targets) {
      audit.passed = false;
      audit.falsifications.push_back(e.graph6 + ": does not contain both targets");
    } else {
      e.rho = rho(f).value;
      e.exceeds = e.rho > audit.threshold;
      if (!e.exceeds) {
        audit.passed = false;
        audit.falsifications.push_back(e.graph6 + ": rho = " + e.rho.to_string() +
                                       " <= m2(G,H) = " + audit.threshold.to_string());
      }
    }
    audit.entries.push_back(std::move(e));
  }
  return audit;
}

inline DensityAudit catalog_density_audit(const MinimalCatalog& cat) {
  std::vector<Graph> members;
  for (const CatalogMember& m : cat.members) members.push_back(m.graph);
  return catalog_density_audit(members, cat.g, cat.h);
}

}  // namespace ramsey
