#pragma once

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ramsey/canonical.hpp"
#include "ramsey/embedding.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

/// Three-valued outcome of a bounded search.
enum class Answer { kNo, kYes, kUnknown };

inline const char* to_string(Answer a) {
  switch (a) {
    case Answer::kNo: return "false";
    case Answer::kYes: return "true";
    case Answer::kUnknown: return "unknown";
  }
  return "?";
}

enum class Color : std::uint8_t { kRed, kBlue, kUnassigned };

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

/// Red/blue assignment on the edge set of a host graph.
struct EdgeColoring {
  Graph host;
  std::vector<Edge> edges;  // host.edges() order
  std::vector<Color> colors;

  static EdgeColoring blank(const Graph& host) {
    EdgeColoring c;
    c.host = host;
    c.edges = host.edges();
    c.colors.assign(c.edges.size(), Color::kUnassigned);
    return c;
  }

  bool is_total() const {
    return std::none_of(colors.begin(), colors.end(),
                        [](Color c) { return c == Color::kUnassigned; });
  }

  Color color_of(Edge e) const {
    auto it = std::lower_bound(edges.begin(), edges.end(), e);
    if (it == edges.end() || *it != e) throw InvalidArgument("edge not in host");
    return colors[static_cast<std::size_t>(it - edges.begin())];
  }

  void set(Edge e, Color c) {
    auto it = std::lower_bound(edges.begin(), edges.end(), e);
    if (it == edges.end() || *it != e) throw InvalidArgument("edge not in host");
    colors[static_cast<std::size_t>(it - edges.begin())] = c;
  }

  /// Spanning subgraph of the host formed by one colour class.
  Graph color_class(Color c) const {
    std::vector<Edge> keep;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (colors[i] == c) keep.push_back(edges[i]);
    }
    return Graph::from_edges(host.order(), keep);
  }

  EdgeColoring swapped() const {
    EdgeColoring out = *this;
    for (Color& c : out.colors) {
      if (c == Color::kRed) c = Color::kBlue;
      else if (c == Color::kBlue) c = Color::kRed;
    }
    return out;
  }

  /// One character per edge in edge order: R, B or '.'.
  std::string code() const {
    std::string s;
    for (Color c : colors) s.push_back(c == Color::kRed ? 'R' : c == Color::kBlue ? 'B' : '.');
    return s;
  }
};

/// A total colouring with no red `g` and no blue `h`.
inline bool is_good_coloring(const EdgeColoring& c, const Graph& g, const Graph& h) {
  return c.is_total() && !contains_copy(c.color_class(Color::kRed), g) &&
         !contains_copy(c.color_class(Color::kBlue), h);
}

struct SearchOptions {
  enum class Symmetry { kAuto, kOn, kOff };

  std::uint64_t node_budget = kDefaultNodeBudget;
  // kAuto fixes the first edge red when the two targets are isomorphic.
  Symmetry symmetry = Symmetry::kAuto;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  double seconds = 0.0;

  SearchStats& operator+=(const SearchStats& o) {
    nodes += o.nodes;
    seconds += o.seconds;
    return *this;
  }
};

struct GoodColoringResult {
  std::optional<EdgeColoring> coloring;
  // Search space fully pruned without finding a coloring: F -> (G, H).
  bool exhausted = false;
  SearchStats stats;
};

namespace detail {

inline void check_target(const Graph& t, const char* name) {
  if (t.edge_count() == 0) throw InvalidArgument(std::string(name) + " must have at least one edge");
  if (t.isolated_count() > 0) throw InvalidArgument(std::string(name) + " must not have isolated vertices");
}

// Depth-first search over edges in descending endpoint-degree-sum order,
// Red before Blue. A branch is cut as soon as the colour class just
// extended contains its target through the newly coloured edge.
class ColoringSearch {
 public:
  ColoringSearch(const Graph& host, const PatternMatcher& red_target,
                 const PatternMatcher& blue_target, bool fix_first_red, std::uint64_t budget)
      : red_target_(red_target), blue_target_(blue_target), fix_first_red_(fix_first_red),
        budget_(budget), n_(host.order()) {
    edges_ = host.edges();
    const auto deg = host.degrees();
    std::stable_sort(edges_.begin(), edges_.end(), [&](const Edge& a, const Edge& b) {
      return deg[a.u] + deg[a.v] > deg[b.u] + deg[b.v];
    });
    red_.assign(n_, 0);
    blue_.assign(n_, 0);
    assignment_.assign(edges_.size(), Color::kUnassigned);
  }

  // true: good colouring found; false: exhausted or budget hit.
  bool run() { return dfs(0); }

  bool budget_hit() const { return budget_hit_; }
  std::uint64_t nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Color>& assignment() const { return assignment_; }

 private:
  bool dfs(std::size_t idx) {
    if (idx == edges_.size()) return true;
    const Edge e = edges_[idx];
    const std::uint64_t bu = std::uint64_t{1} << e.u;
    const std::uint64_t bv = std::uint64_t{1} << e.v;
    for (Color c : {Color::kRed, Color::kBlue}) {
      if (c == Color::kBlue && idx == 0 && fix_first_red_) break;
      if (++nodes_ > budget_) {
        budget_hit_ = true;
        return false;
      }
      auto& rows = c == Color::kRed ? red_ : blue_;
      const PatternMatcher& target = c == Color::kRed ? red_target_ : blue_target_;
      rows[e.u] |= bv;
      rows[e.v] |= bu;
      const bool closes = target.contains_through(rows, e);
      if (!closes) {
        assignment_[idx] = c;
        if (dfs(idx + 1)) return true;
        assignment_[idx] = Color::kUnassigned;
      }
      rows[e.u] &= ~bv;
      rows[e.v] &= ~bu;
      if (budget_hit_) return false;
    }
    return false;
  }

  const PatternMatcher& red_target_;
  const PatternMatcher& blue_target_;
  bool fix_first_red_;
  std::uint64_t budget_;
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::uint64_t> red_;
  std::vector<std::uint64_t> blue_;
  std::vector<Color> assignment_;
  std::uint64_t nodes_ = 0;
  bool budget_hit_ = false;
};

}  // namespace detail

/// Searches for a good colouring of `f` for (g, h).
///
/// Isolated vertices of `f` are ignored; the returned colouring is on `f`
/// itself. Hitting the node budget yields neither a colouring nor
/// `exhausted`.
inline GoodColoringResult find_good_coloring(const Graph& f, const Graph& g, const Graph& h,
                                             const SearchOptions& opts = {}) {
  detail::check_target(g, "G");
  detail::check_target(h, "H");
  const auto t0 = std::chrono::steady_clock::now();

  const std::vector<Vertex> keep = f.support();
  if (static_cast<int>(keep.size()) > kSearchVertexCap) {
    throw InvalidArgument("host exceeds the " + std::to_string(kSearchVertexCap) +
                          "-vertex search cap after removing isolated vertices");
  }
  const Graph core = f.induced(keep);

  bool fix_first_red = false;
  switch (opts.symmetry) {
    case SearchOptions::Symmetry::kOn:
      if (!isomorphic(g, h)) throw InvalidArgument("colour-swap symmetry needs isomorphic targets");
      fix_first_red = true;
      break;
    case SearchOptions::Symmetry::kOff: break;
    case SearchOptions::Symmetry::kAuto: fix_first_red = isomorphic(g, h); break;
  }

  const PatternMatcher red_target(g);
  const PatternMatcher blue_target(h);
  detail::ColoringSearch search(core, red_target, blue_target, fix_first_red, opts.node_budget);
  const bool found = search.run();

  GoodColoringResult result;
  result.stats.nodes = search.nodes();
  if (found) {
    EdgeColoring coloring = EdgeColoring::blank(f);
    for (std::size_t i = 0; i < search.edges().size(); ++i) {
      const Edge e = search.edges()[i];
      coloring.set(Edge(keep[e.u], keep[e.v]), search.assignment()[i]);
    }
    result.coloring = std::move(coloring);
  } else {
    result.exhausted = !search.budget_hit();
  }
  result.stats.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return result;
}

struct ArrowVerdict {
  Answer answer = Answer::kUnknown;
  std::optional<EdgeColoring> witness;  // present iff answer == kNo
  SearchStats stats;

  bool arrows() const { return answer == Answer::kYes; }
};

/// F -> (G, H).
inline ArrowVerdict arrows(const Graph& f, const Graph& g, const Graph& h,
                           const SearchOptions& opts = {}) {
  GoodColoringResult r = find_good_coloring(f, g, h, opts);
  ArrowVerdict v;
  v.stats = r.stats;
  if (r.coloring) {
    v.answer = Answer::kNo;
    v.witness = std::move(r.coloring);
  } else {
    v.answer = r.exhausted ? Answer::kYes : Answer::kUnknown;
  }
  return v;
}

struct EdgeWitness {
  Edge edge;
  Answer arrows_without = Answer::kUnknown;  // F - e -> (G, H)
  std::optional<EdgeColoring> coloring;      // good colouring of F - e
};

struct MinimalityReport {
  Answer is_ramsey = Answer::kUnknown;
  Answer is_minimal = Answer::kUnknown;
  std::vector<EdgeWitness> per_edge;
  SearchStats stats;
};

/// Ramsey-minimality of `f` for (g, h): f arrows and no f - e does.
///
/// With `stop_on_failure`, per-edge checks stop at the first edge whose
/// deletion still arrows.
inline MinimalityReport is_ramsey_minimal(const Graph& f, const Graph& g, const Graph& h,
                                          const SearchOptions& opts = {},
                                          bool stop_on_failure = false) {
  MinimalityReport report;
  const ArrowVerdict whole = arrows(f, g, h, opts);
  report.stats += whole.stats;
  report.is_ramsey = whole.answer;
  if (whole.answer != Answer::kYes) {
    report.is_minimal = whole.answer;
    return report;
  }
  bool all_good = true;
  for (const Edge& e : f.edges()) {
    GoodColoringResult r = find_good_coloring(f.without_edge(e), g, h, opts);
    report.stats += r.stats;
    EdgeWitness w;
    w.edge = e;
    if (r.coloring) {
      w.arrows_without = Answer::kNo;
      w.coloring = std::move(r.coloring);
    } else {
      w.arrows_without = r.exhausted ? Answer::kYes : Answer::kUnknown;
      all_good = false;
    }
    const bool still_arrows = w.arrows_without == Answer::kYes;
    report.per_edge.push_back(std::move(w));
    if (still_arrows && stop_on_failure) break;
  }
  if (all_good) {
    report.is_minimal = Answer::kYes;
  } else {
    const bool decided_no = std::any_of(report.per_edge.begin(), report.per_edge.end(),
                                        [](const EdgeWitness& w) { return w.arrows_without == Answer::kYes; });
    report.is_minimal = decided_no ? Answer::kNo : Answer::kUnknown;
  }
  return report;
}

struct RamseyNumberResult {
  std::optional<int> value;
  bool unknown = false;  // some K_N below the answer was undecided
  SearchStats stats;
};

/// Smallest N <= cap with K_N -> (g, h).
inline RamseyNumberResult ramsey_number_complete(const Graph& g, const Graph& h, int cap,
                                                 const SearchOptions& opts = {}) {
  if (cap < 2) throw InvalidArgument("cap must be >= 2");
  if (cap > kSearchVertexCap) throw InvalidArgument("cap exceeds the search vertex cap");
  RamseyNumberResult out;
  for (int n = 2; n <= cap; ++n) {
    const ArrowVerdict v = arrows(complete_graph(n), g, h, opts);
    out.stats += v.stats;
    if (v.answer == Answer::kUnknown) {
      out.unknown = true;
      return out;
    }
    if (v.answer == Answer::kYes) {
      out.value = n;
      return out;
    }
  }
  return out;
}

}  // namespace ramsey
