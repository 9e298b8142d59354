#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

// Ramsey-finiteness of a target pair (G, H), decided from the known
// classification results. Rule identifiers:
//
//   R1 Finite    one target is a matching
//   R2 Infinite  both targets contain a cycle
//   R3 Infinite  exactly one target contains a cycle
//   R4 Infinite  forests with a non-star tree component
//   R5 Finite    star forests with one star each, both odd
//   R6 Infinite  star forests outside every finite family
//   R7 Finite    the explicit two-star + matching family with certified k
//   R8 Unknown   the two-or-more-star family whose matching threshold is open

/// A star forest  S(m_1) + ... + S(m_s) + mK2  with m_1 >= ... >= m_s >= 2.
struct StarForestShape {
  std::vector<int> stars;  // descending, each >= 2
  int matching_count = 0;

  int s() const { return static_cast<int>(stars.size()); }
  friend bool operator==(const StarForestShape&, const StarForestShape&) = default;
};

/// Present iff every component of `f` is a star (K2 counts as S(1)).
/// Isolated vertices are ignored.
inline std::optional<StarForestShape> shape_of(const Graph& f) {
  StarForestShape shape;
  for (const Component& c : components(f)) {
    switch (c.kind) {
      case ComponentKind::kIsolated: break;
      case ComponentKind::kEdge: ++shape.matching_count; break;
      case ComponentKind::kStar: shape.stars.push_back(c.star_size); break;
      case ComponentKind::kTree:
      case ComponentKind::kCyclic: return std::nullopt;
    }
  }
  std::sort(shape.stars.begin(), shape.stars.end(), std::greater<>());
  return shape;
}

inline Graph build(const StarForestShape& shape) {
  Graph g(0);
  for (int r : shape.stars) g = disjoint_union(g, star_graph(r));
  return disjoint_union(g, matching_graph(shape.matching_count));
}

/// S(r) + mK2 as text, e.g. "S5+S2+122K2".
inline std::string to_string(const StarForestShape& shape) {
  std::string out;
  for (int r : shape.stars) out += (out.empty() ? "" : "+") + ("S" + std::to_string(r));
  if (shape.matching_count > 0) {
    out += (out.empty() ? "" : "+") + std::to_string(shape.matching_count) + "K2";
  }
  return out;
}

enum class Verdict { kFinite, kInfinite, kUnknown };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kFinite: return "finite";
    case Verdict::kInfinite: return "infinite";
    case Verdict::kUnknown: return "unknown";
  }
  return "?";
}

struct TrailEntry {
  std::string rule;
  std::string citation;
  std::string reason;
};

struct Classification {
  Verdict verdict = Verdict::kUnknown;
  std::vector<TrailEntry> trail;
  std::string condition;  // open inequality for Unknown verdicts

  const TrailEntry& deciding() const { return trail.back(); }
};

namespace citations {
inline constexpr const char* kMatching =
    "Burr-Erdos-Faudree-Schelp 1978: if one target is a matching, the pair is Ramsey-finite";
inline constexpr const char* kCyclicCyclic =
    "cyclic-cyclic theorem (via the asymmetric random Ramsey threshold, Kohayakawa-Kreuter "
    "conjecture as resolved by Mousset-Nenadov-Samotij, Kuperwasser-Samotij, "
    "Christoph-Martinsson-Steiner-Wigderson): both targets contain a cycle, Ramsey-infinite";
inline constexpr const char* kLuczak =
    "Luczak 1994: a forest that is not a matching against a graph with a cycle is Ramsey-infinite";
inline constexpr const char* kForestNonStar =
    "Burr-Erdos-Faudree-Rousseau-Schelp 1982: forests, neither a matching, one with a non-star "
    "component, are Ramsey-infinite";
inline constexpr const char* kStarForests =
    "Burr-Erdos-Faudree-Rousseau-Schelp 1981 (star forests): without K2 components the pair is "
    "Ramsey-finite iff both are odd stars";
inline constexpr const char* kFaudree =
    "Faudree 1991, Theorem 1: classification of Ramsey-finite forest pairs";
inline constexpr const char* kStarForestFamily =
    "Burr-Erdos-Faudree-Rousseau-Schelp 1981 (star forests), Theorem 11: "
    "(S(n)+S(s), S(l)+kK2) is Ramsey-finite for odd n, l with n >= l+s-1 and k >= (n+2l+s-2)^2+1";
inline constexpr const char* kMatchingExtension =
    "matching extension: Ramsey-finiteness is preserved by adjoining disjoint K2 components "
    "(Faudree 1991, iterated)";
}  // namespace citations

namespace detail {

inline Classification decide(Verdict v, std::vector<TrailEntry> trail, std::string condition = {}) {
  return Classification{v, std::move(trail), std::move(condition)};
}

inline void check_classify_input(const Graph& g, const char* name) {
  if (g.edge_count() == 0) throw InvalidArgument(std::string(name) + " must have at least one edge");
  if (g.isolated_count() > 0) throw InvalidArgument(std::string(name) + " must not have isolated vertices");
}

inline bool has_nonstar_tree(const Graph& g) {
  for (const Component& c : components(g)) {
    if (c.kind == ComponentKind::kTree) return true;
  }
  return false;
}

/// Explicit lower bound on k for (S(n)+S(s), S(l)+kK2).
inline long long star_family_bound(long long n, long long l, long long s) {
  const long long base = n + 2 * l + s - 2;
  return base * base + 1;
}

// Star-forest stage. `first` plays F1 (s stars), `second` plays F2 (t stars).
struct Orientation {
  StarForestShape first;
  StarForestShape second;
  bool swapped = false;  // first is H
};

inline std::string oriented(const Orientation& o) {
  return std::string(o.swapped ? "(F1, F2) = (H, G)" : "(F1, F2) = (G, H)") + " with F1 = " +
         to_string(o.first) + ", F2 = " + to_string(o.second);
}

inline bool odd(int x) { return x % 2 != 0; }

// Faudree case (iii) shape: s >= 2, t = 1, m1 and n1 odd, m1 >= n1 + m2 - 1.
inline bool family_iii_shape(const Orientation& o) {
  const auto& a = o.first.stars;
  const auto& b = o.second.stars;
  return a.size() >= 2 && b.size() == 1 && odd(a[0]) && odd(b[0]) && a[0] >= b[0] + a[1] - 1;
}

inline Classification classify_star_forests(const StarForestShape& sg, const StarForestShape& sh) {
  std::vector<Orientation> orientations;
  if (sg.s() >= sh.s()) orientations.push_back({sg, sh, false});
  if (sh.s() >= sg.s()) orientations.push_back({sh, sg, true});

  // R5: one odd star on each side, any matchings.
  for (const Orientation& o : orientations) {
    if (o.first.s() == 1 && o.second.s() == 1 && odd(o.first.stars[0]) && odd(o.second.stars[0])) {
      std::vector<TrailEntry> trail;
      const bool plain = o.first.matching_count == 0 && o.second.matching_count == 0;
      trail.push_back({"R5", plain ? citations::kStarForests : citations::kFaudree,
                       "one star on each side, S(" + std::to_string(o.first.stars[0]) + ") and S(" +
                           std::to_string(o.second.stars[0]) + "), both odd" +
                           (plain ? "" : ", plus matchings (Faudree case (ii))")});
      return decide(Verdict::kFinite, std::move(trail));
    }
  }

  // Without K2 components the odd-star case above is the only finite one.
  if (sg.matching_count == 0 && sh.matching_count == 0) {
    return decide(Verdict::kInfinite,
                  {{"R6", citations::kStarForests,
                    "star forests without K2 components that are not both single odd stars"}});
  }

  std::vector<const Orientation*> family;
  for (const Orientation& o : orientations) {
    if (family_iii_shape(o)) family.push_back(&o);
  }
  if (family.empty()) {
    std::string why;
    const auto& o = orientations.front();
    if (o.second.s() >= 2) {
      why = "both sides have at least two stars";
    } else if (!odd(o.first.stars[0]) || !odd(o.second.stars[0])) {
      why = "largest star sizes m1 = " + std::to_string(o.first.stars[0]) + ", n1 = " +
            std::to_string(o.second.stars[0]) + " are not both odd";
    } else {
      why = "m1 = " + std::to_string(o.first.stars[0]) + " < n1 + m2 - 1 = " +
            std::to_string(o.second.stars[0] + o.first.stars[1] - 1);
    }
    return decide(Verdict::kInfinite,
                  {{"R6", citations::kFaudree, "no orientation matches a finite case: " + why}});
  }

  // R7: F1 minus its matching is S(n') + S(s'); F2 = S(l) + kK2 with k
  // above the explicit bound. Extra K2 components on F1 are covered by
  // matching extension.
  for (const Orientation* o : family) {
    if (o->first.s() != 2) continue;
    const long long n = o->first.stars[0];
    const long long s = o->first.stars[1];
    const long long l = o->second.stars[0];
    const long long k = o->second.matching_count;
    const long long bound = star_family_bound(n, l, s);
    if (k < bound) continue;
    std::vector<TrailEntry> trail;
    trail.push_back({"R7", citations::kStarForestFamily,
                     oriented(*o) + ": (" + std::to_string(n) + "+2*" + std::to_string(l) + "+" +
                         std::to_string(s) + "-2)^2+1 = " + std::to_string(bound) +
                         " <= k = " + std::to_string(k)});
    if (o->first.matching_count > 0) {
      trail.back().citation += "; " + std::string(citations::kMatchingExtension);
      trail.back().reason += ", then " + std::to_string(o->first.matching_count) +
                             " K2 component(s) adjoined to F1";
    }
    return decide(Verdict::kFinite, std::move(trail));
  }

  // R8: Faudree case (iii) shape, threshold n0 not certified.
  const Orientation& o = *family.front();
  std::string condition = "n = " + std::to_string(o.second.matching_count) +
                          " >= n0(F1, F2) undetermined for " + oriented(o);
  if (o.first.s() == 2) {
    condition += "; n >= " +
                 std::to_string(star_family_bound(o.first.stars[0], o.second.stars[0],
                                                  o.first.stars[1])) +
                 " would suffice";
  }
  return decide(Verdict::kUnknown,
                {{"R8", citations::kFaudree,
                  "shape matches Faudree case (iii) but its threshold n0 is not determined"}},
                std::move(condition));
}

}  // namespace detail

/// Ramsey-finite / infinite / unknown for (g, h), with the deciding rule.
inline Classification classify(const Graph& g, const Graph& h) {
  detail::check_classify_input(g, "G");
  detail::check_classify_input(h, "H");

  if (is_matching(g) || is_matching(h)) {
    return detail::decide(Verdict::kFinite,
                          {{"R1", citations::kMatching,
                            std::string(is_matching(g) ? "G" : "H") + " is a matching"}});
  }
  const bool g_forest = is_forest(g);
  const bool h_forest = is_forest(h);
  if (!g_forest && !h_forest) {
    return detail::decide(Verdict::kInfinite,
                          {{"R2", citations::kCyclicCyclic, "both G and H contain a cycle"}});
  }
  if (!g_forest || !h_forest) {
    return detail::decide(Verdict::kInfinite,
                          {{"R3", citations::kLuczak,
                            std::string(g_forest ? "G" : "H") +
                                " is a forest but not a matching; the other contains a cycle"}});
  }
  if (detail::has_nonstar_tree(g) || detail::has_nonstar_tree(h)) {
    return detail::decide(Verdict::kInfinite,
                          {{"R4", citations::kForestNonStar,
                            std::string(detail::has_nonstar_tree(g) ? "G" : "H") +
                                " has a component that is not a star"}});
  }
  return detail::classify_star_forests(*shape_of(g), *shape_of(h));
}

/// Raised when adjoining matchings to a finite pair produces an Infinite
/// verdict, which would contradict matching extension.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Classifies (G + l K2, H + m K2) for a pair already classified Finite.
inline Classification matching_extension_check(const Graph& g, const Graph& h, int l, int m) {
  if (l < 0 || m < 0) throw InvalidArgument("l and m must be >= 0");
  const Classification base = classify(g, h);
  if (base.verdict != Verdict::kFinite) {
    throw InvalidArgument("matching_extension_check needs a Finite pair, got " +
                          std::string(to_string(base.verdict)));
  }
  const Graph ge = disjoint_union(g, matching_graph(l));
  const Graph he = disjoint_union(h, matching_graph(m));
  Classification out = classify(ge, he);
  if (out.verdict == Verdict::kInfinite) {
    throw ConsistencyError("matching extension produced an Infinite verdict via " +
                           out.deciding().rule);
  }
  return out;
}

}  // namespace ramsey
