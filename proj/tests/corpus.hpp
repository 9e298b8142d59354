#pragma once

#include <algorithm>
#include <vector>

#include "oracles.hpp"
#include "ramsey/enumerator.hpp"

namespace corpus {

/// Every graph with 1..max_edges edges and no isolated vertices, one per
/// isomorphism class: disjoint unions of connected graphs, the latter taken
/// from the enumerator (a connected graph with m edges has <= m + 1 vertices).
inline std::vector<ramsey::Graph> graphs_up_to_edges(int max_edges) {
  std::vector<ramsey::Graph> connected;
  ramsey::enumerate_graphs({max_edges + 1, max_edges}, [&](const ramsey::Graph& g) {
    if (ramsey::components(g).size() == 1) connected.push_back(g);
  });
  std::stable_sort(connected.begin(), connected.end(),
                   [](const ramsey::Graph& a, const ramsey::Graph& b) { return a.edge_count() < b.edge_count(); });
  std::vector<ramsey::Graph> out;
  oracle::unions_up_to(connected, max_edges, 0, ramsey::Graph(0), out);
  return out;
}

inline std::vector<ramsey::Graph> small_targets() {
  return {ramsey::complete_graph(2), ramsey::matching_graph(2), ramsey::path_graph(3),
          ramsey::complete_graph(3), ramsey::star_graph(3)};
}

}  // namespace corpus
