#include <gtest/gtest.h>

#include <set>
#include <string>

#include "oracles.hpp"
#include "ramsey/enumerator.hpp"
#include "ramsey/graph_spec.hpp"

using namespace ramsey;

namespace {

std::vector<std::string> graph6_of(const MinimalCatalog& cat) {
  std::vector<std::string> out;
  for (const CatalogMember& m : cat.members) out.push_back(m.graph6);
  return out;
}

std::set<std::string> canonical_set(const std::vector<Graph>& graphs) {
  std::set<std::string> out;
  for (const Graph& g : graphs) out.insert(emit_graph6(canonical_graph(g)));
  return out;
}

void expect_invariants(const MinimalCatalog& cat) {
  EXPECT_TRUE(cat.complete);
  EXPECT_TRUE(is_antichain(cat));
  EXPECT_TRUE(witnesses_verify(cat));
  for (const CatalogMember& m : cat.members) {
    EXPECT_TRUE(contains_copy(m.graph, cat.g));
    EXPECT_TRUE(contains_copy(m.graph, cat.h));
    EXPECT_EQ(m.graph.isolated_count(), 0);
  }
}

}  // namespace

TEST(EnumerateGraphs, CountsMatchGenerateAndDedupe) {
  for (int n = 2; n <= 6; ++n) {
    std::vector<Graph> exact_n;
    enumerate_graphs({n, n * (n - 1) / 2}, [&](const Graph& g) {
      if (g.order() == n) exact_n.push_back(g);
    });
    const auto naive = oracle::naive_classes(n);
    EXPECT_EQ(exact_n.size(), naive.size()) << "n=" << n;
    EXPECT_EQ(canonical_set(exact_n), canonical_set(naive)) << "n=" << n;
  }
}

TEST(EnumerateGraphs, KnownSequenceWithoutIsolatedVertices) {
  const int expected[] = {1, 2, 7, 23, 122, 888};
  for (int n = 2; n <= 7; ++n) {
    int count = 0;
    enumerate_graphs({n, n * (n - 1) / 2}, [&](const Graph& g) { count += g.order() == n; });
    EXPECT_EQ(count, expected[n - 2]) << "n=" << n;
  }
}

TEST(EnumerateGraphs, SmallBounds) {
  const auto two = enumerate_graphs({2, 1});
  ASSERT_EQ(two.size(), 1u);
  EXPECT_EQ(two[0], complete_graph(2));
  // Four vertices, no isolated vertex: K2, P3, K3, 2K2, and 7 on four vertices.
  EXPECT_EQ(enumerate_graphs({4, 6}).size(), 10u);
  EXPECT_THROW(enumerate_graphs({kEnumerationVertexCap + 1, 3}), InvalidArgument);
  EXPECT_THROW(enumerate_graphs({4, -1}), InvalidArgument);
}

TEST(EnumerateGraphs, EveryClassOnce) {
  const auto graphs = enumerate_graphs({7, 8});
  EXPECT_EQ(canonical_set(graphs).size(), graphs.size());
  for (const Graph& g : graphs) {
    EXPECT_EQ(g.isolated_count(), 0);
    EXPECT_LE(g.edge_count(), 8);
  }
}

TEST(Catalog, TwoMatchings) {
  const MinimalCatalog cat = enumerate_ramsey_minimal(matching_graph(2), matching_graph(2), {8, 10});
  EXPECT_EQ(graph6_of(cat), (std::vector<std::string>{"E@Q?", "DLo"}));
  EXPECT_TRUE(isomorphic(cat.members[0].graph, matching_graph(3)));
  EXPECT_TRUE(isomorphic(cat.members[1].graph, cycle_graph(5)));
  expect_invariants(cat);
}

TEST(Catalog, TwoMatchingsMatchesNaiveOracle) {
  const Graph two = matching_graph(2);
  std::set<std::string> naive;
  enumerate_graphs({8, 10}, [&](const Graph& f) {
    if (!oracle::naive_arrows(f, two, two)) return;
    for (const Edge& e : f.edges()) {
      if (oracle::naive_arrows(f.without_edge(e), two, two)) return;
    }
    naive.insert(emit_graph6(canonical_graph(f)));
  });
  const auto found = graph6_of(enumerate_ramsey_minimal(two, two, {8, 10}));
  EXPECT_EQ(std::set<std::string>(found.begin(), found.end()), naive);
}

TEST(Catalog, SingleEdges) {
  for (SearchBounds b : {SearchBounds{2, 1}, SearchBounds{4, 4}, SearchBounds{6, 6}}) {
    const MinimalCatalog cat = enumerate_ramsey_minimal(complete_graph(2), complete_graph(2), b);
    ASSERT_EQ(cat.members.size(), 1u);
    EXPECT_EQ(cat.members[0].graph, complete_graph(2));
    expect_invariants(cat);
  }
}

TEST(Catalog, TrianglesContainK6) {
  const MinimalCatalog cat = enumerate_ramsey_minimal(complete_graph(3), complete_graph(3), {7, 21});
  EXPECT_EQ(graph6_of(cat), (std::vector<std::string>{"E~~w"}));
  expect_invariants(cat);
}

TEST(Catalog, BoundMonotone) {
  const Graph two = matching_graph(2);
  const auto small = graph6_of(enumerate_ramsey_minimal(two, two, {5, 5}));
  const auto large = graph6_of(enumerate_ramsey_minimal(two, two, {8, 10}));
  EXPECT_EQ(small, (std::vector<std::string>{"DLo"}));
  for (const std::string& s : small) EXPECT_NE(std::find(large.begin(), large.end(), s), large.end());
}

TEST(Catalog, TwoAgainstThreeMatchingStabilises) {
  // Frozen after a naive-oracle run at (8, 10) and (9, 11): 4K2, C7 and a
  // 7-vertex graph with 8 edges.
  const std::vector<std::string> frozen{"G?CaC?", "F@Ue?", "F@Q^?"};
  const Graph g = matching_graph(2), h = matching_graph(3);
  const MinimalCatalog a = enumerate_ramsey_minimal(g, h, {8, 10});
  const MinimalCatalog b = enumerate_ramsey_minimal(g, h, {9, 11});
  EXPECT_EQ(graph6_of(a), frozen);
  EXPECT_EQ(graph6_of(b), frozen);
  EXPECT_TRUE(isomorphic(a.members[0].graph, matching_graph(4)));
  EXPECT_TRUE(isomorphic(a.members[1].graph, cycle_graph(7)));
  expect_invariants(a);
  expect_invariants(b);
}

TEST(Catalog, BudgetLimitedIsFlagged) {
  SearchBounds b{6, 15};
  b.node_budget = 5;
  const MinimalCatalog cat = enumerate_ramsey_minimal(complete_graph(3), complete_graph(3), b);
  EXPECT_FALSE(cat.complete);
  EXPECT_GT(cat.undecided, 0);
}

TEST(DensityAudit, Examples) {
  const Graph k3 = complete_graph(3);
  const DensityAudit pass = catalog_density_audit(std::vector<Graph>{complete_graph(6)}, k3, k3);
  EXPECT_TRUE(pass.passed);
  EXPECT_EQ(pass.threshold, Rational(2));
  EXPECT_EQ(pass.entries.at(0).rho, Rational(5, 2));

  EXPECT_TRUE(catalog_density_audit(std::vector<Graph>{}, k3, k3).passed);

  const DensityAudit fake = catalog_density_audit(std::vector<Graph>{cycle_graph(5)}, k3, k3);
  EXPECT_FALSE(fake.passed);
  EXPECT_FALSE(fake.entries.at(0).contains_targets);
  EXPECT_EQ(fake.falsifications.size(), 1u);

  EXPECT_THROW(catalog_density_audit(std::vector<Graph>{}, path_graph(3), k3), InvalidArgument);
}

TEST(DensityAudit, ArrowingGraphsAboveTriangleThreshold) {
  // Every graph up to 7 vertices that arrows (K3, K3) has rho > 2.
  const Graph k3 = complete_graph(3);
  const Rational d = m2_pair(k3, k3).value;
  int arrowing = 0;
  enumerate_graphs({7, 21}, [&](const Graph& f) {
    if (!arrows(f, k3, k3).arrows()) return;
    ++arrowing;
    EXPECT_GT(rho(f).value, d) << emit_graph6(f);
  });
  EXPECT_GT(arrowing, 0);
}
