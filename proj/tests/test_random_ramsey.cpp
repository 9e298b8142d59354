#include <gtest/gtest.h>

#include <cmath>

#include "ramsey/graph_spec.hpp"
#include "ramsey/random_ramsey.hpp"

using namespace ramsey;

namespace {

ExperimentConfig triangles(std::vector<Rational> cs, int samples, std::uint64_t seed) {
  ExperimentConfig cfg;
  cfg.g = complete_graph(3);
  cfg.h = complete_graph(3);
  cfg.ns = {12};
  cfg.cs = std::move(cs);
  cfg.samples = samples;
  cfg.seed = seed;
  return cfg;
}

}  // namespace

TEST(Sampling, ExtremeProbabilities) {
  EXPECT_EQ(sample_gnp(9, 0.0, 1, 0), Graph(9));
  EXPECT_EQ(sample_gnp(9, 1.0, 1, 0), complete_graph(9));
  EXPECT_THROW(sample_gnp(9, 1.5, 1, 0), InvalidArgument);
}

TEST(Sampling, MeanEdgeCount) {
  const int trials = 10000;
  double sum = 0.0;
  for (int s = 0; s < trials; ++s) sum += sample_gnp(10, 0.3, 2024, s).edge_count();
  const double mean = sum / trials;
  const double se = std::sqrt(45 * 0.3 * 0.7 / trials);
  EXPECT_NEAR(mean, 13.5, 3 * se);
}

TEST(Sampling, DeterministicPerStream) {
  EXPECT_EQ(edge_uniforms(7, 12, 3), edge_uniforms(7, 12, 3));
  EXPECT_NE(edge_uniforms(7, 12, 3), edge_uniforms(7, 12, 4));
  EXPECT_NE(edge_uniforms(7, 12, 3), edge_uniforms(8, 12, 3));
  for (double u : edge_uniforms(1, 20, 0)) {
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}

TEST(Sampling, CoupledGraphsAreNested) {
  const auto u = edge_uniforms(3, 15, 0);
  const Graph sparse = gnp_from_uniforms(15, 0.2, u);
  const Graph dense = gnp_from_uniforms(15, 0.6, u);
  for (const Edge& e : sparse.edges()) EXPECT_TRUE(dense.has_edge(e));
}

TEST(Experiment, IndicatorsMonotoneInC) {
  const auto cells = run_experiment(triangles({Rational(1, 5), Rational(1, 2), Rational(1), Rational(2)}, 60, 7));
  ASSERT_EQ(cells.size(), 4u);
  for (int s = 0; s < 60; ++s) {
    for (std::size_t i = 1; i < cells.size(); ++i) {
      const bool lo = cells[i - 1].indicators[s] == Answer::kYes;
      const bool hi = cells[i].indicators[s] == Answer::kYes;
      ASSERT_TRUE(!lo || hi) << "sample " << s;
    }
  }
  for (const CellResult& c : cells) {
    EXPECT_EQ(c.hits + c.misses + c.unknowns, c.samples);
    ASSERT_TRUE(c.estimate());
    EXPECT_GE(*c.estimate(), 0.0);
    EXPECT_LE(*c.estimate(), 1.0);
  }
}

TEST(Experiment, LowCBelowHighC) {
  const auto cells = run_experiment(triangles({Rational(1, 5), Rational(2)}, 200, 7));
  ASSERT_EQ(cells.size(), 2u);
  EXPECT_LT(*cells[0].estimate(), *cells[1].estimate());
}

TEST(Experiment, CsvIsReproducible) {
  const auto cfg = triangles({Rational(1)}, 1, 42);
  const std::string a = experiment_csv(run_experiment(cfg), 42);
  EXPECT_EQ(a, experiment_csv(run_experiment(cfg), 42));
  EXPECT_EQ(a.substr(0, a.find('\n')), "n,c,p,samples,hits,misses,unknowns,estimate,seed");
}

TEST(Experiment, ThreadCountDoesNotChangeOutput) {
  auto cfg = triangles({Rational(1, 2), Rational(2)}, 40, 5);
  const std::string one = experiment_csv(run_experiment(cfg), 5);
  cfg.threads = 4;
  EXPECT_EQ(one, experiment_csv(run_experiment(cfg), 5));
}

TEST(Experiment, GridIsSortedAndDeduplicated) {
  auto cfg = triangles({Rational(2), Rational(1, 5), Rational(2)}, 3, 1);
  cfg.ns = {14, 12, 14};
  const auto cells = run_experiment(cfg);
  ASSERT_EQ(cells.size(), 4u);
  EXPECT_EQ(cells[0].n, 12);
  EXPECT_EQ(cells[0].c, Rational(1, 5));
  EXPECT_EQ(cells[3].n, 14);
  EXPECT_EQ(cells[3].c, Rational(2));
}

TEST(Experiment, UnknownsAreReportedNotGuessed) {
  auto cfg = triangles({Rational(3)}, 5, 1);
  cfg.node_budget = 1;
  const auto cells = run_experiment(cfg);
  EXPECT_EQ(cells[0].unknowns + cells[0].misses + cells[0].hits, 5);
  EXPECT_GT(cells[0].unknowns, 0);
  EXPECT_TRUE(cells[0].untrusted());
}

TEST(Experiment, Preconditions) {
  auto cfg = triangles({Rational(1)}, 1, 1);
  cfg.ns = {2};
  EXPECT_THROW(run_experiment(cfg), InvalidArgument);
  cfg = triangles({Rational(1)}, 1, 1);
  cfg.g = complete_graph(5);
  cfg.ns = {4};
  EXPECT_THROW(run_experiment(cfg), InvalidArgument);
  cfg = triangles({Rational(0)}, 1, 1);
  EXPECT_THROW(run_experiment(cfg), InvalidArgument);
  cfg = triangles({Rational(1)}, 0, 1);
  EXPECT_THROW(run_experiment(cfg), InvalidArgument);
  cfg = triangles({Rational(1)}, 1, 1);
  cfg.h = path_graph(4);
  EXPECT_THROW(run_experiment(cfg), InvalidArgument);
}

TEST(Experiment, AllUnknownCellPrintsNan) {
  CellResult cell;
  cell.n = 5;
  cell.c = Rational(1);
  cell.p = 0.5;
  cell.samples = 2;
  cell.unknowns = 2;
  const std::string csv = experiment_csv({cell}, 0);
  EXPECT_NE(csv.find(",nan,0\n"), std::string::npos) << csv;
}
