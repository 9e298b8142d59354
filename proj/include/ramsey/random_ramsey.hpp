#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "ramsey/arrowing.hpp"
#include "ramsey/density.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

/// Uniform variates for the C(n,2) potential edges of one sample, in the
/// order (0,1), (0,2), ..., (1,2), ... Each (seed, n, sample) stream is
/// independent of every other, so any cell can be reproduced in isolation
/// and the same table couples all edge probabilities.
inline std::vector<double> edge_uniforms(std::uint64_t seed, int n, std::uint64_t sample) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(sample),
                    static_cast<std::uint32_t>(sample >> 32)};
  std::mt19937_64 engine(seq);
  std::vector<double> u(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (double& x : u) x = static_cast<double>(engine() >> 11) * 0x1.0p-53;
  return u;
}

/// G(n, p) from a uniform table: pair i is an edge iff u[i] < p.
inline Graph gnp_from_uniforms(int n, double p, const std::vector<double>& u) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("p must lie in [0, 1]");
  std::vector<Edge> es;
  std::size_t k = 0;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b, ++k) {
      if (u[k] < p) es.emplace_back(a, b);
    }
  }
  return Graph::from_edges(n, es);
}

inline Graph sample_gnp(int n, double p, std::uint64_t seed, std::uint64_t sample) {
  if (n < 0) throw InvalidArgument("n must be >= 0");
  return gnp_from_uniforms(n, p, edge_uniforms(seed, n, sample));
}

struct ExperimentConfig {
  Graph g;
  Graph h;
  std::vector<int> ns;
  std::vector<Rational> cs;
  int samples = 1;
  std::uint64_t seed = 0;
  std::uint64_t node_budget = kDefaultNodeBudget;
  int threads = 1;
  int max_n = 24;
  int max_samples = 1000;

  void validate() const {
    if (is_forest(g) || is_forest(h)) {
      throw InvalidArgument("the threshold experiment needs both targets to contain a cycle");
    }
    if (ns.empty() || cs.empty()) throw InvalidArgument("n and c grids must be non-empty");
    if (samples < 1) throw InvalidArgument("samples must be >= 1");
    if (samples > max_samples) {
      throw InvalidArgument("samples exceeds the cap of " + std::to_string(max_samples));
    }
    const int floor_n = std::max({g.order(), h.order(), 3});
    for (int n : ns) {
      if (n < floor_n) {
        throw InvalidArgument("n = " + std::to_string(n) + " is below max(v(G), v(H), 3) = " +
                              std::to_string(floor_n));
      }
      if (n > max_n) throw InvalidArgument("n exceeds the cap of " + std::to_string(max_n));
    }
    for (const Rational& c : cs) {
      if (c <= Rational(0)) throw InvalidArgument("c values must be positive");
    }
  }
};

struct CellResult {
  int n = 0;
  Rational c;
  double p = 0.0;
  int samples = 0;
  int hits = 0;
  int misses = 0;
  int unknowns = 0;
  double seconds = 0.0;
  std::vector<Answer> indicators;  // per sample index

  /// hits / (samples - unknowns); absent when every sample was undecided.
  std::optional<double> estimate() const {
    const int decided = samples - unknowns;
    if (decided == 0) return std::nullopt;
    return static_cast<double>(hits) / decided;
  }

  bool untrusted() const { return unknowns * 10 > samples; }
};

/// Estimates P(G(n,p) -> (G, H)) at p = threshold_p(G, H, n, c) for every
/// (n, c); results are sorted by (n, c). All c values of one (n, sample)
/// share a uniform table, so indicators are coupled across c.
inline std::vector<CellResult> run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  std::vector<int> ns = cfg.ns;
  std::sort(ns.begin(), ns.end());
  ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
  std::vector<Rational> cs = cfg.cs;
  std::sort(cs.begin(), cs.end());
  cs.erase(std::unique(cs.begin(), cs.end()), cs.end());

  std::vector<CellResult> cells;
  for (int n : ns) {
    for (const Rational& c : cs) {
      CellResult cell;
      cell.n = n;
      cell.c = c;
      cell.p = threshold_p(cfg.g, cfg.h, n, c);
      cell.samples = cfg.samples;
      cell.indicators.assign(cfg.samples, Answer::kUnknown);
      cells.push_back(std::move(cell));
    }
  }

  SearchOptions opts;
  opts.node_budget = cfg.node_budget;
  const std::size_t per_n = cs.size();
  std::vector<double> elapsed(cells.size() * cfg.samples, 0.0);

  // Work item = (n index, sample): one uniform table, every c.
  const std::size_t items = ns.size() * static_cast<std::size_t>(cfg.samples);
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t item = next++; item < items; item = next++) {
      const std::size_t ni = item / cfg.samples;
      const int sample = static_cast<int>(item % cfg.samples);
      const int n = ns[ni];
      const auto u = edge_uniforms(cfg.seed, n, static_cast<std::uint64_t>(sample));
      for (std::size_t ci = 0; ci < per_n; ++ci) {
        CellResult& cell = cells[ni * per_n + ci];
        const auto t0 = std::chrono::steady_clock::now();
        const Graph x = gnp_from_uniforms(n, cell.p, u);
        cell.indicators[sample] = arrows(x, cfg.g, cfg.h, opts).answer;
        elapsed[(ni * per_n + ci) * cfg.samples + sample] =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      }
    }
  };
  const int threads = std::max(1, cfg.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  for (std::size_t i = 0; i < cells.size(); ++i) {
    CellResult& cell = cells[i];
    for (int s = 0; s < cfg.samples; ++s) {
      switch (cell.indicators[s]) {
        case Answer::kYes: ++cell.hits; break;
        case Answer::kNo: ++cell.misses; break;
        case Answer::kUnknown: ++cell.unknowns; break;
      }
      cell.seconds += elapsed[i * cfg.samples + s];
    }
  }
  return cells;
}

namespace detail {

inline std::string sig9(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

}  // namespace detail

/// CSV with columns n,c,p,samples,hits,misses,unknowns,estimate,seed. Reals
/// use 9 significant digits; an all-unknown cell prints "nan".
inline std::string experiment_csv(const std::vector<CellResult>& cells, std::uint64_t seed) {
  std::string out = "n,c,p,samples,hits,misses,unknowns,estimate,seed\n";
  for (const CellResult& cell : cells) {
    const auto est = cell.estimate();
    out += std::to_string(cell.n) + "," + detail::sig9(cell.c.to_double()) + "," +
           detail::sig9(cell.p) + "," + std::to_string(cell.samples) + "," +
           std::to_string(cell.hits) + "," + std::to_string(cell.misses) + "," +
           std::to_string(cell.unknowns) + "," + (est ? detail::sig9(*est) : std::string("nan")) +
           "," + std::to_string(seed) + "\n";
  }
  return out;
}

}  // namespace ramsey
