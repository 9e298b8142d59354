#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

/// Isomorphism certificate plus the labeling that produced it.
///
/// `labeling[v]` is the canonical position of input vertex v; permuting the
/// input graph by it yields the canonical representative. Two (vertex
/// coloured) graphs are isomorphic iff their certificates compare equal.
struct CanonicalForm {
  std::string certificate;
  std::vector<Vertex> labeling;

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.certificate == b.certificate;
  }
};

namespace detail {

// Ordered partition held as a colour per vertex, colours 0..k-1 ordered by
// cell. Refinement keeps the old colour as the primary sort key, so cells
// only ever split in place and the result does not depend on labels.
class Refiner {
 public:
  explicit Refiner(const Graph& g) : g_(g), n_(g.order()) {
    nbrs_.resize(n_);
    for (Vertex v = 0; v < n_; ++v) nbrs_[v] = g.neighbors(v);
  }

  int refine(std::vector<int>& colour) const {
    int cells = compress(colour);
    std::vector<std::vector<int>> sig(n_);
    std::vector<Vertex> order(n_);
    while (true) {
      for (Vertex v = 0; v < n_; ++v) {
        sig[v].assign(cells + 1, 0);
        sig[v][0] = colour[v];
        for (Vertex w : nbrs_[v]) ++sig[v][1 + colour[w]];
      }
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(),
                [&](Vertex a, Vertex b) { return sig[a] < sig[b]; });
      int next = 0;
      for (int i = 0; i < n_; ++i) {
        if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++next;
        colour[order[i]] = next;
      }
      const int now = n_ == 0 ? 0 : next + 1;
      if (now == cells) return cells;
      cells = now;
    }
  }

  static int compress(std::vector<int>& colour) {
    std::vector<int> values = colour;
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    for (int& c : colour) {
      c = static_cast<int>(std::lower_bound(values.begin(), values.end(), c) - values.begin());
    }
    return static_cast<int>(values.size());
  }

 private:
  const Graph& g_;
  int n_;
  std::vector<std::vector<Vertex>> nbrs_;
};

class CanonicalSearch {
 public:
  CanonicalSearch(const Graph& g, std::span<const int> colours)
      : g_(g), n_(g.order()), refiner_(g), input_colours_(colours.begin(), colours.end()) {
    if (input_colours_.empty()) input_colours_.assign(n_, 0);
    if (static_cast<int>(input_colours_.size()) != n_) {
      throw InvalidArgument("vertex colouring size mismatch");
    }
  }

  CanonicalForm run() {
    std::vector<int> colour = input_colours_;
    std::vector<Vertex> path;
    visit(colour, path);
    return {best_cert_, best_lab_};
  }

 private:
  static constexpr int kNoJump = -1;

  std::string certificate(const std::vector<int>& lab) const {
    std::vector<Vertex> at(n_);
    for (Vertex v = 0; v < n_; ++v) at[lab[v]] = v;
    std::string cert;
    cert.push_back(static_cast<char>(n_ & 0xff));
    cert.push_back(static_cast<char>((n_ >> 8) & 0xff));
    for (int i = 0; i < n_; ++i) {
      const int c = input_colours_[at[i]];
      for (int s = 0; s < 32; s += 8) cert.push_back(static_cast<char>((c >> s) & 0xff));
    }
    unsigned char acc = 0;
    int fill = 0;
    for (int j = 1; j < n_; ++j) {
      for (int i = 0; i < j; ++i) {
        acc = static_cast<unsigned char>((acc << 1) | (g_.adjacent(at[i], at[j]) ? 1 : 0));
        if (++fill == 8) {
          cert.push_back(static_cast<char>(acc));
          acc = 0;
          fill = 0;
        }
      }
    }
    if (fill) cert.push_back(static_cast<char>(acc << (8 - fill)));
    return cert;
  }

  // lab_b^{-1} o lab_a maps vertices of leaf a onto those of leaf b.
  static std::vector<Vertex> automorphism(const std::vector<int>& lab_a,
                                          const std::vector<int>& lab_b) {
    const int n = static_cast<int>(lab_a.size());
    std::vector<Vertex> at_b(n);
    for (Vertex v = 0; v < n; ++v) at_b[lab_b[v]] = v;
    std::vector<Vertex> gamma(n);
    for (Vertex v = 0; v < n; ++v) gamma[v] = at_b[lab_a[v]];
    return gamma;
  }

  int visit(std::vector<int> colour, std::vector<Vertex>& path) {
    const int cells = refiner_.refine(colour);
    const int depth = static_cast<int>(path.size());
    if (cells == n_) return leaf(colour, path);

    // Target cell: first non-singleton cell.
    std::vector<int> size(cells, 0);
    for (int c : colour) ++size[c];
    int target = 0;
    while (size[target] == 1) ++target;

    std::vector<Vertex> explored;
    for (Vertex v = 0; v < n_; ++v) {
      if (colour[v] != target) continue;
      if (pruned(v, explored, path)) continue;
      std::vector<int> child(n_);
      for (Vertex w = 0; w < n_; ++w) {
        child[w] = 2 * colour[w] + ((colour[w] == target && w != v) ? 1 : 0);
      }
      path.push_back(v);
      const int jump = visit(std::move(child), path);
      path.pop_back();
      explored.push_back(v);
      if (jump != kNoJump && jump < depth) return jump;
    }
    return kNoJump;
  }

  int leaf(const std::vector<int>& lab, const std::vector<Vertex>& path) {
    std::string cert = certificate(lab);
    if (first_lab_.empty()) {
      first_lab_ = best_lab_ = lab;
      first_cert_ = best_cert_ = std::move(cert);
      first_path_ = path;
      return kNoJump;
    }
    if (cert == first_cert_) {
      generators_.push_back(automorphism(first_lab_, lab));
      // The subtree where this path left the first path is an image of the
      // first path's subtree, which is already fully explored.
      std::size_t k = 0;
      while (k < path.size() && k < first_path_.size() && path[k] == first_path_[k]) ++k;
      return static_cast<int>(k);
    }
    if (cert == best_cert_) {
      generators_.push_back(automorphism(best_lab_, lab));
      return kNoJump;
    }
    if (cert < best_cert_) {
      best_cert_ = std::move(cert);
      best_lab_ = lab;
    }
    return kNoJump;
  }

  // Skip v when a known automorphism fixing the current path pointwise maps
  // it onto an already explored sibling.
  bool pruned(Vertex v, const std::vector<Vertex>& explored,
              const std::vector<Vertex>& path) const {
    if (explored.empty() || generators_.empty()) return false;
    std::vector<Vertex> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](Vertex x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    bool any = false;
    for (const auto& gamma : generators_) {
      bool fixes = true;
      for (Vertex p : path) fixes = fixes && gamma[p] == p;
      if (!fixes) continue;
      any = true;
      for (Vertex x = 0; x < n_; ++x) parent[find(x)] = find(gamma[x]);
    }
    if (!any) return false;
    const Vertex root = find(v);
    for (Vertex u : explored) {
      if (find(u) == root) return true;
    }
    return false;
  }

  const Graph& g_;
  int n_;
  Refiner refiner_;
  std::vector<int> input_colours_;
  std::vector<int> first_lab_, best_lab_;
  std::string first_cert_, best_cert_;
  std::vector<Vertex> first_path_;
  std::vector<std::vector<Vertex>> generators_;
};

}  // namespace detail

/// Canonical form of `g`, optionally respecting a vertex colouring (colours
/// are compared by value; isomorphisms must preserve them).
inline CanonicalForm canonical_form(const Graph& g, std::span<const int> colours = {}) {
  return detail::CanonicalSearch(g, colours).run();
}

inline Graph canonical_graph(const Graph& g) {
  return g.permuted(canonical_form(g).labeling);
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  return canonical_form(a).certificate == canonical_form(b).certificate;
}

}  // namespace ramsey
