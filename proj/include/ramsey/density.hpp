#pragma once

#include <bit>
#include <charconv>
#include <cmath>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

/// Exact rational with positive denominator, always in lowest terms.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1) {  // NOLINT(google-explicit-constructor)
    if (den == 0) throw InvalidArgument("zero denominator");
    assign(static_cast<__int128>(num), static_cast<__int128>(den));
  }

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  std::string to_string() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
  }

  /// Accepts "a", "a/b" and plain decimals such as "0.25" or "-2.5".
  static Rational parse(std::string_view text) {
    auto fail = [&]() -> Rational {
      throw InvalidArgument("not a rational number: '" + std::string(text) + "'");
    };
    auto integer = [&](std::string_view s) {
      std::int64_t v = 0;
      auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
      if (s.empty() || ec != std::errc() || p != s.data() + s.size()) fail();
      return v;
    };
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
      return Rational(integer(text.substr(0, slash)), integer(text.substr(slash + 1)));
    }
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
      std::string_view whole = text.substr(0, dot);
      std::string_view frac = text.substr(dot + 1);
      const bool negative = !whole.empty() && whole.front() == '-';
      if (negative) whole.remove_prefix(1);
      if (frac.size() > 15 || (whole.empty() && frac.empty())) fail();
      for (char ch : frac) {
        if (ch < '0' || ch > '9') fail();
      }
      std::int64_t scale = 1;
      for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
      const std::int64_t w = whole.empty() ? 0 : integer(whole);
      const std::int64_t f = frac.empty() ? 0 : integer(frac);
      if (w < 0) fail();
      const Rational r(w * scale + f, scale);
      return negative ? Rational(-r.num(), r.den()) : r;
    }
    return Rational(integer(text));
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    Rational r;
    r.assign(static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_,
             static_cast<__int128>(a.den_) * b.den_);
    return r;
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return a + Rational(-b.num_, b.den_);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    Rational r;
    r.assign(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
    return r;
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw InvalidArgument("division by zero");
    Rational r;
    r.assign(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
    return r;
  }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const __int128 l = static_cast<__int128>(a.num_) * b.den_;
    const __int128 r = static_cast<__int128>(b.num_) * a.den_;
    return l < r ? std::strong_ordering::less
                 : (l > r ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  void assign(__int128 n, __int128 d) {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 a = n < 0 ? -n : n;
    __int128 b = d;
    while (b != 0) {
      const __int128 t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      n /= a;
      d /= a;
    }
    constexpr __int128 kMax = INT64_MAX;
    if (n > kMax || n < -kMax || d > kMax) throw InvalidArgument("rational overflow");
    num_ = static_cast<std::int64_t>(n);
    den_ = static_cast<std::int64_t>(d);
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Subset enumeration is exhaustive, so inputs are capped.
inline constexpr int kDensityVertexCap = 24;

/// An optimal value with the vertex set of the induced subgraph achieving it.
struct DensityWitness {
  Rational value;
  std::vector<Vertex> vertices;
};

namespace detail {

inline std::vector<Vertex> mask_vertices(std::uint32_t mask) {
  std::vector<Vertex> out;
  while (mask) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

// Maximises score(v, e) = num/den (den > 0) over vertex subsets with at
// least `min_size` vertices, taking induced edges. Ties go to the smaller
// subset, then to the lexicographically smaller vertex list.
template <class Score>
std::optional<DensityWitness> maximize_over_subsets(const Graph& g, int min_size, Score score) {
  const int n = g.order();
  if (n > kDensityVertexCap) {
    throw InvalidArgument("density computations are capped at " +
                          std::to_string(kDensityVertexCap) + " vertices");
  }
  std::vector<std::uint32_t> rows(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : g.neighbors(v)) rows[v] |= std::uint32_t{1} << w;
  }
  bool have = false;
  std::int64_t best_num = 0;
  std::int64_t best_den = 1;
  std::uint32_t best_mask = 0;
  std::uint32_t set = 0;
  int edges = 0;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t i = 1; i < total; ++i) {
    const int bit = std::countr_zero(i);
    const std::uint32_t b = std::uint32_t{1} << bit;
    set ^= b;
    const int links = std::popcount(rows[bit] & set);
    edges += (set & b) ? links : -links;
    const int size = std::popcount(set);
    if (size < min_size) continue;
    const auto [num, den] = score(size, edges);
    bool better = !have;
    if (have) {
      const __int128 lhs = static_cast<__int128>(num) * best_den;
      const __int128 rhs = static_cast<__int128>(best_num) * den;
      if (lhs != rhs) {
        better = lhs > rhs;
      } else {
        const int best_size = std::popcount(best_mask);
        if (size != best_size) {
          better = size < best_size;
        } else {
          const std::uint32_t diff = set ^ best_mask;
          better = (set >> std::countr_zero(diff)) & 1U;
        }
      }
    }
    if (better) {
      have = true;
      best_num = num;
      best_den = den;
      best_mask = set;
    }
  }
  if (!have) return std::nullopt;
  return DensityWitness{Rational(best_num, best_den), mask_vertices(best_mask)};
}

}  // namespace detail

/// rho(X) = max e(J)/v(J) over subgraphs with at least one vertex.
inline DensityWitness rho(const Graph& x) {
  if (x.order() < 1) throw InvalidArgument("rho needs at least one vertex");
  return *detail::maximize_over_subsets(x, 1, [](int v, int e) {
    return std::pair<std::int64_t, std::int64_t>{e, v};
  });
}

/// m2(X) = max (e(J)-1)/(v(J)-2) over subgraphs with at least three
/// vertices; absent for forests.
inline std::optional<DensityWitness> m2(const Graph& x) {
  if (x.order() > kDensityVertexCap) {
    throw InvalidArgument("density computations are capped at " +
                          std::to_string(kDensityVertexCap) + " vertices");
  }
  if (is_forest(x)) return std::nullopt;
  return detail::maximize_over_subsets(x, 3, [](int v, int e) {
    return std::pair<std::int64_t, std::int64_t>{e - 1, v - 2};
  });
}

struct PairDensity {
  Rational value;
  std::vector<Vertex> vertices;  // witness J in the larger-m2 graph
  bool swapped = false;          // true when m2(G) < m2(H) and roles were exchanged
  Rational m2_first;             // m2 of the graph J lives in
  Rational m2_second;
};

/// m2(G, H) after ordering the pair so that m2(G) >= m2(H): the maximum of
/// e(J) / (v(J) - 2 + 1/m2(H)) over J in G with at least two vertices.
inline PairDensity m2_pair(const Graph& g, const Graph& h) {
  auto mg = m2(g);
  auto mh = m2(h);
  if (!mg || !mh) throw InvalidArgument("m2(G, H) needs both graphs to contain a cycle");
  PairDensity out;
  const Graph* first = &g;
  if (mg->value < mh->value) {
    out.swapped = true;
    first = &h;
    std::swap(mg, mh);
  }
  out.m2_first = mg->value;
  out.m2_second = mh->value;
  // v - 2 + b/a = ((v - 2) a + b) / a with m2(H) = a/b.
  const std::int64_t a = mh->value.num();
  const std::int64_t b = mh->value.den();
  auto w = detail::maximize_over_subsets(*first, 2, [a, b](int v, int e) {
    return std::pair<std::int64_t, std::int64_t>{static_cast<std::int64_t>(e) * a,
                                                 static_cast<std::int64_t>(v - 2) * a + b};
  });
  out.value = w->value;
  out.vertices = std::move(w->vertices);
  return out;
}

/// c * n^(-1/m2(G,H)), clamped to [0, 1].
inline double threshold_p(const Graph& g, const Graph& h, int n, const Rational& c) {
  if (n < 3) throw InvalidArgument("threshold_p needs n >= 3");
  if (c <= Rational(0)) throw InvalidArgument("threshold_p needs c > 0");
  const Rational d = m2_pair(g, h).value;
  const double p = c.to_double() *
                   std::pow(static_cast<double>(n), -static_cast<double>(d.den()) / static_cast<double>(d.num()));
  return std::clamp(p, 0.0, 1.0);
}

struct DensityReport {
  DensityWitness rho;
  std::optional<DensityWitness> m2;
  std::optional<PairDensity> m2_pair;
};

inline DensityReport density_report(const Graph& x, const Graph* partner = nullptr) {
  DensityReport r{rho(x), m2(x), std::nullopt};
  if (partner) r.m2_pair = m2_pair(x, *partner);
  return r;
}

}  // namespace ramsey
