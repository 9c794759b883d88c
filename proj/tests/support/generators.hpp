#pragma once

// Seeded random inputs for property tests.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "toricres/dual_complex.hpp"
#include "toricres/lattice.hpp"

namespace gen {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  long long between(long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(eng_);
  }
  bool coin(int percent) { return between(1, 100) <= percent; }
  template <class T>
  void shuffle(std::vector<T>& v) {
    std::shuffle(v.begin(), v.end(), eng_);
  }
  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(between(0, static_cast<long long>(v.size()) - 1))];
  }

 private:
  std::mt19937_64 eng_;
};

inline toricres::LatticeVector to_lattice(const oracle::Vec& v) {
  std::vector<toricres::Integer> e(v.begin(), v.end());
  return toricres::LatticeVector(std::move(e));
}

inline oracle::Vec to_vec(const toricres::LatticeVector& v) {
  oracle::Vec out;
  for (const auto& x : v.entries()) out.push_back(static_cast<long long>(x));
  return out;
}

/// Columns of a random unimodular m x m matrix.
inline std::vector<oracle::Vec> unimodular(Rng& rng, std::size_t m) {
  std::vector<oracle::Vec> cols(m, oracle::Vec(m, 0));
  for (std::size_t i = 0; i < m; ++i) cols[i][i] = 1;
  const int ops = static_cast<int>(rng.between(static_cast<long long>(m), 3 * static_cast<long long>(m)));
  for (int t = 0; t < ops; ++t) {
    const auto a = static_cast<std::size_t>(rng.between(0, static_cast<long long>(m) - 1));
    auto b = static_cast<std::size_t>(rng.between(0, static_cast<long long>(m) - 2));
    if (b >= a) ++b;
    const long long f = rng.coin(50) ? 1 : -1;
    for (std::size_t j = 0; j < m; ++j) cols[a][j] += f * cols[b][j];
  }
  rng.shuffle(cols);
  if (rng.coin(50)) {
    for (auto& x : cols[0]) x = -x;
  }
  return cols;
}

/// A regular wall: m - 1 shared rays and two outer rays in Z^m together with
/// the relation that produced it (outer coefficients 1).
struct RegularWall {
  std::vector<oracle::Vec> rays;
  std::vector<std::size_t> shared;
  std::vector<std::size_t> outer;
  oracle::Vec relation;
};

inline RegularWall regular_wall(Rng& rng, long long bound = 3) {
  const auto m = static_cast<std::size_t>(rng.between(2, 4));
  const auto basis = unimodular(rng, m);
  oracle::Vec b(m - 1);
  for (auto& x : b) x = rng.between(-bound, bound);
  oracle::Vec u = basis[m - 1];
  oracle::Vec u2(m, 0);
  for (std::size_t j = 0; j < m; ++j) {
    u2[j] = -u[j];
    for (std::size_t i = 0; i + 1 < m; ++i) u2[j] -= b[i] * basis[i][j];
  }
  std::vector<std::pair<oracle::Vec, long long>> tagged;
  for (std::size_t i = 0; i + 1 < m; ++i) tagged.push_back({basis[i], b[i]});
  tagged.push_back({u, 1});
  tagged.push_back({u2, 1});
  std::vector<std::size_t> order(tagged.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  rng.shuffle(order);
  RegularWall w;
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    const std::size_t src = order[pos];
    w.rays.push_back(tagged[src].first);
    w.relation.push_back(tagged[src].second);
    (src + 2 >= tagged.size() ? w.outer : w.shared).push_back(pos);
  }
  std::sort(w.outer.begin(), w.outer.end());
  return w;
}

/// k linearly independent vectors in Z^m with entries in [-bound, bound].
inline std::vector<oracle::Vec> simplicial_cone(Rng& rng, long long bound = 6) {
  while (true) {
    const auto m = static_cast<std::size_t>(rng.between(2, 3));
    const auto k = static_cast<std::size_t>(rng.between(1, static_cast<long long>(m)));
    std::vector<oracle::Vec> g(k, oracle::Vec(m));
    for (auto& v : g) {
      for (auto& x : v) x = rng.between(-bound, bound);
    }
    if (oracle::parallelepiped_points(g)) return g;
  }
}

/// A pure-or-mixed complex of dimension <= max_dim on up to max_n vertices.
struct ComplexSpec {
  std::vector<std::string> vertices;
  std::vector<std::vector<std::string>> facets;
  toricres::DualComplex build() const { return toricres::DualComplex::build(vertices, facets); }
};

inline ComplexSpec random_complex(Rng& rng, int max_n, int max_dim) {
  ComplexSpec c;
  const int n = static_cast<int>(rng.between(1, max_n));
  const int dim = static_cast<int>(rng.between(0, max_dim));
  const std::string prefix = rng.coin(50) ? "v" : "";
  for (int i = 0; i < n; ++i) c.vertices.push_back(prefix + std::to_string(i + 1));
  std::vector<bool> used(n, false);
  const int attempts = static_cast<int>(rng.between(1, 2 * n));
  for (int t = 0; t < attempts; ++t) {
    const int size = static_cast<int>(rng.between(1, std::min(dim + 1, n)));
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    rng.shuffle(idx);
    std::vector<std::string> f;
    for (int i = 0; i < size; ++i) {
      f.push_back(c.vertices[idx[i]]);
      used[idx[i]] = true;
    }
    c.facets.push_back(f);
  }
  for (int i = 0; i < n; ++i) {
    if (!used[i]) c.facets.push_back({c.vertices[i]});
  }
  return c;
}

}  // namespace gen
