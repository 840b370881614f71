#pragma once

// Reference computations for the tests. Everything here is written directly
// from the definitions on plain nested vectors, without the library's
// matrices or solvers, so disagreement points at the library.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace oracle {

using Dense = std::vector<std::vector<double>>;

struct WEdge {
  int u;
  int v;
  double w = 1.0;
};

inline Dense zeros(int r, int c) { return Dense(r, std::vector<double>(c, 0.0)); }

inline Dense identity(int n) {
  Dense m = zeros(n, n);
  for (int i = 0; i < n; ++i) m[i][i] = 1.0;
  return m;
}

inline Dense multiply(const Dense& a, const Dense& b) {
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  Dense c(n, std::vector<double>(m, 0.0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l)
      if (a[i][l] != 0.0)
        for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
  return c;
}

inline Dense transpose(const Dense& a) {
  if (a.empty()) return {};
  Dense t(a[0].size(), std::vector<double>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
  return t;
}

inline Dense power(const Dense& a, int k) {
  Dense r = identity(static_cast<int>(a.size()));
  for (int i = 0; i < k; ++i) r = multiply(r, a);
  return r;
}

inline double max_abs_diff(const Dense& a, const Dense& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) d = std::max(d, std::abs(a[i][j] - b[i][j]));
  return d;
}

// Undirected adjacency; a loop adds w to the diagonal once.
inline Dense adjacency(int n, const std::vector<WEdge>& edges) {
  Dense a = zeros(n, n);
  for (const auto& e : edges) {
    a[e.u][e.v] += e.w;
    if (e.u != e.v) a[e.v][e.u] += e.w;
  }
  return a;
}

inline std::vector<double> degrees(const Dense& a) {
  std::vector<double> d(a.size(), 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (double x : a[i]) d[i] += x;
  return d;
}

inline Dense laplacian(const Dense& a) {
  Dense l = a;
  const auto d = degrees(a);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (auto& x : l[i]) x = -x;
    l[i][i] += d[i];
  }
  return l;
}

inline Dense signless(const Dense& a) {
  Dense k = a;
  const auto d = degrees(a);
  for (std::size_t i = 0; i < a.size(); ++i) k[i][i] += d[i];
  return k;
}

inline Dense normalized(const Dense& a) {
  const auto d = degrees(a);
  Dense n = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      n[i][j] = (d[i] > 0 && d[j] > 0) ? a[i][j] / std::sqrt(d[i] * d[j]) : 0.0;
  return n;
}

// Cyclic Jacobi rotations. values ascending; vectors[i][k] is component i of
// eigenvector k.
struct Eigen {
  std::vector<double> values;
  Dense vectors;
};

inline Eigen jacobi_eigen(Dense a) {
  const int n = static_cast<int>(a.size());
  Dense v = identity(n);
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0, total = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        total += a[i][j] * a[i][j];
        if (i != j) off += a[i][j] * a[i][j];
      }
    if (off <= 1e-30 * std::max(total, 1e-300)) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          const double vkp = v[k][p], vkq = v[k][q];
          v[k][p] = c * vkp - s * vkq;
          v[k][q] = s * vkp + c * vkq;
        }
      }
    }
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) { return a[x][x] < a[y][y]; });
  Eigen out;
  out.vectors = zeros(n, n);
  for (int k = 0; k < n; ++k) {
    out.values.push_back(a[order[k]][order[k]]);
    for (int i = 0; i < n; ++i) out.vectors[i][k] = v[i][order[k]];
  }
  return out;
}

inline Dense apply(const Eigen& e, const std::function<double(double)>& f) {
  const int n = static_cast<int>(e.values.size());
  Dense m = zeros(n, n);
  for (int k = 0; k < n; ++k) {
    const double fk = f(e.values[k]);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m[i][j] += e.vectors[i][k] * fk * e.vectors[j][k];
  }
  return m;
}

// Singular values of a rectangular matrix, descending, via the eigenvalues
// of B^T B (adequate at oracle scale).
inline std::vector<double> singular_values(const Dense& b) {
  const auto e = jacobi_eigen(multiply(transpose(b), b));
  std::vector<double> s;
  for (double x : e.values) s.push_back(std::sqrt(std::max(0.0, x)));
  std::sort(s.rbegin(), s.rend());
  return s;
}

// Integer walk counts [A^k] computed with exact integer arithmetic.
using IntMatrix = std::vector<std::vector<std::int64_t>>;

inline IntMatrix int_adjacency(int n, const std::vector<WEdge>& edges) {
  IntMatrix a(n, std::vector<std::int64_t>(n, 0));
  for (const auto& e : edges) {
    a[e.u][e.v] = 1;
    a[e.v][e.u] = 1;
  }
  return a;
}

inline IntMatrix int_multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  IntMatrix c(n, std::vector<std::int64_t>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l)
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
  return c;
}

inline IntMatrix int_power(const IntMatrix& a, int k) {
  IntMatrix r(a.size(), std::vector<std::int64_t>(a.size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i][i] = 1;
  for (int i = 0; i < k; ++i) r = int_multiply(r, a);
  return r;
}

inline IntMatrix int_transpose(const IntMatrix& a) {
  if (a.empty()) return {};
  IntMatrix t(a[0].size(), std::vector<std::int64_t>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
  return t;
}

// Bipartitions as bit masks over n nodes; node 0 is fixed in class 0.
template <class F>
void for_each_bipartition(int n, F f) {
  const std::uint64_t count = std::uint64_t{1} << (n - 1);
  for (std::uint64_t mask = 0; mask < count; ++mask) f(mask << 1);
}

inline bool side_of(std::uint64_t mask, int u) { return (mask >> u) & 1u; }

// Minimum weight of edges inside a class (loops always count).
inline double min_frustration(int n, const std::vector<WEdge>& edges) {
  double best = std::numeric_limits<double>::infinity();
  for_each_bipartition(n, [&](std::uint64_t mask) {
    double f = 0.0;
    for (const auto& e : edges)
      if (side_of(mask, e.u) == side_of(mask, e.v)) f += e.w;
    best = std::min(best, f);
  });
  return best;
}

struct CutValue {
  double cut;
  double rcut;
};

inline CutValue cut_of(int n, const std::vector<WEdge>& edges, const std::vector<int>& cls) {
  double cut = 0.0;
  for (const auto& e : edges)
    if (cls[e.u] != cls[e.v]) cut += e.w;
  const auto x = std::count(cls.begin(), cls.end(), 0);
  const auto y = n - x;
  return {cut, (1.0 / static_cast<double>(x) + 1.0 / static_cast<double>(y)) * cut};
}

// All rcut values over bipartitions with both classes nonempty.
inline std::vector<double> all_rcuts(int n, const std::vector<WEdge>& edges) {
  std::vector<double> out;
  for_each_bipartition(n, [&](std::uint64_t mask) {
    if (mask == 0) return;
    std::vector<int> cls(n);
    for (int u = 0; u < n; ++u) cls[u] = side_of(mask, u);
    out.push_back(cut_of(n, edges, cls).rcut);
  });
  return out;
}

inline double min_rcut(int n, const std::vector<WEdge>& edges) {
  const auto all = all_rcuts(n, edges);
  return *std::min_element(all.begin(), all.end());
}

// Graph generators used by several suites.

inline bool connected(int n, const std::vector<WEdge>& edges) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (const auto& e : edges) parent[find(e.u)] = find(e.v);
  for (int i = 0; i < n; ++i)
    if (find(i) != find(0)) return false;
  return true;
}

inline bool has_edge(const std::vector<WEdge>& edges, int u, int v) {
  for (const auto& e : edges)
    if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) return true;
  return false;
}

// G(n, p) without loops, plus a random spanning tree when `connect`.
inline std::vector<WEdge> random_graph(int n, double p, std::mt19937_64& rng, bool connect) {
  std::vector<WEdge> edges;
  std::uniform_real_distribution<double> unit;
  if (connect) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    for (int i = 1; i < n; ++i) {
      std::uniform_int_distribution<int> pick(0, i - 1);
      edges.push_back({perm[pick(rng)], perm[i]});
    }
  }
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (unit(rng) < p && !has_edge(edges, u, v)) edges.push_back({u, v});
  return edges;
}

// Random connected bipartite graph over left 0..nl-1 and right nl..nl+nr-1.
inline std::vector<WEdge> random_bipartite(int nl, int nr, double p, std::mt19937_64& rng) {
  std::vector<WEdge> edges;
  std::uniform_real_distribution<double> unit;
  // Spanning tree alternating sides: attach each new node to an existing
  // node of the other side.
  std::vector<int> lefts{0}, rights{nl};
  edges.push_back({0, nl});
  std::vector<int> pending;
  for (int u = 1; u < nl; ++u) pending.push_back(u);
  for (int v = nl + 1; v < nl + nr; ++v) pending.push_back(v);
  std::shuffle(pending.begin(), pending.end(), rng);
  for (int x : pending) {
    auto& other = x < nl ? rights : lefts;
    std::uniform_int_distribution<std::size_t> pick(0, other.size() - 1);
    const int y = other[pick(rng)];
    edges.push_back({std::min(x, y), std::max(x, y)});
    (x < nl ? lefts : rights).push_back(x);
  }
  for (int u = 0; u < nl; ++u)
    for (int v = nl; v < nl + nr; ++v)
      if (unit(rng) < p && !has_edge(edges, u, v)) edges.push_back({u, v});
  return edges;
}

}  // namespace oracle
