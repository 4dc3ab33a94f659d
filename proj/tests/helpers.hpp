#pragma once

// Shared builders and independent oracles for the test suites. Oracles here
// deliberately avoid the library's algorithms: balance is decided by explicit
// cycle enumeration, the restricted operator by a dense Kronecker assembly,
// and matchings by a separate recursion.

#include <algorithm>
#include <cmath>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "sg/numerics.hpp"
#include "sg/selection.hpp"
#include "sg/signed_graph.hpp"

namespace sgtest {

inline sg::SignedGraph complete_graph(
    int n, const std::vector<std::pair<int, int>>& negative = {}) {
  std::set<std::pair<int, int>> neg;
  for (auto [u, v] : negative) neg.insert(std::minmax(u, v));
  std::vector<sg::Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      edges.push_back({u, v,
                       neg.count({u, v}) ? sg::Sign::negative
                                         : sg::Sign::positive});
  return sg::SignedGraph(n, std::move(edges));
}

inline sg::SignedGraph ring_graph(
    int n, const std::vector<std::pair<int, int>>& negative = {}) {
  std::set<std::pair<int, int>> neg;
  for (auto [u, v] : negative) neg.insert(std::minmax(u, v));
  std::vector<sg::Edge> edges;
  for (int u = 0; u < n; ++u) {
    int w = (u + 1) % n;
    int a = std::min(u, w), b = std::max(u, w);
    edges.push_back({a, b,
                     neg.count({a, b}) ? sg::Sign::negative
                                       : sg::Sign::positive});
  }
  return sg::SignedGraph(n, std::move(edges));
}

/// All simple cycles as vertex lists (closing edge implied). Each cycle is
/// produced once: rooted at its smallest vertex, second vertex < last vertex.
inline std::vector<std::vector<int>> enumerate_cycles(const sg::SignedGraph& g) {
  std::vector<std::vector<int>> cycles;
  const int n = g.order();
  std::vector<char> used(n, 0);
  std::vector<int> path;
  auto dfs = [&](auto&& self, int root, int v) -> void {
    for (int w : g.neighbors(v)) {
      if (w == root && path.size() >= 3) {
        if (path[1] < path.back()) cycles.push_back(path);
        continue;
      }
      if (w <= root || used[w]) continue;
      used[w] = 1;
      path.push_back(w);
      self(self, root, w);
      path.pop_back();
      used[w] = 0;
    }
  };
  for (int root = 0; root < n; ++root) {
    used[root] = 1;
    path = {root};
    dfs(dfs, root, root);
    used[root] = 0;
  }
  return cycles;
}

inline int negative_edge_count(const sg::SignedGraph& g,
                               const std::vector<int>& cycle) {
  int neg = 0;
  for (size_t i = 0; i < cycle.size(); ++i) {
    auto s = g.edge_sign(cycle[i], cycle[(i + 1) % cycle.size()]);
    if (s == sg::Sign::negative) ++neg;
  }
  return neg;
}

/// Harary by brute force over cycles: no cycle with an odd negative count.
inline bool strong_balance_oracle(const sg::SignedGraph& g) {
  for (const auto& c : enumerate_cycles(g))
    if (negative_edge_count(g, c) % 2 == 1) return false;
  return true;
}

/// Davis by brute force over cycles: no cycle with exactly one negative edge.
inline bool weak_balance_oracle(const sg::SignedGraph& g) {
  for (const auto& c : enumerate_cycles(g))
    if (negative_edge_count(g, c) == 1) return false;
  return true;
}

/// Perfect matching existence by pairing vertex-by-vertex; independent of the
/// library's bitmask search.
inline bool matching_oracle(const sg::SignedGraph& g, bool positive_only) {
  const int n = g.order();
  if (n % 2 != 0) return false;
  std::vector<char> used(n, 0);
  auto rec = [&](auto&& self) -> bool {
    int u = -1;
    for (int v = 0; v < n; ++v)
      if (!used[v]) {
        u = v;
        break;
      }
    if (u < 0) return true;
    used[u] = 1;
    for (int w : g.neighbors(u)) {
      if (used[w]) continue;
      if (positive_only && g.edge_sign(u, w) != sg::Sign::positive) continue;
      used[w] = 1;
      if (self(self)) {
        used[u] = used[w] = 0;
        return true;
      }
      used[w] = 0;
    }
    used[u] = 0;
    return false;
  };
  return rec(rec);
}

/// Dense W_e - U for one interaction pair (column-major irrelevant: symmetric).
inline sg::SymMatrix interaction_minus_u(int n, int u, int v, double gamma) {
  sg::SymMatrix m = sg::SymMatrix::identity(n);
  m.add(u, u, gamma);
  m.add(v, v, gamma);
  m.add(u, v, -gamma);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) m.add(i, j, -1.0 / n);
  return m;
}

/// Dense n^2 x n^2 assembly of sum_e mu(e) (W_e - U) kron (W_e - U).
inline sg::SymMatrix dense_theta(int n, const std::vector<sg::EdgeTerm>& terms,
                                 double alpha, double beta) {
  sg::SymMatrix theta(n * n);
  for (const auto& t : terms) {
    const double gamma = t.negative ? beta : -alpha;
    sg::SymMatrix w = interaction_minus_u(n, t.u, t.v, gamma);
    // Column-major vec: entry ((c1,r1),(c2,r2)) of W kron W is
    // W(c1,c2) W(r1,r2) at flat indices c*n + r.
    for (int col2 = 0; col2 < n; ++col2)
      for (int row2 = 0; row2 < n; ++row2)
        for (int col1 = 0; col1 < n; ++col1)
          for (int row1 = 0; row1 < n; ++row1) {
            int i = col1 * n + row1;
            int j = col2 * n + row2;
            if (j < i) continue;
            theta.add(i, j, t.weight * w(col1, col2) * w(row1, row2));
          }
  }
  return theta;
}

/// lambda_max of a dense symmetric matrix restricted to eigenspaces that are
/// not orthogonal to `seed`; eigenvalues grouped within group_tol.
inline double restricted_lambda_max_oracle(const sg::SymMatrix& m,
                                           const std::vector<double>& seed,
                                           double group_tol = 1e-9,
                                           double proj_tol = 1e-8) {
  sg::EigenSym es = sg::eigen_sym(m);
  const int n = es.n;
  double best = 0.0;
  int i = 0;
  while (i < n) {
    int j = i;
    while (j + 1 < n && es.values[j + 1] - es.values[i] < group_tol) ++j;
    double proj_sq = 0.0;
    for (int k = i; k <= j; ++k) {
      double dot = 0.0;
      for (int r = 0; r < n; ++r) dot += es.vector_at(r, k) * seed[r];
      proj_sq += dot * dot;
    }
    if (std::sqrt(proj_sq) > proj_tol) best = std::max(best, es.values[j]);
    i = j + 1;
  }
  return best;
}

inline std::vector<double> vec_of_i_minus_u(int n) {
  std::vector<double> s(static_cast<size_t>(n) * n, 0.0);
  for (int c = 0; c < n; ++c)
    for (int r = 0; r < n; ++r)
      s[static_cast<size_t>(c) * n + r] = (r == c ? 1.0 : 0.0) - 1.0 / n;
  return s;
}

/// lambda_max of a dense symmetric matrix by Gershgorin-shifted power
/// iteration; avoids a full Jacobi sweep for large n.
inline double lambda_max_power(const sg::SymMatrix& m, double tol = 1e-9,
                               int max_iter = 20000) {
  const int n = m.size();
  double shift = 0.0;
  for (int i = 0; i < n; ++i) {
    double row = 0.0;
    for (int j = 0; j < n; ++j) row += std::abs(m(i, j));
    shift = std::max(shift, row);
  }
  std::vector<double> v(n), w(n);
  sg::RngStream rng(12345);
  for (double& x : v) x = rng.next_uniform(-1.0, 1.0);
  double prev = 0.0;
  for (int it = 0; it < max_iter; ++it) {
    for (int i = 0; i < n; ++i) {
      double s = shift * v[i];
      for (int j = 0; j < n; ++j) s += m(i, j) * v[j];
      w[i] = s;
    }
    double norm = 0.0, ray = 0.0;
    for (int i = 0; i < n; ++i) {
      norm += w[i] * w[i];
      ray += w[i] * v[i];
    }
    norm = std::sqrt(norm);
    if (norm == 0.0) return -shift;
    for (int i = 0; i < n; ++i) v[i] = w[i] / norm;
    if (it > 1 && std::abs(ray - prev) < tol * std::max(1.0, std::abs(ray)))
      return ray - shift;
    prev = ray;
  }
  return prev - shift;
}

}  // namespace sgtest
