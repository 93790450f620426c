// Independent oracles used only by the tests. None of these share code paths
// with the library routines they check: rank is recomputed by rational
// Gaussian elimination, matchings and isomorphism by brute force, graph
// families by filtering all edge subsets.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "signull/int_matrix.hpp"
#include "signull/signed_graph.hpp"

namespace oracle {

using signull::Edge;
using signull::Sign;
using signull::SignedGraph;
using signull::Vertex;

// Rank over Q by textbook elimination on rationals, partial pivoting on the
// first nonzero in the column.
inline std::size_t rational_rank(const signull::IntMatrix& a) {
  using Q = boost::multiprecision::cpp_rational;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::vector<std::vector<Q>> m(rows, std::vector<Q>(cols, 0));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = a(i, j);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][col] == 0) continue;
      const Q f = m[r][col] / m[rank][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[rank][c];
    }
    ++rank;
  }
  return rank;
}

inline std::size_t rational_rank(const SignedGraph& g) {
  signull::IntMatrix a(g.order(), g.order());
  for (Vertex i = 0; i < g.order(); ++i)
    for (Vertex j = 0; j < g.order(); ++j) a(i, j) = g.entry(i, j);
  return rational_rank(a);
}

inline std::size_t rational_nullity(const SignedGraph& g) { return g.order() - rational_rank(g); }

// Largest set of pairwise disjoint edges, by trying every edge subset.
inline std::size_t brute_force_matching(const SignedGraph& g) {
  const auto& e = g.edges();
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << e.size()); ++mask) {
    std::vector<bool> used(g.order(), false);
    bool ok = true;
    std::size_t size = 0;
    for (std::size_t i = 0; i < e.size() && ok; ++i) {
      if (!(mask >> i & 1)) continue;
      if (used[e[i].u] || used[e[i].v]) ok = false;
      used[e[i].u] = used[e[i].v] = true;
      ++size;
    }
    if (ok) best = std::max(best, size);
  }
  return best;
}

// Isomorphism of underlying graphs by trying every vertex permutation.
inline bool brute_force_isomorphic(const SignedGraph& a, const SignedGraph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  std::vector<Vertex> perm(a.order());
  std::iota(perm.begin(), perm.end(), Vertex{0});
  do {
    bool same = true;
    for (const auto& e : a.edges()) {
      if (!b.adjacent(perm[e.u], perm[e.v])) {
        same = false;
        break;
      }
    }
    if (same) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline bool connected_by_dfs(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  if (n <= 1) return true;
  std::vector<std::vector<Vertex>> adj(n);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    const Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : adj[x])
      if (!seen[y]) {
        seen[y] = true;
        ++count;
        stack.push_back(y);
      }
  }
  return count == n;
}

// All connected labeled graphs on n vertices with exactly m edges.
inline std::vector<SignedGraph> connected_graphs_with_edges(std::size_t n, std::size_t m) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::vector<SignedGraph> out;
  if (m > pairs.size()) return out;
  std::vector<bool> pick(pairs.size(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(m), true);
  do {
    std::vector<std::pair<Vertex, Vertex>> chosen;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (pick[i]) chosen.push_back(pairs[i]);
    if (connected_by_dfs(n, chosen)) {
      std::vector<Edge> edges;
      for (auto [u, v] : chosen) edges.push_back({u, v, Sign::Positive});
      out.push_back(signull::build_graph(n, std::move(edges)));
    }
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

// Isomorphism classes of a list, by pairwise brute-force comparison.
inline std::vector<SignedGraph> brute_force_classes(const std::vector<SignedGraph>& graphs) {
  std::vector<SignedGraph> reps;
  for (const auto& g : graphs) {
    bool fresh = true;
    for (const auto& r : reps) {
      if (brute_force_isomorphic(g, r)) {
        fresh = false;
        break;
      }
    }
    if (fresh) reps.push_back(g);
  }
  return reps;
}

// Every simple cycle of a small graph, each as its sign; used to check
// balance without the spanning-forest machinery.
inline std::vector<Sign> all_cycle_signs(const SignedGraph& g) {
  std::vector<Sign> out;
  const std::size_t n = g.order();
  std::vector<Vertex> path;
  std::vector<bool> on(n, false);
  // Cycles are rooted at their least vertex and traversed with second < last.
  auto dfs = [&](auto&& self, Vertex root, Vertex x, Sign s) -> void {
    for (Vertex y : g.neighbors(x)) {
      if (y == root && path.size() >= 3 && path[1] < path.back()) {
        out.push_back(s * *g.sign(x, y));
      }
      if (y <= root || on[y]) continue;
      on[y] = true;
      path.push_back(y);
      self(self, root, y, s * *g.sign(x, y));
      path.pop_back();
      on[y] = false;
    }
  };
  for (Vertex r = 0; r < n; ++r) {
    path = {r};
    on.assign(n, false);
    on[r] = true;
    dfs(dfs, r, r, Sign::Positive);
  }
  return out;
}

inline SignedGraph random_signed_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution edge(p);
  std::bernoulli_distribution neg(0.5);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (edge(rng)) edges.push_back({u, v, neg(rng) ? Sign::Negative : Sign::Positive});
  return signull::build_graph(n, std::move(edges));
}

inline signull::SwitchingFunction random_switching(std::mt19937_64& rng, std::size_t n) {
  std::bernoulli_distribution neg(0.5);
  std::vector<Sign> s(n);
  for (auto& x : s) x = neg(rng) ? Sign::Negative : Sign::Positive;
  return signull::SwitchingFunction(std::move(s));
}

inline SignedGraph random_connected_signed_graph(std::mt19937_64& rng, std::size_t n, double p) {
  for (;;) {
    auto g = random_signed_graph(rng, n, p);
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (const auto& e : g.edges()) pairs.emplace_back(e.u, e.v);
    if (connected_by_dfs(n, pairs)) return g;
  }
}

}  // namespace oracle
