#ifndef SIGNULL_SIGNED_GRAPH_HPP
#define SIGNULL_SIGNED_GRAPH_HPP

// Signed graphs: a simple undirected graph with a +1/-1 label on every edge.
//
// Vertices are dense ids 0..order-1. A SignedGraph is an immutable value;
// every transformation in the library returns a new graph. The edge list is
// kept in canonical order (u < v, lexicographic), so two equal graphs have
// identical serializations.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "signull/int_matrix.hpp"

namespace signull {

using Vertex = std::uint32_t;

enum class Sign : std::int8_t { Negative = -1, Positive = 1 };

constexpr Sign operator*(Sign a, Sign b) noexcept {
  return a == b ? Sign::Positive : Sign::Negative;
}
constexpr Sign operator-(Sign s) noexcept {
  return s == Sign::Positive ? Sign::Negative : Sign::Positive;
}
constexpr int to_int(Sign s) noexcept { return static_cast<int>(s); }
constexpr char to_char(Sign s) noexcept { return s == Sign::Positive ? '+' : '-'; }

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  Sign sign = Sign::Positive;

  friend constexpr bool operator==(const Edge&, const Edge&) = default;
  friend constexpr auto operator<=>(const Edge& a, const Edge& b) noexcept {
    if (auto c = a.u <=> b.u; c != 0) return c;
    if (auto c = a.v <=> b.v; c != 0) return c;
    return to_int(a.sign) <=> to_int(b.sign);
  }
};

class SignedGraph;
SignedGraph build_graph(std::size_t order, std::vector<Edge> edges);

class SignedGraph {
 public:
  SignedGraph() = default;

  [[nodiscard]] std::size_t order() const noexcept { return order_; }
  [[nodiscard]] std::size_t size() const noexcept { return edges_.size(); }
  [[nodiscard]] const std::vector<Edge>& edges() const noexcept { return edges_; }

  // Signed adjacency entry: +1, -1, or 0 when u and v are not adjacent.
  [[nodiscard]] int entry(Vertex u, Vertex v) const noexcept { return adj_[u * order_ + v]; }
  [[nodiscard]] bool adjacent(Vertex u, Vertex v) const noexcept { return entry(u, v) != 0; }
  [[nodiscard]] std::optional<Sign> sign(Vertex u, Vertex v) const noexcept {
    const int e = entry(u, v);
    if (e == 0) return std::nullopt;
    return static_cast<Sign>(e);
  }

  [[nodiscard]] const std::vector<Vertex>& neighbors(Vertex v) const noexcept { return nbrs_[v]; }
  [[nodiscard]] std::size_t degree(Vertex v) const noexcept { return nbrs_[v].size(); }

  [[nodiscard]] bool all_positive() const noexcept {
    return std::all_of(edges_.begin(), edges_.end(),
                       [](const Edge& e) { return e.sign == Sign::Positive; });
  }

  friend bool operator==(const SignedGraph& a, const SignedGraph& b) noexcept {
    return a.order_ == b.order_ && a.edges_ == b.edges_;
  }

 private:
  friend SignedGraph build_graph(std::size_t order, std::vector<Edge> edges);

  std::size_t order_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::int8_t> adj_;
  std::vector<std::vector<Vertex>> nbrs_;
};

// Validates and normalizes an edge list. Endpoints may be given in either
// order; the stored form has u < v and is sorted.
inline SignedGraph build_graph(std::size_t order, std::vector<Edge> edges) {
  for (auto& e : edges) {
    if (e.u == e.v) {
      throw GraphError("self-loop at vertex " + std::to_string(e.u));
    }
    if (e.u >= order || e.v >= order) {
      throw GraphError("vertex id " + std::to_string(std::max(e.u, e.v)) +
                       " out of range for order " + std::to_string(order));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (edges[i].u == edges[i - 1].u && edges[i].v == edges[i - 1].v) {
      throw GraphError("duplicate edge " + std::to_string(edges[i].u) + "-" +
                       std::to_string(edges[i].v));
    }
  }
  SignedGraph g;
  g.order_ = order;
  g.adj_.assign(order * order, 0);
  g.nbrs_.assign(order, {});
  for (const auto& e : edges) {
    g.adj_[e.u * order + e.v] = static_cast<std::int8_t>(to_int(e.sign));
    g.adj_[e.v * order + e.u] = static_cast<std::int8_t>(to_int(e.sign));
    g.nbrs_[e.u].push_back(e.v);
    g.nbrs_[e.v].push_back(e.u);
  }
  for (auto& n : g.nbrs_) std::sort(n.begin(), n.end());
  g.edges_ = std::move(edges);
  return g;
}

struct SwitchingFunction {
  std::vector<Sign> signs;

  SwitchingFunction() = default;
  explicit SwitchingFunction(std::vector<Sign> s) : signs(std::move(s)) {}

  static SwitchingFunction identity(std::size_t n) {
    return SwitchingFunction(std::vector<Sign>(n, Sign::Positive));
  }

  [[nodiscard]] std::size_t size() const noexcept { return signs.size(); }
  Sign operator[](std::size_t v) const { return signs[v]; }
  [[nodiscard]] bool is_identity() const noexcept {
    return std::all_of(signs.begin(), signs.end(), [](Sign s) { return s == Sign::Positive; });
  }

  friend bool operator==(const SwitchingFunction&, const SwitchingFunction&) = default;
};

// Pointwise product; composing two switchings.
inline SwitchingFunction operator*(const SwitchingFunction& a, const SwitchingFunction& b) {
  if (a.size() != b.size()) throw GraphError("switching functions differ in length");
  std::vector<Sign> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
  return SwitchingFunction(std::move(out));
}

struct Cycle {
  std::vector<Vertex> vertices;

  [[nodiscard]] std::size_t length() const noexcept { return vertices.size(); }
  friend bool operator==(const Cycle&, const Cycle&) = default;
};

struct Balanced {
  SwitchingFunction theta;
};
struct Unbalanced {
  Cycle cycle;
};

struct BalanceWitness {
  std::variant<Balanced, Unbalanced> value;

  [[nodiscard]] bool balanced() const noexcept { return std::holds_alternative<Balanced>(value); }
  [[nodiscard]] const SwitchingFunction& theta() const { return std::get<Balanced>(value).theta; }
  [[nodiscard]] const Cycle& cycle() const { return std::get<Unbalanced>(value).cycle; }
};

inline IntMatrix adjacency_matrix(const SignedGraph& g) {
  const std::size_t n = g.order();
  IntMatrix m(n, n);
  for (const auto& e : g.edges()) {
    m(e.u, e.v) = to_int(e.sign);
    m(e.v, e.u) = to_int(e.sign);
  }
  return m;
}

inline Sign cycle_sign(const SignedGraph& g, const Cycle& c) {
  const auto& vs = c.vertices;
  if (vs.size() < 3) throw GraphError("cycle must have at least 3 vertices");
  std::vector<bool> seen(g.order(), false);
  for (Vertex v : vs) {
    if (v >= g.order()) throw GraphError("cycle vertex out of range");
    if (seen[v]) throw GraphError("cycle repeats vertex " + std::to_string(v));
    seen[v] = true;
  }
  Sign s = Sign::Positive;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const Vertex a = vs[i];
    const Vertex b = vs[(i + 1) % vs.size()];
    auto e = g.sign(a, b);
    if (!e) {
      throw GraphError("not a cycle: " + std::to_string(a) + "-" + std::to_string(b) +
                       " is not an edge");
    }
    s = s * *e;
  }
  return s;
}

// Resigns every edge uv to theta(u) * sigma(uv) * theta(v).
inline SignedGraph apply_switching(const SignedGraph& g, const SwitchingFunction& theta) {
  if (theta.size() != g.order()) {
    throw GraphError("switching function length " + std::to_string(theta.size()) +
                     " does not match order " + std::to_string(g.order()));
  }
  std::vector<Edge> edges = g.edges();
  for (auto& e : edges) e.sign = theta[e.u] * e.sign * theta[e.v];
  return build_graph(g.order(), std::move(edges));
}

// The spanning forest every other routine agrees on: breadth-first from the
// lowest unvisited vertex, neighbours taken in ascending order.
struct SpanningForest {
  std::vector<Vertex> parent;       // parent[root] == root
  std::vector<std::size_t> depth;
  std::vector<std::size_t> component;
  std::vector<Vertex> order;        // BFS visit order
  std::size_t components = 0;
  std::vector<Edge> non_tree;       // in canonical edge order

  [[nodiscard]] bool is_tree_edge(Vertex u, Vertex v) const noexcept {
    return (parent[v] == u && u != v) || (parent[u] == v && u != v);
  }
};

inline SpanningForest spanning_forest(const SignedGraph& g) {
  const std::size_t n = g.order();
  SpanningForest f;
  f.parent.assign(n, 0);
  f.depth.assign(n, 0);
  f.component.assign(n, 0);
  std::vector<bool> seen(n, false);
  std::queue<Vertex> q;
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = true;
    f.parent[root] = root;
    f.component[root] = f.components;
    q.push(root);
    while (!q.empty()) {
      const Vertex x = q.front();
      q.pop();
      f.order.push_back(x);
      for (Vertex y : g.neighbors(x)) {
        if (seen[y]) continue;
        seen[y] = true;
        f.parent[y] = x;
        f.depth[y] = f.depth[x] + 1;
        f.component[y] = f.components;
        q.push(y);
      }
    }
    ++f.components;
  }
  for (const auto& e : g.edges()) {
    if (!f.is_tree_edge(e.u, e.v)) f.non_tree.push_back(e);
  }
  return f;
}

inline bool is_connected(const SignedGraph& g) {
  return g.order() <= 1 || spanning_forest(g).components == 1;
}

inline bool is_forest(const SignedGraph& g) {
  return spanning_forest(g).non_tree.empty();
}

// Tree path u .. lca .. v; consecutive entries are tree edges.
inline std::vector<Vertex> tree_path(const SpanningForest& f, Vertex u, Vertex v) {
  std::vector<Vertex> up;
  std::vector<Vertex> down;
  Vertex a = u;
  Vertex b = v;
  while (f.depth[a] > f.depth[b]) {
    up.push_back(a);
    a = f.parent[a];
  }
  while (f.depth[b] > f.depth[a]) {
    down.push_back(b);
    b = f.parent[b];
  }
  while (a != b) {
    up.push_back(a);
    down.push_back(b);
    a = f.parent[a];
    b = f.parent[b];
  }
  up.push_back(a);
  up.insert(up.end(), down.rbegin(), down.rend());
  return up;
}

// One cycle per non-tree edge of the canonical spanning forest.
inline std::vector<Cycle> fundamental_cycles(const SignedGraph& g) {
  const auto f = spanning_forest(g);
  std::vector<Cycle> out;
  out.reserve(f.non_tree.size());
  for (const auto& e : f.non_tree) out.push_back(Cycle{tree_path(f, e.u, e.v)});
  return out;
}

// Switching that makes every edge of the canonical spanning forest positive;
// each component root keeps sign +.
inline SwitchingFunction tree_gauge(const SignedGraph& g, const SpanningForest& f) {
  std::vector<Sign> theta(g.order(), Sign::Positive);
  for (Vertex x : f.order) {
    const Vertex p = f.parent[x];
    if (p != x) theta[x] = theta[p] * *g.sign(p, x);
  }
  return SwitchingFunction(std::move(theta));
}

inline BalanceWitness is_balanced(const SignedGraph& g) {
  const auto f = spanning_forest(g);
  auto theta = tree_gauge(g, f);
  for (const auto& e : f.non_tree) {
    if (theta[e.u] * e.sign * theta[e.v] == Sign::Negative) {
      return BalanceWitness{Unbalanced{Cycle{tree_path(f, e.u, e.v)}}};
    }
  }
  return BalanceWitness{Balanced{std::move(theta)}};
}

inline bool same_underlying(const SignedGraph& a, const SignedGraph& b) noexcept {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.edges()[i].u != b.edges()[i].u || a.edges()[i].v != b.edges()[i].v) return false;
  }
  return true;
}

// Returns theta with apply_switching(g1, theta) == g2, or nullopt when the
// signatures lie in different switching classes.
inline std::optional<SwitchingFunction> switching_equivalent(const SignedGraph& g1,
                                                             const SignedGraph& g2) {
  if (!same_underlying(g1, g2)) {
    throw GraphError("switching_equivalent: underlying graphs differ");
  }
  const auto f = spanning_forest(g1);
  const auto t1 = tree_gauge(g1, f);
  const auto t2 = tree_gauge(g2, f);
  for (const auto& e : f.non_tree) {
    const Sign s1 = t1[e.u] * e.sign * t1[e.v];
    const Sign s2 = t2[e.u] * *g2.sign(e.u, e.v) * t2[e.v];
    if (s1 != s2) return std::nullopt;
  }
  return t1 * t2;
}

// ---------------------------------------------------------------------------
// Structural helpers shared by the reductions, recognizers and enumerators.

inline SignedGraph underlying(const SignedGraph& g) {
  std::vector<Edge> edges = g.edges();
  for (auto& e : edges) e.sign = Sign::Positive;
  return build_graph(g.order(), std::move(edges));
}

// Induced subgraph on the kept vertices, relabelled order-preservingly.
inline SignedGraph induced_subgraph(const SignedGraph& g, const std::vector<bool>& keep) {
  std::vector<Vertex> id(g.order(), 0);
  std::size_t next = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (keep[v]) id[v] = static_cast<Vertex>(next++);
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (keep[e.u] && keep[e.v]) edges.push_back({id[e.u], id[e.v], e.sign});
  }
  return build_graph(next, std::move(edges));
}

// Relabels vertex v as perm[v].
inline SignedGraph relabel(const SignedGraph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.order()) throw GraphError("relabel: permutation length mismatch");
  std::vector<Edge> edges;
  edges.reserve(g.size());
  for (const auto& e : g.edges()) edges.push_back({perm[e.u], perm[e.v], e.sign});
  return build_graph(g.order(), std::move(edges));
}

inline SignedGraph disjoint_union(const SignedGraph& a, const SignedGraph& b) {
  std::vector<Edge> edges = a.edges();
  const auto shift = static_cast<Vertex>(a.order());
  for (const auto& e : b.edges()) edges.push_back({e.u + shift, e.v + shift, e.sign});
  return build_graph(a.order() + b.order(), std::move(edges));
}

inline std::size_t isolated_count(const SignedGraph& g) {
  std::size_t k = 0;
  for (Vertex v = 0; v < g.order(); ++v) k += g.degree(v) == 0 ? 1 : 0;
  return k;
}

// Star K_{1,k} (k >= 1) on all vertices, no isolated vertices.
inline bool is_star(const SignedGraph& g) {
  if (g.order() < 2 || g.size() != g.order() - 1) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == g.order() - 1) return true;
  }
  return false;
}

// Convenience constructors used throughout tests and generators.
inline SignedGraph path_graph(std::size_t n, Sign s = Sign::Positive) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, s});
  return build_graph(n, std::move(edges));
}

// Cycle 0-1-..-(n-1)-0; when `balanced` is false the closing edge is negative.
inline SignedGraph cycle_graph(std::size_t n, bool balanced = true) {
  if (n < 3) throw GraphError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, Sign::Positive});
  edges.push_back({0, static_cast<Vertex>(n - 1), balanced ? Sign::Positive : Sign::Negative});
  return build_graph(n, std::move(edges));
}

inline SignedGraph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= leaves; ++i) edges.push_back({0, i, Sign::Positive});
  return build_graph(leaves + 1, std::move(edges));
}

inline SignedGraph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < a; ++i)
    for (Vertex j = 0; j < b; ++j) edges.push_back({i, static_cast<Vertex>(a + j), Sign::Positive});
  return build_graph(a + b, std::move(edges));
}

}  // namespace signull

#endif  // SIGNULL_SIGNED_GRAPH_HPP
