#ifndef SIGNULL_ENUMERATION_HPP
#define SIGNULL_ENUMERATION_HPP

// Exhaustive generators for small signed graphs.
//
//  * labeled trees via Pruefer sequences (all-positive: every signature of a
//    forest is switching-equivalent to the all-positive one);
//  * bicyclic underlying graphs as an infinity- or theta-base with trees
//    grown onto it one leaf at a time;
//  * connected underlying graphs, one per isomorphism class;
//  * one signature per switching class, by fixing the canonical spanning
//    forest positive and letting the non-tree edges range over all signs.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <unordered_set>
#include <vector>

#include "signull/canonical.hpp"
#include "signull/recognizers.hpp"
#include "signull/signed_graph.hpp"

namespace signull {

// ---------------------------------------------------------------------------
// Labeled trees.

inline SignedGraph tree_from_pruefer(std::size_t n, const std::vector<Vertex>& seq) {
  if (n == 1) return build_graph(1, {});
  if (n == 2) return build_graph(2, {{0, 1, Sign::Positive}});
  std::vector<std::size_t> degree(n, 1);
  for (Vertex x : seq) ++degree[x];
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (Vertex x : seq) {
    Vertex leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.push_back({leaf, x, Sign::Positive});
    --degree[leaf];
    --degree[x];
  }
  Vertex a = 0;
  while (degree[a] != 1) ++a;
  Vertex b = a + 1;
  while (degree[b] != 1) ++b;
  edges.push_back({a, b, Sign::Positive});
  return build_graph(n, std::move(edges));
}

// Streams all n^(n-2) labeled trees on n vertices (one tree for n <= 2).
class LabeledTreeStream {
 public:
  explicit LabeledTreeStream(std::size_t n) : n_(n), seq_(n >= 2 ? n - 2 : 0, 0) {
    if (n == 0) throw GraphError("labeled_trees: n must be at least 1");
  }

  std::optional<SignedGraph> next() {
    if (done_) return std::nullopt;
    auto tree = tree_from_pruefer(n_, seq_);
    // Odometer increment over {0..n-1}^(n-2).
    std::size_t i = 0;
    for (; i < seq_.size(); ++i) {
      if (++seq_[i] < n_) break;
      seq_[i] = 0;
    }
    if (i == seq_.size()) done_ = true;
    return tree;
  }

 private:
  std::size_t n_;
  std::vector<Vertex> seq_;
  bool done_ = false;
};

inline LabeledTreeStream labeled_trees(std::size_t n) { return LabeledTreeStream(n); }

// ---------------------------------------------------------------------------
// Bicyclic bases.

// Cycles C_p on 0..p-1 and C_q, joined by a path with l - 1 edges
// (l = 1: the cycles share vertex 0).
inline SignedGraph make_infinity(std::size_t p, std::size_t q, std::size_t l) {
  if (p < 3 || q < 3 || l < 1) throw GraphError("infinity graph needs p, q >= 3 and l >= 1");
  std::vector<Edge> edges;
  auto id = [](std::size_t x) { return static_cast<Vertex>(x); };
  for (std::size_t i = 0; i < p; ++i) edges.push_back({id(i), id((i + 1) % p), Sign::Positive});
  // Path from vertex 0 to the attachment vertex of C_q.
  std::size_t prev = 0;
  std::size_t next = p;
  for (std::size_t k = 1; k < l; ++k) {
    edges.push_back({id(prev), id(next), Sign::Positive});
    prev = next++;
  }
  const std::size_t anchor = prev;
  std::vector<std::size_t> ring{anchor};
  for (std::size_t k = 1; k < q; ++k) ring.push_back(next++);
  for (std::size_t i = 0; i < q; ++i) {
    edges.push_back({id(ring[i]), id(ring[(i + 1) % q]), Sign::Positive});
  }
  return build_graph(next, std::move(edges));
}

// Three internally disjoint paths of lengths p, q, l between vertices 0 and 1.
inline SignedGraph make_theta(std::size_t p, std::size_t q, std::size_t l) {
  const std::size_t ones = (p == 1) + (q == 1) + (l == 1);
  if (p < 1 || q < 1 || l < 1 || ones > 1) {
    throw GraphError("theta graph needs p, q, l >= 1 with at most one equal to 1");
  }
  std::vector<Edge> edges;
  Vertex next = 2;
  for (std::size_t len : {p, q, l}) {
    Vertex prev = 0;
    for (std::size_t k = 1; k < len; ++k) {
      edges.push_back({prev, next, Sign::Positive});
      prev = next++;
    }
    edges.push_back({prev, 1, Sign::Positive});
  }
  return build_graph(next, std::move(edges));
}

struct BaseShape {
  BaseKind kind;
  std::size_t p;
  std::size_t q;
  std::size_t l;

  [[nodiscard]] SignedGraph graph() const {
    return kind == BaseKind::infinity ? make_infinity(p, q, l) : make_theta(p, q, l);
  }
  [[nodiscard]] std::size_t order() const {
    return kind == BaseKind::infinity ? p + q + l - 2 : p + q + l - 1;
  }
};

// Every base shape with at most `n` vertices, in a fixed order.
inline std::vector<BaseShape> base_shapes(std::size_t n) {
  std::vector<BaseShape> out;
  for (std::size_t p = 3; p <= n; ++p)
    for (std::size_t q = p; p + q - 1 <= n; ++q)
      for (std::size_t l = 1; p + q + l - 2 <= n; ++l) out.push_back({BaseKind::infinity, p, q, l});
  for (std::size_t p = 2; p <= n; ++p)
    for (std::size_t q = 2; q <= p; ++q)
      for (std::size_t l = 1; l <= q && p + q + l - 1 <= n; ++l)
        out.push_back({BaseKind::theta, p, q, l});
  return out;
}

// Streams the graphs grown from one base: vertices base..n-1 are attached in
// turn, vertex k to any earlier vertex. Every tree attachment arises this way.
class GrownBaseStream {
 public:
  GrownBaseStream(SignedGraph base, std::size_t n)
      : base_(std::move(base)), n_(n), parent_(n - std::min(n, base_.order()), 0) {
    if (base_.order() > n) done_ = true;
  }

  std::optional<SignedGraph> next() {
    if (done_) return std::nullopt;
    std::vector<Edge> edges = base_.edges();
    const std::size_t b = base_.order();
    for (std::size_t i = 0; i < parent_.size(); ++i) {
      edges.push_back({parent_[i], static_cast<Vertex>(b + i), Sign::Positive});
    }
    auto g = build_graph(n_, std::move(edges));
    std::size_t i = 0;
    for (; i < parent_.size(); ++i) {
      if (++parent_[i] < b + i) break;
      parent_[i] = 0;
    }
    if (i == parent_.size()) done_ = true;
    return g;
  }

 private:
  SignedGraph base_;
  std::size_t n_;
  std::vector<Vertex> parent_;
  bool done_ = false;
};

// All-positive connected graphs of order n with n + 1 edges; every
// isomorphism class appears at least once, possibly several times.
class BicyclicStream {
 public:
  explicit BicyclicStream(std::size_t n) : n_(n), shapes_(base_shapes(n)) {
    if (n < 4) throw GraphError("bicyclic graphs need at least 4 vertices");
  }

  std::optional<SignedGraph> next() {
    for (;;) {
      if (current_) {
        if (auto g = current_->next()) return g;
        current_.reset();
      }
      if (shape_ == shapes_.size()) return std::nullopt;
      current_.emplace(shapes_[shape_++].graph(), n_);
    }
  }

 private:
  std::size_t n_;
  std::vector<BaseShape> shapes_;
  std::size_t shape_ = 0;
  std::optional<GrownBaseStream> current_;
};

inline BicyclicStream bicyclic_underlying(std::size_t n) { return BicyclicStream(n); }

// One canonically labelled graph per isomorphism class, sorted by code.
struct ClassRepresentative {
  CanonicalCode code;
  SignedGraph graph;
};

inline std::vector<ClassRepresentative> dedup_by_isomorphism(
    const std::vector<SignedGraph>& graphs) {
  std::vector<ClassRepresentative> out;
  std::set<CanonicalCode> seen;
  for (const auto& g : graphs) {
    auto form = canonical_form(g);
    if (seen.insert(form.code).second) {
      out.push_back({form.code, relabel(g, form.position)});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.code < b.code; });
  return out;
}

inline std::vector<ClassRepresentative> bicyclic_classes(std::size_t n) {
  std::set<CanonicalCode> seen;
  std::vector<ClassRepresentative> out;
  auto stream = bicyclic_underlying(n);
  while (auto g = stream.next()) {
    auto form = canonical_form(*g);
    if (seen.insert(form.code).second) out.push_back({form.code, relabel(*g, form.position)});
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.code < b.code; });
  return out;
}

// Connected underlying graphs of order n, one per isomorphism class. Built by
// adding a vertex with every nonempty neighbourhood to each class of order
// n - 1; every connected graph has a vertex whose removal keeps it connected.
inline std::vector<ClassRepresentative> connected_classes(std::size_t n) {
  if (n == 0) return {};
  if (n == 1) {
    auto g = build_graph(1, {});
    return {{canonical_code(g), g}};
  }
  std::set<CanonicalCode> seen;
  std::vector<ClassRepresentative> out;
  const auto smaller = connected_classes(n - 1);
  const auto last = static_cast<Vertex>(n - 1);
  for (const auto& h : smaller) {
    for (std::uint32_t mask = 1; mask < (1u << (n - 1)); ++mask) {
      std::vector<Edge> edges = h.graph.edges();
      for (Vertex v = 0; v < last; ++v)
        if (mask & (1u << v)) edges.push_back({v, last, Sign::Positive});
      auto g = build_graph(n, std::move(edges));
      auto form = canonical_form(g);
      if (seen.insert(form.code).second) out.push_back({form.code, relabel(g, form.position)});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.code < b.code; });
  return out;
}

// ---------------------------------------------------------------------------
// Switching-class representatives.

inline std::size_t cyclomatic_number(const SignedGraph& g) {
  return spanning_forest(g).non_tree.size();
}

// Calls fn for each of the 2^c representatives of a connected graph's
// switching classes; representative k negates the non-tree edges whose bit is
// set in k. Representative 0 is all-positive.
inline void for_each_signature(const SignedGraph& g,
                               const std::function<void(const SignedGraph&)>& fn) {
  if (!is_connected(g)) throw GraphError("signature_representatives: graph is disconnected");
  const auto forest = spanning_forest(g);
  const auto& free_edges = forest.non_tree;
  if (free_edges.size() >= 32) throw GraphError("too many independent cycles");
  std::vector<Edge> edges = g.edges();
  std::vector<std::size_t> slot;
  for (const auto& e : free_edges) {
    slot.push_back(static_cast<std::size_t>(
        std::lower_bound(edges.begin(), edges.end(), e,
                         [](const Edge& a, const Edge& b) {
                           return a.u < b.u || (a.u == b.u && a.v < b.v);
                         }) -
        edges.begin()));
  }
  for (auto& e : edges) e.sign = Sign::Positive;
  const std::uint64_t total = std::uint64_t{1} << free_edges.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    for (std::size_t i = 0; i < slot.size(); ++i) {
      edges[slot[i]].sign = (mask >> i) & 1 ? Sign::Negative : Sign::Positive;
    }
    fn(build_graph(g.order(), edges));
  }
}

inline std::vector<SignedGraph> signature_representatives(const SignedGraph& g) {
  std::vector<SignedGraph> out;
  for_each_signature(g, [&](const SignedGraph& s) { out.push_back(s); });
  return out;
}

}  // namespace signull

#endif  // SIGNULL_ENUMERATION_HPP
