#ifndef SIGNULL_REDUCTIONS_HPP
#define SIGNULL_REDUCTIONS_HPP

// Nullity-preserving transformations.
//
//  * Pendant-pair deletion: removing a degree-1 vertex together with its
//    neighbour leaves the nullity unchanged.
//  * Special-path rewiring: for a path v1-v2-v3 with deg(v2) = 2, v1v3 not an
//    edge and N(v1), N(v3) meeting only in v2, signed (-,+) on (v1v2, v2v3),
//    moving an edge vv1 to vv3 (same sign) keeps the nullity.
//  * Special-path contraction: rewiring every other neighbour of v1 and then
//    deleting the pendant pair (v1, v2) collapses the path into one vertex.
//
// Paths whose signs are not (-,+) must be normalized by switching at v1
// and/or v3 first; the rewiring and contraction routines refuse otherwise.

#include <algorithm>
#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "signull/signed_graph.hpp"

namespace signull {

struct SpecialPath {
  Vertex v1 = 0;
  Vertex v2 = 0;
  Vertex v3 = 0;

  friend constexpr auto operator<=>(const SpecialPath&, const SpecialPath&) = default;
};

struct PendantDeletion {
  Vertex pendant = 0;
  Vertex neighbor = 0;
};

struct SwitchingStep {
  SwitchingFunction theta;
};

struct PathContraction {
  SpecialPath path;
  Vertex merged = 0;             // id of the new vertex in the contracted graph
  std::vector<Vertex> mapping;   // old id -> new id; v1, v2, v3 all map to `merged`
};

using ReductionStep = std::variant<PendantDeletion, SwitchingStep, PathContraction>;

struct ReductionTrace {
  std::vector<ReductionStep> steps;
};

// Pairs (v, u) with deg(v) = 1 and u the unique neighbour of v, sorted by v.
inline std::vector<std::pair<Vertex, Vertex>> find_pendants(const SignedGraph& g) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 1) out.emplace_back(v, g.neighbors(v).front());
  }
  return out;
}

inline bool is_pendant_pair(const SignedGraph& g, Vertex v, Vertex u) {
  return v < g.order() && u < g.order() && g.degree(v) == 1 && g.neighbors(v).front() == u;
}

inline SignedGraph delete_pendant_pair(const SignedGraph& g, Vertex v, Vertex u) {
  if (!is_pendant_pair(g, v, u)) {
    throw GraphError("(" + std::to_string(v) + "," + std::to_string(u) + ") is not a pendant pair");
  }
  std::vector<bool> keep(g.order(), true);
  keep[v] = false;
  keep[u] = false;
  return induced_subgraph(g, keep);
}

inline bool is_special_path(const SignedGraph& g, const SpecialPath& p) {
  const auto n = g.order();
  if (p.v1 >= n || p.v2 >= n || p.v3 >= n) return false;
  if (p.v1 == p.v3 || p.v1 == p.v2 || p.v2 == p.v3) return false;
  if (!g.adjacent(p.v1, p.v2) || !g.adjacent(p.v2, p.v3)) return false;
  if (g.degree(p.v2) != 2 || g.adjacent(p.v1, p.v3)) return false;
  for (Vertex w : g.neighbors(p.v1)) {
    if (w != p.v2 && g.adjacent(w, p.v3)) return false;
  }
  return true;
}

// Every ordered special path; (v1,v2,v3) and (v3,v2,v1) are both listed.
inline std::vector<SpecialPath> find_special_paths(const SignedGraph& g) {
  std::vector<SpecialPath> out;
  for (Vertex mid = 0; mid < g.order(); ++mid) {
    if (g.degree(mid) != 2) continue;
    const Vertex a = g.neighbors(mid)[0];
    const Vertex b = g.neighbors(mid)[1];
    if (is_special_path(g, {a, mid, b})) {
      out.push_back({a, mid, b});
      out.push_back({b, mid, a});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline bool is_normalized(const SignedGraph& g, const SpecialPath& p) {
  return g.sign(p.v1, p.v2) == Sign::Negative && g.sign(p.v2, p.v3) == Sign::Positive;
}

// Switches at v1 and/or v3 so that sigma(v1v2) = -1 and sigma(v2v3) = +1.
inline std::pair<SignedGraph, SwitchingFunction> normalize_special_path(const SignedGraph& g,
                                                                        const SpecialPath& p) {
  if (!is_special_path(g, p)) throw GraphError("not a special path");
  auto theta = SwitchingFunction::identity(g.order());
  if (*g.sign(p.v1, p.v2) == Sign::Positive) theta.signs[p.v1] = Sign::Negative;
  if (*g.sign(p.v2, p.v3) == Sign::Negative) theta.signs[p.v3] = Sign::Negative;
  return {apply_switching(g, theta), std::move(theta)};
}

namespace detail {
inline void require_normalized(const SignedGraph& g, const SpecialPath& p) {
  if (!is_special_path(g, p)) throw GraphError("not a special path");
  if (!is_normalized(g, p)) {
    throw GraphError("special path must carry signs (-,+) on (v1v2, v2v3); normalize first");
  }
}
}  // namespace detail

// Moves edge v-v1 to v-v3, keeping its sign.
inline SignedGraph rewire_special_path(const SignedGraph& g, const SpecialPath& p, Vertex v) {
  detail::require_normalized(g, p);
  if (v >= g.order() || v == p.v2 || !g.adjacent(v, p.v1)) {
    throw GraphError("vertex " + std::to_string(v) + " is not a neighbour of v1 other than v2");
  }
  if (g.adjacent(v, p.v3)) {
    throw GraphError("edge v-v3 already present");
  }
  const Sign s = *g.sign(v, p.v1);
  std::vector<Edge> edges;
  edges.reserve(g.size());
  for (const auto& e : g.edges()) {
    const bool moved = (e.u == v && e.v == p.v1) || (e.u == p.v1 && e.v == v);
    if (!moved) edges.push_back(e);
  }
  edges.push_back({v, p.v3, s});
  return build_graph(g.order(), std::move(edges));
}

// Contraction with the relabelling it used. The merged vertex takes the
// smallest of the freed ids; all other vertices keep their relative order.
inline std::pair<SignedGraph, PathContraction> contract_special_path_traced(
    const SignedGraph& g, const SpecialPath& p) {
  detail::require_normalized(g, p);
  const Vertex anchor = std::min({p.v1, p.v2, p.v3});
  std::vector<Vertex> mapping(g.order(), 0);
  Vertex next = 0;
  Vertex merged = 0;
  for (Vertex w = 0; w < g.order(); ++w) {
    if (w == anchor) {
      merged = next++;
    } else if (w != p.v1 && w != p.v2 && w != p.v3) {
      mapping[w] = next++;
    }
  }
  mapping[p.v1] = mapping[p.v2] = mapping[p.v3] = merged;

  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    const bool touches_path = e.u == p.v2 || e.v == p.v2;
    if (touches_path) continue;
    edges.push_back({mapping[e.u], mapping[e.v], e.sign});
  }
  PathContraction record{p, merged, std::move(mapping)};
  return {build_graph(g.order() - 2, std::move(edges)), std::move(record)};
}

inline SignedGraph contract_special_path(const SignedGraph& g, const SpecialPath& p) {
  return contract_special_path_traced(g, p).first;
}

// Re-applies a trace; throws if any recorded step does not apply.
inline SignedGraph replay(const SignedGraph& start, const ReductionTrace& trace) {
  SignedGraph g = start;
  for (const auto& step : trace.steps) {
    if (const auto* d = std::get_if<PendantDeletion>(&step)) {
      g = delete_pendant_pair(g, d->pendant, d->neighbor);
    } else if (const auto* s = std::get_if<SwitchingStep>(&step)) {
      g = apply_switching(g, s->theta);
    } else {
      const auto& c = std::get<PathContraction>(step);
      auto [next, record] = contract_special_path_traced(g, c.path);
      if (record.mapping != c.mapping || record.merged != c.merged) {
        throw GraphError("replay: contraction relabelling mismatch");
      }
      g = std::move(next);
    }
  }
  return g;
}

struct ReduceOptions {
  // Also normalize and contract special paths once no pendant remains.
  bool contract_special_paths = false;
};

// Deletes the least pendant pair until none remains; optionally contracts
// the least special path whenever the graph is pendant-free.
inline std::pair<SignedGraph, ReductionTrace> reduce(const SignedGraph& start,
                                                     ReduceOptions opts = {}) {
  SignedGraph g = start;
  ReductionTrace trace;
  for (;;) {
    const auto pendants = find_pendants(g);
    if (!pendants.empty()) {
      const auto [v, u] = pendants.front();
      trace.steps.emplace_back(PendantDeletion{v, u});
      g = delete_pendant_pair(g, v, u);
      continue;
    }
    if (!opts.contract_special_paths) break;
    const auto paths = find_special_paths(g);
    if (paths.empty()) break;
    const auto& p = paths.front();
    if (!is_normalized(g, p)) {
      auto [switched, theta] = normalize_special_path(g, p);
      trace.steps.emplace_back(SwitchingStep{std::move(theta)});
      g = std::move(switched);
    }
    auto [contracted, record] = contract_special_path_traced(g, p);
    trace.steps.emplace_back(std::move(record));
    g = std::move(contracted);
  }
  return {std::move(g), std::move(trace)};
}

}  // namespace signull

#endif  // SIGNULL_REDUCTIONS_HPP
