#ifndef SIGNULL_VERIFICATION_HPP
#define SIGNULL_VERIFICATION_HPP

// Exhaustive verification sweeps and nullity catalogs.
//
// A sweep enumerates a family of signed graphs (labeled trees, signed
// cycles, connected graphs x switching classes, bicyclic graphs x switching
// classes), checks a predicate on each instance and collects violations with
// a replayable witness. Work is split into items that are checked
// independently on a small thread pool; partial results are merged in item
// order, so reports do not depend on the thread count.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "signull/canonical.hpp"
#include "signull/enumeration.hpp"
#include "signull/exact_rank.hpp"
#include "signull/graph_io.hpp"
#include "signull/recognizers.hpp"
#include "signull/reductions.hpp"
#include "signull/signed_graph.hpp"

namespace signull {

class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

inline constexpr const char* kCeilingEnv = "SIGNULL_MAX_N";

struct EnumerationLimits {
  static constexpr std::size_t kDefaultCeiling = 8;
  static constexpr std::size_t kHardCeiling = 10;

  std::size_t ceiling = kDefaultCeiling;

  // Reads SIGNULL_MAX_N; values above the hard ceiling are clamped.
  static EnumerationLimits from_environment() {
    EnumerationLimits limits;
    if (const char* raw = std::getenv(kCeilingEnv)) {
      char* end = nullptr;
      const auto v = std::strtoul(raw, &end, 10);
      if (end != raw && *end == '\0' && v > 0) {
        limits.ceiling = std::min<std::size_t>(v, kHardCeiling);
      }
    }
    return limits;
  }
};

struct SweepOptions {
  std::size_t threads = 1;
  EnumerationLimits limits{};
};

struct Violation {
  std::size_t order = 0;
  std::string message;
  SignedGraph witness;

  friend bool operator<(const Violation& a, const Violation& b) {
    return std::tuple(a.order, a.message, serialize_graph(a.witness)) <
           std::tuple(b.order, b.message, serialize_graph(b.witness));
  }
};

struct TheoremReport {
  std::string theorem_id;
  std::vector<std::size_t> orders_checked;
  std::uint64_t instances_checked = 0;
  std::vector<Violation> violations;
  std::map<std::string, std::uint64_t> counters;
  double elapsed_seconds = 0.0;

  [[nodiscard]] bool ok() const noexcept { return violations.empty(); }

  void fail(const SignedGraph& g, std::string message) {
    violations.push_back({g.order(), std::move(message), g});
  }
  void count(const std::string& key, std::uint64_t by = 1) { counters[key] += by; }

  void absorb(TheoremReport&& other) {
    instances_checked += other.instances_checked;
    for (auto& v : other.violations) violations.push_back(std::move(v));
    for (const auto& [k, c] : other.counters) counters[k] += c;
  }
};

namespace detail {

// Runs check(item, partial) for every item; partials merge in item order.
template <typename Item, typename Check>
TheoremReport parallel_sweep(const std::vector<Item>& items, std::size_t threads, Check check) {
  std::vector<TheoremReport> partial(items.size());
  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    for (std::size_t i = cursor++; i < items.size(); i = cursor++) check(items[i], partial[i]);
  };
  const std::size_t workers = std::max<std::size_t>(1, std::min(threads, items.size()));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(worker);
  }
  TheoremReport merged;
  for (auto& p : partial) merged.absorb(std::move(p));
  std::sort(merged.violations.begin(), merged.violations.end());
  return merged;
}

inline void require_range(std::size_t n_min, std::size_t n_max, const EnumerationLimits& limits) {
  if (n_min > n_max) throw RangeError("empty order range");
  if (n_max > limits.ceiling) {
    throw RangeError("order " + std::to_string(n_max) + " exceeds enumeration ceiling " +
                     std::to_string(limits.ceiling) + " (raise with " + kCeilingEnv + ", at most " +
                     std::to_string(EnumerationLimits::kHardCeiling) + ")");
  }
}

inline std::vector<std::size_t> orders(std::size_t lo, std::size_t hi) {
  std::vector<std::size_t> out;
  for (std::size_t n = lo; n <= hi; ++n) out.push_back(n);
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Individual sweeps.

// Pendant-free, special-path, rank-class and bound predicates evaluated on
// one signed instance; which ones run is selected by the flags.
struct InstanceChecks {
  bool rank2 = false;
  bool rank3 = false;
  bool pendant_bound = false;
  bool special_path_bound = false;
  bool unbalanced_bicyclic = false;
  bool reductions = false;
};

namespace detail {

inline void check_reductions(const SignedGraph& g, std::size_t eta, TheoremReport& r) {
  for (const auto& [v, u] : find_pendants(g)) {
    r.count("pendant_deletions");
    const auto h = delete_pendant_pair(g, v, u);
    if (nullity(h) != eta) {
      r.fail(g, "pendant deletion (" + std::to_string(v) + "," + std::to_string(u) +
                    ") changed nullity");
    }
  }
  for (const auto& p : find_special_paths(g)) {
    r.count("path_contractions");
    const auto normalized = normalize_special_path(g, p).first;
    if (nullity(normalized) != eta) r.fail(g, "switching changed nullity");
    const auto h = contract_special_path(normalized, p);
    if (nullity(h) != eta) {
      r.fail(g, "contraction of (" + std::to_string(p.v1) + "," + std::to_string(p.v2) + "," +
                    std::to_string(p.v3) + ") changed nullity");
    }
  }
  const auto residue = reduce(g).first;
  if (is_forest(residue)) {
    r.count("residue_formula_checks");
    if (forest_nullity_formula(residue) != eta) r.fail(g, "forest residue formula mismatch");
  } else if (residue.size() == residue.order() && is_connected(residue)) {
    bool two_regular = true;
    for (Vertex v = 0; v < residue.order(); ++v) two_regular &= residue.degree(v) == 2;
    if (two_regular) {
      r.count("residue_formula_checks");
      const bool bal = is_balanced(residue).balanced();
      if (cycle_nullity_formula(residue.order(), bal) != eta) {
        r.fail(g, "cycle residue formula mismatch");
      }
    }
  }
}

inline void check_instance(const SignedGraph& g, const InstanceChecks& c, TheoremReport& r) {
  ++r.instances_checked;
  const std::size_t n = g.order();
  const std::size_t rk = graph_rank(g);
  const std::size_t eta = n - rk;

  if (c.rank2) {
    const auto v = recognize_rank2(g);
    if (v.matches != (rk == 2)) {
      r.fail(g, "rank-2 recognizer says " + std::string(v.matches ? "match" : "no match") +
                    " but rank is " + std::to_string(rk));
    }
    if (v.matches) {
      r.count("rank2_matches");
      if (!revalidate_rank2(g, v)) r.fail(g, "rank-2 certificate does not revalidate");
    }
  }
  if (c.rank3) {
    const auto v = recognize_rank3(g);
    if (v.matches != (rk == 3)) {
      r.fail(g, "rank-3 recognizer says " + std::string(v.matches ? "match" : "no match") +
                    " but rank is " + std::to_string(rk));
    }
    if (v.matches) {
      r.count("rank3_matches");
      if (!revalidate_rank3(g, v)) r.fail(g, "rank-3 certificate does not revalidate");
    }
    if (rk <= 3 && isolated_count(g) == 0) {
      for (Vertex x = 0; x < n; ++x) {
        r.count("structure_checks");
        if (!lemma22_structure_check(g, x)) {
          r.fail(g, "rank <= 3 but structure check fails at x = " + std::to_string(x));
        }
      }
    }
  }
  if (c.pendant_bound && n >= 4 && !find_pendants(g).empty() && !is_star(g)) {
    r.count("pendant_bound_instances");
    if (eta + 4 > n) r.fail(g, "graph with a pendant vertex has nullity " + std::to_string(eta));
  }
  if (c.special_path_bound && !find_special_paths(g).empty()) {
    r.count("special_path_instances");
    if (eta + 4 > n) r.fail(g, "bicyclic graph with a special path has nullity " + std::to_string(eta));
  }
  if (c.unbalanced_bicyclic && !is_balanced(g).balanced()) {
    r.count("unbalanced_instances");
    const auto v = theorem31_verdict(g);
    if (!v.bound_holds) r.fail(g, "unbalanced bicyclic graph exceeds nullity n-3");
    if (v.is_extremal != (eta + 3 == n)) {
      r.fail(g, "extremal characterization disagrees with nullity " + std::to_string(eta));
    }
    if (eta + 3 == n) r.count("extremal_instances_n" + std::to_string(n));
  }
  if (c.reductions) check_reductions(g, eta, r);
}

}  // namespace detail

inline TheoremReport tree_nullity_sweep(std::size_t n_min, std::size_t n_max,
                                        const SweepOptions& opts) {
  // Items: (n, first Pruefer digit); n <= 2 has a single tree.
  std::vector<std::pair<std::size_t, std::size_t>> items;
  for (std::size_t n = std::max<std::size_t>(n_min, 1); n <= n_max; ++n) {
    if (n <= 2) {
      items.emplace_back(n, 0);
    } else {
      for (std::size_t d = 0; d < n; ++d) items.emplace_back(n, d);
    }
  }
  return detail::parallel_sweep(items, opts.threads, [](const auto& item, TheoremReport& r) {
    const auto [n, first] = item;
    auto check = [&](const SignedGraph& t) {
      ++r.instances_checked;
      if (forest_nullity_formula(t) != nullity(t)) r.fail(t, "n - 2*matching != nullity");
    };
    if (n <= 2) {
      check(tree_from_pruefer(n, {}));
      return;
    }
    std::vector<Vertex> seq(n - 2, 0);
    seq[0] = static_cast<Vertex>(first);
    for (;;) {
      check(tree_from_pruefer(n, seq));
      std::size_t i = 1;
      for (; i < seq.size(); ++i) {
        if (++seq[i] < n) break;
        seq[i] = 0;
      }
      if (i >= seq.size()) break;
    }
  });
}

inline TheoremReport cycle_nullity_sweep(std::size_t len_min, std::size_t len_max) {
  TheoremReport r;
  for (std::size_t len = std::max<std::size_t>(len_min, 3); len <= len_max; ++len) {
    for (bool balanced : {true, false}) {
      const auto c = cycle_graph(len, balanced);
      ++r.instances_checked;
      if (is_balanced(c).balanced() != balanced) r.fail(c, "balance of constructed cycle is wrong");
      if (cycle_nullity_formula(len, balanced) != nullity(c)) r.fail(c, "cycle formula mismatch");
    }
  }
  return r;
}

inline TheoremReport connected_sweep(std::size_t n_min, std::size_t n_max,
                                     const InstanceChecks& checks, const SweepOptions& opts) {
  std::vector<SignedGraph> items;
  for (std::size_t n = std::max<std::size_t>(n_min, 2); n <= n_max; ++n) {
    for (auto& c : connected_classes(n)) items.push_back(std::move(c.graph));
  }
  return detail::parallel_sweep(items, opts.threads, [&](const SignedGraph& g, TheoremReport& r) {
    for_each_signature(g, [&](const SignedGraph& s) { detail::check_instance(s, checks, r); });
  });
}

inline TheoremReport bicyclic_sweep(std::size_t n_min, std::size_t n_max,
                                    const InstanceChecks& checks, const SweepOptions& opts) {
  std::vector<SignedGraph> items;
  for (std::size_t n = std::max<std::size_t>(n_min, 4); n <= n_max; ++n) {
    for (auto& c : bicyclic_classes(n)) items.push_back(std::move(c.graph));
  }
  auto report =
      detail::parallel_sweep(items, opts.threads, [&](const SignedGraph& g, TheoremReport& r) {
        for_each_signature(g, [&](const SignedGraph& s) { detail::check_instance(s, checks, r); });
      });
  if (checks.unbalanced_bicyclic) {
    // Equality n - 3 is attained by exactly one switching class, at order 4.
    for (std::size_t n = std::max<std::size_t>(n_min, 4); n <= n_max; ++n) {
      const auto key = "extremal_instances_n" + std::to_string(n);
      const auto it = report.counters.find(key);
      const std::uint64_t seen = it == report.counters.end() ? 0 : it->second;
      const std::uint64_t want = n == 4 ? 1 : 0;
      if (seen != want) {
        report.fail(build_graph(n, {}), "expected " + std::to_string(want) +
                                            " extremal classes at order " + std::to_string(n) +
                                            ", found " + std::to_string(seen));
      }
    }
  }
  return report;
}

inline TheoremReport reduction_consistency_sweep(std::size_t n_min, std::size_t n_max,
                                                 const SweepOptions& opts = {}) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t lo = std::max<std::size_t>(n_min, 4);
  detail::require_range(lo, n_max, opts.limits);
  InstanceChecks checks;
  checks.reductions = true;
  auto report = bicyclic_sweep(lo, n_max, checks, opts);
  report.theorem_id = "reductions";
  report.orders_checked = detail::orders(lo, n_max);
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

// ---------------------------------------------------------------------------
// Theorem identifiers.

struct SweepSpec {
  std::string_view id;
  std::string_view summary;
};

inline constexpr SweepSpec kSweeps[] = {
    {"tree-nullity", "labeled trees: nullity = n - 2 * matching number"},
    {"cycle-nullity", "signed cycles: nullity from length mod 4 and balance"},
    {"rank2", "connected graphs: rank 2 iff balanced complete bipartite"},
    {"rank3", "connected graphs: rank 3 iff complete tripartite with uniform signed rows; "
              "structure check for rank <= 3"},
    {"pendant-bound", "non-star graphs of order >= 4 with a pendant vertex: nullity <= n - 4"},
    {"special-path-bound", "bicyclic graphs with a special path: nullity <= n - 4"},
    {"unbalanced-bicyclic", "unbalanced bicyclic graphs: nullity <= n - 3, equality only for "
                            "theta(2,2,1) with both triangles negative"},
    {"reductions", "pendant deletion and special-path contraction preserve nullity"},
};

// Numbered aliases accepted on the command line.
inline constexpr std::pair<std::string_view, std::string_view> kSweepAliases[] = {
    {"lemma2.1i", "tree-nullity"},        {"lemma2.1ii", "cycle-nullity"},
    {"lemma2.1iii", "cycle-nullity"},     {"theorem2.3", "rank2"},
    {"theorem2.4", "rank3"},              {"lemma2.2", "rank3"},
    {"corollary2.6", "pendant-bound"},    {"corollary2.9", "special-path-bound"},
    {"theorem3.1", "unbalanced-bicyclic"}, {"lemma2.5", "reductions"},
    {"corollary2.8", "reductions"},
};

inline std::optional<std::string> resolve_theorem_id(std::string_view id) {
  for (const auto& s : kSweeps)
    if (s.id == id) return std::string(s.id);
  for (const auto& [alias, target] : kSweepAliases)
    if (alias == id) return std::string(target);
  return std::nullopt;
}

class UnknownTheorem : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Runs the named sweep over orders [n_min, n_max]. For cycle-nullity the
// range is the cycle length and the enumeration ceiling does not apply.
inline TheoremReport verify_theorem(std::string_view id, std::size_t n_min, std::size_t n_max,
                                    const SweepOptions& opts = {}) {
  const auto resolved = resolve_theorem_id(id);
  if (!resolved) throw UnknownTheorem("unknown theorem id '" + std::string(id) + "'");
  const auto start = std::chrono::steady_clock::now();
  TheoremReport report;
  std::size_t lo = n_min;
  const std::string& name = *resolved;

  if (name == "cycle-nullity") {
    lo = std::max<std::size_t>(lo, 3);
    if (lo > n_max) throw RangeError("empty cycle length range");
    if (n_max > 64) throw RangeError("cycle length above 64");
    report = cycle_nullity_sweep(lo, n_max);
  } else if (name == "tree-nullity") {
    lo = std::max<std::size_t>(lo, 1);
    detail::require_range(lo, n_max, opts.limits);
    report = tree_nullity_sweep(lo, n_max, opts);
  } else if (name == "rank2" || name == "rank3") {
    lo = std::max<std::size_t>(lo, 2);
    detail::require_range(lo, n_max, opts.limits);
    InstanceChecks c;
    c.rank2 = name == "rank2";
    c.rank3 = name == "rank3";
    report = connected_sweep(lo, n_max, c, opts);
  } else if (name == "pendant-bound") {
    lo = std::max<std::size_t>(lo, 4);
    detail::require_range(lo, n_max, opts.limits);
    InstanceChecks c;
    c.pendant_bound = true;
    report = connected_sweep(lo, n_max, c, opts);
    report.absorb(bicyclic_sweep(lo, n_max, c, opts));
    std::sort(report.violations.begin(), report.violations.end());
  } else {
    lo = std::max<std::size_t>(lo, 4);
    if (name == "reductions") return reduction_consistency_sweep(lo, n_max, opts);
    detail::require_range(lo, n_max, opts.limits);
    InstanceChecks c;
    c.special_path_bound = name == "special-path-bound";
    c.unbalanced_bicyclic = name == "unbalanced-bicyclic";
    report = bicyclic_sweep(lo, n_max, c, opts);
  }
  report.theorem_id = name;
  report.orders_checked = detail::orders(lo, n_max);
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

// ---------------------------------------------------------------------------
// Nullity catalogs of bicyclic graphs.

struct CycleSign {
  std::size_t length = 0;
  Sign sign = Sign::Positive;

  friend bool operator==(const CycleSign&, const CycleSign&) = default;
  friend auto operator<=>(const CycleSign& a, const CycleSign& b) {
    if (auto c = a.length <=> b.length; c != 0) return c;
    return to_int(a.sign) <=> to_int(b.sign);
  }
};

// Signs of the two fundamental cycles and of their edge-symmetric
// difference (the third cycle of a theta base, the figure-eight of an
// infinity base), sorted by (length, sign).
inline std::vector<CycleSign> balance_profile(const SignedGraph& g) {
  const auto cycles = fundamental_cycles(g);
  if (cycles.size() != 2) throw GraphError("balance profile needs cyclomatic number 2");
  auto edge_set = [](const Cycle& c) {
    std::set<std::pair<Vertex, Vertex>> s;
    for (std::size_t i = 0; i < c.length(); ++i) {
      Vertex a = c.vertices[i];
      Vertex b = c.vertices[(i + 1) % c.length()];
      s.emplace(std::min(a, b), std::max(a, b));
    }
    return s;
  };
  const auto e1 = edge_set(cycles[0]);
  const auto e2 = edge_set(cycles[1]);
  std::size_t shared = 0;
  for (const auto& e : e1) shared += e2.count(e);
  const Sign s1 = cycle_sign(g, cycles[0]);
  const Sign s2 = cycle_sign(g, cycles[1]);
  std::vector<CycleSign> out{{e1.size(), s1}, {e2.size(), s2}, {e1.size() + e2.size() - 2 * shared, s1 * s2}};
  std::sort(out.begin(), out.end());
  return out;
}

inline std::string profile_string(const std::vector<CycleSign>& profile) {
  std::string out;
  for (const auto& c : profile) {
    if (!out.empty()) out += ",";
    out += std::to_string(c.length);
    out += to_char(c.sign);
  }
  return out;
}

struct CatalogSignature {
  std::vector<CycleSign> profile;
  bool balanced = false;
  SignedGraph witness;
};

struct CatalogEntry {
  CanonicalCode code;
  BicyclicBase base;
  std::size_t switching_classes_achieving = 0;
  std::vector<CatalogSignature> signatures;
};

struct NullityCatalog {
  std::size_t order = 0;
  std::size_t k = 0;              // nullity class is order - k
  bool balanced_only = false;
  std::vector<CatalogEntry> entries;

  [[nodiscard]] std::size_t nullity_class() const noexcept { return order - k; }
};

struct CatalogOptions {
  bool balanced_only = false;
  SweepOptions sweep{};
};

// Every bicyclic isomorphism class of order n with a signature of nullity
// n - k, recording which switching classes reach it. With balanced_only the
// all-positive signature alone is considered.
inline NullityCatalog catalog_nullity_classes(std::size_t n, std::size_t k,
                                              const CatalogOptions& opts = {}) {
  if (n < 4) throw RangeError("catalogs need order at least 4");
  if (k < 3 || k > n) throw RangeError("k must satisfy 3 <= k <= n");
  detail::require_range(n, n, opts.sweep.limits);
  NullityCatalog cat;
  cat.order = n;
  cat.k = k;
  cat.balanced_only = opts.balanced_only;

  const auto classes = bicyclic_classes(n);
  std::vector<std::optional<CatalogEntry>> found(classes.size());
  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    for (std::size_t i = cursor++; i < classes.size(); i = cursor++) {
      const auto& cls = classes[i];
      CatalogEntry entry;
      entry.code = cls.code;
      entry.base = *bicyclic_base(cls.graph);
      const auto reps = signature_representatives(cls.graph);
      for (std::size_t r = 0; r < reps.size(); ++r) {
        if (opts.balanced_only && r != 0) break;
        if (nullity(reps[r]) + k != n) continue;
        entry.signatures.push_back(
            {balance_profile(reps[r]), is_balanced(reps[r]).balanced(), reps[r]});
      }
      if (entry.signatures.empty()) continue;
      entry.switching_classes_achieving = entry.signatures.size();
      std::sort(entry.signatures.begin(), entry.signatures.end(), [](const auto& a, const auto& b) {
        return std::tie(a.profile, a.witness.edges()) < std::tie(b.profile, b.witness.edges());
      });
      found[i] = std::move(entry);
    }
  };
  const std::size_t workers = std::max<std::size_t>(1, std::min(opts.sweep.threads, classes.size()));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(worker);
  }
  for (auto& f : found)
    if (f) cat.entries.push_back(std::move(*f));
  return cat;
}

// Recomputes every witness's nullity through the rank kernel.
inline bool revalidate_catalog(const NullityCatalog& cat) {
  std::set<CanonicalCode> codes;
  for (std::size_t i = 0; i < cat.entries.size(); ++i) {
    const auto& e = cat.entries[i];
    if (!codes.insert(e.code).second) return false;
    if (i > 0 && !(cat.entries[i - 1].code < e.code)) return false;
    if (e.signatures.size() != e.switching_classes_achieving) return false;
    for (const auto& s : e.signatures) {
      if (s.witness.order() != cat.order) return false;
      if (nullity(s.witness) != cat.nullity_class()) return false;
      if (canonical_code(s.witness) != e.code) return false;
      if (balance_profile(s.witness) != s.profile) return false;
      if (cat.balanced_only && !s.witness.all_positive()) return false;
    }
  }
  return true;
}

}  // namespace signull

#endif  // SIGNULL_VERIFICATION_HPP
