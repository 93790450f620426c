#ifndef SIGNULL_EXACT_RANK_HPP
#define SIGNULL_EXACT_RANK_HPP

// Exact rank and nullity of signed graphs.
//
// The kernel is fraction-free (Bareiss) elimination with full pivoting: the
// pivot is the first nonzero entry of the remaining block in row-major order.
// Every intermediate entry is a minor of the input, so Hadamard's bound on
// the input decides whether 64-bit arithmetic is exact; otherwise the
// elimination runs on boost::multiprecision::cpp_int.

#include <cmath>
#include <cstdint>
#include <deque>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "signull/int_matrix.hpp"
#include "signull/signed_graph.hpp"

namespace signull {

namespace detail {

template <typename Int>
std::size_t bareiss_rank(std::vector<Int> a, std::size_t rows, std::size_t cols) {
  auto at = [&](std::size_t r, std::size_t c) -> Int& { return a[r * cols + c]; };
  Int prev = 1;
  std::size_t k = 0;
  for (; k < rows && k < cols; ++k) {
    std::size_t pr = rows;
    std::size_t pc = cols;
    for (std::size_t r = k; r < rows && pr == rows; ++r) {
      for (std::size_t c = k; c < cols; ++c) {
        if (at(r, c) != 0) {
          pr = r;
          pc = c;
          break;
        }
      }
    }
    if (pr == rows) break;
    if (pr != k) {
      for (std::size_t c = 0; c < cols; ++c) std::swap(at(k, c), at(pr, c));
    }
    if (pc != k) {
      for (std::size_t r = 0; r < rows; ++r) std::swap(at(r, k), at(r, pc));
    }
    const Int pivot = at(k, k);
    for (std::size_t r = k + 1; r < rows; ++r) {
      const Int lead = at(r, k);
      for (std::size_t c = k + 1; c < cols; ++c) {
        at(r, c) = (pivot * at(r, c) - lead * at(k, c)) / prev;
      }
      at(r, k) = 0;
    }
    prev = pivot;
  }
  return k;
}

// log2 of Hadamard's bound on every minor of the matrix.
inline double hadamard_log2(const std::vector<std::int64_t>& a, std::size_t rows,
                            std::size_t cols) {
  double total = 0.0;
  for (std::size_t r = 0; r < rows; ++r) {
    long double norm2 = 0;
    for (std::size_t c = 0; c < cols; ++c) {
      const auto x = static_cast<long double>(a[r * cols + c]);
      norm2 += x * x;
    }
    if (norm2 > 1) total += 0.5 * std::log2(static_cast<double>(norm2));
  }
  return total;
}

inline std::size_t rank_dispatch(const std::vector<std::int64_t>& a, std::size_t rows,
                                 std::size_t cols) {
  if (rows == 0 || cols == 0) return 0;
  // Products of two minors must stay below 2^62 with a safety margin.
  if (2.0 * hadamard_log2(a, rows, cols) < 60.0) {
    return bareiss_rank<std::int64_t>(a, rows, cols);
  }
  using boost::multiprecision::cpp_int;
  std::vector<cpp_int> big(a.begin(), a.end());
  return bareiss_rank<cpp_int>(std::move(big), rows, cols);
}

}  // namespace detail

inline std::size_t rank(const IntMatrix& m) {
  return detail::rank_dispatch(m.data(), m.rows(), m.cols());
}

inline std::size_t graph_rank(const SignedGraph& g) {
  const std::size_t n = g.order();
  std::vector<std::int64_t> a(n * n, 0);
  for (const auto& e : g.edges()) {
    a[e.u * n + e.v] = to_int(e.sign);
    a[e.v * n + e.u] = to_int(e.sign);
  }
  return detail::rank_dispatch(a, n, n);
}

// Multiplicity of the eigenvalue zero: order minus rank.
inline std::size_t nullity(const SignedGraph& g) { return g.order() - graph_rank(g); }

// Nullity of a signed cycle of the given length from its length and balance.
inline std::size_t cycle_nullity_formula(std::size_t length, bool balanced) {
  if (length < 3) throw GraphError("cycle length must be at least 3");
  const std::size_t residue = balanced ? 0 : 2;
  return length % 4 == residue ? 2 : 0;
}

// Maximum matching of a forest by leaf-greedy elimination.
inline std::size_t matching_number(const SignedGraph& g) {
  if (!is_forest(g)) throw GraphError("matching_number: graph contains a cycle");
  const std::size_t n = g.order();
  std::vector<std::size_t> deg(n);
  std::vector<bool> gone(n, false);
  std::deque<Vertex> leaves;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = g.degree(v);
    if (deg[v] == 1) leaves.push_back(v);
  }
  std::size_t matched = 0;
  auto remove = [&](Vertex x) {
    gone[x] = true;
    for (Vertex y : g.neighbors(x)) {
      if (gone[y]) continue;
      if (--deg[y] == 1) leaves.push_back(y);
    }
  };
  while (!leaves.empty()) {
    const Vertex v = leaves.front();
    leaves.pop_front();
    if (gone[v] || deg[v] != 1) continue;
    Vertex u = v;
    for (Vertex y : g.neighbors(v)) {
      if (!gone[y]) {
        u = y;
        break;
      }
    }
    gone[v] = true;
    remove(u);
    ++matched;
  }
  return matched;
}

// Nullity of a forest as order - 2 * matching number.
inline std::size_t forest_nullity_formula(const SignedGraph& g) {
  return g.order() - 2 * matching_number(g);
}

}  // namespace signull

#endif  // SIGNULL_EXACT_RANK_HPP
