#ifndef SIGNULL_CANONICAL_HPP
#define SIGNULL_CANONICAL_HPP

// Canonical codes for underlying graphs (signs ignored).
//
// The code is the lexicographically least upper-triangle adjacency bit
// string over all vertex orderings that list colour-refinement cells in
// canonical colour order. Refinement colours are isomorphism invariant, so
// the minimum is taken over an invariant family of orderings and two graphs
// get equal codes exactly when they are isomorphic. Bits are laid out column
// by column ((0,1), (0,2), (1,2), (0,3), ...), which lets the search prune a
// partial ordering as soon as its prefix exceeds the best code found.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "signull/signed_graph.hpp"

namespace signull {

struct CanonicalCode {
  std::string bytes;

  [[nodiscard]] std::string hex() const {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(bytes.size() * 2);
    for (unsigned char c : bytes) {
      out.push_back(digits[c >> 4]);
      out.push_back(digits[c & 15]);
    }
    return out;
  }

  friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
  friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

struct CanonicalForm {
  CanonicalCode code;
  std::vector<Vertex> position;  // vertex -> canonical position
};

namespace detail {

inline std::vector<std::uint32_t> refine_colours(const SignedGraph& g) {
  const std::size_t n = g.order();
  std::vector<std::uint32_t> colour(n);
  for (Vertex v = 0; v < n; ++v) colour[v] = static_cast<std::uint32_t>(g.degree(v));
  std::size_t classes = 0;
  for (;;) {
    std::vector<std::vector<std::uint32_t>> sig(n);
    for (Vertex v = 0; v < n; ++v) {
      sig[v].push_back(colour[v]);
      std::vector<std::uint32_t> around;
      for (Vertex w : g.neighbors(v)) around.push_back(colour[w]);
      std::sort(around.begin(), around.end());
      sig[v].insert(sig[v].end(), around.begin(), around.end());
    }
    std::map<std::vector<std::uint32_t>, std::uint32_t> rank;
    for (const auto& s : sig) rank.emplace(s, 0);
    std::uint32_t next = 0;
    for (auto& [s, r] : rank) r = next++;
    for (Vertex v = 0; v < n; ++v) colour[v] = rank[sig[v]];
    if (rank.size() == classes) break;
    classes = rank.size();
  }
  return colour;
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const SignedGraph& g) : g_(g), n_(g.order()) {
    const auto colour = refine_colours(g);
    std::vector<Vertex> by_colour(n_);
    for (Vertex v = 0; v < n_; ++v) by_colour[v] = v;
    std::stable_sort(by_colour.begin(), by_colour.end(),
                     [&](Vertex a, Vertex b) { return colour[a] < colour[b]; });
    cell_of_position_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) cell_of_position_[i] = colour[by_colour[i]];
    colour_ = colour;
    at_.assign(n_, 0);
    used_.assign(n_, false);
    bits_.assign(n_ * (n_ > 0 ? n_ - 1 : 0) / 2, 0);
  }

  CanonicalForm run() {
    place(0, 0);
    CanonicalForm out;
    out.code.bytes.push_back(static_cast<char>(n_));
    unsigned char acc = 0;
    int filled = 0;
    for (auto b : best_bits_) {
      acc = static_cast<unsigned char>((acc << 1) | b);
      if (++filled == 8) {
        out.code.bytes.push_back(static_cast<char>(acc));
        acc = 0;
        filled = 0;
      }
    }
    if (filled > 0) out.code.bytes.push_back(static_cast<char>(acc << (8 - filled)));
    out.position.assign(n_, 0);
    for (std::size_t i = 0; i < n_; ++i) out.position[best_at_[i]] = static_cast<Vertex>(i);
    return out;
  }

 private:
  // cmp: 0 while the prefix equals the best code's prefix, -1 once smaller.
  // Returns true when the best code was replaced somewhere below; the
  // current prefix is then a prefix of the new best.
  bool place(std::size_t pos, int cmp) {
    if (pos == n_) {
      if (!have_best_ || cmp < 0) {
        best_bits_ = bits_;
        best_at_ = at_;
        have_best_ = true;
        return true;
      }
      return false;
    }
    bool improved = false;
    const std::size_t base = pos * (pos > 0 ? pos - 1 : 0) / 2;
    for (Vertex v = 0; v < n_; ++v) {
      if (used_[v] || colour_[v] != cell_of_position_[pos]) continue;
      int c = cmp;
      bool prune = false;
      for (std::size_t j = 0; j < pos; ++j) {
        const std::uint8_t bit = g_.adjacent(at_[j], v) ? 1 : 0;
        bits_[base + j] = bit;
        if (have_best_ && c == 0) {
          const auto b = best_bits_[base + j];
          if (bit > b) {
            prune = true;
            break;
          }
          if (bit < b) c = -1;
        }
      }
      if (prune) continue;
      used_[v] = true;
      at_[pos] = v;
      if (place(pos + 1, c)) {
        improved = true;
        cmp = 0;
      }
      used_[v] = false;
    }
    return improved;
  }

  const SignedGraph& g_;
  std::size_t n_;
  std::vector<std::uint32_t> colour_;
  std::vector<std::uint32_t> cell_of_position_;
  std::vector<Vertex> at_;
  std::vector<bool> used_;
  std::vector<std::uint8_t> bits_;
  std::vector<std::uint8_t> best_bits_;
  std::vector<Vertex> best_at_;
  bool have_best_ = false;
};

}  // namespace detail

inline CanonicalForm canonical_form(const SignedGraph& g) {
  if (g.order() > 255) throw GraphError("canonical_form: order too large");
  return detail::CanonicalSearch(g).run();
}

inline CanonicalCode canonical_code(const SignedGraph& g) { return canonical_form(g).code; }

// The graph relabelled into canonical position order (signs carried along).
inline SignedGraph canonical_relabel(const SignedGraph& g) {
  const auto form = canonical_form(g);
  return relabel(g, form.position);
}

}  // namespace signull

#endif  // SIGNULL_CANONICAL_HPP
