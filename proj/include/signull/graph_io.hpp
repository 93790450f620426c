#ifndef SIGNULL_GRAPH_IO_HPP
#define SIGNULL_GRAPH_IO_HPP

// Plain-text edge-list format:
//
//   # comment lines and blank lines are ignored
//   n m
//   u v s        (m lines, 0 <= u < v < n, s is '+' or '-')
//
// serialize_graph emits the normalized form, so parse(serialize(g)) == g.

#include <charconv>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "signull/signed_graph.hpp"

namespace signull {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ", column " +
                           std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  [[nodiscard]] std::size_t line() const noexcept { return line_; }
  [[nodiscard]] std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

namespace detail {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

inline std::vector<Token> split_tokens(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i == line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

inline std::uint64_t parse_count(const Token& t, std::size_t line, const char* what) {
  std::uint64_t value = 0;
  const auto* first = t.text.data();
  const auto* last = first + t.text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw ParseError(line, t.column,
                     std::string("expected non-negative integer for ") + what + ", got '" +
                         std::string(t.text) + "'");
  }
  return value;
}

}  // namespace detail

inline SignedGraph parse_graph(std::string_view document) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  bool have_header = false;
  std::uint64_t order = 0;
  std::uint64_t expected = 0;
  std::size_t header_line = 0;
  std::vector<Edge> edges;
  std::vector<std::size_t> edge_lines;

  while (pos <= document.size()) {
    const auto nl = document.find('\n', pos);
    const auto line = document.substr(pos, nl == std::string_view::npos ? std::string_view::npos
                                                                         : nl - pos);
    pos = nl == std::string_view::npos ? document.size() + 1 : nl + 1;
    ++line_no;

    const auto tokens = detail::split_tokens(line);
    if (tokens.empty() || tokens.front().text.front() == '#') continue;

    if (!have_header) {
      if (tokens.size() != 2) {
        throw ParseError(line_no, tokens.front().column, "malformed header: expected 'n m'");
      }
      order = detail::parse_count(tokens[0], line_no, "order");
      expected = detail::parse_count(tokens[1], line_no, "edge count");
      header_line = line_no;
      have_header = true;
      continue;
    }

    if (tokens.size() != 3) {
      throw ParseError(line_no, tokens.front().column, "expected edge line 'u v s'");
    }
    const auto u = detail::parse_count(tokens[0], line_no, "vertex");
    const auto v = detail::parse_count(tokens[1], line_no, "vertex");
    if (u >= order) throw ParseError(line_no, tokens[0].column, "vertex id out of range");
    if (v >= order) throw ParseError(line_no, tokens[1].column, "vertex id out of range");
    if (u == v) throw ParseError(line_no, tokens[0].column, "self-loop");
    if (u > v) throw ParseError(line_no, tokens[0].column, "edge endpoints must satisfy u < v");
    Sign s;
    if (tokens[2].text == "+") {
      s = Sign::Positive;
    } else if (tokens[2].text == "-") {
      s = Sign::Negative;
    } else {
      throw ParseError(line_no, tokens[2].column,
                       "bad sign token '" + std::string(tokens[2].text) + "' (use + or -)");
    }
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (edges[i].u == u && edges[i].v == v) {
        throw ParseError(line_no, tokens[0].column,
                         "duplicate edge (first given at line " + std::to_string(edge_lines[i]) +
                             ")");
      }
    }
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), s});
    edge_lines.push_back(line_no);
  }

  if (!have_header) throw ParseError(line_no, 1, "missing header 'n m'");
  if (edges.size() != expected) {
    throw ParseError(header_line, 1,
                     "header announces " + std::to_string(expected) + " edges, found " +
                         std::to_string(edges.size()));
  }
  return build_graph(order, std::move(edges));
}

inline std::string serialize_graph(const SignedGraph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (const auto& e : g.edges()) {
    out += std::to_string(e.u) + " " + std::to_string(e.v) + " " + to_char(e.sign) + "\n";
  }
  return out;
}

// Graphviz export: positive edges solid, negative edges dashed.
inline std::string to_dot(const SignedGraph& g, std::string_view name = "G") {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (Vertex v = 0; v < g.order(); ++v) os << "  " << v << ";\n";
  for (const auto& e : g.edges()) {
    const bool pos = e.sign == Sign::Positive;
    os << "  " << e.u << " -- " << e.v << " [sign=\"" << (pos ? "+" : "\xE2\x88\x92")
       << "\", style=" << (pos ? "solid" : "dashed") << "];\n";
  }
  os << "}\n";
  return os.str();
}

// 64-bit FNV-1a, used to tag report documents with the input they describe.
inline std::string fnv1a64_hex(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  static constexpr char digits[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[h & 15];
    h >>= 4;
  }
  return out;
}

}  // namespace signull

#endif  // SIGNULL_GRAPH_IO_HPP
