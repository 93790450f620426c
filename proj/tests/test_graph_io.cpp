#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "signull/graph_io.hpp"

using namespace signull;

namespace {

constexpr Sign P = Sign::Positive;
constexpr Sign N = Sign::Negative;

// Returns the (line, column) of the parse error, or (0, 0) if parsing succeeds.
std::pair<std::size_t, std::size_t> error_at(std::string_view text) {
  try {
    parse_graph(text);
  } catch (const ParseError& e) {
    return {e.line(), e.column()};
  }
  return {0, 0};
}

}  // namespace

TEST(ParseTest, Examples) {
  auto g = parse_graph("# unbalanced triangle\n3 3\n0 1 +\n1 2 +\n0 2 -\n");
  EXPECT_EQ(g, build_graph(3, {{0, 1, P}, {1, 2, P}, {0, 2, N}}));

  // Blank lines, comments, tabs, CRLF and a missing final newline are fine.
  auto h = parse_graph("\n  # c\n2 1\r\n\n0\t1 -");
  EXPECT_EQ(h, build_graph(2, {{0, 1, N}}));

  EXPECT_EQ(parse_graph("4 0\n"), build_graph(4, {}));
  EXPECT_EQ(parse_graph("0 0"), build_graph(0, {}));
}

TEST(ParseTest, ErrorsCarryPositions) {
  using Pos = std::pair<std::size_t, std::size_t>;
  EXPECT_EQ(error_at(""), (Pos{1, 1}));                          // no header
  EXPECT_EQ(error_at("# only\n"), (Pos{2, 1}));
  EXPECT_EQ(error_at("3\n"), (Pos{1, 1}));                       // header arity
  EXPECT_EQ(error_at("3 x\n"), (Pos{1, 3}));
  EXPECT_EQ(error_at("3 1\n0 3 +\n"), (Pos{2, 3}));              // out of range
  EXPECT_EQ(error_at("3 1\n1 1 +\n"), (Pos{2, 1}));              // self-loop
  EXPECT_EQ(error_at("3 1\n2 1 +\n"), (Pos{2, 1}));              // u > v
  EXPECT_EQ(error_at("3 1\n0 1 *\n"), (Pos{2, 5}));              // bad sign
  EXPECT_EQ(error_at("3 2\n0 1 +\n# dup\n0 1 -\n"), (Pos{4, 1}));
  EXPECT_EQ(error_at("3 2\n0 1 +\n"), (Pos{1, 1}));              // count mismatch
  EXPECT_EQ(error_at("3 1\n0 1\n"), (Pos{2, 1}));                // edge arity
  EXPECT_EQ(error_at("3 1\n-1 2 +\n"), (Pos{2, 1}));
}

TEST(ParseTest, MessageMentionsLine) {
  try {
    parse_graph("2 1\n0 1 ?\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}

TEST(SerializeTest, Examples) {
  EXPECT_EQ(serialize_graph(build_graph(3, {{1, 2, N}, {0, 1, P}})), "3 2\n0 1 +\n1 2 -\n");
  EXPECT_EQ(serialize_graph(build_graph(2, {})), "2 0\n");
}

TEST(SerializeTest, RoundTrip) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 300; ++trial) {
    auto g = oracle::random_signed_graph(rng, trial % 12, 0.4);
    const auto text = serialize_graph(g);
    EXPECT_EQ(parse_graph(text), g);
    EXPECT_EQ(serialize_graph(parse_graph(text)), text);
  }
}

TEST(DotTest, Output) {
  const auto dot = to_dot(build_graph(3, {{0, 1, P}, {1, 2, N}}));
  EXPECT_EQ(dot,
            "graph G {\n"
            "  0;\n"
            "  1;\n"
            "  2;\n"
            "  0 -- 1 [sign=\"+\", style=solid];\n"
            "  1 -- 2 [sign=\"\xE2\x88\x92\", style=dashed];\n"
            "}\n");
}

TEST(DigestTest, KnownVectors) {
  EXPECT_EQ(fnv1a64_hex(""), "cbf29ce484222325");
  EXPECT_EQ(fnv1a64_hex("a"), "af63dc4c8601ec8c");
  EXPECT_NE(fnv1a64_hex("3 0\n"), fnv1a64_hex("3 0"));
}
