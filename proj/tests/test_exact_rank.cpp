#include <algorithm>
#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "signull/enumeration.hpp"
#include "signull/exact_rank.hpp"

using namespace signull;

namespace {
constexpr Sign P = Sign::Positive;
constexpr Sign N = Sign::Negative;

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                        std::int64_t bound, double density) {
  std::uniform_int_distribution<std::int64_t> val(-bound, bound);
  std::bernoulli_distribution nz(density);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      if (nz(rng)) m(i, j) = val(rng);
  return m;
}
}  // namespace

TEST(RankTest, Examples) {
  EXPECT_EQ(rank(IntMatrix(3, 3)), 0u);
  EXPECT_EQ(rank(adjacency_matrix(cycle_graph(4, true))), 2u);
  EXPECT_EQ(rank(adjacency_matrix(cycle_graph(4, false))), 4u);
  EXPECT_EQ(rank(IntMatrix()), 0u);
  EXPECT_EQ(rank(IntMatrix(0, 5)), 0u);
}

TEST(RankTest, AgreesWithRationalEliminationOnSmallEntries) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t r = 1 + trial % 7;
    const std::size_t c = 1 + (trial / 7) % 7;
    auto m = random_matrix(rng, r, c, 3, 0.6);
    EXPECT_EQ(rank(m), oracle::rational_rank(m)) << "trial " << trial;
  }
}

// Entries and orders large enough that the 64-bit path is refused.
TEST(RankTest, AgreesWithRationalEliminationOnWideEntries) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 3 + trial % 6;
    auto m = random_matrix(rng, n, n, 1'000'000'000'000LL, 0.8);
    // Force a dependency in half the cases.
    if (trial % 2 == 0) {
      for (std::size_t j = 0; j < n; ++j) m(n - 1, j) = m(0, j) - m(1, j);
    }
    EXPECT_EQ(rank(m), oracle::rational_rank(m)) << "trial " << trial;
  }
}

TEST(RankTest, LargeSignedGraphsUseExactArithmetic) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 6; ++trial) {
    auto g = oracle::random_signed_graph(rng, 24 + trial, 0.5);
    EXPECT_EQ(graph_rank(g), oracle::rational_rank(g));
  }
}

TEST(RankTest, InvariantUnderPermutationAndNegation) {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + trial % 9;
    auto g = oracle::random_signed_graph(rng, n, 0.5);
    std::vector<Vertex> perm(n);
    std::iota(perm.begin(), perm.end(), Vertex{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    EXPECT_EQ(graph_rank(relabel(g, perm)), graph_rank(g));
    EXPECT_EQ(graph_rank(apply_switching(g, oracle::random_switching(rng, n))), graph_rank(g));
  }
}

TEST(NullityTest, Examples) {
  EXPECT_EQ(nullity(build_graph(2, {{0, 1, P}})), 0u);
  EXPECT_EQ(nullity(build_graph(2, {{0, 1, N}})), 0u);
  EXPECT_EQ(nullity(cycle_graph(6, false)), 2u);
  // Theta(2,2,1): chord 0-1, tips 2 and 3; both triangles negative.
  auto theta = build_graph(4, {{0, 1, N}, {0, 2, P}, {1, 2, P}, {0, 3, P}, {1, 3, P}});
  EXPECT_EQ(nullity(theta), 1u);
}

TEST(NullityTest, BoundsAndAdditivity) {
  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 9;
    auto g = oracle::random_signed_graph(rng, n, 0.35);
    const auto eta = nullity(g);
    EXPECT_LE(eta, n);
    EXPECT_EQ(eta == n, g.size() == 0);
    if (g.size() > 0) EXPECT_LE(eta + 2, n);
    auto h = oracle::random_signed_graph(rng, 1 + trial % 5, 0.5);
    EXPECT_EQ(nullity(disjoint_union(g, h)), eta + nullity(h));
  }
}

TEST(CycleFormulaTest, Examples) {
  EXPECT_EQ(cycle_nullity_formula(4, true), 2u);
  EXPECT_EQ(cycle_nullity_formula(6, false), 2u);
  EXPECT_EQ(cycle_nullity_formula(3, true), 0u);
  EXPECT_THROW(cycle_nullity_formula(2, true), GraphError);
}

TEST(CycleFormulaTest, AgreesWithRationalRank) {
  for (std::size_t len = 3; len <= 16; ++len) {
    for (bool bal : {true, false}) {
      EXPECT_EQ(cycle_nullity_formula(len, bal), oracle::rational_nullity(cycle_graph(len, bal)))
          << len << (bal ? " balanced" : " unbalanced");
    }
  }
}

TEST(MatchingTest, Examples) {
  EXPECT_EQ(matching_number(build_graph(5, {})), 0u);
  for (std::size_t k = 1; k <= 6; ++k) EXPECT_EQ(matching_number(star_graph(k)), 1u);
  EXPECT_EQ(oracle::brute_force_matching(path_graph(4)), 2u);
  EXPECT_EQ(matching_number(path_graph(4)), 2u);
  EXPECT_THROW(matching_number(cycle_graph(5)), GraphError);
}

TEST(MatchingTest, AgreesWithBruteForceOnAllSmallTrees) {
  for (std::size_t n = 1; n <= 7; ++n) {
    auto stream = labeled_trees(n);
    while (auto t = stream.next()) {
      ASSERT_EQ(matching_number(*t), oracle::brute_force_matching(*t));
    }
  }
}

TEST(MatchingTest, Forests) {
  std::mt19937_64 rng(26);
  for (int trial = 0; trial < 200; ++trial) {
    // Random forest: each vertex optionally attached to an earlier one.
    const std::size_t n = 1 + trial % 12;
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) {
      if (rng() % 3 == 0) continue;
      edges.push_back({static_cast<Vertex>(rng() % v), v, rng() % 2 ? P : N});
    }
    auto f = build_graph(n, edges);
    EXPECT_EQ(matching_number(f), oracle::brute_force_matching(f));
    EXPECT_EQ(forest_nullity_formula(f), oracle::rational_nullity(f));
  }
}

TEST(ForestFormulaTest, Examples) {
  EXPECT_EQ(forest_nullity_formula(star_graph(3)), 2u);
  EXPECT_EQ(forest_nullity_formula(path_graph(4)), 0u);
  EXPECT_EQ(forest_nullity_formula(path_graph(4, N)), 0u);
  EXPECT_EQ(nullity(path_graph(4, N)), 0u);
  EXPECT_EQ(forest_nullity_formula(build_graph(1, {})), 1u);
  EXPECT_THROW(forest_nullity_formula(cycle_graph(3)), GraphError);
}
