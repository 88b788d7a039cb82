#include <gtest/gtest.h>

#include <random>
#include <set>

#include "deckwork/canonical.hpp"
#include "deckwork/error.hpp"
#include "oracles.hpp"

using namespace deckwork;

namespace {

std::vector<bool> key_bits(const CanonicalKey& k) {
  std::vector<bool> b;
  for (int i = 0; i < k.bit_count(); ++i) b.push_back(k.bit(i));
  return b;
}

}  // namespace

TEST(Canonical, MatchesBruteForceMinimumOnRandomGraphs) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const GraphKind kind = trial % 2 ? GraphKind::kDirected : GraphKind::kUndirected;
    const int n = 1 + static_cast<int>(rng() % (kind == GraphKind::kDirected ? 5 : 7));
    Graph g = oracle::random_graph(kind, n, rng, 0.2 + 0.6 * (trial % 5) / 4.0);
    EXPECT_EQ(key_bits(canonical_key(g)), oracle::min_bits(g)) << trial;
  }
}

TEST(Canonical, AllLabellingsOfC4ShareOneKey) {
  const CanonicalKey c4 = canonical_key(cycle_graph(4));
  int hits = 0;
  for (const Graph& g : oracle::labelled(GraphKind::kUndirected, 4)) {
    if (oracle::isomorphic(g, cycle_graph(4))) {
      EXPECT_EQ(canonical_key(g), c4);
      ++hits;
    } else {
      EXPECT_NE(canonical_key(g), c4);
    }
  }
  EXPECT_EQ(hits, 3);  // 4!/|Aut(C4)|
}

TEST(Canonical, EmptyGraphKeyIsAllZero) {
  auto b = key_bits(canonical_key(empty_graph(3)));
  EXPECT_EQ(std::count(b.begin(), b.end(), true), 0);
  std::vector<int> perm{2, 0, 1};
  EXPECT_EQ(canonical_key(path_graph(3).permuted(perm)), canonical_key(path_graph(3)));
}

TEST(Canonical, CanonicalFormAndKeyGraphAgree) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const GraphKind kind = trial % 2 ? GraphKind::kDirected : GraphKind::kUndirected;
    Graph g = oracle::random_graph(kind, 1 + trial % 6, rng);
    Graph f = canonical_form(g);
    EXPECT_TRUE(oracle::isomorphic(f, g));
    EXPECT_EQ(canonical_key(f), canonical_key(g));
    EXPECT_EQ(key_graph(canonical_key(g)), f);
  }
}

TEST(Canonical, KeysOrderByKindThenOrder) {
  EXPECT_LT(canonical_key(complete_graph(5)), canonical_key(empty_graph(6)));
  EXPECT_LT(canonical_key(complete_graph(3)), canonical_key(empty_graph(1, GraphKind::kDirected)));
}

TEST(Canonical, AutomorphismCounts) {
  EXPECT_EQ(automorphism_count(complete_graph(3)), 6u);
  EXPECT_EQ(automorphism_count(path_graph(3)), 2u);
  EXPECT_EQ(automorphism_count(cycle_graph(4)), 8u);
  EXPECT_EQ(automorphism_count(empty_graph(0)), 1u);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const GraphKind kind = trial % 2 ? GraphKind::kDirected : GraphKind::kUndirected;
    Graph g = oracle::random_graph(kind, 1 + trial % 7, rng, trial % 3 == 0 ? 0.15 : 0.5);
    EXPECT_EQ(automorphism_count(g), oracle::automorphisms(g)) << trial;
  }
}

TEST(Canonical, Isomorphism) {
  std::vector<int> perm{2, 0, 1};
  EXPECT_TRUE(is_isomorphic(complete_graph(3), complete_graph(3).permuted(perm)));
  EXPECT_FALSE(is_isomorphic(path_graph(3), complete_graph(3)));
  Graph cyc = Graph::from_edges(GraphKind::kDirected, 3, {{0, 1}, {1, 2}, {2, 0}});
  Graph trans = Graph::from_edges(GraphKind::kDirected, 3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_FALSE(is_isomorphic(cyc, trans));
  EXPECT_THROW(is_isomorphic(cyc, complete_graph(3)), Error);
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 200; ++trial) {
    Graph a = oracle::random_graph(GraphKind::kUndirected, 5, rng);
    Graph b = oracle::random_graph(GraphKind::kUndirected, 5, rng);
    EXPECT_EQ(is_isomorphic(a, b), oracle::isomorphic(a, b));
  }
}
