#include <gtest/gtest.h>

#include <set>

#include "deckwork/canonical.hpp"
#include "deckwork/covers.hpp"
#include "deckwork/error.hpp"
#include "deckwork/recon.hpp"
#include "oracles.hpp"

using namespace deckwork;

namespace {

// Card multiset compared by brute-force isomorphism.
bool same_deck_brute(const Graph& a, const Graph& b) {
  std::vector<Graph> ca, cb;
  for (int v = 0; v < a.order(); ++v) ca.push_back(a.vertex_deleted(v));
  for (int v = 0; v < b.order(); ++v) cb.push_back(b.vertex_deleted(v));
  std::vector<bool> used(cb.size());
  for (const Graph& x : ca) {
    bool found = false;
    for (std::size_t j = 0; j < cb.size() && !found; ++j)
      if (!used[j] && oracle::isomorphic(x, cb[j])) used[j] = found = true;
    if (!found) return false;
  }
  return true;
}

// class_leq by trying every bijection between the cards.
bool leq_brute(const Graph& gi, const Graph& gj) {
  const int n = gi.order();
  for (const auto& p : oracle::permutations(n)) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a)
      ok = !oracle::subgraphs(gi.vertex_deleted(a), gj.vertex_deleted(p[a])).empty();
    if (ok) return true;
  }
  return false;
}

}  // namespace

TEST(Recon, DeckThrowsOnEmptyGraph) { EXPECT_THROW(deck(empty_graph(0)), Error); }

TEST(Recon, PartitionAgreesWithBruteForceDecks) {
  for (auto [kind, n] : {std::pair{GraphKind::kUndirected, 4}, {GraphKind::kDirected, 3}}) {
    auto reps = enumerate_classes({kind, n});
    auto p = partition_by_deck(reps);
    EXPECT_EQ(p.graph_count(), reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (std::size_t j = 0; j < reps.size(); ++j)
        EXPECT_EQ(*p.class_of(canonical_key(reps[i])) == *p.class_of(canonical_key(reps[j])),
                  same_deck_brute(reps[i], reps[j]));
  }
}

TEST(Recon, ThreeVertexGraphsAreSingletons) {
  auto p = partition_by_deck(enumerate_classes({GraphKind::kUndirected, 3}));
  EXPECT_EQ(p.classes.size(), 4u);
  EXPECT_EQ(p.non_singleton_count(), 0u);
  auto single = partition_by_deck(std::vector<Graph>{complete_graph(4)});
  EXPECT_EQ(single.classes.size(), 1u);
}

// Sixteen 3-vertex digraphs, ten deck classes. The out-star, in-star and
// directed 2-path share a deck, and so do their complements. The two
// tournaments pair up, as do the 2-cycle plus an arc in or out.
TEST(Recon, ThreeVertexDigraphClasses) {
  auto p = partition_by_deck(enumerate_classes({GraphKind::kDirected, 3}));
  std::multiset<std::size_t> sizes;
  for (const auto& c : p.classes) sizes.insert(c.members.size());
  EXPECT_EQ(p.classes.size(), 10u);
  EXPECT_EQ(sizes, (std::multiset<std::size_t>{1, 1, 1, 1, 1, 1, 2, 2, 3, 3}));
  Graph cyc = Graph::from_edges(GraphKind::kDirected, 3, {{0, 1}, {1, 2}, {2, 0}});
  Graph trans = Graph::from_edges(GraphKind::kDirected, 3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(deck(cyc), deck(trans));
  Graph out_star = Graph::from_edges(GraphKind::kDirected, 3, {{0, 1}, {0, 2}});
  Graph in_star = Graph::from_edges(GraphKind::kDirected, 3, {{1, 0}, {2, 0}});
  Graph path = Graph::from_edges(GraphKind::kDirected, 3, {{0, 1}, {1, 2}});
  EXPECT_EQ(deck(out_star), deck(in_star));
  EXPECT_EQ(deck(out_star), deck(path));
  Graph arc_out = Graph::from_edges(GraphKind::kDirected, 3, {{0, 1}, {1, 0}, {0, 2}});
  Graph arc_in = Graph::from_edges(GraphKind::kDirected, 3, {{0, 1}, {1, 0}, {2, 0}});
  EXPECT_EQ(deck(arc_out), deck(arc_in));
}

TEST(Recon, CensusValues) {
  const std::size_t psi_values[] = {0, 1, 2, 4, 11, 34, 156};
  for (int n = 1; n <= 6; ++n) {
    Census c = census({GraphKind::kUndirected, n});
    EXPECT_EQ(c.psi, psi_values[n]);
    if (n >= 3) {
      EXPECT_EQ(c.d, c.psi) << n;
      EXPECT_EQ(c.alpha, 0u);
    }
    EXPECT_EQ(c.applicable, n >= 3);
  }
  Census one = census({GraphKind::kUndirected, 1});
  EXPECT_EQ(one.d, 1u);
  Census d3 = census({GraphKind::kDirected, 3});
  EXPECT_EQ(d3.psi, 16u);
  EXPECT_EQ(d3.d, 10u);
  EXPECT_EQ(d3.alpha, 6u);
}

TEST(Recon, KellyOnDeckEqualDigraphs) {
  auto p = partition_by_deck(enumerate_classes({GraphKind::kDirected, 3}));
  for (const auto& c : p.classes)
    for (std::size_t i = 1; i < c.members.size(); ++i)
      for (int m = 0; m < 3; ++m)
        for (const Graph& f : enumerate_classes({GraphKind::kDirected, m}))
          EXPECT_TRUE(kelly_check(f, c.members[0], c.members[i]));
}

TEST(Recon, ClassLeqMatchesBijectionSearch) {
  auto reps = enumerate_classes({GraphKind::kUndirected, 4});
  for (const Graph& a : reps) {
    EXPECT_TRUE(class_leq(a, a));
    for (const Graph& b : reps) EXPECT_EQ(class_leq(a, b), leq_brute(a, b));
  }
  auto dreps = enumerate_classes({GraphKind::kDirected, 3});
  for (const Graph& a : dreps)
    for (const Graph& b : dreps) EXPECT_EQ(class_leq(a, b), leq_brute(a, b));
}

TEST(Recon, LegitimateDecks) {
  std::vector<Graph> k2s(3, complete_graph(2));
  auto w = legitimate_deck_witness(k2s, {GraphKind::kUndirected, 3});
  ASSERT_TRUE(w);
  EXPECT_TRUE(is_isomorphic(*w, complete_graph(3)));

  std::vector<Graph> c4_cards;
  for (int v = 0; v < 4; ++v) c4_cards.push_back(cycle_graph(4).vertex_deleted(v));
  w = legitimate_deck_witness(c4_cards, {GraphKind::kUndirected, 4});
  ASSERT_TRUE(w);
  EXPECT_TRUE(is_isomorphic(*w, cycle_graph(4)));

  std::vector<Graph> bad{complete_graph(3), complete_graph(3), complete_graph(3), empty_graph(3)};
  EXPECT_FALSE(legitimate_deck_witness(bad, {GraphKind::kUndirected, 4}));
}

// Every 4-card multiset of 3-vertex graphs is legitimate exactly when it is
// the deck of one of the eleven 4-vertex graphs.
TEST(Recon, LegitimacyOverAllFourCardMultisets) {
  auto cards = enumerate_classes({GraphKind::kUndirected, 3});
  std::set<Deck> decks;
  for (const Graph& g : enumerate_classes({GraphKind::kUndirected, 4})) decks.insert(deck(g));
  int legit = 0;
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = a; b < 4; ++b)
      for (std::size_t c = b; c < 4; ++c)
        for (std::size_t d = c; d < 4; ++d) {
          std::vector<Graph> multiset{cards[a], cards[b], cards[c], cards[d]};
          auto w = legitimate_deck_witness(multiset, {GraphKind::kUndirected, 4});
          EXPECT_EQ(w.has_value(), decks.count(deck_of_cards(multiset)) == 1);
          if (w) {
            EXPECT_EQ(deck(*w), deck_of_cards(multiset));
            ++legit;
          }
        }
  EXPECT_EQ(legit, 11);
}
