#pragma once

#include <compare>
#include <optional>
#include <span>
#include <vector>

#include "deckwork/canonical.hpp"
#include "deckwork/enumerate.hpp"
#include "deckwork/graph.hpp"

namespace deckwork {

// Multiset of card keys, sorted.
struct Deck {
  std::vector<CanonicalKey> cards;

  friend bool operator==(const Deck&, const Deck&) = default;
  friend auto operator<=>(const Deck&, const Deck&) = default;
};

Deck deck(const Graph& g);

// Same multiset as deck(), given as card graphs.
Deck deck_of_cards(std::span<const Graph> cards);

struct ReconClass {
  std::vector<Graph> members;        // sorted by key
  std::vector<CanonicalKey> keys;    // keys[i] = canonical_key(members[i])
  Deck deck;
};

// Reconstruction classes ordered by their minimal member key.
struct ReconPartition {
  std::vector<ReconClass> classes;

  std::size_t graph_count() const;
  std::size_t non_singleton_count() const;
  // Index of the class containing the graph with this key, if any.
  std::optional<std::size_t> class_of(const CanonicalKey& key) const;
};

// Requires pairwise non-isomorphic inputs of one kind and order.
ReconPartition partition_by_deck(std::span<const Graph> reps, int jobs = 1);

struct Census {
  std::size_t psi = 0;
  std::size_t d = 0;
  std::size_t alpha = 0;
  // The reconstruction conjecture only speaks about n >= 3.
  bool applicable = true;
};

Census census_of(const ReconPartition& partition, int n);
Census census(const ClassSpec& spec, const EnumerateOptions& options = {});

// s(f,g) == s(f,h); requires equal decks and v(f) < v(g).
bool kelly_check(const Graph& f, const Graph& g, const Graph& h);

// True iff some bijection maps every card of gi into a card of gj as a
// subgraph (perfect matching between cards).
bool class_leq(const Graph& gi, const Graph& gj);

// A graph of the class whose deck is exactly `cards`, if one exists.
// Requires spec.n == cards.size() and every card on n-1 vertices.
std::optional<Graph> legitimate_deck_witness(std::span<const Graph> cards, const ClassSpec& spec,
                                             const EnumerateOptions& options = {});

}  // namespace deckwork
