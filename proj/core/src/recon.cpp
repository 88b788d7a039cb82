#include "deckwork/recon.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "deckwork/covers.hpp"
#include "deckwork/error.hpp"
#include "deckwork/matching.hpp"
#include "deckwork/parallel.hpp"

namespace deckwork {

Deck deck(const Graph& g) {
  if (g.order() < 1) throw Error(ErrorCode::kInvalidArgument, "deck of the 0-vertex graph is undefined");
  Deck d;
  d.cards.reserve(static_cast<std::size_t>(g.order()));
  for (int v = 0; v < g.order(); ++v) d.cards.push_back(canonical_key(g.vertex_deleted(v)));
  std::sort(d.cards.begin(), d.cards.end());
  return d;
}

Deck deck_of_cards(std::span<const Graph> cards) {
  Deck d;
  for (const auto& c : cards) d.cards.push_back(canonical_key(c));
  std::sort(d.cards.begin(), d.cards.end());
  return d;
}

std::size_t ReconPartition::graph_count() const {
  std::size_t total = 0;
  for (const auto& c : classes) total += c.members.size();
  return total;
}

std::size_t ReconPartition::non_singleton_count() const {
  return static_cast<std::size_t>(
      std::count_if(classes.begin(), classes.end(), [](const ReconClass& c) { return c.members.size() > 1; }));
}

std::optional<std::size_t> ReconPartition::class_of(const CanonicalKey& key) const {
  for (std::size_t i = 0; i < classes.size(); ++i)
    if (std::find(classes[i].keys.begin(), classes[i].keys.end(), key) != classes[i].keys.end()) return i;
  return std::nullopt;
}

ReconPartition partition_by_deck(std::span<const Graph> reps, int jobs) {
  if (reps.empty()) return {};
  for (const auto& g : reps) {
    if (g.kind() != reps[0].kind() || g.order() != reps[0].order())
      throw Error(ErrorCode::kInvalidArgument, "partition inputs must share kind and order");
  }
  std::vector<Deck> decks(reps.size());
  std::vector<CanonicalKey> keys(reps.size());
  parallel_for(reps.size(), jobs, [&](std::size_t i) {
    decks[i] = deck(reps[i]);
    keys[i] = canonical_key(reps[i]);
  });

  std::map<Deck, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < reps.size(); ++i) groups[decks[i]].push_back(i);

  ReconPartition out;
  for (auto& [d, idx] : groups) {
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
    for (std::size_t k = 1; k < idx.size(); ++k) {
      if (keys[idx[k]] == keys[idx[k - 1]])
        throw Error(ErrorCode::kInvalidArgument, "partition inputs must be pairwise non-isomorphic");
    }
    ReconClass c;
    c.deck = d;
    for (std::size_t i : idx) {
      c.members.push_back(reps[i]);
      c.keys.push_back(keys[i]);
    }
    out.classes.push_back(std::move(c));
  }
  std::sort(out.classes.begin(), out.classes.end(),
            [](const ReconClass& a, const ReconClass& b) { return a.keys.front() < b.keys.front(); });
  return out;
}

Census census_of(const ReconPartition& partition, int n) {
  Census c;
  c.psi = partition.graph_count();
  c.d = partition.classes.size();
  c.alpha = c.psi - c.d;
  c.applicable = n >= 3;
  return c;
}

Census census(const ClassSpec& spec, const EnumerateOptions& options) {
  const auto reps = enumerate_classes(spec, options);
  if (spec.n == 0) return Census{reps.size(), reps.size(), 0, false};
  return census_of(partition_by_deck(reps, options.jobs), spec.n);
}

bool kelly_check(const Graph& f, const Graph& g, const Graph& h) {
  if (f.order() >= g.order())
    throw Error(ErrorCode::kInvalidArgument, "Kelly check needs v(f) < v(g)");
  if (g.kind() != h.kind() || g.order() != h.order() || deck(g) != deck(h))
    throw Error(ErrorCode::kInvalidArgument, "Kelly check needs two graphs with the same deck");
  return subgraph_count(f, g) == subgraph_count(f, h);
}

bool class_leq(const Graph& gi, const Graph& gj) {
  if (gi.kind() != gj.kind() || gi.order() != gj.order())
    throw Error(ErrorCode::kInvalidArgument, "class_leq needs graphs of one kind and order");
  const int n = gi.order();
  std::vector<Graph> ci, cj;
  for (int v = 0; v < n; ++v) {
    ci.push_back(gi.vertex_deleted(v));
    cj.push_back(gj.vertex_deleted(v));
  }
  std::vector<std::vector<bool>> compatible(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) compatible[a][b] = contains_subgraph(cj[b], ci[a]);
  return perfect_matching(compatible).has_value();
}

std::optional<Graph> legitimate_deck_witness(std::span<const Graph> cards, const ClassSpec& spec,
                                             const EnumerateOptions& options) {
  const int n = spec.n;
  if (static_cast<int>(cards.size()) != n)
    throw Error(ErrorCode::kInvalidArgument, "a deck of an n-vertex graph has exactly n cards");
  int edge_sum = 0;
  for (const auto& c : cards) {
    if (c.kind() != spec.kind || c.order() != n - 1)
      throw Error(ErrorCode::kInvalidArgument, "every card must have n-1 vertices and the class kind");
    edge_sum += c.edge_count();
  }
  // Each edge survives in exactly n-2 cards.
  if (n >= 3 && edge_sum % (n - 2) != 0) return std::nullopt;
  const Deck target = deck_of_cards(cards);
  for (const auto& g : enumerate_classes(spec, options)) {
    if (n >= 3 && g.edge_count() * (n - 2) != edge_sum) continue;
    if (deck(g) == target) return g;
  }
  return std::nullopt;
}

}  // namespace deckwork
