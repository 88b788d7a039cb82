#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "deckwork/bigint.hpp"
#include "deckwork/canonical.hpp"
#include "deckwork/graph.hpp"

namespace deckwork {

// A subgraph of a host: a vertex set plus an edge set over the host's slot
// numbering. Isolated vertices are part of the identity.
struct EmbeddedSubgraph {
  int host_n = 0;
  VertexMask vmask = 0;
  SlotMask emask;

  friend bool operator==(const EmbeddedSubgraph&, const EmbeddedSubgraph&) = default;
  friend auto operator<=>(const EmbeddedSubgraph&, const EmbeddedSubgraph&) = default;
};

// Ordered list of graphs F_1..F_m. Two sequences are equivalent when their
// normalized keys (sorted multiset of canonical keys) agree.
class GraphSequence {
 public:
  GraphSequence() = default;
  explicit GraphSequence(std::vector<Graph> items);

  const std::vector<Graph>& items() const noexcept { return items_; }
  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  const Graph& operator[](std::size_t i) const { return items_[i]; }
  const std::vector<CanonicalKey>& normalized_key() const noexcept { return normalized_; }

  bool equivalent_to(const GraphSequence& other) const { return normalized_ == other.normalized_; }
  int max_order() const noexcept;
  int total_order() const noexcept;
  int total_edges() const noexcept;

  // Items at the given indices, in index order.
  GraphSequence subsequence(std::span<const int> indices) const;

 private:
  std::vector<Graph> items_;
  std::vector<CanonicalKey> normalized_;
};

// All distinct subgraphs of `host` isomorphic to `f`, sorted.
std::vector<EmbeddedSubgraph> embedded_subgraphs(const Graph& f, const Graph& host);

// Injective maps V(f) -> V(host) carrying edges to edges.
std::uint64_t embedding_count(const Graph& f, const Graph& host);

// True iff host has a subgraph isomorphic to f (same kind).
bool contains_subgraph(const Graph& host, const Graph& f);

// s(H,G) by enumerating distinct subgraphs.
BigCount subgraph_count(const Graph& h, const Graph& g);
// s(H,G) as embeddings / |Aut(H)|.
BigCount subgraph_count_by_embeddings(const Graph& h, const Graph& g);

// c(F,G): ordered tuples of subgraphs S_i ~ F_i whose union is exactly G.
// The empty sequence covers only the 0-vertex graph.
BigCount cover_count(const GraphSequence& seq, const Graph& g);

// c*(F,G): as cover_count with pairwise distinct vertex sets.
BigCount nonoverlapping_cover_count(const GraphSequence& seq, const Graph& g);

// 1 / prod(k_i!) over isomorphism-class multiplicities k_i.
ExactRational gamma(const GraphSequence& seq);

// sum over H in class_reps of c(seq,H) * s(H,g).
BigCount kocay_sum(const GraphSequence& seq, const Graph& g, std::span<const Graph> class_reps);

// w(H) = s(H,gij) - s(H,gi1) over class_reps; requires deck(gij) == deck(gi1).
std::vector<BigInt> kernel_witness(const Graph& gij, const Graph& gi1,
                                   std::span<const Graph> class_reps);

// Both sides of prod_i s(F_i,g) = sum_X c(F,X) s(X,g), X over all classes on
// at most v(g) vertices (pruned by vertex and edge budget).
struct ProductIdentityCheck {
  BigCount lhs;
  BigCount rhs;
  std::size_t terms = 0;  // X classes evaluated
  bool holds() const { return lhs == rhs; }
};
ProductIdentityCheck verify_eq1(const GraphSequence& seq, const Graph& g);

// Both sides of the vertex-set partition recurrence
//   c(F,G) = sum_{k=2..l} sum_{P onto} sum_H gamma(H) c*(H,G) prod_i c(F|P^-1(i), H_i)
// for sequences of (n-1)-vertex graphs with 2 <= l <= n. The k = l part must
// equal c*(F,G) on its own; that is checked too.
struct RecurrenceCheck {
  BigCount lhs;
  ExactRational rhs;
  BigCount nonoverlapping;      // c*(F,G)
  ExactRational top_block_term; // k = l contribution
  std::size_t h_sequences = 0;  // inequivalent H evaluated
  std::size_t onto_maps = 0;
  bool holds() const { return ExactRational(lhs) == rhs && ExactRational(nonoverlapping) == top_block_term; }
};
RecurrenceCheck verify_recurrence(const GraphSequence& seq, const Graph& g);

// Caps the cover-count transposition table (entries per call). 0 disables it.
void set_cover_table_limit(std::size_t entries) noexcept;
std::size_t cover_table_limit() noexcept;

}  // namespace deckwork
