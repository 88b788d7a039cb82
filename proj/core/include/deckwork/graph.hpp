#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace deckwork {

enum class GraphKind : std::uint8_t { kUndirected = 0, kDirected = 1 };

const char* to_string(GraphKind kind) noexcept;

inline constexpr int kMaxVertices = 10;
inline constexpr int kMaxEdgeSlots = kMaxVertices * (kMaxVertices - 1);

using VertexMask = std::uint16_t;

inline constexpr VertexMask full_vertex_mask(int n) {
  return static_cast<VertexMask>((1u << n) - 1u);
}

// Bit-set over the edge slots of a host graph (at most kMaxEdgeSlots).
class SlotMask {
 public:
  constexpr SlotMask() = default;

  constexpr void set(int slot) { words_[slot >> 6] |= std::uint64_t{1} << (slot & 63); }
  constexpr bool test(int slot) const {
    return (words_[slot >> 6] >> (slot & 63)) & 1u;
  }
  constexpr int count() const {
    return std::popcount(words_[0]) + std::popcount(words_[1]);
  }
  constexpr bool none() const { return (words_[0] | words_[1]) == 0; }
  constexpr bool subset_of(const SlotMask& other) const {
    return (words_[0] & ~other.words_[0]) == 0 && (words_[1] & ~other.words_[1]) == 0;
  }
  constexpr std::uint64_t word(int i) const { return words_[i]; }

  constexpr SlotMask& operator|=(const SlotMask& o) {
    words_[0] |= o.words_[0];
    words_[1] |= o.words_[1];
    return *this;
  }
  friend constexpr SlotMask operator|(SlotMask a, const SlotMask& b) { return a |= b; }
  friend constexpr SlotMask operator&(SlotMask a, const SlotMask& b) {
    a.words_[0] &= b.words_[0];
    a.words_[1] &= b.words_[1];
    return a;
  }
  // Bits of `a` not in `b`.
  friend constexpr SlotMask operator-(SlotMask a, const SlotMask& b) {
    a.words_[0] &= ~b.words_[0];
    a.words_[1] &= ~b.words_[1];
    return a;
  }

  friend constexpr bool operator==(const SlotMask&, const SlotMask&) = default;
  friend constexpr auto operator<=>(const SlotMask&, const SlotMask&) = default;

  std::size_t hash() const noexcept {
    return std::hash<std::uint64_t>{}(words_[0] * 0x9e3779b97f4a7c15ull ^ words_[1]);
  }

 private:
  std::array<std::uint64_t, 2> words_{};
};

// Number of possible edge positions of an n-vertex graph of the given kind.
constexpr int edge_slot_count(GraphKind kind, int n) {
  return kind == GraphKind::kDirected ? n * (n - 1) : n * (n - 1) / 2;
}

// Frozen slot numbering: undirected pairs (i<j) and directed ordered pairs
// (i!=j), both in lexicographic order.
constexpr int edge_slot(GraphKind kind, int n, int u, int v) {
  if (kind == GraphKind::kDirected) return u * (n - 1) + (v < u ? v : v - 1);
  if (u > v) std::swap(u, v);
  return u * (2 * n - u - 1) / 2 + (v - u - 1);
}

std::pair<int, int> slot_endpoints(GraphKind kind, int n, int slot);

// A finite simple graph or loopless simple digraph on vertices 0..n-1.
// Adjacency is stored as one out-neighbour bit row per vertex; undirected
// graphs keep their rows symmetric.
class Graph {
 public:
  using Rows = std::array<VertexMask, kMaxVertices>;

  Graph() = default;
  // Edgeless graph on n vertices.
  Graph(GraphKind kind, int n);

  // Rejects out-of-range endpoints, loops and repeated edges.
  static Graph from_edges(GraphKind kind, int n,
                          std::span<const std::pair<int, int>> edges);
  static Graph from_edges(GraphKind kind, int n,
                          std::initializer_list<std::pair<int, int>> edges) {
    return from_edges(kind, n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
  }
  // Rejects diagonal bits, bits beyond n and (undirected) asymmetric rows.
  static Graph from_rows(GraphKind kind, int n, const Rows& rows);
  // Builds the graph whose edge slots are exactly the set bits of `mask`.
  static Graph from_slot_mask(GraphKind kind, int n, const SlotMask& mask);

  GraphKind kind() const noexcept { return kind_; }
  bool directed() const noexcept { return kind_ == GraphKind::kDirected; }
  int order() const noexcept { return n_; }

  bool has_edge(int u, int v) const noexcept { return (rows_[u] >> v) & 1u; }
  VertexMask out_row(int u) const noexcept { return rows_[u]; }
  VertexMask in_row(int v) const noexcept;
  const Rows& rows() const noexcept { return rows_; }

  int edge_count() const noexcept;
  int degree(int v) const noexcept { return std::popcount(rows_[v]); }
  int out_degree(int v) const noexcept { return std::popcount(rows_[v]); }
  int in_degree(int v) const noexcept { return std::popcount(in_row(v)); }

  int edge_slot_count() const noexcept { return deckwork::edge_slot_count(kind_, n_); }
  SlotMask edge_set() const noexcept;
  std::vector<std::pair<int, int>> edges() const;

  // G - v, remaining vertices relabelled 0..n-2 in their original order.
  Graph vertex_deleted(int v) const;
  // Subgraph induced on `vertices`, relabelled in increasing vertex order.
  Graph induced(VertexMask vertices) const;
  // Image under the relabelling u -> perm[u].
  Graph permuted(std::span<const int> perm) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  GraphKind kind_ = GraphKind::kUndirected;
  int n_ = 0;
  Rows rows_{};
};

// Named small graphs used throughout tests and tools.
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph empty_graph(int n, GraphKind kind = GraphKind::kUndirected);

}  // namespace deckwork
