#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>

#include "deckwork/graph.hpp"

namespace deckwork {

// Canonical encoding of an isomorphism class: the lexicographically minimal
// adjacency bit-string over all vertex orderings. Bits are read row-major
// from the strictly lower triangle (row j covers columns 0..j-1; digraphs
// emit (j,i) then (i,j) for each cell), packed MSB-first.
//
// Keys compare by (kind, order, bytes); that comparison is the global order
// of isomorphism classes.
class CanonicalKey {
 public:
  static constexpr int kMaxBytes = (kMaxEdgeSlots + 7) / 8;

  CanonicalKey() = default;

  GraphKind kind() const noexcept { return kind_; }
  int order() const noexcept { return n_; }
  int bit_count() const noexcept { return edge_slot_count(kind_, n_); }
  bool bit(int i) const noexcept { return (bytes_[i >> 3] >> (7 - (i & 7))) & 1u; }
  std::span<const std::uint8_t> bytes() const noexcept {
    return {bytes_.data(), static_cast<std::size_t>((bit_count() + 7) / 8)};
  }
  std::string hex() const;

  friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;

  std::size_t hash() const noexcept;

 private:
  friend class KeyBuilder;

  GraphKind kind_ = GraphKind::kUndirected;
  std::uint8_t n_ = 0;
  std::array<std::uint8_t, kMaxBytes> bytes_{};
};

CanonicalKey canonical_key(const Graph& g);

// The representative whose own encoding (identity ordering) is the key.
Graph canonical_form(const Graph& g);

// Inverse of canonical_key on its image.
Graph key_graph(const CanonicalKey& key);

// Throws kInvalidArgument when kinds differ.
bool is_isomorphic(const Graph& g, const Graph& h);

std::uint64_t automorphism_count(const Graph& g);

}  // namespace deckwork

template <>
struct std::hash<deckwork::CanonicalKey> {
  std::size_t operator()(const deckwork::CanonicalKey& k) const noexcept { return k.hash(); }
};
