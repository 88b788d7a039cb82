#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "deckwork/graph.hpp"

namespace deckwork {

enum class Predicate : std::uint8_t { kAll, kConnected };

const char* to_string(Predicate p) noexcept;

// A class of n-vertex graphs closed under isomorphism. For digraphs
// "connected" means weakly connected.
struct ClassSpec {
  GraphKind kind = GraphKind::kUndirected;
  int n = 0;
  Predicate predicate = Predicate::kAll;

  friend bool operator==(const ClassSpec&, const ClassSpec&) = default;
};

std::string describe(const ClassSpec& spec);

struct EnumerateOptions {
  // Required for the expensive sizes: undirected n = 7, directed n = 5.
  bool allow_slow = false;
  int jobs = 1;
};

bool is_connected(const Graph& g);
bool satisfies(const Graph& g, Predicate p);

// Largest n enumerated without / with the slow flag.
int fast_enumeration_limit(GraphKind kind) noexcept;
int slow_enumeration_limit(GraphKind kind) noexcept;

// One canonical form per isomorphism class satisfying the predicate, sorted
// by CanonicalKey. Throws kBudgetExceeded past the exhaustive limits.
// Results are memoised per spec; safe to call concurrently.
std::vector<Graph> enumerate_classes(const ClassSpec& spec, const EnumerateOptions& options = {});

std::size_t psi(const ClassSpec& spec, const EnumerateOptions& options = {});

// All classes of the kind on 0..max_n vertices, in global key order.
std::vector<Graph> enumerate_up_to(GraphKind kind, int max_n, const EnumerateOptions& options = {});

}  // namespace deckwork
