#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "deckwork/covers.hpp"
#include "deckwork/recon.hpp"

namespace deckwork {

// Counters shared by the batch verifiers. A run with zero cases is a failure.
struct GridReport {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::vector<std::string> failure_samples;  // first few, human readable
  bool passed() const { return cases > 0 && failures == 0; }
};

// Sequences of length 0..max_length drawn (ordered, with repetition) from
// `pool`, in lexicographic pool-index order.
std::vector<GraphSequence> sequences_over(std::span<const Graph> pool, int max_length, int min_length = 0);

// Product identity for every g of the kind with min_n <= v(g) <= max_n and
// every sequence over `pool` of length <= max_length.
GridReport verify_eq1_grid(GraphKind kind, int min_n, int max_n, std::span<const Graph> pool, int max_length,
                           int jobs = 1);

// `count` random cases: g uniform on n vertices, length uniform in
// [1, max_length], items uniform on 1..n vertices.
GridReport verify_eq1_random(GraphKind kind, int n, int max_length, std::size_t count, std::uint64_t seed,
                             int jobs = 1);

// Recurrence for every n-vertex g and every sequence of (n-1)-vertex graphs
// of length in [min_length, max_length].
GridReport verify_recurrence_grid(GraphKind kind, int n, int min_length, int max_length, int jobs = 1);

// `count` random (sequence, g) instances: g uniform on n vertices, items
// uniform on n-1 vertices, length uniform in [2, max_length].
GridReport verify_recurrence_random(GraphKind kind, int n, int max_length, std::size_t count, std::uint64_t seed,
                                    int jobs = 1);

// Kelly's lemma on every pair within every reconstruction class, for every
// class of graphs f with v(f) < n.
GridReport verify_kelly(const ReconPartition& partition, GraphKind kind, int n);

// The undirected pool {K1, K2, P3, K3}.
std::vector<Graph> small_undirected_pool();
// Every digraph class on at most `max_n` vertices.
std::vector<Graph> small_directed_pool(int max_n);

}  // namespace deckwork
