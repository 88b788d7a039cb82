#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <span>
#include <vector>

#include "deckwork/covers.hpp"
#include "deckwork/exact_matrix.hpp"
#include "deckwork/recon.hpp"

namespace deckwork {

enum class FamilySource : std::uint8_t { kFile, kDeckSequences, kSearch, kRandom, kAllSequences };

const char* to_string(FamilySource s) noexcept;

// Pairwise inequivalent sequences, in insertion order.
class Family {
 public:
  explicit Family(FamilySource source = FamilySource::kFile) : source_(source) {}

  // False (and nothing stored) when an equivalent sequence is present.
  bool add(GraphSequence seq);

  FamilySource source() const noexcept { return source_; }
  const std::vector<GraphSequence>& sequences() const noexcept { return sequences_; }
  std::size_t size() const noexcept { return sequences_.size(); }

 private:
  FamilySource source_;
  std::vector<GraphSequence> sequences_;
  std::set<std::vector<CanonicalKey>> seen_;
};

// Entry (i,j) = c(F_i, H_j). Columns in class_reps order, rows in family
// order; cells are computed as independent tasks.
ExactMatrix build_matrix(std::span<const GraphSequence> family, std::span<const Graph> class_reps, int jobs = 1);
ExactMatrix build_matrix(const Family& family, std::span<const Graph> class_reps, int jobs = 1);
// Same shape with c*(F_i, H_j).
ExactMatrix build_nonoverlapping_matrix(std::span<const GraphSequence> family, std::span<const Graph> class_reps,
                                        int jobs = 1);

// The n cards of g as a sequence of canonical forms, ordered by key.
GraphSequence deck_sequence(const Graph& g);

// Minimal-key member of each class.
std::vector<Graph> default_reps_choice(const ReconPartition& partition);

// All members of all classes, in global key order.
std::vector<Graph> partition_members(const ReconPartition& partition);

struct KMatrix {
  ExactMatrix matrix;                   // rows: deck sequences, cols: reps
  std::vector<std::size_t> class_order; // partition class index per row/column
  bool upper_triangular = false;
  bool positive_diagonal = false;
  std::size_t rank = 0;
};

// Square matrix of c*(deck_sequence(G_i), G_j) with rows and columns sorted
// by a linear extension of class_leq (ties by key). Throws
// kVerificationFailed if class_leq has a cycle between distinct classes.
KMatrix build_K(const ReconPartition& partition, std::span<const Graph> reps_choice, int jobs = 1);

struct SearchBudget {
  int max_sequence_length = 3;       // candidate pairs, then triples
  std::size_t max_candidates = 50000;
  bool include_deck_sequences = true;
  bool shuffle = false;              // seeded shuffle of the candidate order
};

struct SearchResult {
  Family family{FamilySource::kSearch};
  std::vector<std::size_t> rank_trace;  // rank after each accepted row
  std::size_t candidates_tried = 0;
  std::size_t pool_size = 0;
  std::size_t best_rank = 0;
  std::size_t target = 0;               // |class_reps|
  bool certificate() const { return target > 0 && best_rank == target; }
};

// Greedy rank-increasing family over sequences drawn from the non-isomorphic
// proper subgraphs (up to n-1 vertices) of class members.
SearchResult search_full_rank(std::span<const Graph> class_reps, const SearchBudget& budget, std::uint64_t seed,
                              int jobs = 1);

struct RandomFamilyOptions {
  std::size_t max_family_size = 8;
  int max_sequence_length = 3;
};

// Uniform labelled graph: each edge slot present with probability 1/2.
Graph random_graph(GraphKind kind, int n, std::mt19937_64& rng);
Family random_family(GraphKind kind, int n, const RandomFamilyOptions& options, std::mt19937_64& rng);

struct Theorem1Options {
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  RandomFamilyOptions family;
  int jobs = 1;
};

struct Theorem1Report {
  std::size_t classes = 0;
  std::size_t graphs = 0;
  std::size_t trials = 0;
  std::size_t sequences = 0;
  std::size_t max_rank = 0;
  std::size_t rank_violations = 0;
  std::size_t kocay_checks = 0;
  std::size_t kocay_violations = 0;
  std::size_t witnesses = 0;
  std::size_t witness_checks = 0;
  std::size_t witness_violations = 0;
  bool passed() const {
    return trials > 0 && rank_violations == 0 && kocay_violations == 0 && witness_violations == 0;
  }
};

// Random families against the class: rank(M) <= #classes, class-restricted
// Kocay sums constant on each reconstruction class, and M w = 0 for every
// kernel witness s(.,G_ij) - s(.,G_i1).
Theorem1Report verify_theorem1(std::span<const Graph> class_reps, const ReconPartition& partition,
                               const Theorem1Options& options);

struct Theorem2Options {
  std::size_t max_family = 5000;
  int jobs = 1;
};

struct Theorem2Report {
  std::size_t classes = 0;
  std::size_t family_size = 0;
  KMatrix k;
  std::size_t rank_m = 0;
  std::size_t rank_m_star = 0;
  std::size_t rank_stacked = 0;
  bool passed() const {
    return k.upper_triangular && k.positive_diagonal && k.rank == classes && k.rank <= rank_m_star &&
           rank_m_star <= rank_m && rank_m <= classes && rank_stacked == rank_m;
  }
};

// Inequivalent sequences of length 2..n of (n-1)-vertex graphs of the kind.
Family all_sequences_family(GraphKind kind, int n, std::size_t max_family);

// Builds K and checks rank(K) = #classes, rank(K) <= rank(M*) <= rank(M)
// <= #classes and that M* rows lie in the row span of M.
Theorem2Report verify_theorem2(const ReconPartition& partition, std::span<const Graph> reps_choice,
                               const Theorem2Options& options);

}  // namespace deckwork
