#include "deckwork/certify.hpp"

#include <algorithm>
#include <numeric>

#include "deckwork/error.hpp"
#include "deckwork/parallel.hpp"
#include "deckwork/sequence_io.hpp"

namespace deckwork {

const char* to_string(FamilySource s) noexcept {
  switch (s) {
    case FamilySource::kFile: return "file";
    case FamilySource::kDeckSequences: return "deck-sequences";
    case FamilySource::kSearch: return "search";
    case FamilySource::kRandom: return "random";
    case FamilySource::kAllSequences: return "all-sequences";
  }
  return "?";
}

bool Family::add(GraphSequence seq) {
  if (!seen_.insert(seq.normalized_key()).second) return false;
  sequences_.push_back(std::move(seq));
  return true;
}

namespace {

std::vector<CanonicalKey> keys_of(std::span<const Graph> graphs) {
  std::vector<CanonicalKey> keys;
  keys.reserve(graphs.size());
  for (const Graph& g : graphs) keys.push_back(canonical_key(g));
  return keys;
}

template <class CountFn>
ExactMatrix fill_matrix(std::span<const GraphSequence> family, std::span<const Graph> cols, int jobs, CountFn count) {
  ExactMatrix m(family.size(), cols.size());
  parallel_for(family.size() * cols.size(), jobs, [&](std::size_t cell) {
    std::size_t r = cell / cols.size(), c = cell % cols.size();
    m.at(r, c) = count(family[r], cols[c]);
  });
  std::vector<std::string> labels;
  labels.reserve(family.size());
  for (const GraphSequence& s : family) labels.push_back(sequence_label(s));
  m.set_row_labels(std::move(labels));
  m.set_col_labels(keys_of(cols));
  return m;
}

std::vector<BigInt> cover_row(const GraphSequence& seq, std::span<const Graph> cols) {
  std::vector<BigInt> row;
  row.reserve(cols.size());
  for (const Graph& h : cols) row.push_back(cover_count(seq, h));
  return row;
}

}  // namespace

ExactMatrix build_matrix(std::span<const GraphSequence> family, std::span<const Graph> class_reps, int jobs) {
  return fill_matrix(family, class_reps, jobs, [](const GraphSequence& s, const Graph& h) { return cover_count(s, h); });
}

ExactMatrix build_matrix(const Family& family, std::span<const Graph> class_reps, int jobs) {
  return build_matrix(std::span<const GraphSequence>(family.sequences()), class_reps, jobs);
}

ExactMatrix build_nonoverlapping_matrix(std::span<const GraphSequence> family, std::span<const Graph> class_reps,
                                        int jobs) {
  return fill_matrix(family, class_reps, jobs,
                     [](const GraphSequence& s, const Graph& h) { return nonoverlapping_cover_count(s, h); });
}

GraphSequence deck_sequence(const Graph& g) {
  std::vector<std::pair<CanonicalKey, Graph>> cards;
  for (int v = 0; v < g.order(); ++v) {
    Graph c = canonical_form(g.vertex_deleted(v));
    cards.emplace_back(canonical_key(c), std::move(c));
  }
  std::stable_sort(cards.begin(), cards.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Graph> items;
  for (auto& [k, c] : cards) items.push_back(std::move(c));
  return GraphSequence(std::move(items));
}

std::vector<Graph> default_reps_choice(const ReconPartition& partition) {
  std::vector<Graph> reps;
  for (const ReconClass& c : partition.classes) reps.push_back(c.members.front());
  return reps;
}

std::vector<Graph> partition_members(const ReconPartition& partition) {
  std::vector<std::pair<CanonicalKey, Graph>> all;
  for (const ReconClass& c : partition.classes)
    for (std::size_t i = 0; i < c.members.size(); ++i) all.emplace_back(c.keys[i], c.members[i]);
  std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Graph> out;
  out.reserve(all.size());
  for (auto& [k, g] : all) out.push_back(std::move(g));
  return out;
}

KMatrix build_K(const ReconPartition& partition, std::span<const Graph> reps_choice, int jobs) {
  const std::size_t d = partition.classes.size();
  if (reps_choice.size() != d) throw Error(ErrorCode::kInvalidArgument, "build_K: one representative per class");
  for (std::size_t i = 0; i < d; ++i) {
    auto idx = partition.class_of(canonical_key(reps_choice[i]));
    if (!idx || *idx != i) throw Error(ErrorCode::kInvalidArgument, "build_K: representative not in its class");
  }

  std::vector<char> leq(d * d, 0);
  parallel_for(d * d, jobs, [&](std::size_t cell) {
    std::size_t i = cell / d, j = cell % d;
    if (i != j) leq[cell] = class_leq(reps_choice[i], reps_choice[j]);
  });

  // Kahn's algorithm; among the available classes take the smallest key.
  // Classes are already in key order, so "smallest key" is smallest index.
  std::vector<std::size_t> order;
  std::vector<char> placed(d, 0);
  while (order.size() < d) {
    std::size_t pick = d;
    for (std::size_t i = 0; i < d && pick == d; ++i) {
      if (placed[i]) continue;
      bool minimal = true;
      for (std::size_t j = 0; j < d && minimal; ++j)
        if (!placed[j] && j != i && leq[j * d + i]) minimal = false;
      if (minimal) pick = i;
    }
    if (pick == d) throw Error(ErrorCode::kVerificationFailed, "class_leq has a cycle between distinct classes");
    placed[pick] = 1;
    order.push_back(pick);
  }

  std::vector<GraphSequence> rows;
  std::vector<Graph> cols;
  for (std::size_t i : order) {
    rows.push_back(deck_sequence(reps_choice[i]));
    cols.push_back(reps_choice[i]);
  }

  KMatrix k;
  k.matrix = build_nonoverlapping_matrix(rows, cols, jobs);
  k.class_order = order;
  k.upper_triangular = true;
  k.positive_diagonal = true;
  for (std::size_t i = 0; i < d; ++i) {
    if (sgn(k.matrix.at(i, i)) <= 0) k.positive_diagonal = false;
    for (std::size_t j = 0; j < i; ++j)
      if (sgn(k.matrix.at(i, j)) != 0) k.upper_triangular = false;
  }
  k.rank = rank(k.matrix);
  return k;
}

namespace {

// Multisets of size `len` over pool indices, as non-decreasing index tuples.
void multisets(std::size_t pool, int len, std::vector<std::vector<int>>& out) {
  std::vector<int> idx(len, 0);
  if (pool == 0) return;
  while (true) {
    out.push_back(idx);
    int p = len - 1;
    while (p >= 0 && idx[p] == static_cast<int>(pool) - 1) --p;
    if (p < 0) return;
    ++idx[p];
    for (int q = p + 1; q < len; ++q) idx[q] = idx[p];
  }
}

}  // namespace

SearchResult search_full_rank(std::span<const Graph> class_reps, const SearchBudget& budget, std::uint64_t seed,
                              int jobs) {
  SearchResult result;
  result.target = class_reps.size();
  if (class_reps.empty()) return result;
  const GraphKind kind = class_reps.front().kind();
  const int n = class_reps.front().order();
  for (const Graph& g : class_reps)
    if (g.kind() != kind || g.order() != n) throw Error(ErrorCode::kInvalidArgument, "search: mixed class");

  std::vector<Graph> pool;
  for (int m = 1; m < n; ++m) {
    for (const Graph& x : enumerate_classes({kind, m, Predicate::kAll})) {
      bool inside = std::any_of(class_reps.begin(), class_reps.end(),
                                [&](const Graph& g) { return contains_subgraph(g, x); });
      if (inside) pool.push_back(x);
    }
  }
  result.pool_size = pool.size();

  std::vector<GraphSequence> candidates;
  for (int len = 2; len <= budget.max_sequence_length; ++len) {
    std::vector<std::vector<int>> tuples;
    multisets(pool.size(), len, tuples);
    for (const auto& t : tuples) {
      std::vector<Graph> items;
      for (int i : t) items.push_back(pool[i]);
      candidates.emplace_back(std::move(items));
    }
  }
  if (budget.include_deck_sequences)
    for (const Graph& g : class_reps) candidates.push_back(deck_sequence(g));
  if (budget.shuffle) {
    std::mt19937_64 rng(seed);
    std::shuffle(candidates.begin(), candidates.end(), rng);
  }
  if (candidates.size() > budget.max_candidates) candidates.resize(budget.max_candidates);

  IncrementalRank inc(class_reps.size());
  // Rows are evaluated in parallel batches but accepted strictly in
  // candidate order, so the result does not depend on `jobs`.
  const std::size_t batch = 64;
  for (std::size_t start = 0; start < candidates.size() && inc.rank() < result.target; start += batch) {
    std::size_t end = std::min(candidates.size(), start + batch);
    std::vector<std::vector<BigInt>> rows(end - start);
    parallel_for(end - start, jobs, [&](std::size_t i) { rows[i] = cover_row(candidates[start + i], class_reps); });
    for (std::size_t i = 0; i < rows.size() && inc.rank() < result.target; ++i) {
      ++result.candidates_tried;
      if (inc.independent(rows[i]) && result.family.add(candidates[start + i])) {
        inc.add(rows[i]);
        result.rank_trace.push_back(inc.rank());
      }
    }
  }
  result.best_rank = inc.rank();
  return result;
}

Graph random_graph(GraphKind kind, int n, std::mt19937_64& rng) {
  SlotMask mask;
  const int slots = edge_slot_count(kind, n);
  for (int s = 0; s < slots; ++s)
    if (rng() & 1u) mask.set(s);
  return Graph::from_slot_mask(kind, n, mask);
}

Family random_family(GraphKind kind, int n, const RandomFamilyOptions& options, std::mt19937_64& rng) {
  Family family(FamilySource::kRandom);
  if (n < 2 || options.max_family_size == 0 || options.max_sequence_length < 1) return family;
  std::uniform_int_distribution<std::size_t> size_dist(1, options.max_family_size);
  std::uniform_int_distribution<int> len_dist(1, options.max_sequence_length);
  std::uniform_int_distribution<int> order_dist(1, n - 1);
  const std::size_t want = size_dist(rng);
  for (std::size_t i = 0; i < want; ++i) {
    std::vector<Graph> items;
    const int len = len_dist(rng);
    for (int j = 0; j < len; ++j) items.push_back(random_graph(kind, order_dist(rng), rng));
    family.add(GraphSequence(std::move(items)));
  }
  return family;
}

Theorem1Report verify_theorem1(std::span<const Graph> class_reps, const ReconPartition& partition,
                               const Theorem1Options& options) {
  Theorem1Report report;
  report.classes = partition.classes.size();
  report.graphs = class_reps.size();
  if (class_reps.empty()) return report;
  if (partition.graph_count() != class_reps.size())
    throw Error(ErrorCode::kInvalidArgument, "theorem1: partition and columns disagree");
  const GraphKind kind = class_reps.front().kind();
  const int n = class_reps.front().order();

  // Column index of every class member.
  std::vector<std::vector<std::size_t>> class_cols(partition.classes.size());
  const auto col_keys = keys_of(class_reps);
  for (std::size_t c = 0; c < col_keys.size(); ++c) {
    auto idx = partition.class_of(col_keys[c]);
    if (!idx) throw Error(ErrorCode::kInvalidArgument, "theorem1: column outside the partition");
    class_cols[*idx].push_back(c);
  }

  // s(H, G) for H, G over the columns.
  const std::size_t g = class_reps.size();
  std::vector<BigInt> s(g * g);
  parallel_for(g * g, options.jobs, [&](std::size_t cell) {
    s[cell] = subgraph_count(class_reps[cell / g], class_reps[cell % g]);
  });

  std::vector<std::vector<BigInt>> witnesses;
  for (const auto& cols : class_cols)
    for (std::size_t j = 1; j < cols.size(); ++j)
      witnesses.push_back(kernel_witness(class_reps[cols[j]], class_reps[cols[0]], class_reps));
  report.witnesses = witnesses.size();

  std::mt19937_64 rng(options.seed);
  for (std::size_t t = 0; t < options.trials; ++t) {
    Family family = random_family(kind, n, options.family, rng);
    ExactMatrix m = build_matrix(family, class_reps, options.jobs);
    ++report.trials;
    report.sequences += family.size();
    const std::size_t r = rank(m);
    report.max_rank = std::max(report.max_rank, r);
    if (r > report.classes) ++report.rank_violations;

    for (std::size_t row = 0; row < m.rows(); ++row) {
      for (const auto& cols : class_cols) {
        if (cols.size() < 2) continue;
        ++report.kocay_checks;
        // sum over columns H of M[row][H] * s(H, G) for each G in the class.
        std::vector<BigInt> sums;
        for (std::size_t gc : cols) {
          BigInt acc = 0;
          for (std::size_t h = 0; h < g; ++h) acc += m.at(row, h) * s[h * g + gc];
          sums.push_back(acc);
        }
        if (std::adjacent_find(sums.begin(), sums.end(), std::not_equal_to<>()) != sums.end())
          ++report.kocay_violations;
      }
    }
    for (const auto& w : witnesses) {
      ++report.witness_checks;
      auto mw = matvec(m, w);
      if (std::any_of(mw.begin(), mw.end(), [](const BigInt& x) { return sgn(x) != 0; })) ++report.witness_violations;
    }
  }
  return report;
}

Family all_sequences_family(GraphKind kind, int n, std::size_t max_family) {
  Family family(FamilySource::kAllSequences);
  if (n < 3) return family;
  const auto items = enumerate_classes({kind, n - 1, Predicate::kAll});
  // Multisets of size len over t items: C(t+len-1, len).
  BigInt total = 0;
  for (int len = 2; len <= n; ++len) {
    BigInt c = 0;
    mpz_bin_uiui(c.get_mpz_t(), items.size() + len - 1, len);
    total += c;
  }
  if (total > max_family)
    throw Error(ErrorCode::kBudgetExceeded, "all-sequences family has " + total.get_str() + " sequences, limit " +
                                                std::to_string(max_family));
  std::vector<std::vector<int>> tuples;
  for (int len = 2; len <= n; ++len) multisets(items.size(), len, tuples);
  for (const auto& t : tuples) {
    std::vector<Graph> seq;
    for (int i : t) seq.push_back(items[i]);
    family.add(GraphSequence(std::move(seq)));
  }
  return family;
}

Theorem2Report verify_theorem2(const ReconPartition& partition, std::span<const Graph> reps_choice,
                               const Theorem2Options& options) {
  Theorem2Report report;
  report.classes = partition.classes.size();
  if (report.classes == 0) return report;
  const Graph& any = partition.classes.front().members.front();
  const std::vector<Graph> columns = partition_members(partition);

  report.k = build_K(partition, reps_choice, options.jobs);
  Family family = all_sequences_family(any.kind(), any.order(), options.max_family);
  report.family_size = family.size();
  std::span<const GraphSequence> seqs(family.sequences());
  ExactMatrix m = build_matrix(seqs, columns, options.jobs);
  ExactMatrix m_star = build_nonoverlapping_matrix(seqs, columns, options.jobs);
  report.rank_m = rank(m);
  report.rank_m_star = rank(m_star);
  report.rank_stacked = rank(m.stacked(m_star));
  return report;
}

}  // namespace deckwork
