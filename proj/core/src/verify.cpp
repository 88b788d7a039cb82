#include "deckwork/verify.hpp"

#include <random>

#include "deckwork/certify.hpp"
#include "deckwork/enumerate.hpp"
#include "deckwork/graph6.hpp"
#include "deckwork/parallel.hpp"
#include "deckwork/sequence_io.hpp"

namespace deckwork {

namespace {

constexpr std::size_t kFailureSamples = 5;

struct Case {
  GraphSequence seq;
  Graph g;
};

// Runs `check` over all cases in parallel; failures are recorded in case
// order so the report is independent of the worker count.
template <class Check>
GridReport run_cases(const std::vector<Case>& cases, int jobs, Check check) {
  std::vector<char> ok(cases.size(), 0);
  std::vector<std::string> detail(cases.size());
  parallel_for(cases.size(), jobs, [&](std::size_t i) { ok[i] = check(cases[i], detail[i]); });
  GridReport report;
  report.cases = cases.size();
  for (std::size_t i = 0; i < cases.size(); ++i) {
    if (ok[i]) continue;
    ++report.failures;
    if (report.failure_samples.size() < kFailureSamples)
      report.failure_samples.push_back("seq=(" + format_sequence(cases[i].seq) + ") g=" + encode_token(cases[i].g) +
                                       " " + detail[i]);
  }
  return report;
}

bool eq1_case(const Case& c, std::string& detail) {
  ProductIdentityCheck r = verify_eq1(c.seq, c.g);
  if (r.holds()) return true;
  detail = "lhs=" + r.lhs.get_str() + " rhs=" + r.rhs.get_str();
  return false;
}

bool recurrence_case(const Case& c, std::string& detail) {
  RecurrenceCheck r = verify_recurrence(c.seq, c.g);
  if (r.holds()) return true;
  detail = "lhs=" + r.lhs.get_str() + " rhs=" + r.rhs.get_str() + " cstar=" + r.nonoverlapping.get_str() +
           " top=" + r.top_block_term.get_str();
  return false;
}

}  // namespace

std::vector<GraphSequence> sequences_over(std::span<const Graph> pool, int max_length, int min_length) {
  std::vector<GraphSequence> out;
  for (int len = std::max(0, min_length); len <= max_length; ++len) {
    if (len > 0 && pool.empty()) break;
    std::vector<std::size_t> idx(len, 0);
    while (true) {
      std::vector<Graph> items;
      for (std::size_t i : idx) items.push_back(pool[i]);
      out.emplace_back(std::move(items));
      int p = len - 1;
      while (p >= 0 && idx[p] + 1 == pool.size()) idx[p--] = 0;
      if (p < 0) break;
      ++idx[p];
    }
  }
  return out;
}

GridReport verify_eq1_grid(GraphKind kind, int min_n, int max_n, std::span<const Graph> pool, int max_length,
                           int jobs) {
  const auto seqs = sequences_over(pool, max_length);
  std::vector<Case> cases;
  for (int n = min_n; n <= max_n; ++n)
    for (const Graph& g : enumerate_classes({kind, n, Predicate::kAll}))
      for (const GraphSequence& s : seqs) cases.push_back({s, g});
  return run_cases(cases, jobs, eq1_case);
}

GridReport verify_eq1_random(GraphKind kind, int n, int max_length, std::size_t count, std::uint64_t seed,
                             int jobs) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> len_dist(1, std::max(1, max_length));
  std::uniform_int_distribution<int> order_dist(1, std::max(1, n));
  std::vector<Case> cases;
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<Graph> items;
    const int len = len_dist(rng);
    for (int j = 0; j < len; ++j) items.push_back(random_graph(kind, order_dist(rng), rng));
    Graph g = random_graph(kind, n, rng);
    cases.push_back({GraphSequence(std::move(items)), g});
  }
  return run_cases(cases, jobs, eq1_case);
}

GridReport verify_recurrence_grid(GraphKind kind, int n, int min_length, int max_length, int jobs) {
  const auto items = enumerate_classes({kind, n - 1, Predicate::kAll});
  const auto seqs = sequences_over(items, max_length, min_length);
  std::vector<Case> cases;
  for (const Graph& g : enumerate_classes({kind, n, Predicate::kAll}))
    for (const GraphSequence& s : seqs) cases.push_back({s, g});
  return run_cases(cases, jobs, recurrence_case);
}

GridReport verify_recurrence_random(GraphKind kind, int n, int max_length, std::size_t count, std::uint64_t seed,
                                    int jobs) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> len_dist(2, std::max(2, max_length));
  std::vector<Case> cases;
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<Graph> items;
    const int len = len_dist(rng);
    for (int j = 0; j < len; ++j) items.push_back(random_graph(kind, n - 1, rng));
    Graph g = random_graph(kind, n, rng);
    cases.push_back({GraphSequence(std::move(items)), g});
  }
  return run_cases(cases, jobs, recurrence_case);
}

GridReport verify_kelly(const ReconPartition& partition, GraphKind kind, int n) {
  GridReport report;
  std::vector<Graph> small;
  for (int m = 0; m < n; ++m)
    for (const Graph& f : enumerate_classes({kind, m, Predicate::kAll})) small.push_back(f);
  for (const ReconClass& c : partition.classes) {
    for (std::size_t i = 0; i < c.members.size(); ++i) {
      for (std::size_t j = i + 1; j < c.members.size(); ++j) {
        for (const Graph& f : small) {
          ++report.cases;
          if (kelly_check(f, c.members[i], c.members[j])) continue;
          ++report.failures;
          if (report.failure_samples.size() < kFailureSamples)
            report.failure_samples.push_back("f=" + encode_token(f) + " g=" + encode_token(c.members[i]) +
                                             " h=" + encode_token(c.members[j]));
        }
      }
    }
  }
  return report;
}

std::vector<Graph> small_undirected_pool() {
  return {complete_graph(1), complete_graph(2), path_graph(3), complete_graph(3)};
}

std::vector<Graph> small_directed_pool(int max_n) {
  std::vector<Graph> pool;
  for (int m = 1; m <= max_n; ++m)
    for (const Graph& g : enumerate_classes({GraphKind::kDirected, m, Predicate::kAll})) pool.push_back(g);
  return pool;
}

}  // namespace deckwork
