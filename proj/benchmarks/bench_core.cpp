#include <random>

#include <benchmark/benchmark.h>

#include "deckwork/certify.hpp"

using namespace deckwork;

namespace {

std::vector<Graph> random_graphs(GraphKind kind, int n, std::size_t count) {
  std::mt19937_64 rng(42);
  std::vector<Graph> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_graph(kind, n, rng));
  return out;
}

void BM_CanonicalKey(benchmark::State& state) {
  const auto graphs = random_graphs(GraphKind::kUndirected, static_cast<int>(state.range(0)), 256);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(canonical_key(graphs[i++ % graphs.size()]));
}
BENCHMARK(BM_CanonicalKey)->DenseRange(4, 10, 2);

void BM_CanonicalKeyDigraph(benchmark::State& state) {
  const auto graphs = random_graphs(GraphKind::kDirected, static_cast<int>(state.range(0)), 256);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(canonical_key(graphs[i++ % graphs.size()]));
}
BENCHMARK(BM_CanonicalKeyDigraph)->DenseRange(3, 7, 2);

void BM_CoverCountDeck(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto graphs = random_graphs(GraphKind::kUndirected, n, 32);
  std::vector<GraphSequence> decks;
  for (const Graph& g : graphs) decks.push_back(deck_sequence(g));
  std::size_t i = 0;
  for (auto _ : state) {
    const std::size_t k = i++ % graphs.size();
    benchmark::DoNotOptimize(cover_count(decks[k], graphs[(k + 1) % graphs.size()]));
  }
}
BENCHMARK(BM_CoverCountDeck)->DenseRange(4, 6, 1);

// enumerate_classes memoises; after the first round this times the deck
// partition on top of a cached enumeration.
void BM_Census(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(census({GraphKind::kUndirected, n}));
}
BENCHMARK(BM_Census)->DenseRange(4, 6, 1);

void BM_Rank(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> d(-50, 50);
  ExactMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m.at(r, c) = d(rng);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_Rank)->RangeMultiplier(2)->Range(8, 64);

void BM_SearchConnected5(benchmark::State& state) {
  const auto reps = enumerate_classes({GraphKind::kUndirected, 5, Predicate::kConnected});
  for (auto _ : state) benchmark::DoNotOptimize(search_full_rank(reps, {}, 1).best_rank);
}
BENCHMARK(BM_SearchConnected5)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
