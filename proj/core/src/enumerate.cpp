#include "deckwork/enumerate.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>
#include <unordered_set>

#include "deckwork/canonical.hpp"
#include "deckwork/error.hpp"
#include "deckwork/parallel.hpp"

namespace deckwork {

const char* to_string(Predicate p) noexcept {
  return p == Predicate::kConnected ? "connected" : "all";
}

std::string describe(const ClassSpec& spec) {
  std::ostringstream os;
  os << to_string(spec.kind) << " n=" << spec.n << " " << to_string(spec.predicate);
  return os.str();
}

bool is_connected(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return true;
  VertexMask seen = 1, frontier = 1;
  while (frontier) {
    VertexMask next = 0;
    for (VertexMask r = frontier; r; r &= VertexMask(r - 1)) {
      const int v = std::countr_zero(r);
      next |= g.out_row(v);
      if (g.directed()) next |= g.in_row(v);
    }
    frontier = VertexMask(next & ~seen);
    seen |= next;
  }
  return seen == full_vertex_mask(n);
}

bool satisfies(const Graph& g, Predicate p) {
  return p == Predicate::kAll || is_connected(g);
}

int fast_enumeration_limit(GraphKind kind) noexcept {
  return kind == GraphKind::kDirected ? 4 : 6;
}

int slow_enumeration_limit(GraphKind kind) noexcept {
  return kind == GraphKind::kDirected ? 5 : 7;
}

namespace {

// Labelings whose (out, in) degree pairs are non-increasing by vertex index.
// Every isomorphism class has at least one.
bool degree_sorted(const Graph& g) {
  std::uint32_t prev = ~0u;
  for (int v = 0; v < g.order(); ++v) {
    const std::uint32_t d =
        (std::uint32_t(g.out_degree(v)) << 8) | std::uint32_t(g.directed() ? g.in_degree(v) : 0);
    if (d > prev) return false;
    prev = d;
  }
  return true;
}

std::vector<Graph> enumerate_uncached(const ClassSpec& spec, const EnumerateOptions& options) {
  const int slots = edge_slot_count(spec.kind, spec.n);
  const std::uint64_t total = std::uint64_t{1} << slots;

  const int jobs = std::max(options.jobs, 1);
  // Fixed chunking; the merged key set does not depend on it.
  const std::uint64_t chunk_count = std::min<std::uint64_t>(total, 64);
  std::vector<std::unordered_set<CanonicalKey>> found(chunk_count);
  parallel_for(chunk_count, jobs, [&](std::size_t c) {
    const std::uint64_t begin = total * c / chunk_count;
    const std::uint64_t end = total * (c + 1) / chunk_count;
    auto& keys = found[c];
    for (std::uint64_t code = begin; code < end; ++code) {
      SlotMask mask;
      for (std::uint64_t r = code; r; r &= r - 1) mask.set(std::countr_zero(r));
      const Graph g = Graph::from_slot_mask(spec.kind, spec.n, mask);
      if (!degree_sorted(g) || !satisfies(g, spec.predicate)) continue;
      keys.insert(canonical_key(g));
    }
  });

  std::unordered_set<CanonicalKey> merged;
  for (auto& part : found) merged.insert(part.begin(), part.end());
  std::vector<CanonicalKey> keys(merged.begin(), merged.end());
  std::sort(keys.begin(), keys.end());
  std::vector<Graph> out;
  out.reserve(keys.size());
  for (const auto& k : keys) out.push_back(key_graph(k));
  return out;
}

struct Cache {
  std::mutex mutex;
  std::map<std::tuple<int, int, int>, std::vector<Graph>> entries;
};

Cache& cache() {
  static Cache c;
  return c;
}

}  // namespace

std::vector<Graph> enumerate_classes(const ClassSpec& spec, const EnumerateOptions& options) {
  if (spec.n < 0) throw Error(ErrorCode::kInvalidArgument, "negative vertex count");
  if (spec.n > slow_enumeration_limit(spec.kind)) {
    throw Error(ErrorCode::kBudgetExceeded,
                "exhaustive enumeration of " + describe(spec) + " exceeds the supported limit n <= " +
                    std::to_string(slow_enumeration_limit(spec.kind)));
  }
  const auto id = std::make_tuple(int(spec.kind), spec.n, int(spec.predicate));
  {
    std::lock_guard lock(cache().mutex);
    if (auto it = cache().entries.find(id); it != cache().entries.end()) return it->second;
  }
  if (spec.n > fast_enumeration_limit(spec.kind) && !options.allow_slow) {
    throw Error(ErrorCode::kBudgetExceeded,
                "enumerating " + describe(spec) + " is slow; pass the slow flag to run it");
  }
  auto result = enumerate_uncached(spec, options);
  std::lock_guard lock(cache().mutex);
  // Write-once: a concurrent caller may have inserted an identical result.
  return cache().entries.try_emplace(id, std::move(result)).first->second;
}

std::size_t psi(const ClassSpec& spec, const EnumerateOptions& options) {
  return enumerate_classes(spec, options).size();
}

std::vector<Graph> enumerate_up_to(GraphKind kind, int max_n, const EnumerateOptions& options) {
  std::vector<Graph> out;
  for (int n = 0; n <= max_n; ++n) {
    auto part = enumerate_classes({kind, n, Predicate::kAll}, options);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

}  // namespace deckwork
