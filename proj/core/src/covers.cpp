#include "deckwork/covers.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <unordered_map>

#include "deckwork/enumerate.hpp"
#include "deckwork/error.hpp"
#include "deckwork/recon.hpp"

namespace deckwork {

namespace {

std::atomic<std::size_t> g_table_limit{std::size_t{1} << 20};

void require_same_kind(const Graph& a, const Graph& b) {
  if (a.kind() != b.kind()) throw Error(ErrorCode::kInvalidArgument, "graph kind mismatch");
}

// Enumerates injective edge-preserving maps V(f) -> V(host).
template <typename Visit>
class EmbeddingSearch {
 public:
  EmbeddingSearch(const Graph& f, const Graph& host, Visit visit)
      : f_(f), host_(host), visit_(visit) {}

  void run() {
    if (f_.order() > host_.order()) return;
    extend(0, 0);
  }

 private:
  // Returns false once the visitor asks to stop.
  bool extend(int v, VertexMask used) {
    if (v == f_.order()) return visit_(image_, used);
    for (int w = 0; w < host_.order(); ++w) {
      if ((used >> w) & 1u) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) {
        if (f_.has_edge(u, v) && !host_.has_edge(image_[u], w)) ok = false;
        else if (f_.has_edge(v, u) && !host_.has_edge(w, image_[u])) ok = false;
      }
      if (!ok) continue;
      image_[v] = w;
      if (!extend(v + 1, VertexMask(used | (1u << w)))) return false;
    }
    return true;
  }

  const Graph& f_;
  const Graph& host_;
  Visit visit_;
  std::array<int, kMaxVertices> image_{};
};

template <typename Visit>
void for_each_embedding(const Graph& f, const Graph& host, Visit visit) {
  EmbeddingSearch<Visit>(f, host, visit).run();
}

// Per-item subgraph lists plus suffix capacities for pruning.
struct CoverProblem {
  int n = 0;
  VertexMask full_v = 0;
  SlotMask full_e;
  std::vector<std::vector<EmbeddedSubgraph>> lists;
  std::vector<int> cap_v;  // cap_v[i] = sum of v(F_j), j >= i
  std::vector<int> cap_e;

  CoverProblem(const GraphSequence& seq, const Graph& g)
      : n(g.order()), full_v(full_vertex_mask(g.order())), full_e(g.edge_set()) {
    const std::size_t m = seq.size();
    lists.reserve(m);
    for (const auto& f : seq.items()) {
      require_same_kind(f, g);
      lists.push_back(embedded_subgraphs(f, g));
    }
    cap_v.assign(m + 1, 0);
    cap_e.assign(m + 1, 0);
    for (std::size_t i = m; i-- > 0;) {
      cap_v[i] = cap_v[i + 1] + seq[i].order();
      cap_e[i] = cap_e[i + 1] + seq[i].edge_count();
    }
  }

  bool hopeless(std::size_t i, VertexMask cv, const SlotMask& ce) const {
    const int missing_v = std::popcount(VertexMask(full_v & ~cv));
    const int missing_e = (full_e - ce).count();
    return missing_v > cap_v[i] || missing_e > cap_e[i];
  }
};

class CoverCounter {
 public:
  CoverCounter(const CoverProblem& p, int slots) : p_(p) {
    use_table_ = p.n + slots <= 24 && g_table_limit.load() > 0;
    limit_ = g_table_limit.load();
  }

  BigCount count(std::size_t i, VertexMask cv, const SlotMask& ce) {
    if (i == p_.lists.size()) return (cv == p_.full_v && ce == p_.full_e) ? 1 : 0;
    if (p_.hopeless(i, cv, ce)) return 0;
    std::uint64_t key = 0;
    if (use_table_) {
      key = (std::uint64_t(i) << 24) | (ce.word(0) << p_.n) | cv;
      if (auto it = table_.find(key); it != table_.end()) return it->second;
    }
    BigCount total = 0;
    for (const auto& s : p_.lists[i]) total += count(i + 1, VertexMask(cv | s.vmask), ce | s.emask);
    if (use_table_ && table_.size() < limit_) table_.emplace(key, total);
    return total;
  }

 private:
  const CoverProblem& p_;
  bool use_table_ = false;
  std::size_t limit_ = 0;
  std::unordered_map<std::uint64_t, BigCount> table_;
};

class NonoverlappingCounter {
 public:
  explicit NonoverlappingCounter(const CoverProblem& p) : p_(p), used_(p.lists.size()) {}

  BigCount count(std::size_t i, VertexMask cv, const SlotMask& ce) {
    if (i == p_.lists.size()) return (cv == p_.full_v && ce == p_.full_e) ? 1 : 0;
    if (p_.hopeless(i, cv, ce)) return 0;
    BigCount total = 0;
    for (const auto& s : p_.lists[i]) {
      if (std::find(used_.begin(), used_.begin() + i, s.vmask) != used_.begin() + i) continue;
      used_[i] = s.vmask;
      total += count(i + 1, VertexMask(cv | s.vmask), ce | s.emask);
    }
    return total;
  }

 private:
  const CoverProblem& p_;
  std::vector<VertexMask> used_;
};

}  // namespace

void set_cover_table_limit(std::size_t entries) noexcept { g_table_limit.store(entries); }
std::size_t cover_table_limit() noexcept { return g_table_limit.load(); }

GraphSequence::GraphSequence(std::vector<Graph> items) : items_(std::move(items)) {
  for (const auto& g : items_)
    if (g.kind() != items_.front().kind()) throw Error(ErrorCode::kInvalidArgument, "sequence mixes graph kinds");
  normalized_.reserve(items_.size());
  for (const auto& g : items_) normalized_.push_back(canonical_key(g));
  std::sort(normalized_.begin(), normalized_.end());
}

int GraphSequence::max_order() const noexcept {
  int m = 0;
  for (const auto& g : items_) m = std::max(m, g.order());
  return m;
}

int GraphSequence::total_order() const noexcept {
  int s = 0;
  for (const auto& g : items_) s += g.order();
  return s;
}

int GraphSequence::total_edges() const noexcept {
  int s = 0;
  for (const auto& g : items_) s += g.edge_count();
  return s;
}

GraphSequence GraphSequence::subsequence(std::span<const int> indices) const {
  std::vector<Graph> out;
  out.reserve(indices.size());
  for (int i : indices) out.push_back(items_.at(static_cast<std::size_t>(i)));
  return GraphSequence(std::move(out));
}

std::vector<EmbeddedSubgraph> embedded_subgraphs(const Graph& f, const Graph& host) {
  require_same_kind(f, host);
  const auto f_edges = f.edges();
  std::vector<EmbeddedSubgraph> out;
  for_each_embedding(f, host, [&](const std::array<int, kMaxVertices>& image, VertexMask used) {
    EmbeddedSubgraph s{host.order(), used, {}};
    for (const auto& [u, v] : f_edges) s.emask.set(edge_slot(host.kind(), host.order(), image[u], image[v]));
    out.push_back(s);
    return true;
  });
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint64_t embedding_count(const Graph& f, const Graph& host) {
  require_same_kind(f, host);
  std::uint64_t count = 0;
  for_each_embedding(f, host, [&](const auto&, VertexMask) {
    ++count;
    return true;
  });
  return count;
}

bool contains_subgraph(const Graph& host, const Graph& f) {
  require_same_kind(f, host);
  if (f.order() > host.order() || f.edge_count() > host.edge_count()) return false;
  bool found = false;
  for_each_embedding(f, host, [&](const auto&, VertexMask) {
    found = true;
    return false;
  });
  return found;
}

BigCount subgraph_count(const Graph& h, const Graph& g) {
  return BigCount(static_cast<unsigned long>(embedded_subgraphs(h, g).size()));
}

BigCount subgraph_count_by_embeddings(const Graph& h, const Graph& g) {
  const BigCount emb(static_cast<unsigned long>(embedding_count(h, g)));
  const BigCount aut(static_cast<unsigned long>(automorphism_count(h)));
  if (!mpz_divisible_p(emb.get_mpz_t(), aut.get_mpz_t()))
    throw Error(ErrorCode::kInternal, "embedding count not divisible by automorphism count");
  return emb / aut;
}

BigCount cover_count(const GraphSequence& seq, const Graph& g) {
  if (seq.empty()) return g.order() == 0 ? 1 : 0;
  const CoverProblem problem(seq, g);
  CoverCounter counter(problem, g.edge_slot_count());
  return counter.count(0, 0, SlotMask{});
}

BigCount nonoverlapping_cover_count(const GraphSequence& seq, const Graph& g) {
  if (seq.empty()) return g.order() == 0 ? 1 : 0;
  const CoverProblem problem(seq, g);
  NonoverlappingCounter counter(problem);
  return counter.count(0, 0, SlotMask{});
}

ExactRational gamma(const GraphSequence& seq) {
  BigInt denom = 1;
  const auto& keys = seq.normalized_key();
  for (std::size_t i = 0; i < keys.size();) {
    std::size_t j = i;
    while (j < keys.size() && keys[j] == keys[i]) ++j;
    BigInt fact;
    mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(j - i));
    denom *= fact;
    i = j;
  }
  ExactRational r(BigInt(1), denom);
  r.canonicalize();
  return r;
}

BigCount kocay_sum(const GraphSequence& seq, const Graph& g, std::span<const Graph> class_reps) {
  BigCount total = 0;
  for (const auto& h : class_reps) {
    require_same_kind(h, g);
    if (h.order() != g.order()) throw Error(ErrorCode::kInvalidArgument, "class member order differs from g");
    if (h.edge_count() > g.edge_count()) continue;
    const BigCount s = subgraph_count(h, g);
    if (s == 0) continue;
    total += cover_count(seq, h) * s;
  }
  return total;
}

std::vector<BigInt> kernel_witness(const Graph& gij, const Graph& gi1, std::span<const Graph> class_reps) {
  require_same_kind(gij, gi1);
  if (gij.order() != gi1.order() || deck(gij) != deck(gi1))
    throw Error(ErrorCode::kInvalidArgument, "kernel witness needs two graphs with the same deck");
  std::vector<BigInt> w;
  w.reserve(class_reps.size());
  for (const auto& h : class_reps) w.push_back(subgraph_count(h, gij) - subgraph_count(h, gi1));
  return w;
}

ProductIdentityCheck verify_eq1(const GraphSequence& seq, const Graph& g) {
  ProductIdentityCheck check;
  check.lhs = 1;
  for (const auto& f : seq.items()) {
    require_same_kind(f, g);
    check.lhs *= subgraph_count(f, g);
  }
  const int max_v = std::min(g.order(), seq.total_order());
  const int max_e = std::min(g.edge_count(), seq.total_edges());
  check.rhs = 0;
  for (const auto& x : enumerate_up_to(g.kind(), max_v)) {
    if (x.edge_count() > max_e || x.order() < seq.max_order()) continue;
    ++check.terms;
    const BigCount c = cover_count(seq, x);
    if (c == 0) continue;
    check.rhs += c * subgraph_count(x, g);
  }
  return check;
}

}  // namespace deckwork
