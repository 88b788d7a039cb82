#include "deckwork/canonical.hpp"

#include <algorithm>
#include <bit>

#include "deckwork/error.hpp"

namespace deckwork {

namespace {

using Code = unsigned __int128;

// Bits contributed when the vertex at position j is appended after
// positions 0..j-1.
int column_width(bool directed, int j) { return directed ? 2 * j : j; }

struct BranchAndBound {
  const Graph& g;
  int n;
  bool directed;
  int total_bits;

  std::array<int, kMaxVertices> placed{};
  std::array<int, kMaxVertices> best_perm{};
  Code best = 0;
  bool have_best = false;

  BranchAndBound(const Graph& graph)
      : g(graph),
        n(graph.order()),
        directed(graph.directed()),
        total_bits(graph.edge_slot_count()) {}

  std::uint32_t column(int v, int depth) const {
    std::uint32_t col = 0;
    for (int i = 0; i < depth; ++i) {
      const int u = placed[i];
      if (directed) {
        col = (col << 2) | (std::uint32_t(g.has_edge(v, u)) << 1) | std::uint32_t(g.has_edge(u, v));
      } else {
        col = (col << 1) | std::uint32_t(g.has_edge(v, u));
      }
    }
    return col;
  }

  // Transposition (u v) is an automorphism.
  bool twins(int u, int v) const {
    const VertexMask drop = VertexMask(~((1u << u) | (1u << v)));
    if ((g.out_row(u) & drop) != (g.out_row(v) & drop)) return false;
    if (!directed) return true;
    if (g.has_edge(u, v) != g.has_edge(v, u)) return false;
    return (g.in_row(u) & drop) == (g.in_row(v) & drop);
  }

  void descend(int depth, VertexMask unplaced, Code code, int bits) {
    if (depth == n) {
      if (!have_best || code < best) {
        best = code;
        best_perm = placed;
        have_best = true;
      }
      return;
    }
    const int width = column_width(directed, depth);
    std::uint32_t min_col = ~0u;
    std::array<std::uint32_t, kMaxVertices> cols{};
    for (VertexMask r = unplaced; r; r &= VertexMask(r - 1)) {
      const int v = std::countr_zero(r);
      cols[v] = column(v, depth);
      min_col = std::min(min_col, cols[v]);
    }
    const Code next = (code << width) | min_col;
    const int next_bits = bits + width;
    if (have_best) {
      const Code best_prefix = best >> (total_bits - next_bits);
      if (next > best_prefix) return;
    }
    std::array<int, kMaxVertices> reps{};
    int rep_count = 0;
    for (VertexMask r = unplaced; r; r &= VertexMask(r - 1)) {
      const int v = std::countr_zero(r);
      if (cols[v] != min_col) continue;
      bool redundant = false;
      for (int k = 0; k < rep_count && !redundant; ++k) redundant = twins(reps[k], v);
      if (redundant) continue;
      reps[rep_count++] = v;
      placed[depth] = v;
      descend(depth + 1, VertexMask(unplaced & ~(1u << v)), next, next_bits);
    }
  }

  void run() { descend(0, full_vertex_mask(n), 0, 0); }
};

}  // namespace

class KeyBuilder {
 public:
  static CanonicalKey build(GraphKind kind, int n, Code code) {
    CanonicalKey key;
    key.kind_ = kind;
    key.n_ = static_cast<std::uint8_t>(n);
    const int bits = edge_slot_count(kind, n);
    for (int i = 0; i < bits; ++i) {
      if ((code >> (bits - 1 - i)) & 1u) key.bytes_[i >> 3] |= std::uint8_t(0x80u >> (i & 7));
    }
    return key;
  }
};

std::string CanonicalKey::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out = (kind_ == GraphKind::kDirected ? "d" : "g") + std::to_string(n_) + ":";
  for (std::uint8_t b : bytes()) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 15]);
  }
  return out;
}

std::size_t CanonicalKey::hash() const noexcept {
  std::size_t h = 1469598103934665603ull ^ (std::size_t(kind_) << 8) ^ n_;
  for (std::uint8_t b : bytes_) h = (h ^ b) * 1099511628211ull;
  return h;
}

CanonicalKey canonical_key(const Graph& g) {
  BranchAndBound search(g);
  search.run();
  return KeyBuilder::build(g.kind(), g.order(), search.best);
}

Graph canonical_form(const Graph& g) {
  BranchAndBound search(g);
  search.run();
  Graph::Rows rows{};
  const int n = g.order();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && g.has_edge(search.best_perm[i], search.best_perm[j]))
        rows[i] |= VertexMask(1u << j);
  return Graph::from_rows(g.kind(), n, rows);
}

Graph key_graph(const CanonicalKey& key) {
  const int n = key.order();
  const bool directed = key.kind() == GraphKind::kDirected;
  Graph::Rows rows{};
  int bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (key.bit(bit++)) {
        rows[j] |= VertexMask(1u << i);
        if (!directed) rows[i] |= VertexMask(1u << j);
      }
      if (directed && key.bit(bit++)) rows[i] |= VertexMask(1u << j);
    }
  }
  return Graph::from_rows(key.kind(), n, rows);
}

namespace {

// Sorted-degree fingerprint; equal for isomorphic graphs.
std::array<std::uint32_t, kMaxVertices> degree_profile(const Graph& g) {
  std::array<std::uint32_t, kMaxVertices> p{};
  for (int v = 0; v < g.order(); ++v)
    p[v] = (std::uint32_t(g.out_degree(v)) << 8) | std::uint32_t(g.directed() ? g.in_degree(v) : 0);
  std::sort(p.begin(), p.begin() + g.order());
  return p;
}

}  // namespace

bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.kind() != h.kind())
    throw Error(ErrorCode::kInvalidArgument, "isomorphism test between different graph kinds");
  if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
  if (degree_profile(g) != degree_profile(h)) return false;
  return canonical_key(g) == canonical_key(h);
}

namespace {

struct AutomorphismCounter {
  const Graph& g;
  int n;
  std::array<std::uint32_t, kMaxVertices> colour{};
  std::array<int, kMaxVertices> image{};
  std::uint64_t count = 0;

  explicit AutomorphismCounter(const Graph& graph) : g(graph), n(graph.order()) {
    // One refinement round: own degree(s) plus the multiset of neighbour
    // degrees, folded into a colour.
    std::array<std::uint32_t, kMaxVertices> base{};
    for (int v = 0; v < n; ++v)
      base[v] = (std::uint32_t(g.out_degree(v)) << 4) | std::uint32_t(g.directed() ? g.in_degree(v) : 0);
    for (int v = 0; v < n; ++v) {
      std::array<std::uint32_t, kMaxVertices> nb{};
      int k = 0;
      for (int u = 0; u < n; ++u) {
        if (g.has_edge(v, u)) nb[k++] = base[u] * 2 + 1;
        else if (g.directed() && g.has_edge(u, v)) nb[k++] = base[u] * 2;
      }
      std::sort(nb.begin(), nb.begin() + k);
      std::uint64_t h = base[v] * 0x100000001b3ull;
      for (int i = 0; i < k; ++i) h = (h ^ nb[i]) * 0x100000001b3ull;
      colour[v] = static_cast<std::uint32_t>(h ^ (h >> 32));
    }
  }

  void extend(int v, VertexMask used) {
    if (v == n) {
      ++count;
      return;
    }
    for (int w = 0; w < n; ++w) {
      if ((used >> w) & 1u || colour[w] != colour[v]) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) {
        ok = g.has_edge(u, v) == g.has_edge(image[u], w) &&
             g.has_edge(v, u) == g.has_edge(w, image[u]);
      }
      if (!ok) continue;
      image[v] = w;
      extend(v + 1, VertexMask(used | (1u << w)));
    }
  }
};

}  // namespace

std::uint64_t automorphism_count(const Graph& g) {
  AutomorphismCounter counter(g);
  counter.extend(0, 0);
  return counter.count;
}

}  // namespace deckwork
