#include "deckwork/graph.hpp"

#include <sstream>

#include "deckwork/error.hpp"

namespace deckwork {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kMalformedInput: return "malformed_input";
    case ErrorCode::kBudgetExceeded: return "budget_exceeded";
    case ErrorCode::kIo: return "io_error";
    case ErrorCode::kVerificationFailed: return "verification_failed";
    case ErrorCode::kInternal: return "internal_error";
  }
  return "unknown";
}

const char* to_string(GraphKind kind) noexcept {
  return kind == GraphKind::kDirected ? "digraph" : "graph";
}

namespace {

void check_order(int n) {
  if (n < 0 || n > kMaxVertices) {
    std::ostringstream os;
    os << "vertex count " << n << " outside supported range 0.." << kMaxVertices;
    throw Error(ErrorCode::kInvalidArgument, os.str());
  }
}

}  // namespace

std::pair<int, int> slot_endpoints(GraphKind kind, int n, int slot) {
  if (kind == GraphKind::kDirected) {
    const int u = slot / (n - 1);
    const int r = slot % (n - 1);
    return {u, r < u ? r : r + 1};
  }
  int u = 0;
  int row = n - 1;
  while (slot >= row) {
    slot -= row;
    ++u;
    --row;
  }
  return {u, u + 1 + slot};
}

Graph::Graph(GraphKind kind, int n) : kind_(kind), n_(n) { check_order(n); }

Graph Graph::from_edges(GraphKind kind, int n,
                        std::span<const std::pair<int, int>> edges) {
  Graph g(kind, n);
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error(ErrorCode::kInvalidArgument, "edge endpoint out of range");
    }
    if (u == v) throw Error(ErrorCode::kInvalidArgument, "loops are not supported");
    if (g.has_edge(u, v)) {
      throw Error(ErrorCode::kInvalidArgument, "repeated edge (multigraphs are not supported)");
    }
    g.rows_[u] |= VertexMask(1u << v);
    if (kind == GraphKind::kUndirected) g.rows_[v] |= VertexMask(1u << u);
  }
  return g;
}

Graph Graph::from_rows(GraphKind kind, int n, const Rows& rows) {
  Graph g(kind, n);
  const VertexMask full = full_vertex_mask(n);
  for (int u = 0; u < kMaxVertices; ++u) {
    const VertexMask r = rows[u];
    if (u >= n) {
      if (r != 0) throw Error(ErrorCode::kInvalidArgument, "row beyond vertex count");
      continue;
    }
    if (r & ~full) throw Error(ErrorCode::kInvalidArgument, "edge endpoint out of range");
    if ((r >> u) & 1u) throw Error(ErrorCode::kInvalidArgument, "loops are not supported");
  }
  if (kind == GraphKind::kUndirected) {
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (((rows[u] >> v) & 1u) != ((rows[v] >> u) & 1u))
          throw Error(ErrorCode::kInvalidArgument, "undirected adjacency must be symmetric");
  }
  g.rows_ = rows;
  return g;
}

Graph Graph::from_slot_mask(GraphKind kind, int n, const SlotMask& mask) {
  Graph g(kind, n);
  const int slots = deckwork::edge_slot_count(kind, n);
  for (int s = 0; s < slots; ++s) {
    if (!mask.test(s)) continue;
    const auto [u, v] = slot_endpoints(kind, n, s);
    g.rows_[u] |= VertexMask(1u << v);
    if (kind == GraphKind::kUndirected) g.rows_[v] |= VertexMask(1u << u);
  }
  return g;
}

VertexMask Graph::in_row(int v) const noexcept {
  VertexMask r = 0;
  for (int u = 0; u < n_; ++u) r |= VertexMask(((rows_[u] >> v) & 1u) << u);
  return r;
}

int Graph::edge_count() const noexcept {
  int total = 0;
  for (int u = 0; u < n_; ++u) total += std::popcount(rows_[u]);
  return directed() ? total : total / 2;
}

SlotMask Graph::edge_set() const noexcept {
  SlotMask m;
  for (int u = 0; u < n_; ++u) {
    for (int v = directed() ? 0 : u + 1; v < n_; ++v) {
      if (u != v && has_edge(u, v)) m.set(deckwork::edge_slot(kind_, n_, u, v));
    }
  }
  return m;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n_; ++u)
    for (int v = directed() ? 0 : u + 1; v < n_; ++v)
      if (u != v && has_edge(u, v)) out.emplace_back(u, v);
  return out;
}

Graph Graph::vertex_deleted(int v) const {
  if (v < 0 || v >= n_) throw Error(ErrorCode::kInvalidArgument, "vertex index out of range");
  return induced(VertexMask(full_vertex_mask(n_) & ~(1u << v)));
}

Graph Graph::induced(VertexMask vertices) const {
  std::array<int, kMaxVertices> index{};
  int m = 0;
  for (int u = 0; u < n_; ++u)
    if ((vertices >> u) & 1u) index[u] = m++;
  Graph g(kind_, m);
  for (int u = 0; u < n_; ++u) {
    if (!((vertices >> u) & 1u)) continue;
    VertexMask r = rows_[u] & vertices;
    while (r) {
      const int v = std::countr_zero(r);
      r &= VertexMask(r - 1);
      g.rows_[index[u]] |= VertexMask(1u << index[v]);
    }
  }
  return g;
}

Graph Graph::permuted(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_)
    throw Error(ErrorCode::kInvalidArgument, "permutation size mismatch");
  Graph g(kind_, n_);
  for (int u = 0; u < n_; ++u) {
    VertexMask r = rows_[u];
    while (r) {
      const int v = std::countr_zero(r);
      r &= VertexMask(r - 1);
      g.rows_[perm[u]] |= VertexMask(1u << perm[v]);
    }
  }
  return g;
}

Graph complete_graph(int n) {
  Graph::Rows rows{};
  for (int u = 0; u < n; ++u) rows[u] = VertexMask(full_vertex_mask(n) & ~(1u << u));
  return Graph::from_rows(GraphKind::kUndirected, n, rows);
}

Graph path_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(GraphKind::kUndirected, n, e);
}

Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  if (n >= 3) e.emplace_back(n - 1, 0);
  return Graph::from_edges(GraphKind::kUndirected, n, e);
}

Graph empty_graph(int n, GraphKind kind) { return Graph(kind, n); }

}  // namespace deckwork
