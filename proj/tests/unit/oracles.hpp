#pragma once

// Brute-force reference implementations. They only use Graph::has_edge,
// order() and kind(), never the library's search code.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include <gmpxx.h>

#include "deckwork/graph.hpp"

namespace oracle {

using deckwork::Graph;
using deckwork::GraphKind;

inline std::vector<std::vector<int>> permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> all;
  do all.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return all;
}

// Adjacency of g relabelled by u -> perm[u].
inline std::vector<std::vector<bool>> relabel(const Graph& g, const std::vector<int>& perm) {
  const int n = g.order();
  std::vector<std::vector<bool>> a(n, std::vector<bool>(n));
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (g.has_edge(u, v)) a[perm[u]][perm[v]] = true;
  return a;
}

// Strictly lower triangle, row-major; digraphs give (j,i) then (i,j).
inline std::vector<bool> bits(const std::vector<std::vector<bool>>& a, bool directed) {
  std::vector<bool> out;
  const int n = static_cast<int>(a.size());
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      out.push_back(a[j][i]);
      if (directed) out.push_back(a[i][j]);
    }
  return out;
}

inline std::vector<bool> min_bits(const Graph& g) {
  std::vector<bool> best;
  bool first = true;
  for (const auto& p : permutations(g.order())) {
    auto b = bits(relabel(g, p), g.directed());
    if (first || b < best) best = b;
    first = false;
  }
  return best;
}

inline std::uint64_t automorphisms(const Graph& g) {
  std::vector<int> id(g.order());
  std::iota(id.begin(), id.end(), 0);
  const auto self = relabel(g, id);
  std::uint64_t count = 0;
  for (const auto& p : permutations(g.order()))
    if (relabel(g, p) == self) ++count;
  return count;
}

inline bool isomorphic(const Graph& g, const Graph& h) {
  if (g.kind() != h.kind() || g.order() != h.order()) return false;
  std::vector<int> id(h.order());
  std::iota(id.begin(), id.end(), 0);
  const auto target = relabel(h, id);
  for (const auto& p : permutations(g.order()))
    if (relabel(g, p) == target) return true;
  return false;
}

// Orbits of S_n on labelled graphs: (1/n!) sum over perms of 2^(slot cycles).
inline mpz_class burnside(GraphKind kind, int n) {
  const bool directed = kind == GraphKind::kDirected;
  mpz_class total = 0;
  auto perms = permutations(n);
  for (const auto& p : perms) {
    std::set<std::pair<int, int>> seen;
    int cycles = 0;
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        if (u == v || (!directed && u > v)) continue;
        if (seen.count({u, v})) continue;
        ++cycles;
        int a = u, b = v;
        while (!seen.count({a, b})) {
          seen.insert({a, b});
          int na = p[a], nb = p[b];
          if (!directed && na > nb) std::swap(na, nb);
          a = na;
          b = nb;
        }
      }
    mpz_class term = 1;
    term <<= cycles;
    total += term;
  }
  return total / static_cast<unsigned long>(perms.size());
}

// A subgraph as (vertex mask, edge bits at index u*8+v).
using Sub = std::pair<unsigned, std::uint64_t>;

inline int ebit(int u, int v) { return u * 8 + v; }

// Every subgraph of g isomorphic to f, by vertex subsets and edge subsets.
inline std::vector<Sub> subgraphs(const Graph& f, const Graph& g) {
  const int n = g.order(), k = f.order();
  std::vector<Sub> out;
  if (k > n) return out;
  int f_edges = 0;
  for (int u = 0; u < k; ++u)
    for (int v = 0; v < k; ++v)
      if (g.directed() ? f.has_edge(u, v) : (u < v && f.has_edge(u, v))) ++f_edges;
  for (unsigned vm = 0; vm < (1u << n); ++vm) {
    if (__builtin_popcount(vm) != k) continue;
    std::vector<int> vs;
    for (int v = 0; v < n; ++v)
      if (vm >> v & 1) vs.push_back(v);
    std::vector<std::pair<int, int>> cand;  // indices into vs
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) {
        if (a == b || (!g.directed() && a > b)) continue;
        if (g.has_edge(vs[a], vs[b])) cand.push_back({a, b});
      }
    for (std::uint64_t es = 0; es < (std::uint64_t{1} << cand.size()); ++es) {
      if (__builtin_popcountll(es) != f_edges) continue;
      std::vector<std::pair<int, int>> edges;
      std::uint64_t bitsmask = 0;
      for (std::size_t i = 0; i < cand.size(); ++i)
        if (es >> i & 1) {
          edges.push_back(cand[i]);
          bitsmask |= std::uint64_t{1} << ebit(vs[cand[i].first], vs[cand[i].second]);
        }
      Graph s = Graph::from_edges(g.kind(), k, edges);
      if (isomorphic(s, f)) out.push_back({vm, bitsmask});
    }
  }
  return out;
}

inline std::uint64_t all_edge_bits(const Graph& g) {
  std::uint64_t m = 0;
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < g.order(); ++v)
      if (g.has_edge(u, v) && (g.directed() || u < v)) m |= std::uint64_t{1} << ebit(u, v);
  return m;
}

// Ordered tuples of subgraphs covering all of g; with `distinct`, the
// vertex sets must be pairwise different.
inline mpz_class covers(const std::vector<Graph>& seq, const Graph& g, bool distinct) {
  if (seq.empty()) return g.order() == 0 ? 1 : 0;
  std::vector<std::vector<Sub>> lists;
  for (const Graph& f : seq) lists.push_back(subgraphs(f, g));
  const unsigned all_v = (1u << g.order()) - 1;
  const std::uint64_t all_e = all_edge_bits(g);
  mpz_class count = 0;
  std::vector<std::size_t> idx(seq.size(), 0);
  for (const auto& l : lists)
    if (l.empty()) return 0;
  while (true) {
    unsigned vm = 0;
    std::uint64_t em = 0;
    std::set<unsigned> vsets;
    for (std::size_t i = 0; i < seq.size(); ++i) {
      vm |= lists[i][idx[i]].first;
      em |= lists[i][idx[i]].second;
      vsets.insert(lists[i][idx[i]].first);
    }
    if (vm == all_v && em == all_e && (!distinct || vsets.size() == seq.size())) ++count;
    std::size_t p = 0;
    while (p < seq.size() && ++idx[p] == lists[p].size()) idx[p++] = 0;
    if (p == seq.size()) break;
  }
  return count;
}

inline Graph random_graph(GraphKind kind, int n, std::mt19937_64& rng, double p = 0.5) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v || (kind == GraphKind::kUndirected && u > v)) continue;
      if (coin(rng)) edges.push_back({u, v});
    }
  return Graph::from_edges(kind, n, edges);
}

// All labelled graphs of the kind on n vertices.
inline std::vector<Graph> labelled(GraphKind kind, int n) {
  std::vector<std::pair<int, int>> slots;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && (kind == GraphKind::kDirected || u < v)) slots.push_back({u, v});
  std::vector<Graph> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << slots.size()); ++m) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (m >> i & 1) edges.push_back(slots[i]);
    out.push_back(Graph::from_edges(kind, n, edges));
  }
  return out;
}

inline bool weakly_connected(const Graph& g) {
  const int n = g.order();
  if (n == 0) return true;
  std::vector<bool> seen(n);
  std::vector<int> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v = 0; v < n; ++v)
      if (!seen[v] && (g.has_edge(u, v) || g.has_edge(v, u))) {
        seen[v] = true;
        stack.push_back(v);
      }
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

}  // namespace oracle
