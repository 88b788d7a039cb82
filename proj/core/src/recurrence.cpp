#include <algorithm>
#include <map>
#include <set>

#include "deckwork/covers.hpp"
#include "deckwork/error.hpp"

namespace deckwork {

namespace {

using Block = std::uint32_t;  // bit set over sequence positions
using KeyList = std::vector<CanonicalKey>;

// Set partitions of {0..l-1} into exactly k labelled blocks (onto maps).
void onto_maps(int l, int k, std::vector<int>& assign, int pos, std::vector<std::vector<Block>>& out) {
  if (pos == l) {
    std::vector<Block> blocks(static_cast<std::size_t>(k), 0);
    for (int i = 0; i < l; ++i) blocks[static_cast<std::size_t>(assign[i])] |= Block(1u << i);
    for (Block b : blocks)
      if (b == 0) return;
    out.push_back(std::move(blocks));
    return;
  }
  for (int c = 0; c < k; ++c) {
    assign[pos] = c;
    onto_maps(l, k, assign, pos + 1, out);
  }
}

std::vector<int> block_indices(Block b) {
  std::vector<int> idx;
  for (int i = 0; b; ++i, b >>= 1)
    if (b & 1u) idx.push_back(i);
  return idx;
}

// Isomorphism types of (n-1)-vertex graphs that are unions of embeddings of
// the block's items into g sharing one vertex set.
class BlockTypes {
 public:
  BlockTypes(const GraphSequence& seq, const Graph& g) : seq_(seq), g_(g) {
    for (const auto& f : seq.items()) lists_.push_back(embedded_subgraphs(f, g));
  }

  const std::set<CanonicalKey>& types(Block b) {
    if (auto it = memo_.find(b); it != memo_.end()) return it->second;
    std::set<CanonicalKey> out;
    const auto idx = block_indices(b);
    const int n = g_.order();
    for (int missing = 0; missing < n; ++missing) {
      const VertexMask s = VertexMask(full_vertex_mask(n) & ~(1u << missing));
      std::vector<std::vector<SlotMask>> choices;
      for (int j : idx) {
        std::vector<SlotMask> c;
        for (const auto& e : lists_[static_cast<std::size_t>(j)])
          if (e.vmask == s) c.push_back(e.emask);
        if (c.empty()) break;
        choices.push_back(std::move(c));
      }
      if (choices.size() != idx.size()) continue;
      collect(choices, 0, SlotMask{}, s, out);
    }
    return memo_.emplace(b, std::move(out)).first->second;
  }

 private:
  void collect(const std::vector<std::vector<SlotMask>>& choices, std::size_t i, const SlotMask& acc,
               VertexMask s, std::set<CanonicalKey>& out) const {
    if (i == choices.size()) {
      out.insert(canonical_key(Graph::from_slot_mask(g_.kind(), g_.order(), acc).induced(s)));
      return;
    }
    for (const auto& m : choices[i]) collect(choices, i + 1, acc | m, s, out);
  }

  const GraphSequence& seq_;
  const Graph& g_;
  std::vector<std::vector<EmbeddedSubgraph>> lists_;
  std::map<Block, std::set<CanonicalKey>> memo_;
};

void product_of_types(const std::vector<const std::set<CanonicalKey>*>& sets, std::size_t i, KeyList& cur,
                      std::set<KeyList>& out) {
  if (i == sets.size()) {
    KeyList sorted = cur;
    std::sort(sorted.begin(), sorted.end());
    out.insert(std::move(sorted));
    return;
  }
  for (const auto& k : *sets[i]) {
    cur.push_back(k);
    product_of_types(sets, i + 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

RecurrenceCheck verify_recurrence(const GraphSequence& seq, const Graph& g) {
  const int n = g.order();
  const int l = static_cast<int>(seq.size());
  if (l < 2 || l > n)
    throw Error(ErrorCode::kInvalidArgument, "recurrence needs a sequence length between 2 and v(g)");
  for (const auto& f : seq.items()) {
    if (f.kind() != g.kind()) throw Error(ErrorCode::kInvalidArgument, "graph kind mismatch");
    if (f.order() != n - 1)
      throw Error(ErrorCode::kInvalidArgument, "recurrence items must have exactly v(g)-1 vertices");
  }

  RecurrenceCheck check;
  check.lhs = cover_count(seq, g);
  check.nonoverlapping = nonoverlapping_cover_count(seq, g);
  check.rhs = 0;
  check.top_block_term = 0;

  BlockTypes block_types(seq, g);
  std::map<std::pair<Block, CanonicalKey>, BigCount> block_covers;
  auto block_cover = [&](Block b, const CanonicalKey& h) -> const BigCount& {
    const auto id = std::make_pair(b, h);
    if (auto it = block_covers.find(id); it != block_covers.end()) return it->second;
    const auto idx = block_indices(b);
    return block_covers.emplace(id, cover_count(seq.subsequence(idx), key_graph(h))).first->second;
  };

  for (int k = 2; k <= l; ++k) {
    std::vector<std::vector<Block>> maps;
    std::vector<int> assign(static_cast<std::size_t>(l), 0);
    onto_maps(l, k, assign, 0, maps);
    check.onto_maps += maps.size();

    // Inequivalent H: sorted key lists reachable from some onto map.
    std::set<KeyList> h_sequences;
    for (const auto& blocks : maps) {
      std::vector<const std::set<CanonicalKey>*> sets;
      bool empty = false;
      for (Block b : blocks) {
        sets.push_back(&block_types.types(b));
        empty = empty || sets.back()->empty();
      }
      if (empty) continue;
      KeyList cur;
      product_of_types(sets, 0, cur, h_sequences);
    }

    for (const auto& h_keys : h_sequences) {
      ++check.h_sequences;
      std::vector<Graph> h_items;
      for (const auto& key : h_keys) h_items.push_back(key_graph(key));
      const GraphSequence h(std::move(h_items));
      const BigCount star = nonoverlapping_cover_count(h, g);
      if (star == 0) continue;
      const ExactRational weight = gamma(h) * ExactRational(star);
      for (const auto& blocks : maps) {
        BigCount prod = 1;
        for (std::size_t i = 0; i < blocks.size() && prod != 0; ++i) prod *= block_cover(blocks[i], h_keys[i]);
        if (prod == 0) continue;
        const ExactRational term = weight * ExactRational(prod);
        check.rhs += term;
        if (k == l) check.top_block_term += term;
      }
    }
  }
  check.rhs.canonicalize();
  check.top_block_term.canonicalize();
  return check;
}

}  // namespace deckwork
