#pragma once

#include <optional>
#include <vector>

namespace deckwork {

// Maximum bipartite matching by augmenting paths (Kuhn). `adjacent[l]` lists
// the right vertices compatible with left vertex l, tried in listed order,
// so the result is deterministic.
class BipartiteMatcher {
 public:
  BipartiteMatcher(int left, int right);

  void add_edge(int l, int r) { adjacent_[l].push_back(r); }

  // Size of a maximum matching; match_of_left() is valid afterwards.
  int solve();
  const std::vector<int>& match_of_left() const { return match_left_; }

 private:
  bool augment(int l, std::vector<char>& visited);

  std::vector<std::vector<int>> adjacent_;
  std::vector<int> match_left_;
  std::vector<int> match_right_;
};

// Left-to-right assignment covering every left vertex, if one exists.
std::optional<std::vector<int>> perfect_matching(const std::vector<std::vector<bool>>& compatible);

}  // namespace deckwork
