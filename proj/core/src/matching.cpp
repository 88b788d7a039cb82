#include "deckwork/matching.hpp"

namespace deckwork {

BipartiteMatcher::BipartiteMatcher(int left, int right)
    : adjacent_(left), match_left_(left, -1), match_right_(right, -1) {}

bool BipartiteMatcher::augment(int l, std::vector<char>& visited) {
  for (int r : adjacent_[l]) {
    if (visited[r]) continue;
    visited[r] = 1;
    if (match_right_[r] < 0 || augment(match_right_[r], visited)) {
      match_left_[l] = r;
      match_right_[r] = l;
      return true;
    }
  }
  return false;
}

int BipartiteMatcher::solve() {
  int size = 0;
  for (int l = 0; l < static_cast<int>(adjacent_.size()); ++l) {
    if (match_left_[l] >= 0) {
      ++size;
      continue;
    }
    std::vector<char> visited(match_right_.size(), 0);
    if (augment(l, visited)) ++size;
  }
  return size;
}

std::optional<std::vector<int>> perfect_matching(const std::vector<std::vector<bool>>& compatible) {
  const int left = static_cast<int>(compatible.size());
  const int right = left == 0 ? 0 : static_cast<int>(compatible[0].size());
  if (left != right) return std::nullopt;
  BipartiteMatcher matcher(left, right);
  for (int l = 0; l < left; ++l)
    for (int r = 0; r < right; ++r)
      if (compatible[l][r]) matcher.add_edge(l, r);
  if (matcher.solve() != left) return std::nullopt;
  return matcher.match_of_left();
}

}  // namespace deckwork
