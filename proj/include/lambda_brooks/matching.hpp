#pragma once

#include <vector>

namespace lambda_brooks {

/// Maximum bipartite matching by augmenting paths (Kuhn). `adj[i]` lists the
/// right vertices acceptable for left vertex i, in order of preference.
/// Returns match[i] = matched right vertex or -1.
inline std::vector<int> max_bipartite_matching(const std::vector<std::vector<int>>& adj, int right_count) {
  const int left_count = static_cast<int>(adj.size());
  std::vector<int> match_left(static_cast<std::size_t>(left_count), -1);
  std::vector<int> match_right(static_cast<std::size_t>(right_count), -1);
  std::vector<char> visited;

  auto augment = [&](auto&& self, int i) -> bool {
    for (int j : adj[static_cast<std::size_t>(i)]) {
      if (visited[static_cast<std::size_t>(j)]) continue;
      visited[static_cast<std::size_t>(j)] = 1;
      if (match_right[static_cast<std::size_t>(j)] < 0 ||
          self(self, match_right[static_cast<std::size_t>(j)])) {
        match_left[static_cast<std::size_t>(i)] = j;
        match_right[static_cast<std::size_t>(j)] = i;
        return true;
      }
    }
    return false;
  };

  // Greedy pass on first preferences, then augment the rest.
  for (int i = 0; i < left_count; ++i)
    for (int j : adj[static_cast<std::size_t>(i)])
      if (match_right[static_cast<std::size_t>(j)] < 0) {
        match_left[static_cast<std::size_t>(i)] = j;
        match_right[static_cast<std::size_t>(j)] = i;
        break;
      }
  for (int i = 0; i < left_count; ++i) {
    if (match_left[static_cast<std::size_t>(i)] >= 0) continue;
    visited.assign(static_cast<std::size_t>(right_count), 0);
    augment(augment, i);
  }
  return match_left;
}

}  // namespace lambda_brooks
