#include "tropgenus/pebble.hpp"

#include <algorithm>
#include <string>

#include "tropgenus/errors.hpp"

namespace tropgenus {

PebbleGame::PebbleGame(int vertex_count)
    : pebbles_(vertex_count, 2), out_(vertex_count) {}

bool PebbleGame::gather_to(int target, int other) {
  const int n = static_cast<int>(pebbles_.size());
  std::vector<int> parent(n, -1);
  std::vector<bool> visited(n, false);
  visited[target] = true;
  visited[other] = true;  // pebbles on `other` already count toward the pair
  std::vector<int> stack = {target};
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : out_[x]) {
      if (visited[y]) continue;
      visited[y] = true;
      parent[y] = x;
      if (pebbles_[y] > 0) {
        // Take the pebble and reverse the path target -> ... -> y.
        --pebbles_[y];
        ++pebbles_[target];
        int cur = y;
        while (parent[cur] != -1) {
          int p = parent[cur];
          auto it = std::find(out_[p].begin(), out_[p].end(), cur);
          out_[p].erase(it);
          out_[cur].push_back(p);
          cur = p;
        }
        return true;
      }
      stack.push_back(y);
    }
  }
  return false;
}

bool PebbleGame::try_insert(int u, int v) {
  // Independence requires 4 pebbles on {u,v}; with at most 2 per vertex this
  // means both saturated.
  while (pebbles_[u] + pebbles_[v] < 4) {
    bool moved = false;
    if (pebbles_[u] < 2) moved = gather_to(u, v);
    if (!moved && pebbles_[v] < 2) moved = gather_to(v, u);
    if (!moved) return false;
  }
  --pebbles_[u];
  out_[u].push_back(v);
  ++accepted_;
  return true;
}

int pebble_rank(const std::vector<std::pair<int, int>>& edges,
                int vertex_count) {
  if (vertex_count <= 0) fail(ErrorKind::InvalidInput, "empty vertex set");
  for (const auto& [u, v] : edges) {
    if (u == v)
      fail(ErrorKind::InvalidInput, "loop edge at vertex " + std::to_string(u + 1));
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
      fail(ErrorKind::InvalidInput, "edge endpoint out of range");
  }
  PebbleGame game(vertex_count);
  for (const auto& [u, v] : edges) game.try_insert(u, v);
  return game.accepted_count();
}

}  // namespace tropgenus
