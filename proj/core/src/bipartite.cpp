#include "circarc/bipartite.hpp"

#include <deque>

namespace circarc {

std::variant<TwoColoring, OddCycle> two_color(const AdjacencyList& adjacency) {
  const int n = static_cast<int>(adjacency.size());
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  std::vector<int> depth(static_cast<std::size_t>(n), 0);
  std::deque<int> queue;
  for (int root = 0; root < n; ++root) {
    if (color[root] >= 0) continue;
    color[root] = 0;
    queue.push_back(root);
    while (!queue.empty()) {
      const int a = queue.front();
      queue.pop_front();
      for (int b : adjacency[a]) {
        if (color[b] < 0) {
          color[b] = 1 - color[a];
          parent[b] = a;
          depth[b] = depth[a] + 1;
          queue.push_back(b);
        } else if (color[b] == color[a]) {
          // Tree paths to the common ancestor plus the edge ab close an odd walk.
          std::vector<int> up;
          std::vector<int> down;
          int x = a;
          int y = b;
          while (x != y) {
            if (depth[x] >= depth[y]) {
              up.push_back(x);
              x = parent[x];
            } else {
              down.push_back(y);
              y = parent[y];
            }
          }
          OddCycle cycle;
          cycle.vertices.push_back(x);
          cycle.vertices.insert(cycle.vertices.end(), down.rbegin(), down.rend());
          cycle.vertices.insert(cycle.vertices.end(), up.begin(), up.end());
          return cycle;
        }
      }
    }
  }
  return TwoColoring{std::move(color)};
}

}  // namespace circarc
