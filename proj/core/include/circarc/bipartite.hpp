#pragma once

#include <variant>
#include <vector>

namespace circarc {

using AdjacencyList = std::vector<std::vector<int>>;

struct TwoColoring {
  std::vector<int> color;  // 0 or 1; each BFS root gets 0
};

// Closed walk v0 v1 ... v_{k-1} of odd length k; v_{k-1} v0 is an edge.
struct OddCycle {
  std::vector<int> vertices;
};

// BFS from roots in ascending order.
std::variant<TwoColoring, OddCycle> two_color(const AdjacencyList& adjacency);

}  // namespace circarc
