#pragma once

#include "circarc/check.hpp"
#include "circarc/edge_types.hpp"

#include <utility>
#include <vector>

namespace circarc {

// Walks P from a to b and Q from b to a that avoid each other and the anchor.
struct AvoidWalkPair {
  Vertex anchor = -1;
  std::vector<Vertex> walk_p;
  std::vector<Vertex> walk_q;

  Vertex first() const { return walk_p.front(); }
  Vertex second() const { return walk_q.front(); }
  bool operator==(const AvoidWalkPair&) const = default;
};

using PairState = std::pair<Vertex, Vertex>;

AvoidWalkPair walks_from_states(Vertex anchor, const std::vector<PairState>& states);

// Full check against the typed graph: equal lengths, swapped endpoints,
// distinct anchor and endpoints, legal steps, mutual avoidance and anchor
// avoidance. A step may move both walks at once.
Check check_walk_pair(const TypedGraph& t, const AvoidWalkPair& pair);

}  // namespace circarc
