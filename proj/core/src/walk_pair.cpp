#include "circarc/walk_pair.hpp"

#include <string>

namespace circarc {

AvoidWalkPair walks_from_states(Vertex anchor, const std::vector<PairState>& states) {
  AvoidWalkPair out;
  out.anchor = anchor;
  out.walk_p.reserve(states.size());
  out.walk_q.reserve(states.size());
  for (const auto& [p, q] : states) {
    out.walk_p.push_back(p);
    out.walk_q.push_back(q);
  }
  return out;
}

Check check_walk_pair(const TypedGraph& t, const AvoidWalkPair& pair) {
  const auto& p = pair.walk_p;
  const auto& q = pair.walk_q;
  const int n = t.size();
  if (p.empty() || p.size() != q.size()) return Check::fail("walks are empty or differ in length");
  auto in_range = [n](Vertex v) { return v >= 0 && v < n; };
  if (!in_range(pair.anchor)) return Check::fail("anchor out of range");
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!in_range(p[i]) || !in_range(q[i])) return Check::fail("walk vertex out of range");
  }
  if (p.front() != q.back() || q.front() != p.back()) {
    return Check::fail("walk endpoints are not swapped");
  }
  if (p.front() == q.front() || pair.anchor == p.front() || pair.anchor == q.front()) {
    return Check::fail("anchor and pair are not distinct");
  }
  if (!t.avoids_edge(p.front(), q.front(), q.front())) {
    return Check::fail("start state is nested");
  }
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    const std::string at = "step " + std::to_string(i) + ": ";
    if (!t.adjacent(p[i], p[i + 1]) || !t.adjacent(q[i], q[i + 1])) {
      return Check::fail(at + "move along a non-edge");
    }
    if (!t.avoids_edge(p[i], q[i], q[i + 1]) || !t.avoids_edge(q[i + 1], p[i], p[i + 1])) {
      return Check::fail(at + "walks do not avoid each other");
    }
    if (!t.avoids_edge(pair.anchor, p[i], p[i + 1]) ||
        !t.avoids_edge(pair.anchor, q[i], q[i + 1])) {
      return Check::fail(at + "anchor is not avoided");
    }
  }
  if (!t.avoids_edge(pair.anchor, p.back(), p.back()) ||
      !t.avoids_edge(pair.anchor, q.back(), q.back())) {
    return Check::fail("anchor is not avoided at the end");
  }
  return Check::pass();
}

}  // namespace circarc
