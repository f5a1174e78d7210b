#include "circarc/arcs.hpp"

#include <string>

namespace circarc {

bool covers(const Arc& arc, int slot) {
  if (arc.left <= arc.right) return arc.left <= slot && slot <= arc.right;
  return slot >= arc.left || slot <= arc.right;
}

bool intersect(const Arc& a, const Arc& b) { return covers(a, b.left) || covers(b, a.left); }

void insert_slots(ArcRepresentation& rep, int position, int count) {
  for (auto& arc : rep.arcs) {
    if (arc.left >= position) arc.left += count;
    if (arc.right >= position) arc.right += count;
  }
  rep.circle_size += count;
}

ArcRepresentation restrict_arcs(const ArcRepresentation& rep, int count) {
  ArcRepresentation out;
  out.circle_size = rep.circle_size;
  out.arcs.assign(rep.arcs.begin(), rep.arcs.begin() + count);
  return out;
}

Check verify_representation(const Graph& g, const ArcRepresentation& rep) {
  const int n = g.size();
  if (static_cast<int>(rep.arcs.size()) != n) {
    return Check::fail("model has " + std::to_string(rep.arcs.size()) + " arcs for " +
                       std::to_string(n) + " vertices");
  }
  std::vector<int> owner(static_cast<std::size_t>(rep.circle_size), -1);
  for (Vertex u = 0; u < n; ++u) {
    for (int end : {rep.arcs[u].left, rep.arcs[u].right}) {
      if (end < 0 || end >= rep.circle_size) {
        return Check::fail("endpoint of " + g.name(u) + " outside the circle");
      }
      if (owner[end] >= 0) {
        return Check::fail("slot " + std::to_string(end) + " used by " + g.name(owner[end]) +
                           " and " + g.name(u));
      }
      owner[end] = u;
    }
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (intersect(rep.arcs[u], rep.arcs[v]) != g.adjacent(u, v)) {
        return Check::fail("arcs of " + g.name(u) + " and " + g.name(v) +
                           (g.adjacent(u, v) ? " miss an edge" : " meet on a non-edge"));
      }
    }
  }
  return Check::pass();
}

}  // namespace circarc
