#include "circarc/edge_types.hpp"

#include "circarc/errors.hpp"

#include <string>

namespace circarc {

std::string_view to_string(EdgeType type) {
  switch (type) {
    case EdgeType::NonEdge: return "non-edge";
    case EdgeType::Inclusion: return "inclusion";
    case EdgeType::Overlap1: return "1-overlap";
    case EdgeType::Overlap2: return "2-overlap";
  }
  return "?";
}

TypedGraph TypedGraph::classify(Graph g) {
  TypedGraph t;
  const int n = g.size();
  t.below_.assign(static_cast<std::size_t>(n), VertexSet(static_cast<std::size_t>(n)));
  for (Vertex u = 0; u < n; ++u) {
    const auto& nu = g.closed_neighborhood(u);
    if (static_cast<int>(nu.count()) == n) {
      throw PreconditionError("vertex " + g.name(u) + " is universal");
    }
    for (Vertex v = 0; v < n; ++v) {
      if (g.closed_neighborhood(v).is_subset_of(nu)) t.below_[u].set(v);
    }
  }
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (t.below_[u][v] && t.below_[v][u]) {
        throw PreconditionError("vertices " + g.name(u) + " and " + g.name(v) + " are twins");
      }
    }
  }

  t.graph_ = std::move(g);
  t.types_.assign(static_cast<std::size_t>(n) * n, EdgeType::Inclusion);
  t.free_.assign(static_cast<std::size_t>(n), VertexSet(static_cast<std::size_t>(n)));
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      EdgeType type = EdgeType::Inclusion;
      if (!t.graph_.adjacent(u, v)) {
        type = EdgeType::NonEdge;
      } else if (!t.below_[u][v] && !t.below_[v][u]) {
        type = t.spanning_pair(u, v) ? EdgeType::Overlap2 : EdgeType::Overlap1;
      }
      t.types_[static_cast<std::size_t>(u) * n + v] = type;
      t.types_[static_cast<std::size_t>(v) * n + u] = type;
      if (type != EdgeType::Inclusion) {
        t.free_[u].set(v);
        t.free_[v].set(u);
      }
    }
  }
  return t;
}

bool TypedGraph::spanning_pair(Vertex u, Vertex v) const {
  // Every x outside N[v] lies below u, and every y outside N[u] below v.
  const auto& nu = graph_.closed_neighborhood(u);
  const auto& nv = graph_.closed_neighborhood(v);
  return (~nv - below_[u]).none() && (~nu - below_[v]).none();
}

bool TypedGraph::avoids_edge(Vertex z, Vertex x, Vertex y) const {
  if (!non_nested(z, x) || !non_nested(z, y)) return false;
  return x == y || !(overlaps(z, x) && overlaps(z, y) && overlaps(x, y));
}

bool avoids(const TypedGraph& t, Vertex z, std::span<const Vertex> walk) {
  for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
    if (!t.adjacent(walk[i], walk[i + 1])) {
      throw PreconditionError("walk steps along a non-edge");
    }
  }
  if (walk.size() == 1) return t.avoids_edge(z, walk[0], walk[0]);
  for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
    if (!t.avoids_edge(z, walk[i], walk[i + 1])) return false;
  }
  return true;
}

}  // namespace circarc
