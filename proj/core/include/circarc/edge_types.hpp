#pragma once

#include "circarc/graph.hpp"

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace circarc {

enum class EdgeType : std::uint8_t { NonEdge, Inclusion, Overlap1, Overlap2 };

std::string_view to_string(EdgeType type);

// A graph with every vertex pair classified. Requires no universal vertex
// and no true twins; construction throws PreconditionError otherwise.
class TypedGraph {
 public:
  TypedGraph() = default;
  static TypedGraph classify(Graph g);

  const Graph& graph() const noexcept { return graph_; }
  int size() const noexcept { return graph_.size(); }
  bool adjacent(Vertex u, Vertex v) const { return graph_.adjacent(u, v); }

  // Loops report Inclusion.
  EdgeType type(Vertex u, Vertex v) const {
    return types_[static_cast<std::size_t>(u) * size() + v];
  }
  bool overlaps(Vertex u, Vertex v) const {
    const EdgeType t = type(u, v);
    return t == EdgeType::Overlap1 || t == EdgeType::Overlap2;
  }
  // N[v] is a subset of N[u].
  bool contains(Vertex u, Vertex v) const { return below_[u][v]; }
  // Distinct and either non-adjacent or overlapping.
  bool non_nested(Vertex u, Vertex v) const {
    const EdgeType t = type(u, v);
    return u != v && t != EdgeType::Inclusion;
  }
  // Membership set of non_nested(u, .).
  const VertexSet& non_nested_set(Vertex u) const { return free_[u]; }

  bool spanning_pair(Vertex u, Vertex v) const;

  // z avoids the walk step x -> y (x == y is a loop step).
  bool avoids_edge(Vertex z, Vertex x, Vertex y) const;

 private:
  Graph graph_;
  std::vector<EdgeType> types_;
  std::vector<VertexSet> below_;
  std::vector<VertexSet> free_;
};

// z avoids the walk. Throws PreconditionError if consecutive vertices are
// distinct and non-adjacent.
bool avoids(const TypedGraph& t, Vertex z, std::span<const Vertex> walk);

}  // namespace circarc
