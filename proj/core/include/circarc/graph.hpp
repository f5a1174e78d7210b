#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace circarc {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;
using VertexSet = boost::dynamic_bitset<std::uint64_t>;

std::vector<Vertex> members(const VertexSet& set);

// Simple undirected graph on vertices 0..n-1. Every vertex carries an
// implicit loop, so adjacent(u, u) holds and closed neighborhoods contain u.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const Edge> edges);

  int size() const noexcept { return static_cast<int>(rows_.size()); }
  bool adjacent(Vertex u, Vertex v) const;
  const VertexSet& closed_neighborhood(Vertex u) const;
  int closed_degree(Vertex u) const;
  bool universal(Vertex u) const;
  std::vector<Edge> edges() const;

  Vertex add_vertex(std::string name = {});
  void add_edge(Vertex u, Vertex v);

  const std::string& name(Vertex u) const;
  void set_name(Vertex u, std::string name);
  std::optional<Vertex> find(std::string_view name) const;

  Graph induced(std::span<const Vertex> vertices) const;
  bool same_adjacency(const Graph& other) const;
  bool operator==(const Graph& other) const = default;

 private:
  void check_vertex(Vertex u) const;

  std::vector<VertexSet> rows_;
  std::vector<std::string> names_;
};

}  // namespace circarc
