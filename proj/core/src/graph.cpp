#include "circarc/graph.hpp"

#include "circarc/errors.hpp"

#include <algorithm>

namespace circarc {

std::vector<Vertex> members(const VertexSet& set) {
  std::vector<Vertex> out;
  out.reserve(set.count());
  for (auto i = set.find_first(); i != VertexSet::npos; i = set.find_next(i)) {
    out.push_back(static_cast<Vertex>(i));
  }
  return out;
}

Graph::Graph(int n) {
  if (n < 0) throw PreconditionError("negative vertex count");
  rows_.assign(static_cast<std::size_t>(n), VertexSet(static_cast<std::size_t>(n)));
  names_.reserve(static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u) {
    rows_[u].set(u);
    names_.push_back(std::to_string(u));
  }
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const auto& [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(Vertex u) const {
  if (u < 0 || u >= size()) {
    throw PreconditionError("vertex " + std::to_string(u) + " out of range");
  }
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return rows_[u][v];
}

const VertexSet& Graph::closed_neighborhood(Vertex u) const {
  check_vertex(u);
  return rows_[u];
}

int Graph::closed_degree(Vertex u) const {
  return static_cast<int>(closed_neighborhood(u).count());
}

bool Graph::universal(Vertex u) const { return closed_degree(u) == size(); }

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < size(); ++u) {
    for (auto v = rows_[u].find_next(u); v != VertexSet::npos; v = rows_[u].find_next(v)) {
      out.emplace_back(u, static_cast<Vertex>(v));
    }
  }
  return out;
}

Vertex Graph::add_vertex(std::string name) {
  const auto n = rows_.size();
  for (auto& row : rows_) row.resize(n + 1);
  rows_.emplace_back(n + 1);
  rows_.back().set(n);
  names_.push_back(name.empty() ? std::to_string(n) : std::move(name));
  return static_cast<Vertex>(n);
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
  rows_[u].set(v);
  rows_[v].set(u);
}

const std::string& Graph::name(Vertex u) const {
  check_vertex(u);
  return names_[u];
}

void Graph::set_name(Vertex u, std::string name) {
  check_vertex(u);
  names_[u] = std::move(name);
}

std::optional<Vertex> Graph::find(std::string_view name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<Vertex>(it - names_.begin());
}

Graph Graph::induced(std::span<const Vertex> vertices) const {
  const int m = static_cast<int>(vertices.size());
  Graph out(m);
  for (int i = 0; i < m; ++i) {
    out.names_[i] = name(vertices[i]);
    for (int j = i + 1; j < m; ++j) {
      if (adjacent(vertices[i], vertices[j])) out.add_edge(i, j);
    }
  }
  return out;
}

bool Graph::same_adjacency(const Graph& other) const { return rows_ == other.rows_; }

}  // namespace circarc
