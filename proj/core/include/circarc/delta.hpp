#pragma once

#include "circarc/check.hpp"
#include "circarc/edge_types.hpp"

#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace circarc {

enum class Label : std::uint8_t { NonEdge, Overlap, Inclusion };

using OrderedPair = std::pair<Vertex, Vertex>;

// Complete graph whose pairs carry NonEdge / Overlap / Inclusion, plus a
// containment relation on Inclusion pairs.
class LabelledGraph {
 public:
  LabelledGraph() = default;
  explicit LabelledGraph(int n);

  // Labels and containment inherited from t on the listed vertices.
  static LabelledGraph from_typed(const TypedGraph& t, std::span<const Vertex> vertices);

  int size() const noexcept { return n_; }
  Label label(Vertex u, Vertex v) const {
    return u == v ? Label::Inclusion : labels_[index(u, v)];
  }
  bool adjacent(Vertex u, Vertex v) const { return label(u, v) != Label::NonEdge; }
  // u contains v; only meaningful on Inclusion pairs.
  bool contains(Vertex u, Vertex v) const { return u != v && dc_[index(u, v)] != 0; }

  void set_label(Vertex u, Vertex v, Label label);
  // Sets containment of v in u (and clears the reverse).
  void set_contains(Vertex u, Vertex v);

  // x == y or xy is an edge, neither of x, y is z or nested with z, and if
  // z overlaps both then xy is an Inclusion pair.
  bool avoids_edge(Vertex z, Vertex x, Vertex y) const;

  LabelledGraph induced(std::span<const Vertex> vertices) const;

  // Containment covers each Inclusion pair exactly once, is transitive, and
  // u contains v implies N[v] is a subset of N[u].
  Check validate() const;

 private:
  std::size_t index(Vertex u, Vertex v) const { return static_cast<std::size_t>(u) * n_ + v; }

  int n_ = 0;
  std::vector<Label> labels_;
  std::vector<std::uint8_t> dc_;
};

bool is_delta_pair(const LabelledGraph& l, const OrderedPair& p);
bool delta_step(const LabelledGraph& l, const OrderedPair& p, const OrderedPair& q);

struct PairClass {
  std::vector<OrderedPair> pairs;  // discovery order, first is the BFS root
  int inverse = -1;                // index of the class of reversed pairs
};

// Connected components of the Delta relation with BFS trees for chains.
class ImplicationClasses {
 public:
  explicit ImplicationClasses(const LabelledGraph& l);

  const std::vector<PairClass>& classes() const noexcept { return classes_; }
  int class_of(const OrderedPair& p) const;
  // Delta chain from a to b; both must lie in one class.
  std::vector<OrderedPair> chain(const OrderedPair& a, const OrderedPair& b) const;
  std::vector<Vertex> span(int class_index) const;

 private:
  std::size_t index(const OrderedPair& p) const {
    return static_cast<std::size_t>(p.first) * n_ + p.second;
  }

  int n_ = 0;
  std::vector<PairClass> classes_;
  std::vector<int> class_;
  std::vector<int> parent_;  // encoded pair index, -1 at roots
  std::vector<int> depth_;
};

// Some class equals its inverse. `chain` runs from a pair to its reverse.
class DeltaInvertiblePair : public std::runtime_error {
 public:
  explicit DeltaInvertiblePair(std::vector<OrderedPair> chain);
  const std::vector<OrderedPair>& chain() const noexcept { return chain_; }

 private:
  std::vector<OrderedPair> chain_;
};

struct Orientation {
  std::vector<Vertex> order;             // left-to-right vertex order
  std::vector<OrderedPair> orientation;  // Delta pairs (a, b) with a before b
};

// Throws DeltaInvertiblePair if no orientation exists, InternalError if an
// asserted property fails. Requires validate() to pass.
Orientation interval_orientation(const LabelledGraph& l);

// No forbidden triple a < b < c in the order.
bool verify_interval_ordering(const LabelledGraph& l, std::span<const Vertex> order);

}  // namespace circarc
