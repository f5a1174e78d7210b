#pragma once

#include "circarc/bipartite.hpp"
#include "circarc/completion.hpp"
#include "circarc/walk_pair.hpp"

#include <variant>
#include <vector>

namespace circarc {

struct KnotCopy {
  Vertex vertex = -1;
  int component = 0;
  bool operator==(const KnotCopy&) const = default;
};

// Copies of each u in A(z), one per uz-component. Copies u_i and v_j are
// joined when u, v are non-nested, v lies in the i-th uz-component and u in
// the j-th vz-component (non-adjacent pairs included).
class KnottingGraph {
 public:
  KnottingGraph(const TypedGraph& t, Vertex anchor);

  Vertex anchor() const noexcept { return anchor_; }
  const std::vector<KnotCopy>& copies() const noexcept { return copies_; }
  const AdjacencyList& adjacency() const noexcept { return adjacency_; }
  int edge_count() const;
  // Index of the uz-component of u that contains v; -1 if undefined.
  int gamma(Vertex u, Vertex v) const;
  int copy_index(Vertex u, int component) const;

 private:
  Vertex anchor_;
  int n_;
  std::vector<KnotCopy> copies_;
  AdjacencyList adjacency_;
  std::vector<int> gamma_;
  std::vector<std::vector<int>> copy_of_;
};

// Path from a to b inside the uz-component of u; both must lie in it.
std::vector<Vertex> component_path(const TypedGraph& t, Vertex z, Vertex u, Vertex a, Vertex b);

std::variant<TwoColoring, OddCycle> bipartite_or_odd_cycle(const KnottingGraph& k);

// Walk pair invertible at the anchor, read off an odd closed walk.
AvoidWalkPair extract_invertible_pair(const TypedGraph& t, const KnottingGraph& k,
                                      const OddCycle& cycle);

// Either the side Y of the disagreement graph on vertices overlapping z, or
// a pair invertible at z.
std::variant<std::vector<Vertex>, AvoidWalkPair> disagreement_partition(
    const TypedGraph& t, const CircularPairing& pairing, Vertex z);

// Z = (V \ N[z]) plus Y; asserts exactly one of each pair is in Z and no
// 2-overlap edge lies inside Z.
std::vector<Vertex> build_z(const TypedGraph& t, const CircularPairing& pairing, Vertex z,
                            std::span<const Vertex> y);

}  // namespace circarc
