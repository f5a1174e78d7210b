#pragma once

#include "circarc/check.hpp"
#include "circarc/edge_types.hpp"

#include <vector>

namespace circarc {

struct CircularPairing {
  std::vector<Vertex> partner;  // -1 when unpaired

  bool paired(Vertex v) const { return partner[v] >= 0; }
  int pair_count() const;
  bool operator==(const CircularPairing&) const = default;
};

// Throws InternalError if some vertex lies in two circular pairs.
CircularPairing circular_pairs(const TypedGraph& t);

struct Completion {
  TypedGraph graph;  // base vertices first, then added partners
  CircularPairing pairing;
  int base_size = 0;
};

// Adds a partner for every vertex outside a circular pair. Added vertex for
// v is named "~" + name(v), with extra tildes on collision.
Completion complete(const TypedGraph& t);

// h is a completion of base: base is induced with identical types, h is
// circularly paired by `pairing`, size law holds, h has no universal vertex
// or twins, and every added vertex is paired with a base vertex.
Check verify_completion(const Graph& base, const Graph& h, const CircularPairing& pairing);

}  // namespace circarc
