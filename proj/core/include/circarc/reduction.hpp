#pragma once

#include "circarc/arcs.hpp"
#include "circarc/graph.hpp"

#include <vector>

namespace circarc {

struct ReductionStep {
  enum class Kind { RemoveUniversal, MergeTwins };
  Kind kind = Kind::RemoveUniversal;
  Vertex removed = -1;
  Vertex kept = -1;  // twin partner that stays; -1 for universal removal
  bool operator==(const ReductionStep&) const = default;
};

using ReductionTrace = std::vector<ReductionStep>;

struct Reduction {
  Graph graph;                   // reduced graph, survivors in ascending order
  ReductionTrace trace;          // indices refer to the input graph
  std::vector<Vertex> original;  // reduced index -> input index
};

// Strips universal vertices and merges true twins until neither exists.
// Stops once a single vertex remains.
Reduction reduce(const Graph& g);

// Applies a trace to g; throws PreconditionError on an unreplayable step.
// Only index validity is checked, not that each step is a legal reduction.
Reduction replay(const Graph& g, const ReductionTrace& trace);

// Lifts a model of the reduced graph back to the input graph.
ArcRepresentation expand_arcs(const ReductionTrace& trace, int original_size,
                              const ArcRepresentation& reduced);

}  // namespace circarc
