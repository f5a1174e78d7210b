#pragma once

#include "circarc/arcs.hpp"
#include "circarc/check.hpp"
#include "circarc/completion.hpp"
#include "circarc/delta.hpp"

#include <span>
#include <vector>

namespace circarc {

struct Interval {
  int left = 0;
  int right = 0;
  bool operator==(const Interval&) const = default;
};

// Endpoints are a permutation of 1..2n.
using IntervalModel = std::vector<Interval>;

IntervalModel build_intervals(const LabelledGraph& l, std::span<const Vertex> order);

// Disjoint, overlapping and nested pairs match NonEdge, Overlap and
// Inclusion, with nesting following the containment relation.
Check check_interval_model(const LabelledGraph& l, const IntervalModel& model);

// z_vertices[i] is the vertex of h modelled by model[i]; every vertex of h
// is in z_vertices or paired with one of them.
ArcRepresentation lift_to_circle(const IntervalModel& model, std::span<const Vertex> z_vertices,
                                 const CircularPairing& pairing, int h_size);

}  // namespace circarc
