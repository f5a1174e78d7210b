#pragma once

#include "circarc/check.hpp"
#include "circarc/graph.hpp"

#include <vector>

namespace circarc {

// Inclusive clockwise run of slots left, left+1, ..., right (mod circle size).
struct Arc {
  int left = 0;
  int right = 0;
  bool operator==(const Arc&) const = default;
};

struct ArcRepresentation {
  int circle_size = 0;
  std::vector<Arc> arcs;
  bool operator==(const ArcRepresentation&) const = default;
};

bool covers(const Arc& arc, int slot);
bool intersect(const Arc& a, const Arc& b);

// Opens `count` empty slots at `position`; every endpoint >= position shifts.
void insert_slots(ArcRepresentation& rep, int position, int count = 1);

ArcRepresentation restrict_arcs(const ArcRepresentation& rep, int count);

// Endpoints distinct and in range, and arcs intersect exactly on edges.
Check verify_representation(const Graph& g, const ArcRepresentation& rep);

}  // namespace circarc
