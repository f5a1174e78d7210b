#pragma once

#include "circarc/arcs.hpp"
#include "circarc/check.hpp"
#include "circarc/graph.hpp"
#include "circarc/reduction.hpp"
#include "circarc/walk_pair.hpp"

#include <variant>
#include <vector>

namespace circarc {

struct PositiveCertificate {
  ArcRepresentation arcs;  // model of the input graph
  bool operator==(const PositiveCertificate&) const = default;
};

// Obstruction in a completion of the reduced graph.
struct NegativeCertificate {
  Graph completion;             // reduced vertices first, then added ones
  int base_size = 0;
  std::vector<Vertex> partner;  // partner of each added vertex, by position
  AvoidWalkPair obstruction;    // indices into `completion`
  bool operator==(const NegativeCertificate&) const = default;
};

struct Certificate {
  ReductionTrace reduction;
  std::variant<PositiveCertificate, NegativeCertificate> body;

  bool circular_arc() const { return std::holds_alternative<PositiveCertificate>(body); }
  const PositiveCertificate& positive() const { return std::get<PositiveCertificate>(body); }
  const NegativeCertificate& negative() const { return std::get<NegativeCertificate>(body); }
  bool operator==(const Certificate&) const = default;
};

// Decides whether g is a circular-arc graph. The certificate is checked by
// the matching verifier before returning; a failure raises InternalError.
Certificate recognize(const Graph& g);

Check verify_positive(const Graph& g, const Certificate& cert);
Check verify_negative(const Graph& g, const Certificate& cert);
Check verify_certificate(const Graph& g, const Certificate& cert);

// Minimum closed degree, ties to the smallest index.
Vertex choose_anchor(const Graph& h);

}  // namespace circarc
