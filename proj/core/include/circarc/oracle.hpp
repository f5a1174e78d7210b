#pragma once

#include "circarc/arcs.hpp"
#include "circarc/graph.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace circarc {

inline constexpr int kOracleMaxVertices = 8;

struct EndpointSymbol {
  Vertex vertex = -1;
  bool right = false;
  bool operator==(const EndpointSymbol&) const = default;
};

// Clockwise cyclic order of the 2n arc endpoints, starting with vertex 0's left.
using EndpointSequence = std::vector<EndpointSymbol>;

// Exhaustive search; throws PreconditionError above kOracleMaxVertices.
std::optional<EndpointSequence> find_arc_model(const Graph& g);
bool oracle_is_circular_arc(const Graph& g);
ArcRepresentation arcs_from_sequence(const EndpointSequence& seq, int n);

// All 2^(n choose 2) labelled graphs on n vertices, in mask order.
std::vector<Graph> enumerate_labelled_graphs(int n);
Graph graph_from_mask(int n, std::uint64_t mask);
Graph random_graph(int n, double edge_probability, std::mt19937_64& rng);

struct RandomSpec {
  int n = 0;
  int count = 0;
  double edge_probability = 0.5;
  std::uint64_t seed = 0;
};

struct CrossCheckRecord {
  std::string graph6;
  bool recognized_circular_arc = false;
  bool oracle_circular_arc = false;
  bool certificate_ok = true;
  std::string detail;
};

struct CrossCheckReport {
  int graphs_checked = 0;
  std::vector<CrossCheckRecord> problems;  // disagreements and failed certificates

  bool clean() const { return problems.empty(); }
  std::string to_json_lines() const;
};

// Every labelled graph on 1..max_n vertices (max_n < 1 skips), then
// the optional random batch.
CrossCheckReport cross_check(int max_n, const std::optional<RandomSpec>& random);

}  // namespace circarc
