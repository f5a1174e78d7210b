#include "circarc/completion.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace circarc {
namespace {

using testing::biclaw;
using testing::cycle;
using testing::pruned_biclaw;
using testing::id;
using testing::path;

using NamePairs = std::vector<std::pair<std::string, std::string>>;

// Expected completion drawn as: listed edges, plus "fan" vertices adjacent to
// everything except the named exclusions.
Graph drawn_completion(const std::vector<std::string>& names, const NamePairs& edges,
                       const std::map<std::string, std::set<std::string>>& fans) {
  Graph g;
  for (const auto& name : names) g.add_vertex(name);
  for (const auto& [a, b] : edges) g.add_edge(id(g, a), id(g, b));
  for (const auto& [fan, excluded] : fans) {
    for (const auto& other : names) {
      if (other != fan && !excluded.contains(other)) g.add_edge(id(g, fan), id(g, other));
    }
  }
  return g;
}

void expect_same_by_name(const Graph& got, const Graph& want) {
  ASSERT_EQ(got.size(), want.size());
  for (Vertex u = 0; u < want.size(); ++u) {
    for (Vertex v = u + 1; v < want.size(); ++v) {
      const auto& a = want.name(u);
      const auto& b = want.name(v);
      EXPECT_EQ(got.adjacent(id(got, a), id(got, b)), want.adjacent(u, v)) << a << " " << b;
    }
  }
}

TEST(Completion, BiclawMatchesDrawing) {
  const Completion c = complete(TypedGraph::classify(biclaw()));
  EXPECT_EQ(c.graph.size(), 14);
  EXPECT_EQ(c.base_size, 7);
  const Graph want = drawn_completion(
      {"a", "b", "c", "d", "f", "g", "h", "~a", "~b", "~c", "~d", "~f", "~g", "~h"},
      {{"d", "f"}, {"f", "a"}, {"d", "g"}, {"d", "h"}, {"g", "b"}, {"h", "c"},
       {"~f", "d"}, {"~f", "g"}, {"~f", "h"}, {"~f", "b"}, {"~f", "c"}, {"~f", "~g"}, {"~f", "~h"},
       {"~g", "d"}, {"~g", "f"}, {"~g", "a"}, {"~g", "h"}, {"~g", "c"}, {"~g", "~h"},
       {"~h", "d"}, {"~h", "f"}, {"~h", "a"}, {"~h", "g"}, {"~h", "b"}},
      {{"~a", {"a"}}, {"~b", {"b"}}, {"~c", {"c"}}, {"~d", {"d"}}});
  expect_same_by_name(c.graph.graph(), want);
}

TEST(Completion, SecondExampleMatchesDrawing) {
  const Completion c = complete(TypedGraph::classify(pruned_biclaw()));
  EXPECT_EQ(c.graph.size(), 12);
  const Graph want = drawn_completion(
      {"a", "b", "d", "f", "g", "h", "~a", "~b", "~d", "~f", "~g", "~h"},
      {{"d", "f"}, {"f", "a"}, {"d", "g"}, {"d", "h"}, {"g", "b"},
       {"~f", "d"}, {"~f", "g"}, {"~f", "h"}, {"~f", "b"}, {"~f", "~g"}, {"~f", "~h"},
       {"~g", "d"}, {"~g", "f"}, {"~g", "a"}, {"~g", "h"}, {"~g", "~h"},
       {"~h", "d"}, {"~h", "f"}, {"~h", "a"}, {"~h", "g"}, {"~h", "b"}},
      {{"~a", {"a"}}, {"~b", {"b"}}, {"~d", {"d", "h"}}});
  expect_same_by_name(c.graph.graph(), want);
}

TEST(Completion, PairedGraphsAreTheirOwnCompletion) {
  for (const Graph& g : {path(4), cycle(4)}) {
    const Completion c = complete(TypedGraph::classify(g));
    EXPECT_EQ(c.graph.size(), 4);
    EXPECT_TRUE(c.graph.graph().same_adjacency(g));
  }
}

TEST(Completion, AddedVertexNamesAvoidCollisions) {
  Graph g = path(4);
  g.add_vertex("~0");
  g.add_edge(4, 3);
  const Completion c = complete(TypedGraph::classify(g));
  std::set<std::string> names;
  for (Vertex u = 0; u < c.graph.size(); ++u) names.insert(c.graph.graph().name(u));
  EXPECT_EQ(static_cast<int>(names.size()), c.graph.size());
}

TEST(VerifyCompletion, AcceptsConstructedCompletion) {
  const Graph g = biclaw();
  const Completion c = complete(TypedGraph::classify(g));
  EXPECT_TRUE(verify_completion(g, c.graph.graph(), c.pairing));
}

TEST(VerifyCompletion, RejectsUnpairedGraph) {
  const Graph g = biclaw();
  const CircularPairing none{std::vector<Vertex>(7, -1)};
  EXPECT_FALSE(verify_completion(g, g, none));
}

TEST(VerifyCompletion, CycleIsItsOwnCompletion) {
  const Graph g = cycle(4);
  const CircularPairing p = circular_pairs(TypedGraph::classify(g));
  EXPECT_TRUE(verify_completion(g, g, p));
}

TEST(VerifyCompletion, RejectsDroppedEdge) {
  const Graph g = biclaw();
  const Completion c = complete(TypedGraph::classify(g));
  Graph h(c.graph.size());
  for (Vertex u = 0; u < h.size(); ++u) h.set_name(u, c.graph.graph().name(u));
  const auto edges = c.graph.graph().edges();
  for (std::size_t i = 1; i < edges.size(); ++i) h.add_edge(edges[i].first, edges[i].second);
  EXPECT_FALSE(verify_completion(g, h, c.pairing));
}

TEST(CompletionProperties, SizeLawAndVerification) {
  for (const Graph& g : testing::small_reduced_graphs(5)) {
    const TypedGraph t = TypedGraph::classify(g);
    const CircularPairing base_pairs = circular_pairs(t);
    int paired = 0;
    for (Vertex u = 0; u < g.size(); ++u) paired += base_pairs.paired(u) ? 1 : 0;
    const Completion c = complete(t);
    ASSERT_EQ(c.graph.size(), 2 * g.size() - paired);
    ASSERT_TRUE(verify_completion(g, c.graph.graph(), c.pairing));
    for (Vertex u = 0; u < g.size(); ++u) {
      if (base_pairs.paired(u)) {
        ASSERT_EQ(c.pairing.partner[u], base_pairs.partner[u]);
      }
      for (Vertex v = 0; v < g.size(); ++v) ASSERT_EQ(c.graph.type(u, v), t.type(u, v));
    }
    const Completion again = complete(c.graph);
    ASSERT_EQ(again.graph.size(), c.graph.size());
  }
}

TEST(CompletionProperties, UniqueUpToIsomorphism) {
  std::mt19937_64 rng(2024);
  for (const Graph& g : testing::small_reduced_graphs(5)) {
    const Graph h = complete(TypedGraph::classify(g)).graph.graph();
    std::vector<int> perm(g.size());
    std::iota(perm.rbegin(), perm.rend(), 0);
    const Graph reversed = complete(TypedGraph::classify(testing::relabel(g, perm))).graph.graph();
    ASSERT_TRUE(testing::isomorphic(h, reversed));
    std::shuffle(perm.begin(), perm.end(), rng);
    const Graph shuffled = complete(TypedGraph::classify(testing::relabel(g, perm))).graph.graph();
    ASSERT_TRUE(testing::isomorphic(h, shuffled));
  }
}

}  // namespace
}  // namespace circarc
