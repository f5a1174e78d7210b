#include "circarc/errors.hpp"
#include "circarc/formats.hpp"
#include "circarc/oracle.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

namespace circarc {
namespace {

using testing::biclaw;
using testing::cycle;
using testing::pruned_biclaw;
using testing::id;

TEST(EdgeList, Biclaw) {
  const Graph g = parse_edge_list("# biclaw\nd f\nf a\nd g\n\nd h\ng b\nh c\n");
  EXPECT_EQ(g, biclaw());
}

TEST(EdgeList, EmptyAndDuplicates) {
  EXPECT_EQ(parse_edge_list("").size(), 0);
  const Graph g = parse_edge_list("a b\na b\nb a");
  EXPECT_EQ(g.size(), 2);
  EXPECT_EQ(g.edges().size(), 1u);
}

TEST(EdgeList, LoneNameIsIsolatedVertex) {
  const Graph g = parse_edge_list("a b\nc  # alone\n");
  EXPECT_EQ(g.size(), 3);
  EXPECT_EQ(g.closed_degree(id(g, "c")), 1);
}

TEST(EdgeList, Errors) {
  try {
    parse_edge_list("a b\nb c d\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
  }
  EXPECT_THROW(parse_edge_list("x x"), ParseError);
}

TEST(Graph6, CycleOfFour) {
  EXPECT_EQ(write_graph6(cycle(4)), "Cl");
  EXPECT_TRUE(parse_graph6("Cl").same_adjacency(cycle(4)));
  EXPECT_TRUE(parse_graph6(">>graph6<<Cl").same_adjacency(cycle(4)));
}

TEST(Graph6, SingleVertex) {
  EXPECT_EQ(write_graph6(Graph(1)), "@");
  EXPECT_EQ(parse_graph6("@").size(), 1);
  EXPECT_EQ(write_graph6(Graph{}), "?");
}

TEST(Graph6, RoundTripSmallGraphs) {
  for (int n = 0; n <= 5; ++n) {
    for (const Graph& g : enumerate_labelled_graphs(n)) {
      const std::string s = write_graph6(g);
      const Graph back = parse_graph6(s);
      ASSERT_TRUE(back.same_adjacency(g)) << s;
      ASSERT_EQ(write_graph6(back), s);
    }
  }
}

TEST(Graph6, RoundTripLargerRandomGraphs) {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 50; ++i) {
    const Graph g = random_graph(10 + i, 0.3, rng);
    ASSERT_TRUE(parse_graph6(write_graph6(g)).same_adjacency(g));
  }
}

TEST(Graph6, Rejections) {
  EXPECT_THROW(parse_graph6(""), ParseError);
  EXPECT_THROW(parse_graph6("C"), ParseError);
  EXPECT_THROW(parse_graph6("Cll"), ParseError);
  EXPECT_THROW(parse_graph6("A`"), ParseError);
  EXPECT_TRUE(parse_graph6("A_").adjacent(0, 1));
  EXPECT_THROW(parse_graph6("~?@?"), ParseError);
}

TEST(Graph6, MutatedBytesNeverDecodeToTheSameGraph) {
  std::mt19937_64 rng(62);
  for (int i = 0; i < 40; ++i) {
    const Graph g = random_graph(2 + i % 9, 0.5, rng);
    const std::string s = write_graph6(g);
    for (std::size_t pos = 0; pos < s.size(); ++pos) {
      for (int byte = 0; byte < 256; ++byte) {
        if (static_cast<char>(byte) == s[pos]) continue;
        std::string mutated = s;
        mutated[pos] = static_cast<char>(byte);
        try {
          const Graph m = parse_graph6(mutated);
          ASSERT_FALSE(m.size() == g.size() && m.same_adjacency(g)) << mutated;
        } catch (const ParseError&) {
        }
      }
    }
  }
}

void expect_round_trip(const Graph& g) {
  const Certificate cert = recognize(g);
  const std::string text = certificate_to_json(g, cert);
  const CertificateDocument doc = parse_certificate_json(text);
  EXPECT_EQ(doc.input, g);
  EXPECT_EQ(doc.certificate, cert);
  EXPECT_EQ(certificate_to_json(doc.input, doc.certificate), text);
}

TEST(CertificateJson, RoundTrip) {
  expect_round_trip(biclaw());
  expect_round_trip(pruned_biclaw());
  expect_round_trip(cycle(4));
  expect_round_trip(testing::complete_graph(3));
  expect_round_trip(Graph{});
  std::mt19937_64 rng(63);
  for (int i = 0; i < 30; ++i) expect_round_trip(random_graph(6 + i % 6, 0.5, rng));
}

TEST(CertificateJson, FormatTag) {
  const std::string text = certificate_to_json(cycle(4), recognize(cycle(4)));
  EXPECT_NE(text.find(kCertificateFormat), std::string::npos);
  std::string wrong = text;
  wrong.replace(wrong.find(kCertificateFormat), kCertificateFormat.size(), "ca-cert/9");
  EXPECT_THROW(parse_certificate_json(wrong), ParseError);
  EXPECT_THROW(parse_certificate_json("{"), ParseError);
  EXPECT_THROW(parse_certificate_json("[]"), ParseError);
}

TEST(CertificateJson, RebindsByName) {
  const Graph g = biclaw();
  const CertificateDocument doc = parse_certificate_json(certificate_to_json(g, recognize(g)));
  const Graph reordered = parse_edge_list("c h\nb g\nh d\ng d\na f\nf d\n");
  const Certificate moved = rebind_certificate(doc, reordered);
  EXPECT_TRUE(verify_certificate(reordered, moved));
  const Graph other = pruned_biclaw();
  EXPECT_THROW(rebind_certificate(doc, other), ParseError);
}

TEST(CertificateJson, PositiveRebindsByName) {
  const Graph g = pruned_biclaw();
  const CertificateDocument doc = parse_certificate_json(certificate_to_json(g, recognize(g)));
  const Graph reordered = parse_edge_list("g b\nh d\na f\nd g\nf d\n");
  EXPECT_TRUE(verify_certificate(reordered, rebind_certificate(doc, reordered)));
}

TEST(CompletionJson, ListsAddedVertices) {
  const std::string text = completion_to_json(complete(TypedGraph::classify(biclaw())));
  for (const char* name : {"~a", "~b", "~c", "~d", "~f", "~g", "~h"}) {
    EXPECT_NE(text.find(std::string("\"") + name + "\""), std::string::npos) << name;
  }
}

TEST(KnottingDot, LabelsCopiesByComponent) {
  const Completion c = complete(TypedGraph::classify(pruned_biclaw()));
  const KnottingGraph k(c.graph, id(c.graph.graph(), "f"));
  const std::string dot = knotting_to_dot(c.graph, k);
  EXPECT_NE(dot.find("label=\"anchor f\""), std::string::npos);
  EXPECT_NE(dot.find("\"g/0\""), std::string::npos);
  EXPECT_NE(dot.find("\"g/1\""), std::string::npos);
  EXPECT_EQ(dot.find("\"f/"), std::string::npos);
}

}  // namespace
}  // namespace circarc
