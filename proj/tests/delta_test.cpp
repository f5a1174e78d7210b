#include "circarc/delta.hpp"
#include "circarc/errors.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

namespace circarc {
namespace {

// a=0, b=1, c=2 with ab and bc overlapping and ac disjoint.
LabelledGraph chain3() {
  LabelledGraph l(3);
  l.set_label(0, 1, Label::Overlap);
  l.set_label(1, 2, Label::Overlap);
  l.set_label(0, 2, Label::NonEdge);
  return l;
}

LabelledGraph all_overlap(int n) {
  LabelledGraph l(n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) l.set_label(u, v, Label::Overlap);
  }
  return l;
}

// Four arcs around a circle: consecutive ones overlap, opposite ones miss.
LabelledGraph square() {
  LabelledGraph l(4);
  for (Vertex u = 0; u < 4; ++u) l.set_label(u, (u + 1) % 4, Label::Overlap);
  l.set_label(0, 2, Label::NonEdge);
  l.set_label(1, 3, Label::NonEdge);
  return l;
}

// Nested chain 0 contains 1 contains 2.
LabelledGraph nested3() {
  LabelledGraph l(3);
  for (Vertex u = 0; u < 3; ++u) {
    for (Vertex v = u + 1; v < 3; ++v) {
      l.set_label(u, v, Label::Inclusion);
      l.set_contains(u, v);
    }
  }
  return l;
}

std::set<OrderedPair> as_set(const std::vector<OrderedPair>& pairs) {
  return {pairs.begin(), pairs.end()};
}

TEST(DeltaStep, EdgeAvoidingThirdVertex) {
  EXPECT_TRUE(delta_step(chain3(), {0, 2}, {1, 2}));
  EXPECT_TRUE(delta_step(chain3(), {2, 0}, {2, 1}));
}

TEST(DeltaStep, LoopRelatesNonInclusionPairOnly) {
  const LabelledGraph l = chain3();
  EXPECT_TRUE(delta_step(l, {0, 1}, {0, 1}));
  EXPECT_FALSE(delta_step(nested3(), {0, 1}, {0, 1}));
}

TEST(DeltaStep, BlockedWhenAnchorOverlapsBothEnds) {
  EXPECT_FALSE(delta_step(all_overlap(3), {0, 2}, {1, 2}));
}

TEST(DeltaStep, UnrelatedShapes) {
  EXPECT_FALSE(delta_step(chain3(), {0, 1}, {1, 2}));
}

TEST(ImplicationClasses, SingleOverlapGivesTwoSingletons) {
  LabelledGraph l(2);
  l.set_label(0, 1, Label::Overlap);
  const ImplicationClasses ic(l);
  ASSERT_EQ(ic.classes().size(), 2u);
  const int a = ic.class_of({0, 1});
  const int b = ic.class_of({1, 0});
  EXPECT_NE(a, b);
  EXPECT_EQ(ic.classes()[a].inverse, b);
  EXPECT_EQ(ic.classes()[b].inverse, a);
  EXPECT_EQ(ic.classes()[a].pairs.size(), 1u);
}

TEST(ImplicationClasses, ChainOfThreeIsOneClassAndInverse) {
  const ImplicationClasses ic(chain3());
  ASSERT_EQ(ic.classes().size(), 2u);
  const int a = ic.class_of({0, 1});
  EXPECT_EQ(as_set(ic.classes()[a].pairs), (std::set<OrderedPair>{{0, 1}, {0, 2}, {1, 2}}));
  EXPECT_EQ(ic.span(a), (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(ic.span(a), ic.span(ic.classes()[a].inverse));
}

TEST(ImplicationClasses, AllInclusionHasNoClasses) {
  const ImplicationClasses ic(nested3());
  EXPECT_TRUE(ic.classes().empty());
  EXPECT_EQ(ic.class_of({0, 1}), -1);
}

TEST(ImplicationClasses, MatchesUnionFindPartition) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 + trial % 4;
    const LabelledGraph l = testing::random_labelled_graph(n, rng);
    const ImplicationClasses ic(l);
    const std::vector<int> naive = testing::naive_delta_partition(l);
    std::map<int, int> forward;
    std::map<int, int> backward;
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = 0; b < n; ++b) {
        const int mine = ic.class_of({a, b});
        const int theirs = naive[a * n + b];
        ASSERT_EQ(mine < 0, theirs < 0);
        if (mine < 0) continue;
        ASSERT_EQ(forward.emplace(mine, theirs).first->second, theirs);
        ASSERT_EQ(backward.emplace(theirs, mine).first->second, mine);
        ASSERT_EQ(ic.classes()[mine].inverse, ic.class_of({b, a}));
      }
    }
  }
}

TEST(ImplicationClasses, ChainsAreDeltaWalks) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const LabelledGraph l = testing::random_labelled_graph(5, rng);
    const ImplicationClasses ic(l);
    for (const PairClass& c : ic.classes()) {
      const auto chain = ic.chain(c.pairs.back(), c.pairs.front());
      ASSERT_EQ(chain.front(), c.pairs.back());
      ASSERT_EQ(chain.back(), c.pairs.front());
      for (std::size_t i = 1; i < chain.size(); ++i) {
        ASSERT_TRUE(delta_step(l, chain[i - 1], chain[i]));
      }
    }
  }
}

TEST(ImplicationClasses, ThirdClassAvoidsSharedCorner) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    const LabelledGraph l = testing::random_labelled_graph(5, rng);
    const ImplicationClasses ic(l);
    for (Vertex a = 0; a < 5; ++a) {
      for (Vertex b = 0; b < 5; ++b) {
        for (Vertex c = 0; c < 5; ++c) {
          const int cc = ic.class_of({a, b});
          const int ca = ic.class_of({b, c});
          const int cb = ic.class_of({a, c});
          if (cc < 0 || ca < 0 || cb < 0) continue;
          if (ic.classes()[cc].inverse == ca || ca == cb) continue;
          for (const auto& [u, v] : ic.classes()[ca].pairs) {
            ASSERT_NE(u, a);
            ASSERT_NE(v, a);
            ASSERT_EQ(ic.class_of({a, u}), cc);
            ASSERT_EQ(ic.class_of({a, v}), cb);
          }
        }
      }
    }
  }
}

TEST(ImplicationClasses, OverlapOnlyClassSpansClique) {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 300; ++trial) {
    const LabelledGraph l = testing::random_labelled_graph(5, rng);
    const ImplicationClasses ic(l);
    for (int k = 0; k < static_cast<int>(ic.classes().size()); ++k) {
      bool overlap_only = true;
      for (const auto& [u, v] : ic.classes()[k].pairs) {
        overlap_only = overlap_only && l.label(u, v) == Label::Overlap;
      }
      if (!overlap_only) continue;
      const auto span = ic.span(k);
      for (Vertex x : span) {
        for (Vertex y : span) ASSERT_TRUE(l.adjacent(x, y));
      }
    }
  }
}

TEST(IntervalOrientation, ChainOfThreeIsLinear) {
  const Orientation o = interval_orientation(chain3());
  const bool forward = o.order == std::vector<Vertex>{0, 1, 2};
  const bool backward = o.order == std::vector<Vertex>{2, 1, 0};
  EXPECT_TRUE(forward || backward);
  EXPECT_TRUE(forward) << "tie-break should keep the class of (0,1)";
  EXPECT_EQ(o.orientation.size(), 3u);
  EXPECT_TRUE(testing::naive_interval_ordering(chain3(), o.order));
}

TEST(IntervalOrientation, AllInclusionFollowsContainment) {
  const Orientation o = interval_orientation(nested3());
  EXPECT_TRUE(o.orientation.empty());
  EXPECT_EQ(o.order, (std::vector<Vertex>{0, 1, 2}));
}

TEST(IntervalOrientation, SquareHasInvertiblePair) {
  const LabelledGraph l = square();
  try {
    interval_orientation(l);
    FAIL() << "expected an invertible pair";
  } catch (const DeltaInvertiblePair& e) {
    const auto& chain = e.chain();
    ASSERT_GE(chain.size(), 2u);
    EXPECT_EQ(chain.back(), (OrderedPair{chain.front().second, chain.front().first}));
    for (std::size_t i = 1; i < chain.size(); ++i) EXPECT_TRUE(delta_step(l, chain[i - 1], chain[i]));
  }
  EXPECT_FALSE(testing::some_interval_ordering(l));
}

TEST(IntervalOrientation, AgreesWithPermutationSearch) {
  std::mt19937_64 rng(15);
  int positives = 0;
  int negatives = 0;
  for (int trial = 0; trial < 1500; ++trial) {
    const int n = 3 + trial % 3;
    const LabelledGraph l = testing::random_labelled_graph(n, rng);
    const bool brute = testing::some_interval_ordering(l);
    try {
      const Orientation o = interval_orientation(l);
      ASSERT_TRUE(brute);
      ASSERT_TRUE(testing::naive_interval_ordering(l, o.order));
      ASSERT_TRUE(verify_interval_ordering(l, o.order));
      std::vector<int> pos(n);
      for (int i = 0; i < n; ++i) pos[o.order[i]] = i;
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = 0; v < n; ++v) {
          if (l.contains(u, v)) {
            ASSERT_LT(pos[u], pos[v]);
          }
        }
      }
      std::size_t delta_pairs = 0;
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) delta_pairs += l.label(u, v) != Label::Inclusion;
      }
      ASSERT_EQ(o.orientation.size(), delta_pairs);
      for (const auto& [a, b] : o.orientation) ASSERT_LT(pos[a], pos[b]);
      ++positives;
    } catch (const DeltaInvertiblePair&) {
      ASSERT_FALSE(brute);
      ++negatives;
    }
  }
  EXPECT_GT(positives, 100);
  EXPECT_GT(negatives, 100);
}

TEST(VerifyIntervalOrdering, Examples) {
  const LabelledGraph l = chain3();
  const std::vector<Vertex> good = {0, 1, 2};
  const std::vector<Vertex> bad = {1, 0, 2};
  EXPECT_TRUE(verify_interval_ordering(l, good));
  EXPECT_FALSE(verify_interval_ordering(l, bad));
  const std::vector<Vertex> single = {0};
  EXPECT_TRUE(verify_interval_ordering(LabelledGraph(1), single));
}

TEST(VerifyIntervalOrdering, MatchesTripleScan) {
  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 300; ++trial) {
    const LabelledGraph l = testing::random_labelled_graph(5, rng);
    std::vector<Vertex> order = {0, 1, 2, 3, 4};
    do {
      ASSERT_EQ(verify_interval_ordering(l, order), testing::naive_interval_ordering(l, order));
    } while (std::next_permutation(order.begin(), order.end()));
  }
}

TEST(LabelledGraph, ValidateCatchesBadContainment) {
  LabelledGraph l(3);
  l.set_label(0, 1, Label::Inclusion);
  EXPECT_FALSE(l.validate());
  l.set_contains(0, 1);
  EXPECT_TRUE(l.validate());
  l.set_label(1, 2, Label::Overlap);
  EXPECT_FALSE(l.validate()) << "2 meets the inner interval but not the outer one";
}

}  // namespace
}  // namespace circarc
