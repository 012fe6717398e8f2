#include <gtest/gtest.h>

#include <random>
#include <set>

#include "freeman/error.hpp"
#include "freeman/path_graph.hpp"
#include "oracles.hpp"

using namespace freeman;

namespace {

std::set<Point> visited_points(const QuadGraph& g) {
  std::set<Point> out;
  for (std::uint32_t i = 0; i < g.node_count(); ++i) {
    if (g.node(NodeId(i)).visited) out.insert(g.node(NodeId(i)).point());
  }
  return out;
}

std::set<Point> all_points(const QuadGraph& g) {
  std::set<Point> out;
  for (std::uint32_t i = 0; i < g.node_count(); ++i) out.insert(g.node(NodeId(i)).point());
  return out;
}

// Radix-consistent fathers with unique points; links point one unit away.
void expect_well_formed(const QuadGraph& g) {
  std::set<Point> seen;
  for (std::uint32_t i = 0; i < g.node_count(); ++i) {
    const QuadNode& n = g.node(NodeId(i));
    EXPECT_TRUE(seen.insert(n.point()).second) << n.point();
    if (i == 0) {
      EXPECT_FALSE(n.father.valid());
      EXPECT_FALSE(n.children[0].valid());
    } else {
      ASSERT_TRUE(n.father.valid());
      const QuadNode& f = g.node(n.father);
      EXPECT_EQ(f.children[static_cast<std::size_t>(((n.x & 1) << 1) | (n.y & 1))], NodeId(i));
      EXPECT_EQ(n.point(), (Point{2 * f.point().x + (n.x & 1), 2 * f.point().y + (n.y & 1)}));
      EXPECT_EQ(n.depth(), f.depth() + 1);
    }
    for (Letter e : kAlphabet) {
      const NodeId l = n.links[value(e)];
      if (l.valid()) EXPECT_EQ(g.node(l).point(), n.point() + unit(e));
    }
  }
}

}  // namespace

TEST(QuadGraphTest, InitialGraph) {
  const QuadGraph g;
  EXPECT_EQ(g.node_count(), 3u);
  EXPECT_EQ(g.visited_count(), 1u);
  EXPECT_EQ(g.node(g.current()).point(), (Point{0, 0}));
  const NodeId right = g.node(g.root()).links[value(Letter::Right)];
  ASSERT_TRUE(right.valid());
  EXPECT_EQ(g.node(right).point(), (Point{1, 0}));
  EXPECT_FALSE(g.node(right).visited);
  expect_well_formed(g);
}

TEST(QuadGraphTest, FatherPoint) {
  EXPECT_EQ(father_point({2, 1}), (Point{1, 0}));
  EXPECT_EQ(father_point({1, 1}), (Point{0, 0}));
  EXPECT_EQ(father_point({5, 6}), (Point{2, 3}));
  EXPECT_THROW(father_point({0, 0}), Error);
}

TEST(QuadGraphTest, SiblingCondition) {
  EXPECT_TRUE(sibling_condition({2, 0}, Letter::Up));
  EXPECT_FALSE(sibling_condition({1, 0}, Letter::Right));
  EXPECT_TRUE(sibling_condition({0, 0}, Letter::Up));
  EXPECT_TRUE(sibling_condition({3, 5}, Letter::Left));
  EXPECT_TRUE(sibling_condition({3, 5}, Letter::Down));
  EXPECT_FALSE(sibling_condition({3, 4}, Letter::Down));
}

TEST(QuadGraphTest, WalkthroughOf0011) {
  QuadGraph g;
  EXPECT_FALSE(g.step(Letter::Right));
  EXPECT_EQ(g.node_count(), 3u);  // the link already existed
  EXPECT_EQ(g.node(g.current()).point(), (Point{1, 0}));

  EXPECT_FALSE(g.step(Letter::Right));
  EXPECT_EQ(g.node(g.current()).point(), (Point{2, 0}));
  EXPECT_FALSE(g.step(Letter::Up));
  EXPECT_EQ(g.node(g.current()).point(), (Point{2, 1}));
  EXPECT_FALSE(g.step(Letter::Up));
  EXPECT_EQ(g.node(g.current()).point(), (Point{2, 2}));

  EXPECT_EQ(visited_points(g), (std::set<Point>{{0, 0}, {1, 0}, {2, 0}, {2, 1}, {2, 2}}));
  EXPECT_EQ(all_points(g), (std::set<Point>{{0, 0}, {1, 0}, {0, 1}, {2, 0}, {2, 1}, {1, 1}, {2, 2}}));
  const auto helper = g.find({1, 1});
  ASSERT_TRUE(helper);
  EXPECT_FALSE(g.node(*helper).visited);
  // Memoized links from the last step.
  const auto n10 = *g.find({1, 0});
  EXPECT_TRUE(g.node(n10).links[value(Letter::Up)].valid());
  expect_well_formed(g);
}

TEST(QuadGraphTest, RevisitAndQuadrantBoundary) {
  QuadGraph g;
  EXPECT_FALSE(g.step(Letter::Right));
  EXPECT_FALSE(g.step(Letter::Right));
  EXPECT_TRUE(g.step(Letter::Left));
  EXPECT_EQ(g.node(g.current()).point(), (Point{1, 0}));
  EXPECT_TRUE(g.step(Letter::Left));
  EXPECT_THROW(g.step(Letter::Left), Error);
  EXPECT_THROW(g.step(Letter::Down), Error);
}

TEST(QuadGraphTest, SiblingFatherLaw) {
  for (std::int64_t x = 0; x < 64; ++x) {
    for (std::int64_t y = 0; y < 64; ++y) {
      for (Letter e : kAlphabet) {
        const Point p{x, y};
        const Point q = p + unit(e);
        if (p == Point{} || q.x < 0 || q.y < 0 || q == Point{}) continue;
        if (sibling_condition(p, e)) {
          EXPECT_EQ(father_point(p), father_point(q));
        } else {
          EXPECT_EQ(father_point(p) + unit(e), father_point(q));
        }
      }
    }
  }
}

TEST(NormalizeTest, Examples) {
  EXPECT_EQ(normalize("0011"_w), (Point{0, 0}));
  EXPECT_EQ(normalize("2"_w), (Point{1, 0}));
  EXPECT_EQ(normalize("2233"_w), (Point{2, 2}));
}

TEST(DetectTest, Examples) {
  EXPECT_FALSE(detect_first_intersection("0011"_w));
  EXPECT_EQ(detect_first_intersection("002"_w), (Intersection{3, {1, 0}}));
  EXPECT_EQ(detect_first_intersection("0123"_w), (Intersection{4, {0, 0}}));
  EXPECT_FALSE(detect_first_intersection(ChainWord{}));
  EXPECT_FALSE(detect_first_intersection("2233"_w));
  // Reported in the frame where the word starts at the origin.
  EXPECT_EQ(detect_first_intersection("2320"_w), (Intersection{4, {-1, -1}}));
}

TEST(DetectTest, AgreesWithHashSetOracleExhaustively) {
  for (std::size_t n = 0; n <= 8; ++n) {
    oracle::for_each_word(n, 4, [](const ChainWord& w) {
      const auto got = detect_first_intersection(w);
      const auto want = oracle::first_revisit(w);
      ASSERT_EQ(got.has_value(), want.has_value()) << w;
      if (got) {
        ASSERT_EQ(got->index, want->index) << w;
        ASSERT_EQ(got->point, want->point) << w;
      }
    });
  }
}

TEST(DetectTest, NodeCountBoundAndDeterminism) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 200; ++t) {
    const ChainWord w = oracle::random_word(rng, 200 + t);
    const Point start = normalize(w);
    QuadGraph a(start);
    QuadGraph b(start);
    std::size_t revisits = 0;
    for (Letter e : w) {
      revisits += a.step(e);
      b.step(e);
    }
    EXPECT_EQ(a.visited_count(), w.size() + 1 - revisits);
    EXPECT_EQ(visited_points(a).size(), a.visited_count());
    EXPECT_EQ(a.node_count(), b.node_count());
    EXPECT_EQ(all_points(a), all_points(b));
    // Helper and ancestor nodes stay within a small multiple of |w| plus depth.
    EXPECT_LE(a.node_count(), 4 * (w.size() + 1) + 64);
    expect_well_formed(a);
  }
}

TEST(DetectTest, StartOffOrigin) {
  const QuadGraph g({5, 3});
  EXPECT_EQ(g.node(g.current()).point(), (Point{5, 3}));
  EXPECT_EQ(g.visited_count(), 1u);
  EXPECT_FALSE(g.node(g.root()).visited);
  EXPECT_THROW(QuadGraph({-1, 0}), Error);
}
