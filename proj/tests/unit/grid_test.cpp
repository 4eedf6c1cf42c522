#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "oracles.hpp"
#include "petalgrid/grid.hpp"

using namespace petalgrid;
using ::testing::HasSubstr;

namespace {

const PetalPermutation kTrefoil(std::vector<int>{3, 5, 2, 4, 1});

// Two interlocked squares on a 4×4 grid: a Hopf link.
GridDiagram hopf_link() {
  GridDiagram g;
  g.size = 4;
  g.nodes = {{1, 1}, {3, 1}, {3, 3}, {1, 3}, {2, 2}, {4, 2}, {4, 4}, {2, 4}};
  g.horizontal = {{0, 1}, {2, 3}, {4, 5}, {6, 7}};
  g.vertical = {{1, 2}, {3, 0}, {5, 6}, {7, 4}};
  g.traversal = {0, 3, 2, 1};
  return g;
}

int count(const std::string& text, const std::string& needle) {
  int n = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

}  // namespace

TEST(BuildPetalGrid, TrefoilNodes) {
  const GridDiagram g = build_petal_grid(kTrefoil);
  const std::vector<GridPoint> want = {{1, 3}, {1, 5}, {2, 2}, {2, 4}, {3, 1},
                                       {3, 3}, {4, 5}, {4, 2}, {5, 4}, {5, 1}};
  EXPECT_EQ(g.size, 5);
  EXPECT_EQ(g.nodes, want);
  EXPECT_EQ(g.horizontal.front(), (GridEdge{0, 5}));
  EXPECT_EQ(g.vertical.front(), (GridEdge{0, 1}));
}

TEST(BuildPetalGrid, HorizontalLengthsAlternate) {
  for (const auto& [n, s] : std::vector<std::pair<int, int>>{{2, 3}, {5, 7}, {4, 9}}) {
    const PetalPermutation pp = synthesize(n, s);
    const GridDiagram g = build_petal_grid(pp);
    const int half = pp.half();
    for (int i = 1; i <= pp.length(); ++i) {
      const GridEdge e = g.horizontal[i - 1];
      EXPECT_EQ(std::abs(g.nodes[e.a].x - g.nodes[e.b].x), i % 2 ? half : half + 1) << i;
    }
  }
}

TEST(BuildPetalGrid, RandomPetalsHaveTwoNodesPerLine) {
  oracle::Engine rng(61);
  for (int t = 0; t < 200; ++t) {
    const int p = 2 * oracle::uniform(rng, 1, 10) + 1;
    const GridDiagram g = build_petal_grid(oracle::random_petal(rng, p));
    ASSERT_EQ(static_cast<int>(g.nodes.size()), 2 * p);
    std::vector<int> rows(p + 1), cols(p + 1);
    for (const GridPoint& q : g.nodes) {
      ++rows[q.y];
      ++cols[q.x];
    }
    for (int k = 1; k <= p; ++k) {
      EXPECT_EQ(rows[k], 2);
      EXPECT_EQ(cols[k], 2);
    }
  }
}

TEST(BuildPetalGrid, TraversalIsOneCycle) {
  oracle::Engine rng(62);
  for (int t = 0; t < 200; ++t) {
    const int p = 2 * oracle::uniform(rng, 1, 10) + 1;
    const GridDiagram g = build_petal_grid(oracle::random_petal(rng, p));
    std::vector<int> sorted = g.traversal;
    std::sort(sorted.begin(), sorted.end());
    std::vector<int> all(2 * p);
    std::iota(all.begin(), all.end(), 0);
    EXPECT_EQ(sorted, all);
    EXPECT_EQ(g.traversal.front(), p - 1);  // A_p
    EXPECT_EQ(g.traversal[1], p);           // A_{p+1}
  }
}

TEST(ValidatePetalGrid, SynthesizedGridsAreValid) {
  const GridValidation v = validate_petal_grid(build_petal_grid(synthesize(5, 7)));
  EXPECT_TRUE(v.valid);
  EXPECT_TRUE(v.violations.empty());
}

TEST(ValidatePetalGrid, TrefoilInflectionEdge) {
  const GridValidation v = validate_petal_grid(build_petal_grid(kTrefoil));
  EXPECT_TRUE(v.valid);
  ASSERT_TRUE(v.inflection_edge.has_value());
  const GridEdge e = build_petal_grid(kTrefoil).vertical[*v.inflection_edge];
  EXPECT_EQ(e, (GridEdge{4, 5}));  // A_5 A_6
}

TEST(ValidatePetalGrid, MovedNodeIsReported) {
  GridDiagram g = build_petal_grid(kTrefoil);
  g.nodes[0].x = 2;
  const GridValidation v = validate_petal_grid(g);
  EXPECT_FALSE(v.valid);
  EXPECT_FALSE(v.violations.empty());
}

TEST(ValidatePetalGrid, EvenSizeAndLinks) {
  const GridValidation v = validate_petal_grid(hopf_link());
  EXPECT_FALSE(v.valid);
  bool even = false;
  for (const GridViolation& x : v.violations) even = even || x.kind == GridViolation::Kind::even_size;
  EXPECT_TRUE(even);
}

TEST(ValidatePetalGrid, EveryPetalPermutationGivesAPetalGrid) {
  EXPECT_TRUE(validate_petal_grid(build_petal_grid(PetalPermutation(std::vector<int>{2, 3, 1}))).valid);
  oracle::Engine rng(65);
  for (int t = 0; t < 100; ++t) {
    const int p = 2 * oracle::uniform(rng, 1, 10) + 1;
    EXPECT_TRUE(validate_petal_grid(build_petal_grid(oracle::random_petal(rng, p))).valid);
  }
}

TEST(PlanarDiagram, TrefoilCrossings) {
  const PlanarDiagram d = to_planar_diagram(build_petal_grid(kTrefoil));
  EXPECT_EQ(d.components, 1);
  EXPECT_EQ(d.crossings.size(), oracle::interval_crossings(build_petal_grid(kTrefoil)).size());
  EXPECT_EQ(d.crossings.size(), 3u);
  EXPECT_EQ(d.writhe(), 3);
  EXPECT_EQ(d.arc_count, 3);
}

TEST(PlanarDiagram, UnknotGrid) {
  const PlanarDiagram d = to_planar_diagram(build_petal_grid(PetalPermutation(std::vector<int>{2, 3, 1})));
  EXPECT_EQ(d.components, 1);
  EXPECT_EQ(d.crossings.size(), 0u);
}

TEST(PlanarDiagram, HopfLinkHasTwoComponents) {
  const PlanarDiagram d = to_planar_diagram(hopf_link());
  EXPECT_EQ(d.components, 2);
  EXPECT_EQ(d.crossings.size(), 2u);
  EXPECT_EQ(std::abs(d.writhe()), 2);
}

TEST(PlanarDiagram, MalformedGrid) {
  GridDiagram g = build_petal_grid(kTrefoil);
  g.horizontal[0] = g.horizontal[1];
  try {
    to_planar_diagram(g);
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_THAT(e.what(), HasSubstr("malformed grid"));
  }
}

TEST(PlanarDiagram, CrossingSetMatchesIntervalOracle) {
  oracle::Engine rng(63);
  for (int t = 0; t < 200; ++t) {
    const int p = 2 * oracle::uniform(rng, 1, 8) + 1;
    const GridDiagram g = build_petal_grid(oracle::random_petal(rng, p));
    const PlanarDiagram d = to_planar_diagram(g);
    std::set<std::pair<int, int>> got;
    for (const Crossing& c : d.crossings) got.insert({c.at.x, c.at.y});
    EXPECT_EQ(got.size(), d.crossings.size());
    EXPECT_EQ(got, oracle::interval_crossings(g));
    EXPECT_EQ(d.components, 1);
  }
}

TEST(PlanarDiagram, PdLabelsFollowTheKnot) {
  oracle::Engine rng(64);
  for (int t = 0; t < 100; ++t) {
    const int p = 2 * oracle::uniform(rng, 2, 8) + 1;
    const PlanarDiagram d = to_planar_diagram(build_petal_grid(oracle::random_petal(rng, p)));
    const int c = static_cast<int>(d.crossings.size());
    if (c == 0) continue;
    EXPECT_EQ(d.edge_count, 2 * c);
    std::vector<int> seen(2 * c + 1, 0);
    auto next = [&](int e) { return e % (2 * c) + 1; };
    for (const Crossing& x : d.crossings) {
      for (int e : x.pd) {
        ASSERT_GE(e, 1);
        ASSERT_LE(e, 2 * c);
        ++seen[e];
      }
      EXPECT_EQ(x.pd[2], next(x.pd[0]));
      if (x.sign > 0) {
        EXPECT_EQ(x.pd[1], next(x.pd[3]));
      } else {
        EXPECT_EQ(x.pd[3], next(x.pd[1]));
      }
    }
    for (int e = 1; e <= 2 * c; ++e) EXPECT_EQ(seen[e], 2) << "edge " << e;
  }
}

TEST(PlanarDiagram, ArcsChainUnderpasses) {
  const PlanarDiagram d = to_planar_diagram(build_petal_grid(synthesize(5, 7)));
  const int c = static_cast<int>(d.crossings.size());
  EXPECT_EQ(d.arc_count, c);
  std::vector<int> in(c, 0), out(c, 0);
  for (const Crossing& x : d.crossings) {
    ++in[x.under_in_arc];
    ++out[x.under_out_arc];
  }
  for (int a = 0; a < c; ++a) {
    EXPECT_EQ(in[a], 1);
    EXPECT_EQ(out[a], 1);
  }
}

TEST(PlanarDiagram, WritheIsDeterministic) {
  for (const auto& [n, s] : std::vector<std::pair<int, int>>{{2, 5}, {3, 7}, {5, 9}}) {
    const GridDiagram g = build_petal_grid(synthesize(n, s));
    EXPECT_EQ(to_planar_diagram(g).writhe(), to_planar_diagram(g).writhe());
  }
}

TEST(PlanarDiagram, TwoStrandTorusKnotsHavePositiveWrithe) {
  for (int s : {3, 5, 7, 9}) {
    EXPECT_GT(to_planar_diagram(build_petal_grid(synthesize(2, s))).writhe(), 0) << s;
  }
}

TEST(Render, AsciiBox) {
  const std::string art = render_ascii(build_petal_grid(kTrefoil));
  int lines = 0;
  for (std::size_t pos = 0; (pos = art.find('\n', pos)) != std::string::npos; ++pos) ++lines;
  EXPECT_EQ(lines, 11);
  for (std::size_t start = 0; start < art.size();) {
    const std::size_t end = art.find('\n', start);
    EXPECT_EQ(end - start, 11u);
    start = end + 1;
  }
  EXPECT_EQ(count(art, "+"), 10);
  EXPECT_EQ(render(build_petal_grid(kTrefoil), RenderFormat::ascii), art);
}

TEST(Render, AsciiVerticalsPassOver) {
  const std::string art = render_ascii(build_petal_grid(kTrefoil));
  // The horizontal at y=4 runs from x=2 to x=5 under the vertical at x=4.
  const std::string row = art.substr(3 * 12, 11);
  EXPECT_EQ(row[2 * 4 - 1], '|');
  EXPECT_EQ(row[2 * 4], '-');
}

TEST(Render, SvgHasOnePathPerEdge) {
  const GridDiagram g = build_petal_grid(synthesize(5, 7));
  const std::string svg = render_svg(g);
  EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
  EXPECT_NE(svg.find("</svg>"), std::string::npos);
  EXPECT_EQ(count(svg, "<path class=\"horizontal\""), 13);
  EXPECT_EQ(count(svg, "<path class=\"vertical\""), 13);
  EXPECT_EQ(count(svg, "<circle"), 26);
  EXPECT_EQ(count(svg, "<rect x="), static_cast<int>(to_planar_diagram(g).crossings.size()));
}
