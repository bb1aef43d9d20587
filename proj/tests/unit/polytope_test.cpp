#include <gtest/gtest.h>

#include "pms/error.hpp"
#include "pms/matchable.hpp"
#include "pms/named_graphs.hpp"
#include "pms/polytope.hpp"
#include "test_support.hpp"

namespace pms {
namespace {

IntVec indicator(int n, std::uint64_t s) {
  IntVec x(n);
  for (int i = 0; i < n; ++i) x[i] = static_cast<std::int64_t>((s >> i) & 1);
  return x;
}

TEST(Points, SquareHasSixVertices) {
  PointSet pts = lattice_points(testing::load_fixture("c4.txt"));
  ASSERT_EQ(pts.points.size(), 6u);
  EXPECT_EQ(pts.points.front(), (IntVec{0, 0, 0, 0}));
  EXPECT_EQ(pts.points.back(), (IntVec{1, 1, 1, 1}));
}

TEST(Dimension, FormulaForNamedGraphs) {
  EXPECT_EQ(dimension(named::cycle(4)), 3);
  EXPECT_EQ(dimension(named::cycle(5)), 5);
  EXPECT_EQ(dimension(Graph(3)), 0);
  EXPECT_EQ(dimension(testing::load_fixture("two_c4.txt")), 6);
}

TEST(Dimension, FormulaMatchesNaiveAffineHull) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 1 + static_cast<int>(rng() % 9);
    Graph g = testing::random_graph(n, 0.3, rng);
    int naive = testing::naive_affine_dimension(n, testing::naive_matchable(g));
    EXPECT_EQ(dimension(g), naive) << to_edge_list(g);
    EXPECT_EQ(dimension_by_rank(g), naive);
  }
}

// The inequality system must cut out exactly the matchable subsets among
// 0/1 vectors, and its facet flags must agree with a naive tight-set rank.
TEST(Inequalities, DescribePolytopeAndFlagFacets) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 250; ++trial) {
    int n = 2 + static_cast<int>(rng() % 7);
    Graph g = testing::random_graph(n, 0.4, rng);
    auto sys = inequality_system(g);
    auto w = testing::naive_matchable(g);
    std::vector<bool> in_w(std::uint64_t{1} << n, false);
    for (auto s : w) in_w[s] = true;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
      EXPECT_EQ(membership(sys, indicator(n, s), 1), static_cast<bool>(in_w[s]))
          << to_edge_list(g) << " subset " << s;
    }
    const int d = testing::naive_affine_dimension(n, w);
    for (const auto& ineq : sys) {
      std::vector<std::uint64_t> tight;
      for (auto s : w)
        if (ineq.value(indicator(n, s)) == ineq.rhs) tight.push_back(s);
      const bool facet = !tight.empty() && testing::naive_affine_dimension(n, tight) == d - 1;
      EXPECT_EQ(ineq.facet, facet) << to_edge_list(g) << ineq.source.to_string();
    }
  }
}

TEST(Inequalities, SquareFacetSources) {
  auto sys = inequality_system(testing::load_fixture("c4.txt"));
  std::vector<std::string> facets;
  for (const auto& ineq : sys)
    if (ineq.facet) facets.push_back(ineq.source.to_string());
  EXPECT_EQ(facets, (std::vector<std::string>{"NonNeg(1)", "NonNeg(2)", "NonNeg(3)",
                                              "NonNeg(4)", "UpperOne(1)", "UpperOne(2)",
                                              "UpperOne(3)", "UpperOne(4)",
                                              "BipartiteCut({1})", "BipartiteCut({3})"}));
}

TEST(Inequalities, VerifyFacetFlagsOnFixtures) {
  for (const char* name : {"c4.txt", "c5.txt", "c7.txt", "k4.txt", "k23.txt", "k113.txt",
                           "bowtie.txt", "glued_blocks.txt"}) {
    Graph g = testing::load_fixture(name);
    auto sys = inequality_system(g);
    EXPECT_TRUE(verify_facet_flags(g, sys, lattice_points(g)).ok()) << name;
  }
}

TEST(Levels, OddCycleFullSetFacet) {
  Graph g = testing::load_fixture("c7.txt");
  PointSet pts = lattice_points(g);
  for (const auto& ineq : inequality_system(g)) {
    if (ineq.source.set.size() != 7) continue;
    EXPECT_EQ(ineq.rhs, 6);
    EXPECT_EQ(facet_levels(pts, ineq), (std::vector<std::int64_t>{-6, -4, -2, 0}));
  }
}

TEST(Normalize, ProjectionPreservesPointsAndDimension) {
  for (const char* name : {"c4.txt", "k23.txt", "k33.txt", "star3.txt", "c4_tail6.txt"}) {
    Graph g = testing::load_fixture(name);
    PointSet pts = lattice_points(g);
    auto p = psi_project(g, pts);
    EXPECT_EQ(p.dim, dimension(g)) << name;
    EXPECT_EQ(p.points.size(), pts.points.size());
    for (std::size_t i = 0; i < pts.points.size(); ++i) {
      EXPECT_EQ(p.map.to_ambient(p.points[i]), pts.points[i]);
    }
  }
  for (const char* name : {"c5.txt", "k4.txt", "bowtie.txt"}) {
    Graph g = testing::load_fixture(name);
    PointSet pts = lattice_points(g);
    auto p = normalize_lattice(pts, inequality_system(g));
    EXPECT_EQ(p.dim, dimension(g)) << name;
    for (const auto& y : p.points) {
      for (const auto& f : p.facets) EXPECT_LE(dot(f.normal, y), f.rhs);
    }
  }
}

TEST(Idp, DisjointOddCyclesAreNotNormal) {
  // Two triangles joined through a path: the edge polytope is not normal, and
  // neither is P_G; the witness is the indicator of both triangles.
  Graph g = Graph::from_labels(
      7, {{1, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {5, 7}});
  auto r = idp_check(g, 2, DilateLattice::Polytope);
  EXPECT_FALSE(r.value);
  ASSERT_TRUE(r.counterexample.has_value());
  EXPECT_EQ(*r.counterexample, (IntVec{1, 1, 1, 0, 1, 1, 1}));
}

TEST(Idp, DisconnectedGraphs) {
  EXPECT_TRUE(idp_check(testing::load_fixture("two_c4.txt"), 2, DilateLattice::Integer).value);
  EXPECT_TRUE(idp_check(Graph(3), 2, DilateLattice::Polytope).value);
}

TEST(Idp, SmallGraphs) {
  EXPECT_TRUE(idp_check(named::cycle(4), 2, DilateLattice::Integer).value);
  EXPECT_TRUE(idp_check(named::cycle(5), 3, DilateLattice::Polytope).value);
  EXPECT_TRUE(idp_check(named::complete(4), 2, DilateLattice::Polytope).value);
  auto r = idp_check(named::cycle(4), 2, DilateLattice::Polytope);
  EXPECT_GT(r.dilate_points, 6u);
  try {
    idp_check(named::path(11), 2, DilateLattice::Polytope);
    FAIL() << "expected TooLarge";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TooLarge);
  }
}

TEST(Geometric, SquareIsIndexTwo) {
  auto cert = gorenstein_geometric(testing::load_fixture("c4.txt"));
  ASSERT_TRUE(cert.has_value());
  EXPECT_EQ(cert->delta, 2);
  ASSERT_TRUE(cert->alpha_ambient.has_value());
  EXPECT_EQ(*cert->alpha_ambient, (IntVec{1, 1, 1, 1}));
}

TEST(Geometric, UnbalancedCompleteBipartiteFails) {
  EXPECT_FALSE(gorenstein_geometric(named::complete_bipartite(2, 3)).has_value());
  EXPECT_FALSE(gorenstein_geometric(named::cycle(4), 1).has_value());
}

TEST(Geometric, CertificateIsAtDistanceOneFromEveryFacet) {
  for (const char* name : {"c5.txt", "k4.txt", "star3.txt"}) {
    Graph g = testing::load_fixture(name);
    PointSet pts = lattice_points(g);
    auto sys = inequality_system(g);
    auto cert = gorenstein_geometric(g);
    ASSERT_TRUE(cert && cert->delta && cert->alpha_ambient) << name;
    for (const auto& ineq : sys) {
      if (!ineq.facet) continue;
      // Distance measured in the facet normal's lattice on the affine hull.
      std::int64_t slack = *cert->delta * ineq.rhs - ineq.value(*cert->alpha_ambient);
      EXPECT_GT(slack, 0) << name << " " << ineq.to_string();
    }
  }
}

TEST(Geometric, SinglePointHasNoIndex) {
  auto cert = gorenstein_geometric(Graph(1));
  ASSERT_TRUE(cert.has_value());
  EXPECT_FALSE(cert->delta.has_value());
}

}  // namespace
}  // namespace pms
