#include <gtest/gtest.h>

#include "pms/classify.hpp"
#include "pms/error.hpp"
#include "pms/named_graphs.hpp"
#include "pms/oracle.hpp"
#include "test_support.hpp"

namespace pms {
namespace {

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  for (const Edge& e : b.edges()) edges.push_back({e.u + a.n(), e.v + a.n()});
  return Graph(a.n() + b.n(), edges);
}

// Triangle 1-2-3 with pendant vertices 4, 5, 6 attached to 1, 2, 3.
Graph net() { return Graph::from_labels(6, {{1, 2}, {2, 3}, {1, 3}, {1, 4}, {2, 5}, {3, 6}}); }

TEST(Compressed, BlockStructureExamples) {
  auto glued = compressed_by_theorem(testing::load_fixture("glued_blocks.txt"));
  EXPECT_TRUE(glued.value);
  EXPECT_EQ(glued.method, Method::BlockStructure);

  auto c7 = compressed_by_theorem(testing::load_fixture("c7.txt"));
  EXPECT_FALSE(c7.value);
  ASSERT_TRUE(c7.witness.has_value());
  EXPECT_EQ(c7.witness->kind, Witness::Kind::NonCompleteBipartiteBlock);

  auto bowtie = compressed_by_theorem(testing::load_fixture("bowtie.txt"));
  EXPECT_FALSE(bowtie.value);
  ASSERT_TRUE(bowtie.witness.has_value());
  EXPECT_EQ(bowtie.witness->kind, Witness::Kind::SecondExceptionalBlock);
  EXPECT_EQ(bowtie.witness->sets.size(), 2u);

  EXPECT_TRUE(compressed_by_theorem(named::complete(4)).value);
  EXPECT_TRUE(compressed_by_theorem(named::k11q(4)).value);
  EXPECT_TRUE(compressed_by_theorem(named::cycle(4)).value);
  EXPECT_FALSE(compressed_by_theorem(named::complete(5)).value);
}

TEST(GorensteinBipartite, CompleteBipartiteAndTails) {
  auto k33 = gorenstein_bipartite(named::complete_bipartite(3, 3));
  EXPECT_TRUE(k33.value);
  EXPECT_TRUE(k33.hypothesis_ok);
  ASSERT_TRUE(k33.certificate && k33.certificate->delta);
  EXPECT_EQ(*k33.certificate->delta, 2);

  auto k23 = gorenstein_bipartite(named::complete_bipartite(2, 3));
  EXPECT_FALSE(k23.value);
  ASSERT_TRUE(k23.witness.has_value());
  EXPECT_EQ(k23.witness->kind, Witness::Kind::NoPerfectMatching);

  for (int n = 5; n <= 8; ++n) {
    EXPECT_FALSE(gorenstein_bipartite(named::c4_with_tail(n)).value) << n;
  }
}

TEST(GorensteinBipartite, TreesDeferToAlphaSystem) {
  auto v = gorenstein_bipartite(named::star(3));
  EXPECT_FALSE(v.hypothesis_ok);
  EXPECT_TRUE(v.value);
  EXPECT_EQ(v.method, Method::AlphaSystem);
  EXPECT_THROW(gorenstein_bipartite(named::cycle(5)), Error);
}

TEST(AlphaSystem, StarsAndCompleteBipartite) {
  for (int q = 2; q <= 6; ++q) {
    auto cert = alpha_system_solve(named::star(q));
    ASSERT_TRUE(cert && cert->delta) << q;
    EXPECT_EQ(*cert->delta, q + 1);
    IntVec expected(q + 1, 1);
    expected[0] = q;
    EXPECT_EQ(*cert->alpha_ambient, expected);
  }
  auto k33 = alpha_system_solve(named::complete_bipartite(3, 3));
  ASSERT_TRUE(k33 && k33->delta);
  EXPECT_EQ(*k33->delta, 2);
  EXPECT_EQ(*k33->alpha_ambient, IntVec(6, 1));
  EXPECT_FALSE(alpha_system_solve(named::complete_bipartite(2, 3)).has_value());
}

TEST(GorensteinPseudotree, Cases) {
  EXPECT_TRUE(gorenstein_pseudotree(named::cycle(5)).value);
  EXPECT_FALSE(gorenstein_pseudotree(named::cycle(7)).value);
  EXPECT_TRUE(gorenstein_pseudotree(net()).value);
  for (int n = 1; n <= 9; ++n) EXPECT_TRUE(gorenstein_pseudotree(named::path(n)).value) << n;
  EXPECT_FALSE(gorenstein_pseudotree(named::c4_with_tail(6)).value);
  auto v = gorenstein_pseudotree(testing::load_fixture("even_cycle_pseudotree.txt"));
  EXPECT_TRUE(v.value);
  ASSERT_TRUE(v.certificate && v.certificate->delta);
  EXPECT_EQ(*v.certificate->delta, 4);
  try {
    gorenstein_pseudotree(named::complete(4));
    FAIL() << "expected NotPseudotree";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotPseudotree);
  }
}

TEST(Multipartite, TableAndShapes) {
  EXPECT_TRUE(gorenstein_complete_multipartite({2, 2}).value);
  EXPECT_FALSE(gorenstein_complete_multipartite({1, 1, 3}).value);
  EXPECT_FALSE(gorenstein_complete_multipartite({1, 1, 1, 1, 1}).value);
  EXPECT_TRUE(gorenstein_complete_multipartite({1, 1, 1, 1}).value);
  EXPECT_THROW(gorenstein_complete_multipartite({2, 2, 2}), Error);
  EXPECT_EQ(complete_multipartite_shape(named::k11q(3)), (std::vector<int>{1, 1, 3}));
  EXPECT_EQ(complete_multipartite_shape(named::complete(4)), (std::vector<int>{1, 1, 1, 1}));
  EXPECT_FALSE(complete_multipartite_shape(named::cycle(5)).has_value());
}

TEST(OddCycleCondition, Examples) {
  EXPECT_TRUE(odd_cycle_condition(named::cycle(6)).value);
  EXPECT_TRUE(odd_cycle_condition(named::complete(5)).value);
  // Triangles 1-2-3 and 5-6-7 joined through vertex 4.
  Graph far = Graph::from_labels(
      7, {{1, 2}, {2, 3}, {1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {5, 7}});
  auto v = odd_cycle_condition(far);
  EXPECT_FALSE(v.value);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_EQ(v.witness->kind, Witness::Kind::OddCyclePair);
}

TEST(Dispatch, PrecedenceAndFallback) {
  EXPECT_EQ(gorenstein_dispatch(named::cycle(4)).method, Method::PseudotreeDegrees);
  EXPECT_EQ(gorenstein_dispatch(named::complete_bipartite(3, 3)).method,
            Method::BipartiteIndexTwo);
  EXPECT_EQ(gorenstein_dispatch(named::complete(5)).method, Method::MultipartiteTable);
  auto bowtie = gorenstein_dispatch(named::bowtie());
  EXPECT_EQ(bowtie.method, Method::Geometric);
  EXPECT_TRUE(bowtie.polytope_only);
}

TEST(ClassifyAll, ProductRule) {
  auto two = classify_all(testing::load_fixture("two_c4.txt"));
  EXPECT_TRUE(two.compressed.value);
  EXPECT_TRUE(two.gorenstein.value);
  EXPECT_EQ(two.components.size(), 2u);

  auto mixed = classify_all(disjoint_union(named::cycle(4), named::cycle(7)));
  EXPECT_FALSE(mixed.compressed.value);

  auto k1 = classify_all(Graph(1));
  EXPECT_TRUE(k1.compressed.value);
  EXPECT_TRUE(k1.gorenstein.value);

  // Each factor is Gorenstein but with indices 2 and 3, so the product is not.
  auto k2k3 = classify_all(disjoint_union(named::complete(2), named::complete(3)));
  EXPECT_FALSE(k2k3.gorenstein.value);
  ASSERT_TRUE(k2k3.gorenstein.witness.has_value());
  EXPECT_EQ(k2k3.gorenstein.witness->kind, Witness::Kind::IndexMismatch);
}

TEST(Implications, CompressedGraphsSatisfyOddCycleCondition) {
  for (const Graph& g : generate_corpus({.max_n = 6})) {
    if (compressed_by_theorem(g).value) {
      EXPECT_TRUE(odd_cycle_condition(g).value) << to_edge_list(g);
    }
  }
}

}  // namespace
}  // namespace pms
