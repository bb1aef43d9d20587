#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "pms/classify.hpp"
#include "pms/error.hpp"
#include "pms/matchable.hpp"
#include "pms/named_graphs.hpp"
#include "pms/oracle.hpp"
#include "test_support.hpp"

namespace pms {
namespace {

std::size_t count_with_n(const std::vector<Graph>& graphs, int n) {
  return std::count_if(graphs.begin(), graphs.end(), [n](const Graph& g) { return g.n() == n; });
}

TEST(Sullivant, Examples) {
  auto c7 = sullivant_compressed(testing::load_fixture("c7.txt"));
  EXPECT_FALSE(c7.compressed);
  ASSERT_TRUE(c7.witness.has_value());
  EXPECT_GE(c7.witness->levels.size(), 3u);
  EXPECT_EQ(c7.witness->realizing.size(), 3u);

  EXPECT_TRUE(sullivant_compressed(testing::load_fixture("c4.txt")).compressed);

  auto bowtie = sullivant_compressed(testing::load_fixture("bowtie.txt"));
  EXPECT_FALSE(bowtie.compressed);
  EXPECT_THROW(sullivant_compressed(testing::load_fixture("two_c4.txt")), Error);
}

TEST(Sullivant, BowtieCutVertexFacetLevels) {
  Graph g = testing::load_fixture("bowtie.txt");
  PointSet pts = lattice_points(g);
  bool seen = false;
  for (const auto& ineq : inequality_system(g)) {
    if (ineq.source.kind != SourceKind::OddSet || ineq.source.set != VertexSet::single(5, 0))
      continue;
    seen = true;
    EXPECT_EQ(facet_levels(pts, ineq), (std::vector<std::int64_t>{-4, -2, 0}));
  }
  EXPECT_TRUE(seen);
}

TEST(BruteForce, MatchesNaiveAndLibrary) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 150; ++trial) {
    int n = 1 + static_cast<int>(rng() % 10);
    Graph g = testing::random_graph(n, 0.35, rng);
    auto brute = brute_force_matchable(g).subsets;
    EXPECT_EQ(brute, matchable_subsets(g).subsets);
    EXPECT_EQ(brute.size(), testing::naive_matchable(g).size());
  }
  EXPECT_EQ(brute_force_matchable(named::complete(4)).subsets.size(), 8u);
}

TEST(Corpus, ConnectedGraphCounts) {
  auto graphs = generate_corpus({.max_n = 7});
  // Connected graphs on n unlabelled vertices: 1, 1, 2, 6, 21, 112, 853.
  const std::size_t expected[] = {0, 1, 1, 2, 6, 21, 112, 853};
  for (int n = 1; n <= 7; ++n) EXPECT_EQ(count_with_n(graphs, n), expected[n]) << n;
}

TEST(Corpus, FamilyFilters) {
  auto bip = generate_corpus({.max_n = 3, .family = Family::Bipartite});
  EXPECT_EQ(bip.size(), 3u);  // K1, K2, P3
  // Connected bipartite graphs on n vertices: 1, 1, 1, 3, 5, 17.
  auto bip6 = generate_corpus({.max_n = 6, .family = Family::Bipartite});
  EXPECT_EQ(count_with_n(bip6, 6), 17u);
  // Unicyclic or tree: trees 1,1,1,2,3,6 plus unicyclic 0,0,1,2,5,13.
  auto pseudo = generate_corpus({.max_n = 6, .family = Family::Pseudotree});
  EXPECT_EQ(count_with_n(pseudo, 6), 19u);
  for (const Graph& g : pseudo) EXPECT_LE(g.num_edges(), g.n());
  auto multi = generate_corpus({.max_n = 5, .family = Family::Multipartite});
  // Complete multipartite graphs on n vertices: partitions of n minus the edgeless one.
  EXPECT_EQ(count_with_n(multi, 5), 6u);
}

TEST(Corpus, BudgetsAreEnforced) {
  EXPECT_THROW(generate_corpus({.max_n = 9}), Error);
  EXPECT_EQ(max_corpus_vertices(Family::All), 8);
}

TEST(Canonical, InvariantUnderRelabelling) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + static_cast<int>(rng() % 8);
    Graph g = testing::random_graph(n, 0.4, rng);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    Graph h = testing::relabel(g, perm);
    EXPECT_EQ(canonical_code(g), canonical_code(h));
    EXPECT_EQ(canonical_form(g), canonical_form(h));
  }
  EXPECT_NE(canonical_code(named::path(4)), canonical_code(named::star(3)));
}

TEST(Sweep, SmallCorpusAgrees) {
  auto report = agreement_sweep({.max_n = 5});
  EXPECT_EQ(report.disagreements, 0u);
  EXPECT_FALSE(report.records.empty());
  for (const auto& r : report.records) EXPECT_FALSE(r.micros.has_value());
  auto timed = agreement_sweep({.max_n = 3}, true);
  for (const auto& r : timed.records) EXPECT_TRUE(r.micros.has_value());
}

TEST(OddCycleSearch, MatchesBlockHelper) {
  for (const Graph& g : generate_corpus({.max_n = 6})) {
    EXPECT_EQ(has_odd_cycle_ge5_by_search(g), has_odd_cycle_ge5(g)) << to_edge_list(g);
  }
}

}  // namespace
}  // namespace pms
