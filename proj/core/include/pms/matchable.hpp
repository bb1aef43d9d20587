#pragma once

#include <cstdint>
#include <vector>

#include "pms/graph.hpp"
#include "pms/vertex_set.hpp"

namespace pms {

// Exact decision for arbitrary graphs: augmenting paths when bipartite,
// otherwise minimum-vertex branching memoised on the unmatched set.
bool has_perfect_matching(const Graph& g);
// G[s] has a perfect matching (true for the empty set).
bool has_perfect_matching_within(const Graph& g, VertexSet s);

// Dense membership table of W(G) over all 2^n subsets.
class MatchableTable {
 public:
  explicit MatchableTable(const Graph& g);

  int n() const { return n_; }
  bool contains(VertexSet s) const { return table_[s.bits()] != 0; }
  bool contains_bits(std::uint64_t bits) const { return table_[bits] != 0; }

 private:
  int n_;
  std::vector<std::uint8_t> table_;
};

struct MatchableFamily {
  int graph_n = 0;
  std::vector<VertexSet> subsets;  // ordered by (cardinality, bit pattern)
};

// All S with G[S] perfectly matchable, the empty set included.
MatchableFamily matchable_subsets(const Graph& g);

// All nonempty S within `side` with |S| > |Γ(S)|; `side` must be one colour
// class of a proper 2-colouring of g.
std::vector<VertexSet> hall_violations(const Graph& g, VertexSet side);

}  // namespace pms
