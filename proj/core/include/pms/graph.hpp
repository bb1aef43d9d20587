#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pms/vertex_set.hpp"

namespace pms {

// Hard limit of the bitset representation.
inline constexpr int kMaxVertices = 64;
// Limit for operations that enumerate all 2^n vertex subsets.
inline constexpr int kMaxEnumerationVertices = 20;

struct Edge {
  int u = 0;  // u < v, 0-based
  int v = 0;
  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on 0-based vertices 0..n-1 (reported as 1..n).
// Immutable after construction; edges are kept sorted lexicographically.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  // Builds from 0-based edges; duplicates collapse, self-loops throw.
  Graph(int n, const std::vector<Edge>& edges);
  // Builds from 1-based labelled pairs.
  static Graph from_labels(int n, const std::vector<std::pair<int, int>>& edges);

  int n() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  VertexSet vertices() const { return VertexSet::full(n_); }
  VertexSet neighbors(int v) const { return VertexSet(n_, adj_[v]); }
  std::uint64_t adjacency(int v) const { return adj_[v]; }
  int degree(int v) const;
  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1U; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint64_t> adj_;
};

// Edge-list text: lines "u v" with 1-based labels, optional first line
// "n <count>", blank lines and '#' comments ignored.
Graph parse_graph(std::string_view text);
// Inverse of parse_graph: always emits the "n" header line.
std::string to_edge_list(const Graph& g);

std::vector<VertexSet> connected_components(const Graph& g);
// Components of the induced subgraph G[s], ordered by minimum vertex.
std::vector<VertexSet> components_within(const Graph& g, VertexSet s);
bool is_connected(const Graph& g);
// True iff G[s] is connected; the empty set counts as disconnected.
bool is_connected_within(const Graph& g, VertexSet s);

struct Bipartition {
  VertexSet v1;
  VertexSet v2;
};

struct BipartitionResult {
  std::optional<Bipartition> parts;
  // When parts is absent: an odd closed walk v0 v1 ... v0 (0-based, the
  // closing vertex is not repeated).
  std::vector<int> odd_walk;
};

// In every component the minimum vertex goes to V1.
std::optional<Bipartition> bipartition(const Graph& g);
BipartitionResult bipartition_with_witness(const Graph& g);
bool is_bipartite(const Graph& g);
bool is_bipartite_within(const Graph& g, VertexSet s);

// Vertices outside s adjacent to some vertex of s.
VertexSet neighborhood(const Graph& g, VertexSet s);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> labels;  // labels[i] = original 0-based vertex of i
};
InducedSubgraph induced_subgraph(const Graph& g, VertexSet s);

// Number of connected components of G[s].
int theta(const Graph& g, VertexSet s);

// Every vertex-deleted subgraph has a perfect matching.
bool is_critical(const Graph& g);

struct BlockKind {
  enum class Tag { CompleteBipartite, K4, K11n, Other };
  Tag tag = Tag::Other;
  int p = 0;  // CompleteBipartite: part sizes p <= q; K11n: q
  int q = 0;

  bool exceptional() const { return tag == Tag::K4 || tag == Tag::K11n; }
  std::string to_string() const;
  friend bool operator==(const BlockKind&, const BlockKind&) = default;
};

struct Block {
  std::vector<Edge> edges;
  VertexSet vertices;
  BlockKind kind;
};

struct BlockDecomposition {
  std::vector<Block> blocks;  // ordered by first (smallest) edge
  VertexSet cut_vertices;
};

BlockDecomposition blocks_and_cut_vertices(const Graph& g);
VertexSet cut_vertices(const Graph& g);
// Precondition: g is 2-connected or a single edge, else NotBiconnected.
BlockKind classify_block(const Graph& g);

// Some (not necessarily induced) subgraph is an odd cycle of length >= 5.
// Decided from the block structure.
bool has_odd_cycle_ge5(const Graph& g);

enum class CycleParity { None, Even, Odd };

struct PseudotreeProfile {
  std::vector<int> cycle;  // cycle order starting at its minimum vertex
  CycleParity parity = CycleParity::None;
  VertexSet v_c;  // cycle vertices
  VertexSet v_t;  // non-cycle vertices of degree > 1
  VertexSet v_p;  // non-cycle vertices of degree <= 1
};

// Absent when g has more than one cycle; throws Disconnected.
std::optional<PseudotreeProfile> pseudotree_profile(const Graph& g);

struct LineGraph {
  Graph graph;
  std::vector<Edge> edge_order;  // vertex i of the line graph = edge_order[i]
};
LineGraph line_graph(const Graph& g);

}  // namespace pms
