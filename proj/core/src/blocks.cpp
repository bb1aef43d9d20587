#include <algorithm>
#include <functional>

#include "pms/error.hpp"
#include "pms/graph.hpp"

namespace pms {

namespace {

struct DfsState {
  const Graph& g;
  std::vector<int> disc;
  std::vector<int> low;
  std::vector<Edge> stack;
  std::vector<std::vector<Edge>> blocks;
  std::uint64_t cuts = 0;
  int time = 0;

  explicit DfsState(const Graph& graph)
      : g(graph), disc(graph.n(), -1), low(graph.n(), 0) {}

  // Iterative Hopcroft-Tarjan over the edge stack.
  void run(int root) {
    struct Frame {
      int v;
      int parent;
      std::uint64_t pending;
      int children;
    };
    std::vector<Frame> frames;
    disc[root] = low[root] = time++;
    frames.push_back({root, -1, g.adjacency(root), 0});
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.pending != 0) {
        int w = std::countr_zero(f.pending);
        f.pending &= f.pending - 1;
        if (w == f.parent) continue;
        if (disc[w] == -1) {
          stack.push_back({std::min(f.v, w), std::max(f.v, w)});
          disc[w] = low[w] = time++;
          ++f.children;
          frames.push_back({w, f.v, g.adjacency(w), 0});
        } else if (disc[w] < disc[f.v]) {
          stack.push_back({std::min(f.v, w), std::max(f.v, w)});
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      Frame done = f;
      frames.pop_back();
      if (frames.empty()) {
        if (done.children >= 2) cuts |= std::uint64_t{1} << done.v;
        continue;
      }
      Frame& up = frames.back();
      low[up.v] = std::min(low[up.v], low[done.v]);
      if (low[done.v] >= disc[up.v]) {
        if (up.parent != -1) cuts |= std::uint64_t{1} << up.v;
        Edge tree_edge{std::min(up.v, done.v), std::max(up.v, done.v)};
        std::vector<Edge> block;
        while (true) {
          Edge e = stack.back();
          stack.pop_back();
          block.push_back(e);
          if (e == tree_edge) break;
        }
        std::sort(block.begin(), block.end());
        blocks.push_back(std::move(block));
      }
    }
  }
};

BlockKind classify_biconnected(const Graph& g) {
  const int n = g.n();
  const int m = g.num_edges();
  if (n == 4 && m == 6) return {BlockKind::Tag::K4, 0, 0};
  // K_{1,1,q}: two adjacent universal vertices, the other q independent.
  if (n >= 3 && m == 2 * (n - 2) + 1) {
    std::vector<int> universal;
    for (int v = 0; v < n; ++v)
      if (g.degree(v) == n - 1) universal.push_back(v);
    if (universal.size() == 2 || (n == 3 && universal.size() == 3)) {
      return {BlockKind::Tag::K11n, 0, n - 2};
    }
  }
  if (auto parts = bipartition(g)) {
    int p = parts->v1.size();
    int q = parts->v2.size();
    if (m == p * q) return {BlockKind::Tag::CompleteBipartite, std::min(p, q), std::max(p, q)};
  }
  return {BlockKind::Tag::Other, 0, 0};
}

}  // namespace

std::string BlockKind::to_string() const {
  switch (tag) {
    case Tag::CompleteBipartite:
      return "K_{" + std::to_string(p) + "," + std::to_string(q) + "}";
    case Tag::K4: return "K_4";
    case Tag::K11n: return "K_{1,1," + std::to_string(q) + "}";
    case Tag::Other: return "other";
  }
  return "other";
}

BlockDecomposition blocks_and_cut_vertices(const Graph& g) {
  DfsState state(g);
  for (int v = 0; v < g.n(); ++v)
    if (state.disc[v] == -1) state.run(v);
  std::sort(state.blocks.begin(), state.blocks.end());
  BlockDecomposition out;
  out.cut_vertices = VertexSet(g.n(), state.cuts);
  for (auto& edges : state.blocks) {
    Block block;
    block.vertices = VertexSet(g.n(), 0);
    for (Edge e : edges) {
      block.vertices.insert(e.u);
      block.vertices.insert(e.v);
    }
    block.kind = classify_biconnected(induced_subgraph(g, block.vertices).graph);
    block.edges = std::move(edges);
    out.blocks.push_back(std::move(block));
  }
  return out;
}

VertexSet cut_vertices(const Graph& g) {
  DfsState state(g);
  for (int v = 0; v < g.n(); ++v)
    if (state.disc[v] == -1) state.run(v);
  return VertexSet(g.n(), state.cuts);
}

BlockKind classify_block(const Graph& g) {
  if (g.n() < 2 || !is_connected(g) ||
      (g.n() > 2 && !cut_vertices(g).empty())) {
    throw Error(ErrorKind::NotBiconnected,
                "block classification needs a 2-connected graph or an edge");
  }
  return classify_biconnected(g);
}

bool has_odd_cycle_ge5(const Graph& g) {
  for (const Block& block : blocks_and_cut_vertices(g).blocks) {
    if (block.kind.exceptional()) continue;
    if (!is_bipartite_within(g, block.vertices)) return true;
  }
  return false;
}

}  // namespace pms
