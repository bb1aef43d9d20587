#include <algorithm>
#include <map>
#include <set>

#include "pms/error.hpp"
#include "pms/oracle.hpp"

namespace pms {

namespace {

// Bit index of the pair (i, j), i < j, in column order (0,1),(0,2),(1,2),...
constexpr int pair_bit(int i, int j) { return j * (j - 1) / 2 + i; }

// Colour refinement to the coarsest equitable refinement. Colours are
// renumbered by (old colour, neighbour-colour multiset), which keeps the
// procedure invariant under relabelling.
void refine(const Graph& g, std::vector<int>& color) {
  const int n = g.n();
  int cells = static_cast<int>(std::set<int>(color.begin(), color.end()).size());
  while (true) {
    std::vector<std::pair<std::vector<int>, int>> keys(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> key{color[v]};
      std::vector<int> nb;
      g.neighbors(v).for_each([&](int w) { nb.push_back(color[w]); });
      std::sort(nb.begin(), nb.end());
      key.insert(key.end(), nb.begin(), nb.end());
      keys[v] = {std::move(key), v};
    }
    std::vector<std::vector<int>> distinct;
    for (auto& k : keys) distinct.push_back(k.first);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (int v = 0; v < n; ++v) {
      color[v] = static_cast<int>(
          std::lower_bound(distinct.begin(), distinct.end(), keys[v].first) -
          distinct.begin());
    }
    int now = static_cast<int>(distinct.size());
    if (now == cells) return;
    cells = now;
  }
}

struct CanonicalSearch {
  const Graph& g;
  std::uint64_t best = ~std::uint64_t{0};
  std::vector<int> best_label;

  std::uint64_t code_of(const std::vector<int>& label) const {
    std::uint64_t code = 0;
    for (Edge e : g.edges()) {
      int a = std::min(label[e.u], label[e.v]);
      int b = std::max(label[e.u], label[e.v]);
      code |= std::uint64_t{1} << pair_bit(a, b);
    }
    return code;
  }

  void search(std::vector<int> color) {
    refine(g, color);
    const int n = g.n();
    std::vector<int> cell_size(n, 0);
    for (int c : color) ++cell_size[c];
    int target = -1;
    for (int c = 0; c < n && target < 0; ++c)
      if (cell_size[c] > 1) target = c;
    if (target < 0) {
      std::uint64_t code = code_of(color);
      if (code < best) {
        best = code;
        best_label = color;
      }
      return;
    }
    std::vector<int> explored;
    for (int v = 0; v < n; ++v) {
      if (color[v] != target) continue;
      // Swapping twins is an automorphism fixing every other vertex, so
      // individualising a twin of an explored vertex reaches the same codes.
      bool twin = std::any_of(explored.begin(), explored.end(), [&](int u) {
        std::uint64_t mu = ~(std::uint64_t{1} << v);
        std::uint64_t mv = ~(std::uint64_t{1} << u);
        return (g.adjacency(u) & mu) == (g.adjacency(v) & mv);
      });
      if (twin) continue;
      explored.push_back(v);
      std::vector<int> next = color;
      for (int w = 0; w < n; ++w) {
        if (color[w] > target || (color[w] == target && w != v)) ++next[w];
      }
      search(std::move(next));
    }
  }
};

CanonicalSearch run_canonical(const Graph& g) {
  if (g.n() > kMaxCanonicalVertices) {
    throw Error(ErrorKind::TooLarge, "canonical forms are limited to " +
                                         std::to_string(kMaxCanonicalVertices) +
                                         " vertices");
  }
  CanonicalSearch s{g, ~std::uint64_t{0}, {}};
  if (g.n() == 0) {
    s.best = 0;
    return s;
  }
  s.search(std::vector<int>(g.n(), 0));
  return s;
}

Graph extend(const Graph& h, std::uint64_t neighbours) {
  std::vector<Edge> edges = h.edges();
  const int v = h.n();
  for (std::uint64_t b = neighbours; b != 0; b &= b - 1)
    edges.push_back({std::countr_zero(b), v});
  return Graph(h.n() + 1, edges);
}

bool admissible_extension(const Graph& h, std::uint64_t nb, Family family,
                          const std::optional<Bipartition>& parts) {
  switch (family) {
    case Family::All: return true;
    case Family::Bipartite:
      return (nb & ~parts->v1.bits()) == 0 || (nb & ~parts->v2.bits()) == 0;
    case Family::Pseudotree: {
      int k = std::popcount(nb);
      return k == 1 || (k == 2 && h.num_edges() == h.n() - 1);
    }
    case Family::Multipartite: return false;
  }
  return false;
}

void partitions(int n, int max_part, std::vector<int>& current,
                std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(current);
    return;
  }
  for (int p = std::min(n, max_part); p >= 1; --p) {
    current.push_back(p);
    partitions(n - p, p, current, out);
    current.pop_back();
  }
}

Graph complete_multipartite(const std::vector<int>& shape) {
  std::vector<int> part;
  for (std::size_t i = 0; i < shape.size(); ++i)
    part.insert(part.end(), shape[i], static_cast<int>(i));
  const int n = static_cast<int>(part.size());
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (part[u] != part[v]) edges.push_back({u, v});
  return Graph(n, edges);
}

}  // namespace

Graph canonical_form(const Graph& g) {
  CanonicalSearch s = run_canonical(g);
  std::vector<Edge> edges;
  for (Edge e : g.edges()) edges.push_back({s.best_label[e.u], s.best_label[e.v]});
  return Graph(g.n(), edges);
}

std::uint64_t canonical_code(const Graph& g) { return run_canonical(g).best; }

std::vector<Graph> generate_corpus(const CorpusSpec& spec) {
  if (!spec.connected_only || !spec.dedup) {
    throw Error(ErrorKind::Unsupported,
                "only connected graphs up to isomorphism are generated");
  }
  if (spec.max_n > max_corpus_vertices(spec.family)) {
    throw Error(ErrorKind::TooLarge, std::string("the ") + to_string(spec.family) +
                                         " corpus is limited to n <= " +
                                         std::to_string(max_corpus_vertices(spec.family)));
  }
  std::vector<Graph> out;
  if (spec.max_n < 1) return out;

  if (spec.family == Family::Multipartite) {
    for (int n = 2; n <= spec.max_n; ++n) {
      std::vector<std::vector<int>> shapes;
      std::vector<int> current;
      partitions(n, n, current, shapes);
      std::map<std::uint64_t, Graph> level;
      for (auto shape : shapes) {
        if (shape.size() < 2) continue;
        std::reverse(shape.begin(), shape.end());
        Graph g = complete_multipartite(shape);
        level.emplace(canonical_code(g), canonical_form(g));
      }
      for (auto& [code, g] : level) out.push_back(std::move(g));
    }
    return out;
  }

  // Every connected graph has a vertex whose deletion leaves it connected,
  // and each family is closed under deleting such a vertex, so extending
  // all class representatives on n-1 vertices reaches every class on n.
  std::vector<Graph> previous{Graph(1)};
  out.push_back(previous.front());
  for (int n = 2; n <= spec.max_n; ++n) {
    std::map<std::uint64_t, Graph> level;
    for (const Graph& h : previous) {
      std::optional<Bipartition> parts = bipartition(h);
      const std::uint64_t total = std::uint64_t{1} << h.n();
      for (std::uint64_t nb = 1; nb < total; ++nb) {
        if (!admissible_extension(h, nb, spec.family, parts)) continue;
        Graph g = extend(h, nb);
        std::uint64_t code = canonical_code(g);
        if (!level.count(code)) level.emplace(code, canonical_form(g));
      }
    }
    previous.clear();
    for (auto& [code, g] : level) previous.push_back(g);
    out.insert(out.end(), previous.begin(), previous.end());
  }
  return out;
}

}  // namespace pms
