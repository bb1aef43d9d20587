#include "pms/matchable.hpp"

#include <algorithm>
#include <unordered_map>

#include "pms/error.hpp"

namespace pms {

namespace {

void require_enumerable(const Graph& g, const char* what) {
  if (g.n() > kMaxEnumerationVertices) {
    throw Error(ErrorKind::TooLarge,
                std::string(what) + " enumerates all subsets and is limited to " +
                    std::to_string(kMaxEnumerationVertices) + " vertices");
  }
}

// Kuhn's augmenting paths on G[s] with colour classes left/right.
bool bipartite_perfect(const Graph& g, VertexSet left, VertexSet right) {
  if (left.size() != right.size()) return false;
  std::vector<int> match_right(g.n(), -1);
  std::vector<int> match_left(g.n(), -1);
  for (int root : left.members()) {
    std::vector<int> parent(g.n(), -1);  // right vertex -> left predecessor
    std::uint64_t seen = 0;
    std::vector<int> queue{root};
    int free_right = -1;
    for (std::size_t head = 0; head < queue.size() && free_right < 0; ++head) {
      int u = queue[head];
      for (std::uint64_t b = g.adjacency(u) & right.bits() & ~seen; b != 0;
           b &= b - 1) {
        int w = std::countr_zero(b);
        seen |= std::uint64_t{1} << w;
        parent[w] = u;
        if (match_right[w] < 0) {
          free_right = w;
          break;
        }
        queue.push_back(match_right[w]);
      }
    }
    if (free_right < 0) return false;
    for (int w = free_right; w >= 0;) {
      int u = parent[w];
      int next = match_left[u];
      match_left[u] = w;
      match_right[w] = u;
      w = next;
    }
  }
  return true;
}

class MatchingSearch {
 public:
  explicit MatchingSearch(const Graph& g) : g_(g) {}

  bool solve(std::uint64_t unmatched) {
    if (unmatched == 0) return true;
    if (std::popcount(unmatched) % 2 != 0) return false;
    if (auto it = memo_.find(unmatched); it != memo_.end()) return it->second;
    int u = std::countr_zero(unmatched);
    std::uint64_t rest = unmatched & ~(std::uint64_t{1} << u);
    bool found = false;
    for (std::uint64_t b = g_.adjacency(u) & rest; b != 0 && !found; b &= b - 1)
      found = solve(rest & ~(b & -b));
    memo_.emplace(unmatched, found);
    return found;
  }

 private:
  const Graph& g_;
  std::unordered_map<std::uint64_t, bool> memo_;
};

}  // namespace

bool has_perfect_matching_within(const Graph& g, VertexSet s) {
  if (s.size() % 2 != 0) return false;
  if (s.empty()) return true;
  // Colour G[s]; if bipartite use augmenting paths.
  InducedSubgraph sub = induced_subgraph(g, s);
  if (auto parts = bipartition(sub.graph)) {
    return bipartite_perfect(sub.graph, parts->v1, parts->v2);
  }
  MatchingSearch search(g);
  return search.solve(s.bits());
}

bool has_perfect_matching(const Graph& g) {
  return has_perfect_matching_within(g, g.vertices());
}

bool is_critical(const Graph& g) {
  if (g.n() % 2 == 0) return false;
  for (int v = 0; v < g.n(); ++v) {
    VertexSet rest = g.vertices();
    rest.erase(v);
    if (!has_perfect_matching_within(g, rest)) return false;
  }
  return true;
}

MatchableTable::MatchableTable(const Graph& g) : n_(g.n()) {
  require_enumerable(g, "the matchable-subset table");
  const std::uint64_t total = std::uint64_t{1} << n_;
  table_.assign(total, 0);
  table_[0] = 1;
  // Masks in increasing numeric order: every proper subset precedes S.
  for (std::uint64_t s = 1; s < total; ++s) {
    if (std::popcount(s) % 2 != 0) continue;
    int u = std::countr_zero(s);
    std::uint64_t rest = s & ~(std::uint64_t{1} << u);
    for (std::uint64_t b = g.adjacency(u) & rest; b != 0; b &= b - 1) {
      if (table_[rest & ~(b & -b)]) {
        table_[s] = 1;
        break;
      }
    }
  }
}

MatchableFamily matchable_subsets(const Graph& g) {
  MatchableTable table(g);
  MatchableFamily family;
  family.graph_n = g.n();
  const std::uint64_t total = std::uint64_t{1} << g.n();
  for (std::uint64_t s = 0; s < total; ++s)
    if (table.contains_bits(s)) family.subsets.emplace_back(g.n(), s);
  std::sort(family.subsets.begin(), family.subsets.end());
  return family;
}

std::vector<VertexSet> hall_violations(const Graph& g, VertexSet side) {
  for (Edge e : g.edges()) {
    if (side.contains(e.u) == side.contains(e.v)) {
      throw Error(ErrorKind::NotBipartite,
                  "the given side is not a colour class of a 2-colouring");
    }
  }
  if (side.size() > kMaxEnumerationVertices) {
    throw Error(ErrorKind::TooLarge, "Hall check enumerates subsets of a side "
                                     "with at most " +
                                         std::to_string(kMaxEnumerationVertices) +
                                         " vertices");
  }
  std::vector<int> members = side.members();
  std::vector<VertexSet> out;
  const std::uint64_t total = std::uint64_t{1} << members.size();
  for (std::uint64_t pick = 1; pick < total; ++pick) {
    VertexSet s(g.n(), 0);
    for (std::uint64_t b = pick; b != 0; b &= b - 1)
      s.insert(members[std::countr_zero(b)]);
    if (s.size() > neighborhood(g, s).size()) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace pms
