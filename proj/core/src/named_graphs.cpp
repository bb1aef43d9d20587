#include "pms/named_graphs.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace pms::named {

Graph path(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph(n, edges);
}

Graph cycle(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  if (n >= 3) edges.push_back({0, n - 1});
  return Graph(n, edges);
}

Graph complete(int n) {
  return complete_multipartite(std::vector<int>(n, 1));
}

Graph star(int leaves) { return complete_bipartite(1, leaves); }

Graph complete_bipartite(int p, int q) { return complete_multipartite({p, q}); }

Graph complete_multipartite(const std::vector<int>& parts) {
  std::vector<int> part_of;
  for (std::size_t i = 0; i < parts.size(); ++i)
    part_of.insert(part_of.end(), parts[i], static_cast<int>(i));
  const int n = static_cast<int>(part_of.size());
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (part_of[u] != part_of[v]) edges.push_back({u, v});
  return Graph(n, edges);
}

Graph k11q(int q) { return complete_multipartite({1, 1, q}); }

Graph bowtie() {
  return Graph::from_labels(5, {{1, 2}, {1, 3}, {2, 3}, {1, 4}, {1, 5}, {4, 5}});
}

Graph c4_with_tail(int n) {
  std::vector<std::pair<int, int>> edges{{1, 2}, {2, 3}, {3, 4}, {1, 4}};
  for (int v = 4; v < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_labels(n, edges);
}

Graph glued_blocks_example() {
  return Graph::from_labels(
      13, {// K4 on v1..v4
           {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4},
           // K_{3,2}: {v1, v5, v6} x {v7, v8}
           {1, 7}, {1, 8}, {5, 7}, {5, 8}, {6, 7}, {6, 8},
           // K_{3,3}: {v4, v9, v10} x {v11, v12, v13}
           {4, 11}, {4, 12}, {4, 13}, {9, 11}, {9, 12}, {9, 13},
           {10, 11}, {10, 12}, {10, 13}});
}

Graph even_cycle_pseudotree_example() {
  return Graph::from_labels(
      22, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {1, 5}, {1, 6}, {5, 7}, {7, 15},
           {7, 16}, {5, 8}, {2, 9}, {2, 10}, {3, 11}, {3, 12}, {12, 13},
           {12, 14}, {13, 17}, {13, 18}, {4, 19}, {4, 20}, {20, 21}, {20, 22}});
}

namespace {

std::optional<std::vector<int>> parse_numbers(const std::string& s) {
  std::vector<int> out;
  std::stringstream in(s);
  std::string part;
  while (std::getline(in, part, ',')) {
    if (part.empty() || part.size() > 2 ||
        !std::all_of(part.begin(), part.end(), [](unsigned char c) { return std::isdigit(c); }))
      return std::nullopt;
    out.push_back(std::stoi(part));
  }
  if (out.empty()) return std::nullopt;
  return out;
}

}  // namespace

std::optional<Graph> by_name(const std::string& name) {
  if (name == "bowtie") return bowtie();
  if (name == "glued-blocks") return glued_blocks_example();
  if (name == "even-cycle-pseudotree") return even_cycle_pseudotree_example();
  auto tail = [&](const std::string& prefix) -> std::optional<std::vector<int>> {
    if (name.rfind(prefix, 0) != 0) return std::nullopt;
    return parse_numbers(name.substr(prefix.size()));
  };
  if (auto v = tail("c4-tail"); v && v->size() == 1 && (*v)[0] >= 4) return c4_with_tail((*v)[0]);
  if (auto v = tail("star"); v && v->size() == 1 && (*v)[0] >= 1) return star((*v)[0]);
  if (auto v = tail("C"); v && v->size() == 1 && (*v)[0] >= 3) return cycle((*v)[0]);
  if (auto v = tail("P"); v && v->size() == 1 && (*v)[0] >= 1) return path((*v)[0]);
  if (auto v = tail("K")) {
    if (std::any_of(v->begin(), v->end(), [](int p) { return p < 1; })) return std::nullopt;
    if (std::accumulate(v->begin(), v->end(), 0) > kMaxVertices) return std::nullopt;
    if (v->size() == 1) return complete((*v)[0]);
    return complete_multipartite(*v);
  }
  return std::nullopt;
}

}  // namespace pms::named
