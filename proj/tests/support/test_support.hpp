#pragma once

// Helpers shared by the unit and acceptance tests. The matching and rank
// routines here are deliberately naive and independent of the library so
// they can serve as reference oracles.

#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pms/graph.hpp"
#include "pms/vertex_set.hpp"

namespace pms::testing {

inline std::string fixture_path(const std::string& name) {
  return std::string(PMS_FIXTURE_DIR) + "/" + name;
}

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name), std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Graph load_fixture(const std::string& name) { return parse_graph(read_fixture(name)); }

// Perfect matching on the vertex bitmask s by matching the lowest vertex to
// each available neighbour in turn.
inline bool naive_perfect_matching(const Graph& g, std::uint64_t s) {
  if (s == 0) return true;
  int v = __builtin_ctzll(s);
  std::uint64_t rest = s & ~(std::uint64_t{1} << v);
  for (int u : g.neighbors(v).members()) {
    std::uint64_t bit = std::uint64_t{1} << u;
    if ((rest & bit) && naive_perfect_matching(g, rest & ~bit)) return true;
  }
  return false;
}

// All matchable subsets as bitmasks in increasing numeric order.
inline std::vector<std::uint64_t> naive_matchable(const Graph& g) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.n()); ++s) {
    if (__builtin_popcountll(s) % 2 == 0 && naive_perfect_matching(g, s)) out.push_back(s);
  }
  return out;
}

// Rank over the rationals by Gaussian elimination with long double pivots;
// exact for the small 0/1 matrices used in tests.
inline int naive_rank(std::vector<std::vector<long double>> m) {
  int rank = 0;
  const int cols = m.empty() ? 0 : static_cast<int>(m[0].size());
  for (int c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(m.size()); ++r) {
      if (m[r][c] > 1e-9L || m[r][c] < -1e-9L) { pivot = r; break; }
    }
    if (pivot < 0) continue;
    std::swap(m[pivot], m[rank]);
    for (int r = 0; r < static_cast<int>(m.size()); ++r) {
      if (r == rank) continue;
      long double f = m[r][c] / m[rank][c];
      for (int k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

// Dimension of the convex hull of the given subsets' indicator vectors.
inline int naive_affine_dimension(int n, const std::vector<std::uint64_t>& subsets) {
  if (subsets.empty()) return -1;
  std::vector<std::vector<long double>> rows;
  for (std::uint64_t s : subsets) {
    std::vector<long double> row(n);
    for (int i = 0; i < n; ++i) {
      row[i] = static_cast<long double>((s >> i) & 1) -
               static_cast<long double>((subsets[0] >> i) & 1);
    }
    rows.push_back(std::move(row));
  }
  return naive_rank(std::move(rows));
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.push_back({u, v});
  return Graph(n, edges);
}

inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    int a = perm[e.u], b = perm[e.v];
    edges.push_back({std::min(a, b), std::max(a, b)});
  }
  return Graph(g.n(), edges);
}

}  // namespace pms::testing
