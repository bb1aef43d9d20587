#include "pms/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "pms/error.hpp"

namespace pms {

namespace {

void check_size(int n) {
  if (n < 0) throw Error(ErrorKind::ParseError, "negative vertex count");
  if (n > kMaxVertices) {
    throw Error(ErrorKind::TooLarge, "graphs are limited to " +
                                         std::to_string(kMaxVertices) +
                                         " vertices, got " + std::to_string(n));
  }
}

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                               line[i] == '\r' || line[i] == ','))
      ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' &&
           line[j] != '\r' && line[j] != ',')
      ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

long parse_int(std::string_view token, int line_no) {
  long value = 0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) +
                                           ": not an integer: '" +
                                           std::string(token) + "'");
  }
  return value;
}

// BFS over the bitmask restricted to `within`, starting from `start`.
std::uint64_t reach(const Graph& g, std::uint64_t within, int start) {
  std::uint64_t seen = std::uint64_t{1} << start;
  std::uint64_t frontier = seen;
  while (frontier != 0) {
    std::uint64_t next = 0;
    for (std::uint64_t b = frontier; b != 0; b &= b - 1)
      next |= g.adjacency(std::countr_zero(b));
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

}  // namespace

Graph::Graph(int n) : n_(n) {
  check_size(n);
  adj_.assign(n, 0);
}

Graph::Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
  for (Edge e : edges) {
    if (e.u == e.v) {
      throw Error(ErrorKind::SelfLoop,
                  "self-loop at vertex " + std::to_string(e.u + 1));
    }
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw Error(ErrorKind::ParseError, "edge endpoint out of range");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
    edges_.push_back(e);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  for (Edge e : edges_) {
    adj_[e.u] |= std::uint64_t{1} << e.v;
    adj_[e.v] |= std::uint64_t{1} << e.u;
  }
}

Graph Graph::from_labels(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<Edge> zero_based;
  zero_based.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 1 || v < 1 || u > n || v > n) {
      throw Error(ErrorKind::ParseError, "label out of range 1.." +
                                             std::to_string(n));
    }
    zero_based.push_back({u - 1, v - 1});
  }
  return Graph(n, zero_based);
}

int Graph::degree(int v) const { return std::popcount(adj_[v]); }

Graph parse_graph(std::string_view text) {
  std::optional<long> declared;
  std::vector<std::pair<long, long>> pairs;
  long max_label = 0;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (tokens[0] == "n") {
      if (tokens.size() != 2 || declared || !pairs.empty()) {
        throw Error(ErrorKind::ParseError,
                    "line " + std::to_string(line_no) +
                        ": 'n <count>' must be a single leading line");
      }
      declared = parse_int(tokens[1], line_no);
      if (*declared < 0) {
        throw Error(ErrorKind::ParseError, "negative vertex count");
      }
      continue;
    }
    if (tokens.size() != 2) {
      throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) +
                                             ": expected 'u v'");
    }
    long u = parse_int(tokens[0], line_no);
    long v = parse_int(tokens[1], line_no);
    if (u < 1 || v < 1) {
      throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) +
                                             ": labels must be >= 1");
    }
    if (u == v) {
      throw Error(ErrorKind::SelfLoop, "line " + std::to_string(line_no) +
                                           ": self-loop at " +
                                           std::to_string(u));
    }
    max_label = std::max({max_label, u, v});
    pairs.emplace_back(u, v);
  }
  long n = declared.value_or(max_label);
  if (n < max_label) {
    throw Error(ErrorKind::ParseError, "label " + std::to_string(max_label) +
                                           " exceeds declared count " +
                                           std::to_string(n));
  }
  if (n > kMaxVertices) {
    throw Error(ErrorKind::TooLarge, "graphs are limited to " +
                                         std::to_string(kMaxVertices) +
                                         " vertices");
  }
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (auto [u, v] : pairs)
    edges.push_back({static_cast<int>(u - 1), static_cast<int>(v - 1)});
  return Graph(static_cast<int>(n), edges);
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.n() << '\n';
  for (Edge e : g.edges()) out << e.u + 1 << ' ' << e.v + 1 << '\n';
  return out.str();
}

std::vector<VertexSet> components_within(const Graph& g, VertexSet s) {
  std::vector<VertexSet> out;
  std::uint64_t left = s.bits();
  while (left != 0) {
    std::uint64_t comp = reach(g, s.bits(), std::countr_zero(left));
    out.emplace_back(g.n(), comp);
    left &= ~comp;
  }
  return out;
}

std::vector<VertexSet> connected_components(const Graph& g) {
  return components_within(g, g.vertices());
}

bool is_connected_within(const Graph& g, VertexSet s) {
  if (s.empty()) return false;
  return reach(g, s.bits(), s.min()) == s.bits();
}

bool is_connected(const Graph& g) {
  return g.n() > 0 && is_connected_within(g, g.vertices());
}

BipartitionResult bipartition_with_witness(const Graph& g) {
  const int n = g.n();
  std::vector<int> color(n, -1);
  std::vector<int> parent(n, -1);
  std::vector<int> depth(n, 0);
  for (int root = 0; root < n; ++root) {
    if (color[root] != -1) continue;
    color[root] = 0;
    std::vector<int> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int u = queue[head];
      for (int w : g.neighbors(u).members()) {
        if (color[w] == -1) {
          color[w] = 1 - color[u];
          parent[w] = u;
          depth[w] = depth[u] + 1;
          queue.push_back(w);
        } else if (color[w] == color[u]) {
          // Odd closed walk: path u -> lca, then lca -> w, closed by edge wu.
          std::vector<int> left{u};
          std::vector<int> right{w};
          int a = u;
          int b = w;
          while (depth[a] > depth[b]) left.push_back(a = parent[a]);
          while (depth[b] > depth[a]) right.push_back(b = parent[b]);
          while (a != b) {
            left.push_back(a = parent[a]);
            right.push_back(b = parent[b]);
          }
          right.pop_back();  // lca already at the end of left
          std::vector<int> walk(left.begin(), left.end());
          walk.insert(walk.end(), right.rbegin(), right.rend());
          return {std::nullopt, walk};
        }
      }
    }
  }
  Bipartition parts{VertexSet(n, 0), VertexSet(n, 0)};
  for (int v = 0; v < n; ++v) {
    if (color[v] == 0)
      parts.v1.insert(v);
    else
      parts.v2.insert(v);
  }
  return {parts, {}};
}

std::optional<Bipartition> bipartition(const Graph& g) {
  return bipartition_with_witness(g).parts;
}

bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

bool is_bipartite_within(const Graph& g, VertexSet s) {
  std::uint64_t colored = 0;
  std::uint64_t side = 0;
  for (VertexSet comp : components_within(g, s)) {
    int root = comp.min();
    colored |= std::uint64_t{1} << root;
    std::uint64_t frontier = std::uint64_t{1} << root;
    while (frontier != 0) {
      std::uint64_t next = 0;
      for (std::uint64_t b = frontier; b != 0; b &= b - 1) {
        int u = std::countr_zero(b);
        bool u_side = (side >> u) & 1U;
        std::uint64_t nb = g.adjacency(u) & s.bits();
        // A neighbour already coloured on the same side closes an odd cycle.
        std::uint64_t same = u_side ? (side & colored) : (colored & ~side);
        if (nb & same) return false;
        std::uint64_t fresh = nb & ~colored;
        colored |= fresh;
        if (!u_side) side |= fresh;
        next |= fresh;
      }
      frontier = next;
    }
  }
  return true;
}

VertexSet neighborhood(const Graph& g, VertexSet s) {
  std::uint64_t out = 0;
  s.for_each([&](int v) { out |= g.adjacency(v); });
  return VertexSet(g.n(), out & ~s.bits());
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet s) {
  std::vector<int> labels = s.members();
  std::vector<int> index(g.n(), -1);
  for (std::size_t i = 0; i < labels.size(); ++i) index[labels[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  for (Edge e : g.edges()) {
    if (index[e.u] >= 0 && index[e.v] >= 0) edges.push_back({index[e.u], index[e.v]});
  }
  return {Graph(static_cast<int>(labels.size()), edges), std::move(labels)};
}

int theta(const Graph& g, VertexSet s) {
  return static_cast<int>(components_within(g, s).size());
}

std::optional<PseudotreeProfile> pseudotree_profile(const Graph& g) {
  if (!is_connected(g)) {
    throw Error(ErrorKind::Disconnected, "pseudotree profile needs a connected graph");
  }
  if (g.num_edges() > g.n()) return std::nullopt;
  const int n = g.n();
  PseudotreeProfile profile;
  profile.v_c = VertexSet(n, 0);
  profile.v_t = VertexSet(n, 0);
  profile.v_p = VertexSet(n, 0);
  if (g.num_edges() == n) {
    // Strip leaves repeatedly; what remains is the unique cycle.
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    std::uint64_t alive = g.vertices().bits();
    std::vector<int> stack;
    for (int v = 0; v < n; ++v)
      if (deg[v] == 1) stack.push_back(v);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      alive &= ~(std::uint64_t{1} << v);
      for (std::uint64_t b = g.adjacency(v) & alive; b != 0; b &= b - 1) {
        int w = std::countr_zero(b);
        if (--deg[w] == 1) stack.push_back(w);
      }
    }
    profile.v_c = VertexSet(n, alive);
    int start = profile.v_c.min();
    int prev = -1;
    int cur = start;
    do {
      profile.cycle.push_back(cur);
      std::uint64_t nb = g.adjacency(cur) & alive;
      if (prev >= 0) nb &= ~(std::uint64_t{1} << prev);
      // At the start choose the smaller neighbour for a canonical direction.
      int next = std::countr_zero(nb);
      prev = cur;
      cur = next;
    } while (cur != start);
    profile.parity = profile.cycle.size() % 2 == 0 ? CycleParity::Even
                                                   : CycleParity::Odd;
  }
  for (int v = 0; v < n; ++v) {
    if (profile.v_c.contains(v)) continue;
    if (g.degree(v) > 1)
      profile.v_t.insert(v);
    else
      profile.v_p.insert(v);
  }
  return profile;
}

LineGraph line_graph(const Graph& g) {
  const auto& edges = g.edges();
  const int m = static_cast<int>(edges.size());
  if (m > kMaxVertices) {
    throw Error(ErrorKind::TooLarge, "line graph would exceed " +
                                         std::to_string(kMaxVertices) +
                                         " vertices");
  }
  std::vector<Edge> adjacent_pairs;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const Edge& a = edges[i];
      const Edge& b = edges[j];
      if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v)
        adjacent_pairs.push_back({i, j});
    }
  }
  return {Graph(m, adjacent_pairs), edges};
}

}  // namespace pms
