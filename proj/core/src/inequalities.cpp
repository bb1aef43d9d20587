#include <algorithm>

#include "pms/error.hpp"
#include "pms/matchable.hpp"
#include "pms/polytope.hpp"

namespace pms {

namespace {

void require_enumerable(const Graph& g) {
  if (g.n() > kMaxEnumerationVertices) {
    throw Error(ErrorKind::TooLarge, "the inequality system enumerates vertex "
                                     "subsets; limit is " +
                                         std::to_string(kMaxEnumerationVertices) +
                                         " vertices");
  }
}

AffineInequality bound(int n, int v, bool upper, bool facet) {
  AffineInequality ineq;
  ineq.normal.assign(n, 0);
  ineq.normal[v] = upper ? 1 : -1;
  ineq.rhs = upper ? 1 : 0;
  ineq.facet = facet;
  ineq.source.kind = upper ? SourceKind::UpperOne : SourceKind::NonNeg;
  ineq.source.vertex = v;
  return ineq;
}

// x(S) - x(Γ(S)) <= rhs
AffineInequality set_inequality(const Graph& g, VertexSet s, SourceKind kind,
                                std::int64_t rhs, bool facet) {
  AffineInequality ineq;
  ineq.normal.assign(g.n(), 0);
  s.for_each([&](int v) { ineq.normal[v] = 1; });
  neighborhood(g, s).for_each([&](int v) { ineq.normal[v] = -1; });
  ineq.rhs = rhs;
  ineq.facet = facet;
  ineq.source.kind = kind;
  ineq.source.set = s;
  return ineq;
}

std::vector<AffineInequality> bipartite_system(const Graph& g,
                                               const Bipartition& parts) {
  const int n = g.n();
  const VertexSet cuts = cut_vertices(g);
  std::vector<AffineInequality> sys;
  for (int v = 0; v < n; ++v)
    sys.push_back(bound(n, v, false, n >= 2 && !cuts.contains(v)));
  for (int v = 0; v < n; ++v) {
    // A single edge is a segment whose two ends are both facets.
    bool facet = g.num_edges() == 1 || g.degree(v) >= 2;
    sys.push_back(bound(n, v, true, facet));
  }
  for (int dir : {+1, -1}) {
    AffineInequality balance;
    balance.normal.assign(n, 0);
    parts.v1.for_each([&](int v) { balance.normal[v] = dir; });
    parts.v2.for_each([&](int v) { balance.normal[v] = -dir; });
    balance.rhs = 0;
    balance.facet = false;
    balance.source.kind = SourceKind::Balance;
    balance.source.set = parts.v1;
    balance.source.other = parts.v2;
    balance.source.direction = dir;
    sys.push_back(std::move(balance));
  }
  std::vector<int> side = parts.v1.members();
  std::vector<VertexSet> subsets;
  const std::uint64_t total = std::uint64_t{1} << side.size();
  for (std::uint64_t pick = 1; pick < total; ++pick) {
    VertexSet s(n, 0);
    for (std::uint64_t b = pick; b != 0; b &= b - 1)
      s.insert(side[std::countr_zero(b)]);
    subsets.push_back(s);
  }
  std::sort(subsets.begin(), subsets.end());
  for (VertexSet s : subsets) {
    VertexSet gamma = neighborhood(g, s);
    bool facet = s != parts.v1 && is_connected_within(g, s | gamma) &&
                 is_connected_within(g, (parts.v1 - s) | (parts.v2 - gamma));
    sys.push_back(set_inequality(g, s, SourceKind::BipartiteCut, 0, facet));
  }
  return sys;
}

// Connectivity of G[S ∪ Γ(S)] after deleting the edges inside Γ(S).
bool connected_without_gamma_edges(const Graph& g, VertexSet s, VertexSet gamma) {
  const std::uint64_t all = (s | gamma).bits();
  std::uint64_t seen = std::uint64_t{1} << s.min();
  std::uint64_t frontier = seen;
  while (frontier != 0) {
    std::uint64_t next = 0;
    for (std::uint64_t b = frontier; b != 0; b &= b - 1) {
      int u = std::countr_zero(b);
      std::uint64_t reachable = s.contains(u) ? all : s.bits();
      next |= g.adjacency(u) & reachable;
    }
    next &= ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == all;
}

bool component_is_critical(const MatchableTable& w, VertexSet c) {
  if (c.size() % 2 == 0) return false;
  bool critical = true;
  c.for_each([&](int v) {
    VertexSet rest = c;
    rest.erase(v);
    critical = critical && w.contains(rest);
  });
  return critical;
}

// Dimension of the face x_v = 1 of P_G for connected nonbipartite g: the
// face is the union over neighbours u of e_v + e_u + P_{G-v-u}, so its
// direction space is spanned by e_u - e_u0 and the linear spans of the
// component polytopes of G - v - u.
int upper_face_dimension(const Graph& g, int v) {
  const int n = g.n();
  std::vector<IntVec> gens;
  std::vector<int> nbrs = g.neighbors(v).members();
  for (std::size_t i = 1; i < nbrs.size(); ++i) {
    IntVec d(n, 0);
    d[nbrs[i]] = 1;
    d[nbrs[0]] = -1;
    gens.push_back(std::move(d));
  }
  for (int u : nbrs) {
    VertexSet rest = g.vertices();
    rest.erase(v);
    rest.erase(u);
    for (VertexSet c : components_within(g, rest)) {
      if (c.size() == 1) continue;
      if (is_bipartite_within(g, c)) {
        for (Edge e : g.edges()) {
          if (c.contains(e.u) && c.contains(e.v)) {
            IntVec d(n, 0);
            d[e.u] = d[e.v] = 1;
            gens.push_back(std::move(d));
          }
        }
      } else {
        c.for_each([&](int x) {
          IntVec d(n, 0);
          d[x] = 1;
          gens.push_back(std::move(d));
        });
      }
    }
  }
  return rank(gens);
}

bool all_components_nonbipartite(const Graph& g, VertexSet s) {
  for (VertexSet c : components_within(g, s))
    if (is_bipartite_within(g, c)) return false;
  return true;
}

std::vector<AffineInequality> nonbipartite_system(const Graph& g) {
  const int n = g.n();
  const MatchableTable w(g);
  std::vector<AffineInequality> sys;
  for (int v = 0; v < n; ++v) {
    VertexSet rest = g.vertices();
    rest.erase(v);
    sys.push_back(bound(n, v, false, all_components_nonbipartite(g, rest)));
  }
  for (int v = 0; v < n; ++v)
    sys.push_back(bound(n, v, true, upper_face_dimension(g, v) == n - 1));

  std::vector<VertexSet> subsets;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t bits = 1; bits < total; ++bits) subsets.emplace_back(n, bits);
  std::sort(subsets.begin(), subsets.end());
  for (VertexSet s : subsets) {
    auto comps = components_within(g, s);
    bool admissible = std::all_of(comps.begin(), comps.end(), [&](VertexSet c) {
      return c.size() == 1 || (c.size() % 2 == 1 && !is_bipartite_within(g, c));
    });
    if (!admissible) continue;
    VertexSet gamma = neighborhood(g, s);
    bool facet =
        std::all_of(comps.begin(), comps.end(),
                    [&](VertexSet c) { return component_is_critical(w, c); }) &&
        all_components_nonbipartite(g, g.vertices() - s - gamma) &&
        connected_without_gamma_edges(g, s, gamma);
    const auto rhs = static_cast<std::int64_t>(s.size() - comps.size());
    sys.push_back(set_inequality(g, s, SourceKind::OddSet, rhs, facet));
  }
  return sys;
}

}  // namespace

std::string InequalitySource::to_string() const {
  switch (kind) {
    case SourceKind::NonNeg: return "NonNeg(" + std::to_string(vertex + 1) + ")";
    case SourceKind::UpperOne: return "UpperOne(" + std::to_string(vertex + 1) + ")";
    case SourceKind::BipartiteCut: return "BipartiteCut(" + set.to_string() + ")";
    case SourceKind::OddSet: return "OddSet(" + set.to_string() + ")";
    case SourceKind::Balance:
      return "Balance(" + set.to_string() + "," + other.to_string() + "," +
             (direction > 0 ? "+1" : "-1") + ")";
  }
  return "?";
}

std::string AffineInequality::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < normal.size(); ++i) {
    if (normal[i] == 0) continue;
    std::string var = "x" + std::to_string(i + 1);
    if (out.empty()) {
      out += normal[i] == 1 ? var : normal[i] == -1 ? "-" + var
                                                    : std::to_string(normal[i]) + var;
    } else {
      auto mag = normal[i] < 0 ? -normal[i] : normal[i];
      out += normal[i] < 0 ? " - " : " + ";
      out += mag == 1 ? var : std::to_string(mag) + var;
    }
  }
  if (out.empty()) out = "0";
  return out + " <= " + std::to_string(rhs);
}

namespace {

std::vector<AffineInequality> connected_system(const Graph& g) {
  if (auto parts = bipartition(g)) return bipartite_system(g, *parts);
  return nonbipartite_system(g);
}

VertexSet lift(VertexSet s, const std::vector<int>& labels, int n) {
  VertexSet out(n, 0);
  s.for_each([&](int v) { out.insert(labels[v]); });
  return out;
}

}  // namespace

// P_G is the product of its components' polytopes, so the description is the
// union of the component descriptions, and a lifted inequality is a facet
// exactly when it is one for its component.
std::vector<AffineInequality> inequality_system(const Graph& g) {
  require_enumerable(g);
  auto comps = connected_components(g);
  if (comps.size() <= 1) return connected_system(g);
  std::vector<AffineInequality> out;
  for (VertexSet c : comps) {
    auto sub = induced_subgraph(g, c);
    for (auto& ineq : connected_system(sub.graph)) {
      AffineInequality lifted = ineq;
      lifted.normal.assign(g.n(), 0);
      for (std::size_t i = 0; i < sub.labels.size(); ++i) lifted.normal[sub.labels[i]] = ineq.normal[i];
      lifted.source.vertex = ineq.source.vertex >= 0 ? sub.labels[ineq.source.vertex] : -1;
      lifted.source.set = lift(ineq.source.set, sub.labels, g.n());
      lifted.source.other = lift(ineq.source.other, sub.labels, g.n());
      out.push_back(std::move(lifted));
    }
  }
  return out;
}

}  // namespace pms
