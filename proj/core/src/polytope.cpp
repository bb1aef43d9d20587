#include "pms/polytope.hpp"

#include <algorithm>

#include "pms/error.hpp"
#include "pms/matchable.hpp"

namespace pms {

namespace {

IntVec indicator(int n, VertexSet s) {
  IntVec x(n, 0);
  s.for_each([&](int v) { x[v] = 1; });
  return x;
}

// Transports facet inequalities along x = y * basis (origin 0), divides
// each normal by its content and removes duplicates.
std::vector<NormalizedFacet> transport_facets(
    const std::vector<IntVec>& basis, const std::vector<AffineInequality>& sys) {
  std::vector<NormalizedFacet> out;
  for (const auto& ineq : sys) {
    if (!ineq.facet) continue;
    NormalizedFacet f;
    f.normal.reserve(basis.size());
    for (const auto& row : basis) f.normal.push_back(dot(row, ineq.normal));
    std::int64_t g = gcd_of(f.normal);
    if (g == 0) {
      throw Error(ErrorKind::InconsistentFacets,
                  ineq.source.to_string() + " is constant on the affine hull");
    }
    if (ineq.rhs % g != 0) {
      throw Error(ErrorKind::InconsistentFacets,
                  ineq.source.to_string() + " has no lattice points on its face");
    }
    for (auto& a : f.normal) a /= g;
    f.rhs = ineq.rhs / g;
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

bool AffineLattice::contains(const IntVec& x) const {
  IntVec shifted(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) shifted[i] = x[i] - origin[i];
  return basis.contains(shifted);
}

PointSet point_set_from(int n, std::vector<VertexSet> subsets) {
  std::sort(subsets.begin(), subsets.end());
  PointSet pts;
  pts.ambient_n = n;
  pts.subsets = std::move(subsets);
  pts.points.reserve(pts.subsets.size());
  for (VertexSet s : pts.subsets) pts.points.push_back(indicator(n, s));
  pts.affine_lattice.origin.assign(n, 0);
  pts.affine_lattice.basis = hermite_normal_form(pts.points, n);
  return pts;
}

PointSet lattice_points(const Graph& g) {
  return point_set_from(g.n(), matchable_subsets(g).subsets);
}

int dimension(const Graph& g) {
  int bipartite_components = 0;
  for (VertexSet c : connected_components(g))
    if (is_bipartite_within(g, c)) ++bipartite_components;
  return g.n() - bipartite_components;
}

int dimension_by_rank(const Graph& g) {
  return affine_rank(lattice_points(g).points);
}

bool is_facet_by_rank(const AffineInequality& ineq, const PointSet& pts, int dim) {
  std::vector<IntVec> active;
  for (const auto& x : pts.points)
    if (ineq.value(x) == ineq.rhs) active.push_back(x);
  if (active.empty() || active.size() == pts.points.size()) return false;
  return affine_rank(active) == dim - 1;
}

FacetReport verify_facet_flags(const Graph& g,
                               const std::vector<AffineInequality>& sys,
                               const PointSet& pts) {
  (void)g;
  const int dim = affine_rank(pts.points);
  FacetReport report;
  for (std::size_t i = 0; i < sys.size(); ++i) {
    bool geometric = is_facet_by_rank(sys[i], pts, dim);
    report.geometric.push_back(geometric);
    if (geometric != sys[i].facet) report.disagreements.push_back(i);
  }
  return report;
}

IntVec LatticeMap::to_ambient(const IntVec& y) const {
  IntVec x = origin;
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t c = 0; c < x.size(); ++c) x[c] += y[i] * basis[i][c];
  return x;
}

std::optional<IntVec> LatticeMap::to_local(const IntVec& x) const {
  IntVec rest(x.size());
  for (std::size_t c = 0; c < x.size(); ++c) rest[c] = x[c] - origin[c];
  IntVec y(basis.size(), 0);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const int p = pivots[i];
    if (rest[p] % basis[i][p] != 0) return std::nullopt;
    y[i] = rest[p] / basis[i][p];
    for (std::size_t c = 0; c < rest.size(); ++c) rest[c] -= y[i] * basis[i][c];
  }
  for (auto r : rest)
    if (r != 0) return std::nullopt;
  return y;
}

NormalizedPolytope psi_project(const Graph& g, const PointSet& pts) {
  if (!is_connected(g)) throw Error(ErrorKind::Disconnected, "psi needs a connected graph");
  auto parts = bipartition(g);
  if (!parts) throw Error(ErrorKind::NotBipartite, "psi needs a bipartite graph");
  const int n = g.n();
  const int dropped = n - 1;
  // The part holding the dropped vertex plays the role of V2.
  const VertexSet v2 = parts->v2.contains(dropped) ? parts->v2 : parts->v1;

  NormalizedPolytope out;
  out.dim = n - 1;
  out.map.origin.assign(n, 0);
  for (int i = 0; i < n - 1; ++i) {
    IntVec row(n, 0);
    row[i] = 1;
    row[dropped] = v2.contains(i) ? -1 : 1;
    out.map.basis.push_back(std::move(row));
    out.map.pivots.push_back(i);
  }
  for (const auto& x : pts.points) out.points.emplace_back(x.begin(), x.end() - 1);
  out.facets = transport_facets(out.map.basis, inequality_system(g));
  return out;
}

NormalizedPolytope normalize_lattice(const PointSet& pts,
                                     const std::vector<AffineInequality>& sys) {
  if (pts.points.size() < 2) {
    throw Error(ErrorKind::DegeneratePointSet,
                "a single point has no lattice normalization (dimension 0)");
  }
  const HermiteBasis& basis = pts.affine_lattice.basis;
  NormalizedPolytope out;
  out.dim = basis.rank();
  out.map.origin = pts.affine_lattice.origin;
  out.map.basis = basis.rows;
  out.map.pivots = basis.pivots;
  for (const auto& x : pts.points) {
    auto y = out.map.to_local(x);
    if (!y) throw Error(ErrorKind::InconsistentFacets, "point outside its own lattice");
    out.points.push_back(std::move(*y));
  }
  out.facets = transport_facets(out.map.basis, sys);
  return out;
}

bool membership(const std::vector<AffineInequality>& sys, const IntVec& x,
                std::int64_t k) {
  return std::all_of(sys.begin(), sys.end(), [&](const AffineInequality& ineq) {
    return ineq.value(x) <= k * ineq.rhs;
  });
}

std::vector<std::int64_t> facet_levels(const PointSet& pts,
                                       const AffineInequality& ineq) {
  if (!ineq.facet) {
    throw Error(ErrorKind::NotAFacet, ineq.source.to_string() + " is not a facet");
  }
  std::vector<std::int64_t> levels;
  for (const auto& x : pts.points) levels.push_back(ineq.value(x) - ineq.rhs);
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  return levels;
}

}  // namespace pms
