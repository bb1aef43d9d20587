#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pms/graph.hpp"
#include "pms/integer_linalg.hpp"
#include "pms/vertex_set.hpp"

namespace pms {

// Lattice spanned by the point differences. The origin is rho(empty set) = 0,
// so the affine lattice is the linear lattice spanned by the points.
struct AffineLattice {
  IntVec origin;
  HermiteBasis basis;

  int rank() const { return basis.rank(); }
  bool contains(const IntVec& x) const;
};

// Lattice points rho(S) of P_G, one per perfectly matchable subset S, in the
// canonical (cardinality, bit pattern) order of the subsets.
struct PointSet {
  int ambient_n = 0;
  std::vector<VertexSet> subsets;
  std::vector<IntVec> points;
  AffineLattice affine_lattice;
};

PointSet lattice_points(const Graph& g);
// Builds the point set of an explicit subset family (used by the oracles).
PointSet point_set_from(int n, std::vector<VertexSet> subsets);

// n minus the number of bipartite components (isolated vertices included).
int dimension(const Graph& g);
// Affine rank of lattice_points(g); enumeration budget applies.
int dimension_by_rank(const Graph& g);

enum class SourceKind { NonNeg, UpperOne, BipartiteCut, OddSet, Balance };

struct InequalitySource {
  SourceKind kind = SourceKind::NonNeg;
  int vertex = -1;     // NonNeg, UpperOne
  VertexSet set;       // BipartiteCut, OddSet (S); Balance (V1)
  VertexSet other;     // Balance (V2)
  int direction = 0;   // Balance: +1 for x(V1) - x(V2) <= 0, -1 for reverse

  std::string to_string() const;
};

// normal . x <= rhs
struct AffineInequality {
  IntVec normal;
  std::int64_t rhs = 0;
  bool facet = false;
  InequalitySource source;

  std::int64_t value(const IntVec& x) const { return dot(normal, x); }
  std::string to_string() const;
};

// Complete linear description of P_G, facet flags set from the graph-theoretic
// facet criteria. Disconnected graphs get the union of the component systems.
std::vector<AffineInequality> inequality_system(const Graph& g);

// Facet iff the points attaining equality form a proper nonempty subset
// whose affine hull has dimension dim - 1.
bool is_facet_by_rank(const AffineInequality& ineq, const PointSet& pts, int dim);

struct FacetReport {
  std::vector<bool> geometric;              // rank-based status per inequality
  std::vector<std::size_t> disagreements;   // indices where flag != geometric
  bool ok() const { return disagreements.empty(); }
};

FacetReport verify_facet_flags(const Graph& g,
                               const std::vector<AffineInequality>& sys,
                               const PointSet& pts);

// x = origin + y * basis; basis restricted to the pivot columns is triangular.
struct LatticeMap {
  IntVec origin;
  std::vector<IntVec> basis;
  std::vector<int> pivots;

  IntVec to_ambient(const IntVec& y) const;
  std::optional<IntVec> to_local(const IntVec& x) const;
};

struct NormalizedFacet {
  IntVec normal;
  std::int64_t rhs = 0;
  friend auto operator<=>(const NormalizedFacet&, const NormalizedFacet&) = default;
};

// Full-dimensional lattice polytope in Z^dim, unimodularly equivalent to P_G.
struct NormalizedPolytope {
  int dim = 0;
  std::vector<IntVec> points;
  std::vector<NormalizedFacet> facets;  // primitive, sorted, irredundant
  LatticeMap map;
};

// Drops the coordinate of the highest-label vertex (placed in V2) and
// substitutes x_n = x(V1) - x(V2 \ {n}) into the facet inequalities.
NormalizedPolytope psi_project(const Graph& g, const PointSet& pts);
// General change of coordinates onto the lattice spanned by the points.
NormalizedPolytope normalize_lattice(const PointSet& pts,
                                     const std::vector<AffineInequality>& sys);

// x satisfies every inequality of the k-th dilate of a complete description.
bool membership(const std::vector<AffineInequality>& sys, const IntVec& x,
                std::int64_t k);

inline constexpr int kMaxIdpVertices = 10;
inline constexpr int kMaxIdpDilate = 3;

enum class DilateLattice {
  Polytope,  // lattice spanned by the points (normality)
  Integer,   // Z^n (integer decomposition property)
};

struct IdpResult {
  bool value = true;
  std::optional<IntVec> counterexample;
  std::size_t dilate_points = 0;  // lattice points of the k-th dilate checked
};

// Every lattice point of kP (in the chosen lattice) is a sum of k points of P.
IdpResult idp_check(const Graph& g, int k, DilateLattice lattice);

struct GorensteinCertificate {
  std::optional<int> delta;   // absent for a single point (dimension 0)
  IntVec alpha_normalized;
  std::optional<IntVec> alpha_ambient;
};

// delta P - alpha is reflexive iff every facet of delta P sits at lattice
// distance one from alpha: delta * b - a . alpha = 1 for each facet (a, b).
std::optional<GorensteinCertificate> reflexive_translate(
    const NormalizedPolytope& p, int delta_bound);

// Searches delta = 1..delta_bound (default and cap: dim + 1).
std::optional<GorensteinCertificate> gorenstein_geometric(
    const Graph& g, std::optional<int> delta_bound = std::nullopt);

// Sorted distinct values of a . x - b over the points.
std::vector<std::int64_t> facet_levels(const PointSet& pts,
                                       const AffineInequality& ineq);

}  // namespace pms
