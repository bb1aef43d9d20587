#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pms/graph.hpp"
#include "pms/polytope.hpp"
#include "pms/vertex_set.hpp"

namespace pms {

enum class Property { Compressed, Gorenstein, EdgePolytopeNormal };

// Which characterization produced a verdict.
enum class Method {
  BlockStructure,        // blocks complete bipartite, at most one K4 / K_{1,1,q}
  BipartiteIndexTwo,     // perfect matching and |Γ(S)| = |S| + 1 on facet sets
  AlphaSystem,           // linear conditions on (delta, alpha) for bipartite graphs
  PseudotreeDegrees,     // degree patterns of pseudotrees
  MultipartiteTable,     // complete (multi)partite families
  OddCycleCondition,     // edge polytope normality
  Geometric,             // reflexive-translate search on the normalized polytope
  Product,               // conjunction over connected components
};

const char* to_string(Property p) noexcept;
const char* to_string(Method m) noexcept;

struct Witness {
  enum class Kind {
    NoPerfectMatching,
    SubsetCondition,         // sets = {S, Γ(S)}
    NonCompleteBipartiteBlock,
    SecondExceptionalBlock,  // sets = {first, second}
    DegreeCondition,         // vertices = {v}, values = {degree}
    CycleCondition,          // sets = {cycle}
    MatchedCase,
    OddCyclePair,            // sets = {C1, C2}
    NoReflexiveTranslate,
    IndexMismatch,           // sets = components, values = indices
    ComponentFails,          // sets = {component}
  };

  Kind kind = Kind::MatchedCase;
  std::string description;
  std::vector<VertexSet> sets;
  std::vector<int> vertices;           // 0-based
  std::vector<std::int64_t> values;
};

const char* to_string(Witness::Kind k) noexcept;

struct Verdict {
  Property property = Property::Compressed;
  bool value = false;
  Method method = Method::Geometric;
  // False when the characterization's hypothesis did not hold and a more
  // general procedure decided instead.
  bool hypothesis_ok = true;
  std::optional<Witness> witness;
  std::optional<GorensteinCertificate> certificate;
  // Set when a Gorenstein verdict concerns the polytope only: the toric ring
  // agrees with it once normality is known, which is not established here.
  bool polytope_only = false;
};

// Per connected component: all blocks complete bipartite except at most one
// K4 or K_{1,1,q}.
Verdict compressed_by_theorem(const Graph& g);

// Connected bipartite g. With a non-cut vertex of degree >= 2: Gorenstein iff
// a perfect matching exists and |Γ(S)| = |S| + 1 for every facet set S.
// Otherwise defers to alpha_system_solve (hypothesis_ok = false).
Verdict gorenstein_bipartite(const Graph& g);

// Connected bipartite g: smallest delta admitting alpha with
// alpha(V1) = alpha(V2), alpha = 1 on non-cut vertices, alpha = delta - 1 on
// vertices of degree >= 2, alpha(S) - alpha(Γ(S)) = -1 on facet sets S.
std::optional<GorensteinCertificate> alpha_system_solve(const Graph& g);

// Connected pseudotree: K1, K2, bidegreed tree; C5; triangle with degrees in
// {2,3} on and {1,3} off the cycle; even cycle with degree delta on and
// {1, delta-1} off the cycle.
Verdict gorenstein_pseudotree(const Graph& g);

// Part sizes (sorted ascending) if g is complete multipartite with >= 2 parts.
std::optional<std::vector<int>> complete_multipartite_shape(const Graph& g);

// K_{p,q}: p = 1 or p = q. K_{1,1,q}: q <= 2. K_n: n <= 4. Other shapes
// throw Unsupported.
Verdict gorenstein_complete_multipartite(std::vector<int> shape);

inline constexpr int kMaxOddCycleVertices = 16;

// Every two vertex-disjoint odd cycles in one component are joined by an edge.
Verdict odd_cycle_condition(const Graph& g);

// Gorenstein decision for one connected graph using the most specific
// applicable characterization, falling back to the geometric search.
Verdict gorenstein_dispatch(const Graph& g);

struct IdpSample {
  int k = 0;
  DilateLattice lattice = DilateLattice::Polytope;
  bool value = false;
};

struct ComponentReport {
  VertexSet vertices;
  int dimension = 0;
  std::optional<std::size_t> point_count;
  bool bipartite = false;
  bool pseudotree = false;
  std::optional<std::vector<int>> multipartite_shape;
  Verdict compressed;
  Verdict gorenstein;
  std::vector<IdpSample> idp_samples;
};

struct ClassifyReport {
  int n = 0;
  int dimension = 0;
  std::optional<std::size_t> point_count;
  Verdict compressed;
  Verdict gorenstein;
  std::optional<Verdict> edge_polytope_normal;
  std::vector<ComponentReport> components;
};

ClassifyReport classify_all(const Graph& g);

// Product rule for Gorenstein: every positive-dimensional component must be
// Gorenstein, all with the same index.
Verdict combine_gorenstein(const Graph& g, const std::vector<VertexSet>& components,
                           const std::vector<Verdict>& verdicts);

}  // namespace pms
