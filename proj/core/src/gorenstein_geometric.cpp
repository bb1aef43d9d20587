#include <algorithm>

#include "pms/error.hpp"
#include "pms/polytope.hpp"

namespace pms {

std::optional<GorensteinCertificate> reflexive_translate(
    const NormalizedPolytope& p, int delta_bound) {
  const int d = p.dim;
  if (d == 0) return GorensteinCertificate{std::nullopt, {}, std::nullopt};

  std::vector<IntVec> normals;
  normals.reserve(p.facets.size());
  for (const auto& f : p.facets) normals.push_back(f.normal);
  std::vector<std::size_t> basis_rows = independent_rows(normals);
  if (static_cast<int>(basis_rows.size()) != d) {
    throw Error(ErrorKind::InconsistentFacets,
                "facet normals do not span the normalized space");
  }
  std::sort(basis_rows.begin(), basis_rows.end());

  // On the chosen rows alpha(delta) = delta * u - w with A u = b, A w = 1.
  std::vector<IntVec> a;
  std::vector<Rational> b;
  std::vector<Rational> ones(d, Rational(1));
  for (std::size_t i : basis_rows) {
    a.push_back(p.facets[i].normal);
    b.emplace_back(p.facets[i].rhs);
  }
  auto u = solve_rational(a, b);
  auto w = solve_rational(a, ones);
  if (!u || !w) throw Error(ErrorKind::InconsistentFacets, "singular facet basis");

  for (int delta = 1; delta <= delta_bound; ++delta) {
    IntVec alpha(d);
    bool integral = true;
    for (int j = 0; j < d && integral; ++j) {
      Rational value = Rational(delta) * (*u)[j] - (*w)[j];
      if (denominator(value) != 1) {
        integral = false;
      } else {
        alpha[j] = static_cast<std::int64_t>(numerator(value));
      }
    }
    if (!integral) continue;
    bool reflexive = std::all_of(p.facets.begin(), p.facets.end(),
                                 [&](const NormalizedFacet& f) {
                                   return delta * f.rhs - dot(f.normal, alpha) == 1;
                                 });
    if (reflexive) {
      GorensteinCertificate cert;
      cert.delta = delta;
      cert.alpha_ambient = p.map.to_ambient(alpha);
      cert.alpha_normalized = std::move(alpha);
      return cert;
    }
  }
  return std::nullopt;
}

std::optional<GorensteinCertificate> gorenstein_geometric(
    const Graph& g, std::optional<int> delta_bound) {
  if (!is_connected(g)) {
    throw Error(ErrorKind::Disconnected, "the geometric check runs per connected graph");
  }
  PointSet pts = lattice_points(g);
  const int d = dimension(g);
  if (d == 0) return GorensteinCertificate{std::nullopt, {}, std::nullopt};
  auto sys = inequality_system(g);
  FacetReport report = verify_facet_flags(g, sys, pts);
  if (!report.ok()) {
    throw Error(ErrorKind::InconsistentFacets,
                "facet criterion disagrees with rank test on " +
                    sys[report.disagreements.front()].source.to_string());
  }
  NormalizedPolytope p =
      is_bipartite(g) ? psi_project(g, pts) : normalize_lattice(pts, sys);
  // The Gorenstein index of a d-dimensional lattice polytope is at most d+1.
  int bound = std::min(delta_bound.value_or(d + 1), d + 1);
  return reflexive_translate(p, bound);
}

}  // namespace pms
