#include "pms/classify.hpp"

#include <algorithm>
#include <set>

#include "pms/error.hpp"
#include "pms/matchable.hpp"

namespace pms {

const char* to_string(Property p) noexcept {
  switch (p) {
    case Property::Compressed: return "compressed";
    case Property::Gorenstein: return "gorenstein";
    case Property::EdgePolytopeNormal: return "edge-polytope-normal";
  }
  return "?";
}

const char* to_string(Method m) noexcept {
  switch (m) {
    case Method::BlockStructure: return "block-structure";
    case Method::BipartiteIndexTwo: return "bipartite-index-two";
    case Method::AlphaSystem: return "alpha-system";
    case Method::PseudotreeDegrees: return "pseudotree-degrees";
    case Method::MultipartiteTable: return "complete-multipartite";
    case Method::OddCycleCondition: return "odd-cycle-condition";
    case Method::Geometric: return "geometric";
    case Method::Product: return "product";
  }
  return "?";
}

const char* to_string(Witness::Kind k) noexcept {
  using K = Witness::Kind;
  switch (k) {
    case K::NoPerfectMatching: return "no-perfect-matching";
    case K::SubsetCondition: return "subset-condition";
    case K::NonCompleteBipartiteBlock: return "non-complete-bipartite-block";
    case K::SecondExceptionalBlock: return "second-exceptional-block";
    case K::DegreeCondition: return "degree-condition";
    case K::CycleCondition: return "cycle-condition";
    case K::MatchedCase: return "matched-case";
    case K::OddCyclePair: return "odd-cycle-pair";
    case K::NoReflexiveTranslate: return "no-reflexive-translate";
    case K::IndexMismatch: return "index-mismatch";
    case K::ComponentFails: return "component-fails";
  }
  return "?";
}

namespace {

Verdict make_verdict(Property p, Method m, bool value) {
  Verdict v;
  v.property = p;
  v.method = m;
  v.value = value;
  return v;
}

// Lifts a certificate of G[c] (local labels) into the ambient coordinates.
void lift_alpha(const GorensteinCertificate& local, VertexSet c, IntVec& ambient) {
  if (!local.alpha_ambient) return;
  std::vector<int> members = c.members();
  for (std::size_t i = 0; i < members.size(); ++i)
    ambient[members[i]] = (*local.alpha_ambient)[i];
}

}  // namespace

Verdict compressed_by_theorem(const Graph& g) {
  Verdict v = make_verdict(Property::Compressed, Method::BlockStructure, true);
  BlockDecomposition dec = blocks_and_cut_vertices(g);
  for (VertexSet comp : connected_components(g)) {
    const Block* exceptional = nullptr;
    for (const Block& block : dec.blocks) {
      if (!block.vertices.is_subset_of(comp)) continue;
      if (block.kind.tag == BlockKind::Tag::CompleteBipartite) continue;
      if (block.kind.tag == BlockKind::Tag::Other) {
        Witness w;
        w.kind = Witness::Kind::NonCompleteBipartiteBlock;
        w.sets = {block.vertices};
        w.description = "block " + block.vertices.to_string() +
                        " is neither complete bipartite nor K4 nor K_{1,1,q}";
        v.value = false;
        v.witness = std::move(w);
        return v;
      }
      if (exceptional != nullptr) {
        Witness w;
        w.kind = Witness::Kind::SecondExceptionalBlock;
        w.sets = {exceptional->vertices, block.vertices};
        w.description = "two non-bipartite blocks in one component: " +
                        exceptional->kind.to_string() + " on " +
                        exceptional->vertices.to_string() + " and " +
                        block.kind.to_string() + " on " + block.vertices.to_string();
        v.value = false;
        v.witness = std::move(w);
        return v;
      }
      exceptional = &block;
    }
  }
  return v;
}

std::optional<std::vector<int>> complete_multipartite_shape(const Graph& g) {
  const int n = g.n();
  if (n < 2) return std::nullopt;
  std::vector<int> part(n, -1);
  std::vector<int> sizes;
  for (int v = 0; v < n; ++v) {
    if (part[v] >= 0) continue;
    // The part of v is its set of non-neighbours; all must share v's neighbourhood.
    std::uint64_t members = ~g.adjacency(v) & g.vertices().bits();
    int id = static_cast<int>(sizes.size());
    sizes.push_back(0);
    for (std::uint64_t b = members; b != 0; b &= b - 1) {
      int u = std::countr_zero(b);
      if (g.adjacency(u) != g.adjacency(v) || part[u] >= 0) return std::nullopt;
      part[u] = id;
      ++sizes[id];
    }
  }
  if (sizes.size() < 2) return std::nullopt;
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

Verdict gorenstein_complete_multipartite(std::vector<int> shape) {
  std::sort(shape.begin(), shape.end());
  Verdict v = make_verdict(Property::Gorenstein, Method::MultipartiteTable, false);
  auto shape_name = [&] {
    std::string s = "K_{";
    for (std::size_t i = 0; i < shape.size(); ++i)
      s += (i ? "," : "") + std::to_string(shape[i]);
    return s + "}";
  };
  auto fail = [&](const std::string& why) {
    Witness w;
    w.kind = Witness::Kind::MatchedCase;
    w.values.assign(shape.begin(), shape.end());
    w.description = shape_name() + ": " + why;
    v.witness = std::move(w);
    return v;
  };
  const bool all_ones = std::all_of(shape.begin(), shape.end(), [](int s) { return s == 1; });
  if (all_ones && shape.size() >= 2) {
    v.value = shape.size() <= 4;
    if (!v.value) return fail("complete graph on more than 4 vertices");
    return v;
  }
  if (shape.size() == 2) {
    v.value = shape[0] == 1 || shape[0] == shape[1];
    if (!v.value) return fail("complete bipartite with 1 < p < q");
    return v;
  }
  if (shape.size() == 3 && shape[0] == 1 && shape[1] == 1) {
    v.value = shape[2] <= 2;
    if (!v.value) return fail("K_{1,1,q} with q > 2");
    return v;
  }
  throw Error(ErrorKind::Unsupported,
              shape_name() + " is outside the characterized complete multipartite families");
}

Verdict odd_cycle_condition(const Graph& g) {
  Verdict v = make_verdict(Property::EdgePolytopeNormal, Method::OddCycleCondition, true);
  if (is_bipartite(g)) return v;
  if (g.n() > kMaxOddCycleVertices) {
    throw Error(ErrorKind::TooLarge, "odd cycle pairs are enumerated for n <= " +
                                         std::to_string(kMaxOddCycleVertices));
  }
  // Induced odd cycles suffice: every odd cycle's vertex set contains one.
  std::vector<VertexSet> cycles;
  const std::uint64_t total = std::uint64_t{1} << g.n();
  for (std::uint64_t bits = 1; bits < total; ++bits) {
    const int size = std::popcount(bits);
    if (size < 3 || size % 2 == 0) continue;
    bool two_regular = true;
    for (std::uint64_t b = bits; b != 0 && two_regular; b &= b - 1)
      two_regular = std::popcount(g.adjacency(std::countr_zero(b)) & bits) == 2;
    VertexSet s(g.n(), bits);
    if (two_regular && is_connected_within(g, s)) cycles.push_back(s);
  }
  std::sort(cycles.begin(), cycles.end());
  const auto comps = connected_components(g);
  auto component_of = [&](VertexSet s) {
    for (std::size_t i = 0; i < comps.size(); ++i)
      if (comps[i].contains(s.min())) return i;
    return comps.size();
  };
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    for (std::size_t j = i + 1; j < cycles.size(); ++j) {
      VertexSet a = cycles[i];
      VertexSet b = cycles[j];
      if (!(a & b).empty() || component_of(a) != component_of(b)) continue;
      if (!(neighborhood(g, a) & b).empty()) continue;
      Witness w;
      w.kind = Witness::Kind::OddCyclePair;
      w.sets = {a, b};
      w.description = "odd cycles " + a.to_string() + " and " + b.to_string() +
                      " are disjoint with no edge between them";
      v.value = false;
      v.witness = std::move(w);
      return v;
    }
  }
  return v;
}

Verdict gorenstein_dispatch(const Graph& g) {
  if (!is_connected(g)) throw Error(ErrorKind::Disconnected, "dispatch runs per component");
  if (g.num_edges() <= g.n()) return gorenstein_pseudotree(g);
  if (is_bipartite(g)) return gorenstein_bipartite(g);
  std::string note;
  if (auto shape = complete_multipartite_shape(g)) {
    try {
      return gorenstein_complete_multipartite(*shape);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Unsupported) throw;
      note = "complete multipartite shape outside the characterized families; ";
    }
  }
  if (g.n() > kMaxEnumerationVertices) {
    throw Error(ErrorKind::TooLarge, "no characterization applies and the geometric "
                                     "search is limited to " +
                                         std::to_string(kMaxEnumerationVertices) +
                                         " vertices");
  }
  Verdict v = make_verdict(Property::Gorenstein, Method::Geometric, false);
  v.hypothesis_ok = false;
  // Compressed polytopes are normal, so the ring statement follows for them.
  v.polytope_only = !compressed_by_theorem(g).value;
  if (auto cert = gorenstein_geometric(g)) {
    v.value = true;
    v.certificate = std::move(cert);
    if (!note.empty()) {
      Witness w;
      w.kind = Witness::Kind::MatchedCase;
      w.description = note + "decided geometrically";
      v.witness = std::move(w);
    }
  } else {
    Witness w;
    w.kind = Witness::Kind::NoReflexiveTranslate;
    w.description = note + "no delta <= dim+1 makes every facet of delta*P lie at "
                           "lattice distance 1 from an interior point";
    v.witness = std::move(w);
  }
  return v;
}

Verdict combine_gorenstein(const Graph& g, const std::vector<VertexSet>& components,
                           const std::vector<Verdict>& verdicts) {
  Verdict v = make_verdict(Property::Gorenstein, Method::Product, true);
  for (std::size_t i = 0; i < components.size(); ++i) {
    v.polytope_only = v.polytope_only || verdicts[i].polytope_only;
    v.hypothesis_ok = v.hypothesis_ok && verdicts[i].hypothesis_ok;
    if (verdicts[i].value) continue;
    Witness w;
    w.kind = Witness::Kind::ComponentFails;
    w.sets = {components[i]};
    w.description = "component " + components[i].to_string() + " is not Gorenstein" +
                    (verdicts[i].witness ? ": " + verdicts[i].witness->description : "");
    v.value = false;
    v.witness = std::move(w);
    return v;
  }
  // Product of Gorenstein polytopes: the indices must agree.
  GorensteinCertificate cert;
  cert.alpha_ambient = IntVec(g.n(), 0);
  std::vector<VertexSet> nontrivial;
  std::vector<std::int64_t> deltas;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (components[i].size() == 1) continue;
    std::optional<GorensteinCertificate> local = verdicts[i].certificate;
    if (!local || !local->delta) {
      local = gorenstein_geometric(induced_subgraph(g, components[i]).graph);
    }
    nontrivial.push_back(components[i]);
    deltas.push_back(*local->delta);
    lift_alpha(*local, components[i], *cert.alpha_ambient);
    cert.alpha_normalized.insert(cert.alpha_normalized.end(),
                                 local->alpha_normalized.begin(),
                                 local->alpha_normalized.end());
  }
  if (deltas.empty()) {
    v.certificate = GorensteinCertificate{std::nullopt, {}, std::nullopt};
    return v;
  }
  if (std::any_of(deltas.begin(), deltas.end(), [&](auto d) { return d != deltas[0]; })) {
    Witness w;
    w.kind = Witness::Kind::IndexMismatch;
    w.sets = nontrivial;
    w.values = deltas;
    w.description = "components are Gorenstein with different indices";
    v.value = false;
    v.witness = std::move(w);
    return v;
  }
  cert.delta = static_cast<int>(deltas[0]);
  v.certificate = std::move(cert);
  return v;
}

ClassifyReport classify_all(const Graph& g) {
  ClassifyReport report;
  report.n = g.n();
  report.dimension = dimension(g);
  if (g.n() <= kMaxEnumerationVertices)
    report.point_count = matchable_subsets(g).subsets.size();
  report.compressed = compressed_by_theorem(g);
  if (is_bipartite(g) || g.n() <= kMaxOddCycleVertices)
    report.edge_polytope_normal = odd_cycle_condition(g);

  std::vector<VertexSet> comps = connected_components(g);
  std::vector<Verdict> gorenstein;
  for (VertexSet c : comps) {
    InducedSubgraph sub = induced_subgraph(g, c);
    const Graph& h = sub.graph;
    ComponentReport cr;
    cr.vertices = c;
    cr.dimension = dimension(h);
    if (h.n() <= kMaxEnumerationVertices)
      cr.point_count = matchable_subsets(h).subsets.size();
    cr.bipartite = is_bipartite(h);
    cr.pseudotree = h.num_edges() <= h.n();
    cr.multipartite_shape = complete_multipartite_shape(h);
    cr.compressed = compressed_by_theorem(h);
    cr.gorenstein = gorenstein_dispatch(h);
    if (h.n() <= kMaxIdpVertices) {
      for (int k = 2; k <= (h.n() <= 8 ? 3 : 2); ++k)
        cr.idp_samples.push_back({k, DilateLattice::Polytope,
                                  idp_check(h, k, DilateLattice::Polytope).value});
    }
    gorenstein.push_back(cr.gorenstein);
    report.components.push_back(std::move(cr));
  }
  if (comps.size() == 1) {
    report.gorenstein = gorenstein.front();
  } else {
    report.gorenstein = combine_gorenstein(g, comps, gorenstein);
  }
  return report;
}

}  // namespace pms
