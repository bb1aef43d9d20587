#include "json_io.hpp"

#include "pms/error.hpp"

namespace pms::cli {

namespace {

json optional_certificate(const std::optional<GorensteinCertificate>& cert) {
  return cert ? certificate_to_json(*cert) : json(nullptr);
}

json idp_lattice_name(DilateLattice lattice) {
  return lattice == DilateLattice::Polytope ? "polytope" : "integer";
}

}  // namespace

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (Edge e : g.edges()) edges.push_back({e.u + 1, e.v + 1});
  return {{"n", g.n()}, {"edges", std::move(edges)}};
}

Graph graph_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("edges") || !doc["edges"].is_array()) {
    throw Error(ErrorKind::ParseError, "JSON graph needs an \"edges\" array");
  }
  long n = 0;
  if (doc.contains("n")) {
    if (!doc["n"].is_number_integer() || doc["n"].get<long>() < 0) {
      throw Error(ErrorKind::ParseError, "\"n\" must be a non-negative integer");
    }
    n = doc["n"].get<long>();
  }
  std::vector<std::pair<long, long>> pairs;
  long max_label = 0;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer()) {
      throw Error(ErrorKind::ParseError, "each edge must be a pair of integers");
    }
    long u = e[0].get<long>();
    long v = e[1].get<long>();
    if (u < 1 || v < 1) throw Error(ErrorKind::ParseError, "labels must be >= 1");
    if (u == v) throw Error(ErrorKind::SelfLoop, "self-loop at " + std::to_string(u));
    max_label = std::max({max_label, u, v});
    pairs.emplace_back(u, v);
  }
  if (!doc.contains("n")) n = max_label;
  if (n < max_label) throw Error(ErrorKind::ParseError, "edge label exceeds \"n\"");
  if (n > kMaxVertices) {
    throw Error(ErrorKind::TooLarge, "graphs are limited to " +
                                         std::to_string(kMaxVertices) + " vertices");
  }
  std::vector<Edge> edges;
  for (auto [u, v] : pairs) edges.push_back({static_cast<int>(u - 1), static_cast<int>(v - 1)});
  return Graph(static_cast<int>(n), edges);
}

json labels_to_json(VertexSet s) { return s.labels(); }

json certificate_to_json(const GorensteinCertificate& cert) {
  json out;
  out["delta"] = cert.delta ? json(*cert.delta) : json(nullptr);
  out["alpha_normalized"] = cert.alpha_normalized;
  out["alpha_ambient"] = cert.alpha_ambient ? json(*cert.alpha_ambient) : json(nullptr);
  return out;
}

json witness_to_json(const Witness& w) {
  json sets = json::array();
  for (VertexSet s : w.sets) sets.push_back(labels_to_json(s));
  json vertices = json::array();
  for (int v : w.vertices) vertices.push_back(v + 1);
  return {{"kind", to_string(w.kind)},
          {"description", w.description},
          {"sets", std::move(sets)},
          {"vertices", std::move(vertices)},
          {"values", w.values}};
}

json verdict_to_json(const Verdict& v) {
  return {{"property", to_string(v.property)},
          {"value", v.value},
          {"method", to_string(v.method)},
          {"hypothesis_ok", v.hypothesis_ok},
          {"witness", v.witness ? witness_to_json(*v.witness) : json(nullptr)},
          {"certificate", optional_certificate(v.certificate)},
          {"polytope_only", v.polytope_only}};
}

json inequality_to_json(const AffineInequality& ineq) {
  return {{"a", ineq.normal},
          {"b", ineq.rhs},
          {"facet", ineq.facet},
          {"source", ineq.source.to_string()}};
}

json classify_to_json(const ClassifyReport& report) {
  json components = json::array();
  for (const auto& c : report.components) {
    json idp = json::array();
    for (const auto& s : c.idp_samples)
      idp.push_back({{"k", s.k}, {"lattice", idp_lattice_name(s.lattice)}, {"value", s.value}});
    components.push_back(
        {{"vertices", labels_to_json(c.vertices)},
         {"dimension", c.dimension},
         {"point_count", c.point_count ? json(*c.point_count) : json(nullptr)},
         {"bipartite", c.bipartite},
         {"pseudotree", c.pseudotree},
         {"multipartite_shape",
          c.multipartite_shape ? json(*c.multipartite_shape) : json(nullptr)},
         {"compressed", verdict_to_json(c.compressed)},
         {"gorenstein", verdict_to_json(c.gorenstein)},
         {"idp_samples", std::move(idp)}});
  }
  return {{"n", report.n},
          {"dimension", report.dimension},
          {"point_count", report.point_count ? json(*report.point_count) : json(nullptr)},
          {"compressed", verdict_to_json(report.compressed)},
          {"gorenstein", verdict_to_json(report.gorenstein)},
          {"edge_polytope_normal", report.edge_polytope_normal
                                       ? verdict_to_json(*report.edge_polytope_normal)
                                       : json(nullptr)},
          {"components", std::move(components)}};
}

json sweep_record_to_json(const SweepRecord& r) {
  auto opt = [](const std::optional<std::int64_t>& x) { return x ? json(*x) : json(nullptr); };
  return {{"graph", graph_to_json(r.graph)},
          {"property", r.property},
          {"theorem_value", r.theorem_value},
          {"oracle_value", r.oracle_value},
          {"theorem_delta", opt(r.theorem_delta)},
          {"oracle_delta", opt(r.oracle_delta)},
          {"agree", r.agree},
          {"micros", opt(r.micros)}};
}

}  // namespace pms::cli
