#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "json_io.hpp"
#include "pms/classify.hpp"
#include "pms/error.hpp"
#include "pms/matchable.hpp"
#include "pms/named_graphs.hpp"
#include "pms/oracle.hpp"
#include "pms/polytope.hpp"

namespace pms::cli {

namespace {

struct Options {
  std::string verb;
  std::string input;
  std::string edges;
  std::string named;
  int n = -1;
  std::string format = "json";
  int max_n = 6;
  int k = 2;
  std::string lattice = "polytope";
  std::string family = "all";
  long seed = 0;  // reserved: every computation is deterministic
  bool timing = false;
};

std::string read_all(std::istream& in) {
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

// "1-2,2-3" (1-based); --n adds isolated vertices.
Graph parse_inline_edges(const std::string& spec, int n) {
  std::string text;
  if (n >= 0) text += "n " + std::to_string(n) + "\n";
  std::stringstream in(spec);
  std::string pair;
  while (std::getline(in, pair, ',')) {
    if (pair.empty()) continue;
    auto dash = pair.find('-');
    if (dash == std::string::npos || dash == 0 || dash + 1 == pair.size()) {
      throw Error(ErrorKind::ParseError, "inline edge '" + pair + "' is not of the form u-v");
    }
    text += pair.substr(0, dash) + " " + pair.substr(dash + 1) + "\n";
  }
  return parse_graph(text);
}

Graph resolve_graph(const Options& opt) {
  int sources = !opt.input.empty() + !opt.edges.empty() + !opt.named.empty();
  if (sources != 1) {
    throw CLI::ValidationError("graph", "give exactly one of --input, --edges, --named");
  }
  if (!opt.edges.empty()) return parse_inline_edges(opt.edges, opt.n);
  if (!opt.named.empty()) {
    auto g = named::by_name(opt.named);
    if (!g) throw Error(ErrorKind::ParseError, "unknown graph name '" + opt.named + "'");
    return *g;
  }
  if (opt.input == "-") return load_graph(read_all(std::cin));
  std::ifstream file(opt.input, std::ios::binary);
  if (!file) throw Error(ErrorKind::ParseError, "cannot read '" + opt.input + "'");
  return load_graph(read_all(file));
}

std::string vec_text(const IntVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + ")";
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

void print_verdict_text(std::ostream& out, const Verdict& v, const std::string& indent = "") {
  out << indent << to_string(v.property) << ": " << bool_text(v.value) << " ["
      << to_string(v.method) << (v.hypothesis_ok ? "" : ", hypothesis not met") << "]\n";
  if (v.witness) {
    out << indent << "  " << (v.value ? "case" : "witness") << ": "
        << v.witness->description << "\n";
  }
  if (v.certificate) {
    if (v.certificate->delta) {
      out << indent << "  δ = " << *v.certificate->delta << "\n";
      if (v.certificate->alpha_ambient)
        out << indent << "  α = " << vec_text(*v.certificate->alpha_ambient) << "\n";
      out << indent << "  α (lattice coordinates) = "
          << vec_text(v.certificate->alpha_normalized) << "\n";
    } else {
      out << indent << "  δ not applicable (single point)\n";
    }
  }
  if (v.polytope_only) {
    out << indent << "  note: statement about the polytope; ring equivalence needs normality\n";
  }
}

int verdict_exit(const Verdict& v) { return v.value ? kOk : kFalse; }

Verdict gorenstein_any(const Graph& g) {
  auto comps = connected_components(g);
  if (comps.size() == 1) return gorenstein_dispatch(g);
  std::vector<Verdict> verdicts;
  for (VertexSet c : comps) verdicts.push_back(gorenstein_dispatch(induced_subgraph(g, c).graph));
  return combine_gorenstein(g, comps, verdicts);
}

int cmd_points(const Options& opt, const Graph& g, std::ostream& out) {
  PointSet pts = lattice_points(g);
  if (opt.format == "text") {
    out << pts.points.size() << " lattice points in Z^" << g.n() << "\n";
    for (const auto& p : pts.points) out << vec_text(p) << "\n";
    return kOk;
  }
  json doc{{"verb", "points"}, {"graph", graph_to_json(g)}, {"count", pts.points.size()},
           {"points", pts.points}};
  out << doc.dump(2) << "\n";
  return kOk;
}

int cmd_facets(const Options& opt, const Graph& g, std::ostream& out) {
  auto sys = inequality_system(g);
  const int d = dimension(g);
  if (opt.format == "text") {
    out << "dimension " << d << ", " << sys.size() << " inequalities\n";
    for (const auto& ineq : sys) {
      out << (ineq.facet ? "facet     " : "non-facet ") << ineq.to_string() << "   ["
          << ineq.source.to_string() << "]\n";
    }
    return kOk;
  }
  json list = json::array();
  for (const auto& ineq : sys) list.push_back(inequality_to_json(ineq));
  json doc{{"verb", "facets"}, {"graph", graph_to_json(g)}, {"dimension", d},
           {"inequalities", std::move(list)}};
  out << doc.dump(2) << "\n";
  return kOk;
}

int cmd_dim(const Options& opt, const Graph& g, std::ostream& out) {
  const int d = dimension(g);
  const auto comps = connected_components(g);
  int bipartite = 0;
  for (VertexSet c : comps) bipartite += is_bipartite_within(g, c) ? 1 : 0;
  std::optional<int> rank;
  if (g.n() <= kMaxEnumerationVertices) rank = dimension_by_rank(g);
  if (opt.format == "text") {
    out << "dim P_G = " << d << " (n = " << g.n() << ", " << bipartite
        << " bipartite component(s) of " << comps.size() << ")\n";
    if (rank) out << "affine rank of the lattice points = " << *rank << "\n";
    return kOk;
  }
  json doc{{"verb", "dim"},
           {"graph", graph_to_json(g)},
           {"dimension", d},
           {"components", comps.size()},
           {"bipartite_components", bipartite},
           {"affine_rank", rank ? json(*rank) : json(nullptr)}};
  out << doc.dump(2) << "\n";
  return kOk;
}

int cmd_matchable(const Options& opt, const Graph& g, std::ostream& out) {
  MatchableFamily family = matchable_subsets(g);
  if (opt.format == "text") {
    out << "|W(G)| = " << family.subsets.size() << "\n";
    for (VertexSet s : family.subsets) out << s.to_string() << "\n";
    return kOk;
  }
  json subsets = json::array();
  for (VertexSet s : family.subsets) subsets.push_back(labels_to_json(s));
  json doc{{"verb", "matchable"}, {"graph", graph_to_json(g)},
           {"count", family.subsets.size()}, {"subsets", std::move(subsets)}};
  out << doc.dump(2) << "\n";
  return kOk;
}

int cmd_check_compressed(const Options& opt, const Graph& g, std::ostream& out) {
  Verdict v = compressed_by_theorem(g);
  std::optional<SullivantResult> oracle;
  if (is_connected(g) && g.n() <= kMaxSullivantVertices) oracle = sullivant_compressed(g);
  if (opt.format == "text") {
    print_verdict_text(out, v);
    if (oracle) {
      out << "two-level check: " << bool_text(oracle->compressed) << " ("
          << oracle->facets_checked << " facets)\n";
      if (oracle->witness) {
        out << "  facet " << oracle->witness->facet.to_string() << " takes levels";
        for (auto l : oracle->witness->levels) out << " " << l;
        out << "\n";
      }
    }
    return verdict_exit(v);
  }
  json oracle_json = nullptr;
  if (oracle) {
    json witness = nullptr;
    if (oracle->witness) {
      json realizing = json::array();
      for (VertexSet s : oracle->witness->realizing) realizing.push_back(labels_to_json(s));
      witness = {{"facet", inequality_to_json(oracle->witness->facet)},
                 {"levels", oracle->witness->levels},
                 {"realizing", std::move(realizing)}};
    }
    oracle_json = {{"compressed", oracle->compressed},
                   {"facets_checked", oracle->facets_checked},
                   {"witness", std::move(witness)}};
  }
  json doc{{"verb", "check-compressed"}, {"graph", graph_to_json(g)},
           {"verdict", verdict_to_json(v)}, {"oracle", std::move(oracle_json)}};
  out << doc.dump(2) << "\n";
  return verdict_exit(v);
}

int cmd_check_gorenstein(const Options& opt, const Graph& g, std::ostream& out) {
  Verdict v = gorenstein_any(g);
  if (opt.format == "text") {
    print_verdict_text(out, v);
    return verdict_exit(v);
  }
  json doc{{"verb", "check-gorenstein"}, {"graph", graph_to_json(g)},
           {"verdict", verdict_to_json(v)}};
  out << doc.dump(2) << "\n";
  return verdict_exit(v);
}

int cmd_check_normal(const Options& opt, const Graph& g, std::ostream& out) {
  if (opt.lattice != "polytope" && opt.lattice != "integer") {
    throw CLI::ValidationError("--lattice", "must be 'polytope' or 'integer'");
  }
  const DilateLattice lattice =
      opt.lattice == "polytope" ? DilateLattice::Polytope : DilateLattice::Integer;
  IdpResult result = idp_check(g, opt.k, lattice);
  std::optional<Verdict> edge;
  if (is_bipartite(g) || g.n() <= kMaxOddCycleVertices) edge = odd_cycle_condition(g);
  if (opt.format == "text") {
    out << (lattice == DilateLattice::Polytope ? "normality" : "integer decomposition")
        << " at k = " << opt.k << ": " << bool_text(result.value) << " ("
        << result.dilate_points << " lattice points of kP checked)\n";
    if (result.counterexample)
      out << "  not a sum of " << opt.k << " points: " << vec_text(*result.counterexample) << "\n";
    if (edge) print_verdict_text(out, *edge);
    return result.value ? kOk : kFalse;
  }
  json doc{{"verb", "check-normal"},
           {"graph", graph_to_json(g)},
           {"k", opt.k},
           {"lattice", opt.lattice},
           {"value", result.value},
           {"dilate_points", result.dilate_points},
           {"counterexample", result.counterexample ? json(*result.counterexample) : json(nullptr)},
           {"edge_polytope", edge ? verdict_to_json(*edge) : json(nullptr)}};
  out << doc.dump(2) << "\n";
  return result.value ? kOk : kFalse;
}

int cmd_classify(const Options& opt, const Graph& g, std::ostream& out) {
  ClassifyReport report = classify_all(g);
  if (opt.format == "text") {
    out << "n = " << report.n << ", dim P_G = " << report.dimension;
    if (report.point_count) out << ", " << *report.point_count << " lattice points";
    out << "\n";
    print_verdict_text(out, report.compressed);
    print_verdict_text(out, report.gorenstein);
    if (report.edge_polytope_normal) print_verdict_text(out, *report.edge_polytope_normal);
    for (const auto& c : report.components) {
      out << "component " << c.vertices.to_string() << ": dim " << c.dimension
          << (c.bipartite ? ", bipartite" : "") << (c.pseudotree ? ", pseudotree" : "") << "\n";
      for (const auto& s : c.idp_samples) {
        out << "  normal at k = " << s.k << ": " << bool_text(s.value) << "\n";
      }
    }
    return kOk;
  }
  json doc = classify_to_json(report);
  doc = json{{"verb", "classify"}, {"graph", graph_to_json(g)}, {"report", std::move(doc)}};
  out << doc.dump(2) << "\n";
  return kOk;
}

int cmd_sweep(const Options& opt, std::ostream& out) {
  auto family = family_from_string(opt.family);
  if (!family) throw CLI::ValidationError("--family", "unknown family '" + opt.family + "'");
  CorpusSpec spec;
  spec.max_n = opt.max_n;
  spec.family = *family;
  SweepReport report = agreement_sweep(spec, opt.timing);
  if (opt.format == "text") {
    for (const auto& r : report.records) {
      if (r.agree) continue;
      out << "DISAGREE " << r.property << " on " << graph_to_json(r.graph).dump() << "\n";
    }
  } else {
    for (const auto& r : report.records) out << sweep_record_to_json(r).dump() << "\n";
  }
  json summary{{"summary",
                {{"family", opt.family},
                 {"max_n", opt.max_n},
                 {"records", report.records.size()},
                 {"disagreements", report.disagreements}}}};
  if (opt.format == "text") {
    out << report.records.size() << " comparisons, " << report.disagreements
        << " disagreements (" << opt.family << ", n <= " << opt.max_n << ")\n";
  } else {
    out << summary.dump() << "\n";
  }
  return report.disagreements == 0 ? kOk : kFalse;
}

}  // namespace

Graph load_graph(std::string_view content) {
  auto first = content.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && content[first] == '{') return graph_from_json(content);
  return parse_graph(content);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Perfectly matchable subgraph polytopes: lattice points, facets, and "
               "compressed / Gorenstein / normality decisions",
               "pmstool"};
  std::vector<std::string> verbs(std::begin(kVerbs), std::end(kVerbs));
  app.add_option("verb", opt.verb, "What to compute")
      ->required()
      ->check(CLI::IsMember(verbs));
  app.add_option("--input", opt.input, "Graph file (edge list or JSON); '-' reads stdin");
  app.add_option("--edges", opt.edges, "Inline edge list, e.g. 1-2,2-3,3-1");
  app.add_option("--n", opt.n, "Vertex count for --edges (adds isolated vertices)")
      ->check(CLI::Range(0, kMaxVertices));
  app.add_option("--named", opt.named, "Named graph: C5, P4, K4, K2,3, K1,1,3, star3, ...");
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--max-n", opt.max_n, "sweep: largest vertex count")->check(CLI::PositiveNumber);
  app.add_option("--k", opt.k, "check-normal: dilation factor")->check(CLI::PositiveNumber);
  app.add_option("--lattice", opt.lattice,
                 "check-normal: 'polytope' (normality) or 'integer' (IDP)");
  app.add_option("--family", opt.family, "sweep: all | bipartite | pseudotree | multipartite");
  app.add_option("--seed", opt.seed, "Reserved; all computations are deterministic");
  app.add_flag("--timing", opt.timing, "sweep: record per-comparison microseconds");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "pmstool: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (opt.verb == "sweep") return cmd_sweep(opt, out);
    const Graph g = resolve_graph(opt);
    if (opt.verb == "points") return cmd_points(opt, g, out);
    if (opt.verb == "facets") return cmd_facets(opt, g, out);
    if (opt.verb == "dim") return cmd_dim(opt, g, out);
    if (opt.verb == "matchable") return cmd_matchable(opt, g, out);
    if (opt.verb == "check-compressed") return cmd_check_compressed(opt, g, out);
    if (opt.verb == "check-gorenstein") return cmd_check_gorenstein(opt, g, out);
    if (opt.verb == "check-normal") return cmd_check_normal(opt, g, out);
    if (opt.verb == "classify") return cmd_classify(opt, g, out);
  } catch (const CLI::Error& e) {
    err << "pmstool: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "pmstool: " << e.what() << "\n";
    return e.kind() == ErrorKind::TooLarge ? kBudget : kUsage;
  }
  err << "pmstool: unhandled verb " << opt.verb << "\n";
  return kUsage;
}

}  // namespace pms::cli
