#pragma once

#include <string_view>

#include <nlohmann/json.hpp>

#include "pms/classify.hpp"
#include "pms/graph.hpp"
#include "pms/oracle.hpp"
#include "pms/polytope.hpp"

namespace pms::cli {

using json = nlohmann::ordered_json;

// {"n": int, "edges": [[u, v], ...]} with 1-based labels.
json graph_to_json(const Graph& g);
Graph graph_from_json(std::string_view text);

json labels_to_json(VertexSet s);
json certificate_to_json(const GorensteinCertificate& cert);
json witness_to_json(const Witness& w);
json verdict_to_json(const Verdict& v);
json inequality_to_json(const AffineInequality& ineq);
json classify_to_json(const ClassifyReport& report);
json sweep_record_to_json(const SweepRecord& record);

}  // namespace pms::cli
