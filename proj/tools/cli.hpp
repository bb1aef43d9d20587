#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "pms/graph.hpp"

namespace pms::cli {

// Exit status convention shared by every verb.
enum ExitCode : int {
  kOk = 0,         // property true / computation succeeded
  kFalse = 1,      // property false, witness printed
  kUsage = 2,      // usage or input error
  kBudget = 3,     // an enumeration budget was exceeded
};

inline constexpr const char* kVerbs[] = {
    "points",           "facets",          "dim",
    "matchable",        "check-compressed", "check-gorenstein",
    "check-normal",     "classify",        "sweep"};

// Edge-list text or a JSON object, detected by the first non-blank character.
Graph load_graph(std::string_view content);

// args excludes the program name. Results go to out, diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace pms::cli
