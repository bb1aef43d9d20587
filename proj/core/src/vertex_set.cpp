#include "pms/vertex_set.hpp"

#include "pms/error.hpp"

namespace pms {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::NotBipartite: return "NotBipartite";
    case ErrorKind::NotBiconnected: return "NotBiconnected";
    case ErrorKind::NotPseudotree: return "NotPseudotree";
    case ErrorKind::NotAFacet: return "NotAFacet";
    case ErrorKind::DegeneratePointSet: return "DegeneratePointSet";
    case ErrorKind::InconsistentFacets: return "InconsistentFacets";
    case ErrorKind::Unsupported: return "Unsupported";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind) {}

VertexSet VertexSet::from_members(int universe,
                                  const std::vector<int>& members) {
  VertexSet s(universe, 0);
  for (int v : members) s.insert(v);
  return s;
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(size());
  for_each([&](int v) { out.push_back(v); });
  return out;
}

std::vector<int> VertexSet::labels() const {
  std::vector<int> out;
  out.reserve(size());
  for_each([&](int v) { out.push_back(v + 1); });
  return out;
}

std::string VertexSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for_each([&](int v) {
    if (!first) out += ',';
    out += std::to_string(v + 1);
    first = false;
  });
  return out + "}";
}

}  // namespace pms
