#pragma once

#include <stdexcept>
#include <string>

namespace pms {

enum class ErrorKind {
  ParseError,
  SelfLoop,
  TooLarge,
  Disconnected,
  NotBipartite,
  NotBiconnected,
  NotPseudotree,
  NotAFacet,
  DegeneratePointSet,
  InconsistentFacets,
  Unsupported,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace pms
