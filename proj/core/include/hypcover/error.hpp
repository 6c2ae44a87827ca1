#pragma once

#include <stdexcept>
#include <string>

namespace hypcover {

enum class Errc {
  ZeroVector,
  NonProperPoint,
  DomainError,
  DegeneratePlane,
  Inadmissible,
  EmbeddingFailure,
  DegenerateTriangle,
  NegativeHeight,
  NoFeasiblePoint,
  NoRoot,
  NoIntersection,
  NotACovering,
  InvalidArgument,
};

const char* to_string(Errc code) noexcept;

/// Single exception type for the library; `code()` tells callers which
/// precondition or numerical check failed.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace hypcover
