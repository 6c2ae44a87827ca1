#include "hypcover/error.hpp"

namespace hypcover {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::ZeroVector: return "ZeroVector";
    case Errc::NonProperPoint: return "NonProperPoint";
    case Errc::DomainError: return "DomainError";
    case Errc::DegeneratePlane: return "DegeneratePlane";
    case Errc::Inadmissible: return "Inadmissible";
    case Errc::EmbeddingFailure: return "EmbeddingFailure";
    case Errc::DegenerateTriangle: return "DegenerateTriangle";
    case Errc::NegativeHeight: return "NegativeHeight";
    case Errc::NoFeasiblePoint: return "NoFeasiblePoint";
    case Errc::NoRoot: return "NoRoot";
    case Errc::NoIntersection: return "NoIntersection";
    case Errc::NotACovering: return "NotACovering";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace hypcover
