#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cubicpm {

enum class ErrorKind {
  LoopRejected,
  VertexIdOutOfRange,
  EdgeIdOutOfRange,
  DisconnectedPart,
  DegreeMismatch,
  NotAPath,
  NeighborClash,
  RecipeTooLarge,
  TooLarge,
  MinDegreeViolated,
  NotCyclically4EC,
  ChainViolation,
  SharedEndpoint,
  InconsistentQuery,
  NotUniquePM,
  NotBipartite,
  FlowInfeasible,
  NotMatchingCovered,
  UnknownName,
  BadSize,
  UnreachableParity,
  Bridged,
  BadDegrees,
  GenerationFailed,
  ParseError,
  Overflow,
  InvariantViolated,
};

std::string_view to_string(ErrorKind kind);

/// The single exception type thrown by the library. `kind()` identifies the
/// contract that was violated; `what()` carries a human-readable message.
class GraphError : public std::runtime_error {
 public:
  GraphError(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cubicpm
