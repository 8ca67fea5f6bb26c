#pragma once

#include <stdexcept>
#include <string>

namespace tpack {

enum class ErrorKind {
  // construction / lookup
  LoopEdge,
  TooFewTerminals,
  DanglingVertexRef,
  UnknownVertex,
  UnknownEdge,
  InvalidFamily,
  NotIncident,
  WouldCreateLoop,
  // path systems and cuts
  NotAPath,
  NotAPathSystem,
  SidesOverlap,
  NotMinCut,
  PreconditionEdgeAvoidable,
  NotLinked,
  PivotMissing,
  // terminals and parity
  NotATerminal,
  NotATerminalEdge,
  NotInnerEulerian,
  LinkabilityFails,
  SourceNotLinked,
  // lifting
  BoundaryMissing,
  Collision,
  // toolkit
  CapExceeded,
  Infeasible,
  // io / cli
  ParseError,
  IoError,
  // a computed value violated a contract the algorithms rely on
  InternalInvariant,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace tpack
