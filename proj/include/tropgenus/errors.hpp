// Typed error hierarchy shared by every module; the CLI maps ErrorKind to
// machine-readable strings and exit codes.
#pragma once

#include <stdexcept>
#include <string>

namespace tropgenus {

enum class ErrorKind {
  InvalidInput,
  WrongCount,
  DependentEdges,
  NoRigidExtension,
  CircuitCapExceeded,
  InvalidWeights,
  Infeasible,
  DimensionMismatch,
  PreconditionViolation,
  BlockCapExceeded,
  NonTransversalVertex,
  NonTrivalentVertex,
  VertexBudgetExceeded,
  RestartsExhausted,
  InternalError,
};

inline const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::WrongCount: return "wrong-count";
    case ErrorKind::DependentEdges: return "dependent-edges";
    case ErrorKind::NoRigidExtension: return "no-rigid-extension";
    case ErrorKind::CircuitCapExceeded: return "circuit-cap-exceeded";
    case ErrorKind::InvalidWeights: return "invalid-weights";
    case ErrorKind::Infeasible: return "infeasible";
    case ErrorKind::DimensionMismatch: return "dimension-mismatch";
    case ErrorKind::PreconditionViolation: return "precondition-violation";
    case ErrorKind::BlockCapExceeded: return "block-cap-exceeded";
    case ErrorKind::NonTransversalVertex: return "non-transversal-vertex";
    case ErrorKind::NonTrivalentVertex: return "non-trivalent-vertex";
    case ErrorKind::VertexBudgetExceeded: return "vertex-budget-exceeded";
    case ErrorKind::RestartsExhausted: return "restarts-exhausted";
    case ErrorKind::InternalError: return "internal-error";
  }
  return "unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace tropgenus
