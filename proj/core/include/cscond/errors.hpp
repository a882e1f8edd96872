#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cscond {

/// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Operation applied to a cochain of an unsupported degree.
struct DegreeError : Error {
  using Error::Error;
};

/// Cochain/mesh shape mismatch (wrong mesh, wrong length, empty path).
struct ShapeError : Error {
  using Error::Error;
};

/// Edge path that is not a closed, connected cycle.
struct LoopError : Error {
  using Error::Error;
};

/// Face region that is not connected within the mesh.
struct RegionError : Error {
  using Error::Error;
};

/// Mesh topology unsuitable for the operation (e.g. no hole loop).
struct TopologyError : Error {
  using Error::Error;
};

/// Numeric argument outside the operation's domain.
struct DomainError : Error {
  using Error::Error;
};

/// Degenerate spacetime stack (fewer than two slices).
struct StackError : Error {
  using Error::Error;
};

/// Iterative solve did not reach the requested residual within the
/// iteration cap. Carries the full residual history for diagnosis.
struct SolverError : Error {
  SolverError(const std::string& what, std::vector<double> history)
      : Error(what), residual_history(std::move(history)) {}
  std::vector<double> residual_history;
};

/// Scenario/configuration rejection. Collects every validation error,
/// each prefixed with the offending field path.
struct ConfigError : Error {
  explicit ConfigError(std::vector<std::string> errs)
      : Error(join(errs)), errors(std::move(errs)) {}
  std::vector<std::string> errors;

 private:
  static std::string join(const std::vector<std::string>& errs) {
    std::string out = "invalid configuration:";
    for (const auto& e : errs) {
      out += "\n  - ";
      out += e;
    }
    return out;
  }
};

}  // namespace cscond
