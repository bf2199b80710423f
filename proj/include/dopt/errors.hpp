#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace dopt {

struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// graph
struct DisconnectedGraph : Error { using Error::Error; };
struct DuplicateEdge : Error { using Error::Error; };
struct SelfLoop : Error { using Error::Error; };
struct NonpositiveWeight : Error { using Error::Error; };

// problem
struct NonSpdWeight : Error { using Error::Error; };
struct CoordinateNotCovered : Error { using Error::Error; };
struct SlaterViolated : Error { using Error::Error; };
struct EmptyHalfplaneSet : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct DegenerateEllipse : Error { using Error::Error; };

// dynamics
struct NegativeMultiplier : Error { using Error::Error; };
struct MissingNeighborSignal : Error { using Error::Error; };

// scattering
struct SingularScatteringMatrix : Error { using Error::Error; };
struct RoleMismatch : Error { using Error::Error; };

// simulator
struct StepRejectedPd : Error { using Error::Error; };

// oracle / monitors
struct NoConvergence : Error { using Error::Error; };
struct NotInImage : Error { using Error::Error; };
struct MissingOracle : Error { using Error::Error; };

// scenario / cli
struct FileNotFound : Error { using Error::Error; };

// Collects every problem found while validating a config, so the user sees
// all of them at once instead of fixing one per run.
struct SchemaError : Error {
  std::vector<std::string> issues;
  explicit SchemaError(std::vector<std::string> list)
      : Error(join(list)), issues(std::move(list)) {}

 private:
  static std::string join(const std::vector<std::string>& list) {
    std::string out = "scenario validation failed:";
    for (const auto& s : list) {
      out += "\n  - ";
      out += s;
    }
    return out;
  }
};

}  // namespace dopt
