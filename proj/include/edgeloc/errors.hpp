#pragma once

#include <stdexcept>

namespace edgeloc {

// Base class for all library errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Degenerate or invalid planar geometry (coincident points, non-finite angles).
struct GeometryError : Error {
  using Error::Error;
};

// Structural graph violations: unknown vertices, self-loops, duplicate edges,
// or graph-shape preconditions that do not hold.
struct GraphError : Error {
  using Error::Error;
};

// Invalid or inconsistent measurement sets: sign-symmetry conflicts,
// inconsistent chained angles, connectivity requirements.
struct MeasurementError : Error {
  using Error::Error;
};

// Numerical failures: divergent integration, rank assumptions not met,
// results that should be integral but are not.
struct NumericalError : Error {
  using Error::Error;
};

}  // namespace edgeloc
