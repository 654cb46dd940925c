#pragma once

#include <stdexcept>
#include <string>

namespace interbody {

struct GeometryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DegenerateInput : GeometryError {
  using GeometryError::GeometryError;
};

struct InvalidCombinatorics : GeometryError {
  using GeometryError::GeometryError;
};

struct EmptySection : GeometryError {
  using GeometryError::GeometryError;
};

struct ZeroDirection : GeometryError {
  using GeometryError::GeometryError;
};

// x lies on the wall v^perp of the central arrangement.
struct OnWall : GeometryError {
  int vertex_index;
  explicit OnWall(int v)
      : GeometryError("direction lies on the wall of vertex " + std::to_string(v)),
        vertex_index(v) {}
};

struct OnHyperplane : GeometryError {
  int hyperplane_index;
  explicit OnHyperplane(int h)
      : GeometryError("point lies on affine hyperplane " + std::to_string(h)),
        hyperplane_index(h) {}
};

struct DivisibilityFailure : GeometryError {
  using GeometryError::GeometryError;
};

struct ChamberMismatch : GeometryError {
  using GeometryError::GeometryError;
};

struct DegreeExceeded : GeometryError {
  using GeometryError::GeometryError;
};

struct ParallelEdges : GeometryError {
  using GeometryError::GeometryError;
};

struct NotSymmetric : GeometryError {
  using GeometryError::GeometryError;
};

struct NotABox : GeometryError {
  using GeometryError::GeometryError;
};

}  // namespace interbody
