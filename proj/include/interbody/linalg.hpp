#pragma once

#include "interbody/vec.hpp"

#include <optional>
#include <vector>

namespace interbody {

using Matrix = std::vector<Vec>;  // row-major

int rank(Matrix m);

// Solves A x = b exactly. A may be rectangular (rows >= cols). Returns
// nullopt when the system is inconsistent or underdetermined.
std::optional<Vec> solve_linear(Matrix A, Vec b);

// The hyperplane through the given affinely independent points, as
// (normal, offset) with <normal, p> = offset for each point. Returns nullopt
// when the points are affinely dependent. Normalized: integer entries,
// content 1, first nonzero normal entry positive.
std::optional<std::pair<Vec, Rat>> hyperplane_through(const std::vector<Vec>& points);

// Feasibility of the strict homogeneous system <a_i, x> > 0 by
// Fourier-Motzkin elimination; returns an interior rational point if one
// exists.
std::optional<Vec> strict_cone_point(const std::vector<Vec>& ineqs, int dim);

}  // namespace interbody
