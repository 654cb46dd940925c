#pragma once

#include "interbody/arrangement.hpp"
#include "interbody/mpoly.hpp"
#include "interbody/polytope.hpp"

#include <vector>

namespace interbody {

// aff(-v_{i_1}, ..., -v_{i_d}) for affinely independent vertices of P.
struct AffineHyperplane {
  Vec normal;
  Rat offset;                   // <normal, y> = offset on the hyperplane
  std::vector<int> generators;  // d vertex indices
};

struct Region {
  std::vector<int> signs;  // +1/-1 per hyperplane, in arrangement order
  Vec witness;
};

// Deduplicated by normalized (normal, offset); affinely dependent subsets
// are skipped.
std::vector<AffineHyperplane> affine_arrangement(const Polytope& P);

// Throws OnHyperplane when t lies on a hyperplane of L.
Region region_of(const std::vector<AffineHyperplane>& L, const Vec& t);

// True iff H(P+t1) and H(P+t2) have the same set of signed cocircuits.
bool verify_cocircuit_stability(const Polytope& P, const Vec& t1, const Vec& t2);

// The polynomial t -> rho_{I(P+t)}(x) on the region R, where x is tracked by
// the cocircuit s. Reconstructed by exact interpolation on a tensor grid
// inside R and validated on 5 held-out samples. Throws ChamberMismatch if a
// valid grid cannot be placed, DegreeExceeded if total degree d-1 does not
// reproduce the held-out values.
MPoly radial_polynomial_in_t(const Polytope& P, const std::vector<AffineHyperplane>& L,
                             const Region& R, const SignVector& s, const Vec& x);

}  // namespace interbody
