#pragma once

#include "interbody/polytope.hpp"

#include <map>
#include <utility>
#include <vector>

namespace interbody {

// v^perp for a non-origin vertex v. Parallel vertices keep separate entries;
// the sign vector is indexed by vertices, not by distinct walls.
struct CentralHyperplane {
  int vertex_index;
  Vec normal;
};

// vertex index -> +1 / -1, defined on the non-origin vertices only.
using SignVector = std::map<int, int>;

struct Chamber {
  SignVector cocircuit;
  Vec witness;  // rational interior direction of the open cone
  std::vector<std::pair<int, int>> crossed_edges;
  // d=2 only: the two boundary rays of the sector, counterclockwise from
  // ray_lo to ray_hi. Used by the convexity certificates.
  Vec ray_lo, ray_hi;
};

std::vector<CentralHyperplane> central_arrangement(const Polytope& P);

// All maximal open chambers of H(P). d=2 uses an angular sweep, d=3 an
// exact feasibility search over candidate sign vectors. Deterministic order.
std::vector<Chamber> enumerate_chambers(const Polytope& P);

// Throws OnWall if <x, v> = 0 for some non-origin vertex v.
SignVector cocircuit_of(const Polytope& P, const Vec& x);

// Edges whose endpoint signs differ; edges incident to an origin vertex are
// never reported as crossed.
std::vector<std::pair<int, int>> crossed_edges(const Polytope& P, const SignVector& s);

std::string sign_vector_string(const SignVector& s);

}  // namespace interbody
