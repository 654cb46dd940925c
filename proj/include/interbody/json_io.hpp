#pragma once

#include "interbody/arrangement.hpp"
#include "interbody/convexity.hpp"
#include "interbody/mpoly.hpp"
#include "interbody/polytope.hpp"
#include "interbody/translation.hpp"

#include <json.hpp>

namespace interbody {

using json = nlohmann::json;

json rat_to_json(const Rat& r);
Rat rat_from_json(const json& j);

json vec_to_json(const Vec& v);
Vec vec_from_json(const json& j);

// {"dim": d, "vertices": [[...], ...], "facets": [[i, ...], ...]}
// Rationals as "p/q" strings, integers allowed. facets optional for d <= 3.
json polytope_to_json(const Polytope& P);
Polytope polytope_from_json(const json& j);

json chamber_to_json(const Chamber& C);
json central_hyperplane_to_json(const CentralHyperplane& H);
json affine_hyperplane_to_json(const AffineHyperplane& H);
json region_to_json(const Region& R);

// [{"exp": [e1..ed], "coef": "p/q"}, ...]
json mpoly_to_json(const MPoly& p);
MPoly mpoly_from_json(const json& j);

json radial_piece_to_json(const RadialPiece& piece);
json witness_to_json(const Witness& w);
json origin_position_to_json(const OriginPosition& pos);
json report_to_json(const ConvexityReport& report);

}  // namespace interbody
