#include "interbody/json_io.hpp"

namespace interbody {

json rat_to_json(const Rat& r) { return rat_to_string(r); }

Rat rat_from_json(const json& j) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (j.is_number_unsigned()) return Rat(j.get<unsigned long long>());
  throw GeometryError("rational must be an integer or a \"p/q\" string");
}

json vec_to_json(const Vec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(rat_to_json(x));
  return a;
}

Vec vec_from_json(const json& j) {
  if (!j.is_array()) throw GeometryError("vector must be a JSON array");
  Vec v;
  for (const auto& x : j) v.push_back(rat_from_json(x));
  return v;
}

json polytope_to_json(const Polytope& P) {
  json j;
  j["dim"] = P.dim;
  j["vertices"] = json::array();
  for (const auto& v : P.vertices) j["vertices"].push_back(vec_to_json(v));
  j["facets"] = json::array();
  for (const auto& f : P.facets) j["facets"].push_back(f.vertices);
  return j;
}

Polytope polytope_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("vertices"))
    throw GeometryError("polytope JSON needs \"dim\" and \"vertices\"");
  int dim = j["dim"].get<int>();
  std::vector<Vec> pts;
  for (const auto& v : j["vertices"]) {
    Vec p = vec_from_json(v);
    if (static_cast<int>(p.size()) != dim)
      throw GeometryError("vertex dimension mismatch");
    pts.push_back(p);
  }
  if (dim == 2) return build_polygon(pts);
  std::vector<std::vector<int>> facets;
  if (j.contains("facets")) {
    for (const auto& f : j["facets"]) facets.push_back(f.get<std::vector<int>>());
  }
  return build_polytope(pts, facets);
}

json chamber_to_json(const Chamber& C) {
  json j;
  j["cocircuit"] = sign_vector_string(C.cocircuit);
  j["witness"] = vec_to_json(C.witness);
  j["crossed_edges"] = json::array();
  for (const auto& [a, b] : C.crossed_edges) j["crossed_edges"].push_back({a, b});
  return j;
}

json central_hyperplane_to_json(const CentralHyperplane& H) {
  return json{{"vertex", H.vertex_index}, {"normal", vec_to_json(H.normal)}};
}

json affine_hyperplane_to_json(const AffineHyperplane& H) {
  return json{{"normal", vec_to_json(H.normal)},
              {"offset", rat_to_json(H.offset)},
              {"generators", H.generators}};
}

json region_to_json(const Region& R) {
  std::string s;
  for (int sg : R.signs) s += sg > 0 ? '+' : '-';
  return json{{"signs", s}, {"witness", vec_to_json(R.witness)}};
}

json mpoly_to_json(const MPoly& p) {
  json a = json::array();
  for (const auto& [exp, coef] : p.terms())
    a.push_back(json{{"exp", exp}, {"coef", rat_to_json(coef)}});
  return a;
}

MPoly mpoly_from_json(const json& j) {
  if (!j.is_array()) throw GeometryError("polynomial must be a JSON array");
  int nvars = 0;
  for (const auto& t : j) nvars = std::max(nvars, static_cast<int>(t["exp"].size()));
  MPoly p(nvars);
  for (const auto& t : j)
    p.set_term(t["exp"].get<std::vector<int>>(), rat_from_json(t["coef"]));
  return p;
}

json radial_piece_to_json(const RadialPiece& piece) {
  return json{{"chamber", chamber_to_json(piece.chamber)},
              {"p", mpoly_to_json(piece.p)},
              {"q", mpoly_to_json(piece.q)},
              {"boundary", mpoly_to_json(piece.boundary)},
              {"parallel_edges", piece.parallel_edges}};
}

json witness_to_json(const Witness& w) {
  return json{{"chamber", chamber_to_json(w.chamber)},
              {"a", vec_to_json(w.a)},
              {"b", vec_to_json(w.b)},
              {"alpha", rat_to_json(w.alpha)},
              {"beta", rat_to_json(w.beta)},
              {"p_a", vec_to_json(w.p_a)},
              {"p_b", vec_to_json(w.p_b)},
              {"p_ab", vec_to_json(w.p_ab)},
              {"q", vec_to_json(w.q)},
              {"gap", rat_to_json(w.gap)}};
}

json origin_position_to_json(const OriginPosition& pos) {
  json j;
  switch (pos.tag) {
    case OriginPosition::Interior: j["tag"] = "interior"; break;
    case OriginPosition::FacetInterior:
      j["tag"] = "facet_interior";
      j["facet"] = pos.facet;
      break;
    case OriginPosition::LowerFace:
      j["tag"] = "lower_face";
      j["face_vertices"] = pos.face_vertices;
      break;
    case OriginPosition::Outside: j["tag"] = "outside"; break;
  }
  return j;
}

json report_to_json(const ConvexityReport& report) {
  json j;
  j["verdict"] = report.verdict == ConvexityReport::Convex ? "Convex" : "NonConvex";
  switch (report.reason) {
    case ConvexityReport::None: break;
    case ConvexityReport::NonParallelChamber: j["reason"] = "non_parallel_chamber"; break;
    case ConvexityReport::DiscontinuityAtFacet: j["reason"] = "discontinuity_at_facet"; break;
    case ConvexityReport::OriginOutsideOrLowFace:
      j["reason"] = "origin_outside_or_low_face";
      break;
  }
  j["symmetric"] = report.symmetric;
  j["origin"] = origin_position_to_json(report.origin);
  if (report.witness) j["witness"] = witness_to_json(*report.witness);
  j["per_chamber"] = json::array();
  for (const auto& pc : report.per_chamber) {
    j["per_chamber"].push_back(json{{"chamber", chamber_to_json(pc.chamber)},
                                    {"piece_degree", pc.piece_degree},
                                    {"parallel_edges", pc.parallel_edges}});
  }
  if (report.slice_chain) {
    json sc;
    sc["asymmetric_coordinate"] = report.slice_chain->asymmetric_coordinate;
    sc["dropped_coordinates"] = report.slice_chain->dropped_coordinates;
    sc["final_face"] = json::array();
    for (const auto& [a, b] : report.slice_chain->final_face)
      sc["final_face"].push_back({rat_to_json(a), rat_to_json(b)});
    j["slice_chain"] = sc;
  }
  return j;
}

}  // namespace interbody
