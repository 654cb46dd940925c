#include "interbody/convexity.hpp"
#include "interbody/json_io.hpp"
#include "interbody/radial.hpp"
#include "interbody/translation.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <tuple>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

using namespace interbody;

namespace {

constexpr int kExitConvex = 0;
constexpr int kExitNonConvex = 1;
constexpr int kExitError = 2;

Polytope load_polytope(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GeometryError("cannot open " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw GeometryError(std::string("JSON parse error in ") + path + ": " + e.what());
  }
  return polytope_from_json(j);
}

Vec parse_vec(const std::string& s) {
  Vec v;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(parse_rat(item));
  return v;
}

std::string fmt(const Rat& r, bool exact) {
  if (exact) return rat_to_string(r);
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", to_double(r));
  return buf;
}

uint64_t probe_seed() {
  const char* env = std::getenv("INTERBODY_SEED");
  if (!env) return 0;
  return std::strtoull(env, nullptr, 10);
}

int emit_report(const Polytope& P) {
  if (P.dim == 2) {
    auto rep = convexity_report_2d(P);
    std::cout << report_to_json(rep).dump(2) << "\n";
    return rep.verdict == ConvexityReport::Convex ? kExitConvex : kExitNonConvex;
  }
  try {
    auto rep = parallelepiped_report(P);
    std::cout << report_to_json(rep).dump(2) << "\n";
    return rep.verdict == ConvexityReport::Convex ? kExitConvex : kExitNonConvex;
  } catch (const NotABox&) {
  }
  if (P.dim != 3) throw GeometryError("report supports d in {2, 3}");
  // General 3D shape: sampled evidence only. A violator certifies
  // non-convexity; a symmetric body with none is convex (Busemann).
  bool symmetric = is_origin_symmetric(P);
  auto probe = midpoint_convexity_probe(P, 1000, probe_seed());
  json j;
  j["symmetric"] = symmetric;
  j["origin"] = origin_position_to_json(origin_position(P));
  j["probe"] = json{{"pairs", 1000}, {"min_margin", probe.min_margin}};
  if (probe.violator) {
    j["verdict"] = "NonConvex";
    j["probe"]["violator"] = json{{"x", vec_to_json(probe.violator->first)},
                                  {"y", vec_to_json(probe.violator->second)}};
  } else if (symmetric && origin_position(P).tag == OriginPosition::Interior) {
    j["verdict"] = "Convex";
  } else {
    j["verdict"] = "Inconclusive";
  }
  std::cout << j.dump(2) << "\n";
  return j["verdict"] == "Convex" ? kExitConvex : kExitNonConvex;
}

int cmd_sweep(const Polytope& P, const std::string& grid_spec, bool exact) {
  if (P.dim != 2) throw GeometryError("sweep supports d = 2 only");
  auto parse_axis = [](const std::string& s) {
    auto c1 = s.find(':');
    auto c2 = s.find(':', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
      throw GeometryError("grid axis must be min:max:steps");
    Rat lo = parse_rat(s.substr(0, c1));
    Rat hi = parse_rat(s.substr(c1 + 1, c2 - c1 - 1));
    int n = std::stoi(s.substr(c2 + 1));
    if (n < 1) throw GeometryError("grid steps must be >= 1");
    return std::tuple<Rat, Rat, int>(lo, hi, n);
  };
  auto comma = grid_spec.find(',');
  if (comma == std::string::npos) throw GeometryError("grid must have two axes");
  auto [x0, x1, nx] = parse_axis(grid_spec.substr(0, comma));
  auto [y0, y1, ny] = parse_axis(grid_spec.substr(comma + 1));

  auto L = affine_arrangement(P);
  std::cout << "t1,t2,region,verdict,chambers\n";
  for (int i = 0; i < nx; ++i) {
    for (int k = 0; k < ny; ++k) {
      Rat t1 = nx == 1 ? x0 : x0 + (x1 - x0) * i / (nx - 1);
      Rat t2 = ny == 1 ? y0 : y0 + (y1 - y0) * k / (ny - 1);
      Vec t{t1, t2};
      auto rep = convexity_report_2d(translate(P, t));
      // Region id needs a point off L(P); nudge deterministically.
      Vec tn = t;
      std::string region;
      for (int step = 1; step <= 64; ++step) {
        try {
          auto R = region_of(L, tn);
          for (int sg : R.signs) region += sg > 0 ? '+' : '-';
          break;
        } catch (const OnHyperplane&) {
          tn = add(t, Vec{Rat(step, 10007), Rat(step, 20011)});
        }
      }
      size_t chambers = enumerate_chambers(translate(P, tn)).size();
      std::cout << fmt(t1, exact) << "," << fmt(t2, exact) << "," << region << ","
                << (rep.verdict == ConvexityReport::Convex ? "Convex" : "NonConvex")
                << "," << chambers << "\n";
    }
  }
  return kExitConvex;
}

int cmd_boundary(const Polytope& P, int samples, const std::string& format, bool exact) {
  if (samples < 8) throw GeometryError("need --samples >= 8");
  if (P.dim == 2) {
    std::vector<Vec> pts;
    const double C = 1e6;
    for (int k = 0; k < samples; ++k) {
      double th = 2.0 * M_PI * k / samples;
      Rat ux(static_cast<long long>(std::llround(C * std::cos(th))));
      Rat uy(static_cast<long long>(std::llround(C * std::sin(th))));
      Vec u{ux, uy};
      if (is_zero(u)) continue;
      pts.push_back(scale(radial_value(P, u), u));
    }
    if (format == "off") {
      std::cout << "OFF\n" << pts.size() << " 0 0\n";
      for (const auto& p : pts)
        std::cout << fmt(p[0], false) << " " << fmt(p[1], false) << " 0\n";
    } else {
      std::cout << "x,y\n";
      for (const auto& p : pts)
        std::cout << fmt(p[0], exact) << "," << fmt(p[1], exact) << "\n";
    }
    return kExitConvex;
  }
  if (P.dim != 3) throw GeometryError("boundary supports d in {2, 3}");

  // Integer icosahedron directions, midpoint-subdivided until enough
  // vertices; radii are exact by homogeneity, no normalization needed.
  std::vector<Vec> dirs;
  std::vector<std::array<int, 3>> faces;
  {
    Rat a(500), b(809);
    auto put = [&](Rat x, Rat y, Rat z) { dirs.push_back(Vec{x, y, z}); };
    put(-a, b, 0); put(a, b, 0); put(-a, -b, 0); put(a, -b, 0);
    put(0, -a, b); put(0, a, b); put(0, -a, -b); put(0, a, -b);
    put(b, 0, -a); put(b, 0, a); put(-b, 0, -a); put(-b, 0, a);
    faces = {{0, 11, 5},  {0, 5, 1},  {0, 1, 7},   {0, 7, 10}, {0, 10, 11},
             {1, 5, 9},   {5, 11, 4}, {11, 10, 2}, {10, 7, 6}, {7, 1, 8},
             {3, 9, 4},   {3, 4, 2},  {3, 2, 6},   {3, 6, 8},  {3, 8, 9},
             {4, 9, 5},   {2, 4, 11}, {6, 2, 10},  {8, 6, 7},  {9, 8, 1}};
  }
  while (static_cast<int>(dirs.size()) < samples) {
    std::map<std::pair<int, int>, int> midpoint;
    auto mid = [&](int i, int j) {
      auto key = std::minmax(i, j);
      auto it = midpoint.find(key);
      if (it != midpoint.end()) return it->second;
      dirs.push_back(scale(Rat(1, 2), add(dirs[i], dirs[j])));
      int idx = static_cast<int>(dirs.size()) - 1;
      midpoint[key] = idx;
      return idx;
    };
    std::vector<std::array<int, 3>> next;
    for (const auto& f : faces) {
      int ab = mid(f[0], f[1]), bc = mid(f[1], f[2]), ca = mid(f[2], f[0]);
      next.push_back({f[0], ab, ca});
      next.push_back({f[1], bc, ab});
      next.push_back({f[2], ca, bc});
      next.push_back({ab, bc, ca});
    }
    faces = next;
  }
  std::vector<Vec> pts;
  for (const auto& u : dirs) pts.push_back(scale(radial_value(P, u), u));
  if (format == "off") {
    std::cout << "OFF\n" << pts.size() << " " << faces.size() << " 0\n";
    for (const auto& p : pts)
      std::cout << fmt(p[0], false) << " " << fmt(p[1], false) << " "
                << fmt(p[2], false) << "\n";
    for (const auto& f : faces)
      std::cout << "3 " << f[0] << " " << f[1] << " " << f[2] << "\n";
  } else {
    std::cout << "x,y,z\n";
    for (const auto& p : pts)
      std::cout << fmt(p[0], exact) << "," << fmt(p[1], exact) << ","
                << fmt(p[2], exact) << "\n";
  }
  return kExitConvex;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"intersection bodies of polytopes, exactly"};
  app.require_subcommand(1);

  std::string file, t_str, x_str, grid, format = "csv";
  int samples = 64;
  bool affine = false, exact = false;

  auto* rep = app.add_subcommand("report", "convexity report for I(P+t)");
  rep->add_option("file", file)->required();
  rep->add_option("--t", t_str, "translation, comma-separated rationals");

  auto* rad = app.add_subcommand("radial", "radial function value");
  rad->add_option("file", file)->required();
  rad->add_option("--x", x_str, "direction, comma-separated rationals")->required();

  auto* cham = app.add_subcommand("chambers", "chambers of H(P)");
  cham->add_option("file", file)->required();

  auto* arr = app.add_subcommand("arrangement", "central or affine arrangement");
  arr->add_option("file", file)->required();
  arr->add_flag("--affine", affine, "emit L(P) instead of H(P)");

  auto* sw = app.add_subcommand("sweep", "verdicts over a grid of translations");
  sw->add_option("file", file)->required();
  sw->add_option("--grid", grid, "xmin:xmax:steps,ymin:ymax:steps")->required();
  sw->add_flag("--exact", exact, "rational output");

  auto* bd = app.add_subcommand("boundary", "sampled boundary of IP");
  bd->add_option("file", file)->required();
  bd->add_option("--samples", samples, "number of directions (>= 8)");
  bd->add_option("--format", format, "csv or off")->check(CLI::IsMember({"csv", "off"}));
  bd->add_flag("--exact", exact, "rational output");

  CLI11_PARSE(app, argc, argv);

  try {
    Polytope P = load_polytope(file);
    if (rep->parsed()) {
      if (!t_str.empty()) {
        Vec t = parse_vec(t_str);
        if (static_cast<int>(t.size()) != P.dim)
          throw GeometryError("translation dimension mismatch");
        P = translate(P, t);
      }
      return emit_report(P);
    }
    if (rad->parsed()) {
      Vec x = parse_vec(x_str);
      if (static_cast<int>(x.size()) != P.dim)
        throw GeometryError("direction dimension mismatch");
      Rat v = radial_value(P, x);
      json j{{"x", vec_to_json(x)}, {"value", rat_to_json(v)}, {"approx", to_double(v)}};
      std::cout << j.dump(2) << "\n";
      return kExitConvex;
    }
    if (cham->parsed()) {
      json j = json::array();
      for (const auto& C : enumerate_chambers(P)) j.push_back(chamber_to_json(C));
      std::cout << json{{"count", j.size()}, {"chambers", j}}.dump(2) << "\n";
      return kExitConvex;
    }
    if (arr->parsed()) {
      json j = json::array();
      if (affine) {
        for (const auto& H : affine_arrangement(P)) j.push_back(affine_hyperplane_to_json(H));
      } else {
        for (const auto& H : central_arrangement(P)) j.push_back(central_hyperplane_to_json(H));
      }
      std::cout << j.dump(2) << "\n";
      return kExitConvex;
    }
    if (sw->parsed()) return cmd_sweep(P, grid, exact);
    if (bd->parsed()) return cmd_boundary(P, samples, format, exact);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
