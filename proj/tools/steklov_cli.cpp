// steklov: command-line front end for the characteristic-polynomial library.
//
// Exit codes: 0 computed, 1 computed and the answer is no, 2 usage or
// schema error, 3 invariant violation in the input, 4 family mismatch or
// ambiguous reconstruction.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "steklov/errors.hpp"
#include "steklov/io.hpp"

using namespace steklov;
using io::json;

namespace {

struct RunConfig {
  Tolerances tol;
  int q_max = 15;
  int index_max = 5;
  std::string format = "json";
  double horizon = 50;
  std::optional<double> step;
};

// Defaults from the file named by STEKLOV_CONFIG, if set.
RunConfig load_config() {
  RunConfig c;
  const char* path = std::getenv("STEKLOV_CONFIG");
  if (!path || !*path) return c;
  json j = io::read_json_file(path);
  auto pos = [](const json& v, const char* what) {
    if (!v.is_number() || v.get<double>() <= 0) throw SchemaError(std::string("config: ") + what + " must be positive");
    return v.get<double>();
  };
  if (j.contains("tolerances")) {
    const json& t = j["tolerances"];
    if (t.contains("poly")) c.tol.poly = pos(t["poly"], "poly");
    if (t.contains("congruence")) c.tol.congruence = pos(t["congruence"], "congruence");
    if (t.contains("closure")) c.tol.closure = pos(t["closure"], "closure");
  }
  if (j.contains("q_max")) c.q_max = static_cast<int>(pos(j["q_max"], "q_max"));
  if (j.contains("index_max")) c.index_max = static_cast<int>(pos(j["index_max"], "index_max"));
  if (j.contains("odd_denominator_bound"))
    c.tol.odd_denominator_bound = static_cast<long>(pos(j["odd_denominator_bound"], "odd_denominator_bound"));
  if (j.contains("format")) c.format = j["format"].get<std::string>();
  if (j.contains("horizon")) c.horizon = pos(j["horizon"], "horizon");
  if (j.contains("step")) c.step = pos(j["step"], "step");
  return c;
}

struct Invariant : Error {
  std::string check;
  Invariant(std::string c, const std::string& msg) : Error(msg), check(std::move(c)) {}
};

PolygonData load_polygon(const std::string& path, bool normalize, const Tolerances& tol) {
  PolygonData p = io::polygon_from_json(io::read_json_file(path));
  if (p.is_zero_gon()) return p;
  if (p.all_straight()) {
    if (!angle_sum_ok(p, tol.closure)) throw Invariant("angle_sum", "interior angles do not sum to (n-2) pi");
    if (!check_closure(p, tol.closure * 10)) throw Invariant("closure", "edges do not close up");
  }
  if (!near(p.perimeter(), Scalar(1), tol.closure)) {
    if (!normalize) throw Invariant("perimeter", "perimeter is " + p.perimeter().to_string() + ", expected 1");
    p = normalize_perimeter(p);
  }
  return p;
}

// Either a polynomial ({"terms": ...}) or a polygon whose polynomial is taken.
TrigPoly load_poly(const std::string& path, const Tolerances& tol) {
  json j = io::read_json_file(path);
  if (j.is_object() && j.contains("terms")) return io::poly_from_json(j);
  return char_poly(load_polygon(path, true, tol), tol);
}

std::string pretty(const TrigPoly& p) {
  std::ostringstream out;
  for (const Term& t : p.terms) out << t.coef.to_string() << " cos(" << t.freq.to_string() << " t) + ";
  out << p.constant.to_string();
  return out.str();
}

std::string pretty(const PolygonData& p) {
  std::ostringstream out;
  if (p.is_zero_gon()) return "0-gon, perimeter " + p.perimeter().to_string();
  for (std::size_t i = 0; i < p.n(); ++i)
    out << (i ? "  " : "") << "l=" << p.length(i).to_string()
        << (p.edges()[i].kind == EdgeKind::Curved ? "(curved)" : "") << " a=" << p.angle(i).to_string();
  return out.str();
}

void emit(const json& j, const std::string& format, const std::string& text) {
  if (format == "pretty") std::cout << text;
  else std::cout << j.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  RunConfig cfg;
  try {
    cfg = load_config();
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  CLI::App app{"characteristic polynomials of convex polygons"};
  app.require_subcommand(1);
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv", "pretty"}));
  app.add_option("--tol-poly", cfg.tol.poly, "polynomial comparison tolerance")->check(CLI::PositiveNumber);
  app.add_option("--tol-congruence", cfg.tol.congruence, "congruence tolerance")->check(CLI::PositiveNumber);
  app.add_option("--tol-closure", cfg.tol.closure, "closure tolerance")->check(CLI::PositiveNumber);

  std::string file_a, file_b;
  bool normalize = false;

  auto* c_charpoly = app.add_subcommand("charpoly", "polynomial of a polygon");
  c_charpoly->add_option("polygon", file_a, "polygon JSON")->required();
  c_charpoly->add_flag("--normalize", normalize, "rescale to perimeter 1");

  auto* c_compare = app.add_subcommand("compare", "compare two polynomials or polygons");
  c_compare->add_option("a", file_a)->required();
  c_compare->add_option("b", file_b)->required();
  c_compare->add_option("--tol", cfg.tol.poly, "comparison tolerance")->check(CLI::PositiveNumber);

  std::string family, known;
  auto* c_rec = app.add_subcommand("reconstruct", "recover a polygon from its polynomial");
  c_rec->add_option("poly", file_a, "polynomial JSON (or a polygon)")->required();
  c_rec->add_option("--family", family)
      ->required()
      ->check(CLI::IsMember({"triangle", "rectangle", "parallelogram", "kite", "regular"}));
  c_rec->add_option("--known-angle", known, "known angle as a multiple of pi, p/q");

  auto* c_search = app.add_subcommand("search", "searches");
  c_search->require_subcommand(1);
  auto* s_tri = c_search->add_subcommand("triangles", "rational triangles sharing a polynomial");
  s_tri->add_option("--qmax", cfg.q_max)->check(CLI::PositiveNumber);
  auto* s_quad = c_search->add_subcommand("quadvseq", "quadrilaterals against the equilateral triangle");
  s_quad->add_option("--indexmax", cfg.index_max)->check(CLI::PositiveNumber);
  bool odd = false;
  auto* s_pent = c_search->add_subcommand("pentagons", "length patterns of candidate pentagons");
  s_pent->add_option("--qmax", cfg.q_max)->check(CLI::PositiveNumber);
  s_pent->add_flag("--odd", odd, "one odd angle");

  double step = 0;
  auto* c_roots = app.add_subcommand("roots", "roots of a polynomial");
  c_roots->add_option("poly", file_a)->required();
  c_roots->add_option("--T", cfg.horizon, "horizon")->check(CLI::PositiveNumber);
  auto* step_opt = c_roots->add_option("--step", step, "grid step")->check(CLI::PositiveNumber);

  bool vs_eq = false;
  auto* c_smooth = app.add_subcommand("smoothcheck", "necessary conditions against a smooth domain");
  c_smooth->add_option("polygon", file_a)->required();
  c_smooth->add_flag("--vs-equilateral", vs_eq, "compare with the equilateral triangle instead");
  c_smooth->add_flag("--normalize", normalize, "rescale to perimeter 1");

  // global options may follow the subcommand
  for (CLI::App* sub : app.get_subcommands({})) {
    sub->fallthrough();
    for (CLI::App* inner : sub->get_subcommands({})) inner->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (*step_opt) cfg.step = step;
  const std::string& fmt = cfg.format;
  const Tolerances& tol = cfg.tol;

  try {
    if (*c_charpoly) {
      TrigPoly p = char_poly(load_polygon(file_a, normalize, tol), tol);
      if (fmt == "csv") std::cout << io::to_csv(p);
      else emit(io::to_json(p), fmt, pretty(p) + "\n");
      return 0;
    }
    if (*c_compare) {
      TrigPoly a = load_poly(file_a, tol), b = load_poly(file_b, tol);
      PolyComparison r = compare_polys(a, b, tol.poly);
      json j{{"equal", r.equal}, {"exact", r.exact}};
      if (fmt == "csv") std::cout << "equal,exact\n" << r.equal << "," << r.exact << "\n";
      else emit(j, fmt, std::string(r.equal ? "equal" : "different") + (r.exact ? " (exact)\n" : "\n"));
      return r.equal ? 0 : 1;
    }
    if (*c_rec) {
      TrigPoly p = load_poly(file_a, tol);
      Family f = family == "triangle"        ? Family::Triangle
                 : family == "rectangle"     ? Family::Rectangle
                 : family == "parallelogram" ? Family::Parallelogram
                 : family == "kite"          ? Family::Kite
                                             : Family::Regular;
      std::optional<Angle> ka;
      if (!known.empty()) {
        try {
          Scalar m = Scalar::parse(known);
          if (!m.is_exact()) throw SchemaError("--known-angle must be p/q");
          ka = Angle::pi_multiple(m.exact());
        } catch (const DomainError& e) {
          throw SchemaError(std::string("--known-angle: ") + e.what());
        }
      }
      ReconstructionResult r = reconstruct(p, f, ka, tol);
      json j = io::to_json(r);
      if (fmt == "csv") {
        std::cout << "candidate,branch,edge,len,angle_pi_mult_or_rad\n";
        for (std::size_t c = 0; c < r.candidates.size(); ++c) {
          const PolygonData& q = r.candidates[c].polygon;
          for (std::size_t i = 0; i < q.n(); ++i)
            std::cout << c << "," << r.candidates[c].branch << "," << i << "," << q.length(i).to_string() << ","
                      << (q.angle(i).is_exact() ? q.angle(i).pi_mult().get_str() : format_double(q.angle(i).rad()))
                      << "\n";
        }
      } else {
        std::string text = r.classification + "\n";
        for (const Candidate& c : r.candidates) text += "  [" + c.branch + "] " + pretty(c.polygon) + "\n";
        for (const std::string& n : r.notes) text += "  note: " + n + "\n";
        emit(j, fmt, text);
      }
      return 0;
    }
    if (*s_tri) {
      SearchReport r = find_charpoly_collisions_triangles(cfg.q_max, tol);
      if (fmt == "csv") {
        std::cout << "group,odd_count,a1,a2,a3,exact_key\n";
        for (std::size_t g = 0; g < r.groups.size(); ++g)
          for (const auto& a : r.groups[g].angles)
            std::cout << g << "," << r.groups[g].odd_count << "," << a[0].get_str() << "," << a[1].get_str() << ","
                      << a[2].get_str() << "," << r.groups[g].exact_key << "\n";
      } else {
        std::ostringstream text;
        text << r.examined << " triangles, " << r.groups.size() << " groups\n";
        for (const CollisionGroup& g : r.groups) {
          text << "  " << pretty(g.shared) << ":";
          for (const auto& a : g.angles) text << " (" << a[0] << ", " << a[1] << ", " << a[2] << ")";
          text << "\n";
        }
        emit(io::to_json(r), fmt, text.str());
      }
      return r.groups.empty() ? 1 : 0;
    }
    if (*s_quad) {
      QuadVsEqReport r = quad_vs_equilateral(cfg.index_max, 10000, tol);
      if (fmt == "csv") {
        std::cout << "k,j,parity_opposite,charpoly_matches,sweep_min_residual,exact_min_residual,feasible\n";
        for (const QuadVsEqEntry& e : r.entries)
          std::cout << e.k << "," << e.j << "," << e.parity_opposite << "," << e.charpoly_matches << ","
                    << format_double(e.sweep_min_residual) << "," << format_double(e.exact_min_residual) << ","
                    << e.feasible << "\n";
      } else {
        std::ostringstream text;
        for (const QuadVsEqEntry& e : r.entries)
          text << "(" << e.k << ", " << e.j << ") " << e.verdict << ", residual " << e.sweep_min_residual << "\n";
        for (const std::string& n : r.notes) text << "note: " << n << "\n";
        emit(io::to_json(r), fmt, text.str());
      }
      return 0;
    }
    if (*s_pent) {
      std::vector<PentagonPattern> v = smooth_candidate_pentagons(cfg.q_max, odd);
      if (fmt == "csv") {
        std::cout << "pattern,curved,lengths,lstar_size\n";
        for (std::size_t i = 0; i < v.size(); ++i) {
          std::cout << i << "," << (v[i].curved ? v[i].curved->to_string() : "") << ",";
          for (std::size_t k = 0; k < v[i].lengths.size(); ++k) std::cout << (k ? " " : "") << v[i].lengths[k].to_string();
          std::cout << "," << v[i].lstar_size << "\n";
        }
      } else {
        std::ostringstream text;
        for (const PentagonPattern& p : v) {
          if (p.curved) text << "curved " << p.curved->to_string() << " | ";
          for (const Scalar& s : p.lengths) text << s.to_string() << " ";
          text << "(|L*| = " << p.lstar_size << ")\n";
        }
        emit(io::to_json(v), fmt, text.str());
      }
      return v.empty() ? 1 : 0;
    }
    if (*c_roots) {
      RootList r = roots(load_poly(file_a, tol), cfg.horizon, cfg.step);
      if (fmt == "csv") {
        std::cout << io::to_csv(r);
      } else {
        std::ostringstream text;
        for (const Root& x : r.roots) text << format_double(x.t) << (x.tangential ? " (tangential)" : "") << "\n";
        emit(io::to_json(r), fmt, text.str());
      }
      return 0;
    }
    if (*c_smooth) {
      SmoothCheckResult r = smooth_check(load_polygon(file_a, normalize, tol), vs_eq, tol);
      if (fmt == "csv") {
        std::cout << "condition,status,detail\n";
        for (const Condition& c : r.conditions)
          std::cout << c.name << "," << io::status_name(c.status) << "," << c.detail << "\n";
      } else {
        std::ostringstream text;
        for (const Condition& c : r.conditions)
          text << c.name << ": " << io::status_name(c.status) << (c.detail.empty() ? "" : "  " + c.detail) << "\n";
        text << (r.passes ? "not distinguished\n" : "distinguished\n");
        emit(io::to_json(r), fmt, text.str());
      }
      return 0;
    }
  } catch (const Invariant& e) {
    std::cerr << json{{"error", "invariant"}, {"check", e.check}, {"message", e.what()}}.dump() << "\n";
    return 3;
  } catch (const SchemaError& e) {
    std::cerr << json{{"error", "schema"}, {"message", e.what()}}.dump() << "\n";
    return 2;
  } catch (const ResolutionError& e) {
    std::cerr << json{{"error", "resolution"}, {"message", e.what()}}.dump() << "\n";
    return 2;
  } catch (const AmbiguousError& e) {
    std::cerr << json{{"error", "ambiguous"}, {"cases", e.cases()}, {"message", e.what()}}.dump() << "\n";
    return 4;
  } catch (const FamilyError& e) {
    std::cerr << json{{"error", "family"}, {"message", e.what()}}.dump() << "\n";
    return 4;
  } catch (const NoSolutionError& e) {
    std::cerr << json{{"error", "no_solution"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << json{{"error", "invalid"}, {"message", e.what()}}.dump() << "\n";
    return 3;
  }
  return 2;
}
