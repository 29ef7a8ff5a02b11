#include "steklov/io.hpp"

#include <fstream>
#include <sstream>

#include "steklov/errors.hpp"

namespace steklov::io {

json to_json(const Scalar& s) {
  if (s.is_exact()) return s.exact().get_str();
  return s.to_double();
}

Scalar scalar_from_json(const json& j) {
  if (j.is_string()) {
    try {
      return Scalar::parse(j.get<std::string>());
    } catch (const DomainError& e) {
      throw SchemaError(e.what());
    }
  }
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (j.is_number()) return Scalar(j.get<double>());
  throw SchemaError("expected a number or a \"p/q\" string, got " + j.dump());
}

json to_json(const Angle& a) {
  json j = json::object();
  if (a.is_exact()) j["pi_mult"] = a.pi_mult().get_str();
  else j["rad"] = a.rad();
  return j;
}

Angle angle_from_json(const json& j) {
  if (!j.is_object()) throw SchemaError("angle must be an object");
  try {
    if (j.contains("pi_mult")) {
      Scalar m = scalar_from_json(j.at("pi_mult"));
      if (m.is_exact()) return Angle::pi_multiple(m.exact());
      return Angle::radians(m.to_double() * 3.14159265358979323846);
    }
    if (j.contains("rad")) {
      if (!j.at("rad").is_number()) throw SchemaError("\"rad\" must be a number");
      return Angle::radians(j.at("rad").get<double>());
    }
  } catch (const DomainError& e) {
    throw GeometryError(e.what());
  }
  throw SchemaError("angle needs \"pi_mult\" or \"rad\"");
}

json to_json(const PolygonData& p) {
  json j;
  j["n"] = p.n();
  if (p.is_zero_gon()) {
    j["edges"] = json::array();
    j["angles"] = json::array();
    j["perimeter"] = to_json(p.perimeter());
    return j;
  }
  json edges = json::array();
  for (const Edge& e : p.edges())
    edges.push_back({{"len", to_json(e.length)}, {"kind", e.kind == EdgeKind::Straight ? "straight" : "curved"}});
  json angles = json::array();
  for (const Angle& a : p.angles()) angles.push_back(to_json(a));
  j["edges"] = edges;
  j["angles"] = angles;
  return j;
}

PolygonData polygon_from_json(const json& j) {
  if (!j.is_object()) throw SchemaError("polygon must be a JSON object");
  for (const char* key : {"n", "edges", "angles"})
    if (!j.contains(key)) throw SchemaError(std::string("missing field \"") + key + "\"");
  if (!j.at("n").is_number_integer() || j.at("n").get<long>() < 0) throw SchemaError("\"n\" must be a non-negative integer");
  if (!j.at("edges").is_array() || !j.at("angles").is_array()) throw SchemaError("\"edges\" and \"angles\" must be arrays");
  std::size_t n = j.at("n").get<std::size_t>();
  if (n == 0) {
    if (!j.contains("perimeter")) throw SchemaError("a 0-gon needs \"perimeter\"");
    return PolygonData::zero_gon(scalar_from_json(j.at("perimeter")));
  }
  if (j.at("edges").size() != n || j.at("angles").size() != n)
    throw SchemaError("\"n\" does not match the number of edges and angles");
  std::vector<Edge> edges;
  for (const json& e : j.at("edges")) {
    if (!e.is_object() || !e.contains("len")) throw SchemaError("edge needs \"len\"");
    EdgeKind kind = EdgeKind::Straight;
    if (e.contains("kind")) {
      std::string k = e.at("kind").is_string() ? e.at("kind").get<std::string>() : "";
      if (k == "curved") kind = EdgeKind::Curved;
      else if (k != "straight") throw SchemaError("edge kind must be \"straight\" or \"curved\"");
    }
    edges.push_back({scalar_from_json(e.at("len")), kind});
  }
  std::vector<Angle> angles;
  for (const json& a : j.at("angles")) angles.push_back(angle_from_json(a));
  try {
    return PolygonData(std::move(edges), std::move(angles));
  } catch (const DomainError& e) {
    throw GeometryError(e.what());
  }
}

json to_json(const TrigPoly& p) {
  json terms = json::array();
  for (const Term& t : p.terms) terms.push_back({{"freq", to_json(t.freq)}, {"coef", to_json(t.coef)}});
  json j;
  j["terms"] = terms;
  j["const"] = to_json(p.constant);
  return j;
}

TrigPoly poly_from_json(const json& j) {
  if (!j.is_object() || !j.contains("terms") || !j.at("terms").is_array())
    throw SchemaError("polynomial needs a \"terms\" array");
  std::vector<Term> raw;
  for (const json& t : j.at("terms")) {
    if (!t.is_object() || !t.contains("freq") || !t.contains("coef"))
      throw SchemaError("term needs \"freq\" and \"coef\"");
    Scalar f = scalar_from_json(t.at("freq"));
    if (f.sign() < 0) throw SchemaError("frequencies must be non-negative");
    raw.push_back({f, scalar_from_json(t.at("coef"))});
  }
  Scalar c = j.contains("const") ? scalar_from_json(j.at("const")) : Scalar(0);
  return canonicalize(std::move(raw), c);
}

std::string to_csv(const TrigPoly& p) {
  std::ostringstream out;
  out << "kind,freq,coef\n";
  for (const Term& t : p.terms) out << "term," << t.freq.to_string() << "," << t.coef.to_string() << "\n";
  out << "const,0," << p.constant.to_string() << "\n";
  return out.str();
}

json to_json(const ReconstructionResult& r) {
  json cands = json::array();
  for (const Candidate& c : r.candidates) {
    json j = to_json(c.polygon);
    j["branch"] = c.branch;
    if (c.lengths_free) j["lengths_free"] = true;
    cands.push_back(j);
  }
  return {{"classification", r.classification}, {"candidates", cands}, {"notes", r.notes}};
}

namespace {
json triple(const std::array<mpq_class, 3>& a) {
  return json::array({a[0].get_str(), a[1].get_str(), a[2].get_str()});
}
}  // namespace

json to_json(const SearchReport& r) {
  json groups = json::array();
  for (const CollisionGroup& g : r.groups) {
    json members = json::array();
    for (std::size_t i = 0; i < g.members.size(); ++i) {
      json m = to_json(g.members[i]);
      m["angles_pi_mult"] = triple(g.angles[i]);
      members.push_back(m);
    }
    json gj{{"odd_count", g.odd_count}, {"charpoly", to_json(g.shared)}, {"members", members}};
    if (!g.exact_key.empty()) gj["exact_key"] = g.exact_key;
    groups.push_back(gj);
  }
  return {{"examined", r.examined}, {"groups", groups}, {"notes", r.notes}};
}

json to_json(const QuadVsEqReport& r) {
  json entries = json::array();
  for (const QuadVsEqEntry& e : r.entries)
    entries.push_back({{"k", e.k},
                       {"j", e.j},
                       {"parity_opposite", e.parity_opposite},
                       {"cos_difference_one", e.cos_difference_one},
                       {"c2c4_positive", e.c2c4_positive},
                       {"charpoly_matches", e.charpoly_matches},
                       {"sweep_min_residual", e.sweep_min_residual},
                       {"exact_min_residual", e.exact_min_residual},
                       {"feasible", e.feasible},
                       {"verdict", e.verdict}});
  return {{"entries", entries}, {"notes", r.notes}};
}

json to_json(const std::vector<PentagonPattern>& v) {
  json out = json::array();
  for (const PentagonPattern& p : v) {
    json lens = json::array();
    for (const Scalar& s : p.lengths) lens.push_back(to_json(s));
    json j{{"lengths", lens}, {"lstar_size", p.lstar_size}};
    if (p.curved) j["curved"] = to_json(*p.curved);
    out.push_back(j);
  }
  return out;
}

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    default: return "n/a";
  }
}

json to_json(const SmoothCheckResult& r) {
  json conds = json::array();
  for (const Condition& c : r.conditions)
    conds.push_back({{"name", c.name}, {"status", status_name(c.status)}, {"detail", c.detail}});
  return {{"passes", r.passes}, {"conditions", conds}};
}

json to_json(const RootList& r) {
  json roots = json::array();
  for (const Root& x : r.roots) roots.push_back({{"t", x.t}, {"tangential", x.tangential}});
  return {{"horizon", r.horizon}, {"step", r.step}, {"roots", roots}};
}

std::string to_csv(const RootList& r) {
  std::ostringstream out;
  out << "index,root,tangential\n";
  for (std::size_t i = 0; i < r.roots.size(); ++i)
    out << i << "," << format_double(r.roots[i].t) << "," << (r.roots[i].tangential ? 1 : 0) << "\n";
  return out.str();
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

}  // namespace steklov::io
