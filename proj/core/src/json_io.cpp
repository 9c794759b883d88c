#include "toricres/json_io.hpp"

#include <algorithm>
#include <limits>

#include "toricres/error.hpp"

namespace toricres::io {

namespace {

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::InvalidInput, where + ": " + what);
}

Label label_from_json(const json& j, const std::string& where) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  bad(where, "expected a vertex label");
}

std::vector<Label> labels_from_json(const json& j, const std::string& where) {
  if (!j.is_array()) bad(where, "expected an array of labels");
  std::vector<Label> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(label_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

json simplex_json(const Simplex& s) { return json(s.vertices()); }

const char* level_name(Level l) { return l == Level::Refined ? "refined" : "pushed"; }

}  // namespace

json integer_json(const Integer& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max()) {
    return json(static_cast<long long>(x));
  }
  return json(x.str());
}

Integer integer_from_json(const json& j, const std::string& where) {
  if (j.is_number_unsigned()) return Integer(j.get<unsigned long long>());
  if (j.is_number_integer()) return Integer(j.get<long long>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    const bool digits = !s.empty() && std::all_of(s.begin() + (s[0] == '-' ? 1 : 0), s.end(),
                                                  [](char c) { return c >= '0' && c <= '9'; });
    if (digits && s != "-") return Integer(s);
  }
  bad(where, "expected an integer");
}

json complex_json(const DualComplex& c) {
  json facets = json::array();
  for (const auto& f : c.facets()) facets.push_back(simplex_json(f));
  return json{{"vertices", c.vertices()}, {"facets", facets}};
}

DualComplex complex_from_json(const json& j, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object with vertices and facets");
  if (!j.contains("vertices")) bad(where, "missing 'vertices'");
  if (!j.contains("facets")) bad(where, "missing 'facets'");
  const auto vertices = labels_from_json(j["vertices"], where + ".vertices");
  const json& fj = j["facets"];
  if (!fj.is_array()) bad(where + ".facets", "expected an array");
  std::vector<std::vector<Label>> facets;
  for (std::size_t i = 0; i < fj.size(); ++i) {
    facets.push_back(labels_from_json(fj[i], where + ".facets[" + std::to_string(i) + "]"));
  }
  try {
    return DualComplex::build(vertices, facets);
  } catch (const Error& e) {
    throw Error(e.code(), where + ": " + e.detail());
  }
}

json point_json(const GlobalPoint& p) {
  json out = json::object();
  for (const auto& [v, c] : p) out[v] = integer_json(c);
  return out;
}

GlobalPoint point_from_json(const json& j, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object of coordinates");
  GlobalPoint p;
  for (const auto& [k, v] : j.items()) {
    const Integer c = integer_from_json(v, where + "." + k);
    if (c != 0) p[k] = c;
  }
  return p;
}

json refinement_json(const Refinement& ref) {
  json vertices = json::array();
  for (const auto& [id, v] : ref.vertices()) {
    vertices.push_back(
        json{{"id", id}, {"carrier", simplex_json(v.carrier)}, {"coords", point_json(v.coords)}});
  }
  std::vector<Simplex> facets = ref.facets();
  std::sort(facets.begin(), facets.end());
  json fj = json::array();
  for (const auto& f : facets) fj.push_back(simplex_json(f));
  return json{{"base", complex_json(ref.base())},
              {"r", integer_json(ref.r())},
              {"vertices", vertices},
              {"facets", fj}};
}

Refinement refinement_from_json(const json& j, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  if (!j.contains("base")) bad(where, "missing 'base'");
  if (!j.contains("r")) bad(where, "missing 'r'");
  const DualComplex base = complex_from_json(j["base"], where + ".base");
  const Integer r = integer_from_json(j["r"], where + ".r");
  return refinement_from_json(j, base, r, where);
}

Refinement refinement_from_json(const json& j, const DualComplex& base, const Integer& r,
                                const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  if (!j.contains("vertices") || !j["vertices"].is_array()) bad(where, "missing 'vertices' array");
  if (!j.contains("facets") || !j["facets"].is_array()) bad(where, "missing 'facets' array");
  std::vector<RefinedVertex> vertices;
  for (std::size_t i = 0; i < j["vertices"].size(); ++i) {
    const std::string at = where + ".vertices[" + std::to_string(i) + "]";
    const json& vj = j["vertices"][i];
    if (!vj.is_object()) bad(at, "expected an object");
    if (!vj.contains("id")) bad(at, "missing 'id'");
    if (!vj.contains("coords")) bad(at, "missing 'coords'");
    RefinedVertex v;
    v.id = label_from_json(vj["id"], at + ".id");
    GlobalPoint raw;
    for (const auto& [k, c] : vj["coords"].items()) raw[k] = integer_from_json(c, at + ".coords." + k);
    v.coords = raw;
    v.carrier = vj.contains("carrier") ? Simplex(labels_from_json(vj["carrier"], at + ".carrier"))
                                       : support(raw);
    vertices.push_back(std::move(v));
  }
  std::vector<std::vector<Label>> facets;
  for (std::size_t i = 0; i < j["facets"].size(); ++i) {
    facets.push_back(labels_from_json(j["facets"][i], where + ".facets[" + std::to_string(i) + "]"));
  }
  try {
    return Refinement::import_triangulation(base, r, std::move(vertices), facets);
  } catch (const Error& e) {
    throw Error(e.code(), where + ": " + e.detail());
  }
}

Label resolve_vertex(const Refinement& ref, const json& j, const std::string& where) {
  if (j.is_string()) {
    const Label id = j.get<std::string>();
    if (!ref.vertices().count(id)) {
      throw Error(ErrorCode::UnknownVertex, where + ": unknown refined vertex '" + id + "'");
    }
    return id;
  }
  GlobalPoint p;
  if (j.is_array()) {
    const auto& base = ref.base().vertices();
    if (j.size() != base.size()) bad(where, "coordinate tuple must have one entry per base vertex");
    for (std::size_t i = 0; i < j.size(); ++i) {
      const Integer c = integer_from_json(j[i], where + "[" + std::to_string(i) + "]");
      if (c != 0) p[base[i]] = c;
    }
  } else {
    p = point_from_json(j, where);
  }
  const auto id = ref.vertex_at(p);
  if (!id) throw Error(ErrorCode::UnknownVertex, where + ": no refined vertex at " + j.dump());
  return *id;
}

json schedule_json(const std::vector<Label>& schedule) { return json(schedule); }

std::vector<Label> schedule_from_json(const json& j, const std::string& where) {
  return labels_from_json(j, where);
}

json terminal_json(const TerminalReport& report) {
  json offending = json::array();
  for (const auto& c : report.offending) {
    json rays = json::array();
    for (const auto& p : c.rays) rays.push_back(point_json(p));
    offending.push_back(json{{"carrier", simplex_json(c.carrier)},
                             {"rays", rays},
                             {"multiplicity", integer_json(c.multiplicity)}});
  }
  return json{{"regular", report.regular}, {"offending", offending}};
}

json steps_json(const std::vector<StepRecord>& steps) {
  json out = json::array();
  for (const auto& s : steps) {
    out.push_back(json{{"center", s.center},
                       {"cones_subdivided", s.cones_subdivided},
                       {"new_components", s.new_components},
                       {"notes", s.notes}});
  }
  return out;
}

json walls_json(const Refinement& ref) {
  json out = json::array();
  for (const auto& w : ref.relative_walls()) {
    out.push_back(json{{"wall", simplex_json(w.wall)},
                       {"flanking", {simplex_json(w.flanking[0]), simplex_json(w.flanking[1])}},
                       {"base", simplex_json(w.base)},
                       {"psi", simplex_json(w.psi_tau)},
                       {"anchor", w.anchor}});
  }
  return out;
}

json tables_json(const Refinement& ref, const ObstructionTables& tables) {
  json d = json::object();
  for (const auto& [vt, row] : tables.distance) {
    json r = json::object();
    for (const auto& [v, x] : row) r[v] = integer_json(x);
    d[vt] = r;
  }
  json I = json::array();
  for (const auto& w : ref.relative_walls()) {
    json values = json::object();
    auto col = tables.intersection.find(w.wall);
    if (col != tables.intersection.end()) {
      for (const auto& [vt, x] : col->second) values[vt] = integer_json(x);
    }
    I.push_back(json{{"wall", simplex_json(w.wall)}, {"values", values}});
  }
  return json{{"d", d}, {"I", I}};
}

json wall_identity_json(const Refinement& ref, const WallIdentityReport& report) {
  (void)ref;
  json violations = json::array();
  for (const auto& v : report.violations) {
    violations.push_back(
        json{{"v", v.base_vertex}, {"wall", simplex_json(v.wall)}, {"sum", integer_json(v.sum)}});
  }
  return json{{"passed", report.ok()}, {"checked", report.checked}, {"violations", violations}};
}

json expression_json(const CycleExpression& e, const Refinement& ref) {
  json terms = json::array();
  for (const auto& [g, c] : e.terms()) {
    json t{{"coef", integer_json(c)}};
    if (g.kind == GeneratorKind::RestrictedOneCycle) {
      t["kind"] = "restricted";
      t["owner"] = g.owner;
      t["edge"] = simplex_json(g.edge);
    } else {
      t["kind"] = "wall";
      t["wall"] = simplex_json(g.wall);
    }
    terms.push_back(t);
  }
  return json{{"ambient", {{"level", level_name(e.ambient().level)}, {"component", e.ambient().component}}},
              {"terms", terms},
              {"text", format_expression(e, &ref)}};
}

json key_formula_json(const Refinement& ref, const KeyFormulaReport& report) {
  json entries = json::array();
  for (const auto& e : report.entries) {
    entries.push_back(json{{"v", e.base_vertex},
                           {"passed", e.passed},
                           {"lhs", expression_json(e.lhs, ref)},
                           {"rhs", expression_json(e.rhs, ref)},
                           {"residual", expression_json(e.residual, ref)},
                           {"wall_residual", expression_json(e.wall_residual, ref)}});
  }
  return json{{"passed", report.ok()}, {"entries", entries}};
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace toricres::io
