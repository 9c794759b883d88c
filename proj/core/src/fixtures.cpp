#include "toricres/fixtures.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "toricres/error.hpp"
#include "toricres/job.hpp"

namespace toricres::fixtures {

namespace {

using WallNames = std::map<std::string, std::optional<Simplex>>;

std::optional<Label> find_vertex(const Refinement& ref, const json& coords) {
  try {
    return io::resolve_vertex(ref, coords, "fixture");
  } catch (const Error&) {
    return std::nullopt;
  }
}

std::string wall_name(const Refinement& ref, const Simplex& wall) {
  std::string out;
  for (const auto& id : wall) {
    if (!out.empty()) out += '-';
    out += format_vertex(ref, id);
  }
  return out;
}

WallNames resolve_walls(const Refinement& ref, const json& data) {
  WallNames out;
  if (!data.contains("walls")) return out;
  for (const auto& [name, points] : data["walls"].items()) {
    std::vector<Label> ids;
    bool found = true;
    for (const auto& p : points) {
      const auto id = find_vertex(ref, p);
      if (!id) {
        found = false;
        break;
      }
      ids.push_back(*id);
    }
    out[name] = found ? std::optional<Simplex>(Simplex(ids)) : std::nullopt;
  }
  return out;
}

std::optional<CycleExpression> expected_expression(const json& terms, const WallNames& walls,
                                                   const Ambient& ambient, std::string& problem) {
  CycleExpression e(ambient);
  for (const auto& t : terms) {
    const Integer coef = io::integer_from_json(t.at("coef"), "fixture term");
    if (t.contains("gamma")) {
      const auto edge = t.at("edge").get<std::vector<Label>>();
      e.add(CycleGenerator::restricted(t.at("gamma").get<Label>(), Simplex(edge), ambient.level),
            coef);
    } else {
      const std::string name = t.at("wall").get<std::string>();
      auto it = walls.find(name);
      if (it == walls.end() || !it->second) {
        problem = "wall " + name + " is not present in the refinement";
        return std::nullopt;
      }
      e.add(CycleGenerator::wall_class(*it->second, ambient.level), coef);
    }
  }
  return e;
}

Refinement import_figure(const json& data) {
  const DualComplex base = io::complex_from_json(data.at("complex"), "fixture.complex");
  const Integer r = io::integer_from_json(data.at("r"), "fixture.r");
  const json& fig = data.at("figure");
  const auto& labels = base.vertices();
  auto point_of = [&](const json& tuple) {
    GlobalPoint p;
    for (std::size_t i = 0; i < tuple.size() && i < labels.size(); ++i) {
      const Integer c = io::integer_from_json(tuple[i], "fixture.figure");
      if (c != 0) p[labels[i]] = c;
    }
    return p;
  };
  auto id_of = [&](const GlobalPoint& p) {
    return p.size() == 1 ? p.begin()->first : exceptional_label(p);
  };
  json vertices = json::array();
  for (const auto& tuple : fig.at("vertices")) {
    const GlobalPoint p = point_of(tuple);
    vertices.push_back(json{{"id", id_of(p)}, {"coords", io::point_json(p)}});
  }
  json facets = json::array();
  for (const auto& f : fig.at("facets")) {
    json ids = json::array();
    for (const auto& tuple : f) ids.push_back(id_of(point_of(tuple)));
    facets.push_back(ids);
  }
  return io::refinement_from_json(json{{"vertices", vertices}, {"facets", facets}}, base, r,
                                  "fixture.figure");
}

std::string join(const std::vector<std::string>& parts, std::size_t limit = 6) {
  std::string out;
  for (std::size_t i = 0; i < parts.size() && i < limit; ++i) {
    if (i) out += "; ";
    out += parts[i];
  }
  if (parts.size() > limit) out += "; ... (" + std::to_string(parts.size()) + " total)";
  return out;
}

Check check_vertices(const Refinement& ref, const json& data) {
  std::set<std::string> expected, actual;
  for (const auto& t : data.at("vertices")) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + t[i].dump();
    expected.insert(s + ")");
  }
  for (const auto& [id, v] : ref.vertices()) actual.insert(format_vertex(ref, id));
  std::vector<std::string> diff;
  for (const auto& s : expected) {
    if (!actual.count(s)) diff.push_back("missing " + s);
  }
  for (const auto& s : actual) {
    if (!expected.count(s)) diff.push_back("unexpected " + s);
  }
  const bool ok = diff.empty();
  return {"vertices", ok,
          ok ? std::to_string(actual.size()) + " vertices" : join(diff)};
}

Check check_facets(const Refinement& ref, const json& data) {
  const std::size_t expected = data.at("facet_count").get<std::size_t>();
  const std::size_t got = ref.facets().size();
  return {"facets", got == expected,
          std::to_string(got) + " unimodular facets, expected " + std::to_string(expected)};
}

Check check_walls(const Refinement& ref, const WallNames& walls) {
  std::set<Simplex> actual;
  for (const auto& w : ref.relative_walls()) actual.insert(w.wall);
  std::set<Simplex> expected;
  std::vector<std::string> diff;
  for (const auto& [name, wall] : walls) {
    if (!wall) {
      diff.push_back(name + " has a vertex missing from the refinement");
    } else if (!actual.count(*wall)) {
      diff.push_back(name + " = " + wall_name(ref, *wall) + " is not a relative wall");
    } else {
      expected.insert(*wall);
    }
  }
  for (const auto& w : actual) {
    if (!expected.count(w)) diff.push_back("unexpected wall " + wall_name(ref, w));
  }
  const bool ok = diff.empty();
  return {"walls", ok, ok ? std::to_string(actual.size()) + " relative walls" : join(diff)};
}

Check check_matrix(const Refinement& ref, const ObstructionTables& tables, const json& data,
                   const WallNames& walls) {
  const json& m = data.at("matrix");
  std::vector<std::string> diff;
  const json& rows = m.at("rows");
  const json& cols = m.at("columns");
  const json& values = m.at("values");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto row = find_vertex(ref, rows[i]);
    if (!row) {
      diff.push_back("row " + rows[i].dump() + " is not a refined vertex");
      continue;
    }
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const std::string name = cols[c].get<std::string>();
      auto it = walls.find(name);
      if (it == walls.end() || !it->second) {
        if (i == 0) diff.push_back("column " + name + " is not present in the refinement");
        continue;
      }
      const Integer want = io::integer_from_json(values[i][c], "fixture.matrix");
      const Integer got = tables.I(*it->second, *row);
      if (got != want) {
        std::ostringstream os;
        os << format_vertex(ref, *row) << " x " << name << ": got " << got << ", expected " << want;
        diff.push_back(os.str());
      }
    }
  }
  const bool ok = diff.empty();
  return {"matrix", ok,
          ok ? std::to_string(rows.size()) + "x" + std::to_string(cols.size()) + " entries agree"
             : join(diff)};
}

Check check_phi(const Refinement& ref, const ObstructionTables& tables, const json& data,
                const WallNames& walls) {
  const SymbolicOneCycle cycle = SymbolicOneCycle::full_generic(ref);
  std::vector<std::string> diff;
  std::set<Label> covered;
  const json& lines = data.at("phi");
  for (const auto& line : lines) {
    const auto id = find_vertex(ref, line.at("vertex"));
    if (!id) {
      diff.push_back("vertex " + line.at("vertex").dump() + " is not a refined vertex");
      continue;
    }
    covered.insert(*id);
    std::string problem;
    const auto want =
        expected_expression(line.at("terms"), walls, Ambient{Level::Refined, *id}, problem);
    const CycleExpression got = phi_refined(ref, tables, cycle, *id);
    if (!want) {
      diff.push_back("Φ_" + format_vertex(ref, *id) + ": " + problem);
    } else if (!(got == *want)) {
      diff.push_back("Φ_" + format_vertex(ref, *id) + " = " + format_expression(got, &ref) +
                     ", expected " + format_expression(*want, &ref));
    }
  }
  if (covered.size() != ref.vertices().size()) {
    diff.push_back(std::to_string(covered.size()) + " lines for " +
                   std::to_string(ref.vertices().size()) + " refined vertices");
  }
  const bool ok = diff.empty();
  return {"phi", ok, ok ? std::to_string(lines.size()) + " lines agree" : join(diff, 3)};
}

Check check_key(const Refinement& ref, const ObstructionTables& tables, const json& data) {
  const KeyFormulaReport report =
      verify_key_formula(ref, tables, SymbolicOneCycle::full_generic(ref));
  std::vector<std::string> diff;
  for (const auto& line : data.at("key")) {
    const Label v = line.at("v").get<Label>();
    auto it = std::find_if(report.entries.begin(), report.entries.end(),
                           [&](const KeyFormulaEntry& e) { return e.base_vertex == v; });
    if (it == report.entries.end()) {
      diff.push_back("no entry for base vertex " + v);
      continue;
    }
    std::string problem;
    const auto want = expected_expression(line.at("terms"), {}, Ambient{Level::Pushed, v}, problem);
    if (!want) {
      diff.push_back("v=" + v + ": " + problem);
      continue;
    }
    if (!it->passed) {
      diff.push_back("v=" + v + ": residual " + format_expression(it->residual, &ref) +
                     ", wall residual " + format_expression(it->wall_residual, &ref));
    }
    if (!(it->lhs == *want)) {
      diff.push_back("v=" + v + ": lhs " + format_expression(it->lhs, &ref) + ", expected " +
                     format_expression(*want, &ref));
    }
    if (!(it->rhs == *want)) {
      diff.push_back("v=" + v + ": rhs " + format_expression(it->rhs, &ref) + ", expected " +
                     format_expression(*want, &ref));
    }
  }
  const bool ok = diff.empty() && report.ok();
  return {"key-formula", ok,
          ok ? std::to_string(report.entries.size()) + " identities hold" : join(diff, 3)};
}

Check check_wall_identity(const Refinement& ref, const ObstructionTables& tables) {
  const WallIdentityReport w = verify_wall_identity(ref, tables);
  std::ostringstream os;
  os << w.checked << " (vertex, wall) pairs, " << w.violations.size() << " violations";
  return {"wall-identity", w.ok(), os.str()};
}

}  // namespace

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::Schedule: return "schedule";
    case Variant::Reordered: return "reordered";
    case Variant::Figure: return "figure";
  }
  return "?";
}

Variant variant_from_string(const std::string& s) {
  if (s == "schedule") return Variant::Schedule;
  if (s == "reordered") return Variant::Reordered;
  if (s == "figure") return Variant::Figure;
  throw Error(ErrorCode::InvalidInput, "unknown fixture variant '" + s + "'");
}

std::filesystem::path fixture_dir() {
  if (const char* env = std::getenv("TORICRES_FIXTURE_DIR"); env && *env) return env;
  return TORICRES_DEFAULT_FIXTURE_DIR;
}

json load(const std::string& name) {
  const auto path = fixture_dir() / (name + ".json");
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "no fixture named '" + name + "' at " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::InvalidInput, path.string() + ": " + e.what());
  }
}

bool FixtureRun::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

const Check* FixtureRun::check(const std::string& n) const {
  for (const auto& c : checks) {
    if (c.name == n) return &c;
  }
  return nullptr;
}

Refinement build_refinement(const json& data, Variant variant) {
  if (variant == Variant::Figure) {
    if (!data.contains("figure")) throw Error(ErrorCode::InvalidInput, "fixture has no figure triangulation");
    return import_figure(data);
  }
  json job{{"complex", data.at("complex")}, {"r", data.at("r")}};
  if (variant == Variant::Reordered) {
    if (!data.contains("reordered_schedule")) {
      throw Error(ErrorCode::InvalidInput, "fixture has no reordered schedule");
    }
    job["schedule"] = data["reordered_schedule"];
  } else if (data.contains("schedule")) {
    job["schedule"] = data["schedule"];
  }
  return job::obtain_refinement(job::parse_job(job)).refinement;
}

FixtureRun run_fixture(const std::string& name, Variant variant) {
  return run_fixture(name, load(name), variant);
}

FixtureRun run_fixture(const std::string& name, const json& data, Variant variant) {
  FixtureRun run;
  run.name = name;
  run.variant = variant;
  run.data = data;
  run.refinement = build_refinement(data, variant);
  run.tables = compute_tables(run.refinement);
  const Refinement& ref = run.refinement;
  const WallNames walls = resolve_walls(ref, data);

  run.checks.push_back(check_vertices(ref, data));
  run.checks.push_back(check_facets(ref, data));
  run.checks.push_back(check_walls(ref, walls));
  if (data.contains("matrix")) run.checks.push_back(check_matrix(ref, run.tables, data, walls));
  run.checks.push_back(check_phi(ref, run.tables, data, walls));
  run.checks.push_back(check_wall_identity(ref, run.tables));
  run.checks.push_back(check_key(ref, run.tables, data));
  return run;
}

IntersectionMatrix intersection_matrix(const Refinement& ref, const ObstructionTables& tables) {
  IntersectionMatrix m;
  std::vector<Simplex> walls;
  for (const auto& w : ref.relative_walls()) walls.push_back(w.wall);
  std::sort(walls.begin(), walls.end());
  for (const auto& w : walls) m.columns.push_back(wall_name(ref, w));
  for (const auto& [id, v] : ref.vertices()) {
    m.rows.push_back(format_vertex(ref, id));
    std::vector<Integer> row;
    for (const auto& w : walls) row.push_back(tables.I(w, id));
    m.values.push_back(std::move(row));
  }
  return m;
}

IntersectionMatrix intersection_matrix(const FixtureRun& run) {
  if (!run.data.contains("matrix")) return intersection_matrix(run.refinement, run.tables);
  const Refinement& ref = run.refinement;
  const WallNames walls = resolve_walls(ref, run.data);
  const json& spec = run.data["matrix"];
  IntersectionMatrix m;
  std::vector<std::optional<Simplex>> cols;
  for (const auto& c : spec.at("columns")) {
    m.columns.push_back(c.get<std::string>());
    auto it = walls.find(c.get<std::string>());
    cols.push_back(it == walls.end() ? std::nullopt : it->second);
  }
  for (const auto& r : spec.at("rows")) {
    const auto id = find_vertex(ref, r);
    std::string name = "(";
    for (std::size_t i = 0; i < r.size(); ++i) name += (i ? "," : "") + r[i].dump();
    m.rows.push_back(name + ")");
    std::vector<Integer> row;
    for (const auto& w : cols) row.push_back(id && w ? run.tables.I(*w, *id) : Integer(0));
    m.values.push_back(std::move(row));
  }
  return m;
}

std::string matrix_csv(const IntersectionMatrix& m) {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"') out += '"';
      out += c;
    }
    return out + "\"";
  };
  std::ostringstream os;
  os << "vertex";
  for (const auto& c : m.columns) os << ',' << quote(c);
  os << '\n';
  for (std::size_t i = 0; i < m.rows.size(); ++i) {
    os << quote(m.rows[i]);
    for (const auto& x : m.values[i]) os << ',' << x;
    os << '\n';
  }
  return os.str();
}

std::string matrix_markdown(const IntersectionMatrix& m) {
  std::ostringstream os;
  os << "| vertex |";
  for (const auto& c : m.columns) os << ' ' << c << " |";
  os << "\n|---|";
  for (std::size_t i = 0; i < m.columns.size(); ++i) os << "---:|";
  os << '\n';
  for (std::size_t i = 0; i < m.rows.size(); ++i) {
    os << "| " << m.rows[i] << " |";
    for (const auto& x : m.values[i]) os << ' ' << x << " |";
    os << '\n';
  }
  return os.str();
}

json report_json(const FixtureRun& run) {
  const Refinement& ref = run.refinement;
  json checks = json::array();
  for (const auto& c : run.checks) {
    checks.push_back(json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  }
  const SymbolicOneCycle cycle = SymbolicOneCycle::full_generic(ref);
  json phi = json::array();
  for (const auto& [id, v] : ref.vertices()) {
    phi.push_back(json{{"vertex", format_vertex(ref, id)},
                       {"id", id},
                       {"text", format_expression(phi_refined(ref, run.tables, cycle, id), &ref)}});
  }
  const IntersectionMatrix m = intersection_matrix(run);
  json values = json::array();
  for (const auto& row : m.values) {
    json r = json::array();
    for (const auto& x : row) r.push_back(io::integer_json(x));
    values.push_back(r);
  }
  return json{
      {"engine", job::engine_json()},
      {"fixture", run.name},
      {"variant", std::string(to_string(run.variant))},
      {"checks", checks},
      {"verdict", run.ok() ? "pass" : "fail"},
      {"refinement", io::refinement_json(ref)},
      {"walls", io::walls_json(ref)},
      {"tables", io::tables_json(ref, run.tables)},
      {"matrix", {{"rows", m.rows}, {"columns", m.columns}, {"values", values}}},
      {"phi", phi},
      {"key_formula",
       io::key_formula_json(ref, verify_key_formula(ref, run.tables, cycle))},
  };
}

}  // namespace toricres::fixtures
