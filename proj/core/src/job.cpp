#include "toricres/job.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <set>

#include "toricres/error.hpp"

namespace toricres::job {

namespace {

const std::set<std::string> kJobKeys = {"complex", "r",        "mode", "schedule", "refinement",
                                        "commands", "seed", "intersection_override"};
const std::vector<std::string> kStages = {"tables", "wall-identity", "key-formula"};

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::InvalidInput, where + ": " + what);
}

class Stopwatch {
 public:
  explicit Stopwatch(bool enabled) : enabled_(enabled) {}
  void lap(json& timing, const std::string& name) {
    if (!enabled_) return;
    const auto now = std::chrono::steady_clock::now();
    timing[name] = std::chrono::duration<double, std::milli>(now - last_).count();
    last_ = now;
  }

 private:
  bool enabled_;
  std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

json report_header(const std::string& command, const JobSpec& job) {
  return json{{"engine", engine_json()},
              {"command", command},
              {"input_hash", input_hash(job.raw)},
              {"mode", std::string(to_string(job.mode))}};
}

}  // namespace

std::string_view to_string(Mode mode) {
  switch (mode) {
    case Mode::Default: return "default";
    case Mode::Schedule: return "schedule";
    case Mode::Refinement: return "refinement";
  }
  return "?";
}

int exit_code_for(ErrorCode code) { return is_input_error(code) ? kExitInput : kExitEngine; }

std::string input_hash(const json& j) {
  const std::string text = io::canonical_dump(j);
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(text.data(), text.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error(ErrorCode::EngineFailure, "SHA-256 digest failed");
  }
  std::string hex;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

json engine_json() { return json{{"name", "toricres"}, {"version", TORICRES_VERSION}}; }

JobSpec parse_job(const json& j) {
  if (!j.is_object()) bad("job", "expected a JSON object");
  for (const auto& [k, v] : j.items()) {
    if (!kJobKeys.count(k)) bad("job." + k, "unknown key");
  }
  JobSpec job;
  job.raw = j;
  if (!j.contains("complex")) bad("job", "missing 'complex'");
  job.complex = io::complex_from_json(j["complex"], "job.complex");
  if (!j.contains("r")) bad("job", "missing 'r'");
  job.r = io::integer_from_json(j["r"], "job.r");
  if (job.r < 1) bad("job.r", "ramification index must be positive");

  const bool has_schedule = j.contains("schedule") && !j["schedule"].is_null();
  const bool has_refinement = j.contains("refinement") && !j["refinement"].is_null();
  if (has_schedule && has_refinement) bad("job", "give either 'schedule' or 'refinement', not both");
  job.mode = has_schedule ? Mode::Schedule : has_refinement ? Mode::Refinement : Mode::Default;
  if (j.contains("mode")) {
    if (!j["mode"].is_string()) bad("job.mode", "expected a string");
    const std::string m = j["mode"].get<std::string>();
    if (m != "default" && m != "schedule" && m != "refinement") {
      bad("job.mode", "expected default, schedule or refinement");
    }
    if (m != to_string(job.mode)) {
      bad("job.mode", "mode '" + m + "' does not match the supplied keys");
    }
  }
  if (has_schedule) job.schedule = io::schedule_from_json(j["schedule"], "job.schedule");
  if (has_refinement) job.refinement = j["refinement"];

  if (j.contains("commands")) {
    const json& c = j["commands"];
    if (!c.is_array()) bad("job.commands", "expected an array");
    for (std::size_t i = 0; i < c.size(); ++i) {
      const std::string at = "job.commands[" + std::to_string(i) + "]";
      if (!c[i].is_string()) bad(at, "expected a string");
      const std::string name = c[i].get<std::string>();
      if (std::find(kStages.begin(), kStages.end(), name) == kStages.end()) {
        bad(at, "unknown stage '" + name + "'");
      }
      job.commands.push_back(name);
    }
  } else {
    job.commands = kStages;
  }
  if (j.contains("seed")) {
    if (!j["seed"].is_number_integer()) bad("job.seed", "expected an integer");
    job.seed = j["seed"].get<std::uint64_t>();
  }
  if (j.contains("intersection_override")) {
    const json& o = j["intersection_override"];
    if (!o.is_object() || !o.contains("rows") || !o.contains("columns") || !o.contains("matrix")) {
      bad("job.intersection_override", "expected rows, columns and matrix");
    }
    job.intersection_override = o;
  }
  return job;
}

Resolved obtain_refinement(const JobSpec& job) {
  Resolved out;
  if (job.mode == Mode::Refinement) {
    out.refinement = io::refinement_from_json(job.refinement, job.complex, job.r, "job.refinement");
    out.resolution = nullptr;
    return out;
  }
  LocalFanState state = LocalFanState::initial(job.complex, job.r);
  std::vector<Label> schedule;
  if (job.mode == Mode::Schedule) {
    schedule = job.schedule;
    state = run_schedule(std::move(state), schedule);
  } else {
    schedule = default_schedule(state, &state);
  }
  const TerminalReport terminal = state.check_terminal();
  out.resolution = json{{"schedule", io::schedule_json(schedule)},
                        {"steps", io::steps_json(state.history())},
                        {"terminal", io::terminal_json(terminal)}};
  if (!terminal.regular) {
    throw Error(ErrorCode::NotTerminal, "job.schedule: the schedule leaves " +
                                            std::to_string(terminal.offending.size()) +
                                            " non-regular cone(s)");
  }
  out.refinement = Refinement::from_state(state);
  return out;
}

void apply_intersection_override(const Refinement& ref, const json& o, ObstructionTables& tables) {
  const std::string where = "job.intersection_override";
  if (!o["rows"].is_array() || !o["columns"].is_array() || !o["matrix"].is_array()) {
    bad(where, "rows, columns and matrix must be arrays");
  }
  std::vector<Label> rows;
  for (std::size_t i = 0; i < o["rows"].size(); ++i) {
    rows.push_back(io::resolve_vertex(ref, o["rows"][i], where + ".rows[" + std::to_string(i) + "]"));
  }
  std::set<Simplex> known;
  for (const auto& w : ref.relative_walls()) known.insert(w.wall);
  std::vector<Simplex> columns;
  for (std::size_t c = 0; c < o["columns"].size(); ++c) {
    const std::string at = where + ".columns[" + std::to_string(c) + "]";
    const json& cj = o["columns"][c];
    if (!cj.is_array()) bad(at, "expected a list of vertices");
    std::vector<Label> ids;
    for (std::size_t k = 0; k < cj.size(); ++k) {
      ids.push_back(io::resolve_vertex(ref, cj[k], at + "[" + std::to_string(k) + "]"));
    }
    const Simplex wall(ids);
    if (!known.count(wall)) {
      throw Error(ErrorCode::UnknownSimplex, at + ": " + wall.to_string() + " is not a relative wall");
    }
    columns.push_back(wall);
  }
  const json& m = o["matrix"];
  if (m.size() != rows.size()) bad(where + ".matrix", "expected one row per entry of 'rows'");
  for (const auto& wall : columns) tables.intersection[wall].clear();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string at = where + ".matrix[" + std::to_string(i) + "]";
    if (!m[i].is_array() || m[i].size() != columns.size()) bad(at, "expected one entry per column");
    for (std::size_t c = 0; c < columns.size(); ++c) {
      const Integer x = io::integer_from_json(m[i][c], at + "[" + std::to_string(c) + "]");
      if (x != 0) tables.intersection[columns[c]][rows[i]] = x;
    }
  }
}

Outcome cmd_resolve(const JobSpec& job, const Options& options) {
  Stopwatch clock(options.timing);
  json timing = json::object();
  json report = report_header("resolve", job);
  const Resolved resolved = obtain_refinement(job);
  clock.lap(timing, "resolve");
  report["resolution"] = resolved.resolution;
  report["refinement"] = io::refinement_json(resolved.refinement);
  report["walls"] = io::walls_json(resolved.refinement);
  report["verdict"] = "pass";
  report["exit_code"] = kExitOk;
  if (options.timing) report["timing_ms"] = timing;
  return {report, kExitOk};
}

Outcome cmd_verify(const JobSpec& job, const Options& options) {
  Stopwatch clock(options.timing);
  json timing = json::object();
  json report = report_header("verify", job);
  const Resolved resolved = obtain_refinement(job);
  const Refinement& ref = resolved.refinement;
  clock.lap(timing, "resolve");
  report["resolution"] = resolved.resolution;
  report["refinement"] = io::refinement_json(ref);
  report["walls"] = io::walls_json(ref);

  ObstructionTables tables = compute_tables(ref);
  if (job.intersection_override) apply_intersection_override(ref, *job.intersection_override, tables);
  clock.lap(timing, "tables");

  json stages = json::object();
  bool all_passed = true;
  auto wants = [&](const std::string& s) {
    return std::find(job.commands.begin(), job.commands.end(), s) != job.commands.end();
  };
  if (wants("tables")) report["tables"] = io::tables_json(ref, tables);
  if (wants("wall-identity")) {
    const WallIdentityReport w = verify_wall_identity(ref, tables);
    stages["wall-identity"] = io::wall_identity_json(ref, w);
    all_passed = all_passed && w.ok();
    clock.lap(timing, "wall-identity");
  }
  if (wants("key-formula")) {
    const KeyFormulaReport k =
        verify_key_formula(ref, tables, SymbolicOneCycle::full_generic(ref));
    stages["key-formula"] = io::key_formula_json(ref, k);
    all_passed = all_passed && k.ok();
    clock.lap(timing, "key-formula");
  }
  const int code = all_passed ? kExitOk : kExitVerificationFailed;
  report["stages"] = stages;
  report["verdict"] = all_passed ? "pass" : "fail";
  report["exit_code"] = code;
  if (options.timing) report["timing_ms"] = timing;
  return {report, code};
}

Outcome run_guarded(const std::string& command, const json& raw,
                    const std::function<Outcome(const JobSpec&)>& body) {
  auto failure = [&](const std::string& code, const std::string& message, int exit_code) {
    json report{{"engine", engine_json()},
                {"command", command},
                {"input_hash", input_hash(raw)},
                {"verdict", "error"},
                {"error",
                 {{"code", code},
                  {"kind", exit_code == kExitInput ? "input" : "engine"},
                  {"message", message}}},
                {"exit_code", exit_code}};
    return Outcome{report, exit_code};
  };
  try {
    return body(parse_job(raw));
  } catch (const Error& e) {
    return failure(std::string(to_string(e.code())), e.detail(), exit_code_for(e.code()));
  } catch (const json::exception& e) {
    return failure("InvalidInput", e.what(), kExitInput);
  } catch (const std::exception& e) {
    return failure("EngineFailure", e.what(), kExitEngine);
  }
}

}  // namespace toricres::job
