#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "toricres/json_io.hpp"

namespace toricres::fixtures {

using io::json;

/// Which triangulation a fixture run uses: the fixture's own schedule (or the
/// default one when it has none), its alternative schedule, or its literal
/// triangulation imported directly.
enum class Variant { Schedule, Reordered, Figure };

std::string_view to_string(Variant v);
Variant variant_from_string(const std::string& s);

/// $TORICRES_FIXTURE_DIR if set, otherwise the directory baked in at build time.
std::filesystem::path fixture_dir();
json load(const std::string& name);

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct IntersectionMatrix {
  std::vector<std::string> rows;
  std::vector<std::string> columns;
  std::vector<std::vector<Integer>> values;
};

struct FixtureRun {
  std::string name;
  Variant variant = Variant::Schedule;
  json data;
  Refinement refinement;
  ObstructionTables tables;
  std::vector<Check> checks;

  bool ok() const;
  const Check* check(const std::string& name) const;
};

/// Builds the refinement for `variant`; throws on engine or input errors.
Refinement build_refinement(const json& data, Variant variant);

FixtureRun run_fixture(const std::string& name, Variant variant = Variant::Schedule);
FixtureRun run_fixture(const std::string& name, const json& data, Variant variant);

/// Fixture order when the fixture lists one, lexicographic otherwise.
IntersectionMatrix intersection_matrix(const FixtureRun& run);
/// Lexicographic rows (vertex ids) and columns (walls).
IntersectionMatrix intersection_matrix(const Refinement& ref, const ObstructionTables& tables);

std::string matrix_csv(const IntersectionMatrix& m);
std::string matrix_markdown(const IntersectionMatrix& m);

json report_json(const FixtureRun& run);

}  // namespace toricres::fixtures
