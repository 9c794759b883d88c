#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "toricres/chow_symbolic.hpp"
#include "toricres/dual_complex.hpp"
#include "toricres/lattice.hpp"
#include "toricres/obstruction.hpp"
#include "toricres/refinement.hpp"
#include "toricres/toric_resolution.hpp"

namespace toricres::io {

using nlohmann::json;

/// Integers that fit in 64 bits are written as numbers, larger ones as strings.
json integer_json(const Integer& x);
Integer integer_from_json(const json& j, const std::string& where);

json complex_json(const DualComplex& c);
DualComplex complex_from_json(const json& j, const std::string& where = "complex");

json point_json(const GlobalPoint& p);
GlobalPoint point_from_json(const json& j, const std::string& where);

json refinement_json(const Refinement& ref);
/// Reads {"base", "r", "vertices", "facets"}; "base" and "r" may be supplied by the caller.
Refinement refinement_from_json(const json& j, const std::string& where = "refinement");
Refinement refinement_from_json(const json& j, const DualComplex& base, const Integer& r,
                                const std::string& where = "refinement");

/// A refined vertex given by id (string), by coordinates (object) or by a
/// coordinate tuple over the sorted base vertices (array).
Label resolve_vertex(const Refinement& ref, const json& j, const std::string& where);

json schedule_json(const std::vector<Label>& schedule);
std::vector<Label> schedule_from_json(const json& j, const std::string& where = "schedule");

json terminal_json(const TerminalReport& report);
json steps_json(const std::vector<StepRecord>& steps);
json walls_json(const Refinement& ref);
json tables_json(const Refinement& ref, const ObstructionTables& tables);
json wall_identity_json(const Refinement& ref, const WallIdentityReport& report);
json expression_json(const CycleExpression& e, const Refinement& ref);
json key_formula_json(const Refinement& ref, const KeyFormulaReport& report);

/// Stable serialization: sorted keys, two-space indent, trailing newline.
std::string canonical_dump(const json& j);

}  // namespace toricres::io
