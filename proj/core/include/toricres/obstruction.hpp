#pragma once

#include <map>
#include <vector>

#include "toricres/dual_complex.hpp"
#include "toricres/lattice.hpp"
#include "toricres/refinement.hpp"

namespace toricres {

/// d[refined vertex][base vertex].
using DistanceTable = std::map<Label, std::map<Label, Integer>>;
/// I[relative wall][refined vertex], zero entries omitted.
using IntersectionTable = std::map<Simplex, std::map<Label, Integer>>;

struct ObstructionTables {
  Integer r;
  DistanceTable distance;
  IntersectionTable intersection;

  Integer d(const Label& vtilde, const Label& v) const;
  Integer I(const Simplex& wall, const Label& vtilde) const;
};

DistanceTable distance_table(const Refinement& ref);
IntersectionTable intersection_table(const Refinement& ref);
ObstructionTables compute_tables(const Refinement& ref);

struct WallIdentityViolation {
  Label base_vertex;
  Simplex wall;
  Integer sum;
};

struct WallIdentityReport {
  std::size_t checked = 0;
  std::vector<WallIdentityViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// Checks sum over v~ of (r - d(v~, v)) * I(tau, v~) = 0 for every base vertex v
/// and every relative wall tau.
WallIdentityReport verify_wall_identity(const Refinement& ref, const ObstructionTables& tables);

}  // namespace toricres
