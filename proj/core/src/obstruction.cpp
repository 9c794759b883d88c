#include "toricres/obstruction.hpp"

#include "toricres/error.hpp"

namespace toricres {

Integer ObstructionTables::d(const Label& vtilde, const Label& v) const {
  auto row = distance.find(vtilde);
  if (row == distance.end()) throw Error(ErrorCode::UnknownVertex, "unknown refined vertex '" + vtilde + "'");
  auto it = row->second.find(v);
  if (it == row->second.end()) throw Error(ErrorCode::UnknownVertex, "unknown base vertex '" + v + "'");
  return it->second;
}

Integer ObstructionTables::I(const Simplex& wall, const Label& vtilde) const {
  auto col = intersection.find(wall);
  if (col == intersection.end()) return 0;
  auto it = col->second.find(vtilde);
  return it == col->second.end() ? Integer(0) : it->second;
}

DistanceTable distance_table(const Refinement& ref) {
  DistanceTable d;
  for (const auto& [id, vt] : ref.vertices()) {
    auto& row = d[id];
    for (const auto& v : ref.base().vertices()) row[v] = ref.r() - ref.coordinate(id, v);
  }
  return d;
}

IntersectionTable intersection_table(const Refinement& ref) {
  IntersectionTable table;
  for (const auto& w : ref.relative_walls()) {
    const Simplex& frame = w.base;
    auto vec = [&](const Label& id) {
      std::vector<Integer> e;
      for (const auto& v : frame) e.push_back(ref.coordinate(id, v));
      return LatticeVector(std::move(e));
    };
    std::vector<Label> order;
    for (const auto& id : w.flanking[0]) {
      if (!w.wall.contains(id)) order.push_back(id);
    }
    for (const auto& id : w.wall) order.push_back(id);
    for (const auto& id : w.flanking[1]) {
      if (!w.wall.contains(id)) order.push_back(id);
    }
    if (order.size() != w.wall.size() + 2) {
      throw Error(ErrorCode::EngineFailure, "malformed wall " + w.wall.to_string());
    }
    std::vector<LatticeVector> rays;
    std::vector<std::size_t> shared;
    for (std::size_t i = 0; i < order.size(); ++i) {
      rays.push_back(vec(order[i]));
      if (i != 0 && i + 1 != order.size()) shared.push_back(i);
    }
    const WallRelation rel = wall_relation(rays, shared);
    auto& col = table[w.wall];
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (rel.coefficients[i] != 0) col[order[i]] = rel.coefficients[i];
    }
  }
  return table;
}

ObstructionTables compute_tables(const Refinement& ref) {
  return ObstructionTables{ref.r(), distance_table(ref), intersection_table(ref)};
}

WallIdentityReport verify_wall_identity(const Refinement& ref, const ObstructionTables& tables) {
  WallIdentityReport report;
  for (const auto& v : ref.base().vertices()) {
    for (const auto& w : ref.relative_walls()) {
      Integer sum = 0;
      auto col = tables.intersection.find(w.wall);
      if (col != tables.intersection.end()) {
        for (const auto& [vt, value] : col->second) sum += (tables.r - tables.d(vt, v)) * value;
      }
      ++report.checked;
      if (sum != 0) report.violations.push_back({v, w.wall, sum});
    }
  }
  return report;
}

}  // namespace toricres
