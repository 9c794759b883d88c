#include "toricres/refinement.hpp"

#include <algorithm>
#include <sstream>

#include "toricres/error.hpp"

namespace toricres {

namespace {

Integer power(const Integer& base, int exp) {
  Integer out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

LatticeVector frame_vector(const Simplex& frame, const GlobalPoint& p) {
  std::vector<Integer> e;
  e.emplace_back(1);
  for (std::size_t i = 1; i < frame.size(); ++i) {
    auto it = p.find(frame.vertices()[i]);
    e.push_back(it == p.end() ? Integer(0) : it->second);
  }
  return LatticeVector(std::move(e));
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += "; ";
    out += parts[i];
  }
  return out;
}

}  // namespace

Refinement Refinement::from_state(const LocalFanState& state) {
  const TerminalReport term = state.check_terminal();
  if (!term.regular) {
    throw Error(ErrorCode::NotTerminal, std::to_string(term.offending.size()) +
                                            " cone(s) are not regular yet");
  }
  std::set<Label> used;
  std::vector<std::vector<Label>> facets;
  for (const auto& chart : state.charts()) {
    for (const auto& cone : chart.cones) {
      std::vector<Label> facet;
      for (const auto& ray : cone.rays) {
        const auto label = state.label_at(state.global_point(chart.carrier, ray));
        if (!label) throw Error(ErrorCode::EngineFailure, "unregistered ray " + ray.to_string());
        facet.push_back(*label);
        used.insert(*label);
      }
      facets.push_back(std::move(facet));
    }
  }
  std::vector<RefinedVertex> vertices;
  for (const auto& label : used) {
    const GlobalPoint& p = state.point_of(label);
    vertices.push_back({label, support(p), p});
  }
  return import_triangulation(state.base(), state.r(), std::move(vertices), facets);
}

Refinement Refinement::import_triangulation(const DualComplex& base, const Integer& r,
                                            std::vector<RefinedVertex> vertices,
                                            const std::vector<std::vector<Label>>& facets) {
  std::vector<std::string> problems;
  auto bail = [&problems]() {
    if (!problems.empty()) throw Error(ErrorCode::ValidationFailure, join(problems));
  };
  if (r < 1) {
    problems.push_back("ramification index must be positive");
    bail();
  }

  Refinement ref;
  ref.base_ = base;
  ref.r_ = r;

  for (auto& v : vertices) {
    if (v.id.empty()) {
      problems.push_back("refined vertex with empty id");
      continue;
    }
    if (ref.vertices_.count(v.id)) {
      problems.push_back("duplicate refined vertex id '" + v.id + "'");
      continue;
    }
    if (!base.contains(v.carrier)) {
      problems.push_back("carrier " + v.carrier.to_string() + " of '" + v.id +
                         "' is not a simplex of the base");
    }
    GlobalPoint clean;
    Integer sum = 0;
    for (const auto& [bv, c] : v.coords) {
      if (!base.has_vertex(bv)) {
        problems.push_back("'" + v.id + "' has a coordinate at unknown base vertex '" + bv + "'");
      }
      if (c < 0) problems.push_back("'" + v.id + "' has a negative coordinate at '" + bv + "'");
      if (c != 0) clean[bv] = c;
      sum += c;
    }
    if (sum != r) {
      problems.push_back("coordinates of '" + v.id + "' sum to " + sum.str() + " instead of " +
                         r.str());
    }
    if (!support(clean).is_face_of(v.carrier)) {
      problems.push_back("coordinates of '" + v.id + "' are not supported on its carrier");
    }
    v.coords = std::move(clean);
    auto [it, fresh] = ref.by_point_.emplace(v.coords, v.id);
    if (!fresh) problems.push_back("'" + v.id + "' and '" + it->second + "' coincide");
    ref.vertices_.emplace(v.id, std::move(v));
  }
  for (const auto& bv : base.vertices()) {
    auto it = ref.by_point_.find(GlobalPoint{{bv, r}});
    if (it == ref.by_point_.end()) {
      problems.push_back("no refined vertex over base vertex '" + bv + "'");
    } else {
      ref.lifts_[bv] = it->second;
    }
  }
  bail();

  std::map<Simplex, std::vector<Simplex>> over;  // maximal base simplex -> facets
  std::set<Simplex> seen;
  for (const auto& raw : facets) {
    if (raw.empty()) {
      problems.push_back("empty refined facet");
      continue;
    }
    bool known = true;
    for (const auto& id : raw) {
      if (!ref.vertices_.count(id)) {
        problems.push_back("facet mentions unknown refined vertex '" + id + "'");
        known = false;
      }
    }
    if (!known) continue;
    Simplex f(raw);
    if (f.size() != raw.size()) {
      problems.push_back("facet " + f.to_string() + " repeats a vertex");
      continue;
    }
    if (!seen.insert(f).second) {
      problems.push_back("facet " + f.to_string() + " is listed twice");
      continue;
    }
    Simplex image;
    for (const auto& id : f) image = image.united(support(ref.vertices_.at(id).coords));
    const auto& base_facets = base.facets();
    if (std::find(base_facets.begin(), base_facets.end(), image) == base_facets.end()) {
      problems.push_back("facet " + f.to_string() + " does not lie over a maximal base simplex");
      continue;
    }
    if (image.dimension() != f.dimension()) {
      problems.push_back("facet " + f.to_string() + " has dimension " +
                         std::to_string(f.dimension()) + " over the " +
                         std::to_string(image.dimension()) + "-simplex " + image.to_string());
      continue;
    }
    IntegerMatrix m;
    for (const auto& id : f) m.push_back(frame_vector(image, ref.vertices_.at(id).coords).entries());
    const Integer det = determinant(m);
    if (det != 1 && det != -1) {
      problems.push_back("facet " + f.to_string() + " is not unimodular (determinant " +
                         det.str() + ")");
      continue;
    }
    over[image].push_back(f);
    ref.facets_.push_back(f);
  }

  for (const auto& sigma : base.facets()) {
    const auto& cells = over[sigma];
    const Integer expected = power(r, sigma.dimension());
    if (Integer(cells.size()) != expected) {
      problems.push_back("cell count over " + sigma.to_string() + " is " +
                         std::to_string(cells.size()) + " instead of " + expected.str());
    }
    if (sigma.dimension() == 0) continue;
    // Pseudomanifold test: interior ridges bound two cells lying on opposite
    // sides, boundary ridges bound one.
    std::map<Simplex, std::vector<int>> ridge_sides;
    for (const auto& cell : cells) {
      for (const auto& apex : cell) {
        const Simplex ridge = cell.without(apex);
        IntegerMatrix m;
        for (const auto& id : ridge) m.push_back(frame_vector(sigma, ref.vertices_.at(id).coords).entries());
        m.push_back(frame_vector(sigma, ref.vertices_.at(apex).coords).entries());
        ridge_sides[ridge].push_back(determinant(m) > 0 ? 1 : -1);
      }
    }
    for (const auto& [ridge, sides] : ridge_sides) {
      Simplex image;
      for (const auto& id : ridge) image = image.united(support(ref.vertices_.at(id).coords));
      const bool interior = image == sigma;
      if (interior && (sides.size() != 2 || sides[0] == sides[1])) {
        problems.push_back("interior ridge " + ridge.to_string() + " over " + sigma.to_string() +
                           " is not shared by two cells on opposite sides");
      } else if (!interior && sides.size() != 1) {
        problems.push_back("boundary ridge " + ridge.to_string() + " over " + sigma.to_string() +
                           " bounds " + std::to_string(sides.size()) + " cells");
      }
    }
  }
  bail();

  std::vector<Label> ids;
  for (const auto& [id, v] : ref.vertices_) ids.push_back(id);
  std::vector<std::vector<Label>> facet_lists;
  for (const auto& f : ref.facets_) facet_lists.push_back(f.vertices());
  try {
    ref.complex_ = DualComplex::build(ids, facet_lists);
  } catch (const Error& e) {
    problems.push_back(e.what());
    bail();
  }

  for (const auto& face : base.simplices()) {
    if (face.dimension() < 1) continue;
    if (std::find(base.facets().begin(), base.facets().end(), face) != base.facets().end()) continue;
    std::size_t count = 0;
    for (const auto& s : ref.complex_.simplices()) {
      if (s.dimension() == face.dimension() && ref.psi(s).is_face_of(face)) ++count;
    }
    const Integer expected = power(r, face.dimension());
    if (Integer(count) != expected) {
      problems.push_back("face " + face.to_string() + " carries " + std::to_string(count) +
                         " cells instead of " + expected.str());
    }
  }
  bail();

  for (const auto& id : ids) ref.neighbors_[id];
  for (const auto& s : ref.complex_.simplices()) {
    if (s.size() != 2) continue;
    ref.neighbors_[s.vertices()[0]].insert(s.vertices()[1]);
    ref.neighbors_[s.vertices()[1]].insert(s.vertices()[0]);
  }
  ref.compute_walls();
  return ref;
}

const RefinedVertex& Refinement::vertex(const Label& id) const {
  auto it = vertices_.find(id);
  if (it == vertices_.end()) throw Error(ErrorCode::UnknownVertex, "unknown refined vertex '" + id + "'");
  return it->second;
}

Integer Refinement::coordinate(const Label& id, const Label& v) const {
  const auto& coords = vertex(id).coords;
  auto it = coords.find(v);
  return it == coords.end() ? Integer(0) : it->second;
}

std::optional<Label> Refinement::vertex_at(const GlobalPoint& p) const {
  GlobalPoint clean;
  for (const auto& [v, c] : p) {
    if (c != 0) clean[v] = c;
  }
  auto it = by_point_.find(clean);
  if (it == by_point_.end()) return std::nullopt;
  return it->second;
}

Simplex Refinement::psi(const Simplex& s) const {
  if (!complex_.contains(s)) {
    throw Error(ErrorCode::UnknownSimplex, s.to_string() + " is not a simplex of the refinement");
  }
  Simplex image;
  for (const auto& id : s) image = image.united(support(vertices_.at(id).coords));
  return image;
}

std::set<Simplex> Refinement::psi_star(const Simplex& sigma) const {
  std::set<Simplex> out;
  for (const auto& s : complex_.simplices()) {
    if (psi(s).is_face_of(sigma)) out.insert(s);
  }
  return out;
}

std::set<Simplex> Refinement::psi_star_by_support(const Simplex& sigma) const {
  std::set<Label> inside;
  for (const auto& [id, v] : vertices_) {
    if (support(v.coords).is_face_of(sigma)) inside.insert(id);
  }
  std::set<Simplex> out;
  for (const auto& s : complex_.simplices()) {
    if (std::all_of(s.begin(), s.end(), [&](const Label& id) { return inside.count(id) > 0; })) {
      out.insert(s);
    }
  }
  return out;
}

const Label& Refinement::lift(const Label& v) const {
  auto it = lifts_.find(v);
  if (it == lifts_.end()) throw Error(ErrorCode::UnknownVertex, "unknown base vertex '" + v + "'");
  return it->second;
}

const std::set<Label>& Refinement::neighbors(const Label& id) const {
  auto it = neighbors_.find(id);
  if (it == neighbors_.end()) throw Error(ErrorCode::UnknownVertex, "unknown refined vertex '" + id + "'");
  return it->second;
}

std::set<Label> Refinement::relative_adjacent(const Label& id) const {
  const Simplex image = support(vertex(id).coords);
  if (image.size() != 1) return {};
  return base_.adjacent_vertices(image.vertices().front());
}

void Refinement::compute_walls() {
  std::map<Simplex, RelativeWall> found;
  for (const auto& sigma : base_.simplices()) {
    if (sigma.dimension() < 1) continue;
    std::map<Simplex, std::vector<Simplex>> by_ridge;
    for (const auto& s : psi_star(sigma)) {
      if (s.dimension() != sigma.dimension()) continue;
      for (const auto& v : s) by_ridge[s.without(v)].push_back(s);
    }
    for (auto& [ridge, tops] : by_ridge) {
      if (tops.size() < 2) continue;
      if (tops.size() > 2) {
        throw Error(ErrorCode::ValidationFailure,
                    "ridge " + ridge.to_string() + " is shared by more than two cells");
      }
      std::sort(tops.begin(), tops.end());
      RelativeWall w;
      w.wall = ridge;
      w.flanking = {tops[0], tops[1]};
      w.base = sigma;
      w.psi_tau = psi(ridge);
      w.anchor = ridge.vertices().front();
      found.emplace(ridge, std::move(w));
    }
  }
  walls_.clear();
  for (auto& [ridge, w] : found) walls_.push_back(std::move(w));
}

}  // namespace toricres
