#include "toricres/chow_symbolic.hpp"

#include <algorithm>
#include <sstream>

#include "toricres/error.hpp"

namespace toricres {

CycleGenerator CycleGenerator::restricted(const Label& owner, const Simplex& edge, Level level) {
  if (edge.size() != 2 || !edge.contains(owner)) {
    throw Error(ErrorCode::InvalidInput,
                "restricted one-cycle needs an edge containing its owner, got " + owner + " on " +
                    edge.to_string());
  }
  CycleGenerator g;
  g.kind = GeneratorKind::RestrictedOneCycle;
  g.level = level;
  g.owner = owner;
  g.edge = edge;
  return g;
}

CycleGenerator CycleGenerator::wall_class(const Simplex& wall, Level level) {
  CycleGenerator g;
  g.kind = GeneratorKind::WallClass;
  g.level = level;
  g.wall = wall;
  return g;
}

void CycleExpression::add(const CycleGenerator& g, const Integer& coefficient) {
  if (coefficient == 0) return;
  auto [it, fresh] = terms_.emplace(g, coefficient);
  if (!fresh) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer CycleExpression::coefficient(const CycleGenerator& g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? Integer(0) : it->second;
}

CycleExpression CycleExpression::wall_terms() const {
  CycleExpression out(ambient_);
  for (const auto& [g, c] : terms_) {
    if (g.kind == GeneratorKind::WallClass) out.terms_.emplace(g, c);
  }
  return out;
}

CycleExpression& CycleExpression::operator+=(const CycleExpression& o) {
  if (!(o.ambient_ == ambient_)) {
    throw Error(ErrorCode::InvalidInput, "adding cycle expressions on different components");
  }
  for (const auto& [g, c] : o.terms_) add(g, c);
  return *this;
}

CycleExpression& CycleExpression::operator-=(const CycleExpression& o) {
  if (!(o.ambient_ == ambient_)) {
    throw Error(ErrorCode::InvalidInput, "subtracting cycle expressions on different components");
  }
  for (const auto& [g, c] : o.terms_) add(g, -c);
  return *this;
}

CycleExpression& CycleExpression::operator*=(const Integer& k) {
  if (k == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [g, c] : terms_) c *= k;
  return *this;
}

SymbolicOneCycle SymbolicOneCycle::full_generic(const Refinement& ref) {
  SymbolicOneCycle c;
  c.level = Level::Refined;
  for (const auto& v : ref.base().vertices()) c.gamma.insert(v);
  for (const auto& w : ref.relative_walls()) c.alpha[w.wall] = 1;
  return c;
}

SymbolicOneCycle pushforward(const SymbolicOneCycle& cycle) {
  SymbolicOneCycle out;
  out.level = Level::Pushed;
  out.gamma = cycle.gamma;
  return out;
}

CycleExpression phi_base(const DualComplex& base, const SymbolicOneCycle& pushed, const Label& v) {
  if (pushed.level != Level::Pushed) {
    throw Error(ErrorCode::InvalidInput, "phi_base expects a pushed-forward cycle");
  }
  CycleExpression out(Ambient{Level::Pushed, v});
  for (const auto& w : base.adjacent_vertices(v)) {
    const Simplex edge{v, w};
    if (pushed.gamma.count(w)) out.add(CycleGenerator::restricted(w, edge, Level::Pushed), 1);
    if (pushed.gamma.count(v)) out.add(CycleGenerator::restricted(v, edge, Level::Pushed), -1);
  }
  return out;
}

CycleExpression phi_refined(const Refinement& ref, const ObstructionTables& tables,
                            const SymbolicOneCycle& cycle, const Label& vtilde) {
  if (cycle.level != Level::Refined) {
    throw Error(ErrorCode::InvalidInput, "phi_refined expects a cycle on the refinement");
  }
  const Simplex image = support(ref.vertex(vtilde).coords);
  CycleExpression out(Ambient{Level::Refined, vtilde});

  for (const auto& v : ref.relative_adjacent(vtilde)) {
    const Label& u = image.vertices().front();
    if (cycle.gamma.count(u)) out.add(CycleGenerator::restricted(u, Simplex{v, u}, Level::Refined), -1);
  }

  for (const auto& edge : ref.base().simplices_of_dimension(1)) {
    for (const auto& v : edge) {
      std::vector<Label> hits;
      for (const auto& n : ref.neighbors(ref.lift(v))) {
        if (support(ref.vertex(n).coords).is_face_of(edge)) hits.push_back(n);
      }
      if (hits.size() != 1) {
        throw Error(ErrorCode::EngineFailure,
                    "expected one neighbour of the lift of " + v + " over " + edge.to_string() +
                        ", found " + std::to_string(hits.size()));
      }
      if (hits.front() == vtilde && cycle.gamma.count(v)) {
        out.add(CycleGenerator::restricted(v, edge, Level::Refined), 1);
      }
    }
  }

  for (const auto& [wall, mult] : cycle.alpha) {
    out.add(CycleGenerator::wall_class(wall, Level::Refined), mult * tables.I(wall, vtilde));
  }
  return out;
}

CycleExpression pushforward(const CycleExpression& expr, const Refinement& ref,
                            const ObstructionTables& tables, const Label& v) {
  if (expr.ambient().level != Level::Refined) {
    throw Error(ErrorCode::InvalidInput, "expression is already pushed forward");
  }
  const Label& vtilde = expr.ambient().component;
  if (tables.d(vtilde, v) == ref.r()) {
    throw Error(ErrorCode::IllegalAmbient,
                "component " + vtilde + " does not map into base component " + v);
  }
  CycleExpression out(Ambient{Level::Pushed, v});
  for (const auto& [g, c] : expr.terms()) {
    CycleGenerator pushed = g;
    pushed.level = Level::Pushed;
    out.add(pushed, c);
  }
  return out;
}

bool KeyFormulaReport::ok() const {
  return std::all_of(entries.begin(), entries.end(), [](const KeyFormulaEntry& e) { return e.passed; });
}

KeyFormulaReport verify_key_formula(const Refinement& ref, const ObstructionTables& tables,
                                    const SymbolicOneCycle& cycle) {
  std::map<Label, CycleExpression> phi;
  for (const auto& [id, vt] : ref.vertices()) phi.emplace(id, phi_refined(ref, tables, cycle, id));
  const SymbolicOneCycle pushed = pushforward(cycle);

  KeyFormulaReport report;
  for (const auto& v : ref.base().vertices()) {
    KeyFormulaEntry e;
    e.base_vertex = v;
    e.rhs = CycleExpression(Ambient{Level::Pushed, v});
    for (const auto& [id, expr] : phi) {
      const Integer d = tables.d(id, v);
      if (d == ref.r()) continue;
      e.rhs += (ref.r() - d) * pushforward(expr, ref, tables, v);
    }
    e.lhs = phi_base(ref.base(), pushed, v);
    e.wall_residual = e.rhs.wall_terms();
    e.residual = e.rhs - e.lhs;
    e.passed = e.residual.is_zero() && e.wall_residual.is_zero();
    report.entries.push_back(std::move(e));
  }
  return report;
}

std::string format_vertex(const Refinement& ref, const Label& id) {
  std::ostringstream os;
  os << '(';
  bool first = true;
  for (const auto& v : ref.base().vertices()) {
    if (!first) os << ',';
    first = false;
    os << ref.coordinate(id, v);
  }
  os << ')';
  return os.str();
}

std::string format_generator(const CycleGenerator& g, const Refinement* ref) {
  const bool pushed = g.level == Level::Pushed;
  if (g.kind == GeneratorKind::RestrictedOneCycle) {
    std::string edge;
    for (const auto& v : g.edge) edge += v;
    if (g.edge.size() == 2 && (g.edge.vertices()[0].size() > 1 || g.edge.vertices()[1].size() > 1)) {
      edge = g.edge.to_string();
    }
    return pushed ? "(q_*γ_" + g.owner + ")|" + edge : "γ_" + g.owner + "|" + edge;
  }
  auto name = [&](const Label& id) { return ref ? format_vertex(*ref, id) : id; };
  std::string body;
  if (g.wall.size() == 1) {
    body = "α_" + name(g.wall.vertices().front());
  } else {
    body = "α′_[";
    bool first = true;
    for (const auto& id : g.wall) {
      if (!first) body += ',';
      first = false;
      body += name(id);
    }
    body += ']';
  }
  return pushed ? "q_*" + body : body;
}

std::string format_expression(const CycleExpression& e, const Refinement* ref) {
  if (e.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [g, c] : e.terms()) {
    const bool negative = c < 0;
    const Integer mag = negative ? Integer(-c) : c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (mag != 1) os << mag;
    os << format_generator(g, ref);
  }
  return os.str();
}

}  // namespace toricres
