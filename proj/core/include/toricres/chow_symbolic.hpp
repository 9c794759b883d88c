#pragma once

#include <compare>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "toricres/dual_complex.hpp"
#include "toricres/lattice.hpp"
#include "toricres/obstruction.hpp"
#include "toricres/refinement.hpp"

namespace toricres {

enum class Level { Refined, Pushed };
enum class GeneratorKind { RestrictedOneCycle, WallClass };

/// Either the restriction of the one-cycle gamma_owner to the double locus of
/// `edge`, or the zero-cycle class alpha attached to a relative wall.
struct CycleGenerator {
  GeneratorKind kind = GeneratorKind::RestrictedOneCycle;
  Level level = Level::Refined;
  Label owner;
  Simplex edge;
  Simplex wall;

  static CycleGenerator restricted(const Label& owner, const Simplex& edge, Level level);
  static CycleGenerator wall_class(const Simplex& wall, Level level);

  friend bool operator==(const CycleGenerator&, const CycleGenerator&) = default;
  friend auto operator<=>(const CycleGenerator&, const CycleGenerator&) = default;
};

struct Ambient {
  Level level = Level::Refined;
  Label component;

  friend bool operator==(const Ambient&, const Ambient&) = default;
};

/// Element of the free abelian group on cycle generators, tagged with the
/// component it lives on. Zero coefficients are never stored.
class CycleExpression {
 public:
  CycleExpression() = default;
  explicit CycleExpression(Ambient ambient) : ambient_(std::move(ambient)) {}

  const Ambient& ambient() const { return ambient_; }
  const std::map<CycleGenerator, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const CycleGenerator& g, const Integer& coefficient);
  Integer coefficient(const CycleGenerator& g) const;
  /// The sub-expression made of wall classes.
  CycleExpression wall_terms() const;

  CycleExpression& operator+=(const CycleExpression& o);
  CycleExpression& operator-=(const CycleExpression& o);
  CycleExpression& operator*=(const Integer& k);
  friend CycleExpression operator+(CycleExpression a, const CycleExpression& b) { return a += b; }
  friend CycleExpression operator-(CycleExpression a, const CycleExpression& b) { return a -= b; }
  friend CycleExpression operator*(const Integer& k, CycleExpression a) { return a *= k; }

  friend bool operator==(const CycleExpression&, const CycleExpression&) = default;

 private:
  Ambient ambient_;
  std::map<CycleGenerator, Integer> terms_;
};

/// Formal one-cycle: gamma_v for every v in `gamma` plus alpha_tau with the
/// given multiplicities.
struct SymbolicOneCycle {
  Level level = Level::Refined;
  std::set<Label> gamma;
  std::map<Simplex, Integer> alpha;

  /// All gamma_v and every relative wall with multiplicity 1.
  static SymbolicOneCycle full_generic(const Refinement& ref);
};

/// q_* of a refined cycle: the gamma parts survive, pulled-back wall classes
/// push forward to zero.
SymbolicOneCycle pushforward(const SymbolicOneCycle& cycle);

CycleExpression phi_base(const DualComplex& base, const SymbolicOneCycle& pushed, const Label& v);

CycleExpression phi_refined(const Refinement& ref, const ObstructionTables& tables,
                            const SymbolicOneCycle& cycle, const Label& vtilde);

/// Pushes a refined-level expression on Y~_{v~} into the base component v.
/// Throws IllegalAmbient when d(v~, v) = r.
CycleExpression pushforward(const CycleExpression& expr, const Refinement& ref,
                            const ObstructionTables& tables, const Label& v);

struct KeyFormulaEntry {
  Label base_vertex;
  CycleExpression lhs;
  CycleExpression rhs;
  CycleExpression wall_residual;
  CycleExpression residual;  // rhs - lhs
  bool passed = false;
};

struct KeyFormulaReport {
  std::vector<KeyFormulaEntry> entries;
  bool ok() const;
};

KeyFormulaReport verify_key_formula(const Refinement& ref, const ObstructionTables& tables,
                                    const SymbolicOneCycle& cycle);

/// Human-readable rendering; refined vertices are written as coordinate
/// tuples over the sorted base vertices when `ref` is given.
std::string format_vertex(const Refinement& ref, const Label& id);
std::string format_generator(const CycleGenerator& g, const Refinement* ref);
std::string format_expression(const CycleExpression& e, const Refinement* ref);

}  // namespace toricres
