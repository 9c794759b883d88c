#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "toricres/dual_complex.hpp"
#include "toricres/lattice.hpp"
#include "toricres/toric_resolution.hpp"

namespace toricres {

struct RefinedVertex {
  Label id;
  Simplex carrier;
  GlobalPoint coords;  // nonzero barycentric coordinates, summing to r
};

struct RelativeWall {
  Simplex wall;
  std::array<Simplex, 2> flanking;
  Simplex base;
  Simplex psi_tau;
  Label anchor;
};

/// A refinement C~ -> C realized as a unimodular triangulation of every
/// scaled maximal simplex r * Delta.
class Refinement {
 public:
  static Refinement from_state(const LocalFanState& state);
  /// Throws ValidationFailure listing every violated invariant.
  static Refinement import_triangulation(const DualComplex& base, const Integer& r,
                                         std::vector<RefinedVertex> vertices,
                                         const std::vector<std::vector<Label>>& facets);

  const DualComplex& base() const { return base_; }
  const Integer& r() const { return r_; }
  const std::map<Label, RefinedVertex>& vertices() const { return vertices_; }
  const std::vector<Simplex>& facets() const { return facets_; }
  const DualComplex& complex() const { return complex_; }
  const std::vector<RelativeWall>& relative_walls() const { return walls_; }

  const RefinedVertex& vertex(const Label& id) const;
  /// Barycentric coordinate of `id` at base vertex v (0 off the support).
  Integer coordinate(const Label& id, const Label& v) const;
  std::optional<Label> vertex_at(const GlobalPoint& p) const;

  /// Smallest base simplex containing the supports of the vertices of s.
  Simplex psi(const Simplex& s) const;
  /// Refined simplices mapping into the closure of sigma (as a preimage).
  std::set<Simplex> psi_star(const Simplex& sigma) const;
  /// Refined simplices all of whose vertices are supported in sigma.
  std::set<Simplex> psi_star_by_support(const Simplex& sigma) const;
  /// The unique refined vertex over the base vertex v.
  const Label& lift(const Label& v) const;
  const std::set<Label>& neighbors(const Label& id) const;
  std::set<Label> relative_adjacent(const Label& id) const;

 private:
  DualComplex base_;
  Integer r_ = 1;
  std::map<Label, RefinedVertex> vertices_;
  std::map<GlobalPoint, Label> by_point_;
  std::map<Label, Label> lifts_;
  std::vector<Simplex> facets_;
  DualComplex complex_;
  std::map<Label, std::set<Label>> neighbors_;
  std::vector<RelativeWall> walls_;

  void compute_walls();
};

}  // namespace toricres
