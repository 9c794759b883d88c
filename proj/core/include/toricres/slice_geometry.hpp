#pragma once

#include <vector>

#include "toricres/lattice.hpp"

// Exact polytope predicates on the slice {first coordinate = 1}. Points are
// given in affine coordinates (the leading 1 dropped). Hulls and
// interior tests are implemented for dimension <= 2; in higher dimension only
// simplices are accepted and other inputs raise Unsupported.
namespace toricres::slice {

/// Dimension of the affine span; -1 for an empty set.
int affine_dimension(const std::vector<LatticeVector>& points);

/// Vertices of the convex hull. In dimension 2 they are returned
/// counter-clockwise starting at the lexicographically smallest point,
/// otherwise in ascending order.
std::vector<LatticeVector> extreme_points(const std::vector<LatticeVector>& points);

/// n! times the Euclidean volume of the hull, where n is the ambient
/// dimension; 0 if the hull is not full-dimensional.
Integer normalized_volume(const std::vector<LatticeVector>& points);

/// Closed containment of q in the hull of points.
bool contains(const std::vector<LatticeVector>& points, const LatticeVector& q);

/// True when the interiors of the two hulls do not meet.
bool interiors_disjoint(const std::vector<LatticeVector>& a, const std::vector<LatticeVector>& b);

/// Each part lies in `whole`, parts have pairwise disjoint interiors and their
/// volumes add up to the volume of `whole`.
bool is_subdivision(const std::vector<LatticeVector>& whole,
                    const std::vector<std::vector<LatticeVector>>& parts);

}  // namespace toricres::slice
