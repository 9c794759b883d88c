#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace toricres {

using Integer = boost::multiprecision::cpp_int;

class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(std::vector<Integer> entries);
  LatticeVector(std::initializer_list<long long> entries);

  static LatticeVector zero(std::size_t n);
  static LatticeVector unit(std::size_t n, std::size_t i);

  std::size_t size() const { return entries_.size(); }
  const Integer& operator[](std::size_t i) const { return entries_[i]; }
  Integer& operator[](std::size_t i) { return entries_[i]; }
  const std::vector<Integer>& entries() const { return entries_; }

  bool is_zero() const;
  /// gcd of the absolute values of the entries; 0 for the zero vector.
  Integer content() const;

  LatticeVector& operator+=(const LatticeVector& o);
  LatticeVector& operator-=(const LatticeVector& o);
  LatticeVector& operator*=(const Integer& k);
  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
  friend LatticeVector operator*(const Integer& k, LatticeVector a) { return a *= k; }
  LatticeVector operator-() const;

  friend bool operator==(const LatticeVector& a, const LatticeVector& b) = default;
  friend std::strong_ordering operator<=>(const LatticeVector& a, const LatticeVector& b);

  std::string to_string() const;

 private:
  std::vector<Integer> entries_;
};

Integer dot(const LatticeVector& a, const LatticeVector& b);

LatticeVector primitive(const LatticeVector& v);

using IntegerMatrix = std::vector<std::vector<Integer>>;

/// Fraction-free (Bareiss) determinant of a square matrix.
Integer determinant(IntegerMatrix m);

/// Row echelon form by integer elimination; each row is divided by its
/// content and zero rows are dropped, so the result has rank-many rows.
IntegerMatrix echelon_form(IntegerMatrix m);

std::size_t rank(const std::vector<LatticeVector>& vectors);

/// Index of the Z-span of the generators inside the lattice points of their
/// real span. Throws NotSimplicial on linear dependence.
Integer cone_multiplicity(const std::vector<LatticeVector>& generators);

bool is_regular(const std::vector<LatticeVector>& generators);

struct WallRelation {
  std::vector<Integer> coefficients;
};

/// Primitive dependence among d+2 rays, with the two rays outside `shared`
/// normalized to coefficient +1.
WallRelation wall_relation(const std::vector<LatticeVector>& rays,
                           const std::vector<std::size_t>& shared);

}  // namespace toricres
