#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace toricres {

using Label = std::string;

/// A finite set of vertex labels, stored sorted.
class Simplex {
 public:
  Simplex() = default;
  explicit Simplex(std::vector<Label> vertices);
  Simplex(std::initializer_list<Label> vertices);

  const std::vector<Label>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }
  int dimension() const { return static_cast<int>(vertices_.size()) - 1; }
  bool contains(const Label& v) const;
  bool is_face_of(const Simplex& other) const;

  Simplex united(const Simplex& other) const;
  Simplex intersected(const Simplex& other) const;
  Simplex without(const Label& v) const;
  Simplex with(const Label& v) const;

  auto begin() const { return vertices_.begin(); }
  auto end() const { return vertices_.end(); }

  friend bool operator==(const Simplex&, const Simplex&) = default;
  friend auto operator<=>(const Simplex&, const Simplex&) = default;

  std::string to_string() const;

 private:
  std::vector<Label> vertices_;
};

/// Every non-empty subset of `s`, in ascending order.
std::vector<Simplex> faces_of(const Simplex& s);

class DualComplex {
 public:
  DualComplex() = default;

  /// Closes the facets under faces; facets contained in other facets are absorbed.
  static DualComplex build(const std::vector<Label>& vertices,
                           const std::vector<std::vector<Label>>& facets);

  const std::vector<Label>& vertices() const { return vertices_; }
  const std::vector<Simplex>& facets() const { return facets_; }
  const std::set<Simplex>& simplices() const { return simplices_; }
  int dimension() const { return dimension_; }

  bool has_vertex(const Label& v) const;
  bool contains(const Simplex& s) const { return simplices_.count(s) > 0; }
  std::vector<Simplex> simplices_of_dimension(int k) const;
  std::vector<Simplex> facets_containing(const Simplex& s) const;

  /// Vertices sharing an edge with v. Throws UnknownVertex.
  std::set<Label> adjacent_vertices(const Label& v) const;

  /// Common codimension-one faces of two top-dimensional simplices.
  std::set<Simplex> walls() const;

 private:
  std::vector<Label> vertices_;
  std::vector<Simplex> facets_;
  std::set<Simplex> simplices_;
  int dimension_ = -1;
};

}  // namespace toricres
