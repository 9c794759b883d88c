#include "toricres/dual_complex.hpp"

#include <algorithm>
#include <iterator>

#include "toricres/error.hpp"

namespace toricres {

namespace {

std::vector<Label> sorted_unique(std::vector<Label> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace

Simplex::Simplex(std::vector<Label> vertices) : vertices_(sorted_unique(std::move(vertices))) {}

Simplex::Simplex(std::initializer_list<Label> vertices)
    : vertices_(sorted_unique(std::vector<Label>(vertices))) {}

bool Simplex::contains(const Label& v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Simplex::is_face_of(const Simplex& other) const {
  return std::includes(other.vertices_.begin(), other.vertices_.end(), vertices_.begin(),
                       vertices_.end());
}

Simplex Simplex::united(const Simplex& other) const {
  std::vector<Label> out;
  std::set_union(vertices_.begin(), vertices_.end(), other.vertices_.begin(),
                 other.vertices_.end(), std::back_inserter(out));
  Simplex s;
  s.vertices_ = std::move(out);
  return s;
}

Simplex Simplex::intersected(const Simplex& other) const {
  std::vector<Label> out;
  std::set_intersection(vertices_.begin(), vertices_.end(), other.vertices_.begin(),
                        other.vertices_.end(), std::back_inserter(out));
  Simplex s;
  s.vertices_ = std::move(out);
  return s;
}

Simplex Simplex::without(const Label& v) const {
  Simplex s = *this;
  s.vertices_.erase(std::remove(s.vertices_.begin(), s.vertices_.end(), v), s.vertices_.end());
  return s;
}

Simplex Simplex::with(const Label& v) const { return united(Simplex{v}); }

std::string Simplex::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (i) out += ',';
    out += vertices_[i];
  }
  out += '}';
  return out;
}

std::vector<Simplex> faces_of(const Simplex& s) {
  const auto& vs = s.vertices();
  const std::size_t n = vs.size();
  std::vector<Simplex> out;
  if (n >= 8 * sizeof(unsigned long)) throw Error(ErrorCode::InvalidInput, "simplex too large");
  for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
    std::vector<Label> sub;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1UL << i)) sub.push_back(vs[i]);
    }
    out.emplace_back(std::move(sub));
  }
  std::sort(out.begin(), out.end());
  return out;
}

DualComplex DualComplex::build(const std::vector<Label>& vertices,
                               const std::vector<std::vector<Label>>& facets) {
  DualComplex c;
  c.vertices_ = vertices;
  std::sort(c.vertices_.begin(), c.vertices_.end());
  if (std::adjacent_find(c.vertices_.begin(), c.vertices_.end()) != c.vertices_.end()) {
    throw Error(ErrorCode::InvalidInput, "duplicate vertex label");
  }
  if (facets.empty()) throw Error(ErrorCode::EmptyFacet, "no facets given");

  std::vector<Simplex> given;
  for (const auto& f : facets) {
    if (f.empty()) throw Error(ErrorCode::EmptyFacet, "empty facet");
    for (const auto& v : f) {
      if (!std::binary_search(c.vertices_.begin(), c.vertices_.end(), v)) {
        throw Error(ErrorCode::UnknownVertex, "facet mentions unknown vertex '" + v + "'");
      }
    }
    given.emplace_back(f);
  }
  std::sort(given.begin(), given.end());
  given.erase(std::unique(given.begin(), given.end()), given.end());

  for (const auto& f : given) {
    const bool absorbed = std::any_of(given.begin(), given.end(), [&](const Simplex& g) {
      return g != f && f.is_face_of(g);
    });
    if (!absorbed) c.facets_.push_back(f);
  }

  for (const auto& f : c.facets_) {
    for (auto& s : faces_of(f)) c.simplices_.insert(std::move(s));
    c.dimension_ = std::max(c.dimension_, f.dimension());
  }
  for (const auto& v : c.vertices_) {
    if (!c.simplices_.count(Simplex{v})) {
      throw Error(ErrorCode::UncoveredVertex, "vertex '" + v + "' lies in no facet");
    }
  }
  return c;
}

bool DualComplex::has_vertex(const Label& v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

std::vector<Simplex> DualComplex::simplices_of_dimension(int k) const {
  std::vector<Simplex> out;
  for (const auto& s : simplices_) {
    if (s.dimension() == k) out.push_back(s);
  }
  return out;
}

std::vector<Simplex> DualComplex::facets_containing(const Simplex& s) const {
  std::vector<Simplex> out;
  for (const auto& f : facets_) {
    if (s.is_face_of(f)) out.push_back(f);
  }
  return out;
}

std::set<Label> DualComplex::adjacent_vertices(const Label& v) const {
  if (!has_vertex(v)) throw Error(ErrorCode::UnknownVertex, "unknown vertex '" + v + "'");
  std::set<Label> out;
  for (const auto& s : simplices_) {
    if (s.size() == 2 && s.contains(v)) {
      for (const auto& w : s) {
        if (w != v) out.insert(w);
      }
    }
  }
  return out;
}

std::set<Simplex> DualComplex::walls() const {
  std::set<Simplex> out;
  std::vector<Simplex> top;
  for (const auto& f : facets_) {
    if (f.dimension() == dimension_) top.push_back(f);
  }
  for (std::size_t i = 0; i < top.size(); ++i) {
    for (std::size_t j = i + 1; j < top.size(); ++j) {
      Simplex common = top[i].intersected(top[j]);
      if (common.dimension() == dimension_ - 1 && !common.empty()) out.insert(std::move(common));
    }
  }
  return out;
}

}  // namespace toricres
