#include "toricres/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <boost/integer/common_factor_rt.hpp>

#include "toricres/error.hpp"

namespace toricres {

namespace {

Integer abs_value(const Integer& x) { return x < 0 ? Integer(-x) : x; }

Integer gcd_int(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(abs_value(a), abs_value(b));
}

Integer row_content(const std::vector<Integer>& row) {
  Integer g = 0;
  for (const auto& x : row) {
    if (x != 0) g = gcd_int(g, x);
  }
  return g;
}

void check_same_length(const std::vector<LatticeVector>& vs) {
  for (const auto& v : vs) {
    if (v.size() != vs.front().size()) {
      throw Error(ErrorCode::InvalidInput, "lattice vectors of different lengths");
    }
  }
}

// Rows are coordinates, columns are the given vectors.
IntegerMatrix columns_matrix(const std::vector<LatticeVector>& vs) {
  check_same_length(vs);
  const std::size_t m = vs.empty() ? 0 : vs.front().size();
  IntegerMatrix mat(m, std::vector<Integer>(vs.size()));
  for (std::size_t j = 0; j < vs.size(); ++j) {
    for (std::size_t i = 0; i < m; ++i) mat[i][j] = vs[j][i];
  }
  return mat;
}

IntegerMatrix rows_matrix(const std::vector<LatticeVector>& vs) {
  check_same_length(vs);
  IntegerMatrix mat;
  mat.reserve(vs.size());
  for (const auto& v : vs) mat.push_back(v.entries());
  return mat;
}

// Calls f with every increasing k-subset of {0..n-1}.
template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

LatticeVector::LatticeVector(std::vector<Integer> entries) : entries_(std::move(entries)) {}

LatticeVector::LatticeVector(std::initializer_list<long long> entries) {
  entries_.reserve(entries.size());
  for (long long x : entries) entries_.emplace_back(x);
}

LatticeVector LatticeVector::zero(std::size_t n) {
  return LatticeVector(std::vector<Integer>(n, Integer(0)));
}

LatticeVector LatticeVector::unit(std::size_t n, std::size_t i) {
  LatticeVector v = zero(n);
  v.entries_.at(i) = 1;
  return v;
}

bool LatticeVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Integer& x) { return x == 0; });
}

Integer LatticeVector::content() const { return row_content(entries_); }

LatticeVector& LatticeVector::operator+=(const LatticeVector& o) {
  if (o.size() != size()) throw Error(ErrorCode::InvalidInput, "vector length mismatch");
  for (std::size_t i = 0; i < size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

LatticeVector& LatticeVector::operator-=(const LatticeVector& o) {
  if (o.size() != size()) throw Error(ErrorCode::InvalidInput, "vector length mismatch");
  for (std::size_t i = 0; i < size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

LatticeVector& LatticeVector::operator*=(const Integer& k) {
  for (auto& x : entries_) x *= k;
  return *this;
}

LatticeVector LatticeVector::operator-() const {
  LatticeVector r = *this;
  for (auto& x : r.entries_) x = -x;
  return r;
}

std::strong_ordering operator<=>(const LatticeVector& a, const LatticeVector& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] < b[i]) return std::strong_ordering::less;
    if (a[i] > b[i]) return std::strong_ordering::greater;
  }
  return a.size() <=> b.size();
}

std::string LatticeVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) os << ',';
    os << entries_[i];
  }
  os << ')';
  return os.str();
}

Integer dot(const LatticeVector& a, const LatticeVector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::InvalidInput, "vector length mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

LatticeVector primitive(const LatticeVector& v) {
  const Integer g = v.content();
  if (g == 0) throw Error(ErrorCode::ZeroVector, "primitive of the zero vector");
  std::vector<Integer> e = v.entries();
  for (auto& x : e) x /= g;
  return LatticeVector(std::move(e));
}

Integer determinant(IntegerMatrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) throw Error(ErrorCode::InvalidInput, "determinant of a non-square matrix");
  }
  if (n == 0) return 1;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[k][k] * m[i][j] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

IntegerMatrix echelon_form(IntegerMatrix m) {
  if (m.empty()) return m;
  const std::size_t cols = m.front().size();
  for (const auto& row : m) {
    if (row.size() != cols) throw Error(ErrorCode::InvalidInput, "ragged matrix");
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && m[p][c] == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[r], m[p]);
    for (std::size_t i = r + 1; i < m.size(); ++i) {
      if (m[i][c] == 0) continue;
      const Integer a = m[r][c];
      const Integer b = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] = a * m[i][j] - b * m[r][j];
      const Integer g = row_content(m[i]);
      if (g > 1) {
        for (auto& x : m[i]) x /= g;
      }
    }
    const Integer g = row_content(m[r]);
    if (g > 1) {
      for (auto& x : m[r]) x /= g;
    }
    ++r;
  }
  m.resize(r);
  return m;
}

std::size_t rank(const std::vector<LatticeVector>& vectors) {
  if (vectors.empty()) return 0;
  return echelon_form(rows_matrix(vectors)).size();
}

Integer cone_multiplicity(const std::vector<LatticeVector>& generators) {
  if (generators.empty()) return 1;
  const std::size_t k = generators.size();
  const std::size_t m = generators.front().size();
  if (rank(generators) != k) {
    throw Error(ErrorCode::NotSimplicial, "cone generators are linearly dependent");
  }
  const IntegerMatrix rows = rows_matrix(generators);
  Integer g = 0;
  for_each_subset(m, k, [&](const std::vector<std::size_t>& cols) {
    IntegerMatrix minor(k, std::vector<Integer>(k));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) minor[i][j] = rows[i][cols[j]];
    }
    const Integer d = determinant(std::move(minor));
    if (d != 0) g = gcd_int(g, d);
  });
  return g;
}

bool is_regular(const std::vector<LatticeVector>& generators) {
  if (generators.empty()) return true;
  check_same_length(generators);
  if (rank(generators) != generators.size()) return false;
  return cone_multiplicity(generators) == 1;
}

WallRelation wall_relation(const std::vector<LatticeVector>& rays,
                           const std::vector<std::size_t>& shared) {
  const std::size_t k = rays.size();
  if (k < 2) throw Error(ErrorCode::InvalidInput, "wall relation needs at least two rays");
  std::vector<bool> is_shared(k, false);
  for (std::size_t i : shared) {
    if (i >= k || is_shared[i]) throw Error(ErrorCode::InvalidInput, "bad shared index set");
    is_shared[i] = true;
  }
  if (shared.size() + 2 != k) {
    throw Error(ErrorCode::InvalidInput, "wall relation needs exactly two non-shared rays");
  }

  const IntegerMatrix ech = echelon_form(columns_matrix(rays));
  if (ech.size() == k) throw Error(ErrorCode::NoRelation, "rays are linearly independent");
  if (ech.size() + 1 < k) throw Error(ErrorCode::AmbiguousRelation, "kernel has dimension > 1");

  // Kernel of a (k-1) x k matrix of full rank: signed maximal minors.
  std::vector<Integer> b(k);
  for (std::size_t skip = 0; skip < k; ++skip) {
    IntegerMatrix minor(k - 1, std::vector<Integer>());
    for (std::size_t i = 0; i + 1 < k; ++i) {
      minor[i].reserve(k - 1);
      for (std::size_t j = 0; j < k; ++j) {
        if (j != skip) minor[i].push_back(ech[i][j]);
      }
    }
    const Integer d = determinant(std::move(minor));
    b[skip] = (skip % 2 == 0) ? d : Integer(-d);
  }
  LatticeVector kernel = primitive(LatticeVector(b));

  std::vector<std::size_t> outer;
  for (std::size_t i = 0; i < k; ++i) {
    if (!is_shared[i]) outer.push_back(i);
  }
  if (kernel[outer[0]] < 0) kernel = -kernel;
  if (kernel[outer[0]] != 1 || kernel[outer[1]] != 1) {
    throw Error(ErrorCode::NormalizationFailure,
                "non-shared coefficients are " + kernel[outer[0]].str() + " and " +
                    kernel[outer[1]].str());
  }
  return WallRelation{kernel.entries()};
}

}  // namespace toricres
