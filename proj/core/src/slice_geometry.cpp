#include "toricres/slice_geometry.hpp"

#include <algorithm>

#include "toricres/error.hpp"

namespace toricres::slice {

namespace {

std::size_t ambient(const std::vector<LatticeVector>& points) {
  if (points.empty()) throw Error(ErrorCode::InvalidInput, "empty point set");
  const std::size_t n = points.front().size();
  for (const auto& p : points) {
    if (p.size() != n) throw Error(ErrorCode::InvalidInput, "slice points of different lengths");
  }
  return n;
}

std::vector<LatticeVector> sorted_unique(std::vector<LatticeVector> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

Integer cross(const LatticeVector& o, const LatticeVector& a, const LatticeVector& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

std::vector<LatticeVector> hull2(const std::vector<LatticeVector>& input) {
  std::vector<LatticeVector> pts = sorted_unique(input);
  if (pts.size() <= 2) return pts;
  std::vector<LatticeVector> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], p) <= 0) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

IntegerMatrix difference_matrix(const std::vector<LatticeVector>& simplex) {
  IntegerMatrix m;
  for (std::size_t i = 1; i < simplex.size(); ++i) m.push_back((simplex[i] - simplex[0]).entries());
  return m;
}

void require_simplex(const std::vector<LatticeVector>& pts, std::size_t n) {
  if (pts.size() != n + 1 || affine_dimension(pts) != static_cast<int>(n)) {
    throw Error(ErrorCode::Unsupported,
                "slice geometry in dimension > 2 is limited to full-dimensional simplices");
  }
}

std::pair<Integer, Integer> projection_range(const std::vector<LatticeVector>& pts,
                                             const LatticeVector& axis) {
  Integer lo = dot(pts.front(), axis);
  Integer hi = lo;
  for (const auto& p : pts) {
    const Integer x = dot(p, axis);
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  return {lo, hi};
}

}  // namespace

int affine_dimension(const std::vector<LatticeVector>& points) {
  if (points.empty()) return -1;
  ambient(points);
  std::vector<LatticeVector> diffs;
  for (std::size_t i = 1; i < points.size(); ++i) diffs.push_back(points[i] - points[0]);
  if (diffs.empty()) return 0;
  return static_cast<int>(rank(diffs));
}

std::vector<LatticeVector> extreme_points(const std::vector<LatticeVector>& points) {
  const std::size_t n = ambient(points);
  std::vector<LatticeVector> pts = sorted_unique(points);
  if (n == 0 || pts.size() == 1) return {pts.front()};
  if (n == 1) return {pts.front(), pts.back()};
  if (n == 2) return hull2(pts);
  if (pts.size() != static_cast<std::size_t>(affine_dimension(pts)) + 1) {
    throw Error(ErrorCode::Unsupported, "convex hulls in dimension > 2 are not supported");
  }
  return pts;
}

Integer normalized_volume(const std::vector<LatticeVector>& points) {
  const std::size_t n = ambient(points);
  if (affine_dimension(points) != static_cast<int>(n)) return 0;
  if (n == 0) return 1;
  const std::vector<LatticeVector> h = extreme_points(points);
  if (n == 1) return h.back()[0] - h.front()[0];
  if (n == 2) {
    Integer twice_area = 0;
    for (std::size_t i = 0; i < h.size(); ++i) {
      const auto& p = h[i];
      const auto& q = h[(i + 1) % h.size()];
      twice_area += p[0] * q[1] - p[1] * q[0];
    }
    return twice_area;
  }
  require_simplex(h, n);
  const Integer d = determinant(difference_matrix(h));
  return d < 0 ? Integer(-d) : d;
}

bool contains(const std::vector<LatticeVector>& points, const LatticeVector& q) {
  const std::size_t n = ambient(points);
  if (q.size() != n) throw Error(ErrorCode::InvalidInput, "point length mismatch");
  if (n == 0) return true;
  const std::vector<LatticeVector> h = extreme_points(points);
  if (n == 1) return h.front()[0] <= q[0] && q[0] <= h.back()[0];
  if (n == 2) {
    if (h.size() == 1) return q == h.front();
    if (h.size() == 2) {
      if (cross(h[0], h[1], q) != 0) return false;
      return dot(q - h[0], h[1] - h[0]) >= 0 && dot(q - h[1], h[0] - h[1]) >= 0;
    }
    for (std::size_t i = 0; i < h.size(); ++i) {
      if (cross(h[i], h[(i + 1) % h.size()], q) < 0) return false;
    }
    return true;
  }
  require_simplex(h, n);
  const IntegerMatrix base = difference_matrix(h);
  const Integer det = determinant(base);
  const int sign = det > 0 ? 1 : -1;
  Integer total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    IntegerMatrix m = base;
    m[i] = (q - h[0]).entries();
    const Integer di = sign * determinant(std::move(m));
    if (di < 0) return false;
    total += di;
  }
  return total <= sign * det;
}

bool interiors_disjoint(const std::vector<LatticeVector>& a, const std::vector<LatticeVector>& b) {
  const std::size_t n = ambient(a);
  if (ambient(b) != n) throw Error(ErrorCode::InvalidInput, "point length mismatch");
  if (affine_dimension(a) != static_cast<int>(n) || affine_dimension(b) != static_cast<int>(n)) {
    return true;
  }
  if (n == 0) return false;
  const std::vector<LatticeVector> ha = extreme_points(a);
  const std::vector<LatticeVector> hb = extreme_points(b);
  if (n == 1) return ha.back()[0] <= hb.front()[0] || hb.back()[0] <= ha.front()[0];
  if (n > 2) throw Error(ErrorCode::Unsupported, "interior tests in dimension > 2 are not supported");
  for (const auto* poly : {&ha, &hb}) {
    for (std::size_t i = 0; i < poly->size(); ++i) {
      const LatticeVector e = (*poly)[(i + 1) % poly->size()] - (*poly)[i];
      const LatticeVector axis{std::vector<Integer>{-e[1], e[0]}};
      const auto [alo, ahi] = projection_range(ha, axis);
      const auto [blo, bhi] = projection_range(hb, axis);
      if (ahi <= blo || bhi <= alo) return true;
    }
  }
  return false;
}

bool is_subdivision(const std::vector<LatticeVector>& whole,
                    const std::vector<std::vector<LatticeVector>>& parts) {
  Integer total = 0;
  for (const auto& part : parts) {
    for (const auto& p : part) {
      if (!contains(whole, p)) return false;
    }
    total += normalized_volume(part);
  }
  if (total != normalized_volume(whole)) return false;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    for (std::size_t j = i + 1; j < parts.size(); ++j) {
      if (!interiors_disjoint(parts[i], parts[j])) return false;
    }
  }
  return true;
}

}  // namespace toricres::slice
