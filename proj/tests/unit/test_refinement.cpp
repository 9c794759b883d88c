#include <gtest/gtest.h>
#include <algorithm>

#include <set>

#include "support/generators.hpp"
#include "support/resolve.hpp"
#include "toricres/error.hpp"
#include "toricres/json_io.hpp"
#include "toricres/refinement.hpp"

using namespace toricres;
using testkit::resolve;

namespace {

/// Base simplex spanned by the coordinate supports of the vertices of s.
Simplex support_of(const Refinement& ref, const Simplex& s) {
  Simplex out;
  for (const auto& id : s) {
    for (const auto& [v, c] : ref.vertex(id).coords) {
      if (c != 0) out = out.with(v);
    }
  }
  return out;
}

/// Relative walls by brute force: for each base simplex sigma, pair up the
/// refined simplices of dimension dim(sigma) supported in sigma and keep the
/// common faces of codimension one.
std::set<Simplex> walls_by_pairs(const Refinement& ref) {
  std::set<Simplex> out;
  for (const auto& sigma : ref.base().simplices()) {
    if (sigma.dimension() < 1) continue;
    std::vector<Simplex> cells;
    for (const auto& s : ref.complex().simplices()) {
      if (s.dimension() == sigma.dimension() && support_of(ref, s).is_face_of(sigma)) cells.push_back(s);
    }
    for (std::size_t i = 0; i < cells.size(); ++i) {
      for (std::size_t j = i + 1; j < cells.size(); ++j) {
        const Simplex common = cells[i].intersected(cells[j]);
        if (common.dimension() == sigma.dimension() - 1) out.insert(common);
      }
    }
  }
  return out;
}

std::vector<RefinedVertex> lattice_points_2delta() {
  std::vector<RefinedVertex> out;
  for (int a = 0; a <= 2; ++a) {
    for (int b = 0; a + b <= 2; ++b) {
      GlobalPoint p;
      if (a) p["1"] = a;
      if (b) p["2"] = b;
      if (2 - a - b) p["3"] = 2 - a - b;
      out.push_back({"p" + std::to_string(a) + std::to_string(b), support(p), p});
    }
  }
  return out;
}

// p{a}{b} has coordinates (a, b, 2 - a - b).
const std::vector<std::vector<Label>> kStandard2 = {
    {"p20", "p11", "p10"}, {"p11", "p10", "p01"}, {"p10", "p01", "p00"}, {"p11", "p02", "p01"}};

}  // namespace

TEST(Refinement, ChainOfThreeWithRamificationFour) {
  const auto ref = resolve(testkit::chain(3), 4);
  EXPECT_EQ(ref.vertices().size(), 9u);
  EXPECT_EQ(ref.facets().size(), 8u);
  EXPECT_EQ(ref.relative_walls().size(), 6u);
  for (const auto& v : ref.base().vertices()) {
    EXPECT_EQ(ref.vertex(ref.lift(v)).coords, (GlobalPoint{{v, 4}}));
  }
}

TEST(Refinement, TriangleCountsAndCanonicalEdges) {
  for (long long r = 1; r <= 5; ++r) {
    const auto ref = resolve(testkit::triangle(), r);
    EXPECT_EQ(ref.facets().size(), static_cast<std::size_t>(r * r));
    EXPECT_EQ(ref.vertices().size(), static_cast<std::size_t>((r + 1) * (r + 2) / 2));
    for (const auto& edge : ref.base().simplices_of_dimension(1)) {
      std::set<GlobalPoint> pts;
      for (const auto& s : ref.psi_star(edge)) {
        if (s.size() == 1) pts.insert(ref.vertex(s.vertices().front()).coords);
      }
      std::set<GlobalPoint> expected;
      const auto& a = edge.vertices()[0];
      const auto& b = edge.vertices()[1];
      for (long long k = 0; k <= r; ++k) {
        GlobalPoint p;
        if (r - k) p[a] = r - k;
        if (k) p[b] = k;
        expected.insert(p);
      }
      EXPECT_EQ(pts, expected) << edge.to_string();
    }
  }
}

TEST(Refinement, ImportStandardTriangulation) {
  const auto base = testkit::triangle();
  const auto ref = Refinement::import_triangulation(base, 2, lattice_points_2delta(), kStandard2);
  EXPECT_EQ(ref.facets().size(), 4u);
  EXPECT_EQ(ref.lift("1"), "p20");
  EXPECT_EQ(ref.psi(Simplex{"p11"}), (Simplex{"1", "2"}));
  EXPECT_EQ(ref.psi(Simplex{"p11", "p01"}), (Simplex{"1", "2", "3"}));
  EXPECT_EQ(ref.coordinate("p11", "3"), Integer(0));
  EXPECT_EQ(ref.vertex_at(GlobalPoint{{"2", 1}, {"3", 1}}), std::optional<Label>("p01"));
  EXPECT_EQ(ref.relative_walls().size(), 3u + 3u);
}

TEST(Refinement, ImportRejectsBrokenTriangulations) {
  const auto base = testkit::triangle();
  auto code = [&](std::vector<RefinedVertex> vs, std::vector<std::vector<Label>> fs) {
    try {
      Refinement::import_triangulation(base, 2, std::move(vs), fs);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::EngineFailure;
  };
  // A big triangle over the whole simplex is not unimodular.
  EXPECT_EQ(code(lattice_points_2delta(), {{"p20", "p02", "p00"}}), ErrorCode::ValidationFailure);
  // Dropping a cell leaves the simplex uncovered.
  auto missing = kStandard2;
  missing.pop_back();
  EXPECT_EQ(code(lattice_points_2delta(), missing), ErrorCode::ValidationFailure);
  // Coordinates must sum to r.
  auto bad = lattice_points_2delta();
  bad.front().coords["1"] = 5;
  EXPECT_EQ(code(bad, kStandard2), ErrorCode::ValidationFailure);
  // Two ids on one point.
  auto dup = lattice_points_2delta();
  dup.push_back({"extra", Simplex{"1"}, GlobalPoint{{"1", 2}}});
  EXPECT_EQ(code(dup, kStandard2), ErrorCode::ValidationFailure);
}

TEST(Refinement, JsonRoundTrip) {
  const auto ref = resolve(testkit::triangle(), 3);
  const auto j = io::refinement_json(ref);
  const auto back = io::refinement_from_json(j);
  auto expected = ref.facets();
  auto actual = back.facets();
  std::sort(expected.begin(), expected.end());
  std::sort(actual.begin(), actual.end());
  EXPECT_EQ(actual, expected);
  EXPECT_EQ(io::refinement_json(back), j);
}

TEST(RefinementProperty, PreimageAgreesWithSupportsAndWallsAgreeWithPairs) {
  gen::Rng rng(41);
  for (int t = 0; t < 50; ++t) {
    const auto c = gen::random_complex(rng, 5, 2).build();
    const long long r = rng.between(1, 4);
    const auto ref = resolve(c, r);
    for (const auto& sigma : c.simplices()) {
      ASSERT_EQ(ref.psi_star(sigma), ref.psi_star_by_support(sigma)) << sigma.to_string();
      std::size_t top = 0;
      for (const auto& s : ref.psi_star(sigma)) top += s.dimension() == sigma.dimension();
      long long expected = 1;
      for (int i = 0; i < sigma.dimension(); ++i) expected *= r;
      ASSERT_EQ(static_cast<long long>(top), expected);
    }
    std::set<Simplex> walls;
    for (const auto& w : ref.relative_walls()) {
      walls.insert(w.wall);
      for (const auto& v : w.wall) ASSERT_TRUE(ref.psi(Simplex{v}).is_face_of(w.psi_tau));
      ASSERT_EQ(w.psi_tau, support_of(ref, w.wall));
      ASSERT_TRUE(w.psi_tau.is_face_of(w.base));
      ASSERT_EQ(w.anchor, w.wall.vertices().front());
      ASSERT_EQ(w.flanking[0].intersected(w.flanking[1]), w.wall);
    }
    ASSERT_EQ(walls, walls_by_pairs(ref));
    for (const auto& [id, v] : ref.vertices()) {
      for (const auto& w : ref.neighbors(id)) ASSERT_TRUE(ref.neighbors(w).count(id));
    }
  }
}
