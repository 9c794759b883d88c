#include <gtest/gtest.h>

#include <set>

#include "support/generators.hpp"
#include "toricres/dual_complex.hpp"
#include "toricres/error.hpp"

using namespace toricres;

namespace {

ErrorCode build_error(const std::vector<Label>& vs, const std::vector<std::vector<Label>>& fs) {
  try {
    DualComplex::build(vs, fs);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::EngineFailure;
}

}  // namespace

TEST(Simplex, SortedSetSemantics) {
  const Simplex s{"c", "a", "b"};
  EXPECT_EQ(s.vertices(), (std::vector<Label>{"a", "b", "c"}));
  EXPECT_EQ(s.dimension(), 2);
  EXPECT_TRUE((Simplex{"a", "c"}).is_face_of(s));
  EXPECT_FALSE((Simplex{"a", "d"}).is_face_of(s));
  EXPECT_EQ(s.without("b"), (Simplex{"a", "c"}));
  EXPECT_EQ((Simplex{"a"}).with("d").united(Simplex{"b"}), (Simplex{"a", "b", "d"}));
  EXPECT_EQ(s.intersected(Simplex{"b", "c", "d"}), (Simplex{"b", "c"}));
  EXPECT_EQ(faces_of(Simplex{"x", "y"}).size(), 3u);
}

TEST(DualComplex, ChainOfThree) {
  const auto c = DualComplex::build({"1", "2", "3"}, {{"1", "2"}, {"2", "3"}});
  EXPECT_EQ(c.dimension(), 1);
  EXPECT_EQ(c.simplices().size(), 5u);
  EXPECT_EQ(c.adjacent_vertices("2"), (std::set<Label>{"1", "3"}));
  EXPECT_EQ(c.adjacent_vertices("1"), (std::set<Label>{"2"}));
  EXPECT_EQ(c.walls(), (std::set<Simplex>{Simplex{"2"}}));
}

TEST(DualComplex, TriangleHasNoWalls) {
  const auto c = DualComplex::build({"1", "2", "3"}, {{"1", "2", "3"}});
  EXPECT_EQ(c.simplices().size(), 7u);
  EXPECT_TRUE(c.walls().empty());
  EXPECT_EQ(c.facets_containing(Simplex{"1"}).size(), 1u);
}

TEST(DualComplex, NonMaximalFacetsAreAbsorbed) {
  const auto c = DualComplex::build({"a", "b", "c"}, {{"a", "b", "c"}, {"a", "b"}, {"c"}, {"a", "b", "c"}});
  ASSERT_EQ(c.facets().size(), 1u);
  EXPECT_EQ(c.facets().front(), (Simplex{"a", "b", "c"}));
}

TEST(DualComplex, InputErrors) {
  EXPECT_EQ(build_error({"1", "2"}, {}), ErrorCode::EmptyFacet);
  EXPECT_EQ(build_error({"1", "2"}, {{}}), ErrorCode::EmptyFacet);
  EXPECT_EQ(build_error({"1", "2"}, {{"1", "3"}}), ErrorCode::UnknownVertex);
  EXPECT_EQ(build_error({"1", "2", "3"}, {{"1", "2"}}), ErrorCode::UncoveredVertex);
  EXPECT_EQ(build_error({"1", "1"}, {{"1"}}), ErrorCode::InvalidInput);
  const auto c = DualComplex::build({"1", "2"}, {{"1", "2"}});
  EXPECT_THROW(c.adjacent_vertices("9"), Error);
}

TEST(DualComplexProperty, FaceClosureSymmetricAdjacencyAndWalls) {
  gen::Rng rng(21);
  for (int t = 0; t < 300; ++t) {
    const auto spec = gen::random_complex(rng, 7, 3);
    const auto c = spec.build();
    for (const auto& s : c.simplices()) {
      for (const auto& f : faces_of(s)) ASSERT_TRUE(c.contains(f)) << f.to_string();
    }
    for (const auto& f : spec.facets) ASSERT_TRUE(c.contains(Simplex(f)));
    for (const auto& v : c.vertices()) {
      for (const auto& w : c.adjacent_vertices(v)) ASSERT_TRUE(c.adjacent_vertices(w).count(v));
    }
    for (const auto& w : c.walls()) {
      ASSERT_EQ(w.dimension(), c.dimension() - 1);
      ASSERT_TRUE(c.contains(w));
    }
    // Facets are exactly the maximal simplices.
    std::set<Simplex> maximal;
    for (const auto& s : c.simplices()) {
      bool is_max = true;
      for (const auto& v : c.vertices()) {
        if (!s.contains(v) && c.contains(s.with(v))) is_max = false;
      }
      if (is_max) maximal.insert(s);
    }
    ASSERT_EQ(maximal, std::set<Simplex>(c.facets().begin(), c.facets().end()));
  }
}
