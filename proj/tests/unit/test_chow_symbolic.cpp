#include <gtest/gtest.h>

#include "support/generators.hpp"
#include "support/resolve.hpp"
#include "toricres/chow_symbolic.hpp"
#include "toricres/error.hpp"

using namespace toricres;
using testkit::resolve;

namespace {

CycleExpression random_expression(gen::Rng& rng, const Ambient& ambient) {
  CycleExpression e(ambient);
  const std::vector<Label> labels{"1", "2", "3", "4"};
  const int terms = static_cast<int>(rng.between(0, 6));
  for (int i = 0; i < terms; ++i) {
    const Label a = rng.pick(labels);
    Label b = rng.pick(labels);
    while (b == a) b = rng.pick(labels);
    const Integer c = rng.between(-5, 5);
    if (rng.coin(50)) {
      e.add(CycleGenerator::restricted(a, Simplex{a, b}, ambient.level), c);
    } else {
      e.add(CycleGenerator::wall_class(Simplex{a, b}, ambient.level), c);
    }
  }
  return e;
}

}  // namespace

TEST(CycleExpression, ZeroCoefficientsAreDropped) {
  CycleExpression e(Ambient{Level::Refined, "x"});
  const auto g = CycleGenerator::restricted("1", Simplex{"1", "2"}, Level::Refined);
  e.add(g, 2);
  e.add(g, -2);
  EXPECT_TRUE(e.is_zero());
  e.add(g, 0);
  EXPECT_TRUE(e.terms().empty());
  e.add(g, 3);
  EXPECT_EQ(e.coefficient(g), Integer(3));
  EXPECT_EQ(format_expression(e, nullptr), "3γ_1|12");
}

TEST(CycleExpressionProperty, FreeAbelianGroupLaws) {
  gen::Rng rng(61);
  const Ambient amb{Level::Pushed, "1"};
  for (int t = 0; t < 500; ++t) {
    const auto a = random_expression(rng, amb);
    const auto b = random_expression(rng, amb);
    const Integer k = rng.between(-4, 4);
    ASSERT_EQ(a + b - b, a);
    ASSERT_EQ(a + b, b + a);
    ASSERT_TRUE((a - a).is_zero());
    ASSERT_EQ(k * (a + b), k * a + k * b);
    ASSERT_EQ((a + b).wall_terms(), a.wall_terms() + b.wall_terms());
    const auto sum = a + b;
    for (const auto& [g, c] : sum.terms()) ASSERT_NE(c, 0);
  }
}

TEST(PhiBase, MiddleOfChain) {
  const auto c = testkit::chain(3);
  SymbolicOneCycle pushed;
  pushed.level = Level::Pushed;
  pushed.gamma = {"1", "2", "3"};
  const auto e = phi_base(c, pushed, "2");
  CycleExpression expected(Ambient{Level::Pushed, "2"});
  expected.add(CycleGenerator::restricted("1", Simplex{"1", "2"}, Level::Pushed), 1);
  expected.add(CycleGenerator::restricted("2", Simplex{"1", "2"}, Level::Pushed), -1);
  expected.add(CycleGenerator::restricted("3", Simplex{"2", "3"}, Level::Pushed), 1);
  expected.add(CycleGenerator::restricted("2", Simplex{"2", "3"}, Level::Pushed), -1);
  EXPECT_EQ(e, expected);
}

TEST(Pushforward, DropsWallPartAndRejectsForeignComponents) {
  const auto ref = resolve(testkit::chain(3), 2);
  const auto tables = compute_tables(ref);
  const auto cycle = SymbolicOneCycle::full_generic(ref);
  EXPECT_EQ(cycle.alpha.size(), ref.relative_walls().size());
  const auto pushed = pushforward(cycle);
  EXPECT_EQ(pushed.level, Level::Pushed);
  EXPECT_TRUE(pushed.alpha.empty());
  EXPECT_EQ(pushed.gamma, cycle.gamma);

  const auto phi = phi_refined(ref, tables, cycle, ref.lift("1"));
  try {
    pushforward(phi, ref, tables, "3");
    FAIL() << "no error raised";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IllegalAmbient);
  }
  EXPECT_EQ(pushforward(phi, ref, tables, "1").ambient().level, Level::Pushed);
}

TEST(KeyFormula, RamificationOneIsTheBaseFormula) {
  const auto ref = resolve(testkit::triangle(), 1);
  const auto tables = compute_tables(ref);
  const auto report = verify_key_formula(ref, tables, SymbolicOneCycle::full_generic(ref));
  ASSERT_EQ(report.entries.size(), 3u);
  for (const auto& e : report.entries) {
    EXPECT_TRUE(e.passed);
    EXPECT_EQ(e.lhs, e.rhs);
  }
}

TEST(KeyFormulaProperty, HoldsForGenericAndSubCycles) {
  gen::Rng rng(62);
  for (int t = 0; t < 40; ++t) {
    const auto c = gen::random_complex(rng, 5, 2).build();
    const long long r = rng.between(1, 5);
    const auto ref = resolve(c, r);
    const auto tables = compute_tables(ref);
    const auto full = verify_key_formula(ref, tables, SymbolicOneCycle::full_generic(ref));
    ASSERT_TRUE(full.ok()) << "case " << t;
    for (const auto& e : full.entries) {
      ASSERT_TRUE(e.residual.is_zero());
      ASSERT_TRUE(e.wall_residual.is_zero());
    }
    SymbolicOneCycle sub;
    for (const auto& v : c.vertices()) {
      if (rng.coin(50)) sub.gamma.insert(v);
    }
    for (const auto& w : ref.relative_walls()) {
      if (rng.coin(50)) sub.alpha[w.wall] = rng.between(-3, 3);
    }
    ASSERT_TRUE(verify_key_formula(ref, tables, sub).ok()) << "case " << t;
  }
}

TEST(KeyFormulaProperty, AgreesWithWallIdentityOnCorruptedTables) {
  gen::Rng rng(63);
  for (int t = 0; t < 40; ++t) {
    const auto c = gen::random_complex(rng, 4, 2).build();
    const long long r = rng.between(2, 4);
    const auto ref = resolve(c, r);
    if (ref.relative_walls().empty()) continue;
    auto tables = compute_tables(ref);
    const auto& w = rng.pick(ref.relative_walls());
    std::vector<Label> ids;
    for (const auto& [id, v] : ref.vertices()) ids.push_back(id);
    long long delta = rng.between(-2, 2);
    if (delta == 0) delta = 1;
    tables.intersection[w.wall][rng.pick(ids)] += delta;

    const auto walls = verify_wall_identity(ref, tables);
    const auto key = verify_key_formula(ref, tables, SymbolicOneCycle::full_generic(ref));
    ASSERT_EQ(walls.ok(), key.ok());
    ASSERT_FALSE(key.ok());
    for (const auto& v : walls.violations) {
      const auto it = std::find_if(key.entries.begin(), key.entries.end(),
                                   [&](const KeyFormulaEntry& e) { return e.base_vertex == v.base_vertex; });
      ASSERT_NE(it, key.entries.end());
      ASSERT_EQ(it->wall_residual.coefficient(CycleGenerator::wall_class(v.wall, Level::Pushed)), v.sum);
    }
  }
}
