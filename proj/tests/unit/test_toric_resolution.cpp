#include <gtest/gtest.h>

#include <functional>
#include <map>
#include <set>

#include "support/generators.hpp"
#include "support/oracles.hpp"
#include "support/structure.hpp"
#include "toricres/error.hpp"
#include "toricres/toric_resolution.hpp"

using namespace toricres;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::EngineFailure;
}

DualComplex triangle() { return DualComplex::build({"1", "2", "3"}, {{"1", "2", "3"}}); }
DualComplex segment() { return DualComplex::build({"1", "2"}, {{"1", "2"}}); }

}  // namespace

TEST(ConeFamily, InitialRecord) {
  const auto rec = initial_record(Simplex{"1", "2", "3"}, 3);
  EXPECT_EQ(rec.generators(),
            (std::vector<LatticeVector>{LatticeVector{1, 0, 0}, LatticeVector{1, 0, 3},
                                        LatticeVector{1, 3, 0}}));
  EXPECT_EQ(rec.rays().size(), 3u);
  EXPECT_EQ(rec.dimension(), 2);
  EXPECT_THROW(initial_record(Simplex{"1"}, 0), Error);
}

TEST(ConeFamily, BlowupOfVertexSplitsOffCorner) {
  const auto rec = initial_record(Simplex{"1", "2", "3"}, 3);
  const auto out = blowup_subdivide(rec, LatticeVector{1, 0, 0});
  ASSERT_TRUE(out.subdivided);
  ASSERT_EQ(out.cones.size(), 2u);
  EXPECT_EQ(std::set<LatticeVector>(out.new_rays.begin(), out.new_rays.end()),
            (std::set<LatticeVector>{LatticeVector{1, 2, 0}, LatticeVector{1, 0, 2}}));
  std::set<std::vector<LatticeVector>> got;
  for (const auto& c : out.cones) got.insert(c.rays());
  EXPECT_TRUE(got.count({LatticeVector{1, 0, 0}, LatticeVector{1, 0, 2}, LatticeVector{1, 2, 0}}));
  EXPECT_TRUE(got.count({LatticeVector{1, 0, 2}, LatticeVector{1, 0, 3}, LatticeVector{1, 2, 0},
                         LatticeVector{1, 3, 0}}));
}

TEST(ConeFamily, BlowupRejectsForeignCenter) {
  const auto rec = initial_record(Simplex{"1", "2"}, 2);
  EXPECT_EQ(code_of([&] { blowup_subdivide(rec, LatticeVector{1, 1}); }), ErrorCode::CenterNotPresent);
}

TEST(ConeFamily, RegularConeIsLeftAlone) {
  const auto rec = initial_record(Simplex{"1", "2"}, 1);
  const auto out = blowup_subdivide(rec, LatticeVector{1, 0});
  EXPECT_FALSE(out.subdivided);
  ASSERT_EQ(out.cones.size(), 1u);
  EXPECT_EQ(out.cones.front().rays(), rec.rays());
}

TEST(ConeFamily, DualGeneratorsPairNonnegatively) {
  for (long long r = 1; r <= 5; ++r) {
    const auto dual = sigma_dual_generators(2, r);
    ASSERT_EQ(dual.size(), 4u);
    for (const auto& g : initial_record(Simplex{"a", "b", "c"}, r).generators()) {
      for (const auto& d : dual) ASSERT_GE(dot(d, g), 0);
    }
  }
}

TEST(GlobalPoint, SupportAndLabel) {
  const GlobalPoint p{{"1", 1}, {"2", 2}, {"3", 0}};
  EXPECT_EQ(support(p), (Simplex{"1", "2"}));
  EXPECT_EQ(exceptional_label(p), "E:{1,2}:(1,2)");
}

TEST(LocalFanState, InitialStateAndCoordinates) {
  const auto s = LocalFanState::initial(triangle(), 3);
  EXPECT_EQ(s.components().size(), 3u);
  EXPECT_FALSE(s.check_terminal().regular);
  const GlobalPoint p{{"1", 1}, {"3", 2}};
  const auto w = s.working_vector(Simplex{"1", "2", "3"}, p);
  EXPECT_EQ(w, (LatticeVector{1, 0, 2}));
  EXPECT_EQ(s.global_point(Simplex{"1", "2", "3"}, w), p);
  EXPECT_EQ(s.label_at(GlobalPoint{{"2", 3}}), std::optional<Label>("2"));
  EXPECT_EQ(code_of([&] { s.point_of("nope"); }), ErrorCode::UnknownComponent);
}

TEST(LocalFanState, RamificationOneIsAlreadyTerminal) {
  const auto s = LocalFanState::initial(triangle(), 1);
  EXPECT_TRUE(s.check_terminal().regular);
  LocalFanState out = s;
  EXPECT_TRUE(default_schedule(s, &out).empty());
  EXPECT_TRUE(out.check_terminal().regular);
}

TEST(LocalFanState, BlowupRegistersExceptionalComponents) {
  auto s = LocalFanState::initial(segment(), 3);
  const auto step = s.blow_up("1");
  EXPECT_EQ(step.new_components, (std::vector<Label>{"E:{1,2}:(1,2)"}));
  EXPECT_EQ(s.point_of("E:{1,2}:(1,2)"), (GlobalPoint{{"1", 1}, {"2", 2}}));
  EXPECT_EQ(s.history().size(), 1u);
  EXPECT_EQ(code_of([&] { s.blow_up("E:{9}:(1)"); }), ErrorCode::UnknownComponent);
}

TEST(LocalFanState, HigherDimensionalSchedulesAreUnsupported) {
  const auto c = DualComplex::build({"1", "2", "3", "4"}, {{"1", "2", "3", "4"}});
  auto s = LocalFanState::initial(c, 2);
  EXPECT_EQ(code_of([&] { s.blow_up("1"); }), ErrorCode::Unsupported);
}

TEST(LocalFanState, ScheduleStoppingShortIsNotTerminal) {
  const auto s = run_schedule(LocalFanState::initial(triangle(), 3), {"1"});
  const auto report = check_terminal(s);
  EXPECT_FALSE(report.regular);
  EXPECT_FALSE(report.offending.empty());
  for (const auto& o : report.offending) EXPECT_NE(o.multiplicity, 1);
}

TEST(LocalFanState, ObserverSeesEveryStep) {
  std::vector<Label> seen;
  run_schedule(LocalFanState::initial(segment(), 4), {"1", "2"},
               [&](const LocalFanState&, const StepRecord& rec) { seen.push_back(rec.center); });
  EXPECT_EQ(seen, (std::vector<Label>{"1", "2"}));
}

TEST(ResolutionProperty, DefaultScheduleTerminatesOnRegularFans) {
  gen::Rng rng(31);
  for (int t = 0; t < 60; ++t) {
    const auto c = gen::random_complex(rng, 5, 2).build();
    const long long r = rng.between(1, 5);
    const auto initial = LocalFanState::initial(c, r);
    LocalFanState terminal = initial;
    const auto schedule = default_schedule(initial, &terminal);
    ASSERT_TRUE(terminal.check_terminal().regular) << "case " << t;
    ASSERT_EQ(testkit::unimodular_defects(terminal), "");
    terminal.validate_consistency();

    std::size_t steps = 0;
    const auto replay = run_schedule(initial, schedule, [&](const LocalFanState& s, const StepRecord&) {
      ++steps;
      ASSERT_EQ(testkit::fan_defects(s), "");
    });
    ASSERT_EQ(steps, schedule.size());
    ASSERT_EQ(replay.components(), terminal.components());
  }
}

TEST(ResolutionProperty, RandomSchedulesOnSegmentsGiveCanonicalRays) {
  gen::Rng rng(32);
  for (int t = 0; t < 80; ++t) {
    const int n = static_cast<int>(rng.between(2, 4));
    std::vector<Label> vs;
    std::vector<std::vector<Label>> fs;
    for (int i = 0; i < n; ++i) vs.push_back(std::to_string(i + 1));
    for (int i = 0; i + 1 < n; ++i) fs.push_back({vs[i], vs[i + 1]});
    const long long r = rng.between(1, 6);
    auto s = LocalFanState::initial(DualComplex::build(vs, fs), r);
    testkit::random_schedule(s, rng);
    ASSERT_TRUE(s.check_terminal().regular);
    ASSERT_EQ(testkit::fan_defects(s), "");
    ASSERT_EQ(testkit::edge_ray_defects(s), "");
  }
}

TEST(ResolutionProperty, RandomSchedulesOnTrianglesReachUnimodularFans) {
  gen::Rng rng(33);
  for (int t = 0; t < 30; ++t) {
    const long long r = rng.between(2, 4);
    auto s = LocalFanState::initial(triangle(), r);
    testkit::random_schedule(s, rng);
    ASSERT_TRUE(s.check_terminal().regular) << "case " << t;
    ASSERT_EQ(testkit::fan_defects(s), "");
    ASSERT_EQ(testkit::unimodular_defects(s), "");
  }
}
