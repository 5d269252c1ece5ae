#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "mgeo/errors.hpp"
#include "mgeo/sweep.hpp"

namespace mgeo {
namespace {

CaseConfig plane() { return testing::example("flat-invariant-plane"); }

TEST(Case, GridPointsLastAxisFastest) {
  CaseConfig c = plane();
  c.grid = {{0.0, 1.0, 2}, {10.0, 30.0, 3}};
  const auto pts = grid_points(c);
  ASSERT_EQ(pts.size(), 6u);
  EXPECT_EQ(pts[0], (std::vector<double>{0.0, 10.0}));
  EXPECT_EQ(pts[1], (std::vector<double>{0.0, 20.0}));
  EXPECT_EQ(pts[5], (std::vector<double>{1.0, 30.0}));
  c.points = {{0.5, 0.5}};
  EXPECT_EQ(grid_points(c).size(), 1u);
}

TEST(Case, ValidationNamesTheField) {
  const auto expect_error = [](CaseConfig c, const std::string& field) {
    try {
      validate(c);
      ADD_FAILURE() << "accepted: " << field;
    } catch (const ArgumentError& e) {
      EXPECT_EQ(std::string(e.what()).rfind(field, 0), 0u) << e.what();
    }
  };
  CaseConfig c = plane();
  c.grid.clear();
  expect_error(c, "grid");
  c = plane();
  c.grid.pop_back();
  expect_error(c, "grid");
  c = plane();
  c.tol = 0.0;
  expect_error(c, "numerics.tol");
  c = plane();
  c.k_values.clear();
  expect_error(c, "analysis.k_values");
  c = plane();
  c.u_values = {2.0};
  expect_error(c, "analysis.u_values[0]");
  c = testing::example("flat-invariant-3space");
  c.tuples = {{3}};
  expect_error(c, "analysis.tuples[0]");
  c.tuples.clear();
  expect_error(c, "analysis.tuples");
  c = plane();
  c.d2 = {{"1", "0"}};
  expect_error(c, "analysis.distributions");
  c = testing::example("circle");
  c.theorems = {TheoremId::wintgen};
  expect_error(c, "analysis.theorems");
  // chen at n = 2 has no admissible tuple and is accepted without one
  EXPECT_NO_THROW(validate(plane()));
}

TEST(Case, CatalogueEntriesCompile) {
  ASSERT_GE(catalogue().size(), 7u);
  for (const CatalogueEntry& e : catalogue()) {
    EXPECT_NO_THROW(compile_case(e.config)) << e.config.name;
    EXPECT_FALSE(e.summary.empty());
    EXPECT_FALSE(e.highlights.empty());
  }
  EXPECT_EQ(find_example("nope"), nullptr);
}

TEST(Case, CompileErrorsCarryPaths) {
  CaseConfig c = plane();
  c.coords[1] = "u2 * (";
  try {
    compile_case(c);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_STREQ(e.what(), "immersion.coords[1]: unexpected end of input at line 2, column 7");
  }
  c = testing::example("torus-in-flat");
  c.d1 = {{"1", "q"}};
  try {
    compile_case(c);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(std::string(e.what()).rfind("analysis.distributions.D1[0][1]", 0), 0u) << e.what();
  }
}

TEST(Sweep, PointFailuresAreRecorded) {
  CaseConfig c = testing::make_case(testing::flat_space(2, 1), 2, {"u1", "u2", "1/u1"});
  c.points = {{0.0, 0.0}, {1.0, 0.0}};
  const auto res = run_sweep(compile_case(c), {}, 1);
  ASSERT_EQ(res.size(), 2u);
  EXPECT_FALSE(res[0].ok());
  EXPECT_EQ(res[0].error_kind, "evaluation");
  EXPECT_TRUE(res[1].ok());
  c.coords = {"u1", "u1", "0"};
  EXPECT_EQ(run_sweep(compile_case(c), {}, 1)[0].error_kind, "degenerate-immersion");
}

TEST(Sweep, NonOrthogonalDistributionsAbort) {
  CaseConfig c = testing::example("torus-in-flat");
  c.d2 = {{"1", "1"}};
  try {
    run_sweep(compile_case(c), {true, false}, 2);
    FAIL();
  } catch (const ClassificationError& e) {
    EXPECT_EQ(std::string(e.what()).rfind("point 0 (u = ", 0), 0u) << e.what();
  }
}

TEST(Sweep, VerifyResultsAreOrderedAndThreadIndependent) {
  const CompiledCase c = compile_case(testing::example("torus-in-flat"));
  const auto one = run_sweep(c, {true, true}, 1);
  const auto many = run_sweep(c, {true, true}, 4);
  ASSERT_EQ(one.size(), 20u);
  ASSERT_EQ(many.size(), one.size());
  for (std::size_t i = 0; i < one.size(); ++i) {
    EXPECT_EQ(one[i].index, i);
    EXPECT_EQ(many[i].u, one[i].u);
    ASSERT_EQ(many[i].results.size(), one[i].results.size());
    // wintgen, shape-ricci k=2, mean-scalar, casorati u=1 and u=3
    EXPECT_EQ(one[i].results.size(), 5u);
    for (std::size_t j = 0; j < one[i].results.size(); ++j)
      EXPECT_EQ(many[i].results[j].slack, one[i].results[j].slack);
    ASSERT_TRUE(one[i].derivation.has_value());
  }
}

TEST(Sweep, TorusCasoratiSlack) {
  // C(W) is not constant; inf C(W) = 0.2 is attained at cos^2 t = 1/5.
  const CompiledCase c = compile_case(testing::example("torus-in-flat"));
  const PointResult r = run_point(c, {1.0, 2.0}, 0, {true, false});
  for (const InequalityResult& res : r.results)
    if (res.theorem == TheoremId::casorati && res.label == "u=1") EXPECT_NEAR(res.slack, 0.925, 1e-9);
}

}  // namespace
}  // namespace mgeo
