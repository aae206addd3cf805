#include <gtest/gtest.h>

#include "coverkit/error.hpp"
#include "coverkit/json_io.hpp"
#include "coverkit/pipelines.hpp"

using namespace coverkit;

namespace {

bool assertion(const PipelineReport& r, const std::string& name) {
  for (const auto& a : r.assertions)
    if (a.name == name) return a.passed;
  ADD_FAILURE() << "no assertion " << name;
  return false;
}

}  // namespace

TEST(PipelineMain, SmallCoverPasses) {
  const PipelineReport r = pipeline_main(50, 4, 1);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.intermediates["genus"], 51);
  EXPECT_EQ(r.intermediates["gamma0"], "xxxx");
  EXPECT_LE(r.intermediates["systole"]["upper_bound"].get<double>(),
            r.intermediates["gamma0_translation_length"].get<double>());
}

TEST(PipelineMain, ReportIsRecomputableFromIntermediates) {
  const PipelineReport r = pipeline_main(60, 5, 2);
  const MultiGraph g = graph_from_json(r.intermediates["graph"]);
  EXPECT_EQ(girth(g).girth, 5);
  const SchreierAction a = action_from_json(r.intermediates["gamma_n"]);
  EXPECT_EQ(min_subgroup_length(a, 5).length, 5);
  EXPECT_TRUE(contains(a, FreeWord(r.intermediates["gamma0"].get<std::string>())));
}

TEST(PipelineMain, Reproducible) {
  EXPECT_EQ(pipeline_main(50, 4, 7).to_json().dump(), pipeline_main(50, 4, 7).to_json().dump());
}

TEST(PipelineMain, Infeasible) { EXPECT_THROW(pipeline_main(10, 9, 1), InfeasibleError); }

TEST(ConstantSystole, PlantingGivesIdenticalWitnesses) {
  const auto reps = pipeline_constant_systole(3, 5, {60, 100}, 1, ThetaMethod::Planting);
  ASSERT_EQ(reps.size(), 2u);
  for (const auto& r : reps) EXPECT_TRUE(r.passed());
  EXPECT_TRUE(assertion(reps.back(), "identical_witnesses"));
  EXPECT_EQ(reps[0].intermediates["witness"], reps[1].intermediates["witness"]);
}

TEST(ConstantSystole, Preconditions) {
  EXPECT_THROW(pipeline_constant_systole(3, 2, {60}, 1), PreconditionError);
  EXPECT_THROW(pipeline_constant_systole(2, 4, {60}, 1), PreconditionError);
  EXPECT_THROW(pipeline_constant_systole(3, 4, {}, 1), PreconditionError);
}

TEST(XkSystole, SmallTowers) {
  const PipelineReport a = pipeline_xk_systole(2, 1, 1, 3);
  EXPECT_EQ(a.intermediates["degree"], 14);
  EXPECT_TRUE(assertion(a, "xk_in"));
  EXPECT_TRUE(assertion(a, "xj_out"));
  EXPECT_TRUE(assertion(a, "degree"));
  EXPECT_TRUE(assertion(a, "geometric_upper_bound"));
  const PipelineReport b = pipeline_xk_systole(1, 1, 1, 2);
  EXPECT_EQ(b.intermediates["degree"], 7);
  EXPECT_TRUE(assertion(b, "xk_in"));
}

TEST(XkSystole, SizeGuard) { EXPECT_THROW(pipeline_xk_systole(4, 3, 6), PreconditionError); }

TEST(JsonIo, GraphAndActionRoundTrip) {
  MultiGraph g(3);
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 2);
  EXPECT_EQ(graph_from_json(to_json(g)).edges(), g.edges());
  EXPECT_THROW(graph_from_json(nlohmann::json::parse(R"({"n": 2, "edges": [[0, 5]]})")), PreconditionError);
  EXPECT_THROW(graph_from_json(nlohmann::json::parse(R"({"edges": []})")), PreconditionError);
  SchreierAction a;
  a.n = 3;
  a.x = {1, 2, 0};
  a.y = {0, 2, 1};
  const SchreierAction b = action_from_json(to_json(a));
  EXPECT_EQ(b.x, a.x);
  EXPECT_EQ(b.y, a.y);
  EXPECT_EQ(to_json(a)["x"], nlohmann::json({2, 3, 1}));
  EXPECT_THROW(action_from_json(nlohmann::json::parse(R"({"n": 2, "x": [1, 1], "y": [1, 2]})")),
               PreconditionError);
}
