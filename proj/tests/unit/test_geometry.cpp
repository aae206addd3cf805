#include <gtest/gtest.h>

#include <cmath>

#include "coverkit/error.hpp"
#include "coverkit/geometry.hpp"
#include "coverkit/json_io.hpp"

using namespace coverkit;

namespace {

const double kSystole = 2 * std::acosh(1 + std::sqrt(2.0));

}  // namespace

TEST(Rep, BolzaValidates) {
  const FuchsianRep rep = load_rep(bolza_config());
  EXPECT_LT(rep.relator_residual(), 1e-10);
  for (int i = 0; i < 4; ++i) {
    EXPECT_NEAR(std::abs(rep.gen(i).trace()), 2 + 2 * std::sqrt(2.0), 1e-12);
    EXPECT_NEAR(rep.gen(i).det(), 1.0, 1e-12);
  }
}

TEST(Rep, RejectsIdentityAndPerturbation) {
  RepConfig id;
  for (auto& g : id.gens) g = {1, 0, 0, 1};
  EXPECT_THROW(load_rep(id), PreconditionError);
  RepConfig bad = bolza_config();
  bad.gens[2][1] += 1e-3;
  try {
    load_rep(bad);
    FAIL() << "perturbed rep accepted";
  } catch (const PreconditionError& e) {
    EXPECT_NE(std::string(e.what()).find("relator"), std::string::npos);
  }
}

TEST(Rep, EvaluateIsHomomorphism) {
  const FuchsianRep rep = load_rep(bolza_config());
  const Mat2 a = rep.evaluate(SurfaceWord("xyA"));
  const Mat2 b = rep.evaluate(SurfaceWord("bX"));
  EXPECT_LT(distance_up_to_sign(rep.evaluate(SurfaceWord("xyAbX")), a * b), 1e-6);
  EXPECT_LT(distance_to_pm_identity(rep.evaluate(SurfaceWord("xyAaYX"))), 1e-12);
  // xyXY = baBA in the surface group.
  EXPECT_LT(distance_up_to_sign(rep.evaluate(SurfaceWord("xyXY")), rep.evaluate(SurfaceWord("baBA"))), 1e-6);
}

TEST(Translation, LengthAndErrors) {
  const FuchsianRep rep = load_rep(bolza_config());
  EXPECT_NEAR(translation_length(rep.gen(0)), 3.05714, 1e-5);
  EXPECT_NEAR(translation_length(rep.gen(0)), kSystole, 1e-12);
  EXPECT_THROW(translation_length(Mat2{}), PreconditionError);
  EXPECT_THROW(translation_length(Mat2{1, 1, 0, 1}), PreconditionError);
  EXPECT_NEAR(displacement_at_i(Mat2{std::exp(1.0), 0, 0, std::exp(-1.0)}), 2.0, 1e-12);
}

TEST(Systole, TrivialCoverGivesBolzaValue) {
  const FuchsianRep rep = load_rep(bolza_config());
  const SystoleBound b = systole_upper_bound(rep, trivial_surface_action(), 2);
  EXPECT_NEAR(b.upper_bound, kSystole, 1e-4);
  EXPECT_EQ(b.witness, "x");
  EXPECT_THROW(systole_upper_bound(rep, trivial_surface_action(), 0), PreconditionError);
}

TEST(Systole, ExhaustedWhenNoStabilizer) {
  const FuchsianRep rep = load_rep(bolza_config());
  SurfaceAction big;
  big.n = 10;
  for (auto& g : big.gen)
    for (int p = 0; p < 10; ++p) g.push_back((p + 1) % 10);
  big.build_inverses();
  // Every generator shifts by one, so no element of length 1 fixes the base.
  EXPECT_THROW(systole_upper_bound(rep, big, 1), ExhaustedError);
}

TEST(MilnorSchwarz, InequalitiesHoldOnTheBall) {
  const FuchsianRep rep = load_rep(bolza_config());
  const MilnorSchwarz ms = estimate_milnor_schwarz(rep, 4);
  EXPECT_TRUE(ms.cap_met);
  EXPECT_GE(ms.q, 1.0);
  for (const BallElement& e : enumerate_ball(4)) {
    const double d = displacement_at_i(rep.evaluate(SurfaceWord(e.word)));
    EXPECT_LE(e.length / ms.q - ms.beta, d + 1e-9);
    EXPECT_LE(d, ms.q * e.length + ms.beta + 1e-9);
  }
  EXPECT_THROW(estimate_milnor_schwarz(rep, 1), PreconditionError);
}

TEST(Geometry, GenusAndConfigRoundTrip) {
  EXPECT_EQ(genus_of_cover(1), 2);
  EXPECT_EQ(genus_of_cover(50), 51);
  const RepConfig c = rep_config_from_json(to_json(bolza_config()));
  EXPECT_EQ(c.gens, bolza_config().gens);
  const RepConfig file = rep_config_from_json(read_json_file(COVERKIT_DATA_DIR "/bolza.json"));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) EXPECT_DOUBLE_EQ(file.gens[i][j], bolza_config().gens[i][j]);
}
