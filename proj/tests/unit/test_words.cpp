#include <gtest/gtest.h>

#include <string>

#include "coverkit/error.hpp"
#include "coverkit/free_word.hpp"
#include "coverkit/rng.hpp"
#include "coverkit/surface_word.hpp"
#include "oracles.hpp"

using namespace coverkit;

namespace {

std::string random_letters(Rng& rng, std::size_t len, std::string_view alphabet) {
  std::string w;
  for (std::size_t i = 0; i < len; ++i) w += alphabet[rng.below(alphabet.size())];
  return w;
}

}  // namespace

TEST(FreeWord, ReductionMatchesNaiveOracle) {
  Rng rng(11);
  for (int t = 0; t < 2000; ++t) {
    const std::string w = random_letters(rng, rng.below(40), "xXyY");
    EXPECT_EQ(free_reduce(w), oracle::naive_reduce(w)) << w;
  }
}

TEST(FreeWord, GroupLaws) {
  Rng rng(12);
  for (int t = 0; t < 500; ++t) {
    const FreeWord a = reduce(random_letters(rng, rng.below(12), "xXyY"));
    const FreeWord b = reduce(random_letters(rng, rng.below(12), "xXyY"));
    const FreeWord c = reduce(random_letters(rng, rng.below(12), "xXyY"));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_TRUE((a * a.inverse()).empty());
    EXPECT_EQ((a * b).inverse(), b.inverse() * a.inverse());
    EXPECT_EQ(a.pow(3), a * a * a);
    EXPECT_EQ(a.pow(-2), a.inverse() * a.inverse());
  }
}

TEST(FreeWord, RejectsForeignLetters) {
  EXPECT_THROW(FreeWord("xa"), PreconditionError);
  EXPECT_EQ(FreeWord("xXyxXx").str(), "yx");
  EXPECT_EQ(FreeWord::u().str(), "xyXY");
  EXPECT_EQ(FreeWord::u_power(-1).str(), "yxYX");
}

TEST(FreeWord, CyclicMembership) {
  long j = 0;
  EXPECT_TRUE(in_cyclic_u(FreeWord::u_power(5), &j));
  EXPECT_EQ(j, 5);
  EXPECT_TRUE(in_cyclic_u(FreeWord(), &j));
  EXPECT_EQ(j, 0);
  EXPECT_FALSE(in_cyclic_u(FreeWord("xyX")));
  EXPECT_FALSE(in_cyclic_u(FreeWord("yxYX") * FreeWord("x")));
}

TEST(FreeWord, WedgeSplitRecombines) {
  Rng rng(13);
  for (int t = 0; t < 500; ++t) {
    const FreeWord g = reduce(random_letters(rng, 1 + rng.below(10), "xXyY"));
    if (in_cyclic_u(g)) {
      EXPECT_THROW(wedge_split_u(g), PreconditionError);
      continue;
    }
    const WedgeSplit s = wedge_split_u(g);
    EXPECT_EQ(FreeWord::u_power(s.i1) * s.core * FreeWord::u_power(s.i2), g);
    EXPECT_FALSE(s.core.empty());
  }
}

TEST(FreeWord, SandwichPreconditions) {
  const FreeWord g("xx");
  EXPECT_THROW(sandwich_normalize(2, 4, 1, 1, g), PreconditionError);
  EXPECT_THROW(sandwich_normalize(3, 1, 1, 1, g), PreconditionError);
  EXPECT_THROW(sandwich_normalize(3, 4, 0, 1, g), PreconditionError);
  EXPECT_THROW(sandwich_normalize(3, 4, 1, 1, FreeWord::u()), PreconditionError);
  EXPECT_THROW(sandwich_normalize(3, 1, 1, 1, FreeWord("xxx")), PreconditionError);
  // Cancellation against both u-blocks is absorbed into gamma'.
  const Sandwich s = sandwich_normalize(3, 4, 1, -1, FreeWord::u_power(-1) * FreeWord("x"));
  EXPECT_EQ(s.left, 4);
  EXPECT_EQ(s.right, -4);
}

TEST(SurfaceWord, DehnKillsRelatorConjugates) {
  const std::string rel(kSurfaceRelator);
  for (std::size_t i = 0; i < rel.size(); ++i) {
    const std::string rot = rel.substr(i) + rel.substr(0, i);
    EXPECT_TRUE(dehn_reduce(rot).empty()) << rot;
    EXPECT_TRUE(dehn_reduce(invert_letters(rot)).empty());
  }
  EXPECT_TRUE(is_identity(SurfaceWord("xyXYab") * SurfaceWord("AB")));
  EXPECT_FALSE(is_identity(SurfaceWord("xyXYa")));
}

TEST(SurfaceWord, InverseCancelsAndSameElementIsSymmetric) {
  Rng rng(14);
  for (int t = 0; t < 300; ++t) {
    const SurfaceWord w(random_letters(rng, rng.below(20), kSurfaceAlphabet));
    EXPECT_TRUE(is_identity(w * w.inverse()));
    const SurfaceWord v = w * SurfaceWord(std::string(kSurfaceRelator));
    EXPECT_TRUE(same_element(w, v));
    EXPECT_TRUE(same_element(v, w));
  }
}

TEST(SurfaceWord, CanonicalFormAndLength) {
  // xyXY = baBA, and baBA is shortlex-greater.
  const SurfaceWord c = dehn_canonical(SurfaceWord("baBA"));
  EXPECT_TRUE(c.canonical());
  EXPECT_EQ(c.str(), "xyXY");
  EXPECT_EQ(length_B(SurfaceWord("xyXYab")), 2);
  EXPECT_EQ(length_B(SurfaceWord("")), 0);
  EXPECT_THROW(length_B(SurfaceWord(std::string(12, 'x')), 4), OutOfRadius);
}

TEST(SurfaceWord, SphereSizesMatchMatrixOracle) {
  // Frozen from the matrix oracle; they agree with the known growth series.
  const std::vector<std::size_t> frozen = {1, 8, 56, 392, 2736, 19096};
  const auto oracle_sizes = oracle::float_sphere_sizes(5);
  const auto sizes = sphere_sizes(5);
  ASSERT_EQ(sizes.size(), frozen.size());
  for (std::size_t r = 0; r < frozen.size(); ++r) {
    EXPECT_EQ(sizes[r], frozen[r]);
    EXPECT_EQ(static_cast<std::size_t>(oracle_sizes[r]), frozen[r]);
  }
}

TEST(SurfaceWord, BallIsShortlexOrderedAndGeodesic) {
  const auto ball = enumerate_ball(4);
  for (std::size_t i = 1; i < ball.size(); ++i) EXPECT_LE(ball[i - 1].length, ball[i].length);
  Rng rng(15);
  for (int t = 0; t < 200; ++t) {
    const auto& e = ball[rng.below(ball.size())];
    EXPECT_EQ(static_cast<int>(e.word.size()), e.length);
    EXPECT_EQ(length_B(SurfaceWord(e.word)), e.length);
  }
}
