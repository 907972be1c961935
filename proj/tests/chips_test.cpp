#include <gtest/gtest.h>

#include "traincat/chips.hpp"
#include "traincat/characters.hpp"
#include "traincat/coset_oracle.hpp"

using namespace traincat;

namespace {

ColoredPerm P(const char* text) { return parse_cycles(text); }
const ColoredPerm e(1);

}  // namespace

TEST(Chips, IdentityPairGivesStraightArcs) {
  Chip c = chip_from_pair(e, e, 2, 2);
  EXPECT_TRUE(c.cycles().empty());
  for (const auto& arc : c.arcs()) {
    EXPECT_EQ(arc.a.index, arc.b.index);
    if (arc.a.side == arc.b.side) EXPECT_EQ(arc.roods, 0);
    else EXPECT_EQ(arc.roods, 1);
  }
  EXPECT_EQ(chip_canon(c), chip_canon(identity_chip(2)));
}

TEST(Chips, DiagonalElementIsEmpty) {
  Chip c = chip_from_pair(P("(1 2)"), P("(1 2)"), 0, 0);
  EXPECT_TRUE(c.arcs().empty());
  EXPECT_TRUE(c.cycles().empty());
  EXPECT_EQ(chip_canon(c), chip_canon(identity_chip(0)));
}

TEST(Chips, TranspositionGivesFourRoodCycle) {
  Chip c = chip_from_pair(P("(1 2)"), e, 0, 0);
  EXPECT_TRUE(c.arcs().empty());
  EXPECT_EQ(c.cycles(), std::vector<int>{4});
}

TEST(Chips, LevelZeroCyclesFollowCycleType) {
  Rng rng(31);
  for (int t = 0; t < 100; ++t) {
    ColoredPerm g1 = random_perm(rng, 6), g2 = random_perm(rng, 6);
    std::vector<int> expected;
    for (auto [k, r] : cycle_type(compose(g1, inverse(g2))))
      if (k > 1) expected.insert(expected.end(), r, 2 * k);
    std::sort(expected.begin(), expected.end());
    std::vector<int> got = chip_from_pair(g1, g2, 0, 0).cycles();
    std::sort(got.begin(), got.end());
    EXPECT_EQ(got, expected);
  }
}

TEST(Chips, ClosedChipsMultiplyByUnion) {
  Chip a = chip_from_pair(P("(1 2)"), e, 0, 0), b = chip_from_pair(P("(1 2 3)"), e, 0, 0);
  std::vector<int> cycles = chip_mul(a, b).cycles();
  std::sort(cycles.begin(), cycles.end());
  EXPECT_EQ(cycles, (std::vector<int>{4, 6}));
}

TEST(Chips, IdentityIsNeutral) {
  Rng rng(32);
  for (int t = 0; t < 100; ++t) {
    int a = static_cast<int>(rng() % 4), b = static_cast<int>(rng() % 4);
    Chip c = chip_from_pair(random_perm(rng, 5), random_perm(rng, 5), a, b);
    EXPECT_EQ(chip_canon(chip_mul(c, identity_chip(b))), chip_canon(c));
    EXPECT_EQ(chip_canon(chip_mul(identity_chip(a), c)), chip_canon(c));
  }
}

TEST(Chips, InvolutionSwapsRowsAndIsAntiMultiplicative) {
  EXPECT_EQ(chip_canon(chip_involution(identity_chip(3))), chip_canon(identity_chip(3)));
  Rng rng(33);
  for (int t = 0; t < 100; ++t) {
    int a = static_cast<int>(rng() % 4), b = static_cast<int>(rng() % 4), c = static_cast<int>(rng() % 4);
    Chip x = chip_from_pair(random_perm(rng, 5), random_perm(rng, 5), a, b);
    Chip y = chip_from_pair(random_perm(rng, 5), random_perm(rng, 5), b, c);
    Chip xs = chip_involution(x);
    EXPECT_EQ(xs.alpha(), x.beta());
    EXPECT_EQ(chip_canon(chip_involution(xs)), chip_canon(x));
    EXPECT_EQ(chip_canon(chip_involution(chip_mul(x, y))), chip_canon(chip_mul(chip_involution(y), xs)));
  }
}

TEST(Chips, InvolutionMatchesGroupInverse) {
  Rng rng(34);
  for (int t = 0; t < 100; ++t) {
    int a = static_cast<int>(rng() % 4), b = static_cast<int>(rng() % 4);
    ColoredPerm g1 = random_perm(rng, 5), g2 = random_perm(rng, 5);
    EXPECT_EQ(chip_canon(chip_involution(chip_from_pair(g1, g2, a, b))),
              chip_canon(chip_from_pair(inverse(g1), inverse(g2), b, a)));
  }
}

TEST(Chips, CanonIgnoresRepresentative) {
  Rng rng(35);
  const PairSpec spec = PairSpec::bisymmetric();
  for (int t = 0; t < 100; ++t) {
    int a = static_cast<int>(rng() % 3), b = static_cast<int>(rng() % 3);
    GroupElement g = random_element(rng, spec, 4);
    GroupElement h = multiply(multiply(random_subgroup_element(rng, spec, a, 6), g), random_subgroup_element(rng, spec, b, 6));
    EXPECT_EQ(chip_canon(chip_from_pair(g[0], g[1], a, b)), chip_canon(chip_from_pair(h[0], h[1], a, b)));
  }
}

TEST(Chips, ThomaEvaluation) {
  EXPECT_DOUBLE_EQ(chip_thoma_eval(identity_chip(0), ThomaParams({0.5, 0.5}, {})), 1.0);
  Rng rng(36);
  for (int t = 0; t < 20; ++t)
    EXPECT_NEAR(chip_thoma_eval(chip_from_pair(random_perm(rng, 5), e, 0, 0), ThomaParams({1.0}, {})), 1.0, 1e-15);
  EXPECT_NEAR(chip_thoma_eval(chip_from_pair(P("(1 2)"), e, 0, 0), ThomaParams({0.5, 0.5}, {})), 0.5, 1e-15);
  Chip c = chip_from_pair(P("(1 2 3)(4 5)"), e, 0, 0);
  ThomaParams params({0.5}, {0.25});
  EXPECT_NEAR(chip_thoma_eval(c, params), thoma_char(params, P("(1 2 3)(4 5)")), 1e-15);
  EXPECT_THROW(chip_thoma_eval(identity_chip(1), params), std::invalid_argument);
}

TEST(Chips, JsonRoundTrip) {
  Rng rng(37);
  for (int t = 0; t < 50; ++t) {
    Chip c = chip_from_pair(random_perm(rng, 6), random_perm(rng, 6), static_cast<int>(rng() % 4), static_cast<int>(rng() % 4));
    EXPECT_EQ(chip_canon(chip_from_json(chip_to_json(c))), chip_canon(c));
  }
  EXPECT_THROW(chip_from_json("{\"alpha\": 1}"), std::invalid_argument);
}

TEST(Chips, ConstructorRejectsBadParity) {
  ChipArc arc{{Row::Top, Side::Left, 1}, {Row::Top, Side::Right, 1}, 0};  // crossing the axis needs odd roods
  EXPECT_THROW(Chip(0, 1, {arc}, {}), std::invalid_argument);
  EXPECT_THROW(Chip(0, 0, {}, {3}), std::invalid_argument);
}
