#include <gtest/gtest.h>

#include "traincat/coset_oracle.hpp"
#include "traincat/encoders.hpp"

using namespace traincat;

TEST(CosetCounts, BisymmetricPartitions) {
  const int expected[] = {1, 2, 3, 5, 7};
  for (int n = 1; n <= 5; ++n)
    EXPECT_EQ(FiniteDoubleCosets(PairSpec::bisymmetric(), n, 0, 0).orbit_count(), expected[n - 1]) << n;
}

TEST(CosetCounts, Trisymmetric) {
  EXPECT_EQ(FiniteDoubleCosets(PairSpec::diagonal(3), 3, 0, 0).orbit_count(), 11);
  EXPECT_EQ(FiniteDoubleCosets(PairSpec::diagonal(3), 4, 0, 0).orbit_count(), 43);
}

TEST(CosetCounts, WreathAndYoung) {
  EXPECT_EQ(FiniteDoubleCosets(PairSpec::wreath(3), 1, 0, 0).orbit_count(), 1);
  EXPECT_EQ(FiniteDoubleCosets(PairSpec::wreath(3), 2, 0, 0).orbit_count(), 2);
  EXPECT_EQ(FiniteDoubleCosets(PairSpec::young(2), 2, 0, 0).orbit_count(), 3);
}

// Frozen from the orbit enumerator; the encoders reproduce every value.
TEST(CosetCounts, LevelledBisymmetricN3) {
  const int expected[3][3] = {{3, 4, 6}, {4, 10, 18}, {6, 18, 36}};
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      EXPECT_EQ(FiniteDoubleCosets(PairSpec::bisymmetric(), 3, a, b).orbit_count(), expected[a][b]);
}

TEST(CosetCounts, LevelledTrisymmetricN3) {
  const int expected[3][3] = {{11, 20, 36}, {20, 56, 108}, {36, 108, 216}};
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      EXPECT_EQ(FiniteDoubleCosets(PairSpec::diagonal(3), 3, a, b).orbit_count(), expected[a][b]);
}

TEST(CosetOracle, OrbitsPartitionTheGroup) {
  FiniteDoubleCosets f(PairSpec::diagonal(3), 3, 1, 1);
  std::uint64_t total = 0;
  for (const auto& orbit : f.orbits()) total += orbit.size();
  EXPECT_EQ(total, f.group_order());
  EXPECT_EQ(f.group_order(), 216u);
  for (std::uint64_t r = 0; r < f.group_order(); ++r) EXPECT_EQ(f.rank(f.element(r)), r);
}

TEST(CosetOracle, SubgroupTranslatesStayInCoset) {
  Rng rng(21);
  for (PairSpec spec : {PairSpec::bisymmetric(), PairSpec::diagonal(3), PairSpec::wreath(2), PairSpec::young(2)}) {
    for (int t = 0; t < 30; ++t) {
      const int n = 3, a = static_cast<int>(rng() % 3), b = static_cast<int>(rng() % 3);
      GroupElement g = random_element(rng, spec, n);
      GroupElement h = multiply(multiply(random_subgroup_element(rng, spec, a, n), g), random_subgroup_element(rng, spec, b, n));
      EXPECT_TRUE(same_coset_finite(spec, n, a, b, g, h)) << spec.name();
    }
  }
}

TEST(CosetOracle, LabeledTranspositionChangesCoset) {
  const PairSpec spec = PairSpec::bisymmetric();
  GroupElement e = identity_element(spec);
  GroupElement g = {ColoredPerm::transposition(1, 2), ColoredPerm(1)};
  EXPECT_FALSE(same_coset_finite(spec, 3, 1, 1, e, g));
  EXPECT_TRUE(same_coset_finite(spec, 3, 0, 0, g, {ColoredPerm(1), ColoredPerm::transposition(2, 3)}));
}

TEST(CosetOracle, IdentityProductIsTheta) {
  const PairSpec spec = PairSpec::diagonal(3);
  GroupElement e = identity_element(spec);
  CosetProduct prod = coset_product_rep(spec, e, e, 0, 2, 0);
  EXPECT_EQ(prod.r, theta_element(spec, 2, prod.j));
  EXPECT_EQ(prod.j, 1);
}

TEST(CosetOracle, JClearsOuterLevels) {
  const PairSpec spec = PairSpec::bisymmetric();
  GroupElement e = identity_element(spec);
  EXPECT_EQ(default_j(spec, e, e, 3, 1, 0), 3);
  EXPECT_EQ(default_j(spec, e, e, 0, 1, 0), 1);
  EXPECT_EQ(default_j(spec, {ColoredPerm::transposition(4, 5), ColoredPerm(1)}, e, 0, 2, 0), 4);
}

TEST(CosetOracle, StabilizationOnIdentityAndRandomPairs) {
  Encoding enc(EncoderKind::Chips, 2);
  GroupElement e = identity_element(enc.spec());
  EXPECT_TRUE(stabilization_check(enc.spec(), e, e, 2, 2, 2, enc.encoder(), 3));
  Rng rng(22);
  for (int t = 0; t < 200; ++t) {
    GroupElement p = random_element(rng, enc.spec(), 5), q = random_element(rng, enc.spec(), 5);
    EXPECT_TRUE(stabilization_check(enc.spec(), p, q, 1, 2, 3, enc.encoder(), 3));
  }
}

TEST(CosetOracle, UndersizedThetaIsDetected) {
  // p = q = e at levels 3, 1, 3: theta_1 swaps 2 and 3, which K[3] cannot undo.
  Encoding enc(EncoderKind::Chips, 2);
  const PairSpec spec = enc.spec();
  GroupElement e = identity_element(spec);
  auto code = enc.encoder();
  EXPECT_NE(code(theta_product(spec, e, e, 1, 1), 3, 3), code(theta_product(spec, e, e, 1, 3), 3, 3));
  EXPECT_EQ(code(theta_product(spec, e, e, 1, 3), 3, 3), code(theta_product(spec, e, e, 1, 6), 3, 3));
}

TEST(CosetOracle, BoundIsEnforced) {
  EXPECT_THROW(FiniteDoubleCosets(PairSpec::bisymmetric(), 6, 0, 0, 1000), BoundExceeded);
}

TEST(CosetOracle, RejectsInvalidElements) {
  EXPECT_THROW(validate_element(PairSpec::diagonal(3), {ColoredPerm(1)}), std::invalid_argument);
  EXPECT_THROW(validate_element(PairSpec::wreath(2), {ColoredPerm(1)}), std::invalid_argument);
}
