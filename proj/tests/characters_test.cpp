#include <gtest/gtest.h>

#include <numeric>

#include "traincat/characters.hpp"
#include "traincat/coset_oracle.hpp"

using namespace traincat;

namespace {

ColoredPerm P(const char* text, int colors = 0) { return parse_cycles(text, colors); }

Eigen::VectorXcd random_unit(Rng& rng, int d) {
  std::normal_distribution<double> normal;
  Eigen::VectorXcd v(d);
  for (int i = 0; i < d; ++i) v[i] = {normal(rng), normal(rng)};
  return v / v.norm();
}

}  // namespace

TEST(Thoma, SignAndTrivialCharacters) {
  ThomaParams sign({}, {1.0}), trivial({1.0}, {});
  EXPECT_DOUBLE_EQ(thoma_char(sign, P("(1 2)")), -1.0);
  EXPECT_DOUBLE_EQ(thoma_char(sign, P("(1 2 3)")), 1.0);
  EXPECT_DOUBLE_EQ(thoma_char(sign, P("(1 2)(3 4)")), 1.0);
  Rng rng(71);
  for (int t = 0; t < 20; ++t) EXPECT_DOUBLE_EQ(thoma_char(trivial, random_perm(rng, 6)), 1.0);
}

TEST(Thoma, PowerSumsAndGamma) {
  ThomaParams p({0.5, 0.25}, {0.125});
  EXPECT_DOUBLE_EQ(p.power_sum(1), 0.875);
  EXPECT_DOUBLE_EQ(p.power_sum(2), 0.25 + 0.0625 - 0.015625);
  EXPECT_DOUBLE_EQ(p.gamma(), 0.125);
  EXPECT_DOUBLE_EQ(thoma_char(p, P("(1 2 3)(4 5)")), p.power_sum(3) * p.power_sum(2));
  EXPECT_DOUBLE_EQ(thoma_char(p, ColoredPerm(1)), 1.0);
}

TEST(Thoma, RejectsInvalidParameters) {
  EXPECT_THROW(ThomaParams({0.2, 0.5}, {}), std::invalid_argument);
  EXPECT_THROW(ThomaParams({-0.1}, {}), std::invalid_argument);
  EXPECT_THROW(ThomaParams({0.6}, {0.6}), std::invalid_argument);
  EXPECT_NO_THROW(ThomaParams({0.5}, {0.5}));
}

TEST(Thoma, ParseParameters) {
  ThomaParams p = ThomaParams::parse("alpha=0.5,0.25 beta=0.2");
  EXPECT_EQ(p.alphas(), (std::vector<double>{0.5, 0.25}));
  EXPECT_EQ(p.betas(), std::vector<double>{0.2});
  EXPECT_THROW(ThomaParams::parse("alpha=x"), std::invalid_argument);
}

TEST(Thoma, GramMatricesArePositive) {
  PsdReport single = thoma_psd_check(ThomaParams({0.5}, {0.5}), {P("(1 2)")});
  EXPECT_EQ(single.gram.rows(), 1);
  EXPECT_DOUBLE_EQ(single.gram(0, 0), 1.0);
  EXPECT_NEAR(single.min_eigenvalue, 1.0, 1e-12);
  Rng rng(72);
  ThomaParams params({0.5, 0.25, 0.25}, {});
  for (int t = 0; t < 20; ++t) {
    std::vector<ColoredPerm> perms;
    for (int i = 0; i < 6; ++i) perms.push_back(random_perm(rng, 5));
    EXPECT_GE(thoma_psd_check(params, perms).min_eigenvalue, -1e-9);
  }
}

TEST(SMatrix, Basics) {
  EXPECT_TRUE(s_matrix(ColoredPerm(2)).is_zero());
  SMatrix s = s_matrix(P("(1@1 1@2)", 2));
  EXPECT_EQ(s(1, 2), 1);
  EXPECT_EQ(s(2, 1), 1);
  EXPECT_EQ(SMatrix::parse("[[., 1, 0], [0, ., 1], [1, 0, .]]"), SMatrix::cycle(3, {1, 2, 3}));
  EXPECT_THROW(SMatrix::parse("[[., 1], [0, .]]"), std::invalid_argument);
  EXPECT_THROW(SMatrix::cycle(3, {1, 1}), std::invalid_argument);
}

TEST(SMatrix, CosetInvariant) {
  Rng rng(73);
  const PairSpec spec = PairSpec::young(3);
  for (int t = 0; t < 100; ++t) {
    GroupElement g = random_element(rng, spec, 4);
    GroupElement h = multiply(multiply(random_subgroup_element(rng, spec, 0, 6), g), random_subgroup_element(rng, spec, 0, 6));
    EXPECT_EQ(coset_invariant_young(g[0], 0), coset_invariant_young(h[0], 0));
  }
}

TEST(SMatrix, ProductOfCosetsAddsMatrices) {
  Rng rng(74);
  const PairSpec spec = PairSpec::young(3);
  for (int t = 0; t < 100; ++t) {
    GroupElement p = random_element(rng, spec, 4), q = random_element(rng, spec, 4);
    CosetProduct prod = coset_product_rep(spec, p, q, 0, 0, 0);
    EXPECT_EQ(coset_invariant_young(prod.r[0], 0), coset_invariant_young(p[0], 0) + coset_invariant_young(q[0], 0));
  }
}

TEST(SMatrix, YoungCountsMatchDistinctMatrices) {
  for (auto [m, n] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 2}}) {
    FiniteDoubleCosets f(PairSpec::young(m), n, 0, 0);
    std::vector<Eigen::MatrixXi> seen;
    for (const auto& orbit : f.orbits()) {
      Eigen::MatrixXi s = coset_invariant_young(orbit.front()[0], 0).matrix();
      for (const auto& x : seen) ASSERT_NE(x, s);
      seen.push_back(s);
    }
  }
}

TEST(SMatrix, CycleDecomposition) {
  EXPECT_TRUE(cycle_decompose(SMatrix(3)).empty());
  auto cycles = cycle_decompose(SMatrix::cycle(3, {1, 2, 3}));
  ASSERT_EQ(cycles.size(), 1u);
  EXPECT_EQ(cycles[0], (std::vector<int>{1, 2, 3}));
  Rng rng(75);
  for (int t = 0; t < 200; ++t) {
    const int m = 2 + static_cast<int>(rng() % 4);
    SMatrix s = s_matrix(random_perm(rng, 4, m));
    SMatrix sum(m);
    for (const auto& c : cycle_decompose(s)) {
      std::vector<int> sorted = c;
      std::sort(sorted.begin(), sorted.end());
      EXPECT_EQ(std::adjacent_find(sorted.begin(), sorted.end()), sorted.end());
      sum = sum + SMatrix::cycle(m, c);
    }
    EXPECT_EQ(sum, s);
  }
}

TEST(Nessonov, OnesAndPairs) {
  EXPECT_NEAR(std::abs(nessonov_char(GramSpec::ones(3), SMatrix::cycle(3, {1, 2, 3})) - 1.0), 0.0, 1e-15);
  const std::complex<double> c(0.3, 0.4);
  Eigen::MatrixXcd a(2, 2);
  a << 1.0, c, std::conj(c), 1.0;
  EXPECT_NEAR(std::abs(nessonov_char(GramSpec(a), SMatrix::cycle(2, {1, 2})) - std::norm(c)), 0.0, 1e-15);
}

TEST(Nessonov, MatchesYoungSpherical) {
  Rng rng(76);
  for (int t = 0; t < 200; ++t) {
    const int m = 1 + static_cast<int>(rng() % 3), d = 1 + static_cast<int>(rng() % 3);
    std::vector<Eigen::VectorXcd> xis;
    for (int c = 0; c < m; ++c) xis.push_back(random_unit(rng, d));
    ColoredPerm g = random_perm(rng, 4, m);
    EXPECT_NEAR(std::abs(young_spherical(xis, g) - nessonov_char(GramSpec::of_vectors(xis), s_matrix(g))), 0.0, 1e-12);
  }
}

TEST(Nessonov, OrthogonalVectorsKillMixing) {
  std::vector<Eigen::VectorXcd> xis = {Eigen::VectorXcd::Unit(2, 0), Eigen::VectorXcd::Unit(2, 1)};
  EXPECT_NEAR(std::abs(young_spherical(xis, ColoredPerm(2)) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(young_spherical(xis, P("(1@1 2@2)", 2))), 0.0, 1e-15);
}

TEST(GramSpec, Validation) {
  Eigen::MatrixXcd bad(2, 2);
  bad << 1.0, 2.0, 2.0, 1.0;
  EXPECT_THROW(GramSpec{bad}, std::invalid_argument);
  bad << 2.0, 0.0, 0.0, 1.0;
  EXPECT_THROW(GramSpec{bad}, std::invalid_argument);
  EXPECT_EQ(GramSpec::parse("ones(4)").size(), 4);
  EXPECT_EQ(GramSpec::parse("[[1, [0.5, 0.1]], [[0.5, -0.1], 1]]").size(), 2);
  EXPECT_THROW(GramSpec::parse("[[1, 0.5], [0.4, 1]]"), std::invalid_argument);
}
