#include <gtest/gtest.h>

#include <regex>

#include "traincat/coset_oracle.hpp"
#include "traincat/surfaces.hpp"
#include "traincat/tensor_oracle.hpp"

using namespace traincat;

namespace {

ColoredPerm P(const char* text) { return parse_cycles(text); }
const ColoredPerm e(1);

int count_matches(const std::string& text, const std::string& pattern) {
  std::regex re(pattern);
  return static_cast<int>(std::distance(std::sregex_iterator(text.begin(), text.end(), re), std::sregex_iterator()));
}

}  // namespace

TEST(Surfaces, LabeledIdentityIsADoubleTriangle) {
  EquippedSurface s = surface_from_tuple({e, e, e}, 1, 1, 1);
  auto comps = components(s);
  ASSERT_EQ(comps.size(), 1u);
  EXPECT_EQ(comps[0].F, 2);
  EXPECT_EQ(comps[0].euler, 2);
  EXPECT_EQ(vertices(s).size(), 3u);
}

TEST(Surfaces, FullyLabeledHasTwoNFaces) {
  Rng rng(41);
  for (int n = 1; n <= 5; ++n) {
    EquippedSurface s = surface_from_tuple(random_element(rng, PairSpec::diagonal(3), n), n, n, n);
    int faces = 0;
    for (const auto& c : components(s)) faces += c.F;
    EXPECT_EQ(faces, 2 * n);
  }
}

TEST(Surfaces, BlueTranspositionExample) {
  EquippedSurface s = surface_from_tuple({e, e, P("(1 2)")}, 0, 0, 2);
  auto comps = components(s);
  ASSERT_EQ(comps.size(), 1u);
  EXPECT_EQ(comps[0].F, 4);
  EXPECT_EQ(comps[0].E, 6);
  EXPECT_EQ(comps[0].V, 4);
  EXPECT_EQ(comps[0].euler, 2);
  EXPECT_EQ(comps[0].genus, 0);
  EXPECT_EQ(vertex_counts_by_color(s), (std::vector<int>{1, 1, 2}));
}

TEST(Surfaces, ComponentsOfIdentityAndLongCycle) {
  for (int n = 1; n <= 5; ++n) {
    EXPECT_EQ(components(surface_from_tuple({e, e, e}, n, n, n)).size(), static_cast<std::size_t>(n));
    std::vector<int> images(n);
    for (int i = 0; i < n; ++i) images[i] = (i + 1) % n + 1;
    if (n > 1) EXPECT_EQ(components(surface_from_tuple({e, e, ColoredPerm::from_images(images)}, 0, 0, n)).size(), 1u);
  }
}

TEST(Surfaces, TupleRoundTrip) {
  Rng rng(42);
  for (int t = 0; t < 300; ++t) {
    const int k = 3 + static_cast<int>(t % 3), n = 1 + static_cast<int>(rng() % 6);
    GroupElement g = random_element(rng, PairSpec::diagonal(k), n);
    EXPECT_EQ(tuple_from_surface(surface_from_tuple(g, n, n, n)), g);
  }
  EXPECT_THROW(tuple_from_surface(surface_from_tuple({e, e, P("(1 2)")}, 0, 0, 2)), std::invalid_argument);
}

TEST(Surfaces, EulerCharacteristicsAreEvenAndAtMostTwo) {
  Rng rng(43);
  for (int t = 0; t < 300; ++t) {
    const int k = 3 + static_cast<int>(t % 4), n = 1 + static_cast<int>(rng() % 7);
    for (const auto& c : components(surface_from_tuple(random_element(rng, PairSpec::diagonal(k), n), 0, 0, n))) {
      EXPECT_LE(c.euler, 2);
      EXPECT_EQ(c.euler % 2, 0);
      EXPECT_EQ(c.euler, 2 - 2 * c.genus);
    }
  }
}

TEST(Surfaces, CanonIgnoresCellNumbering) {
  Rng rng(44);
  for (int t = 0; t < 200; ++t) {
    const int a = static_cast<int>(rng() % 3), b = static_cast<int>(rng() % 3), n = 1 + static_cast<int>(rng() % 6);
    EquippedSurface s = surface_from_tuple(random_element(rng, PairSpec::diagonal(3), std::max({n, a, b})), a, b,
                                           std::max({n, a, b}));
    EXPECT_EQ(surface_canon(EquippedSurface(s.core().shuffled(rng))), surface_canon(s));
  }
}

TEST(Surfaces, CanonSeparatesDifferentCosets) {
  EXPECT_NE(surface_canon(surface_from_tuple({e, e, P("(1 2)")}, 0, 0, 2)),
            surface_canon(surface_from_tuple({e, P("(1 2)"), e}, 0, 0, 2)));
  EXPECT_EQ(surface_canon(surface_from_tuple({e, e, e}, 0, 0, 4)), surface_canon(identity_surface(3, 0)));
}

TEST(Surfaces, IdentityAndDisjointUnion) {
  Rng rng(45);
  const PairSpec spec = PairSpec::diagonal(3);
  for (int t = 0; t < 100; ++t) {
    const int a = static_cast<int>(rng() % 4), b = static_cast<int>(rng() % 4);
    EquippedSurface s = surface_from_tuple(random_element(rng, spec, 5), a, b, 5);
    EXPECT_EQ(surface_canon(surface_mul(s, identity_surface(3, b))), surface_canon(s));
    EXPECT_EQ(surface_canon(surface_mul(identity_surface(3, a), s)), surface_canon(s));
  }
  EquippedSurface s1 = surface_from_tuple({e, e, P("(1 2)")}, 0, 0, 2);
  EquippedSurface s2 = surface_from_tuple({P("(1 2 3)"), e, P("(1 3)")}, 0, 0, 3);
  EXPECT_EQ(components(surface_mul(s1, s2)).size(), components(s1).size() + components(s2).size());
  CoeffTensor xi = CoeffTensor::random(rng, {2, 2, 2});
  EXPECT_NEAR(std::abs(spherical_assignment_sum(surface_mul(s1, s2), xi) -
                       spherical_assignment_sum(s1, xi) * spherical_assignment_sum(s2, xi)),
              0.0, 1e-12);
}

TEST(Surfaces, InvolutionIsAntiMultiplicative) {
  Rng rng(46);
  const PairSpec spec = PairSpec::diagonal(3);
  for (int t = 0; t < 100; ++t) {
    const int a = static_cast<int>(rng() % 4), b = static_cast<int>(rng() % 4), c = static_cast<int>(rng() % 4);
    EquippedSurface x = surface_from_tuple(random_element(rng, spec, 4), a, b, 4);
    EquippedSurface y = surface_from_tuple(random_element(rng, spec, 4), b, c, 4);
    EXPECT_EQ(surface_canon(surface_involution(surface_mul(x, y))),
              surface_canon(surface_mul(surface_involution(y), surface_involution(x))));
    EXPECT_EQ(surface_canon(surface_involution(surface_involution(x))), surface_canon(x));
  }
}

TEST(Surfaces, AssignmentSumBasics) {
  CoeffTensor one{{1, 1, 1}, {1.0}, {}};
  Rng rng(47);
  for (int t = 0; t < 20; ++t) {
    EquippedSurface s = surface_from_tuple(random_element(rng, PairSpec::diagonal(3), 4), 0, 0, 4);
    EXPECT_NEAR(std::abs(spherical_assignment_sum(s, one) - 1.0), 0.0, 1e-14);
  }
  CoeffTensor xi = CoeffTensor::random(rng, {2, 3, 2});
  EXPECT_NEAR(std::abs(spherical_assignment_sum(identity_surface(3, 0), xi) - 1.0), 0.0, 1e-14);
  EXPECT_THROW(spherical_assignment_sum(identity_surface(3, 1), xi), std::invalid_argument);
}

TEST(Surfaces, AssignmentSumMatchesBruteForceAndOracle) {
  Rng rng(48);
  for (int t = 0; t < 60; ++t) {
    const int n = 1 + static_cast<int>(rng() % 3);
    std::vector<int> dims = {1 + static_cast<int>(rng() % 3), 1 + static_cast<int>(rng() % 3),
                             1 + static_cast<int>(rng() % 2)};
    CoeffTensor xi = CoeffTensor::random(rng, dims);
    GroupElement g = random_element(rng, PairSpec::diagonal(3), n);
    EquippedSurface s = surface_from_tuple(g, 0, 0, n);
    auto fast = spherical_assignment_sum(s, xi);
    EXPECT_NEAR(std::abs(fast - spherical_assignment_sum_bruteforce(s, xi)), 0.0, 1e-10);
    EXPECT_NEAR(std::abs(fast - rep_matrix_element(xi, n, g)), 0.0, 1e-10);
  }
}

TEST(Surfaces, SquaresUseFourFactors) {
  Rng rng(49);
  for (int t = 0; t < 20; ++t) {
    CoeffTensor xi = CoeffTensor::random(rng, {2, 1, 2, 2});
    GroupElement g = random_element(rng, PairSpec::diagonal(4), 3);
    EXPECT_NEAR(std::abs(spherical_assignment_sum(surface_from_tuple(g, 0, 0, 3), xi) - rep_matrix_element(xi, 3, g)),
                0.0, 1e-10);
  }
}

TEST(Surfaces, JsonAndDot) {
  Rng rng(50);
  for (int t = 0; t < 50; ++t) {
    EquippedSurface s = surface_from_tuple(random_element(rng, PairSpec::diagonal(3), 4), 1, 2, 4);
    EXPECT_EQ(surface_canon(surface_from_json(surface_to_json(s))), surface_canon(s));
  }
  std::string dot = surface_to_dot(surface_from_tuple({e, e, e}, 1, 1, 1));
  EXPECT_EQ(count_matches(dot, R"(\[shape=)"), 2);
  EXPECT_EQ(count_matches(dot, " -- "), 3);
  dot = surface_to_dot(surface_from_tuple({e, e, P("(1 2)")}, 0, 0, 2));
  EXPECT_EQ(count_matches(dot, R"(\[shape=)"), 4);
  EXPECT_EQ(count_matches(dot, " -- "), 6);
  EXPECT_THROW(surface_from_json("{}"), std::invalid_argument);
}
