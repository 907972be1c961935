#include <gtest/gtest.h>

#include <set>

#include "traincat/bigraph.hpp"
#include "traincat/coset_oracle.hpp"

using namespace traincat;

TEST(Bigraph, LabeledIdentityEdge) {
  BipartiteDiagram d = graph_from_perm(ColoredPerm(3), 1, 1, 1);
  ASSERT_EQ(d.vertices(), 1);
  for (int s = 0; s < 3; ++s) {
    EXPECT_EQ(d.partner(0, s), s);
    EXPECT_EQ(d.plus_color(0, s), s + 1);
    EXPECT_EQ(d.minus_color(0, s), s + 1);
  }
}

TEST(Bigraph, CrossedColors) {
  BipartiteDiagram d = graph_from_perm(parse_cycles("(1@1 1@2)", 3), 1, 1, 1);
  ASSERT_EQ(d.vertices(), 1);
  EXPECT_EQ(d.partner(0, 0), 1);
  EXPECT_EQ(d.partner(0, 1), 0);
  EXPECT_EQ(d.partner(0, 2), 2);
  EXPECT_NE(graph_canon(d), graph_canon(identity_graph(3, 1)));
}

TEST(Bigraph, UnlabeledCodesCountMultigraphs) {
  // Cubic bipartite multigraphs on 1+1 and 2+2 vertices: 1 and 2 classes.
  for (int n : {1, 2}) {
    FiniteDoubleCosets f(PairSpec::wreath(3), n, 0, 0);
    std::set<std::string> codes;
    for (const auto& orbit : f.orbits()) codes.insert(graph_canon(graph_from_perm(orbit.front()[0], 0, 0, n)));
    EXPECT_EQ(static_cast<int>(codes.size()), f.orbit_count());
  }
  EXPECT_EQ(FiniteDoubleCosets(PairSpec::wreath(3), 2, 0, 0).orbit_count(), 2);
}

TEST(Bigraph, ForgetLowersLevels) {
  Rng rng(61);
  for (int t = 0; t < 200; ++t) {
    const int l = 2 + static_cast<int>(t % 3), n = 1 + static_cast<int>(rng() % 4);
    const int a = static_cast<int>(rng() % (n + 1)), b = static_cast<int>(rng() % (n + 1));
    const int a2 = static_cast<int>(rng() % (a + 1)), b2 = static_cast<int>(rng() % (b + 1));
    ColoredPerm g = random_perm(rng, n, l);
    BipartiteDiagram d = graph_from_perm(g, a, b, n);
    EXPECT_EQ(graph_canon(graph_forget(d, a2, b2)), graph_canon(graph_from_perm(g, a2, b2, n)));
    EXPECT_EQ(graph_canon(graph_forget(d, a + 5, b + 5)), graph_canon(d));
  }
}

TEST(Bigraph, CanonIgnoresNumbering) {
  Rng rng(62);
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + static_cast<int>(rng() % 6), a = static_cast<int>(rng() % 3), b = static_cast<int>(rng() % 3);
    BipartiteDiagram d = graph_from_perm(random_perm(rng, std::max({n, a, b}), 3), a, b, std::max({n, a, b}));
    EXPECT_EQ(graph_canon(d.shuffled(rng)), graph_canon(d));
  }
}

TEST(Bigraph, CanonMatchesCosets) {
  Rng rng(63);
  const PairSpec spec = PairSpec::wreath(3);
  for (int t = 0; t < 200; ++t) {
    const int a = static_cast<int>(rng() % 3), b = static_cast<int>(rng() % 3);
    GroupElement g = random_element(rng, spec, 3);
    GroupElement h = multiply(multiply(random_subgroup_element(rng, spec, a, 5), g), random_subgroup_element(rng, spec, b, 5));
    EXPECT_EQ(graph_canon(graph_from_perm(g[0], a, b, 3)), graph_canon(graph_from_perm(h[0], a, b, 5)));
  }
}

TEST(Bigraph, CategoryLaws) {
  Rng rng(64);
  for (int t = 0; t < 200; ++t) {
    int l[4];
    for (int& x : l) x = static_cast<int>(rng() % 4);
    BipartiteDiagram p = graph_from_perm(random_perm(rng, 4, 3), l[0], l[1], 4);
    BipartiteDiagram q = graph_from_perm(random_perm(rng, 4, 3), l[1], l[2], 4);
    BipartiteDiagram r = graph_from_perm(random_perm(rng, 4, 3), l[2], l[3], 4);
    EXPECT_EQ(graph_canon(graph_mul(graph_mul(p, q), r)), graph_canon(graph_mul(p, graph_mul(q, r))));
    EXPECT_EQ(graph_canon(graph_mul(p, identity_graph(3, l[1]))), graph_canon(p));
    EXPECT_EQ(graph_canon(graph_mul(identity_graph(3, l[0]), p)), graph_canon(p));
    EXPECT_EQ(graph_canon(graph_involution(graph_mul(p, q))), graph_canon(graph_mul(graph_involution(q), graph_involution(p))));
  }
}

TEST(Bigraph, JsonRoundTrip) {
  Rng rng(65);
  for (int t = 0; t < 50; ++t) {
    BipartiteDiagram d = graph_from_perm(random_perm(rng, 5, 3), 2, 3, 5);
    EXPECT_EQ(graph_canon(graph_from_json(graph_to_json(d))), graph_canon(d));
  }
  EXPECT_THROW(graph_from_json("[1, 2]"), std::invalid_argument);
  EXPECT_THROW(graph_mul(identity_graph(3, 1), identity_graph(3, 2)), std::invalid_argument);
}
