#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "cg4/corpus.hpp"
#include "cg4/ordertype.hpp"
#include "support.hpp"

using namespace cg4;
using cg4::testing::rng;

namespace {

Bijection random_bijection(cg4::testing::Rng& r, std::size_t n) {
  Bijection b = Bijection::identity(n);
  std::shuffle(b.image.begin(), b.image.end(), r);
  return b;
}

// Exhaustive search over all permutations and both signs.
bool equivalent_by_permutations(const OrderType& t1, const OrderType& t2, bool weak) {
  std::vector<Element> p(t1.size());
  std::iota(p.begin(), p.end(), 0);
  do {
    for (int sign : {1, -1}) {
      if (sign == -1 && !weak) continue;
      if (is_equivalence(t1, t2, Equivalence{Bijection{p}, sign})) return true;
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

bool same_cycle(const std::vector<Element>& a, const std::vector<Element>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t shift = 0; shift < a.size(); ++shift) {
    bool ok = true;
    for (std::size_t i = 0; i < a.size() && ok; ++i) ok = a[i] == b[(i + shift) % b.size()];
    if (ok) return true;
  }
  return false;
}

}  // namespace

TEST(TripleIndex, EnumeratesCanonicalTriplesInOrder) {
  std::size_t expected = 0;
  for_each_canonical_triple(9, [&](Element i, Element j, Element k) {
    ASSERT_LT(i, j);
    ASSERT_LT(j, k);
    ASSERT_EQ(triple_index(i, j, k), expected++);
  });
  EXPECT_EQ(expected, triple_count(9));
  EXPECT_EQ(triple_count(2), 0u);
}

TEST(OrderType, EvaluationFollowsSignAxioms) {
  const auto t = extract_ordertype(fixture("l8"));
  const std::size_t n = t.size();
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      for (Element c = 0; c < n; ++c) {
        if (a == b || b == c || a == c) continue;
        ASSERT_EQ(t(a, b, c), t(b, c, a));
        ASSERT_EQ(t(a, b, c), -t(b, a, c));
      }
    }
  }
  EXPECT_THROW((void)t(0, 0, 1), Error);
}

TEST(OrderType, ConstructorValidatesTable) {
  EXPECT_THROW(OrderType(GroundSet::numbered(4), {1, 1, 1}), Error);
  EXPECT_THROW(OrderType(GroundSet::numbered(3), {0}), Error);
  EXPECT_NO_THROW(OrderType(GroundSet::numbered(3), {-1}));
}

TEST(BuildOrderType, AcceptsConsistentTable) {
  std::map<std::array<Element, 3>, int> raw;
  for (auto [a, b, c] : std::vector<std::array<Element, 3>>{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}) {
    raw[{a, b, c}] = 1;
    raw[{b, a, c}] = -1;
  }
  const auto t = build_ordertype(GroundSet::numbered(3), raw);
  EXPECT_EQ(t.canonical(0, 1, 2), 1);
}

TEST(BuildOrderType, RejectsBrokenAndMissingSigns) {
  std::map<std::array<Element, 3>, int> raw;
  for (auto [a, b, c] : std::vector<std::array<Element, 3>>{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}) {
    raw[{a, b, c}] = 1;
    raw[{b, a, c}] = -1;
  }
  auto broken = raw;
  broken[{1, 0, 2}] = 1;
  EXPECT_THROW(build_ordertype(GroundSet::numbered(3), broken), SignAxiomViolation);
  auto missing = raw;
  missing.erase({2, 0, 1});
  EXPECT_THROW(build_ordertype(GroundSet::numbered(3), missing), SignAxiomViolation);
  auto degenerate = raw;
  degenerate[{0, 0, 1}] = 1;
  EXPECT_THROW(build_ordertype(GroundSet::numbered(3), degenerate), Error);
}

TEST(Bijection, InverseAndValidity) {
  const Bijection b{{2, 0, 1}};
  EXPECT_TRUE(b.valid());
  EXPECT_EQ(b.inverse().image, (std::vector<Element>{1, 2, 0}));
  EXPECT_FALSE((Bijection{{0, 0, 1}}).valid());
  const auto t = extract_ordertype(fixture("ngon:5"));
  EXPECT_THROW(relabeled(t, Bijection{{0, 0, 1, 2, 3}}), Error);
}

TEST(QuasiEdges, ConvexPolygonEdges) {
  const auto t = extract_ordertype(fixture("ngon:5"));
  EXPECT_EQ(quasi_edges(t).size(), 5u);
  const auto t8 = extract_ordertype(fixture("l8"));
  EXPECT_EQ(quasi_edges(t8).size(), 6u);
}

TEST(QuasiLayers, L8) {
  const auto x = fixture("l8");
  const auto q = quasi_layer_decomposition(extract_ordertype(x));
  ASSERT_TRUE(q.accepted);
  ASSERT_EQ(q.depth(), 2u);
  const auto& G = x.ground();
  EXPECT_TRUE(same_cycle(q.layers[0], {G.at("b1"), G.at("j"), G.at("c2"), G.at("c1"), G.at("i"), G.at("b2")}));
  EXPECT_EQ(ElementSet::from(q.layers[1]), (ElementSet{G.at("x"), G.at("y")}));
}

TEST(QuasiLayers, RejectsTableWithoutQuasiCycle) {
  // Random sign tables on seven elements mostly lack a quasi cycle.
  auto r = rng(41);
  std::size_t rejected = 0;
  for (int round = 0; round < 200; ++round) {
    std::vector<std::int8_t> signs(triple_count(7));
    for (auto& s : signs) s = (r() & 1) ? 1 : -1;
    const OrderType t(GroundSet::numbered(7), signs);
    const auto q = quasi_layer_decomposition(t);
    if (!q.accepted) {
      ++rejected;
      ASSERT_TRUE(q.failed_level.has_value());
    }
  }
  EXPECT_GT(rejected, 0u);
}

TEST(QuasiLayers, MatchGeometricOnionOnRandomConfigs) {
  auto r = rng(42);
  for (int round = 0; round < 300; ++round) {
    const auto x = cg4::testing::random_config(r, 3 + r() % 20, 64);
    const auto q = quasi_layer_decomposition(extract_ordertype(x));
    const auto onion = geometric_onion(x);
    ASSERT_TRUE(q.accepted);
    ASSERT_EQ(q.depth(), onion.size());
    for (std::size_t i = 0; i < onion.size(); ++i) {
      if (onion[i].size() <= 2) {
        ASSERT_EQ(ElementSet::from(q.layers[i]), ElementSet::from(onion[i]));
      } else {
        ASSERT_TRUE(same_cycle(q.layers[i], onion[i]));
      }
    }
  }
}

TEST(QuasiTriangles, MatchExtractedGeometry) {
  auto r = rng(43);
  for (int round = 0; round < 300; ++round) {
    const auto x = cg4::testing::random_config(r, 3 + r() % 12, 64);
    ASSERT_EQ(quasi_rooted_triangles(extract_ordertype(x)), extract_geometry(x).triangles());
  }
}

TEST(QuasiTriangles, InvariantUnderNegation) {
  const auto t = extract_ordertype(fixture("tri21"));
  EXPECT_EQ(quasi_rooted_triangles(t), quasi_rooted_triangles(t.negated()));
}

TEST(Equivalence, Fixtures) {
  const auto sx = extract_ordertype(fixture("squares_x"));
  const auto sy = extract_ordertype(fixture("squares_y"));
  const auto e = equivalence(sx, sy, false);
  ASSERT_TRUE(e.has_value());
  EXPECT_TRUE(is_equivalence(sx, sy, *e));

  const auto fx = extract_ordertype(fixture("filled_x"));
  const auto fy = extract_ordertype(fixture("filled_y"));
  EXPECT_FALSE(equivalence(fx, fy, false).has_value());
  const auto w = equivalence(fx, fy, true);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->sign, -1);
  EXPECT_TRUE(is_equivalence(fx, fy, *w));

  EXPECT_FALSE(equivalence(extract_ordertype(fixture("l8")), extract_ordertype(fixture("l8p")), true).has_value());
  EXPECT_THROW(equivalence(sx, fx, true), Error);
}

TEST(Equivalence, RelabelingIsFound) {
  auto r = rng(44);
  for (int round = 0; round < 100; ++round) {
    const std::size_t n = 4 + r() % 12;
    const auto t = extract_ordertype(cg4::testing::random_config(r, n, 64));
    const auto delta = random_bijection(r, n);
    const auto t2 = relabeled(t, delta);
    const auto e = equivalence(t, t2, false);
    ASSERT_TRUE(e.has_value());
    ASSERT_TRUE(is_equivalence(t, t2, *e));
    const auto w = equivalence(t, t2.negated(), true);
    ASSERT_TRUE(w.has_value());
    ASSERT_TRUE(is_equivalence(t, t2.negated(), *w));
  }
}

TEST(Equivalence, AgreesWithPermutationOracle) {
  auto r = rng(45);
  std::size_t positive = 0;
  for (int round = 0; round < 150; ++round) {
    const std::size_t n = 4 + r() % 3;
    const auto t1 = extract_ordertype(cg4::testing::random_config(r, n, 8));
    const auto t2 = extract_ordertype(cg4::testing::random_config(r, n, 8));
    for (bool weak : {false, true}) {
      const auto e = equivalence(t1, t2, weak);
      ASSERT_EQ(e.has_value(), equivalent_by_permutations(t1, t2, weak));
      if (e) {
        ASSERT_TRUE(is_equivalence(t1, t2, *e));
        ++positive;
      }
    }
  }
  EXPECT_GT(positive, 0u);
}

TEST(Equivalence, AgreesWithOracleOnArbitrarySignTables) {
  auto r = rng(46);
  for (int round = 0; round < 100; ++round) {
    std::vector<std::int8_t> s1(triple_count(5));
    for (auto& s : s1) s = (r() & 1) ? 1 : -1;
    const OrderType t1(GroundSet::numbered(5), s1);
    const auto t2 = (round % 2) ? relabeled(t1, random_bijection(r, 5)) : OrderType(GroundSet::numbered(5), [&] {
      auto s2 = s1;
      s2[r() % s2.size()] *= -1;
      return s2;
    }());
    for (bool weak : {false, true}) {
      ASSERT_EQ(equivalence(t1, t2, weak).has_value(), equivalent_by_permutations(t1, t2, weak));
    }
  }
}
