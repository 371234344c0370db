#include <algorithm>
#include <numeric>

#include <gtest/gtest.h>

#include "cg4/core.hpp"
#include "cg4/corpus.hpp"
#include "support.hpp"

using namespace cg4;
using cg4::testing::rng;

namespace {

// Elements "1".."5" at indices 0..4.
GroundSet five() { return GroundSet({"1", "2", "3", "4", "5"}); }

RootedTriangle tri(const GroundSet& g, std::initializer_list<const char*> base, const char* root) {
  RootedTriangle t;
  for (const char* l : base) t.base.insert(g.at(l));
  t.root = g.at(root);
  return t;
}

ElementSet set_of(const GroundSet& g, std::initializer_list<const char*> labels) {
  ElementSet s;
  for (const char* l : labels) s.insert(g.at(l));
  return s;
}

ConvexGeometry l8() { return extract_geometry(fixture("l8")); }

}  // namespace

TEST(ElementSet, BasicOperations) {
  ElementSet s{1, 4, 9};
  EXPECT_EQ(s.size(), 3u);
  EXPECT_TRUE(s.contains(4));
  EXPECT_FALSE(s.contains(5));
  EXPECT_EQ(s.without(4), (ElementSet{1, 9}));
  EXPECT_EQ(s.to_vector(), (std::vector<Element>{1, 4, 9}));
  EXPECT_TRUE((ElementSet{1, 9}).subset_of(s));
  EXPECT_EQ(ElementSet::first(64).size(), 64u);
  EXPECT_THROW(ElementSet::first(65), GroundSetTooLarge);
  EXPECT_THROW(s.insert(64), GroundSetTooLarge);
}

TEST(ElementSet, CanonicalOrderIsBySizeThenLexicographic) {
  EXPECT_TRUE(canonical_less(ElementSet{5}, ElementSet{0, 1}));
  EXPECT_TRUE(canonical_less(ElementSet{0, 2}, ElementSet{1, 2}));
  EXPECT_FALSE(canonical_less(ElementSet{1, 2}, ElementSet{1, 2}));
}

TEST(GroundSet, RejectsDuplicateAndEmptyLabels) {
  EXPECT_THROW(GroundSet({"a", "a"}), ParseError);
  EXPECT_THROW(GroundSet({"a", ""}), ParseError);
  const GroundSet g({"a", "b"});
  EXPECT_EQ(g.at("b"), 1u);
  EXPECT_THROW((void)g.at("c"), UnknownElement);
}

TEST(Closure, FreeGeometryClosesNothing) {
  const auto g = extract_geometry(fixture("ngon:4"));
  EXPECT_TRUE(g.triangles().empty());
  const ElementSet a = set_of(g.ground(), {"x1", "x2"});
  EXPECT_EQ(closure(g, a), a);
}

TEST(Closure, L8TriangleAroundY) {
  const auto g = l8();
  const auto& G = g.ground();
  EXPECT_EQ(closure(g, set_of(G, {"c1", "c2", "i"})), set_of(G, {"c1", "c2", "i", "y"}));
}

TEST(Closure, L8FixpointPicksUpBothInnerPoints) {
  const auto g = l8();
  const auto& G = g.ground();
  EXPECT_EQ(closure(g, set_of(G, {"b1", "b2", "c1", "c2"})), set_of(G, {"b1", "b2", "c1", "c2", "x", "y"}));
}

TEST(Closure, RejectsElementsOutsideGround) {
  const auto g = extract_geometry(fixture("ngon:4"));
  EXPECT_THROW(closure(g, ElementSet{7}), UnknownElement);
}

TEST(Dietrich, TwoTriangleChainIsViolation) {
  const auto G = five();
  const std::vector<RootedTriangle> tris{tri(G, {"1", "2", "3"}, "4"), tri(G, {"4", "2", "3"}, "5")};
  const auto w = check_dietrich(G.size(), tris);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->first, tris[0]);
  EXPECT_EQ(w->second, tris[1]);
  EXPECT_THROW(build_geometry(G, tris), DietrichViolation);
}

TEST(Dietrich, ShortcutTriangleRepairsTheChain) {
  const auto G = five();
  const std::vector<RootedTriangle> tris{tri(G, {"1", "2", "3"}, "4"), tri(G, {"4", "2", "3"}, "5"),
                                         tri(G, {"1", "2", "3"}, "5")};
  EXPECT_FALSE(check_dietrich(G.size(), tris).has_value());
}

TEST(Dietrich, L8TrianglesPass) {
  const auto g = l8();
  EXPECT_FALSE(check_dietrich(g.size(), g.triangles()).has_value());
}

TEST(Dietrich, RootInBaseIsHardError) {
  const auto G = five();
  EXPECT_THROW(check_dietrich(G.size(), {RootedTriangle(0, 1, 2, 2)}), MalformedTriangle);
  EXPECT_THROW(build_geometry(G, {RootedTriangle(0, 1, 2, 2)}), MalformedTriangle);
}

TEST(Dietrich, DuplicatesAreDropped) {
  const auto G = five();
  const auto g = build_geometry(G, {RootedTriangle(0, 1, 2, 3), RootedTriangle(2, 1, 0, 3)});
  EXPECT_EQ(g.triangles().size(), 1u);
}

TEST(Dietrich, InvariantUnderRelabeling) {
  auto r = rng(11);
  for (int round = 0; round < 40; ++round) {
    const auto x = cg4::testing::random_config(r, 7);
    auto tris = extract_geometry(x).triangles();
    // Drop one triangle to make violations likely.
    if (!tris.empty()) tris.erase(tris.begin() + static_cast<long>(r() % tris.size()));
    std::vector<Element> perm(x.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), r);
    std::vector<RootedTriangle> moved;
    for (const auto& t : tris) moved.push_back(transported(t, perm));
    EXPECT_EQ(check_dietrich(x.size(), tris).has_value(), check_dietrich(x.size(), moved).has_value());
  }
}

TEST(BuildGeometry, EmptyFamilyIsFree) {
  const auto g = build_geometry(GroundSet::numbered(4), {});
  EXPECT_TRUE(g.triangles().empty());
  EXPECT_EQ(closed_sets(g).size(), 16u);
}

TEST(ClosedSets, TriangleGeometryHasAllSubsets) {
  const auto g = build_geometry(GroundSet::numbered(3), {});
  const auto sets = closed_sets(g);
  ASSERT_EQ(sets.size(), 8u);
  EXPECT_EQ(sets.front(), ElementSet{});
  EXPECT_EQ(sets.back(), ElementSet::first(3));
}

TEST(ClosedSets, OneTriangleLeavesItsBaseOpen) {
  const GroundSet G({"a", "b", "c", "d"});
  const auto g = build_geometry(G, {RootedTriangle(0, 1, 2, 3)});
  const auto sets = closed_sets(g);
  EXPECT_EQ(sets.size(), 15u);
  EXPECT_EQ(std::count(sets.begin(), sets.end(), (ElementSet{0, 1, 2})), 0);
}

TEST(ClosedSets, L8CountMatchesHullOracle) {
  const auto x = fixture("l8");
  const auto g = extract_geometry(x);
  std::size_t expected = 0;
  for (std::uint64_t m = 0; m < (1u << x.size()); ++m) {
    if (cg4::testing::hull_closure(x, ElementSet(m)) == ElementSet(m)) ++expected;
  }
  const auto sets = closed_sets(g);
  EXPECT_EQ(sets.size(), expected);
  EXPECT_TRUE(std::is_sorted(sets.begin(), sets.end(), canonical_less));
}

TEST(ClosedSets, BoundIsEnforced) {
  const auto g = build_geometry(GroundSet::numbered(16), {});
  EXPECT_THROW(closed_sets(g), GroundSetTooLarge);
  EXPECT_THROW(closure_table(g), GroundSetTooLarge);
}

TEST(AntiExchange, FreeGeometryPasses) {
  EXPECT_FALSE(verify_anti_exchange(closure_table(build_geometry(GroundSet::numbered(3), {}))).has_value());
}

TEST(AntiExchange, SymmetricExchangeIsWitnessed) {
  // cl{a} = cl{b} = {a,b} on the ground {a,b}.
  const ClosureTable table(2, {ElementSet{}, ElementSet{0, 1}, ElementSet{0, 1}, ElementSet{0, 1}});
  const auto w = verify_anti_exchange(table);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->closed, ElementSet{});
  EXPECT_EQ(w->x, 0u);
  EXPECT_EQ(w->y, 1u);
}

TEST(AntiExchange, L8ClosurePasses) { EXPECT_FALSE(verify_anti_exchange(closure_table(l8())).has_value()); }

TEST(ClosureTableValidation, RejectsBrokenTables) {
  EXPECT_THROW(ClosureTable(2, {ElementSet{}}), InvalidClosureTable);
  // not extensive
  EXPECT_THROW(ClosureTable(1, {ElementSet{}, ElementSet{}}).validate(), InvalidClosureTable);
  // not idempotent: cl{} = {0}, cl{0} = {0,1}
  EXPECT_THROW(ClosureTable(2, {ElementSet{0}, ElementSet{0, 1}, ElementSet{1}, ElementSet{0, 1}}).validate(),
               InvalidClosureTable);
  // not monotone: cl{0} = {0,2} is not inside cl{0,1} = {0,1}
  std::vector<ElementSet> t(8);
  for (std::uint64_t m = 0; m < 8; ++m) t[m] = ElementSet(m);
  t[1] = ElementSet{0, 2};
  EXPECT_THROW(ClosureTable(3, t).validate(), InvalidClosureTable);
  EXPECT_THROW(verify_anti_exchange(ClosureTable(3, t)), InvalidClosureTable);
}

TEST(Circuits, L8CircuitsAreTheTriangles) {
  const auto g = l8();
  const auto circuits = find_circuits(closure_table(g));
  ASSERT_EQ(circuits.size(), g.triangles().size());
  for (const auto& c : circuits) {
    EXPECT_EQ(c.elements.size(), 4u);
    EXPECT_TRUE(g.has_triangle(c.elements.without(c.root), c.root));
  }
}

TEST(Isomorphism, RelabeledGeometryIsFound) {
  auto r = rng(12);
  for (int round = 0; round < 20; ++round) {
    const auto g = extract_geometry(cg4::testing::random_config(r, 9, 40, 2));
    std::vector<Element> perm(g.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), r);
    std::vector<RootedTriangle> moved;
    for (const auto& t : g.triangles()) moved.push_back(transported(t, perm));
    const auto h = build_geometry(g.ground(), moved);
    EXPECT_TRUE(is_isomorphism(g, h, perm));
    const auto found = find_isomorphism(g, h);
    ASSERT_TRUE(found.has_value());
    EXPECT_TRUE(is_isomorphism(g, h, *found));
  }
}

TEST(Isomorphism, DifferentTriangleCountsAreNotIsomorphic) {
  const auto a = build_geometry(GroundSet::numbered(4), {});
  const auto b = build_geometry(GroundSet::numbered(4), {RootedTriangle(0, 1, 2, 3)});
  EXPECT_FALSE(find_isomorphism(a, b).has_value());
}

// Closure properties over all random geometries of the test pool.
TEST(ClosureProperties, ExtensiveMonotoneIdempotentAgainstOracles) {
  auto r = rng(13);
  for (int round = 0; round < 200; ++round) {
    const std::size_t n = 4 + r() % 9;
    const auto x = cg4::testing::random_config(r, n, 48);
    const auto g = extract_geometry(x);
    for (int s = 0; s < 20; ++s) {
      const ElementSet a = cg4::testing::random_subset(r, n);
      const ElementSet b = a | cg4::testing::random_subset(r, n);
      const ElementSet ca = closure(g, a);
      ASSERT_TRUE(a.subset_of(ca));
      ASSERT_EQ(closure(g, ca), ca);
      ASSERT_TRUE(ca.subset_of(closure(g, b)));
      ASSERT_EQ(ca, cg4::testing::naive_closure(g, a));
      ASSERT_EQ(ca, cg4::testing::hull_closure(x, a));
    }
  }
}

// Anti-exchange and the circuit bijection on every n <= 8 geometry of the pool.
TEST(ClosureProperties, AntiExchangeAndCircuitsOnSmallGeometries) {
  auto r = rng(14);
  for (int round = 0; round < 150; ++round) {
    const std::size_t n = 4 + r() % 5;
    const auto g = extract_geometry(cg4::testing::random_config(r, n, 32));
    const auto table = closure_table(g);
    ASSERT_NO_THROW(table.validate());
    ASSERT_FALSE(verify_anti_exchange(table).has_value());
    auto circuits = find_circuits(table);
    std::vector<RootedTriangle> from_circuits;
    for (const auto& c : circuits) from_circuits.emplace_back(c.elements.without(c.root), c.root);
    ASSERT_EQ(normalized(from_circuits), g.triangles());
  }
}
