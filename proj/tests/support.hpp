#pragma once

// Shared helpers for the test suites: the seed, random configurations and
// independent oracles that do not go through the library's predicates.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cg4/core.hpp"
#include "cg4/planar.hpp"

namespace cg4::testing {

// Seed for randomized suites: --seed=N on the test command line, else the
// CG4_SEED environment variable, else a fixed default.
std::uint64_t seed();
void set_seed(std::uint64_t s);

using Rng = std::mt19937_64;

inline Rng rng(std::uint64_t salt) { return Rng(seed() * 0x9E3779B97F4A7C15ULL + salt); }

inline long long orient_ll(const std::array<long long, 2>& p, const std::array<long long, 2>& q,
                           const std::array<long long, 2>& r) {
  return (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0]);
}

// n distinct integer points in general position drawn from [0, side)^2,
// labelled "0".."n-1". With min_inner > 0, draws until at least that many
// points are off the convex hull.
inline PointConfig random_config(Rng& g, std::size_t n, long long side = 64, std::size_t min_inner = 0) {
  std::uniform_int_distribution<long long> coord(0, side - 1);
  while (true) {
    std::vector<std::array<long long, 2>> pts;
    std::size_t attempts = 0;
    while (pts.size() < n && attempts < 100000) {
      ++attempts;
      const std::array<long long, 2> p{coord(g), coord(g)};
      bool ok = true;
      for (std::size_t i = 0; i < pts.size() && ok; ++i) {
        if (pts[i] == p) ok = false;
        for (std::size_t j = i + 1; j < pts.size() && ok; ++j) {
          if (orient_ll(pts[i], pts[j], p) == 0) ok = false;
        }
      }
      if (ok) pts.push_back(p);
    }
    if (pts.size() < n) continue;
    std::vector<Point> points;
    for (const auto& p : pts) points.emplace_back(p[0], p[1]);
    PointConfig x(GroundSet::numbered(n), std::move(points));
    if (min_inner > 0 && n - clockwise_hull(x).size() < min_inner) continue;
    return x;
  }
}

inline Rational random_rational(Rng& g, long long range = 1000, long long den_range = 50) {
  std::uniform_int_distribution<long long> num(-range, range);
  std::uniform_int_distribution<long long> den(1, den_range);
  return Rational(num(g), den(g));
}

// Strict containment by barycentric coordinates: all three weights positive.
inline bool barycentric_inside(const Point& x, const Point& a, const Point& b, const Point& c) {
  const Rational det = (b.y - c.y) * (a.x - c.x) + (c.x - b.x) * (a.y - c.y);
  const Rational l1 = ((b.y - c.y) * (x.x - c.x) + (c.x - b.x) * (x.y - c.y)) / det;
  const Rational l2 = ((c.y - a.y) * (x.x - c.x) + (a.x - c.x) * (x.y - c.y)) / det;
  const Rational l3 = 1 - l1 - l2;
  return l1 > 0 && l2 > 0 && l3 > 0;
}

// Points strictly left / right of the directed line a→b via the implicit
// line equation n·(x - a) with normal n = (-(b.y - a.y), b.x - a.x).
inline std::pair<ElementSet, ElementSet> halfplane_split(const PointConfig& x, Element a, Element b) {
  const Point& pa = x.point(a);
  const Point& pb = x.point(b);
  const Rational nx = -(pb.y - pa.y);
  const Rational ny = pb.x - pa.x;
  ElementSet left, right;
  for (Element e = 0; e < x.size(); ++e) {
    if (e == a || e == b) continue;
    const Rational v = nx * (x.point(e).x - pa.x) + ny * (x.point(e).y - pa.y);
    (v > 0 ? left : right).insert(e);
  }
  return {left, right};
}

// Convex-hull closure of a point set: a itself plus every point inside some
// triangle of a.
inline ElementSet hull_closure(const PointConfig& x, ElementSet a) {
  ElementSet out = a;
  const auto v = a.to_vector();
  for (Element p = 0; p < x.size(); ++p) {
    if (a.contains(p)) continue;
    for (std::size_t i = 0; i < v.size() && !out.contains(p); ++i) {
      for (std::size_t j = i + 1; j < v.size() && !out.contains(p); ++j) {
        for (std::size_t k = j + 1; k < v.size() && !out.contains(p); ++k) {
          if (barycentric_inside(x.point(p), x.point(v[i]), x.point(v[j]), x.point(v[k]))) out.insert(p);
        }
      }
    }
  }
  return out;
}

// Closure by naive iteration over all triangles until nothing changes.
inline ElementSet naive_closure(const ConvexGeometry& g, ElementSet a) {
  while (true) {
    ElementSet next = a;
    for (const auto& t : g.triangles()) {
      if (t.base.subset_of(a)) next.insert(t.root);
    }
    if (next == a) return a;
    a = next;
  }
}

inline ElementSet random_subset(Rng& g, std::size_t n) {
  std::uniform_int_distribution<std::uint64_t> bits;
  return ElementSet(bits(g)) & ElementSet::first(n);
}

}  // namespace cg4::testing
