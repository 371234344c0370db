#pragma once

// Hand-built point configurations with exact rational coordinates: regular
// families, the squares examples, the two eight-point configurations, the
// three-triangle configuration and the series configurations.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cg4/core.hpp"
#include "cg4/layers.hpp"
#include "cg4/ordertype.hpp"
#include "cg4/planar.hpp"

namespace cg4 {

struct FixtureName {
  enum class Kind { kNgon, kSquaresX, kSquaresY, kFilledX, kFilledY, kL8, kL8Prime, kL7, kTri21, kSeries };
  Kind kind = Kind::kL8;
  int n = 0;               // kNgon
  int k = 0;               // kSeries
  std::vector<int> split;  // kSeries, k+1 entries

  [[nodiscard]] int p() const { return std::accumulate(split.begin(), split.end(), 0); }
  friend bool operator==(const FixtureName&, const FixtureName&) = default;
};

inline const std::vector<std::pair<FixtureName::Kind, std::string>>& fixture_keywords() {
  using K = FixtureName::Kind;
  static const std::vector<std::pair<K, std::string>> words{
      {K::kSquaresX, "squares_x"}, {K::kSquaresY, "squares_y"}, {K::kFilledX, "filled_x"}, {K::kFilledY, "filled_y"},
      {K::kL8, "l8"},          {K::kL8Prime, "l8p"},        {K::kL7, "l7"},          {K::kTri21, "tri21"}};
  return words;
}

inline std::string to_string(const FixtureName& f) {
  using K = FixtureName::Kind;
  if (f.kind == K::kNgon) return "ngon:" + std::to_string(f.n);
  if (f.kind == K::kSeries) {
    std::string s = "series:" + std::to_string(f.k) + ":" + std::to_string(f.p()) + ":";
    for (std::size_t i = 0; i < f.split.size(); ++i) s += (i ? "," : "") + std::to_string(f.split[i]);
    return s;
  }
  for (const auto& [kind, word] : fixture_keywords()) {
    if (kind == f.kind) return word;
  }
  return "?";
}

namespace detail {

inline int parse_small_int(std::string_view s, std::string_view whole) {
  if (s.empty() || s.size() > 4 || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw ParseError("bad fixture name: " + std::string(whole));
  }
  return std::stoi(std::string(s));
}

inline std::vector<std::string_view> split_on(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) return parts;
    start = pos + 1;
  }
}

}  // namespace detail

// "ngon:5", "squares_x", "filled_y", "l8", "l8p", "l7", "tri21",
// "series:1:4:1,3" (k, p, split).
inline FixtureName parse_fixture_name(std::string_view text) {
  using K = FixtureName::Kind;
  for (const auto& [kind, word] : fixture_keywords()) {
    if (text == word) return FixtureName{kind, 0, 0, {}};
  }
  const auto parts = detail::split_on(text, ':');
  if (parts[0] == "ngon" && parts.size() == 2) {
    FixtureName f{K::kNgon, detail::parse_small_int(parts[1], text), 0, {}};
    if (f.n < 3 || f.n > static_cast<int>(kMaxElements)) throw ParseError("ngon needs 3..64 vertices");
    return f;
  }
  if (parts[0] == "series" && parts.size() == 4) {
    FixtureName f{K::kSeries, 0, detail::parse_small_int(parts[1], text), {}};
    const int p = detail::parse_small_int(parts[2], text);
    for (auto piece : detail::split_on(parts[3], ',')) f.split.push_back(detail::parse_small_int(piece, text));
    if (f.k < 1 || f.k > 2) throw ParseError("series supports k = 1 or 2");
    if (static_cast<int>(f.split.size()) != f.k + 1) throw ParseError("series split needs k+1 entries");
    if (f.p() != p) throw ParseError("series split must sum to p");
    return f;
  }
  throw ParseError("unknown fixture: " + std::string(text));
}

namespace detail {

// Rational points of the unit circle: t ↦ ((1-t²)/(1+t²), 2t/(1+t²)) sweeps
// the circle anticlockwise from (-1, 0) exclusive through (1, 0) at t = 0.
inline Point on_circle(const Rational& t) {
  const Rational d = 1 + t * t;
  return {(1 - t * t) / d, 2 * t / d};
}

// Near (-1, 0): s ↦ ((s²-1)/(s²+1), 2s/(s²+1)), anticlockwise with s.
inline Point on_circle_west(const Rational& s) {
  const Rational d = s * s + 1;
  return {(s * s - 1) / d, 2 * s / d};
}

// Midpoint of pq pulled towards the origin by the factor 1 - eps.
inline Point inward(const Point& p, const Point& q, const Rational& eps) {
  return {(p.x + q.x) / 2 * (1 - eps), (p.y + q.y) / 2 * (1 - eps)};
}

inline Rational q(long long num, long long den = 1) { return Rational(num, den); }

struct Builder {
  std::vector<std::string> labels;
  std::vector<Point> points;
  void add(std::string label, Point p) {
    labels.push_back(std::move(label));
    points.push_back(std::move(p));
  }
  [[nodiscard]] const Point& at(std::string_view label) const {
    return points[static_cast<std::size_t>(std::find(labels.begin(), labels.end(), label) - labels.begin())];
  }
  PointConfig build() { return PointConfig(std::move(labels), std::move(points)); }
};

// Centred cluster of `count` parameters around t0 with spacing d.
inline std::vector<Rational> cluster(const Rational& t0, int count, const Rational& d) {
  std::vector<Rational> out;
  for (int m = 0; m < count; ++m) out.push_back(t0 + d * Rational(2 * m - (count - 1), 2));
  return out;
}

// Two outer pairs (b, c) on the circle and one inner point near the middle of
// each pair's chord; the gap points are added by the caller.
inline void eight_point_frame(Builder& b, std::string_view suffix) {
  const std::string s(suffix);
  b.add("b1" + s, on_circle(q(-5, 4)));
  b.add("b2" + s, on_circle(q(-4, 5)));
  b.add("c1" + s, on_circle(q(4, 5)));
  b.add("c2" + s, on_circle(q(5, 4)));
}

inline void eight_point_inner(Builder& b, std::string_view suffix) {
  const std::string s(suffix);
  b.add("x" + s, inward(b.at("b1" + s), b.at("b2" + s), q(1, 10)));
  b.add("y" + s, inward(b.at("c1" + s), b.at("c2" + s), q(1, 10)));
}

inline PointConfig squares(bool reflect) {
  Builder b;
  const std::string p = reflect ? "y" : "x";
  const std::vector<std::pair<int, int>> corners{{0, 1}, {1, 1}, {1, 0}, {0, 0}};
  for (std::size_t i = 0; i < corners.size(); ++i) {
    const auto [x, y] = corners[i];
    b.add(p + std::to_string(i + 1), Point(x, reflect ? 1 - y : y));
  }
  return b.build();
}

inline PointConfig filled_squares(bool reflect) {
  Builder b;
  const std::string corner = reflect ? "y" : "x";
  const std::string inside = reflect ? "q" : "p";
  const std::vector<std::pair<int, int>> corners{{0, 20}, {20, 20}, {20, 0}, {0, 0}};
  const std::vector<std::pair<int, int>> fill{{9, 16}, {15, 8}, {16, 12}, {17, 11}, {8, 4}, {13, 3}};
  for (std::size_t i = 0; i < corners.size(); ++i) {
    const auto [x, y] = corners[i];
    b.add(corner + std::to_string(i + 1), Point(x, reflect ? 20 - y : y));
  }
  for (std::size_t i = 0; i < fill.size(); ++i) {
    const auto [x, y] = fill[i];
    b.add(inside + std::to_string(i + 1), Point(x, reflect ? 20 - y : y));
  }
  return b.build();
}

// k = 1: the gap points sit in two clusters near (1, 0) and (-1, 0).
// k = 2: three chords of a triangle-like frame, three clusters in between.
inline PointConfig series(int k, const std::vector<int>& split) {
  Builder b;
  const Rational d = q(1, 25);
  int label = 0;
  auto add_cluster = [&](const std::vector<Rational>& params, bool west) {
    for (const auto& t : params) b.add("p" + std::to_string(++label), west ? on_circle_west(t) : on_circle(t));
  };
  if (k == 1) {
    eight_point_frame(b, "");
    add_cluster(cluster(0, split[0], d), false);
    add_cluster(cluster(0, split[1], d), true);
    eight_point_inner(b, "");
    return b.build();
  }
  b.add("b1", on_circle(3));
  b.add("b2", on_circle(5));
  b.add("c1", on_circle(q(-8, 7)));
  b.add("c2", on_circle(q(-7, 8)));
  b.add("d1", on_circle(q(1, 5)));
  b.add("d2", on_circle(q(1, 3)));
  add_cluster(cluster(1, split[0], d), false);
  add_cluster(cluster(q(-15, 4), split[1], d), false);
  add_cluster(cluster(q(-4, 15), split[2], d), false);
  b.add("x", inward(b.at("b1"), b.at("b2"), q(1, 20)));
  b.add("y", inward(b.at("c1"), b.at("c2"), q(1, 20)));
  b.add("z", inward(b.at("d1"), b.at("d2"), q(1, 20)));
  return b.build();
}

}  // namespace detail

inline PointConfig fixture(const FixtureName& f) {
  using K = FixtureName::Kind;
  using detail::Builder;
  using detail::on_circle;
  using detail::q;
  switch (f.kind) {
    case K::kNgon: {
      if (f.n < 3 || f.n > static_cast<int>(kMaxElements)) throw Error("ngon needs 3..64 vertices");
      // Parameters tan(θ/2) spread over (-n, n); any distinct parameters give
      // a convex polygon.
      Builder b;
      for (int i = 0; i < f.n; ++i) b.add("x" + std::to_string(i + 1), on_circle(q(2 * i - (f.n - 1), 2)));
      return b.build();
    }
    case K::kSquaresX: return detail::squares(false);
    case K::kSquaresY: return detail::squares(true);
    case K::kFilledX: return detail::filled_squares(false);
    case K::kFilledY: return detail::filled_squares(true);
    case K::kL8:
    case K::kL8Prime:
    case K::kL7: {
      const bool prime = f.kind == K::kL8Prime;
      const std::string s = prime ? "'" : "";
      Builder b;
      detail::eight_point_frame(b, s);
      b.add("i" + s, prime ? on_circle(q(1, 8)) : Point(1, 0));
      if (f.kind != K::kL7) b.add("j" + s, prime ? on_circle(q(-1, 8)) : Point(-1, 0));
      detail::eight_point_inner(b, s);
      return b.build();
    }
    case K::kTri21: {
      Builder b;
      b.add("i", on_circle(1));
      b.add("j", on_circle(q(-15, 4)));
      b.add("m", on_circle(q(-4, 15)));
      b.add("b1", on_circle(3));
      b.add("b2", on_circle(5));
      b.add("c1", on_circle(q(-8, 7)));
      b.add("c2", on_circle(q(-7, 8)));
      b.add("d1", on_circle(q(1, 5)));
      b.add("d2", on_circle(q(1, 3)));
      b.add("x", detail::inward(b.at("b1"), b.at("b2"), q(1, 20)));
      b.add("y", detail::inward(b.at("c1"), b.at("c2"), q(1, 20)));
      b.add("z", detail::inward(b.at("d1"), b.at("d2"), q(1, 20)));
      return b.build();
    }
    case K::kSeries: {
      if (f.k < 1 || f.k > 2 || static_cast<int>(f.split.size()) != f.k + 1 ||
          std::any_of(f.split.begin(), f.split.end(), [](int v) { return v < 0; })) {
        throw Error("series needs k in {1, 2} and k+1 non-negative split entries");
      }
      return detail::series(f.k, f.split);
    }
  }
  throw Error("unknown fixture");
}

inline PointConfig fixture(std::string_view name) { return fixture(parse_fixture_name(name)); }

// Every named fixture that is a single configuration, for bulk checks.
inline std::vector<FixtureName> standard_fixtures() {
  std::vector<FixtureName> out;
  for (int n : {3, 4, 5, 6}) out.push_back(FixtureName{FixtureName::Kind::kNgon, n, 0, {}});
  for (const auto& [kind, word] : fixture_keywords()) out.push_back(FixtureName{kind, 0, 0, {}});
  for (int p1 = 0; p1 <= 3; ++p1) out.push_back(FixtureName{FixtureName::Kind::kSeries, 0, 1, {p1, 3 - p1}});
  out.push_back(FixtureName{FixtureName::Kind::kSeries, 0, 2, {2, 1, 1}});
  return out;
}

// Compositions of p into `parts` non-negative entries, lexicographic.
inline std::vector<std::vector<int>> compositions(int p, int parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int left, int slots) {
    if (slots == 1) {
      cur.push_back(left);
      out.push_back(cur);
      cur.pop_back();
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur.push_back(v);
      rec(left - v, slots - 1);
      cur.pop_back();
    }
  };
  rec(p, parts);
  return out;
}

struct SeriesCount {
  int classes = 0;                       // weak-equivalence classes of order types
  std::size_t configurations = 0;        // number of split vectors
  bool geometries_isomorphic = false;    // all induced geometries pairwise isomorphic
  std::vector<std::size_t> class_of;     // per split, index of its class
};

// Weak-equivalence classes among the order types of all series
// configurations with parameters (k, p).
inline SeriesCount series_class_count(int k, int p) {
  if (k < 1 || k > 2 || p <= k || p > 6) throw Error("series counts need 1 <= k <= 2 and k < p <= 6");
  SeriesCount out;
  std::vector<OrderType> reps;
  std::optional<ConvexGeometry> first_geometry;
  out.geometries_isomorphic = true;
  for (const auto& split : compositions(p, k + 1)) {
    const PointConfig x = fixture(FixtureName{FixtureName::Kind::kSeries, 0, k, split});
    const OrderType t = extract_ordertype(x);
    const ConvexGeometry g = extract_geometry(x);
    if (!first_geometry) {
      first_geometry = g;
    } else if (!find_isomorphism(*first_geometry, g)) {
      out.geometries_isomorphic = false;
    }
    std::size_t cls = reps.size();
    for (std::size_t r = 0; r < reps.size(); ++r) {
      if (equivalence(reps[r], t, true)) {
        cls = r;
        break;
      }
    }
    if (cls == reps.size()) reps.push_back(t);
    out.class_of.push_back(cls);
    ++out.configurations;
  }
  out.classes = static_cast<int>(reps.size());
  return out;
}

}  // namespace cg4
