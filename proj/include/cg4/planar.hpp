#pragma once

// Exact planar predicates over rational coordinates, and extraction of the
// combinatorial objects (convex geometry, order type) of a labelled point
// configuration.

#include <algorithm>
#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "cg4/core.hpp"
#include "cg4/ordertype.hpp"

namespace cg4 {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "p", "-p" or "p/q"; the result is in lowest terms.
inline Rational parse_rational(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    if (s.empty()) throw ParseError("malformed number: '" + std::string(text) + "'");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw ParseError("malformed number: '" + std::string(text) + "'");
    for (std::size_t i = start; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw ParseError("malformed number: '" + std::string(text) + "'");
    }
    return Integer(std::string(s[0] == '+' ? s.substr(1) : s));
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  Integer num = parse_int(text.substr(0, slash));
  Integer den = parse_int(text.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

// "p" for integers, "p/q" otherwise.
inline std::string format_rational(const Rational& r) {
  const Integer num = boost::multiprecision::numerator(r);
  const Integer den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

struct Point {
  Rational x;
  Rational y;

  Point() = default;
  Point(Rational px, Rational py) : x(std::move(px)), y(std::move(py)) {}
  Point(long long px, long long py) : x(px), y(py) {}

  friend bool operator==(const Point&, const Point&) = default;
};

// Sign of the cross product (q - p) x (r - p): +1 anticlockwise, -1
// clockwise, 0 collinear.
inline int orientation(const Point& p, const Point& q, const Point& r) {
  const Rational lhs = (q.x - p.x) * (r.y - p.y);
  const Rational rhs = (q.y - p.y) * (r.x - p.x);
  return lhs > rhs ? 1 : (lhs < rhs ? -1 : 0);
}

struct GeneralPositionVerdict {
  enum class Kind { kOk, kCollinearTriple, kDuplicate };
  Kind kind = Kind::kOk;
  std::array<Element, 3> elements{};  // offending indices; two for kDuplicate

  [[nodiscard]] bool ok() const { return kind == Kind::kOk; }
  friend bool operator==(const GeneralPositionVerdict&, const GeneralPositionVerdict&) = default;
};

// Duplicates are reported before collinear triples; both in lexicographic
// index order.
inline GeneralPositionVerdict check_general_position(const std::vector<Point>& points) {
  using Kind = GeneralPositionVerdict::Kind;
  const auto n = static_cast<Element>(points.size());
  for (Element a = 0; a < n; ++a) {
    for (Element b = a + 1; b < n; ++b) {
      if (points[a] == points[b]) return {Kind::kDuplicate, {a, b, b}};
    }
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = a + 1; b < n; ++b) {
      for (Element c = b + 1; c < n; ++c) {
        if (orientation(points[a], points[b], points[c]) == 0) return {Kind::kCollinearTriple, {a, b, c}};
      }
    }
  }
  return {};
}

class GeneralPositionError : public Error {
 public:
  GeneralPositionError(GeneralPositionVerdict verdict, const std::string& what) : Error(what), verdict_(verdict) {}
  [[nodiscard]] const GeneralPositionVerdict& verdict() const { return verdict_; }

 private:
  GeneralPositionVerdict verdict_;
};

// Strict containment of x in triangle abc: the four orientations
// sign(a,b,c), sign(x,b,c), sign(a,x,c), sign(a,b,x) agree.
inline bool in_triangle(const Point& x, const Point& a, const Point& b, const Point& c) {
  const int s = orientation(a, b, c);
  const std::array<int, 3> others{orientation(x, b, c), orientation(a, x, c), orientation(a, b, x)};
  if (s == 0 || others[0] == 0 || others[1] == 0 || others[2] == 0) {
    throw GeneralPositionError({GeneralPositionVerdict::Kind::kCollinearTriple, {}},
                               "in_triangle needs four points in general position");
  }
  return s == others[0] && s == others[1] && s == others[2];
}

// Labelled points in general position; validated on construction.
class PointConfig {
 public:
  PointConfig() = default;

  PointConfig(GroundSet ground, std::vector<Point> points) : ground_(std::move(ground)), points_(std::move(points)) {
    if (ground_.size() != points_.size()) throw Error("point configuration needs one point per label");
    const auto verdict = check_general_position(points_);
    if (verdict.ok()) return;
    if (verdict.kind == GeneralPositionVerdict::Kind::kDuplicate) {
      throw GeneralPositionError(verdict, "points " + ground_.label(verdict.elements[0]) + " and " +
                                              ground_.label(verdict.elements[1]) + " coincide");
    }
    throw GeneralPositionError(verdict, "points " + ground_.label(verdict.elements[0]) + ", " +
                                            ground_.label(verdict.elements[1]) + ", " +
                                            ground_.label(verdict.elements[2]) + " are collinear");
  }

  PointConfig(std::vector<std::string> labels, std::vector<Point> points)
      : PointConfig(GroundSet(std::move(labels)), std::move(points)) {}

  [[nodiscard]] const GroundSet& ground() const { return ground_; }
  [[nodiscard]] std::size_t size() const { return points_.size(); }
  [[nodiscard]] const std::vector<Point>& points() const { return points_; }
  [[nodiscard]] const Point& point(Element e) const { return points_.at(e); }
  [[nodiscard]] const Point& point(std::string_view label) const { return points_.at(ground_.at(label)); }

  friend bool operator==(const PointConfig& a, const PointConfig& b) {
    return a.ground_ == b.ground_ && a.points_ == b.points_;
  }

 private:
  GroundSet ground_;
  std::vector<Point> points_;
};

// t_f(a, b, c) = sign(f(a), f(b), f(c)).
inline OrderType extract_ordertype(const PointConfig& x) {
  const auto& p = x.points();
  return OrderType::from_function(x.ground(), [&](Element i, Element j, Element k) {
    return orientation(p[i], p[j], p[k]);
  });
}

// All (base, root) with the root strictly inside the base triangle. The
// orientation table is computed once; containment then uses the four-sign
// criterion on it.
inline ConvexGeometry extract_geometry(const PointConfig& x) {
  const std::size_t n = x.size();
  if (n > kMaxElements) throw GroundSetTooLarge(n, kMaxElements);
  const OrderType t = extract_ordertype(x);
  std::vector<RootedTriangle> triangles;
  for_each_canonical_triple(n, [&](Element a, Element b, Element c) {
    const int s = t.canonical(a, b, c);
    for (Element d = 0; d < n; ++d) {
      if (d == a || d == b || d == c) continue;
      if (t(d, b, c) == s && t(a, d, c) == s && t(a, b, d) == s) triangles.emplace_back(a, b, c, d);
    }
  });
  return build_geometry(x.ground(), std::move(triangles));
}

// Hull vertices of the given members, clockwise, starting from the
// lexicographically smallest point (least x, then least y).
inline std::vector<Element> clockwise_hull(const PointConfig& x, std::vector<Element> members) {
  const auto& p = x.points();
  std::sort(members.begin(), members.end(), [&](Element a, Element b) {
    return p[a].x < p[b].x || (p[a].x == p[b].x && p[a].y < p[b].y);
  });
  if (members.size() <= 2) return members;
  // Andrew's monotone chain; keeping right turns yields clockwise chains.
  std::vector<Element> hull;
  for (int pass = 0; pass < 2; ++pass) {
    const std::size_t base = hull.size();
    for (Element e : members) {
      while (hull.size() >= base + 2 && orientation(p[hull[hull.size() - 2]], p[hull.back()], p[e]) >= 0) hull.pop_back();
      hull.push_back(e);
    }
    hull.pop_back();
    std::reverse(members.begin(), members.end());
  }
  return hull;
}

inline std::vector<Element> clockwise_hull(const PointConfig& x) {
  std::vector<Element> all(x.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Element>(i);
  return clockwise_hull(x, std::move(all));
}

// Geometric onion: repeated removal of hull vertices. Each layer is listed
// clockwise as in clockwise_hull.
inline std::vector<std::vector<Element>> geometric_onion(const PointConfig& x) {
  std::vector<Element> rest(x.size());
  for (std::size_t i = 0; i < rest.size(); ++i) rest[i] = static_cast<Element>(i);
  std::vector<std::vector<Element>> layers;
  while (!rest.empty()) {
    auto layer = clockwise_hull(x, rest);
    std::vector<Element> next;
    for (Element e : rest) {
      if (std::find(layer.begin(), layer.end(), e) == layer.end()) next.push_back(e);
    }
    layers.push_back(std::move(layer));
    rest = std::move(next);
  }
  return layers;
}

}  // namespace cg4
