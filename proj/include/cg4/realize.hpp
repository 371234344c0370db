#pragma once

// Realizability machinery for convex 4-geometries with a prescribed clockwise
// order of the outer layer: the carousel and 3-carousel rules, pair
// splitting, the supporting order-type candidate t*, the two reductions
// between geometries and order types, and a brute-force grid search.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cg4/core.hpp"
#include "cg4/layers.hpp"
#include "cg4/ordertype.hpp"
#include "cg4/planar.hpp"

namespace cg4 {

class InvalidOrder : public Error {
 public:
  using Error::Error;
};

// a_1..a_n of the outer layer, read clockwise; indices are taken modulo n.
struct CircularOrder {
  std::vector<Element> elements;

  [[nodiscard]] std::size_t size() const { return elements.size(); }
  [[nodiscard]] Element at(std::size_t i) const { return elements[i % elements.size()]; }
  [[nodiscard]] std::size_t position(Element e) const {
    const auto it = std::find(elements.begin(), elements.end(), e);
    if (it == elements.end()) throw InvalidOrder("element is not on the circular order");
    return static_cast<std::size_t>(it - elements.begin());
  }
  [[nodiscard]] CircularOrder reversed() const {
    CircularOrder r{elements};
    std::reverse(r.elements.begin(), r.elements.end());
    return r;
  }
  // Equal as cyclic sequences (rotation only, no reflection).
  [[nodiscard]] bool same_cycle(const CircularOrder& other) const {
    if (other.size() != size()) return false;
    if (elements.empty()) return true;
    const auto it = std::find(other.elements.begin(), other.elements.end(), elements.front());
    if (it == other.elements.end()) return false;
    const auto shift = static_cast<std::size_t>(it - other.elements.begin());
    for (std::size_t i = 0; i < size(); ++i) {
      if (elements[i] != other.at(i + shift)) return false;
    }
    return true;
  }
  friend bool operator==(const CircularOrder&, const CircularOrder&) = default;
};

inline CircularOrder parse_order(const GroundSet& ground, const std::vector<std::string>& labels) {
  CircularOrder ord;
  for (const auto& l : labels) ord.elements.push_back(ground.at(l));
  return ord;
}

inline void require_outer_order(const ConvexGeometry& g, const CircularOrder& ord) {
  const ElementSet outer = layer_decomposition(g).outer();
  const ElementSet given = ElementSet::from(ord.elements);
  if (given != outer || given.size() != ord.size()) {
    throw InvalidOrder("circular order is not a permutation of the outer layer");
  }
}

struct CarouselWitness {
  Element x = 0;
  Element y = 0;
  int count = 0;
  friend bool operator==(const CarouselWitness&, const CarouselWitness&) = default;
};

// For every inner y and every x != y, exactly one index i with
// x ∉ {a_i, a_{i+1}} has ({x, a_i, a_{i+1}}, y) as a rooted triangle.
inline std::optional<CarouselWitness> check_carousel(const ConvexGeometry& g, const CircularOrder& ord) {
  require_outer_order(g, ord);
  const ElementSet outer = ElementSet::from(ord.elements);
  const std::size_t n = ord.size();
  for (Element y = 0; y < g.size(); ++y) {
    if (outer.contains(y)) continue;
    for (Element x = 0; x < g.size(); ++x) {
      if (x == y) continue;
      int count = 0;
      for (std::size_t i = 0; i < n; ++i) {
        const Element u = ord.at(i);
        const Element v = ord.at(i + 1);
        if (x == u || x == v || u == v) continue;
        if (g.has_triangle(x, u, v, y)) ++count;
      }
      if (count != 1) return CarouselWitness{x, y, count};
    }
  }
  return std::nullopt;
}

struct ThreeCarouselWitness {
  std::array<Element, 3> base{};
  Element x = 0;
  Element y = 0;
  int count = 0;
  friend bool operator==(const ThreeCarouselWitness&, const ThreeCarouselWitness&) = default;
};

// For distinct a, b, c, x, y with x, y ∈ cl{a,b,c}, exactly one of
// x ∈ cl{a,b,y}, x ∈ cl{a,c,y}, x ∈ cl{b,c,y}.
inline std::optional<ThreeCarouselWitness> check_3carousel(const ConvexGeometry& g) {
  const auto& tris = g.triangles();
  for (std::size_t i = 0; i < tris.size();) {
    std::size_t j = i;
    std::vector<Element> roots;
    while (j < tris.size() && tris[j].base == tris[i].base) roots.push_back(tris[j++].root);
    const auto k = tris[i].key();
    const Element a = k[0];
    const Element b = k[1];
    const Element c = k[2];
    for (Element x : roots) {
      for (Element y : roots) {
        if (x == y) continue;
        const int count = int(g.has_triangle(a, b, y, x)) + int(g.has_triangle(a, c, y, x)) + int(g.has_triangle(b, c, y, x));
        if (count != 1) return ThreeCarouselWitness{{a, b, c}, x, y, count};
      }
    }
    i = j;
  }
  return std::nullopt;
}

struct PairSplit {
  Element a = 0;
  Element b = 0;
  ElementSet left;   // K: t*(a, b, x) = +1
  ElementSet right;  // K′: t*(a, b, x) = -1
  friend bool operator==(const PairSplit&, const PairSplit&) = default;
};

class SplitAmbiguity : public Error {
 public:
  SplitAmbiguity(Element a, Element b, Element x, bool on_both, const std::string& what)
      : Error(what), a_(a), b_(b), x_(x), on_both_(on_both) {}
  [[nodiscard]] Element a() const { return a_; }
  [[nodiscard]] Element b() const { return b_; }
  [[nodiscard]] Element point() const { return x_; }
  // true when the point landed on both sides, false when on neither.
  [[nodiscard]] bool on_both() const { return on_both_; }

 private:
  Element a_;
  Element b_;
  Element x_;
  bool on_both_;
};

namespace detail {

// a_from, a_from+1, ..., a_to (forward, modulo n).
inline ElementSet arc(const CircularOrder& ord, std::size_t from, std::size_t to) {
  const std::size_t n = ord.size();
  ElementSet s;
  for (std::size_t i = from % n;; i = (i + 1) % n) {
    s.insert(ord.at(i));
    if (i == to % n) break;
  }
  return s;
}

// Index i such that ({x, a_i, a_{i+1}}, y) is a rooted triangle; the
// carousel rule makes it unique.
inline std::size_t fan_index(const ConvexGeometry& g, const CircularOrder& ord, Element x, Element y) {
  for (std::size_t i = 0; i < ord.size(); ++i) {
    const Element u = ord.at(i);
    const Element v = ord.at(i + 1);
    if (x != u && x != v && g.has_triangle(x, u, v, y)) return i;
  }
  throw SplitAmbiguity(x, y, y, false, "no fan triangle around the apex contains the point");
}

inline PairSplit resolve(Element a, Element b, std::size_t n, const std::vector<char>& left,
                         const std::vector<char>& right) {
  PairSplit s{a, b, {}, {}};
  for (Element x = 0; x < n; ++x) {
    if (x == a || x == b) continue;
    if (left[x] && right[x]) throw SplitAmbiguity(a, b, x, true, "point falls on both sides of the pair");
    if (!left[x] && !right[x]) throw SplitAmbiguity(a, b, x, false, "point falls on neither side of the pair");
    (left[x] ? s.left : s.right).insert(x);
  }
  return s;
}

}  // namespace detail

// The bipartition of J ∖ {a, b} into the points left (K) and right (K′) of
// the directed line a→b, derived from the geometry and the clockwise order.
// Assumes both carousel rules hold; a point that the case analysis puts on
// both or neither side raises SplitAmbiguity.
inline PairSplit split_pair(const ConvexGeometry& g, const CircularOrder& ord, Element a, Element b) {
  if (a == b) throw Error("split_pair needs two distinct elements");
  const std::size_t n = g.size();
  const ElementSet outer = ElementSet::from(ord.elements);
  std::vector<char> left(n, 0);
  std::vector<char> right(n, 0);
  auto mark = [&](std::vector<char>& side, ElementSet s) {
    for (Element e : s) side[e] = 1;
  };

  if (outer.contains(a) && outer.contains(b)) {
    const std::size_t i = ord.position(a);
    const std::size_t j = ord.position(b);
    mark(left, closure(g, detail::arc(ord, i, j)));
    mark(right, closure(g, detail::arc(ord, j, i)));
    return detail::resolve(a, b, n, left, right);
  }

  if (!outer.contains(a) && outer.contains(b)) {
    const PairSplit s = split_pair(g, ord, b, a);
    return PairSplit{a, b, s.right, s.left};
  }

  if (outer.contains(a)) {
    // b inner: b lies in the fan triangle (a, a_j, a_{j+1}).
    const std::size_t p = ord.position(a);
    const std::size_t j = detail::fan_index(g, ord, a, b);
    const Element aj = ord.at(j);
    const Element aj1 = ord.at(j + 1);
    mark(left, closure(g, detail::arc(ord, p, j)));
    mark(right, closure(g, detail::arc(ord, j + 1, p)));
    mark(left, g.roots_over(ElementSet{a, aj, b}) | ElementSet{aj});
    mark(right, g.roots_over(ElementSet{a, aj1, b}) | ElementSet{aj1});
    for (Element x : g.roots_over(ElementSet{b, aj, aj1})) {
      if (x == a) continue;
      if (g.has_triangle(x, a, aj1, b)) left[x] = 1;
      if (g.has_triangle(x, a, aj, b)) right[x] = 1;
    }
    return detail::resolve(a, b, n, left, right);
  }

  // Both inner: a lies in the fan triangle (b, a_i, a_{i+1}) and b in
  // (a, a_j, a_{j+1}).
  const std::size_t i = detail::fan_index(g, ord, b, a);
  const std::size_t j = detail::fan_index(g, ord, a, b);
  const Element ai = ord.at(i);
  const Element ai1 = ord.at(i + 1);
  const Element aj = ord.at(j);
  const Element aj1 = ord.at(j + 1);
  mark(left, closure(g, detail::arc(ord, i + 1, j).with(a)));
  mark(right, closure(g, detail::arc(ord, j + 1, i).with(a)));
  mark(left, g.roots_over(ElementSet{b, a, aj}));
  mark(right, g.roots_over(ElementSet{b, aj1, a}));
  for (Element x : g.roots_over(ElementSet{b, aj, aj1})) {
    if (x == a) continue;
    if (g.has_triangle(x, a, aj1, b)) left[x] = 1;
    if (g.has_triangle(x, a, aj, b)) right[x] = 1;
  }
  for (Element x : g.roots_over(ElementSet{a, ai, ai1})) {
    if (x == b) continue;
    if (g.has_triangle(x, b, ai, a)) left[x] = 1;
    if (g.has_triangle(x, b, ai1, a)) right[x] = 1;
  }
  return detail::resolve(a, b, n, left, right);
}

struct TStarFailure {
  enum class Kind { kCarousel, kThreeCarousel, kSplitAmbiguity, kInconsistency };
  Kind kind = Kind::kInconsistency;
  std::vector<Element> elements;  // the offending elements, kind-specific
  int count = 0;
  std::string message;
};

inline std::string kind_name(TStarFailure::Kind k) {
  switch (k) {
    case TStarFailure::Kind::kCarousel: return "carousel_violation";
    case TStarFailure::Kind::kThreeCarousel: return "three_carousel_violation";
    case TStarFailure::Kind::kSplitAmbiguity: return "split_ambiguity";
    case TStarFailure::Kind::kInconsistency: return "inconsistency";
  }
  return "inconsistency";
}

using TStarResult = std::variant<OrderType, TStarFailure>;

// t*(a, b, c) = +1 when c ∈ K(a, b) and -1 when c ∈ K′(a, b). The carousel
// rules are checked first; afterwards every split is checked against its
// reversed pair, all orderings of every triple must agree with one
// alternating sign function, and t* must support the clockwise order.
inline TStarResult construct_t_star(const ConvexGeometry& g, const CircularOrder& ord) {
  using Kind = TStarFailure::Kind;
  if (auto w = check_carousel(g, ord)) {
    return TStarFailure{Kind::kCarousel, {w->x, w->y}, w->count,
                        "carousel rule fails for apex " + g.ground().label(w->x) + " and inner point " +
                            g.ground().label(w->y)};
  }
  if (auto w = check_3carousel(g)) {
    return TStarFailure{Kind::kThreeCarousel, {w->base[0], w->base[1], w->base[2], w->x, w->y}, w->count,
                        "3-carousel rule fails"};
  }
  const std::size_t n = g.size();
  std::vector<PairSplit> splits(n * n);
  try {
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) {
        if (a != b) splits[a * n + b] = split_pair(g, ord, a, b);
      }
    }
  } catch (const SplitAmbiguity& e) {
    return TStarFailure{Kind::kSplitAmbiguity, {e.a(), e.b(), e.point()}, e.on_both() ? 2 : 0, e.what()};
  }
  const auto& lbl = g.ground();
  for (Element a = 0; a < n; ++a) {
    for (Element b = a + 1; b < n; ++b) {
      const auto& ab = splits[a * n + b];
      const auto& ba = splits[b * n + a];
      if (ab.left != ba.right || ab.right != ba.left) {
        return TStarFailure{Kind::kInconsistency, {a, b}, 0,
                            "split of (" + lbl.label(a) + "," + lbl.label(b) + ") disagrees with its reverse"};
      }
    }
  }
  auto sign = [&](Element a, Element b, Element c) { return splits[a * n + b].left.contains(c) ? 1 : -1; };
  std::vector<std::int8_t> signs;
  signs.reserve(triple_count(n));
  std::optional<TStarFailure> failure;
  for_each_canonical_triple(n, [&](Element i, Element j, Element k) {
    const int s = sign(i, j, k);
    signs.push_back(static_cast<std::int8_t>(s));
    if (failure) return;
    if (sign(j, k, i) != s || sign(k, i, j) != s) {
      failure = TStarFailure{Kind::kInconsistency, {i, j, k}, 0,
                             "cyclic rotations of (" + lbl.label(i) + "," + lbl.label(j) + "," + lbl.label(k) +
                                 ") disagree"};
    }
  });
  if (failure) return *failure;
  OrderType t(g.ground(), std::move(signs));
  const std::size_t m = ord.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      for (std::size_t k = j + 1; k < m; ++k) {
        if (t(ord.at(i), ord.at(j), ord.at(k)) != -1) {
          return TStarFailure{Kind::kInconsistency, {ord.at(i), ord.at(j), ord.at(k)}, 0,
                              "t* does not support the clockwise order"};
        }
      }
    }
  }
  return t;
}

class NotQuasiOrderType : public Error {
 public:
  NotQuasiOrderType(std::size_t level, const std::string& what) : Error(what), level_(level) {}
  [[nodiscard]] std::size_t level() const { return level_; }

 private:
  std::size_t level_;
};

class OuterLayerMismatch : public Error {
 public:
  using Error::Error;
};

struct MejInstance {
  ConvexGeometry geometry;
  CircularOrder order;
};

// The geometry of the quasi rooted triangles of t together with its outer
// quasi layer, oriented clockwise.
inline MejInstance reduce_ot_to_mej(const OrderType& t) {
  const auto q = quasi_layer_decomposition(t);
  if (!q.accepted) {
    throw NotQuasiOrderType(*q.failed_level,
                            "quasi-edges do not form a cycle at level " + std::to_string(*q.failed_level));
  }
  ConvexGeometry g = build_geometry(t.ground(), quasi_rooted_triangles(t));
  CircularOrder ord;
  if (!q.layers.empty()) ord.elements = q.layers.front();
  if (layer_decomposition(g).outer() != ElementSet::from(ord.elements)) {
    throw OuterLayerMismatch("outer quasi layer differs from the outer layer of the induced geometry");
  }
  return {std::move(g), std::move(ord)};
}

// true iff extract_geometry(x) = g and the clockwise hull of x is ord up to
// rotation.
inline bool verify_realization(const PointConfig& x, const ConvexGeometry& g, const CircularOrder& ord) {
  if (!(x.ground() == g.ground())) throw Error("configuration labels differ from the geometry's ground set");
  if (!(extract_geometry(x) == g)) return false;
  return CircularOrder{clockwise_hull(x)}.same_cycle(ord);
}

struct SearchOptions {
  int grid = 8;                       // coordinates in a grid × grid box
  std::size_t max_elements = 10;
  std::uint64_t max_nodes = 50'000'000;  // placement attempts before giving up
};

struct SearchResult {
  enum class Status { kFound, kNonRealizable, kExhaustedBudget };
  Status status = Status::kExhaustedBudget;
  std::optional<PointConfig> realization;
  std::optional<CircularOrder> order;
  std::string reason;
  std::uint64_t nodes = 0;
};

inline std::string status_name(SearchResult::Status s) {
  switch (s) {
    case SearchResult::Status::kFound: return "found";
    case SearchResult::Status::kNonRealizable: return "non_realizable";
    case SearchResult::Status::kExhaustedBudget: return "exhausted_budget";
  }
  return "exhausted_budget";
}

namespace detail {

inline int orient(const std::array<long long, 2>& p, const std::array<long long, 2>& q,
                  const std::array<long long, 2>& r) {
  const long long v = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0]);
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

// Integer points realizing exactly the order type t, placed in `sequence`
// order. The first point sits at the origin; all points stay inside a box of
// side grid-1.
inline std::optional<std::vector<std::array<long long, 2>>> place_ordertype(const OrderType& t,
                                                                           const std::vector<Element>& sequence,
                                                                           const SearchOptions& opt,
                                                                           std::uint64_t& nodes) {
  const std::size_t n = t.size();
  const long long span = opt.grid - 1;
  std::vector<std::array<long long, 2>> pos(n);
  std::vector<char> placed(n, 0);
  long long minx = 0, maxx = 0, miny = 0, maxy = 0;
  bool exhausted = false;

  std::function<bool(std::size_t)> extend = [&](std::size_t depth) -> bool {
    if (depth == sequence.size()) return true;
    const Element e = sequence[depth];
    for (long long x = maxx - span; x <= minx + span; ++x) {
      for (long long y = maxy - span; y <= miny + span; ++y) {
        if (++nodes > opt.max_nodes) {
          exhausted = true;
          return false;
        }
        const std::array<long long, 2> p{x, y};
        bool ok = true;
        for (std::size_t u = 0; u < depth && ok; ++u) {
          const Element eu = sequence[u];
          if (pos[eu] == p) ok = false;
          for (std::size_t v = u + 1; v < depth && ok; ++v) {
            const Element ev = sequence[v];
            if (orient(pos[eu], pos[ev], p) != t(eu, ev, e)) ok = false;
          }
        }
        if (!ok) continue;
        const auto saved = std::array<long long, 4>{minx, maxx, miny, maxy};
        pos[e] = p;
        placed[e] = 1;
        minx = std::min(minx, x), maxx = std::max(maxx, x), miny = std::min(miny, y), maxy = std::max(maxy, y);
        if (extend(depth + 1)) return true;
        if (exhausted) return false;
        placed[e] = 0;
        minx = saved[0], maxx = saved[1], miny = saved[2], maxy = saved[3];
      }
    }
    return false;
  };
  pos[sequence[0]] = {0, 0};
  placed[sequence[0]] = 1;
  if (extend(1)) return pos;
  return std::nullopt;
}

inline PointConfig to_config(const GroundSet& ground, const std::vector<std::array<long long, 2>>& pos) {
  std::vector<Point> pts;
  pts.reserve(pos.size());
  for (const auto& p : pos) pts.emplace_back(p[0], p[1]);
  return PointConfig(ground, std::move(pts));
}

}  // namespace detail

// Searches integer placements realizing g with the clockwise order ord (or,
// without an order, with any clockwise order of the outer layer up to
// reflection). Necessary conditions are checked first and a failure is
// reported as non-realizable. Every placement is constrained to match t*
// exactly; the first outer point of the order sits at the origin. An
// exhausted budget proves nothing.
inline SearchResult brute_force_realize(const ConvexGeometry& g, const std::optional<CircularOrder>& ord,
                                        const SearchOptions& opt = {}) {
  if (g.size() > opt.max_elements) throw GroundSetTooLarge(g.size(), opt.max_elements);
  if (opt.grid < 1) throw Error("grid must be positive");
  SearchResult result;
  if (g.size() == 0) {
    result.status = SearchResult::Status::kFound;
    result.realization = PointConfig(g.ground(), {});
    result.order = CircularOrder{};
    return result;
  }
  if (auto w = check_3carousel(g)) {
    result.status = SearchResult::Status::kNonRealizable;
    result.reason = "3-carousel rule fails";
    return result;
  }

  std::vector<CircularOrder> orders;
  if (ord) {
    require_outer_order(g, *ord);
    orders.push_back(*ord);
  } else {
    std::vector<Element> outer = layer_decomposition(g).outer().to_vector();
    // Least element first; the remaining elements in every arrangement, one
    // of each reflected pair.
    std::vector<Element> rest(outer.begin() + 1, outer.end());
    do {
      if (rest.size() >= 2 && rest.front() > rest.back()) continue;
      CircularOrder o;
      o.elements.push_back(outer.front());
      o.elements.insert(o.elements.end(), rest.begin(), rest.end());
      orders.push_back(std::move(o));
    } while (std::next_permutation(rest.begin(), rest.end()));
  }

  bool any_candidate = false;
  std::string last_reason;
  for (const auto& o : orders) {
    const auto star = construct_t_star(g, o);
    if (const auto* f = std::get_if<TStarFailure>(&star)) {
      last_reason = f->message;
      continue;
    }
    const auto& t = std::get<OrderType>(star);
    if (quasi_rooted_triangles(t) != g.triangles()) {
      last_reason = "t* induces a different geometry";
      continue;
    }
    any_candidate = true;
    std::vector<Element> sequence = o.elements;
    {
      const ElementSet outer = ElementSet::from(o.elements);
      for (Element e = 0; e < g.size(); ++e) {
        if (!outer.contains(e)) sequence.push_back(e);
      }
    }
    auto pos = detail::place_ordertype(t, sequence, opt, result.nodes);
    if (pos) {
      PointConfig x = detail::to_config(g.ground(), *pos);
      if (verify_realization(x, g, o)) {
        result.status = SearchResult::Status::kFound;
        result.realization = std::move(x);
        result.order = o;
        return result;
      }
    }
    if (result.nodes > opt.max_nodes) break;
  }
  if (!any_candidate) {
    result.status = SearchResult::Status::kNonRealizable;
    result.reason = ord ? last_reason : "no circular order of the outer layer passes the necessary conditions";
    return result;
  }
  result.status = SearchResult::Status::kExhaustedBudget;
  result.reason = "no realization on a " + std::to_string(opt.grid) + "x" + std::to_string(opt.grid) + " grid";
  return result;
}

struct OtDecision {
  enum class Status { kAccepted, kRefuted, kUndecided };
  Status status = Status::kUndecided;
  std::string reason;
  std::optional<std::array<Element, 3>> differing_triple;
  std::optional<PointConfig> realization;
};

// Decides whether t is an order type through the geometry reduction: t must
// equal the t* of its own geometry and outer order, and a realization must be
// supplied or found. A supplied configuration that does not realize t falls
// back to the search.
inline OtDecision decide_ot_via_mej(const OrderType& t, const std::optional<PointConfig>& realization,
                                    const SearchOptions& opt = {}) {
  OtDecision d;
  MejInstance inst;
  try {
    inst = reduce_ot_to_mej(t);
  } catch (const NotQuasiOrderType& e) {
    d.status = OtDecision::Status::kRefuted;
    d.reason = std::string("not a quasi order type: ") + e.what();
    return d;
  } catch (const DietrichViolation& e) {
    d.status = OtDecision::Status::kRefuted;
    d.reason = std::string("quasi rooted triangles violate Dietrich's axiom: ") + e.what();
    return d;
  } catch (const OuterLayerMismatch& e) {
    d.status = OtDecision::Status::kRefuted;
    d.reason = e.what();
    return d;
  }
  const auto star = construct_t_star(inst.geometry, inst.order);
  if (const auto* f = std::get_if<TStarFailure>(&star)) {
    d.status = OtDecision::Status::kRefuted;
    d.reason = kind_name(f->kind) + ": " + f->message;
    return d;
  }
  const auto& ts = std::get<OrderType>(star);
  std::optional<std::array<Element, 3>> diff;
  for_each_canonical_triple(t.size(), [&](Element i, Element j, Element k) {
    if (!diff && t.canonical(i, j, k) != ts.canonical(i, j, k)) diff = std::array<Element, 3>{i, j, k};
  });
  if (diff) {
    d.status = OtDecision::Status::kRefuted;
    d.differing_triple = diff;
    d.reason = "t differs from t* on (" + t.ground().label((*diff)[0]) + "," + t.ground().label((*diff)[1]) + "," +
               t.ground().label((*diff)[2]) + ")";
    return d;
  }
  if (realization && realization->ground() == t.ground() && extract_ordertype(*realization) == t) {
    d.status = OtDecision::Status::kAccepted;
    d.realization = realization;
    d.reason = "";
    return d;
  }
  if (t.size() > opt.max_elements) {
    d.status = OtDecision::Status::kUndecided;
    d.reason = "t equals t*; no realization supplied and the ground set exceeds the search bound";
    return d;
  }
  const auto found = brute_force_realize(inst.geometry, inst.order, opt);
  if (found.status == SearchResult::Status::kFound && extract_ordertype(*found.realization) == t) {
    d.status = OtDecision::Status::kAccepted;
    d.realization = found.realization;
    return d;
  }
  d.status = OtDecision::Status::kUndecided;
  d.reason = "t equals t*; " + (found.reason.empty() ? std::string("no realization found") : found.reason);
  return d;
}

}  // namespace cg4
