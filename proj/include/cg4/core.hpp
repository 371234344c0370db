#pragma once

// Abstract convex 4-geometries: a ground set together with a family of rooted
// triangles (base, root) that satisfies Dietrich's axiom. The closure of a set
// Y adds every root whose base lies inside Y; under the axiom one round of
// this rule is already idempotent and the result is an anti-exchange closure
// whose circuits are exactly base ∪ {root}.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cg4/element_set.hpp"
#include "cg4/error.hpp"

namespace cg4 {

struct RootedTriangle {
  ElementSet base;
  Element root = 0;

  RootedTriangle() = default;
  RootedTriangle(ElementSet b, Element r) : base(b), root(r) {}
  RootedTriangle(Element a, Element b, Element c, Element r) : base{a, b, c}, root(r) {}

  // Sorted base elements followed by the root; defines the canonical order.
  [[nodiscard]] std::array<Element, 4> key() const {
    std::array<Element, 4> k{};
    std::size_t i = 0;
    for (Element e : base) {
      if (i < 3) k[i] = e;
      ++i;
    }
    k[3] = root;
    return k;
  }

  friend bool operator==(const RootedTriangle& a, const RootedTriangle& b) {
    return a.base == b.base && a.root == b.root;
  }
  friend bool operator<(const RootedTriangle& a, const RootedTriangle& b) { return a.key() < b.key(); }
};

// Throws MalformedTriangle unless every triangle has a 3-element base inside
// {0..n-1} and a root in range and outside the base.
inline void validate_triangles(std::size_t n, const std::vector<RootedTriangle>& triangles) {
  const ElementSet ground = ElementSet::first(n);
  for (const auto& t : triangles) {
    if (t.base.size() != 3) throw MalformedTriangle("triangle base must have exactly 3 elements");
    if (!t.base.subset_of(ground) || t.root >= n) throw UnknownElement("triangle element out of range");
    if (t.base.contains(t.root)) {
      throw MalformedTriangle("triangle root " + std::to_string(t.root) + " lies in its own base");
    }
  }
}

inline std::vector<RootedTriangle> normalized(std::vector<RootedTriangle> triangles) {
  std::sort(triangles.begin(), triangles.end());
  triangles.erase(std::unique(triangles.begin(), triangles.end()), triangles.end());
  return triangles;
}

// Two triangles (T1, a), (T2, b) with a ∈ T2 for which no (T3, b) with
// T3 ⊆ (T1 ∪ T2) \ {a, b} exists.
struct DietrichWitness {
  RootedTriangle first;
  RootedTriangle second;
  friend bool operator==(const DietrichWitness&, const DietrichWitness&) = default;
};

// Returns nullopt when Dietrich's axiom holds; otherwise the first violating
// ordered pair in the canonical order of the deduplicated triangle list.
inline std::optional<DietrichWitness> check_dietrich(std::size_t n, std::vector<RootedTriangle> triangles) {
  validate_triangles(n, triangles);
  triangles = normalized(std::move(triangles));

  std::vector<std::vector<ElementSet>> bases_by_root(n);
  for (const auto& t : triangles) bases_by_root[t.root].push_back(t.base);

  for (const auto& t1 : triangles) {
    const Element a = t1.root;
    for (const auto& t2 : triangles) {
      if (!t2.base.contains(a)) continue;
      const Element b = t2.root;
      const ElementSet room = (t1.base | t2.base).without(a).without(b);
      const auto& candidates = bases_by_root[b];
      const bool shifted = std::any_of(candidates.begin(), candidates.end(),
                                       [room](ElementSet base) { return base.subset_of(room); });
      if (!shifted) return DietrichWitness{t1, t2};
    }
  }
  return std::nullopt;
}

class DietrichViolation : public Error {
 public:
  DietrichViolation(DietrichWitness witness, const std::string& what)
      : Error(what), witness_(witness) {}
  [[nodiscard]] const DietrichWitness& witness() const { return witness_; }

 private:
  DietrichWitness witness_;
};

inline std::string describe(const GroundSet& ground, const RootedTriangle& t) {
  std::string out = "({";
  bool first = true;
  for (Element e : t.base) {
    if (!first) out += ",";
    out += ground.label(e);
    first = false;
  }
  return out + "}," + ground.label(t.root) + ")";
}

class ConvexGeometry {
 public:
  ConvexGeometry() = default;

  [[nodiscard]] const GroundSet& ground() const { return ground_; }
  [[nodiscard]] std::size_t size() const { return ground_.size(); }
  [[nodiscard]] ElementSet all() const { return ground_.all(); }

  // Deduplicated, sorted by RootedTriangle::key().
  [[nodiscard]] const std::vector<RootedTriangle>& triangles() const { return triangles_; }

  [[nodiscard]] bool has_triangle(ElementSet base, Element root) const {
    return std::binary_search(triangles_.begin(), triangles_.end(), RootedTriangle(base, root));
  }
  [[nodiscard]] bool has_triangle(Element a, Element b, Element c, Element root) const {
    return has_triangle(ElementSet{a, b, c}, root);
  }

  // Roots of every triangle whose base is exactly `base`.
  [[nodiscard]] ElementSet roots_over(ElementSet base) const {
    ElementSet roots;
    auto lo = std::lower_bound(triangles_.begin(), triangles_.end(), RootedTriangle(base, 0));
    for (; lo != triangles_.end() && lo->base == base; ++lo) roots.insert(lo->root);
    return roots;
  }

  friend bool operator==(const ConvexGeometry& a, const ConvexGeometry& b) {
    return a.ground_ == b.ground_ && a.triangles_ == b.triangles_;
  }

  friend ConvexGeometry build_geometry(GroundSet ground, std::vector<RootedTriangle> triangles);

 private:
  GroundSet ground_;
  std::vector<RootedTriangle> triangles_;
};

// Validates the triangle family against Dietrich's axiom; throws
// DietrichViolation carrying the first witness.
inline ConvexGeometry build_geometry(GroundSet ground, std::vector<RootedTriangle> triangles) {
  if (ground.size() > kMaxElements) throw GroundSetTooLarge(ground.size(), kMaxElements);
  if (auto witness = check_dietrich(ground.size(), triangles)) {
    throw DietrichViolation(*witness, "Dietrich's axiom fails for " + describe(ground, witness->first) +
                                          " and " + describe(ground, witness->second));
  }
  ConvexGeometry g;
  g.ground_ = std::move(ground);
  g.triangles_ = normalized(std::move(triangles));
  return g;
}

// Least fixpoint of Y -> Y ∪ {root | base ⊆ Y} containing `a`.
// O(|triangles| · n) per call.
inline ElementSet closure(const ConvexGeometry& g, ElementSet a) {
  if (!a.subset_of(g.all())) throw UnknownElement("set contains elements outside the ground set");
  ElementSet y = a;
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& t : g.triangles()) {
      if (!y.contains(t.root) && t.base.subset_of(y)) {
        y.insert(t.root);
        changed = true;
      }
    }
  }
  return y;
}

inline constexpr std::size_t kDefaultEnumerationBound = 15;

// Every closed set, in canonical_less order.
inline std::vector<ElementSet> closed_sets(const ConvexGeometry& g,
                                           std::size_t bound = kDefaultEnumerationBound) {
  const std::size_t n = g.size();
  if (n > bound) throw GroundSetTooLarge(n, bound);
  std::vector<ElementSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const ElementSet a(mask);
    if (closure(g, a) == a) out.push_back(a);
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

class InvalidClosureTable : public Error {
 public:
  using Error::Error;
};

// Closure of every subset of a small ground set, indexed by subset bitmask.
class ClosureTable {
 public:
  ClosureTable(std::size_t n, std::vector<ElementSet> closure_of)
      : n_(n), closure_of_(std::move(closure_of)) {
    if (n > kDefaultEnumerationBound) throw GroundSetTooLarge(n, kDefaultEnumerationBound);
    if (closure_of_.size() != (std::size_t{1} << n)) {
      throw InvalidClosureTable("closure table must list all 2^n subsets");
    }
  }

  [[nodiscard]] std::size_t size() const { return n_; }
  [[nodiscard]] ElementSet operator()(ElementSet a) const { return closure_of_.at(a.bits()); }

  // Throws InvalidClosureTable unless the table is extensive, monotone and
  // idempotent. Monotonicity is checked on single-element extensions, which
  // suffices because every inclusion is a chain of those.
  void validate() const {
    const ElementSet ground = ElementSet::first(n_);
    for (std::uint64_t mask = 0; mask < closure_of_.size(); ++mask) {
      const ElementSet a(mask);
      const ElementSet ca = closure_of_[mask];
      if (!ca.subset_of(ground)) throw InvalidClosureTable("closure leaves the ground set");
      if (!a.subset_of(ca)) throw InvalidClosureTable("closure is not extensive");
      if (closure_of_[ca.bits()] != ca) throw InvalidClosureTable("closure is not idempotent");
      for (Element x : ground - a) {
        if (!ca.subset_of(closure_of_[a.with(x).bits()])) {
          throw InvalidClosureTable("closure is not monotone");
        }
      }
    }
  }

 private:
  std::size_t n_;
  std::vector<ElementSet> closure_of_;
};

inline ClosureTable closure_table(const ConvexGeometry& g, std::size_t bound = kDefaultEnumerationBound) {
  const std::size_t n = g.size();
  if (n > bound) throw GroundSetTooLarge(n, bound);
  std::vector<ElementSet> table(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < table.size(); ++mask) table[mask] = closure(g, ElementSet(mask));
  return ClosureTable(n, std::move(table));
}

struct AntiExchangeWitness {
  ElementSet closed;
  Element x = 0;
  Element y = 0;
  friend bool operator==(const AntiExchangeWitness&, const AntiExchangeWitness&) = default;
};

// Brute-force anti-exchange check over all closed sets A and x < y outside A.
inline std::optional<AntiExchangeWitness> verify_anti_exchange(const ClosureTable& table) {
  table.validate();
  const ElementSet ground = ElementSet::first(table.size());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << table.size()); ++mask) {
    const ElementSet a(mask);
    if (table(a) != a) continue;
    const ElementSet outside = ground - a;
    for (Element x : outside) {
      for (Element y : outside) {
        if (y <= x) continue;
        if (table(a.with(y)).contains(x) && table(a.with(x)).contains(y)) return AntiExchangeWitness{a, x, y};
      }
    }
  }
  return std::nullopt;
}

struct Circuit {
  ElementSet elements;
  Element root = 0;
  friend bool operator==(const Circuit&, const Circuit&) = default;
};

// Inclusion-minimal dependent sets of a closure table, each with the element
// that lies in the closure of the rest. Dependence is upward closed, so a
// dependent set is minimal iff no single-element deletion stays dependent.
inline std::vector<Circuit> find_circuits(const ClosureTable& table) {
  const std::size_t count = std::size_t{1} << table.size();
  std::vector<char> dependent(count, 0);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    const ElementSet d(mask);
    for (Element x : d) {
      if (table(d.without(x)).contains(x)) {
        dependent[mask] = 1;
        break;
      }
    }
  }
  std::vector<Circuit> out;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    if (!dependent[mask]) continue;
    const ElementSet c(mask);
    bool minimal = true;
    for (Element x : c) minimal = minimal && !dependent[c.without(x).bits()];
    if (!minimal) continue;
    for (Element x : c) {
      if (table(c.without(x)).contains(x)) out.push_back(Circuit{c, x});
    }
  }
  return out;
}

// Applies `image` (element -> element) to a triangle.
inline RootedTriangle transported(const RootedTriangle& t, const std::vector<Element>& image) {
  ElementSet base;
  for (Element e : t.base) base.insert(image.at(e));
  return RootedTriangle(base, image.at(t.root));
}

// True iff `image` is a bijection carrying the triangles of `from` exactly
// onto the triangles of `to`.
inline bool is_isomorphism(const ConvexGeometry& from, const ConvexGeometry& to,
                           const std::vector<Element>& image) {
  if (from.size() != to.size() || image.size() != from.size()) return false;
  if (from.triangles().size() != to.triangles().size()) return false;
  ElementSet seen;
  for (Element e : image) {
    if (e >= to.size() || seen.contains(e)) return false;
    seen.insert(e);
  }
  return std::all_of(from.triangles().begin(), from.triangles().end(), [&](const RootedTriangle& t) {
    const RootedTriangle u = transported(t, image);
    return to.has_triangle(u.base, u.root);
  });
}

// Backtracking search for a triangle-preserving bijection from `a` to `b`,
// pruned by per-element (root count, base count) signatures.
inline std::optional<std::vector<Element>> find_isomorphism(const ConvexGeometry& a, const ConvexGeometry& b) {
  const std::size_t n = a.size();
  if (n != b.size() || a.triangles().size() != b.triangles().size()) return std::nullopt;

  auto signatures = [n](const ConvexGeometry& g) {
    std::vector<std::pair<int, int>> sig(n, {0, 0});
    for (const auto& t : g.triangles()) {
      ++sig[t.root].first;
      for (Element e : t.base) ++sig[e].second;
    }
    return sig;
  };
  const auto sig_a = signatures(a);
  const auto sig_b = signatures(b);

  // Triangles of `a` indexed by the element assigned last among their four.
  std::vector<Element> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<Element>(i);
  std::stable_sort(order.begin(), order.end(), [&](Element x, Element y) { return sig_a[x] > sig_a[y]; });
  std::vector<std::size_t> position(n);
  for (std::size_t i = 0; i < n; ++i) position[order[i]] = i;
  std::vector<std::vector<RootedTriangle>> closing(n);
  for (const auto& t : a.triangles()) {
    Element last = t.root;
    for (Element e : t.base) {
      if (position[e] > position[last]) last = e;
    }
    closing[position[last]].push_back(t);
  }

  std::vector<Element> image(n, 0);
  ElementSet used;
  std::function<bool(std::size_t)> extend = [&](std::size_t depth) -> bool {
    if (depth == n) return true;
    const Element e = order[depth];
    for (Element f = 0; f < n; ++f) {
      if (used.contains(f) || sig_b[f] != sig_a[e]) continue;
      image[e] = f;
      const bool fits = std::all_of(closing[depth].begin(), closing[depth].end(), [&](const RootedTriangle& t) {
        const RootedTriangle u = transported(t, image);
        return b.has_triangle(u.base, u.root);
      });
      if (!fits) continue;
      used.insert(f);
      if (extend(depth + 1)) return true;
      used.erase(f);
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return image;
}

}  // namespace cg4
