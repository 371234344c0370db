#pragma once

// Onion layers of a convex geometry and the equivalence of outer elements
// with respect to the inner points.

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "cg4/core.hpp"

namespace cg4 {

// {x ∈ s : x ∉ cl(s \ {x})}. Closure is taken in the whole geometry and
// traced on s.
inline ElementSet extreme_points(const ConvexGeometry& g, ElementSet s) {
  if (s.empty()) throw Error("extreme_points of the empty set");
  if (!s.subset_of(g.all())) throw UnknownElement("set contains elements outside the ground set");
  ElementSet out;
  for (Element x : s) {
    if (!closure(g, s.without(x)).contains(x)) out.insert(x);
  }
  return out;
}

struct LayerDecomposition {
  std::vector<ElementSet> layers;  // outermost first

  // Number of layers; a free geometry has depth 1.
  [[nodiscard]] std::size_t depth() const { return layers.size(); }
  [[nodiscard]] ElementSet outer() const { return layers.empty() ? ElementSet{} : layers.front(); }
  [[nodiscard]] ElementSet inner() const {
    ElementSet rest;
    for (std::size_t i = 1; i < layers.size(); ++i) rest |= layers[i];
    return rest;
  }
  friend bool operator==(const LayerDecomposition&, const LayerDecomposition&) = default;
};

inline LayerDecomposition layer_decomposition(const ConvexGeometry& g) {
  LayerDecomposition d;
  ElementSet rest = g.all();
  while (!rest.empty()) {
    const ElementSet layer = extreme_points(g, rest);
    d.layers.push_back(layer);
    rest = rest - layer;
  }
  return d;
}

// Partition of the outer layer into classes, each class sorted, classes
// ordered by their smallest element.
using Partition = std::vector<ElementSet>;

struct OuterEquivalence {
  ElementSet outer;
  std::map<Element, Partition> per_inner;  // ≡_p for each inner point p
  Partition classes;                       // ≡, the meet of all ≡_p
};

namespace detail {

template <typename Key>
Partition partition_by(ElementSet items, const std::function<Key(Element)>& key) {
  std::map<Key, ElementSet> groups;
  for (Element e : items) groups[key(e)].insert(e);
  Partition out;
  for (auto& [k, cls] : groups) out.push_back(cls);
  std::sort(out.begin(), out.end(), [](ElementSet a, ElementSet b) { return *a.begin() < *b.begin(); });
  return out;
}

}  // namespace detail

// s ≡_p t iff, for all u, v in the outer layer, ({s,u,v},p) is a rooted
// triangle exactly when ({t,u,v},p) is. Degenerate triples are not
// triangles, so this is equality of the sets of outer pairs {u,v} that
// complete s (resp. t) to a triangle around p; two elements sharing such a
// triangle are never equivalent.
inline OuterEquivalence outer_equivalence(const ConvexGeometry& g) {
  const LayerDecomposition d = layer_decomposition(g);
  OuterEquivalence eq;
  eq.outer = d.outer();

  using Signature = std::set<std::uint64_t>;
  std::map<Element, std::map<Element, Signature>> completing;  // p -> s -> pairs
  for (Element p : d.inner()) {
    auto& by_s = completing[p];
    for (Element s : eq.outer) by_s[s];
  }
  for (const auto& t : g.triangles()) {
    if (eq.outer.contains(t.root) || !t.base.subset_of(eq.outer)) continue;
    for (Element s : t.base) completing[t.root][s].insert(t.base.without(s).bits());
  }

  for (const auto& [p, by_s] : completing) {
    eq.per_inner[p] = detail::partition_by<Signature>(
        eq.outer, [&by_s = by_s](Element s) { return by_s.at(s); });
  }
  eq.classes = detail::partition_by<std::vector<Signature>>(eq.outer, [&](Element s) {
    std::vector<Signature> key;
    for (const auto& [p, by_s] : completing) key.push_back(by_s.at(s));
    return key;
  });
  return eq;
}

// No two outer elements equivalent. Depth-1 geometries are never simple:
// with no inner points the whole outer layer is one class.
inline bool is_simple(const ConvexGeometry& g) {
  if (layer_decomposition(g).depth() < 2) return false;
  const auto eq = outer_equivalence(g);
  return std::all_of(eq.classes.begin(), eq.classes.end(), [](ElementSet c) { return c.size() == 1; });
}

}  // namespace cg4
