#pragma once

// Order types: alternating sign functions on ordered triples of distinct
// elements. Only canonical triples (i < j < k) are stored; every other
// ordering is derived from the permutation parity.

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cg4/core.hpp"
#include "cg4/element_set.hpp"
#include "cg4/error.hpp"

namespace cg4 {

class SignAxiomViolation : public Error {
 public:
  SignAxiomViolation(std::array<Element, 3> first, std::array<Element, 3> second, const std::string& what)
      : Error(what), first_(first), second_(second) {}
  [[nodiscard]] std::array<Element, 3> first() const { return first_; }
  [[nodiscard]] std::array<Element, 3> second() const { return second_; }

 private:
  std::array<Element, 3> first_;
  std::array<Element, 3> second_;
};

// Position of the canonical triple i < j < k in colexicographic order.
inline std::size_t triple_index(std::size_t i, std::size_t j, std::size_t k) {
  return k * (k - 1) * (k - 2) / 6 + j * (j - 1) / 2 + i;
}

inline std::size_t triple_count(std::size_t n) { return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6; }

// Calls f(i, j, k) for every canonical triple in storage order.
template <typename F>
void for_each_canonical_triple(std::size_t n, F&& f) {
  for (std::size_t k = 2; k < n; ++k) {
    for (std::size_t j = 1; j < k; ++j) {
      for (std::size_t i = 0; i < j; ++i) f(static_cast<Element>(i), static_cast<Element>(j), static_cast<Element>(k));
    }
  }
}

class OrderType {
 public:
  OrderType() = default;

  // `signs` lists t(i,j,k) for canonical triples in triple_index order.
  OrderType(GroundSet ground, std::vector<std::int8_t> signs) : ground_(std::move(ground)), signs_(std::move(signs)) {
    if (signs_.size() != triple_count(ground_.size())) {
      throw Error("order type needs " + std::to_string(triple_count(ground_.size())) + " canonical signs, got " +
                  std::to_string(signs_.size()));
    }
    for (auto s : signs_) {
      if (s != 1 && s != -1) throw Error("order type signs must be +1 or -1");
    }
  }

  // Builds the table from a function evaluated on canonical triples.
  template <typename F>
  static OrderType from_function(GroundSet ground, F&& sign_of) {
    std::vector<std::int8_t> signs(triple_count(ground.size()));
    for_each_canonical_triple(ground.size(), [&](Element i, Element j, Element k) {
      signs[triple_index(i, j, k)] = static_cast<std::int8_t>(sign_of(i, j, k));
    });
    return OrderType(std::move(ground), std::move(signs));
  }

  [[nodiscard]] const GroundSet& ground() const { return ground_; }
  [[nodiscard]] std::size_t size() const { return ground_.size(); }
  [[nodiscard]] const std::vector<std::int8_t>& canonical_signs() const { return signs_; }

  [[nodiscard]] int canonical(Element i, Element j, Element k) const { return signs_[triple_index(i, j, k)]; }

  // t(a, b, c) for distinct a, b, c.
  [[nodiscard]] int operator()(Element a, Element b, Element c) const {
    if (a == b || b == c || a == c) throw Error("order type evaluated on a degenerate triple");
    int parity = 1;
    if (a > b) {
      std::swap(a, b);
      parity = -parity;
    }
    if (b > c) {
      std::swap(b, c);
      parity = -parity;
    }
    if (a > b) {
      std::swap(a, b);
      parity = -parity;
    }
    return parity * signs_[triple_index(a, b, c)];
  }

  [[nodiscard]] OrderType negated() const {
    OrderType t = *this;
    for (auto& s : t.signs_) s = static_cast<std::int8_t>(-s);
    return t;
  }

  friend bool operator==(const OrderType& a, const OrderType& b) {
    return a.ground_ == b.ground_ && a.signs_ == b.signs_;
  }

 private:
  GroundSet ground_;
  std::vector<std::int8_t> signs_;
};

// Validates a sign assignment over all ordered triples of distinct elements
// (cyclic invariance and swap antisymmetry) and stores it canonically.
inline OrderType build_ordertype(GroundSet ground, const std::map<std::array<Element, 3>, int>& raw) {
  const std::size_t n = ground.size();
  auto value = [&](Element a, Element b, Element c) {
    auto it = raw.find({a, b, c});
    if (it == raw.end()) {
      throw SignAxiomViolation({a, b, c}, {a, b, c},
                               "missing sign for (" + ground.label(a) + "," + ground.label(b) + "," +
                                   ground.label(c) + ")");
    }
    if (it->second != 1 && it->second != -1) throw Error("order type signs must be +1 or -1");
    return it->second;
  };
  for (const auto& [triple, s] : raw) {
    const auto [a, b, c] = triple;
    if (a >= n || b >= n || c >= n) throw UnknownElement("triple element out of range");
    if (a == b || b == c || a == c) throw Error("order type defined on a degenerate triple");
  }
  auto name = [&](std::array<Element, 3> t) {
    return "(" + ground.label(t[0]) + "," + ground.label(t[1]) + "," + ground.label(t[2]) + ")";
  };
  for_each_canonical_triple(n, [&](Element i, Element j, Element k) {
    const int s = value(i, j, k);
    const std::array<std::array<Element, 3>, 5> others{{{j, k, i}, {k, i, j}, {i, k, j}, {k, j, i}, {j, i, k}}};
    const std::array<int, 5> expected{s, s, -s, -s, -s};
    for (std::size_t m = 0; m < others.size(); ++m) {
      const auto& o = others[m];
      if (value(o[0], o[1], o[2]) != expected[m]) {
        throw SignAxiomViolation({i, j, k}, o, "sign axioms broken between " + name({i, j, k}) + " and " + name(o));
      }
    }
  });
  return OrderType::from_function(std::move(ground), [&](Element i, Element j, Element k) { return value(i, j, k); });
}

// A permutation of a ground set; image[e] is where e goes.
struct Bijection {
  std::vector<Element> image;

  [[nodiscard]] static Bijection identity(std::size_t n) {
    Bijection b;
    for (std::size_t i = 0; i < n; ++i) b.image.push_back(static_cast<Element>(i));
    return b;
  }
  [[nodiscard]] bool valid() const {
    std::vector<char> seen(image.size(), 0);
    for (Element e : image) {
      if (e >= image.size() || seen[e]) return false;
      seen[e] = 1;
    }
    return true;
  }
  [[nodiscard]] Bijection inverse() const {
    Bijection inv;
    inv.image.resize(image.size());
    for (std::size_t i = 0; i < image.size(); ++i) inv.image[image[i]] = static_cast<Element>(i);
    return inv;
  }
  Element operator()(Element e) const { return image.at(e); }
  friend bool operator==(const Bijection&, const Bijection&) = default;
};

// (t ∘ δ̄)(a, b, c) = t(δa, δb, δc), on the same ground set.
inline OrderType relabeled(const OrderType& t, const Bijection& delta) {
  if (delta.image.size() != t.size() || !delta.valid()) throw Error("relabeling is not a bijection of the ground set");
  return OrderType::from_function(t.ground(), [&](Element i, Element j, Element k) {
    return t(delta(i), delta(j), delta(k));
  });
}

// {x, y} is a quasi-edge of t restricted to `members` when t(x, y, z) takes
// one value for all other members z.
inline std::vector<std::pair<Element, Element>> quasi_edges_within(const OrderType& t,
                                                                   const std::vector<Element>& members) {
  std::vector<std::pair<Element, Element>> edges;
  for (std::size_t a = 0; a < members.size(); ++a) {
    for (std::size_t b = a + 1; b < members.size(); ++b) {
      const Element x = members[a];
      const Element y = members[b];
      int seen = 0;
      bool constant = true;
      for (Element z : members) {
        if (z == x || z == y) continue;
        const int s = t(x, y, z);
        if (seen == 0) {
          seen = s;
        } else if (s != seen) {
          constant = false;
          break;
        }
      }
      if (constant) edges.emplace_back(std::min(x, y), std::max(x, y));
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

inline std::vector<std::pair<Element, Element>> quasi_edges(const OrderType& t) {
  if (t.size() < 3) throw Error("quasi-edges need at least 3 elements");
  std::vector<Element> all(t.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Element>(i);
  return quasi_edges_within(t, all);
}

struct QuasiLayerDecomposition {
  // Cycles are listed clockwise: t(a_i, a_{i+1}, z) = -1 for every other
  // member z of the level. A final layer of at most two elements is an
  // unordered terminal set.
  std::vector<std::vector<Element>> layers;
  bool accepted = false;
  std::optional<std::size_t> failed_level;

  [[nodiscard]] std::size_t depth() const { return layers.size(); }
};

// Peels quasi layers: at each level the quasi-edge graph of the remaining
// elements must be a single cycle of length >= 3 on its vertex set; a rest of
// at most two elements is accepted as the innermost layer.
inline QuasiLayerDecomposition quasi_layer_decomposition(const OrderType& t) {
  QuasiLayerDecomposition d;
  std::vector<Element> members(t.size());
  for (std::size_t i = 0; i < members.size(); ++i) members[i] = static_cast<Element>(i);

  while (true) {
    if (members.size() <= 2) {
      if (!members.empty()) d.layers.push_back(members);
      d.accepted = true;
      return d;
    }
    const auto edges = quasi_edges_within(t, members);
    std::map<Element, std::vector<Element>> adjacent;
    for (const auto& [x, y] : edges) {
      adjacent[x].push_back(y);
      adjacent[y].push_back(x);
    }
    const bool two_regular = std::all_of(adjacent.begin(), adjacent.end(), [](const auto& kv) { return kv.second.size() == 2; });
    if (edges.size() < 3 || !two_regular || adjacent.size() != edges.size()) {
      d.failed_level = d.layers.size();
      return d;
    }

    const Element start = adjacent.begin()->first;
    Element next = adjacent[start][0];
    const Element witness = *std::find_if(members.begin(), members.end(), [&](Element z) { return z != start && z != next; });
    if (t(start, next, witness) != -1) next = adjacent[start][1];

    std::vector<Element> cycle{start};
    Element prev = start;
    Element cur = next;
    while (cur != start && cycle.size() <= adjacent.size()) {
      cycle.push_back(cur);
      const auto& nb = adjacent[cur];
      const Element following = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = following;
    }
    if (cycle.size() != adjacent.size()) {  // several disjoint cycles
      d.failed_level = d.layers.size();
      return d;
    }
    std::vector<Element> rest;
    for (Element m : members) {
      if (!adjacent.contains(m)) rest.push_back(m);
    }
    d.layers.push_back(std::move(cycle));
    members = std::move(rest);
  }
}

// All ({a,b,c}, d) with t(a,b,c) = t(d,b,c) = t(a,d,c) = t(a,b,d). O(n^4).
inline std::vector<RootedTriangle> quasi_rooted_triangles(const OrderType& t) {
  const std::size_t n = t.size();
  if (n > kMaxElements) throw GroundSetTooLarge(n, kMaxElements);
  std::vector<RootedTriangle> out;
  for_each_canonical_triple(n, [&](Element a, Element b, Element c) {
    const int s = t.canonical(a, b, c);
    for (Element d = 0; d < n; ++d) {
      if (d == a || d == b || d == c) continue;
      if (t(d, b, c) == s && t(a, d, c) == s && t(a, b, d) == s) out.emplace_back(a, b, c, d);
    }
  });
  std::sort(out.begin(), out.end());
  return out;
}

// Equivalence found by `equivalence`: t2(map a, map b, map c) = sign · t1(a, b, c).
struct Equivalence {
  Bijection map;  // elements of t1 -> elements of t2
  int sign = 1;
};

inline bool is_equivalence(const OrderType& t1, const OrderType& t2, const Equivalence& e) {
  if (t1.size() != t2.size() || e.map.image.size() != t1.size() || !e.map.valid()) return false;
  bool ok = true;
  for_each_canonical_triple(t1.size(), [&](Element i, Element j, Element k) {
    ok = ok && t2(e.map(i), e.map(j), e.map(k)) == e.sign * t1.canonical(i, j, k);
  });
  return ok;
}

namespace detail {

// Per element: how often it is a quasi root and how often it sits in a quasi
// base. Invariant under relabeling and under negation.
inline std::vector<std::pair<int, int>> triangle_counts(const OrderType& t) {
  const std::size_t n = t.size();
  std::vector<std::pair<int, int>> counts(n, {0, 0});
  for_each_canonical_triple(n, [&](Element a, Element b, Element c) {
    const int s = t.canonical(a, b, c);
    for (Element d = 0; d < n; ++d) {
      if (d == a || d == b || d == c) continue;
      if (t(d, b, c) == s && t(a, d, c) == s && t(a, b, d) == s) {
        ++counts[d].first;
        ++counts[a].second;
        ++counts[b].second;
        ++counts[c].second;
      }
    }
  });
  return counts;
}

struct Structure {
  std::vector<std::array<int, 3>> signature;  // (layer, roots, bases)
  std::vector<std::array<Element, 2>> neighbours;  // cycle neighbours, or self
  std::vector<Element> order;                      // layer by layer, along cycles
  bool layered = false;
};

inline Structure structure_of(const OrderType& t, const QuasiLayerDecomposition& q, bool use_layers) {
  const std::size_t n = t.size();
  Structure s;
  s.layered = use_layers;
  const auto counts = triangle_counts(t);
  s.signature.resize(n);
  s.neighbours.resize(n);
  for (std::size_t e = 0; e < n; ++e) {
    s.signature[e] = {-1, counts[e].first, counts[e].second};
    s.neighbours[e] = {static_cast<Element>(e), static_cast<Element>(e)};
  }
  if (use_layers) {
    for (std::size_t level = 0; level < q.layers.size(); ++level) {
      const auto& layer = q.layers[level];
      const bool cycle = layer.size() >= 3;
      for (std::size_t i = 0; i < layer.size(); ++i) {
        s.signature[layer[i]][0] = static_cast<int>(level);
        if (cycle) {
          s.neighbours[layer[i]] = {layer[(i + layer.size() - 1) % layer.size()], layer[(i + 1) % layer.size()]};
        }
        s.order.push_back(layer[i]);
      }
    }
  } else {
    for (std::size_t e = 0; e < n; ++e) s.order.push_back(static_cast<Element>(e));
  }
  return s;
}

}  // namespace detail

// Searches for a bijection G with t2 ∘ Ḡ = t1 (or = ±t1 when weak). When both
// order types decompose into quasi layers, G must carry layers to layers and
// cycle neighbours to cycle neighbours; otherwise plain backtracking. Every
// candidate is pruned by quasi-triangle counts and by checking all triples
// among assigned elements. Exhaustive within that space.
inline std::optional<Equivalence> equivalence(const OrderType& t1, const OrderType& t2, bool weak) {
  const std::size_t n = t1.size();
  if (n != t2.size()) throw Error("equivalence needs order types of equal size");

  const auto q1 = quasi_layer_decomposition(t1);
  const auto q2 = quasi_layer_decomposition(t2);
  bool layered = q1.accepted && q2.accepted && q1.depth() == q2.depth();
  for (std::size_t i = 0; layered && i < q1.depth(); ++i) layered = q1.layers[i].size() == q2.layers[i].size();
  if (q1.accepted != q2.accepted) return std::nullopt;

  const auto s1 = detail::structure_of(t1, q1, layered);
  const auto s2 = detail::structure_of(t2, q2, layered);
  {
    auto a = s1.signature;
    auto b = s2.signature;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }

  std::vector<std::size_t> position(n);
  for (std::size_t i = 0; i < n; ++i) position[s1.order[i]] = i;

  for (int sign : {1, -1}) {
    if (sign == -1 && !weak) break;
    std::vector<Element> image(n, 0);
    std::vector<char> used(n, 0);

    std::function<bool(std::size_t)> extend = [&](std::size_t depth) -> bool {
      if (depth == n) return true;
      const Element e = s1.order[depth];
      for (Element f = 0; f < n; ++f) {
        if (used[f] || s2.signature[f] != s1.signature[e]) continue;
        bool fits = true;
        if (s1.layered) {
          for (Element nb : s1.neighbours[e]) {
            if (nb == e || position[nb] >= depth) continue;
            const auto& fn = s2.neighbours[image[nb]];
            fits = fits && (fn[0] == f || fn[1] == f);
          }
        }
        for (std::size_t u = 0; fits && u < depth; ++u) {
          for (std::size_t v = u + 1; fits && v < depth; ++v) {
            const Element a = s1.order[u];
            const Element b = s1.order[v];
            fits = t2(f, image[a], image[b]) == sign * t1(e, a, b);
          }
        }
        if (!fits) continue;
        image[e] = f;
        used[f] = 1;
        if (extend(depth + 1)) return true;
        used[f] = 0;
      }
      return false;
    };
    if (extend(0)) return Equivalence{Bijection{image}, sign};
  }
  return std::nullopt;
}

}  // namespace cg4
