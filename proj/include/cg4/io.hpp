#pragma once

// JSON encodings of geometries, point configurations, order types and the
// derived structures. Every loader validates its input and throws ParseError
// (or the domain error of the object being built) on malformed data.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cg4/core.hpp"
#include "cg4/layers.hpp"
#include "cg4/ordertype.hpp"
#include "cg4/planar.hpp"
#include "cg4/realize.hpp"

namespace cg4 {

using Json = nlohmann::ordered_json;

namespace detail {

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

inline std::vector<std::string> string_list(const Json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of strings");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw ParseError(std::string(what) + " must be an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

inline Rational coordinate(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw ParseError("coordinates must be integers or \"p/q\" strings");
}

}  // namespace detail

inline Json labels_json(const GroundSet& ground, ElementSet s) { return Json(ground.labels_of(s)); }

inline Json labels_json(const GroundSet& ground, const std::vector<Element>& v) {
  Json out = Json::array();
  for (Element e : v) out.push_back(ground.label(e));
  return out;
}

inline Json triangle_json(const GroundSet& ground, const RootedTriangle& t) {
  return Json{{"base", labels_json(ground, t.base)}, {"root", ground.label(t.root)}};
}

inline Json to_json(const ConvexGeometry& g) {
  Json tris = Json::array();
  for (const auto& t : g.triangles()) tris.push_back(triangle_json(g.ground(), t));
  return Json{{"elements", g.ground().labels()}, {"triangles", tris}};
}

// Raw ground set and triangles, before the axiom check.
inline std::pair<GroundSet, std::vector<RootedTriangle>> triangles_from_json(const Json& j) {
  GroundSet ground(detail::string_list(detail::field(j, "elements"), "elements"));
  if (ground.size() > kMaxElements) throw GroundSetTooLarge(ground.size(), kMaxElements);
  std::vector<RootedTriangle> tris;
  const Json& list = detail::field(j, "triangles");
  if (!list.is_array()) throw ParseError("triangles must be an array");
  for (const auto& t : list) {
    const auto base = detail::string_list(detail::field(t, "base"), "base");
    const Json& root = detail::field(t, "root");
    if (!root.is_string()) throw ParseError("root must be a label");
    if (base.size() != 3) throw MalformedTriangle("triangle base must have exactly 3 elements");
    RootedTriangle rt;
    for (const auto& l : base) {
      const Element e = ground.at(l);
      if (rt.base.contains(e)) throw MalformedTriangle("repeated element in triangle base");
      rt.base.insert(e);
    }
    rt.root = ground.at(root.get<std::string>());
    tris.push_back(rt);
  }
  validate_triangles(ground.size(), tris);
  return {std::move(ground), std::move(tris)};
}

inline ConvexGeometry geometry_from_json(const Json& j) {
  auto [ground, tris] = triangles_from_json(j);
  return build_geometry(std::move(ground), std::move(tris));
}

inline Json to_json(const PointConfig& x) {
  Json pts = Json::array();
  for (std::size_t i = 0; i < x.size(); ++i) {
    const auto& p = x.points()[i];
    pts.push_back(Json{{"label", x.ground().label(static_cast<Element>(i))},
                       {"x", format_rational(p.x)},
                       {"y", format_rational(p.y)}});
  }
  return Json{{"points", pts}};
}

inline PointConfig config_from_json(const Json& j) {
  const Json& list = detail::field(j, "points");
  if (!list.is_array()) throw ParseError("points must be an array");
  std::vector<std::string> labels;
  std::vector<Point> points;
  for (const auto& p : list) {
    const Json& label = detail::field(p, "label");
    if (!label.is_string()) throw ParseError("point label must be a string");
    labels.push_back(label.get<std::string>());
    points.emplace_back(detail::coordinate(detail::field(p, "x")), detail::coordinate(detail::field(p, "y")));
  }
  return PointConfig(std::move(labels), std::move(points));
}

// Canonical triples only, in storage order.
inline Json to_json(const OrderType& t) {
  Json triples = Json::array();
  const auto& g = t.ground();
  for_each_canonical_triple(t.size(), [&](Element i, Element j, Element k) {
    triples.push_back(Json{{"t", {g.label(i), g.label(j), g.label(k)}}, {"s", t.canonical(i, j, k)}});
  });
  return Json{{"elements", g.labels()}, {"triples", triples}};
}

// Every canonical triple (labels in element order) exactly once, with sign
// ±1; anything else is rejected.
inline OrderType ordertype_from_json(const Json& j) {
  GroundSet ground(detail::string_list(detail::field(j, "elements"), "elements"));
  const Json& list = detail::field(j, "triples");
  if (!list.is_array()) throw ParseError("triples must be an array");
  std::vector<std::int8_t> signs(triple_count(ground.size()), 0);
  for (const auto& entry : list) {
    const auto labels = detail::string_list(detail::field(entry, "t"), "t");
    if (labels.size() != 3) throw ParseError("a triple needs three labels");
    const Element a = ground.at(labels[0]);
    const Element b = ground.at(labels[1]);
    const Element c = ground.at(labels[2]);
    if (!(a < b && b < c)) {
      throw ParseError("non-canonical triple (" + labels[0] + "," + labels[1] + "," + labels[2] + ")");
    }
    const Json& s = detail::field(entry, "s");
    if (!s.is_number_integer() || (s.get<int>() != 1 && s.get<int>() != -1)) throw ParseError("sign must be 1 or -1");
    auto& slot = signs[triple_index(a, b, c)];
    if (slot != 0) throw ParseError("duplicate triple (" + labels[0] + "," + labels[1] + "," + labels[2] + ")");
    slot = static_cast<std::int8_t>(s.get<int>());
  }
  std::size_t missing = 0;
  for (auto s : signs) missing += s == 0 ? 1 : 0;
  if (missing != 0) throw ParseError(std::to_string(missing) + " canonical triples are missing");
  return OrderType(std::move(ground), std::move(signs));
}

inline Json to_json(const GroundSet& ground, const LayerDecomposition& d, const OuterEquivalence& eq, bool simple) {
  Json layers = Json::array();
  for (auto l : d.layers) layers.push_back(labels_json(ground, l));
  Json classes = Json::array();
  for (auto c : eq.classes) classes.push_back(labels_json(ground, c));
  return Json{{"layers", layers}, {"depth", d.depth()}, {"simple", simple}, {"classes", classes}};
}

inline Json to_json(const GroundSet& ground, const QuasiLayerDecomposition& q) {
  Json layers = Json::array();
  for (const auto& l : q.layers) layers.push_back(labels_json(ground, l));
  Json out{{"accepted", q.accepted}, {"depth", q.depth()}, {"layers", layers}};
  out["failed_level"] = q.failed_level ? Json(*q.failed_level) : Json(nullptr);
  return out;
}

inline Json to_json(const GroundSet& ground, const DietrichWitness& w) {
  return Json{{"first", triangle_json(ground, w.first)}, {"second", triangle_json(ground, w.second)}};
}

inline Json to_json(const GroundSet& ground, const PairSplit& s) {
  return Json{{"a", ground.label(s.a)},
              {"b", ground.label(s.b)},
              {"left", labels_json(ground, s.left)},
              {"right", labels_json(ground, s.right)}};
}

inline Json to_json(const GroundSet& ground, const TStarFailure& f) {
  return Json{{"kind", kind_name(f.kind)},
              {"elements", labels_json(ground, f.elements)},
              {"count", f.count},
              {"message", f.message}};
}

inline Json to_json(const GroundSet& ground, const CarouselWitness& w) {
  return Json{{"kind", "carousel_violation"}, {"x", ground.label(w.x)}, {"y", ground.label(w.y)}, {"count", w.count}};
}

inline Json to_json(const GroundSet& ground, const ThreeCarouselWitness& w) {
  return Json{{"kind", "three_carousel_violation"},
              {"base", labels_json(ground, std::vector<Element>(w.base.begin(), w.base.end()))},
              {"x", ground.label(w.x)},
              {"y", ground.label(w.y)},
              {"count", w.count}};
}

// "a,b,c" → labels.
inline std::vector<std::string> split_labels(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(' ');
    const auto e = item.find_last_not_of(' ');
    if (b == std::string::npos) throw ParseError("empty label in list '" + text + "'");
    out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << text;
}

inline void write_json_file(const std::string& path, const Json& j) { write_text_file(path, j.dump(2) + "\n"); }

}  // namespace cg4
