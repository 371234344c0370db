#pragma once

// Certificates record the combinatorics derived from a fixture: triangles,
// layers, hull order and outer classes. They are committed next to the
// fixtures and re-derived by `corpus certify`.

#include <string>

#include "cg4/corpus.hpp"
#include "cg4/io.hpp"
#include "cg4/layers.hpp"
#include "cg4/planar.hpp"

namespace cg4 {

inline std::string certificate_file_name(const FixtureName& f) {
  std::string s = to_string(f);
  for (char& c : s) {
    if (c == ':' || c == ',') c = '_';
  }
  return s + ".json";
}

inline Json make_certificate(const FixtureName& f) {
  const PointConfig x = fixture(f);
  const ConvexGeometry g = extract_geometry(x);
  const LayerDecomposition d = layer_decomposition(g);
  const OuterEquivalence eq = outer_equivalence(g);
  Json tris = Json::array();
  for (const auto& t : g.triangles()) tris.push_back(triangle_json(g.ground(), t));
  Json layers = Json::array();
  for (const auto& l : geometric_onion(x)) layers.push_back(labels_json(x.ground(), l));
  Json classes = Json::array();
  for (auto c : eq.classes) classes.push_back(labels_json(g.ground(), c));

  Json cert{{"fixture", to_string(f)},
            {"elements", x.ground().labels()},
            {"general_position", check_general_position(x.points()).ok()},
            {"triangle_count", g.triangles().size()},
            {"triangles", tris},
            {"layers", layers},
            {"depth", d.depth()},
            {"classes", classes}};

  // Roots per base for the bases spanned by outer elements only.
  Json roots = Json::array();
  const ElementSet outer = d.outer();
  for (std::size_t i = 0; i < g.triangles().size();) {
    const ElementSet base = g.triangles()[i].base;
    std::size_t count = 0;
    while (i < g.triangles().size() && g.triangles()[i].base == base) ++count, ++i;
    if (base.subset_of(outer)) roots.push_back(Json{{"base", labels_json(g.ground(), base)}, {"roots", count}});
  }
  cert["outer_base_roots"] = roots;
  return cert;
}

}  // namespace cg4
