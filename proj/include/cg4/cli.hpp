#pragma once

// Command-line front end. Every subcommand reads JSON inputs, calls one
// library operation and prints a verdict object
//   {"status": ..., "reason": ..., "artifacts": [...], "result": ...}
// on stdout. Exit codes: 0 ok, 1 refuted, 2 undecided, 3 error.

#include <algorithm>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cg4/certificate.hpp"
#include "cg4/core.hpp"
#include "cg4/corpus.hpp"
#include "cg4/io.hpp"
#include "cg4/layers.hpp"
#include "cg4/ordertype.hpp"
#include "cg4/planar.hpp"
#include "cg4/realize.hpp"
#include "cg4/svg.hpp"

namespace cg4::cli {

enum class Status { kOk = 0, kRefuted = 1, kUndecided = 2, kError = 3 };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::kOk: return "ok";
    case Status::kRefuted: return "refuted";
    case Status::kUndecided: return "undecided";
    case Status::kError: return "error";
  }
  return "error";
}

struct Verdict {
  Status status = Status::kOk;
  Json reason = nullptr;
  std::vector<std::string> artifacts;
  Json result = nullptr;

  [[nodiscard]] Json to_json() const {
    return Json{{"status", status_name(status)}, {"reason", reason}, {"artifacts", artifacts}, {"result", result}};
  }
};

inline Verdict refuted(Json reason, Json result = nullptr) {
  return Verdict{Status::kRefuted, std::move(reason), {}, std::move(result)};
}

inline Json equivalence_json(const OrderType& t1, const OrderType& t2, const Equivalence& e) {
  Json map = Json::object();
  for (std::size_t i = 0; i < e.map.image.size(); ++i) {
    map[t1.ground().label(static_cast<Element>(i))] = t2.ground().label(e.map.image[i]);
  }
  return Json{{"map", map}, {"sign", e.sign}};
}

inline Json order_json(const GroundSet& ground, const CircularOrder& ord) { return labels_json(ground, ord.elements); }

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Convex 4-geometries and planar order types", "cg4"};
  app.require_subcommand(1);

  std::string config, geometry, ordertype, order, a_path, b_path, realization, out_path, fixture_name;
  std::string emit_geometry, emit_ordertype, certificates = "data/certificates";
  bool weak = false, triangles = false;
  int grid = 8, k = 1, p = 2;
  std::uint64_t max_nodes = SearchOptions{}.max_nodes;
  std::size_t max_elements = SearchOptions{}.max_elements;
  std::function<Verdict()> action;

  auto* extract = app.add_subcommand("extract", "rooted triangles of a point configuration");
  extract->add_option("--config", config, "point configuration JSON")->required();
  extract->add_option("--emit-geometry", emit_geometry, "write the geometry JSON here");
  extract->add_option("--emit-ordertype", emit_ordertype, "write the order type JSON here");
  extract->callback([&] {
    action = [&] {
      const PointConfig x = config_from_json(read_json_file(config));
      const ConvexGeometry g = extract_geometry(x);
      Verdict v{Status::kOk, nullptr, {}, to_json(g)};
      if (!emit_geometry.empty()) {
        write_json_file(emit_geometry, to_json(g));
        v.artifacts.push_back(emit_geometry);
      }
      if (!emit_ordertype.empty()) {
        write_json_file(emit_ordertype, to_json(extract_ordertype(x)));
        v.artifacts.push_back(emit_ordertype);
      }
      return v;
    };
  });

  auto* ot = app.add_subcommand("ordertype", "order type of a point configuration");
  ot->add_option("--config", config, "point configuration JSON")->required();
  ot->add_option("--out", out_path, "write the order type JSON here");
  ot->callback([&] {
    action = [&] {
      const OrderType t = extract_ordertype(config_from_json(read_json_file(config)));
      Verdict v{Status::kOk, nullptr, {}, to_json(t)};
      if (!out_path.empty()) {
        write_json_file(out_path, v.result);
        v.artifacts.push_back(out_path);
      }
      return v;
    };
  });

  auto* quasi = app.add_subcommand("quasi", "quasi layers and quasi rooted triangles of an order type");
  quasi->add_option("--ordertype", ordertype, "order type JSON")->required();
  quasi->callback([&] {
    action = [&] {
      const OrderType t = ordertype_from_json(read_json_file(ordertype));
      const auto q = quasi_layer_decomposition(t);
      Json result = to_json(t.ground(), q);
      Json tris = Json::array();
      if (t.size() <= kMaxElements) {
        for (const auto& tr : quasi_rooted_triangles(t)) tris.push_back(triangle_json(t.ground(), tr));
      }
      result["triangles"] = tris;
      if (q.accepted) return Verdict{Status::kOk, nullptr, {}, result};
      return refuted(Json{{"kind", "not_quasi_order_type"}, {"level", *q.failed_level}}, result);
    };
  });

  auto* layers = app.add_subcommand("layers", "layer decomposition and outer equivalence classes");
  auto* lg = layers->add_option("--geometry", geometry, "geometry JSON");
  auto* lc = layers->add_option("--config", config, "point configuration JSON");
  lg->excludes(lc);
  layers->callback([&] {
    action = [&] {
      if (geometry.empty() && config.empty()) throw Error("layers needs --geometry or --config");
      const ConvexGeometry g = geometry.empty() ? extract_geometry(config_from_json(read_json_file(config)))
                                                : geometry_from_json(read_json_file(geometry));
      return Verdict{Status::kOk, nullptr, {},
                     to_json(g.ground(), layer_decomposition(g), outer_equivalence(g), is_simple(g))};
    };
  });

  auto* dietrich = app.add_subcommand("dietrich", "check Dietrich's axiom on a triangle family");
  dietrich->add_option("--geometry", geometry, "geometry JSON (triangles need not be valid)")->required();
  dietrich->callback([&] {
    action = [&] {
      const auto [ground, tris] = triangles_from_json(read_json_file(geometry));
      if (auto w = check_dietrich(ground.size(), tris)) {
        Json reason = to_json(ground, *w);
        reason["kind"] = "dietrich_violation";
        return refuted(reason);
      }
      return Verdict{};
    };
  });

  auto* carousel = app.add_subcommand("carousel", "check the carousel and 3-carousel rules");
  carousel->alias("check");
  carousel->add_option("--geometry", geometry, "geometry JSON")->required();
  carousel->add_option("--order", order, "clockwise outer order, comma separated")->required();
  carousel->callback([&] {
    action = [&] {
      const ConvexGeometry g = geometry_from_json(read_json_file(geometry));
      const CircularOrder ord = parse_order(g.ground(), split_labels(order));
      if (auto w = check_carousel(g, ord)) return refuted(to_json(g.ground(), *w));
      if (auto w = check_3carousel(g)) return refuted(to_json(g.ground(), *w));
      return Verdict{};
    };
  });

  auto* tstar = app.add_subcommand("tstar", "the order type supporting a geometry and clockwise order");
  tstar->add_option("--geometry", geometry, "geometry JSON")->required();
  tstar->add_option("--order", order, "clockwise outer order, comma separated")->required();
  tstar->add_option("--out", out_path, "write the order type JSON here");
  tstar->callback([&] {
    action = [&] {
      const ConvexGeometry g = geometry_from_json(read_json_file(geometry));
      const auto r = construct_t_star(g, parse_order(g.ground(), split_labels(order)));
      if (const auto* f = std::get_if<TStarFailure>(&r)) return refuted(to_json(g.ground(), *f));
      Verdict v{Status::kOk, nullptr, {}, to_json(std::get<OrderType>(r))};
      if (!out_path.empty()) {
        write_json_file(out_path, v.result);
        v.artifacts.push_back(out_path);
      }
      return v;
    };
  });

  auto* equiv = app.add_subcommand("equiv", "search an (weak) equivalence between two order types");
  equiv->add_option("--a", a_path, "first order type JSON")->required();
  equiv->add_option("--b", b_path, "second order type JSON")->required();
  equiv->add_flag("--weak", weak, "allow a global sign change");
  equiv->callback([&] {
    action = [&] {
      const OrderType t1 = ordertype_from_json(read_json_file(a_path));
      const OrderType t2 = ordertype_from_json(read_json_file(b_path));
      if (auto e = equivalence(t1, t2, weak)) return Verdict{Status::kOk, nullptr, {}, equivalence_json(t1, t2, *e)};
      return refuted(Json{{"kind", weak ? "not_weakly_equivalent" : "not_equivalent"}});
    };
  });

  auto* reduce = app.add_subcommand("reduce-ot", "geometry and clockwise order of an order type");
  reduce->add_option("--ordertype", ordertype, "order type JSON")->required();
  reduce->add_option("--emit-geometry", emit_geometry, "write the geometry JSON here");
  reduce->callback([&] {
    action = [&]() -> Verdict {
      const OrderType t = ordertype_from_json(read_json_file(ordertype));
      try {
        const MejInstance inst = reduce_ot_to_mej(t);
        Verdict v{Status::kOk, nullptr, {},
                  Json{{"geometry", to_json(inst.geometry)}, {"order", order_json(t.ground(), inst.order)}}};
        if (!emit_geometry.empty()) {
          write_json_file(emit_geometry, to_json(inst.geometry));
          v.artifacts.push_back(emit_geometry);
        }
        return v;
      } catch (const NotQuasiOrderType& e) {
        return refuted(Json{{"kind", "not_quasi_order_type"}, {"level", e.level()}, {"message", e.what()}});
      } catch (const DietrichViolation& e) {
        Json reason = to_json(t.ground(), e.witness());
        reason["kind"] = "dietrich_violation";
        return refuted(reason);
      } catch (const OuterLayerMismatch& e) {
        return refuted(Json{{"kind", "outer_layer_mismatch"}, {"message", e.what()}});
      }
    };
  });

  auto* decide = app.add_subcommand("decide-ot", "decide whether a sign function is an order type");
  decide->add_option("--ordertype", ordertype, "order type JSON")->required();
  decide->add_option("--realization", realization, "candidate point configuration JSON");
  decide->add_option("--grid", grid, "search grid side")->check(CLI::Range(1, 64));
  decide->add_option("--max-nodes", max_nodes, "search budget in placement attempts");
  decide->callback([&] {
    action = [&] {
      const OrderType t = ordertype_from_json(read_json_file(ordertype));
      std::optional<PointConfig> x;
      if (!realization.empty()) x = config_from_json(read_json_file(realization));
      SearchOptions opt;
      opt.grid = grid;
      opt.max_nodes = max_nodes;
      const OtDecision d = decide_ot_via_mej(t, x, opt);
      Json result = d.realization ? to_json(*d.realization) : Json(nullptr);
      switch (d.status) {
        case OtDecision::Status::kAccepted: return Verdict{Status::kOk, nullptr, {}, result};
        case OtDecision::Status::kRefuted: {
          Json reason{{"kind", "refuted"}, {"message", d.reason}};
          if (d.differing_triple) reason["triple"] = labels_json(t.ground(), std::vector<Element>(d.differing_triple->begin(), d.differing_triple->end()));
          return refuted(reason);
        }
        case OtDecision::Status::kUndecided: break;
      }
      return Verdict{Status::kUndecided, Json{{"kind", "budget"}, {"message", d.reason}}, {}, nullptr};
    };
  });

  auto* search = app.add_subcommand("search", "brute-force grid realization of a geometry");
  search->add_option("--geometry", geometry, "geometry JSON")->required();
  search->add_option("--order", order, "clockwise outer order, comma separated");
  search->add_option("--grid", grid, "search grid side")->check(CLI::Range(1, 64));
  search->add_option("--max-nodes", max_nodes, "search budget in placement attempts");
  search->add_option("--max-elements", max_elements, "refuse larger geometries");
  search->add_option("--out", out_path, "write the realization JSON here");
  search->callback([&] {
    action = [&] {
      const ConvexGeometry g = geometry_from_json(read_json_file(geometry));
      std::optional<CircularOrder> ord;
      if (!order.empty()) ord = parse_order(g.ground(), split_labels(order));
      SearchOptions opt;
      opt.grid = grid;
      opt.max_nodes = max_nodes;
      opt.max_elements = max_elements;
      const SearchResult r = brute_force_realize(g, ord, opt);
      if (r.status == SearchResult::Status::kFound) {
        Verdict v{Status::kOk, nullptr, {},
                  Json{{"config", to_json(*r.realization)}, {"order", order_json(g.ground(), *r.order)}}};
        if (!out_path.empty()) {
          write_json_file(out_path, to_json(*r.realization));
          v.artifacts.push_back(out_path);
        }
        return v;
      }
      Json reason{{"kind", cg4::status_name(r.status)}, {"message", r.reason}, {"nodes", r.nodes}};
      if (r.status == SearchResult::Status::kNonRealizable) return refuted(reason);
      return Verdict{Status::kUndecided, reason, {}, nullptr};
    };
  });

  auto* corpus = app.add_subcommand("corpus", "built-in fixtures");
  corpus->require_subcommand(1);
  auto* emit = corpus->add_subcommand("emit", "write a fixture's point configuration");
  emit->add_option("name", fixture_name, "fixture name, e.g. l8, ngon:5, series:1:4:1,3")->required();
  emit->add_option("--out", out_path, "write the configuration JSON here");
  emit->callback([&] {
    action = [&] {
      Verdict v{Status::kOk, nullptr, {}, to_json(fixture(fixture_name))};
      if (!out_path.empty()) {
        write_json_file(out_path, v.result);
        v.artifacts.push_back(out_path);
      }
      return v;
    };
  });
  auto* certify = corpus->add_subcommand("certify", "re-derive a fixture's certificate and compare");
  certify->add_option("name", fixture_name, "fixture name")->required();
  certify->add_option("--certificates", certificates, "directory of committed certificates");
  certify->add_option("--out", out_path, "write the derived certificate here");
  certify->callback([&] {
    action = [&] {
      const FixtureName f = parse_fixture_name(fixture_name);
      const Json derived = make_certificate(f);
      Verdict v{Status::kOk, nullptr, {}, derived};
      if (!out_path.empty()) {
        write_json_file(out_path, derived);
        v.artifacts.push_back(out_path);
        return v;
      }
      const Json committed = read_json_file(certificates + "/" + certificate_file_name(f));
      if (committed != derived) {
        return refuted(Json{{"kind", "certificate_mismatch"}, {"diff", Json::diff(committed, derived)}});
      }
      return v;
    };
  });
  auto* list = corpus->add_subcommand("list", "names of the standard fixtures");
  list->callback([&] {
    action = [&] {
      Json names = Json::array();
      for (const auto& f : standard_fixtures()) names.push_back(to_string(f));
      return Verdict{Status::kOk, nullptr, {}, names};
    };
  });
  auto* count = corpus->add_subcommand("series-count", "weak classes among all series splits");
  count->add_option("--k", k, "number of triangle pairs minus one")->check(CLI::Range(1, 2));
  count->add_option("--p", p, "number of added points")->check(CLI::Range(1, 6));
  count->callback([&] {
    action = [&] {
      const SeriesCount c = series_class_count(k, p);
      return Verdict{Status::kOk, nullptr, {},
                     Json{{"k", k},
                          {"p", p},
                          {"classes", c.classes},
                          {"configurations", c.configurations},
                          {"geometries_isomorphic", c.geometries_isomorphic}}};
    };
  });

  auto* render = app.add_subcommand("render", "SVG drawing of a point configuration");
  render->add_option("--config", config, "point configuration JSON")->required();
  render->add_option("--out", out_path, "write the SVG here; without it the SVG goes to stdout");
  render->add_flag("--triangles", triangles, "overlay the rooted triangles");
  bool raw_svg = false;
  render->callback([&] {
    action = [&] {
      SvgOptions opt;
      opt.triangles = triangles;
      const std::string svg = render_svg(config_from_json(read_json_file(config)), opt);
      if (out_path.empty()) {
        raw_svg = true;
        out << svg;
        return Verdict{};
      }
      write_text_file(out_path, svg);
      return Verdict{Status::kOk, nullptr, {out_path}, nullptr};
    };
  });

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return static_cast<int>(Status::kError);
  }

  Verdict v;
  try {
    v = action();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    v = Verdict{Status::kError, Json{{"message", e.what()}}, {}, nullptr};
  }
  if (!raw_svg) out << v.to_json().dump(2) << "\n";
  return static_cast<int>(v.status);
}

}  // namespace cg4::cli
