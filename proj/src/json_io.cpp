#include "barbed/json_io.hpp"

#include <string>

#include "barbed/errors.hpp"

namespace barbed {

namespace {

Json pair_json(const VertexPair& p) { return Json::array({p.first, p.second}); }

Json number_or_inf(double x) {
  if (x == kInfinity) return "inf";
  return x;
}

Json bar_json(const Bar& b) {
  Json j;
  j["birth"] = b.birth;
  j["death"] = number_or_inf(b.death);
  j["birth_simplex"] = b.birth_simplex;
  return j;
}

Json square(std::size_t n, auto&& at) {
  Json rows = Json::array();
  for (std::size_t v = 0; v < n; ++v) {
    Json row = Json::array();
    for (std::size_t w = 0; w < n; ++w) row.push_back(at(v, w));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Json to_json(const WeightedGraph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back(Json::array({e.u, e.v, e.weight}));
  return Json{{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

Json to_json(const DistanceMatrix& d) {
  Json j;
  j["n"] = d.size();
  j["provenance"] = to_string(d.provenance());
  if (!d.label().empty()) j["label"] = d.label();
  j["values"] = square(d.size(), [&](std::size_t v, std::size_t w) {
    return d(static_cast<Vertex>(v), static_cast<Vertex>(w));
  });
  if (d.hop_counts()) {
    j["hop_counts"] = square(d.size(), [&](std::size_t v, std::size_t w) {
      return *d.hops(static_cast<Vertex>(v), static_cast<Vertex>(w));
    });
  }
  return j;
}

Json to_json(const SpanningTree& t) {
  Json edges = Json::array();
  for (const auto& e : t.edges) edges.push_back(pair_json(e));
  return Json{{"edges", std::move(edges)}, {"total_weight", t.total_weight}};
}

Json to_json(const PathChoiceFunction& pcf, const WeightedGraph& g) {
  Json paths = Json::array();
  const std::size_t n = pcf.vertex_count();
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      paths.push_back(Json{{"pair", Json::array({a, b})}, {"route", pcf.stored_route(a, b)}});
    }
  }
  return Json{{"graph", to_json(g)}, {"paths", std::move(paths)}};
}

Json to_json(const Barcode& code) {
  Json bars = Json::array();
  for (const Bar& b : code.bars) bars.push_back(bar_json(b));
  return Json{{"k", code.k}, {"bars", std::move(bars)}};
}

Json to_json(const ConsistencyReport& r) {
  Json v = Json::array();
  for (const auto& x : r.violations) v.push_back(Json{{"pair", pair_json(x.outer)}, {"sub_pair", pair_json(x.inner)}});
  return Json{{"ok", r.ok}, {"violations", std::move(v)}};
}

Json to_json(const DominanceReport& r) {
  Json wv = Json::array(), cv = Json::array();
  for (const auto& e : r.weight_violations) wv.push_back(pair_json(e));
  for (const auto& e : r.cost_violations) cv.push_back(pair_json(e));
  return Json{{"weight_dominated", r.weight_dominated},
              {"cost_dominated", r.cost_dominated},
              {"weight_violations", std::move(wv)},
              {"cost_violations", std::move(cv)}};
}

Json to_json(const MetricReport& r) {
  return Json{{"symmetric", r.symmetric}, {"identity", r.identity}, {"triangle", r.triangle}};
}

Json to_json(const InjectionReport& r) {
  Json matched = Json::array();
  for (const auto& m : r.matched) {
    matched.push_back(Json{{"birth_edge", pair_json(m.birth_edge)},
                           {"source", Json::array({m.source.birth, number_or_inf(m.source.death)})},
                           {"target", Json::array({m.target.birth, number_or_inf(m.target.death)})}});
  }
  Json unmatched = Json::array();
  for (const auto& b : r.unmatched_target) unmatched.push_back(bar_json(b));
  Json failures = Json::array();
  for (const auto& f : r.failures)
    failures.push_back(Json{{"birth_edge", pair_json(f.birth_edge)}, {"reason", to_string(f.reason)}});
  return Json{{"source_distance", r.source_label},
              {"target_distance", r.target_label},
              {"ok", r.ok},
              {"shared_mst", to_json(r.shared_mst)},
              {"source_barcode", to_json(r.source_barcode)},
              {"target_barcode", to_json(r.target_barcode)},
              {"matched", std::move(matched)},
              {"unmatched_target", std::move(unmatched)},
              {"failures", std::move(failures)}};
}

Json to_json(const BirthEdgeAudit& a) {
  Json v = Json::array();
  for (const auto& x : a.violations) {
    Json j{{"birth_simplex", x.birth_simplex}, {"kind", to_string(x.kind)}};
    if (x.midpoint) j["midpoint"] = *x.midpoint;
    v.push_back(std::move(j));
  }
  return Json{{"ok", a.ok}, {"barcode", to_json(a.barcode)}, {"violations", std::move(v)}};
}

Json to_json(const MstInvarianceReport& r) {
  auto trees = [](const std::vector<std::vector<Edge>>& ts) {
    Json out = Json::array();
    for (const auto& t : ts) {
      Json edges = Json::array();
      for (const Edge& e : t) edges.push_back(Json::array({e.u, e.v, e.weight}));
      out.push_back(std::move(edges));
    }
    return out;
  };
  return Json{{"equal", r.equal},
              {"weight_dominated", r.weight_dominated},
              {"mst_g", trees(r.mst_g)},
              {"mst_kg", trees(r.mst_kg)}};
}

Json to_json(const PosetExtremes& p) {
  Json j;
  j["least"] = p.least ? Json(*p.least) : Json(nullptr);
  j["greatest"] = p.greatest ? Json(*p.greatest) : Json(nullptr);
  return j;
}

Json to_json(const CorpusParams& p) {
  return Json{{"seed", p.seed},   {"n_min", p.n_min}, {"n_max", p.n_max},
              {"p_min", p.p_min}, {"p_max", p.p_max}, {"w_min", p.w_min},
              {"w_max", p.w_max}, {"integer_weights", p.integer_weights}};
}

PathChoiceFunction parse_pcf_json(std::string_view text, const WeightedGraph& g) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("pcf document is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("paths") || !doc["paths"].is_array())
    throw Error("pcf document needs a \"paths\" array");
  std::vector<Path> routes;
  try {
    for (const auto& entry : doc["paths"]) {
      auto route = entry.at("route").get<Path>();
      const auto pair = entry.at("pair").get<std::vector<Vertex>>();
      if (pair.size() != 2 || route.empty() || make_pair_key(pair[0], pair[1]) != make_pair_key(route.front(), route.back()))
        throw Error("pcf entry's pair does not match its route endpoints");
      routes.push_back(std::move(route));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed pcf entry: ") + e.what());
  }
  return make_path_choice(g, routes);
}

Barcode parse_barcode_json(std::string_view text) {
  try {
    const Json doc = Json::parse(text);
    Barcode code;
    code.k = doc.at("k").get<std::size_t>();
    for (const auto& b : doc.at("bars")) {
      Bar bar;
      bar.birth = b.at("birth").get<double>();
      const auto& death = b.at("death");
      if (death.is_string()) {
        if (death.get<std::string>() != "inf") throw Error("bar death must be a number or \"inf\"");
        bar.death = kInfinity;
      } else {
        bar.death = death.get<double>();
      }
      bar.birth_simplex = b.at("birth_simplex").get<std::vector<Vertex>>();
      code.bars.push_back(std::move(bar));
    }
    sort_bars(code.bars);
    return code;
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed barcode document: ") + e.what());
  }
}

}  // namespace barbed
