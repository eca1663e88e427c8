#include "rainsat/report.hpp"

#include "rainsat/graph_io.hpp"

namespace rainsat {

namespace {

Json pair_json(const VertexPair& p) { return Json::array({p.first, p.second}); }

}  // namespace

Json graph_json(const Graph& g) {
  return Json{{"n", g.vertex_count()}, {"m", g.edge_count()}, {"graph6", encode_graph6(g)}};
}

Json coloring_json(const EdgeColoring& c) { return Json(c.colors()); }

Json outcome_json(const SearchOutcome& o) {
  Json j{{"verdict", to_string(o.verdict)}, {"nodes", o.nodes}, {"ms", o.elapsed_ms}};
  if (o.witness) j["witness"] = coloring_json(*o.witness);
  return j;
}

Json enumeration_json(const EnumerationOutcome& e) {
  Json list = Json::array();
  for (const auto& c : e.colorings) list.push_back(coloring_json(c));
  return Json{{"exhaustive", e.exhaustive},
              {"count", e.count},
              {"nodes", e.nodes},
              {"ms", e.elapsed_ms},
              {"colorings", std::move(list)}};
}

Json saturation_json(const SaturationReport& r) {
  Json per = Json::array();
  for (const auto& x : r.per_nonedge) {
    Json o = outcome_json(x.outcome);
    o["edge"] = pair_json(x.pair);
    o["method"] = to_string(x.method);
    per.push_back(std::move(o));
  }
  Json inc = Json::array();
  for (const auto& p : r.inconclusive_edges) inc.push_back(pair_json(p));
  Json j{{"verdict", to_string(r.verdict)},
         {"condition1", outcome_json(r.condition1)},
         {"missed_edge", r.missed_edge ? pair_json(*r.missed_edge) : Json()},
         {"inconclusive_edges", std::move(inc)},
         {"nodes_explored", r.total_nodes},
         {"ms", r.elapsed_ms},
         {"per_nonedge", std::move(per)}};
  return j;
}

Json rsat_json(const RsatResult& r) {
  Json j{{"n", r.n},
         {"pattern", r.pattern},
         {"value", r.value ? Json(*r.value) : Json()},
         {"graphs_examined", r.graphs_examined},
         {"exhaustive", r.exhaustive},
         {"ms", r.elapsed_ms}};
  if (r.value) {
    j["witness"] = graph_json(r.witness);
    if (r.witness_coloring) j["witness_coloring"] = coloring_json(*r.witness_coloring);
  }
  return j;
}

Json uniqueness_json(const UniquenessReport& r) {
  return Json{{"w", r.w},
              {"count", r.up_to_isomorphism},
              {"up_to_isomorphism", r.up_to_isomorphism},
              {"up_to_relabeling", r.up_to_relabeling},
              {"exhaustive", r.exhaustive},
              {"nodes", r.nodes},
              {"ms", r.elapsed_ms}};
}

Json tbfc_json(const Tbfc& t) {
  return Json{{"cycle", t.cycle}, {"bits", t.bits}, {"edges", t.edges}, {"colors", t.colors}};
}

Json violations_json(const std::vector<Violation>& v) {
  Json list = Json::array();
  for (const auto& x : v) list.push_back(Json{{"check", x.check}, {"detail", x.detail}});
  return list;
}

Json clique_audit_json(const CliqueExtensionAudit& a) {
  return Json{{"passed", a.passed},
              {"trials", a.trials},
              {"failures", a.failures},
              {"exhaustive_checked", a.exhaustive_checked}};
}

Json unrestricted_json(const UnrestrictedOutcome& u) {
  Json j{{"decided", u.decided}, {"unrestricted", u.unrestricted}, {"nodes", u.nodes},
         {"ms", u.elapsed_ms}};
  if (u.recoloring) j["recoloring"] = coloring_json(*u.recoloring);
  if (u.rainbow_copy) j["rainbow_copy"] = u.rainbow_copy->edges;
  return j;
}

}  // namespace rainsat
