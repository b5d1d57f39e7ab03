#include "vtc/report.hpp"

#include <algorithm>

namespace vtc {

bool Report::all_hold() const {
  return std::all_of(assertions.begin(), assertions.end(), [](const auto& a) { return a.second; });
}

Json Report::to_json() const {
  Json j;
  j["schema"] = kReportSchema;
  j["instance"] = instance;
  j["operation"] = operation;
  j["parameters"] = parameters;
  j["result"] = result;
  j["certificate"] = certificate;
  j["assertions"] = Json::array();
  for (const auto& [name, holds] : assertions) j["assertions"].push_back({{"name", name}, {"holds", holds}});
  return j;
}

std::string to_string(const Ratio& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Json to_json(const std::vector<Vertex>& vertices) {
  Json j = Json::array();
  for (Vertex v : vertices) j.push_back(v);
  return j;
}

Json to_json(const DirectedCycle& c) {
  return {{"length", c.length()}, {"vertices", to_json(c.vertices)}};
}

Json to_json(const DirectedPath& p) {
  return {{"length", p.length()}, {"vertices", to_json(p.vertices)}};
}

Json to_json(const ExpansionReport& r) {
  Json j{{"alpha", to_string(r.alpha_lower)}, {"exact", r.exact},
         {"subsets_examined", r.subsets_examined}};
  j["witness_set"] = r.witness_set ? to_json(r.witness_set->members()) : Json(nullptr);
  return j;
}

Json to_json(const CycleSearchResult& r) {
  Json trace = Json::array();
  for (const auto& s : r.trace) trace.push_back({{"vertex", s.vertex}, {"descendants", s.descendants}});
  return {{"cycle", to_json(r.cycle)},
          {"guarantee", r.guarantee ? Json(to_string(*r.guarantee)) : Json(nullptr)},
          {"path", to_json(r.path)},
          {"selected", to_json(r.selected)},
          {"U", to_json(r.descendant_set.members())},
          {"closing_vertex", r.closing_vertex},
          {"trace", trace}};
}

Json to_json(const LongPathResult& r) {
  return {{"path", to_json(r.path)},        {"diameter", r.diameter},
          {"cycle_length", r.cycle_length}, {"source", r.from_diameter ? "diameter" : "cycle"},
          {"floor", r.floor_bound}};
}

Json to_json(const CycleGraphDiameterReport& r) {
  return {{"verdict", std::string(to_string(r.verdict))},
          {"connected", r.connected},
          {"cycles", r.cycle_count},
          {"cycle_graph_diameter", r.cycle_graph_diameter},
          {"directed_diameter", r.directed_diameter},
          {"circumference", r.circumference},
          {"bound", to_string(r.bound)},
          {"asserted", r.asserted}};
}

Json to_json(const InducedCycleReport& r) {
  const auto& dec = r.decomposition;
  Json j{{"cycle", r.cycle ? to_json(*r.cycle) : Json(nullptr)},
         {"length", r.cycle ? r.cycle->size() : 0},
         {"diameter", r.diameter},
         {"floor", r.floor},
         {"by_construction", r.by_construction},
         {"failed_step", r.failed_step},
         {"path_extensions", r.path_extensions}};
  j["decomposition"] = {{"S", to_json(dec.S)},     {"m", dec.m},       {"P", to_json(dec.P)},
                        {"w", dec.w},              {"x", dec.x},       {"y", dec.y},
                        {"phi", dec.phi},          {"w_image", dec.w_image},
                        {"side", dec.used_left ? "L" : "R"},
                        {"c", dec.c},              {"z", dec.z},
                        {"s", dec.s ? Json(*dec.s) : Json(nullptr)},
                        {"t", dec.t ? Json(*dec.t) : Json(nullptr)}};
  return j;
}

Json to_json(const PipelineReport& r) {
  Json j{{"n", r.n},
         {"diameter", r.diameter},
         {"branch", r.small_diameter ? "expansion" : "cycle-graph"},
         {"partial", r.partial},
         {"cycle", to_json(r.cycle)},
         {"constant", "1/" + std::to_string(kPipelineConstantDenominator)},
         {"floor_holds", r.floor_holds}};
  j["dfs"] = r.dfs ? to_json(*r.dfs) : Json(nullptr);
  if (!r.small_diameter) {
    j["cycle_count"] = r.cycle_count;
    j["cycle_graph_complete"] = r.cycle_graph_complete;
    j["cycle_graph_diameter"] =
        r.cycle_graph_diameter ? Json(*r.cycle_graph_diameter) : Json(nullptr);
    j["nearly_transitive"] = r.nearly_transitive;
    j["induced_method"] = r.induced_method;
    j["induced_cycle"] = r.induced_cycle ? to_json(*r.induced_cycle) : Json(nullptr);
    j["stitched"] = r.stitched ? to_json(*r.stitched) : Json(nullptr);
    j["incidental"] = r.incidental ? to_json(*r.incidental) : Json(nullptr);
  }
  j["trace"] = r.trace;
  return j;
}

Json to_json(const WitnessCertificate& c) {
  Json splits = Json::array();
  for (const auto& s : c.splits) {
    splits.push_back({{"d1", s.d1}, {"d2", s.d2}, {"g1", s.g1.str()}, {"g2", s.g2.str()}});
  }
  return {{"d", c.d},         {"n1", c.n1.str()}, {"n2", c.n2.str()},
          {"valid", c.valid}, {"reason", c.reason}, {"splits", splits}};
}

Json to_json(const WitnessConstruction& w) {
  return {{"p", w.p},
          {"q", w.q},
          {"d", w.d},
          {"n1", w.n1.str()},
          {"n2", w.n2.str()},
          {"n", w.n.str()},
          {"ln_n", format_fixed(w.ln_n, 6)},
          {"ratio", format_fixed(w.ratio, 6)},
          {"exp_d_over_n", format_fixed(w.exp_excess, 6)},
          {"certificate", to_json(w.certificate)}};
}

Json to_json(const MotohashiPair& p) {
  return {{"p", p.p}, {"q", p.q}, {"bound_ok", p.bound_ok}, {"size_guard", size_guard(p.p, p.q)}};
}

Json to_json(const SuiteResult& s) {
  return {{"suite", s.suite}, {"header", s.header}, {"rows", s.rows}, {"failures", s.failures}};
}

Json describe(const std::string& name, const Digraph& d) {
  return {{"name", name}, {"vertices", d.vertex_count()}, {"arcs", d.arc_count()}};
}

}  // namespace vtc
