#include "beilab/report.hpp"

#include <sstream>

#include "beilab/errors.hpp"
#include "beilab/graph_io.hpp"

namespace beilab {

namespace {

json edge_list_json(const Graph& g) {
  json out = json::array();
  for (auto [i, j] : g.edges()) out.push_back({i + 1, j + 1});
  return out;
}

std::string csv_cell(const json& v) {
  std::string text = v.is_string() ? v.get<std::string>() : v.dump();
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char c : text) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

}  // namespace

json vertex_set_json(VertexSet s) {
  json out = json::array();
  for (int v : s) out.push_back(v + 1);
  return out;
}

VertexSet vertex_set_from_json(const json& j) {
  VertexSet s;
  for (const auto& v : j) {
    const int label = v.get<int>();
    if (label < 1 || label > kMaxVertices) throw PreconditionError("vertex label out of range: " + v.dump());
    s.insert(label - 1);
  }
  return s;
}

json to_json(const CutSetRecord& r) {
  return {{"S", vertex_set_json(r.removed)},
          {"c", r.component_count},
          {"b", r.b_value},
          {"cut", r.is_cut_set},
          {"height", r.height}};
}

json to_json(const CoverSolution& cover) {
  json cliques = json::array();
  for (VertexSet c : cover.cliques) cliques.push_back(vertex_set_json(c));
  json stars = json::array();
  for (const StarMember& s : cover.stars) stars.push_back({{"center", s.center + 1}, {"leaves", vertex_set_json(s.leaves)}});
  return {{"p", cover.cliques.size()},
          {"q", cover.stars.size()},
          {"value", cover.value()},
          {"cliques", cliques},
          {"stars", stars}};
}

json to_json(const BettiTable& table) {
  json betti = json::array();
  for (const auto& [ij, value] : table.entries()) betti.push_back({ij.first, ij.second, value});
  return {{"p", table.prime()}, {"betti", betti}, {"reg", table.regularity()}};
}

json to_json(const BoundsReport& r) {
  json verdicts = json::object();
  for (const auto& [name, ok] : r.verdicts) verdicts[name] = ok;
  return {{"graph6", r.graph6}, {"reg", r.reg},      {"height", r.height},
          {"c", r.clique_count}, {"mixedCover", r.mixed_cover}, {"eta", r.eta},
          {"ohtani", r.ohtani},  {"verdicts", verdicts},        {"holds", r.all_hold()}};
}

json to_json(const DecompositionCase& ca) {
  const int n = ca.graph.order();
  json out = {{"graph6", emit_graph6(ca.graph)},
              {"A", vertex_set_json(ca.a)},
              {"B", vertex_set_json(ca.b)},
              {"C", vertex_set_json(ca.c)},
              {"H1", edge_list_json(ca.h1)},
              {"H2", edge_list_json(ca.h2)},
              {"valid", ca.valid},
              {"violations", ca.violations}};
  if (!ca.valid) return out;
  json relabeling = json::array();
  for (int v : ca.relabeling) relabeling.push_back(v + 1);
  out["relabeling"] = relabeling;
  out["initG"] = to_string(ca.init_g, n);
  out["initSum"] = to_string(ca.init_sum, n);
  out["initSumEqual"] = ca.init_sum_equal;
  out["regG"] = ca.reg_g;
  out["regH1"] = ca.reg_h1;
  out["regH2"] = ca.reg_h2;
  out["regInequalityHolds"] = ca.reg_inequality_holds;
  out["holds"] = !ca.is_counterexample();
  return out;
}

json to_json(const SweepCase& c) {
  return {{"graph6", c.graph6}, {"split", c.split}, {"regG", c.reg_g},
          {"regH1", c.reg_h1},  {"regH2", c.reg_h2}, {"holds", c.holds}};
}

SweepCase sweep_case_from_json(const json& j) {
  SweepCase c;
  c.graph6 = j.at("graph6").get<std::string>();
  c.split = j.at("split").get<std::string>();
  c.reg_g = j.at("regG").get<int>();
  c.reg_h1 = j.at("regH1").get<int>();
  c.reg_h2 = j.at("regH2").get<int>();
  c.holds = j.at("holds").get<bool>();
  return c;
}

json to_json(const GraphVerdict& v) {
  return {{"graph6", v.graph6}, {"n", v.n},           {"m", v.m},
          {"reg", v.reg},       {"height", v.height}, {"regLeHeight", v.reg_le_height()},
          {"cases", v.cases},   {"violations", v.violations}};
}

json to_json(const Violation& v) {
  if (v.kind == "regLeHeight")
    return {{"kind", v.kind}, {"graph6", v.data.graph6}, {"reg", v.data.reg_g}, {"height", v.data.reg_h1}};
  json out = to_json(v.data);
  out.insert(out.begin(), {"kind", v.kind});
  return out;
}

json to_json(const SweepReport& r, bool with_timing) {
  json params = {{"maxN", r.params.max_n}, {"p", r.params.prime}};
  if (r.command == "check-subadditivity") {
    params["splits"] = r.params.splits == SplitMode::all ? "all" : "sample";
    if (r.params.splits == SplitMode::sample) {
      params["samples"] = r.params.samples;
      params["seed"] = r.params.seed;
    }
  }
  json violations = json::array();
  for (const Violation& v : r.violations) violations.push_back(to_json(v));
  json graphs = json::array();
  for (const GraphVerdict& v : r.graphs) graphs.push_back(to_json(v));
  json out = {{"command", r.command},       {"params", params},         {"graphCount", r.graph_count},
              {"caseCount", r.case_count},  {"violations", violations}, {"holds", r.holds()},
              {"graphs", graphs}};
  if (with_timing) out["wallSeconds"] = r.wall_seconds;
  return out;
}

json invariants_json(const Graph& g) {
  if (g.order() > kMaxRegularityOrder)
    throw SizeError("invariants need n <= 10; graph has n = " + std::to_string(g.order()));
  json primes = json::array();
  const auto records = minimal_primes(g);
  for (const CutSetRecord& r : records) primes.push_back(to_json(r));
  return {{"graph6", emit_graph6(g)},
          {"n", g.order()},
          {"m", g.edge_count()},
          {"iv", iv(g)},
          {"c", clique_count(g)},
          {"eta", eta(g)},
          {"height", height(g)},
          {"mixedCover", to_json(mixed_cover(g))},
          {"minimalPrimes", {{"count", records.size()}, {"records", primes}}}};
}

std::string csv_table(const json& rows) {
  std::ostringstream out;
  if (rows.empty()) return "";
  bool first = true;
  for (const auto& [key, _] : rows.front().items()) {
    out << (first ? "" : ",") << csv_cell(key);
    first = false;
  }
  out << '\n';
  for (const auto& row : rows) {
    first = true;
    for (const auto& [_, value] : row.items()) {
      out << (first ? "" : ",") << csv_cell(value);
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

std::string csv_row(const json& object) { return csv_table(json::array({object})); }

}  // namespace beilab
