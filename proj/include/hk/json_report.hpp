#pragma once

#include <string>

#include <json.hpp>

#include "hk/checker.hpp"
#include "hk/classify.hpp"
#include "hk/poly_text.hpp"
#include "hk/toric.hpp"

namespace hk {

using Json = nlohmann::ordered_json;

// Stable JSON schemas for the report types. Wall-clock timings are kept out
// so identical invocations stay byte-identical.

inline Json poset_json(const Poset& p) {
  Json j;
  std::vector<std::string> labels = p.labels();
  std::sort(labels.begin(), labels.end());
  j["elements"] = labels;
  std::vector<std::string> cov;
  for (const auto& [a, b] : p.cover_pairs())
    cov.push_back(p.label(a) + "<" + p.label(b));
  std::sort(cov.begin(), cov.end());
  j["covers"] = cov;
  return j;
}

inline Json walk_json(const WalkBinomial& wb, const CoCompGraph& g) {
  Json j;
  Json verts = Json::array();
  for (int v : wb.walk.verts) verts.push_back(v + 1);
  j["walk"] = verts;
  j["binomial"] = binomial_text(wb, g);
  return j;
}

inline Json check_report_json(const CheckReport& r) {
  CoCompGraph g = cocomparability_graph(r.lattice);
  auto name = [&](int v) { return r.lattice.label(v); };
  Json j;
  j["kind"] = "check";
  j["poset"] = poset_json(r.poset);
  j["lattice"] = Json{{"size", r.lattice.size()},
                      {"elements", r.lattice.labels()}};
  std::vector<std::string> ext_labels;
  for (int v : r.order.extension()) ext_labels.push_back(r.lattice.label(v));
  j["order"] = Json{{"kind", "degrevlex"}, {"extension", ext_labels}};
  j["generators"] = r.generator_count;
  j["walks_processed"] = r.walk_count;
  j["complete_walk_set"] = r.complete_walk_set;
  Json verdict;
  verdict["khovanskii"] = r.verdict.khovanskii;
  verdict["method"] = to_string(r.verdict.method);
  verdict["up_to_bound"] = r.verdict.up_to_bound;
  if (r.verdict.witness) {
    Json w = walk_json(r.verdict.witness->binomial, g);
    GeneratorSet gs = hibi_generators(r.lattice, r.order);
    w["substituted"] = polynomial_to_text(
        substitute(r.verdict.witness->binomial, gs), r.order, name);
    w["remainder"] =
        polynomial_to_text(r.verdict.witness->remainder, r.order, name);
    verdict["witness"] = w;
  } else {
    verdict["witness"] = nullptr;
  }
  j["verdict"] = verdict;
  Json walks = Json::array();
  for (const auto& rec : r.walks) {
    Json w = walk_json(rec.binomial, g);
    w["reduced"] = rec.reduced;
    w["steps"] = rec.steps;
    Json trace = Json::array();
    for (const auto& step : rec.trace) {
      Json s;
      s["coeff"] = rat_to_text(step.coeff);
      Json gens = Json::array();
      for (int id : step.gens)
        gens.push_back(Json::array(
            {g.edges[id].first + 1, g.edges[id].second + 1}));
      s["generators"] = gens;
      trace.push_back(s);
    }
    w["trace"] = trace;
    walks.push_back(w);
  }
  j["walks"] = walks;
  return j;
}

inline Json sweep_report_json(const SweepReport& r) {
  Json j;
  j["kind"] = "sweep";
  j["n_max"] = r.n_max;
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json x;
    x["n"] = row.n;
    x["id"] = row.index;
    x["poset"] = row.poset_text;
    x["irreducible"] = row.irreducible;
    x["free"] = row.free;
    if (row.snake)
      x["snake"] = *row.snake;
    else
      x["snake"] = nullptr;
    x["direct"] = row.direct;
    x["direct_up_to_bound"] = row.direct_up_to_bound;
    x["predicted"] = row.predicted;
    x["agree"] = row.agree;
    rows.push_back(x);
  }
  j["rows"] = rows;
  j["all_agree"] = r.all_agree;
  if (r.first_disagreement)
    j["first_disagreement"] = *r.first_disagreement;
  else
    j["first_disagreement"] = nullptr;
  return j;
}

inline Json composition_matrix_json(const CompositionMatrix& m) {
  Json j;
  j["kind"] = "composition_matrix";
  j["size"] = m.size();
  Json rows = Json::array();
  for (const auto& row : m.cells) {
    Json r = Json::array();
    for (const auto& cell : row) r.push_back(cell);
    rows.push_back(r);
  }
  j["cells"] = rows;
  return j;
}

inline CompositionMatrix composition_matrix_from_json(const Json& j) {
  CompositionMatrix m;
  for (const auto& row : j.at("cells")) {
    std::vector<std::vector<std::string>> r;
    for (const auto& cell : row) r.push_back(cell.get<std::vector<std::string>>());
    m.cells.push_back(std::move(r));
  }
  m.validate();
  return m;
}

inline Json order_experiment_json(const OrderExperiment& e) {
  Json j;
  j["kind"] = "order_experiment";
  Json exts = Json::array();
  for (const auto& ext : e.extensions) {
    Json one = Json::array();
    for (int v : ext) one.push_back(v + 1);
    exts.push_back(one);
  }
  j["extensions"] = exts;
  j["verdicts"] = e.verdicts;
  j["all_same"] = e.all_same;
  return j;
}

inline std::string lattice_dot(const Lattice& l) {
  std::string out = "digraph lattice {\n  rankdir=BT;\n";
  for (int i = 0; i < l.size(); ++i)
    out += "  v" + std::to_string(i + 1) + " [label=\"" + l.label(i) + "\"];\n";
  for (const auto& [a, b] : l.covers())
    out += "  v" + std::to_string(a + 1) + " -> v" + std::to_string(b + 1) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace hk
