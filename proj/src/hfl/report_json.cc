#include "hfl/report_json.h"

namespace hfl {

namespace {

Json StagesJson(const std::vector<GreedyStage>& stages) {
  Json out = Json::array();
  for (const GreedyStage& s : stages) {
    out.push_back({{"stage", s.index},
                   {"stage_vertex_count", s.stage_vertex_count},
                   {"set", ToJson(s.folner_set)},
                   {"boundary", ToJson(s.stage_boundary)}});
  }
  return out;
}

}  // namespace

Json ToJson(const VertexSet& s) {
  Json out = Json::array();
  for (Vertex v : s) out.push_back(v);
  return out;
}

Json ToJson(const std::vector<VertexSet>& sets) {
  Json out = Json::array();
  for (const VertexSet& s : sets) out.push_back(ToJson(s));
  return out;
}

Json ToJson(const Rational& r) { return FormatRational(r); }

Json ToJson(const SeparatorDistribution& d) {
  Json support = Json::array();
  for (size_t i = 0; i < d.support.size(); ++i) {
    support.push_back({{"set", ToJson(d.support[i])}, {"prob", ToJson(d.probs[i])}});
  }
  Json marginals = Json::array();
  for (const Rational& m : d.marginals) marginals.push_back(ToJson(m));
  return {{"support", std::move(support)}, {"marginals", std::move(marginals)}};
}

Json ToJson(const WeightVector& w) {
  Json out = Json::array();
  for (const Rational& x : w.weights()) out.push_back(ToJson(x));
  return out;
}

Json SeparatorsJson(int k, bool minimal, const std::vector<VertexSet>& seps) {
  return {{"k", k},
          {"minimal", minimal},
          {"count", seps.size()},
          {"separators", ToJson(seps)}};
}

Json FolnerJson(const Rational& eps, int k,
                const std::optional<FolnerWitness>& witness) {
  Json out = {{"eps", ToJson(eps)}, {"k", k}, {"found", witness.has_value()}};
  if (witness) {
    out["witness"] = {{"set", ToJson(witness->e)},
                      {"boundary", ToJson(witness->boundary)},
                      {"eps_achieved", ToJson(witness->eps_achieved)}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

Json GreedyJson(const GreedyResult& result) {
  if (const auto* trace = std::get_if<GreedyTrace>(&result)) {
    return {{"eps", ToJson(trace->eps)},
            {"k", trace->k},
            {"status", "ok"},
            {"stages", StagesJson(trace->stages)},
            {"separator", ToJson(trace->separator)},
            {"separator_size", trace->separator.size()},
            {"verified", trace->verified}};
  }
  const auto& stuck = std::get<GreedyStuck>(result);
  return {{"eps", ToJson(stuck.eps)},
          {"k", stuck.k},
          {"status", "stuck"},
          {"stages", StagesJson(stuck.completed)},
          {"stuck_stage", stuck.stage},
          {"stuck_subgraph", ToJson(stuck.subgraph)}};
}

Json GameJson(const GameReport& r) {
  return {{"mode", "exact"},
          {"n", r.n},
          {"k", r.k},
          {"support_family",
           r.family == SupportFamily::kMinimal ? "minimal" : "all"},
          {"separator_count", r.separator_count},
          {"pivots", r.pivots},
          {"h", ToJson(r.h)},
          {"eps_star", ToJson(r.eps_star)},
          {"w_star", ToJson(r.w_star)},
          {"gap", ToJson(r.gap)},
          {"primal", ToJson(r.primal)},
          {"dual", ToJson(r.dual)},
          {"dual_best_response",
           {{"set", ToJson(r.dual_best_response.y)},
            {"value", ToJson(r.dual_best_response.weight)}}}};
}

Json MwuJson(const MwuReport& r) {
  return {{"mode", "mwu"},
          {"n", r.n},
          {"k", r.k},
          {"rounds", r.rounds},
          {"seed", r.seed},
          {"best_response", r.exact_best_response ? "exact" : "heuristic"},
          {"lo", ToJson(r.lo)},
          {"hi", ToJson(r.hi)},
          {"lo_certified", r.lo_certified},
          {"hi_certified", r.hi_certified},
          {"width", ToJson(Rational(r.hi - r.lo))},
          {"primal", ToJson(r.primal)},
          {"dual", ToJson(r.dual)},
          {"dual_best_response",
           {{"set", ToJson(r.dual_best_response.y)},
            {"value", ToJson(r.dual_best_response.weight)}}}};
}

Json UlaJson(const UlaProfile& p) {
  Json out = {{"eps", ToJson(p.eps)},
              {"mode", p.exact ? "exact" : "approx"},
              {"k_lower", p.k_lower},
              {"k_upper", p.k_upper},
              {"critical_subgraph", ToJson(p.critical_subgraph)},
              {"subgraphs_examined", p.subgraphs_examined}};
  if (p.exact) out["k"] = p.k_lower;
  if (p.greedy_k) out["greedy_k_heuristic"] = *p.greedy_k;
  return out;
}

Json SchreierJson(const SchreierGraph& s, bool planar) {
  std::string labels(s.edge_labels.begin(), s.edge_labels.end());
  return {{"n", s.graph.num_vertices()},
          {"edge_count", s.graph.edges().size()},
          {"simple_edge_count", s.graph.SimpleEdgeCount()},
          {"transitive", s.transitive},
          {"planar", planar},
          {"graph", EmitGraph(s.graph)},
          {"labels", labels}};
}

}  // namespace hfl
