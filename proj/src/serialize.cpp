#include "bsmaps/serialize.hpp"

#include <string>

namespace bsmaps {

namespace {

Json complex_json(const Complexd& z) { return Json::array({z.real(), z.imag()}); }

Complexd complex_from(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("complex number must be [re, im]");
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

std::string type_name(IndexType t) { return "Type" + std::to_string(static_cast<int>(t)); }

}  // namespace

Json to_json(const SurfaceGroup& s) {
  Json j;
  j["genus"] = s.genus();
  j["N"] = s.size();
  j["offset"] = s.offset();
  Json vertices = Json::array(), generators = Json::array(), p = Json::array(), q = Json::array();
  for (const auto& v : s.vertices()) vertices.push_back(complex_json(v));
  for (const auto& t : s.generators())
    generators.push_back(Json::array({complex_json(t.a()), complex_json(t.c())}));
  for (int i = 1; i <= s.size(); ++i) {
    p.push_back(s.P(i).angle());
    q.push_back(s.Q(i).angle());
  }
  j["vertices"] = vertices;
  j["generators"] = generators;
  j["sigma"] = s.maps().sigma_table();
  j["tau"] = s.maps().tau_table();
  j["P"] = p;
  j["Q"] = q;
  return j;
}

SurfaceGroup surface_from_json(const Json& j, double tol) {
  try {
    const int genus = j.at("genus").get<int>();
    std::vector<Complexd> vertices;
    for (const auto& v : j.at("vertices")) vertices.push_back(complex_from(v));
    std::vector<Moebiusd> generators;
    for (const auto& g : j.at("generators")) {
      if (!g.is_array() || g.size() != 2) throw ParseError("generator must be [a, c]");
      generators.emplace_back(complex_from(g.at(0)), complex_from(g.at(1)));
    }
    const double offset = j.value("offset", 0.0);
    SurfaceGroup s = SurfaceGroup::from_data(genus, std::move(vertices), std::move(generators),
                                             offset, tol);
    if (j.contains("sigma") && j.at("sigma").get<std::vector<int>>() != s.maps().sigma_table())
      throw ParseError("sigma table does not match the genus");
    if (j.contains("tau") && j.at("tau").get<std::vector<int>>() != s.maps().tau_table())
      throw ParseError("tau table does not match the genus");
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed surface document: ") + e.what());
  }
}

Json to_json(const RelationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back({{"relation", c.name}, {"deviation", c.deviation}});
  return {{"pass", r.pass},
          {"tolerance", r.tolerance},
          {"max_deviation", r.max_deviation},
          {"first_failure", r.first_failure},
          {"checks", checks}};
}

Json to_json(const GeometryReport& r) {
  return {{"pass", r.pass()},
          {"ordering_ok", r.ordering_ok},
          {"angles_ok", r.angles_ok},
          {"endpoints_ok", r.endpoints_ok},
          {"max_angle_deviation", r.max_angle_deviation},
          {"max_endpoint_deviation", r.max_endpoint_deviation}};
}

Json to_json(const SurfaceGroup& s, const SolvedPoint& p) {
  const GroupWord c = s.canonical(p.word);
  return {{"word", p.word.to_string()},
          {"letters", p.word.letters},
          {"base", p.word.base.to_string()},
          {"canonical", c.to_string()},
          {"angle", p.point.angle()}};
}

Json solution_json(const SurfaceGroup& s, const ExtremalParams& params, const SolvedParams& solved) {
  Json entries = Json::array();
  for (int i = 1; i <= s.size(); ++i)
    entries.push_back({{"index", i},
                       {"type", type_name(solved.types[i - 1])},
                       {"G", to_json(s, solved.g(i))},
                       {"H", to_json(s, solved.h(i))},
                       {"D", to_json(s, solved.d(i))}});
  return {{"genus", s.genus()},
          {"params", params.word()},
          {"offset", s.offset()},
          {"chain_depth", solved.chain_depth},
          {"entries", entries}};
}

Json dual_json(const SurfaceGroup& s, const DualParams& dual, const DualDomain& domain) {
  Json entries = Json::array();
  for (int i = 1; i <= s.size(); ++i)
    entries.push_back({{"index", i}, {"D", to_json(s, dual.point(i))}});
  const auto w = extremal_word(dual, s);
  return {{"genus", s.genus()},
          {"source_params", dual.source_params},
          {"extremal_word", w ? Json(*w) : Json(nullptr)},
          {"entries", entries},
          {"omega_dual",
           {{"horizontal", to_json(domain.horizontal)}, {"vertical", to_json(domain.vertical)}}}};
}

Json to_json(const LabeledRect& r) {
  return {{"label", r.label()},
          {"strip", r.strip},
          {"kind", to_string(r.kind)},
          {"degenerate", r.degenerate},
          {"x", Json::array({r.x.start.angle(), r.x.end.angle()})},
          {"y", Json::array({r.y.start.angle(), r.y.end.angle()})}};
}

Json to_json(const RectDomain& d) {
  Json out = Json::array();
  for (const auto& r : d.rects()) out.push_back(to_json(r));
  return out;
}

Json to_json(const BijectivityReport& r) {
  return {{"pass", r.pass()},
          {"analytic",
           {{"run", r.analytic_run},
            {"pass", r.analytic_pass},
            {"max_corner_deviation", r.max_corner_deviation},
            {"failures", r.analytic_failures}}},
          {"monte_carlo",
           {{"pass", r.monte_carlo_pass},
            {"seed", r.seed},
            {"samples", r.samples},
            {"skipped_boundary", r.skipped_boundary},
            {"image_outside", r.image_outside},
            {"injectivity_violations", r.injectivity_violations},
            {"preimage_failures", r.preimage_failures}}},
          {"measure_exploratory",
           {{"run", r.measure_run}, {"max_relative_error", r.max_measure_relative_error}}}};
}

Json to_json(const ConjugacyReport& r) {
  return {{"pass", r.pass},
          {"seed", r.seed},
          {"samples", r.samples},
          {"skipped_boundary", r.skipped_boundary},
          {"unlocated", r.unlocated},
          {"phi_outside_omega", r.phi_outside_omega},
          {"mismatches", r.mismatches},
          {"inverse_mismatches", r.inverse_mismatches},
          {"max_deviation", r.max_deviation}};
}

Json to_json(const DualityReport& r) {
  return {{"pass", r.pass},
          {"seed", r.seed},
          {"structure", {{"pass", r.structure_pass}, {"failures", r.structure_failures}}},
          {"flip",
           {{"samples", r.flip_samples},
            {"failures", r.flip_failures},
            {"partition_failures", r.partition_failures}}},
          {"identity",
           {{"samples", r.identity_samples},
            {"skipped_boundary", r.skipped_boundary},
            {"skipped_near_dual", r.skipped_near_dual},
            {"mismatches", r.identity_mismatches},
            {"max_deviation", r.max_deviation}}},
          {"dual_code", {{"checks", r.code_checks}, {"mismatches", r.code_mismatches}}}};
}

Json to_json(const FamilyReport& r) {
  Json entries = Json::array();
  for (const auto& e : r.entries)
    entries.push_back({{"family", e.name},
                       {"source", e.source},
                       {"expected_dual", e.expected_dual},
                       {"pointwise_ok", e.pointwise_ok},
                       {"max_pointwise_deviation", e.max_pointwise_deviation},
                       {"double_dual_ok", e.double_dual_ok},
                       {"duality", to_json(e.duality)}});
  return {{"genus", r.genus}, {"pass", r.pass}, {"families", entries}};
}

Json to_json(const CodingSeq& c) {
  return {{"center", Json::array({c.center.u.angle(), c.center.w.angle()})},
          {"future", c.future},
          {"past", c.past},
          {"truncated_future", c.truncated_future},
          {"truncated_past", c.truncated_past}};
}

Json to_json(const AttractorReport& r) {
  Json hist = Json::object();
  for (std::size_t k = 0; k < r.histogram.size(); ++k) hist[AttractorReport::bin_names[k]] = r.histogram[k];
  return {{"exploratory", true},
          {"iterations", r.iterations},
          {"samples", r.samples},
          {"seed", r.seed},
          {"diagonal_skipped", r.diagonal_skipped},
          {"collapsed", r.collapsed},
          {"baseline_fraction", r.baseline_fraction},
          {"converged_fraction", r.converged_fraction},
          {"distance_histogram", hist},
          {"forward_invariance",
           {{"pass", r.invariance_pass},
            {"samples", r.invariance_samples},
            {"escapes", r.invariance_escapes}}}};
}

Json to_json(const TransitionMatrix& m) {
  Json rows = Json::array(), counts = Json::array();
  for (int k = 1; k <= m.size(); ++k) {
    rows.push_back(m.row(k));
    counts.push_back(m.row_count(k));
  }
  return {{"genus", m.genus}, {"size", m.size()}, {"rows", rows}, {"row_counts", counts}};
}

std::string to_text(const TransitionMatrix& m) {
  std::string out;
  for (int a = 0; a < m.size(); ++a) {
    for (int b = 0; b < m.size(); ++b) out += m.entries(a, b) ? '1' : '0';
    out += '\n';
  }
  return out;
}

Json to_json(const SoficGraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges)
    edges.push_back({{"from", e.from_letter},
                     {"to", e.to_letter},
                     {"from_state", e.from_state},
                     {"to_state", e.to_state}});
  return {{"letters", g.letters}, {"state_labels", g.state_label}, {"edges", edges}};
}

}  // namespace bsmaps
