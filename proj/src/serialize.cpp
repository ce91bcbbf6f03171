#include "lsg/serialize.hpp"

#include <cmath>
#include <sstream>

#include "lsg/errors.hpp"

namespace lsg {

namespace {

// JSON has no infinities; they are written as null.
Json number(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

Json vertices(const std::vector<Vertex>& vs) { return Json(vs); }

const char* mode_name(OccupancyMode m) { return m == OccupancyMode::Strong ? "strong" : "induced"; }

std::size_t vertex_key(const std::string& key, std::size_t n) {
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(key, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  require(pos == key.size() && pos > 0 && v < n, "vertex key in range", "bad vertex key '" + key + "'");
  return v;
}

}  // namespace

std::string to_string(const Rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

std::string to_string(const HighPrecision& x, int digits) { return x.str(digits, std::ios_base::scientific); }

void to_json(Json& j, const SparsityCertificate& c) {
  j = Json{{"verdict", c.pass}, {"k", c.k}, {"r", c.r}, {"counts", c.counts}};
  Json viol = Json::array();
  for (const auto& v : c.violations) viol.push_back({{"v", v.v}, {"count", v.count}, {"k_floor", v.k_floor}});
  j["violations"] = viol;
}

void to_json(Json& j, const IndependencePolynomial& p) {
  j = Json{{"n", p.n},
           {"coeffs", p.coeffs},
           {"alpha", p.alpha()},
           {"independent_sets", p.total()},
           {"median_alpha", median_independence_number(p)}};
}

void to_json(Json& j, const HardCoreSampleStats& s) {
  j = Json{{"lambda", s.lambda}, {"steps", s.steps}, {"seed", s.seed}, {"empirical_occupancy", s.empirical_occupancy}};
}

void to_json(Json& j, const OccupancyCertificate& c) {
  Json per = Json::array();
  for (std::size_t v = 0; v < c.beta.size(); ++v) {
    Json e = {{"v", v}, {"beta", c.beta[v]}, {"gamma", c.gamma[v]}};
    if (v < c.solver_inputs.size()) {
      const auto& s = c.solver_inputs[v];
      e["solver_inputs"] = {{"d_u", s.d_u}, {"sigma", s.sigma}, {"r", s.r}, {"k", s.k}};
    }
    per.push_back(e);
  }
  j = Json{{"lambda", c.lambda},
           {"mode", mode_name(c.mode)},
           {"provenance", c.provenance == OccupancyCertificate::Provenance::Lemma45 ? "lemma45" : "manual"},
           {"vertices", per}};
}

void from_json(const Json& j, OccupancyCertificate& c) {
  try {
    c = OccupancyCertificate{};
    c.lambda = j.at("lambda").get<double>();
    const std::string mode = j.value("mode", "induced");
    require(mode == "induced" || mode == "strong", "mode induced|strong", "unknown occupancy mode '" + mode + "'");
    c.mode = mode == "strong" ? OccupancyMode::Strong : OccupancyMode::Induced;
    const auto& per = j.at("vertices");
    c.beta.assign(per.size(), 0);
    c.gamma.assign(per.size(), 0);
    std::vector<bool> seen(per.size(), false);
    bool inputs = j.value("provenance", "manual") == "lemma45";
    if (inputs) {
      c.provenance = OccupancyCertificate::Provenance::Lemma45;
      c.solver_inputs.resize(per.size());
    }
    for (const auto& e : per) {
      const std::size_t v = e.at("v").get<std::size_t>();
      require(v < per.size() && !seen[v], "vertex ids 0..n-1 once each", "bad vertex id in certificate");
      seen[v] = true;
      c.beta[v] = e.at("beta").get<double>();
      c.gamma[v] = e.at("gamma").get<double>();
      if (inputs && e.contains("solver_inputs")) {
        const auto& s = e["solver_inputs"];
        c.solver_inputs[v] = {s.at("d_u").get<double>(), s.at("sigma").get<double>(), s.at("r").get<int>(),
                              s.at("k").get<double>()};
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError("well-formed certificate", e.what());
  }
}

void to_json(Json& j, const CheckVerdict& v) {
  j = Json{{"pass", v.pass},
           {"exhaustive", v.exhaustive},
           {"worst_margin", v.worst_margin},
           {"subgraphs_checked", v.subgraphs_checked},
           {"witness", {{"vertex", v.witness_vertex}, {"mask", v.witness_mask}, {"set", vertices(v.witness_set)}}}};
  if (v.witness_edge_mask) j["witness"]["edge_mask"] = *v.witness_edge_mask;
}

void to_json(Json& j, const ZStarSolution& z) {
  j = Json{{"z", z.z}, {"omega", z.omega}, {"tau", z.tau}, {"residual", z.residual}};
}

void to_json(Json& j, const Lemma45Params& p) {
  j = Json{{"beta", p.beta},
           {"gamma", p.gamma},
           {"zstar", p.zstar},
           {"lambda", p.lambda},
           {"sigma", p.sigma},
           {"r", p.r},
           {"d_u", p.d_u},
           {"t0", p.t0},
           {"expansion", number(p.expansion)},
           {"checks",
            {{"small_t", p.small_t_ok},
             {"t0_order", p.t0_order_ok},
             {"lower_endpoint", p.lower_endpoint_ok},
             {"upper_endpoint", p.upper_endpoint_ok}}}};
}

void to_json(Json& j, const IndependentSetWitness& w) {
  Json trace = Json::array();
  for (const auto& s : w.trace)
    trace.push_back({{"r", s.r},
                     {"k", s.k},
                     {"n", s.n},
                     {"threshold", s.threshold},
                     {"high_degree", s.high_degree},
                     {"case", s.which == IsetTraceStep::Case::Turan ? "turan" : "high_degree_neighborhood"},
                     {"chosen", s.chosen},
                     {"clique_count", s.clique_count}});
  j = Json{{"size", w.size()},
           {"guarantee", w.guarantee},
           {"required", required_size(w.guarantee)},
           {"vertices", vertices(w.vertices)},
           {"trace", trace}};
}

void to_json(Json& j, const AsymptoticReference& a) {
  j = Json{{"value", number(a.value)}, {"asymptotic_reference", a.asymptotic_reference}, {"warnings", a.warnings}};
}

void to_json(Json& j, const DegreeReductionReport& r) {
  j = Json{{"average_degree", r.average_degree},
           {"k", r.k},
           {"low_degree", r.low_degree},
           {"sparse_neighborhood", r.sparse_nbhd},
           {"kept", vertices(r.kept)},
           {"kept_edges", r.subgraph.edge_count()}};
}

void to_json(Json& j, const CorrespondenceCover& c) {
  Json lists = Json::object();
  for (std::size_t v = 0; v < c.lists.size(); ++v) lists[std::to_string(v)] = c.lists[v];
  Json matchings = Json::array();
  for (const auto& [e, pairs] : c.matchings) {
    Json ps = Json::array();
    for (auto [a, b] : pairs) ps.push_back({a, b});
    matchings.push_back({{"u", e.first}, {"v", e.second}, {"pairs", ps}});
  }
  j = Json{{"lists", lists}, {"matchings", matchings}};
  if (!c.labels.empty()) {
    Json labels = Json::object();
    for (std::size_t v = 0; v < c.labels.size(); ++v) labels[std::to_string(v)] = c.labels[v];
    j["labels"] = labels;
  }
}

void from_json(const Json& j, CorrespondenceCover& c) {
  try {
    c = CorrespondenceCover{};
    const auto& lists = j.at("lists");
    c.lists.resize(lists.size());
    for (const auto& [key, ids] : lists.items())
      c.lists[vertex_key(key, lists.size())] = ids.get<std::vector<ColorId>>();
    if (j.contains("labels")) {
      c.labels.resize(lists.size());
      for (const auto& [key, vals] : j["labels"].items())
        c.labels[vertex_key(key, lists.size())] = vals.get<std::vector<std::int64_t>>();
    }
    for (const auto& m : j.at("matchings")) {
      Vertex u = m.at("u").get<Vertex>(), v = m.at("v").get<Vertex>();
      std::vector<ColorPair> pairs;
      for (const auto& p : m.at("pairs")) {
        require(p.is_array() && p.size() == 2, "pair of ids", "matching pair must have two ids");
        pairs.emplace_back(p[0].get<ColorId>(), p[1].get<ColorId>());
      }
      if (u > v) {
        std::swap(u, v);
        for (auto& p : pairs) std::swap(p.first, p.second);
      }
      auto& slot = c.matchings[{u, v}];
      slot.insert(slot.end(), pairs.begin(), pairs.end());
    }
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError("well-formed cover", e.what());
  }
}

void to_json(Json& j, const DkpsReport& r) {
  Json per = Json::array();
  for (std::size_t u = 0; u < r.list_ok.size(); ++u)
    per.push_back({{"v", u}, {"required", number(r.list_required[u])}, {"ok", static_cast<bool>(r.list_ok[u])}});
  Json z = {{"threshold", r.z_threshold}, {"ok", r.z_ok}, {"vacuous", r.z_vacuous}};
  if (r.z_witness_vertex)
    z["witness"] = {{"vertex", *r.z_witness_vertex},
                    {"set", vertices(r.z_witness_set)},
                    {"z", static_cast<double>(r.z_witness_value)}};
  j = Json{{"mode", "dkps"},
           {"max_degree", r.max_degree},
           {"ell", r.ell},
           {"lambda", r.lambda},
           {"conditions",
            {{"max_degree_at_least_64", r.delta_hypothesis},
             {"ell_exceeds_log_max_degree", r.ell_hypothesis},
             {"list_sizes", r.lists_ok},
             {"partition_function", r.z_ok},
             {"list_like", r.list_like},
             {"occupancy_mode", r.mode_ok}}},
           {"lists", per},
           {"partition_function", z},
           {"hypotheses_verified", r.hypotheses_verified},
           {"coloring_found", false}};
}

void to_json(Json& j, const BknpArithmetic& a) {
  j = Json{{"c1", a.c1},
           {"c2", a.c2},
           {"c3", a.c3},
           {"c1_lhs", a.c1_lhs},
           {"c1_rhs", a.c1_rhs},
           {"c2_rhs", a.c2_rhs},
           {"c3_log_lhs", number(a.c3_log_lhs)},
           {"c3_log_rhs", a.c3_log_rhs},
           {"c3_exact", a.c3_exact}};
}

void to_json(Json& j, const BknpReport& r) {
  Json per = Json::array();
  for (const auto& v : r.vertices) {
    Json e = {{"v", v.v},
              {"conditions", v.conditions},
              {"alpha_min", v.alpha_min ? Json(*v.alpha_min) : Json(nullptr)},
              {"list_required", number(v.list_required)},
              {"list_size", v.list_size},
              {"list_ok", v.list_ok}};
    per.push_back(e);
  }
  j = Json{{"mode", "bknp"},
           {"max_degree", r.max_degree},
           {"epsilon", r.epsilon},
           {"conditions", {{"c1", r.c1}, {"c2", r.c2}, {"c3", r.c3}, {"list_sizes", r.lists_ok}}},
           {"vertices", per},
           {"hypotheses_verified", r.hypotheses_verified},
           {"coloring_found", false}};
}

void to_json(Json& j, const ChiCEstimate& e) {
  j = Json{{"chromatic", e.chromatic},
           {"chi_c_estimate", e.estimate},
           {"samples", e.samples},
           {"lower_bound_only", e.lower_bound_only}};
}

void to_json(Json& j, const EmbeddingResult& r) {
  j = Json{{"j", r.j}, {"n", r.g_prime.n()}, {"homs", r.homs}, {"k_tilde", r.k_tilde}, {"r_tilde", r.r_tilde}};
}

void to_json(Json& j, const EmbeddingCheck& c) {
  j = Json{{"ok", c.ok}, {"failed_invariant", c.failed_invariant}, {"detail", c.detail}};
}

Json coloring_json(const ColoringAssignment& phi) {
  Json m = Json::object();
  for (std::size_t v = 0; v < phi.size(); ++v) m[std::to_string(v)] = phi[v];
  return Json{{"phi", m}};
}

ColoringAssignment coloring_from_json(const Json& j, std::size_t n) {
  try {
    ColoringAssignment phi(n, 0);
    std::vector<bool> seen(n, false);
    for (const auto& [key, c] : j.at("phi").items()) {
      const std::size_t v = vertex_key(key, n);
      phi[v] = c.get<ColorId>();
      seen[v] = true;
    }
    for (std::size_t v = 0; v < n; ++v)
      require(seen[v], "colour per vertex", "no colour for vertex " + std::to_string(v));
    return phi;
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError("well-formed coloring", e.what());
  }
}

}  // namespace lsg
