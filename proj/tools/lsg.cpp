#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "acceptance/criteria.hpp"
#include "lsg/bounds.hpp"
#include "lsg/coloring.hpp"
#include "lsg/embedding.hpp"
#include "lsg/errors.hpp"
#include "lsg/gen.hpp"
#include "lsg/graph_io.hpp"
#include "lsg/hardcore.hpp"
#include "lsg/occupancy.hpp"
#include "lsg/serialize.hpp"
#include "lsg/sparsity.hpp"

using namespace lsg;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPrecondition = 2;
constexpr int kExitVerdict = 3;

struct GraphInput {
  std::string path;
  std::string format;

  Graph load() const {
    if (path == "-") return read_graph(std::cin, format.empty() ? GraphFormat::EdgeList : parse_graph_format(format));
    return format.empty() ? read_graph_file(path) : read_graph_file(path, parse_graph_format(format));
  }
};

void add_graph(CLI::App* cmd, GraphInput& in) {
  cmd->add_option("graph", in.path, "graph file, '-' for stdin")->required();
  cmd->add_option("--format", in.format, "edgelist|dimacs|json (default: from extension)")
      ->check(CLI::IsMember({"edgelist", "dimacs", "json"}));
}

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

Json read_json_arg(const std::string& arg) {
  try {
    if (!arg.empty() && arg.front() == '{') return Json::parse(arg);
    std::ifstream f(arg);
    require(f.good(), "readable file", "cannot open " + arg);
    return Json::parse(f);
  } catch (const Json::exception& e) {
    throw PreconditionError("valid JSON", e.what());
  }
}

// "3/7", "0.125" and "2" parse exactly; anything else goes through double.
Rational parse_rational(const std::string& s) {
  static const std::regex frac(R"(^\s*(-?\d+)\s*/\s*(\d+)\s*$)");
  static const std::regex dec(R"(^\s*(-?)(\d*)(?:\.(\d*))?\s*$)");
  std::smatch m;
  if (std::regex_match(s, m, frac)) {
    const BigInt den(m[2].str());
    require(den != 0, "nonzero denominator", "bad rational " + s);
    return Rational(BigInt(m[1].str()), den);
  }
  if (std::regex_match(s, m, dec) && (m[2].length() + m[3].length()) > 0) {
    const std::string digits = m[2].str() + m[3].str();
    BigInt den = 1;
    for (long i = 0; i < m[3].length(); ++i) den *= 10;
    Rational q(BigInt(digits), den);
    return m[1].length() ? Rational(-q) : q;
  }
  try {
    std::size_t pos = 0;
    const double x = std::stod(s, &pos);
    require(pos == s.size(), "number", "bad number " + s);
    return Rational(x);
  } catch (const std::logic_error&) {
    throw PreconditionError("number", "bad number " + s);
  }
}

struct CoverInput {
  std::string file;
  std::size_t colors = 0;

  CorrespondenceCover load(const Graph& g) const {
    require(!file.empty() || colors > 0, "--cover or --colors", "a cover is required");
    if (file.empty()) {
      std::vector<std::vector<std::int64_t>> lists(g.n());
      for (auto& l : lists)
        for (std::size_t c = 0; c < colors; ++c) l.push_back(static_cast<std::int64_t>(c));
      return cover_from_lists(g, lists);
    }
    auto cover = read_json_arg(file).get<CorrespondenceCover>();
    cover.validate(g);
    return cover;
  }
};

void add_cover(CLI::App* cmd, CoverInput& in) {
  auto* f = cmd->add_option("--cover", in.file, "correspondence cover JSON");
  cmd->add_option("--colors", in.colors, "use identity lists {0..q-1} instead of a cover file")->excludes(f);
}

Json graph_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return Json{{"n", g.n()}, {"edges", edges}};
}

void write_graph(std::ostream& out, const Graph& g, const std::string& format) {
  if (format == "dimacs")
    write_dimacs(out, g);
  else if (format == "json")
    out << graph_json(g).dump() << '\n';
  else
    write_edge_list(out, g);
}

std::vector<std::uint64_t> per_vertex(const Json& j, const char* key, std::size_t n) {
  require(j.contains(key), key, std::string("params need '") + key + "'");
  const Json& x = j[key];
  if (x.is_array()) {
    require(x.size() == n, key, std::string("'") + key + "' needs one entry per vertex");
    return x.get<std::vector<std::uint64_t>>();
  }
  return std::vector<std::uint64_t>(n, x.get<std::uint64_t>());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Locally sparse graph toolkit: sparsity, hard-core occupancy, independence bounds, DP-colouring"};
  app.require_subcommand(1);
  int code = kExitOk;

  // analyze
  GraphInput analyze_in;
  double analyze_k = 0;
  int analyze_r = 0;
  auto* analyze = app.add_subcommand("analyze", "certify (k, r)-local sparsity");
  add_graph(analyze, analyze_in);
  analyze->add_option("--k", analyze_k, "clique budget per neighbourhood")->required();
  analyze->add_option("--r", analyze_r, "clique order")->required();
  analyze->callback([&] {
    const auto cert = certify_local_sparsity(analyze_in.load(), analyze_k, analyze_r);
    emit(cert);
    if (!cert.pass) code = kExitVerdict;
  });

  // polynomial
  GraphInput poly_in;
  auto* polynomial = app.add_subcommand("polynomial", "exact independence polynomial");
  add_graph(polynomial, poly_in);
  polynomial->callback([&] { emit(independence_polynomial(poly_in.load())); });

  // occupancy
  GraphInput occ_in;
  std::string occ_lambda = "1";
  std::uint64_t occ_steps = 0;
  std::optional<std::uint64_t> occ_seed;
  auto* occupancy = app.add_subcommand("occupancy", "exact occupancy fraction, optionally with a Glauber estimate");
  add_graph(occupancy, occ_in);
  occupancy->add_option("--lambda", occ_lambda, "fugacity, e.g. 1, 0.5 or 2/3");
  auto* steps_opt = occupancy->add_option("--glauber-steps", occ_steps, "also run Glauber dynamics");
  occupancy->add_option("--seed", occ_seed, "RNG seed (required with --glauber-steps)");
  occupancy->callback([&] {
    const Graph g = occ_in.load();
    const Rational lambda = parse_rational(occ_lambda);
    require(lambda > 0, "lambda > 0", "fugacity must be positive");
    Json out{{"lambda", to_string(lambda)}, {"n", g.n()}};
    if (g.n() <= kMaxPolynomialVertices) {
      const Rational occ = occupancy_fraction(independence_polynomial(g), lambda);
      out["occupancy"] = to_string(occ);
      out["occupancy_value"] = static_cast<double>(occ);
    } else {
      out["occupancy"] = nullptr;
      out["occupancy_value"] = nullptr;
    }
    if (steps_opt->count()) {
      require(occ_seed.has_value(), "--seed", "--glauber-steps needs --seed");
      out["glauber"] = glauber_sample(g, static_cast<double>(lambda), occ_steps, *occ_seed);
    }
    emit(out);
  });

  // certify
  GraphInput cert_in;
  double cert_lambda = 1, cert_sigma = 0.1, cert_beta = 0, cert_gamma = 0, cert_k = 1;
  int cert_r = 3;
  std::string cert_file;
  bool cert_strong = false, cert_induced = false, cert_auto = false;
  std::uint64_t cert_audit = 0;
  std::optional<std::uint64_t> cert_seed;
  auto* certify = app.add_subcommand("certify", "check a local occupancy certificate");
  add_graph(certify, cert_in);
  certify->add_option("--lambda", cert_lambda, "fugacity");
  certify->add_option("--sigma", cert_sigma, "closed-form slack (with --auto)");
  auto* beta_opt = certify->add_option("--beta", cert_beta, "uniform beta");
  certify->add_option("--gamma", cert_gamma, "uniform gamma")->needs(beta_opt);
  auto* file_opt = certify->add_option("--cert", cert_file, "certificate JSON")->excludes(beta_opt);
  certify->add_flag("--auto", cert_auto, "build beta, gamma from the closed forms")
                       ->excludes(beta_opt)
                       ->excludes(file_opt);
  certify->add_option("--k", cert_k, "clique budget (with --auto)");
  certify->add_option("--r", cert_r, "clique order (with --auto)");
  auto* strong_opt = certify->add_flag("--strong", cert_strong, "check every subgraph, not just induced ones");
  certify->add_flag("--induced", cert_induced, "check induced subgraphs only")->excludes(strong_opt);
  certify->add_option("--audit", cert_audit, "also run a sampled audit with this many subsets per vertex");
  certify->add_option("--seed", cert_seed, "RNG seed for --audit");
  certify->callback([&] {
    const Graph g = cert_in.load();
    OccupancyCertificate cert;
    CheckVerdict verdict;
    if (cert_auto) {
      const std::vector<int> r(g.n(), cert_r);
      const std::vector<double> k(g.n(), cert_k);
      const auto res = auto_certify(g, cert_lambda, cert_sigma, r, k, {},
                                    cert_induced ? OccupancyMode::Induced : OccupancyMode::Strong);
      cert = res.certificate;
      verdict = res.verdict;
    } else {
      if (!cert_file.empty()) {
        cert = read_json_arg(cert_file).get<OccupancyCertificate>();
        if (cert_strong) cert.mode = OccupancyMode::Strong;
        if (cert_induced) cert.mode = OccupancyMode::Induced;
      } else {
        require(beta_opt->count() > 0, "--beta, --cert or --auto", "no certificate given");
        cert = OccupancyCertificate::uniform(g.n(), cert_lambda, cert_beta, cert_gamma,
                                             cert_strong ? OccupancyMode::Strong : OccupancyMode::Induced);
      }
      verdict = check_certificate(g, cert);
    }
    Json out{{"certificate", cert}, {"verdict", verdict}};
    const double bound = certified_bound(cert, g.max_degree());
    out["certified_bound"] = bound;
    if (g.n() <= kMaxPolynomialVertices && g.n() > 0) {
      const double exact = static_cast<double>(occupancy_fraction(independence_polynomial(g), Rational(cert.lambda)));
      out["exact_occupancy"] = exact;
      out["bound_holds"] = exact >= bound - 1e-9;
    } else {
      out["exact_occupancy"] = nullptr;
      out["bound_holds"] = nullptr;
    }
    if (cert_audit > 0) {
      require(cert_seed.has_value(), "--seed", "--audit needs --seed");
      out["audit"] = check_certificate_sampled(g, cert, cert_audit, *cert_seed);
    }
    emit(out);
    if (!verdict.pass) code = kExitVerdict;
  });

  // iset
  GraphInput iset_in;
  double iset_k = 1;
  int iset_r = 2;
  auto* iset = app.add_subcommand("iset", "constructive independent set for a (k, r)-sparse graph");
  add_graph(iset, iset_in);
  iset->add_option("--k", iset_k, "number of K_r copies allowed in the whole graph")->required();
  iset->add_option("--r", iset_r, "clique order")->required();
  iset->callback([&] {
    const Graph g = iset_in.load();
    const auto w = sparse_iset(g, iset_k, iset_r);
    Json out = w;
    out["verified_independent"] = is_independent(g, w.vertices);
    emit(out);
  });

  // color
  GraphInput color_in;
  CoverInput color_cover;
  bool color_exact = false, color_heuristic = false;
  std::optional<std::uint64_t> color_seed;
  std::uint64_t color_iters = 100000;
  auto* color = app.add_subcommand("color", "find a proper colouring of a correspondence cover");
  add_graph(color, color_in);
  add_cover(color, color_cover);
  auto* exact_flag = color->add_flag("--exact", color_exact, "exhaustive search (default)");
  color->add_flag("--heuristic", color_heuristic, "greedy plus min-conflicts")->excludes(exact_flag);
  color->add_option("--seed", color_seed, "RNG seed (required with --heuristic)");
  color->add_option("--max-iters", color_iters, "repair steps for --heuristic");
  color->callback([&] {
    const Graph g = color_in.load();
    const auto cover = color_cover.load(g);
    Json out;
    std::optional<ColoringAssignment> phi;
    if (color_heuristic) {
      require(color_seed.has_value(), "--seed", "--heuristic needs --seed");
      phi = heuristic_color(g, cover, *color_seed, color_iters);
      out["method"] = "heuristic";
      out["status"] = phi ? "SAT" : "GIVE_UP";
    } else {
      SolveStats stats;
      phi = solve_exact(g, cover, &stats);
      out["method"] = "exact";
      out["status"] = phi ? "SAT" : "UNSAT";
      out["nodes"] = stats.nodes;
    }
    if (phi) {
      out["phi"] = coloring_json(*phi)["phi"];
      out["verified"] = is_proper(g, cover, *phi);
    }
    emit(out);
    if (!phi) code = kExitVerdict;
  });

  // conditions
  GraphInput cond_in;
  CoverInput cond_cover;
  std::string cond_mode, cond_params = "{}";
  auto* conditions = app.add_subcommand("conditions", "check the hypotheses of a DP-colouring theorem");
  add_graph(conditions, cond_in);
  add_cover(conditions, cond_cover);
  conditions->add_option("--mode", cond_mode, "dkps|bknp")->required()->check(CLI::IsMember({"dkps", "bknp"}));
  conditions->add_option("--params", cond_params, "JSON object or file with the theorem parameters");
  conditions->callback([&] {
    const Graph g = cond_in.load();
    const auto cover = cond_cover.load(g);
    const Json p = read_json_arg(cond_params);
    Json out;
    bool verified = false;
    try {
      if (cond_mode == "dkps") {
        OccupancyCertificate cert;
        if (p.contains("certificate"))
          cert = p["certificate"].get<OccupancyCertificate>();
        else
          cert = OccupancyCertificate::uniform(g.n(), p.value("lambda", 1.0), p.at("beta").get<double>(),
                                               p.at("gamma").get<double>());
        double ell = 0;
        if (p.contains("ell"))
          ell = p["ell"].get<double>();
        else
          ell = dkps_ell(p.at("k_max").get<double>(), p.at("r_max").get<int>(),
                         static_cast<double>(g.max_degree()), cert.lambda);
        const auto rep = dkps_condition_check(g, cover, cert, ell);
        const auto check = check_certificate(g, cert);
        out = rep;
        out["certificate_verdict"] = check;
        verified = rep.hypotheses_verified && check.pass;
      } else {
        const auto ell = per_vertex(p, "ell", g.n());
        const auto t = per_vertex(p, "t", g.n());
        const auto rep = bknp_condition_check(g, cover, p.at("epsilon").get<double>(), ell, t);
        out = rep;
        verified = rep.hypotheses_verified;
      }
    } catch (const Json::exception& e) {
      throw PreconditionError("valid params", e.what());
    }
    emit(out);
    if (!verified) code = kExitVerdict;
  });

  // embed
  GraphInput embed_in;
  std::size_t embed_delta = 0;
  double embed_k = 1;
  int embed_r = 2;
  std::string embed_out;
  auto* embed = app.add_subcommand("embed", "raise the minimum degree by doubling");
  add_graph(embed, embed_in);
  embed->add_option("--delta", embed_delta, "target minimum degree")->required();
  embed->add_option("--k", embed_k, "uniform clique budget carried to G'");
  embed->add_option("--r", embed_r, "uniform clique order carried to G'");
  embed->add_option("-o,--output", embed_out, "write PREFIX.edges and PREFIX.json");
  embed->callback([&] {
    const Graph g = embed_in.load();
    const std::vector<double> k(g.n(), embed_k);
    const std::vector<int> r(g.n(), embed_r);
    const auto res = min_degree_boost(g, embed_delta, k, r);
    Json out = res;
    out["check"] = verify_embedding(g, res, embed_delta);
    out["graph"] = graph_json(res.g_prime);
    if (!embed_out.empty()) {
      std::ofstream edges(embed_out + ".edges");
      std::ofstream js(embed_out + ".json");
      require(edges.good() && js.good(), "writable output", "cannot write " + embed_out + ".*");
      write_edge_list(edges, res.g_prime);
      js << out.dump(2) << '\n';
    }
    emit(out);
  });

  // gen
  std::string gen_family, gen_out, gen_format = "edgelist";
  std::vector<double> gen_params;
  std::optional<std::uint64_t> gen_seed;
  auto* gen_cmd = app.add_subcommand("gen", "generate a graph");
  gen_cmd
      ->add_option("family", gen_family,
                   "path|cycle|complete|empty|star|petersen|kneser|multipartite|gnp|triangle-free|locally-sparse")
      ->required();
  gen_cmd->add_option("--params", gen_params, "comma-separated numeric parameters")->delimiter(',');
  gen_cmd->add_option("--seed", gen_seed, "RNG seed (required for random families)");
  gen_cmd->add_option("-o,--output", gen_out, "output file (default stdout)");
  gen_cmd->add_option("--format", gen_format, "edgelist|dimacs|json")
      ->check(CLI::IsMember({"edgelist", "dimacs", "json"}));
  gen_cmd->callback([&] {
    auto need = [&](std::size_t count) {
      require(gen_params.size() == count, "parameter count",
              gen_family + " takes " + std::to_string(count) + " parameters");
    };
    auto count = [](double x) {
      require(x >= 0 && x == static_cast<double>(static_cast<std::size_t>(x)), "integral parameter",
              "expected a nonnegative integer");
      return static_cast<std::size_t>(x);
    };
    auto seed = [&] {
      require(gen_seed.has_value(), "--seed", gen_family + " is random and needs --seed");
      return *gen_seed;
    };
    Graph g;
    if (gen_family == "gnp") {
      need(2);
      g = gen::gnp(count(gen_params[0]), gen_params[1], seed());
    } else if (gen_family == "triangle-free") {
      need(2);
      g = gen::random_triangle_free(count(gen_params[0]), count(gen_params[1]), seed());
    } else if (gen_family == "locally-sparse") {
      need(4);
      g = gen::random_locally_sparse(count(gen_params[0]), count(gen_params[1]), gen_params[2],
                                     static_cast<int>(count(gen_params[3])), seed());
    } else {
      std::vector<std::size_t> ps;
      for (double x : gen_params) ps.push_back(count(x));
      g = gen::family(gen_family, ps);
    }
    if (gen_out.empty()) {
      write_graph(std::cout, g, gen_format);
    } else {
      std::ofstream f(gen_out);
      require(f.good(), "writable output", "cannot write " + gen_out);
      write_graph(f, g, gen_format);
    }
  });

  // bench
  std::string bench_suite = "acceptance";
  std::vector<int> bench_only;
  auto* bench = app.add_subcommand("bench", "run a benchmark suite and print a pass/fail table");
  bench->add_option("--suite", bench_suite, "suite name")->check(CLI::IsMember({"acceptance"}));
  bench->add_option("--only", bench_only, "criterion ids")->delimiter(',');
  bench->callback([&] {
    bool all = true;
    for (const auto& o : acceptance::run(bench_only)) {
      std::cout << acceptance::format(o) << std::endl;
      all = all && o.pass;
    }
    if (!all) code = kExitVerdict;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitPrecondition;
  } catch (const PreconditionError& e) {
    std::cerr << Json{{"error", "precondition"}, {"condition", e.condition()}, {"message", e.what()}}.dump()
              << '\n';
    return kExitPrecondition;
  } catch (const InvariantError& e) {
    std::cerr << Json{{"error", "invariant"}, {"message", e.what()}}.dump() << '\n';
    return 1;
  }
  return code;
}
