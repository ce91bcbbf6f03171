#include "lsg/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "lsg/errors.hpp"

namespace lsg {

namespace {

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  throw PreconditionError("well-formed input", "line " + std::to_string(line) + ": " + what);
}

}  // namespace

GraphFormat parse_graph_format(const std::string& name) {
  if (name == "edgelist") return GraphFormat::EdgeList;
  if (name == "dimacs") return GraphFormat::Dimacs;
  if (name == "json") return GraphFormat::Json;
  throw PreconditionError("known format", "unknown graph format '" + name + "'");
}

GraphFormat guess_graph_format(const std::string& path) {
  auto ends_with = [&](const std::string& suffix) {
    return path.size() >= suffix.size() &&
           path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  if (ends_with(".col") || ends_with(".dimacs")) return GraphFormat::Dimacs;
  if (ends_with(".json")) return GraphFormat::Json;
  return GraphFormat::EdgeList;
}

Graph read_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  std::size_t declared = 0;
  bool has_declared = false;
  std::size_t max_id = 0;
  bool any = false;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) {
      std::istringstream comment(line.substr(hash + 1));
      std::string key;
      std::size_t value = 0;
      if (comment >> key && key == "vertices:" && comment >> value) {
        declared = value;
        has_declared = true;
      }
      line.erase(hash);
    }
    std::istringstream ls(line);
    long long u = 0, v = 0;
    if (!(ls >> u)) continue;
    if (!(ls >> v)) parse_error(lineno, "expected two vertex ids");
    std::string rest;
    if (ls >> rest) parse_error(lineno, "trailing token '" + rest + "'");
    if (u < 0 || v < 0) parse_error(lineno, "negative vertex id");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    max_id = std::max<std::size_t>(max_id, static_cast<std::size_t>(std::max(u, v)));
    any = true;
  }
  std::size_t n = any ? max_id + 1 : 0;
  if (has_declared) {
    require(declared >= n, "declared vertex count covers ids",
            "'# vertices:' smaller than the largest vertex id");
    n = declared;
  }
  return Graph(n, edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "# vertices: " << g.n() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph read_dimacs(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::optional<Graph> g;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag == "c") continue;
    if (tag == "p") {
      std::string kind;
      std::size_t n = 0, m = 0;
      if (!(ls >> kind >> n >> m)) parse_error(lineno, "malformed problem line");
      g.emplace(n);
    } else if (tag == "e") {
      if (!g) parse_error(lineno, "edge before problem line");
      long long u = 0, v = 0;
      if (!(ls >> u >> v)) parse_error(lineno, "malformed edge line");
      if (u < 1 || v < 1 || static_cast<std::size_t>(u) > g->n() ||
          static_cast<std::size_t>(v) > g->n())
        parse_error(lineno, "vertex id out of range (DIMACS ids are 1-indexed)");
      g->add_edge(static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1));
    } else {
      parse_error(lineno, "unknown line tag '" + tag + "'");
    }
  }
  if (!g) throw PreconditionError("well-formed input", "DIMACS input has no problem line");
  return std::move(*g);
}

void write_dimacs(std::ostream& out, const Graph& g) {
  out << "p edge " << g.n() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
}

Graph read_graph_json(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
    Graph g(j.at("n").get<std::size_t>());
    for (const auto& e : j.at("edges")) g.add_edge(e.at(0).get<Vertex>(), e.at(1).get<Vertex>());
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw PreconditionError("well-formed input", std::string("graph JSON: ") + e.what());
  }
}

Graph read_graph(std::istream& in, GraphFormat format) {
  switch (format) {
    case GraphFormat::EdgeList: return read_edge_list(in);
    case GraphFormat::Dimacs: return read_dimacs(in);
    case GraphFormat::Json: return read_graph_json(in);
  }
  return {};
}

Graph read_graph_file(const std::string& path, GraphFormat format) {
  std::ifstream in(path);
  require(static_cast<bool>(in), "readable file", "cannot open '" + path + "'");
  return read_graph(in, format);
}

Graph read_graph_file(const std::string& path) {
  return read_graph_file(path, guess_graph_format(path));
}

}  // namespace lsg
