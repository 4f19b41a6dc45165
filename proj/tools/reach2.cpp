#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "reach2/applications.hpp"
#include "reach2/closure.hpp"
#include "reach2/error.hpp"
#include "reach2/generators.hpp"
#include "reach2/io.hpp"
#include "reach2/oracle.hpp"

namespace {

using namespace reach2;
using json = nlohmann::json;

constexpr int kUserError = 2;
constexpr int kInternalError = 3;
constexpr int kRejected = 1;

// Reads `path` ("-" for stdin) into memory.
std::string slurp(const std::string& path) {
  if (path == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Digraph load_graph(const std::string& path) {
  std::istringstream in(slurp(path));
  return parse_graph(in);
}

Vertex external_id(long long id, std::size_t n, const char* what) {
  if (id < 1 || static_cast<unsigned long long>(id) > n) {
    throw QueryError(std::string(what) + " " + std::to_string(id) + " out of range 1.." +
                     std::to_string(n));
  }
  return static_cast<Vertex>(id - 1);
}

std::string ext(Vertex v) { return std::to_string(std::uint64_t{v} + 1); }

Flavor flavor_from(const std::string& name) { return parse_flavor(name); }

struct ClosureOptions {
  std::string input;
  bool vertex = false;
  std::string flavor = "generic";
  std::string format = "text";
};

void add_closure_flags(CLI::App* cmd, ClosureOptions& o) {
  cmd->add_option("input", o.input, "Graph file, or - for stdin")->required();
  cmd->add_flag("--vertex-disjoint", o.vertex, "Internally vertex-disjoint variant");
  cmd->add_option("--flavor", o.flavor, "Witness choice")
      ->check(CLI::IsMember({"generic", "left", "right"}));
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
}

void emit_closure(const Digraph& g, const ClosureOptions& o, bool use_oracle) {
  const Flavor flavor = flavor_from(o.flavor);
  if (o.vertex) {
    VertexClosure c(g.num_vertices());
    if (use_oracle) {
      for (Vertex u = 0; u < g.num_vertices(); ++u) {
        for (Vertex v = 0; v < g.num_vertices(); ++v) {
          if (u == v) {
            c.at(u, v) = VertexWitness::top();
            continue;
          }
          const auto s = oracle::vertex_separators(g, u, v);
          using K = oracle::VertexSeparatorEntry::Kind;
          c.at(u, v) = s.kind == K::Unreachable      ? VertexWitness::bot()
                       : s.kind == K::TwoVertexReach ? VertexWitness::top()
                       : flavor == Flavor::RightCanonical ? s.sequence.back()
                       : !s.vertices.empty() && flavor == Flavor::Generic
                           ? VertexWitness::cut_vertex(s.vertices.front())
                           : s.sequence.front();
        }
      }
    } else {
      c = two_vertex_closure(g, flavor);
    }
    std::cout << (o.format == "json" ? format_vertex_closure_json(c, flavor)
                                     : format_vertex_closure_text(c));
    return;
  }
  const ClosureMatrix c = use_oracle ? oracle::closure(g, flavor) : closure(g, flavor);
  std::cout << (o.format == "json" ? format_closure_json(c) : format_closure_text(c));
}

int run_closure(const ClosureOptions& o) {
  emit_closure(load_graph(o.input), o, false);
  return 0;
}

int run_oracle(const ClosureOptions& o, const std::optional<std::string>& validate) {
  if (validate && *validate == "-" && o.input == "-") {
    throw PreconditionError("graph and closure cannot both come from stdin");
  }
  const Digraph g = load_graph(o.input);
  if (!validate) {
    emit_closure(g, o, true);
    return 0;
  }
  std::istringstream in(slurp(*validate));
  oracle::Verdict verdict;
  if (o.vertex) {
    const VertexClosure c = parse_vertex_closure(in);
    verdict = oracle::validate_vertex_closure(g, c, flavor_from(o.flavor));
  } else {
    ClosureMatrix c = parse_closure(in);
    // Text closures carry no flavor; --flavor supplies it.
    if (c.flavor() == Flavor::Generic) c = ClosureMatrix(c.cells(), flavor_from(o.flavor));
    verdict = oracle::validate_closure(g, c);
  }
  if (verdict.ok) {
    std::cout << "OK\n";
    return 0;
  }
  std::cout << "FAIL " << verdict.message << "\n";
  return kRejected;
}

struct DomtreeOptions {
  std::string input;
  std::optional<long long> source;
  bool all = false;
  std::string kind = "vertex";
};

void print_vertex_tree(const DomTree& t) {
  for (Vertex v = 0; v < t.num_vertices(); ++v) {
    if (v == t.source()) continue;
    const auto p = t.parent(v);
    std::cout << ext(v) << ' ' << (p ? ext(*p) : "-") << '\n';
  }
}

void print_edge_tree(const EdgeDomTree& t) {
  for (Vertex v = 0; v < t.num_vertices(); ++v) {
    if (v == t.source()) continue;
    if (!t.reachable(v)) {
      std::cout << ext(v) << " - -\n";
      continue;
    }
    const Vertex r = t.root(v);
    const auto up = t.contracted_parent(r);
    std::cout << ext(v) << ' ' << ext(r) << ' ' << (up ? ext(*up) : "-") << '\n';
  }
}

int run_domtree(const DomtreeOptions& o) {
  if (o.all == o.source.has_value()) throw PreconditionError("give exactly one of --source, --all");
  const Digraph g = load_graph(o.input);
  const std::size_t n = g.num_vertices();
  std::vector<Vertex> sources;
  if (o.all) {
    for (Vertex s = 0; s < n; ++s) sources.push_back(s);
  } else {
    sources.push_back(external_id(*o.source, n, "source"));
  }
  if (o.kind == "vertex") {
    const auto trees = all_vertex_dominator_trees(g);
    for (Vertex s : sources) {
      if (o.all) std::cout << "# source " << ext(s) << '\n';
      print_vertex_tree(trees[s]);
    }
  } else {
    const auto trees = all_edge_dominator_trees(closure(g, Flavor::RightCanonical));
    for (Vertex s : sources) {
      if (o.all) std::cout << "# source " << ext(s) << '\n';
      print_edge_tree(trees[s]);
    }
  }
  return 0;
}

struct QueryOptions {
  std::string input;
  long long from = 0;
  long long to = 0;
  std::optional<std::string> avoid_edge;
  std::optional<long long> avoid_vertex;
  std::optional<long long> junction;
  bool vertex = false;
};

Edge parse_edge_arg(const std::string& text, std::size_t n) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw QueryError("--avoid-edge expects x,y");
  try {
    std::size_t used = 0;
    const long long x = std::stoll(text.substr(0, comma), &used);
    if (used != comma) throw QueryError("--avoid-edge expects x,y");
    const std::string tail = text.substr(comma + 1);
    const long long y = std::stoll(tail, &used);
    if (used != tail.size()) throw QueryError("--avoid-edge expects x,y");
    return {external_id(x, n, "edge tail"), external_id(y, n, "edge head")};
  } catch (const std::logic_error&) {
    throw QueryError("--avoid-edge expects x,y");
  }
}

int run_query(const QueryOptions& o) {
  const int kinds = o.avoid_edge.has_value() + o.avoid_vertex.has_value() + o.junction.has_value();
  if (kinds > 1) throw PreconditionError("conflicting query kinds");
  if (kinds == 1 && o.vertex) throw PreconditionError("--vertex-disjoint applies to plain queries");
  const Digraph g = load_graph(o.input);
  const std::size_t n = g.num_vertices();
  const Vertex u = external_id(o.from, n, "--from");
  const Vertex v = external_id(o.to, n, "--to");
  auto yes_no = [](bool b) { return b ? "YES" : "NO"; };

  if (o.avoid_edge) {
    const Edge e = parse_edge_arg(*o.avoid_edge, n);
    const auto trees = all_edge_dominator_trees(closure(g, Flavor::RightCanonical));
    std::cout << yes_no(avoid_edge_query(trees, u, v, e)) << '\n';
  } else if (o.avoid_vertex) {
    const Vertex w = external_id(*o.avoid_vertex, n, "--avoid-vertex");
    const auto trees = all_vertex_dominator_trees(g);
    std::cout << yes_no(avoid_vertex_query(trees, u, v, w)) << '\n';
  } else if (o.junction) {
    const Vertex s = external_id(*o.junction, n, "--junction");
    const auto trees = all_vertex_dominator_trees(g);
    std::cout << yes_no(junction_test(trees, s, u, v)) << '\n';
  } else if (o.vertex) {
    const VertexWitness w = two_vertex_closure(g).at(u, v);
    std::cout << yes_no(w.kind() == VertexWitness::Kind::Top) << ' ' << to_string(w) << '\n';
  } else {
    const TwoReach cell = query(closure(g), u, v);
    std::cout << yes_no(cell.is_top()) << ' ' << to_string(cell) << '\n';
  }
  return 0;
}

int run_critical(const std::string& input, const std::string& kind, const std::string& format) {
  const ConnectivityIndex idx(load_graph(input));
  const bool as_json = format == "json";
  if (kind == "node") {
    const NodeCriticality r = critical_node(idx.vertex_trees());
    if (as_json) {
      std::cout << json{{"kind", "node"}, {"best", r.best + 1}, {"values", r.value}}.dump() << '\n';
      return 0;
    }
    for (Vertex v = 0; v < r.value.size(); ++v) std::cout << ext(v) << ' ' << r.value[v] << '\n';
    std::cout << "best " << ext(r.best) << ' ' << r.value[r.best] << '\n';
    return 0;
  }
  const EdgeCriticality r = critical_edge(idx.graph(), idx.edge_trees());
  if (as_json) {
    json rows = json::array();
    for (std::size_t i = 0; i < r.edges.size(); ++i) {
      rows.push_back({{"edge", {r.edges[i].tail + 1, r.edges[i].head + 1}},
                      {"loss", r.loss[i]},
                      {"value", r.value[i]}});
    }
    json doc{{"kind", "edge"}, {"edges", rows}, {"best", nullptr}};
    if (r.best) doc["best"] = {r.best->tail + 1, r.best->head + 1};
    std::cout << doc.dump() << '\n';
    return 0;
  }
  for (std::size_t i = 0; i < r.edges.size(); ++i) {
    std::cout << to_string(TwoReach::edge(r.edges[i])) << ' ' << r.loss[i] << ' ' << r.value[i]
              << '\n';
  }
  if (r.best) {
    const auto i = static_cast<std::size_t>(
        std::lower_bound(r.edges.begin(), r.edges.end(), *r.best) - r.edges.begin());
    std::cout << "best " << to_string(TwoReach::edge(*r.best)) << ' ' << r.loss[i] << ' '
              << r.value[i] << '\n';
  } else {
    std::cout << "best -\n";
  }
  return 0;
}

int run_junctions(const std::string& input, long long u, long long v) {
  const Digraph g = load_graph(input);
  const auto trees = all_vertex_dominator_trees(g);
  const auto list = junctions_report(trees, external_id(u, g.num_vertices(), "--u"),
                                     external_id(v, g.num_vertices(), "--v"));
  for (std::size_t i = 0; i < list.size(); ++i) std::cout << (i ? " " : "") << ext(list[i]);
  std::cout << '\n';
  return 0;
}

struct BenchOptions {
  std::string family = "random-dag";
  std::vector<std::size_t> sizes{64, 128, 256};
  std::uint64_t seed = 1;
  double density = 0.5;
};

int run_bench(const BenchOptions& o) {
  std::cout << "n,m,stage,millis\n";
  for (std::size_t n : o.sizes) {
    if (n == 0) throw PreconditionError("sizes must be positive");
    Digraph g;
    if (o.family == "random-dag") {
      g = gen::random_dag(n, o.density, o.seed);
    } else if (o.family == "random-scc") {
      g = gen::random_strongly_connected(n, o.density, o.seed);
    } else {
      g = gen::layered(n, std::max<std::size_t>(2, n / 16), o.density, o.seed);
    }
    auto timed = [&](const char* stage, auto&& fn) {
      const auto t0 = std::chrono::steady_clock::now();
      auto result = fn();
      const std::chrono::duration<double, std::milli> dt = std::chrono::steady_clock::now() - t0;
      std::cout << n << ',' << g.num_edges() << ',' << stage << ',' << dt.count() << '\n';
      return result;
    };
    const ClosureMatrix c = timed("closure", [&] { return closure(g); });
    const ClosureMatrix r = timed("recover", [&] { return recover(c, Side::Right); });
    timed("edge_trees", [&] { return all_edge_dominator_trees(r); });
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"2-reachability closures and connectivity queries"};
  app.require_subcommand(1);

  ClosureOptions closure_opts;
  auto* closure_cmd = app.add_subcommand("closure", "Print the 2-reachability closure");
  add_closure_flags(closure_cmd, closure_opts);

  ClosureOptions oracle_opts;
  std::optional<std::string> validate;
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force closure or closure validation");
  add_closure_flags(oracle_cmd, oracle_opts);
  oracle_cmd->add_option("--validate", validate, "Closure file to check, or -");

  DomtreeOptions dom_opts;
  auto* dom_cmd = app.add_subcommand("domtree", "Print dominator or edge-dominator trees");
  dom_cmd->add_option("input", dom_opts.input, "Graph file, or -")->required();
  dom_cmd->add_option("--source", dom_opts.source, "1-based source vertex");
  dom_cmd->add_flag("--all", dom_opts.all, "Every source");
  dom_cmd->add_option("--kind", dom_opts.kind)->check(CLI::IsMember({"vertex", "edge"}));

  QueryOptions q;
  auto* query_cmd = app.add_subcommand("query", "Answer one connectivity query");
  query_cmd->add_option("input", q.input, "Graph file, or -")->required();
  query_cmd->add_option("--from", q.from)->required();
  query_cmd->add_option("--to", q.to)->required();
  query_cmd->add_option("--avoid-edge", q.avoid_edge, "x,y");
  query_cmd->add_option("--avoid-vertex", q.avoid_vertex);
  query_cmd->add_option("--junction", q.junction, "Is this vertex a junction of from/to?");
  query_cmd->add_flag("--vertex-disjoint", q.vertex);

  std::string crit_input;
  std::string crit_kind = "node";
  std::string crit_format = "text";
  auto* crit_cmd = app.add_subcommand("critical", "Most critical node or edge");
  crit_cmd->add_option("input", crit_input, "Graph file, or -")->required();
  crit_cmd->add_option("--kind", crit_kind)->check(CLI::IsMember({"node", "edge"}));
  crit_cmd->add_option("--format", crit_format)->check(CLI::IsMember({"text", "json"}));

  std::string junc_input;
  long long junc_u = 0;
  long long junc_v = 0;
  auto* junc_cmd = app.add_subcommand("junctions", "All junctions of a vertex pair");
  junc_cmd->add_option("input", junc_input, "Graph file, or -")->required();
  junc_cmd->add_option("--u", junc_u)->required();
  junc_cmd->add_option("--v", junc_v)->required();

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time the pipeline on generated graphs");
  bench_cmd->add_option("--family", bench.family)
      ->check(CLI::IsMember({"random-dag", "random-scc", "layered"}));
  bench_cmd->add_option("--sizes", bench.sizes)->delimiter(',');
  bench_cmd->add_option("--seed", bench.seed);
  bench_cmd->add_option("--density", bench.density)->check(CLI::Range(0.0, 1.0));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUserError;
  }

  try {
    if (*closure_cmd) return run_closure(closure_opts);
    if (*oracle_cmd) return run_oracle(oracle_opts, validate);
    if (*dom_cmd) return run_domtree(dom_opts);
    if (*query_cmd) return run_query(q);
    if (*crit_cmd) return run_critical(crit_input, crit_kind, crit_format);
    if (*junc_cmd) return run_junctions(junc_input, junc_u, junc_v);
    if (*bench_cmd) return run_bench(bench);
  } catch (const InvariantError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternalError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUserError;
  }
  return kUserError;
}
