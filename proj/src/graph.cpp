#include "reach2/graph.hpp"

#include <algorithm>
#include <istream>
#include <iterator>
#include <sstream>
#include <string>
#include <unordered_set>

#include <json.hpp>

#include "reach2/error.hpp"

namespace reach2 {

namespace {

void build_csr(std::size_t n, std::span<const Edge> sorted_edges, bool by_tail,
               std::vector<std::uint32_t>& offset, std::vector<Vertex>& targets) {
  offset.assign(n + 1, 0);
  targets.resize(sorted_edges.size());
  for (const Edge& e : sorted_edges) ++offset[(by_tail ? e.tail : e.head) + 1];
  for (std::size_t v = 0; v < n; ++v) offset[v + 1] += offset[v];
  std::vector<std::uint32_t> cursor(offset.begin(), offset.end() - 1);
  for (const Edge& e : sorted_edges) {
    const Vertex key = by_tail ? e.tail : e.head;
    targets[cursor[key]++] = by_tail ? e.head : e.tail;
  }
}

}  // namespace

Digraph::Digraph(std::size_t n)
    : n_(n), out_offset_(n + 1, 0), in_offset_(n + 1, 0) {}

Digraph Digraph::from_edges(std::size_t n, std::span<const Edge> edges,
                            std::size_t* duplicates) {
  std::vector<Edge> sorted(edges.begin(), edges.end());
  for (const Edge& e : sorted) {
    if (e.tail >= n || e.head >= n) {
      throw PreconditionError("edge endpoint out of range");
    }
    if (e.tail == e.head) throw PreconditionError("self-loops are not supported");
  }
  std::sort(sorted.begin(), sorted.end());
  const auto last = std::unique(sorted.begin(), sorted.end());
  if (duplicates != nullptr) {
    *duplicates = static_cast<std::size_t>(std::distance(last, sorted.end()));
  }
  sorted.erase(last, sorted.end());

  Digraph g;
  g.n_ = n;
  // Sorted by (tail, head) so both CSR passes produce ascending lists.
  build_csr(n, sorted, true, g.out_offset_, g.heads_);
  build_csr(n, sorted, false, g.in_offset_, g.tails_);
  return g;
}

bool Digraph::has_edge(Vertex tail, Vertex head) const noexcept {
  if (tail >= n_ || head >= n_) return false;
  const auto adj = out(tail);
  return std::binary_search(adj.begin(), adj.end(), head);
}

std::vector<Edge> Digraph::edges() const {
  std::vector<Edge> result;
  result.reserve(num_edges());
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : out(u)) result.push_back({u, v});
  }
  return result;
}

Digraph Digraph::reversed() const {
  std::vector<Edge> rev;
  rev.reserve(num_edges());
  for (const Edge& e : edges()) rev.push_back(e.reversed());
  return from_edges(n_, rev);
}

Digraph Digraph::permuted(std::span<const Vertex> order) const {
  if (order.size() != n_) throw PreconditionError("permutation has wrong size");
  std::vector<Vertex> position(n_, kNoVertex);
  for (Vertex i = 0; i < n_; ++i) {
    if (order[i] >= n_ || position[order[i]] != kNoVertex) {
      throw PreconditionError("order is not a permutation");
    }
    position[order[i]] = i;
  }
  std::vector<Edge> relabeled;
  relabeled.reserve(num_edges());
  for (const Edge& e : edges()) relabeled.push_back({position[e.tail], position[e.head]});
  return from_edges(n_, relabeled);
}

Digraph Digraph::induced_range(Vertex lo, Vertex hi) const {
  if (lo > hi || hi > n_) throw PreconditionError("invalid vertex range");
  std::vector<Edge> inner;
  for (Vertex u = lo; u < hi; ++u) {
    for (Vertex v : out(u)) {
      if (v >= lo && v < hi) inner.push_back({u - lo, v - lo});
    }
  }
  return from_edges(hi - lo, inner);
}

SccDecomposition scc_decompose(const Digraph& g) {
  const std::size_t n = g.num_vertices();
  constexpr std::uint32_t kUnvisited = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> index(n, kUnvisited);
  std::vector<std::uint32_t> low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<Vertex> stack;
  // Explicit DFS frames: (vertex, next out-neighbour position).
  std::vector<std::pair<Vertex, std::uint32_t>> frames;
  std::vector<std::vector<Vertex>> emitted;  // reverse topological order
  std::uint32_t next_index = 0;

  for (Vertex root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    frames.push_back({root, 0});
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      auto& [v, pos] = frames.back();
      const auto adj = g.out(v);
      if (pos < adj.size()) {
        const Vertex w = adj[pos++];
        if (index[w] == kUnvisited) {
          index[w] = low[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          frames.push_back({w, 0});
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      const Vertex done = v;
      frames.pop_back();
      if (!frames.empty()) {
        const Vertex parent = frames.back().first;
        low[parent] = std::min(low[parent], low[done]);
      }
      if (low[done] == index[done]) {
        std::vector<Vertex> comp;
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.push_back(w);
        } while (w != done);
        std::sort(comp.begin(), comp.end());
        emitted.push_back(std::move(comp));
      }
    }
  }

  SccDecomposition d;
  d.comp_id.assign(n, 0);
  d.order.reserve(n);
  d.comp_start.reserve(emitted.size() + 1);
  std::uint32_t c = 0;
  for (auto it = emitted.rbegin(); it != emitted.rend(); ++it, ++c) {
    d.comp_start.push_back(static_cast<std::uint32_t>(d.order.size()));
    for (Vertex v : *it) {
      d.comp_id[v] = c;
      d.order.push_back(v);
    }
  }
  d.comp_start.push_back(static_cast<std::uint32_t>(d.order.size()));
  return d;
}

bool is_strongly_connected(const Digraph& g) {
  return g.num_vertices() > 0 && scc_decompose(g).num_components() == 1;
}

bool is_acyclic(const Digraph& g) {
  return scc_decompose(g).num_components() == g.num_vertices();
}

std::vector<bool> reachable_set(const Digraph& g, Vertex s,
                                std::optional<Edge> banned_edge,
                                std::optional<Vertex> banned_vertex) {
  if (s >= g.num_vertices()) throw QueryError("source out of range");
  if (banned_vertex && *banned_vertex == s) {
    throw PreconditionError("banned vertex equals the source");
  }
  std::vector<bool> seen(g.num_vertices(), false);
  if (banned_vertex && *banned_vertex < g.num_vertices()) seen[*banned_vertex] = true;
  std::vector<Vertex> queue{s};
  seen[s] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex v : g.out(u)) {
      if (seen[v]) continue;
      if (banned_edge && banned_edge->tail == u && banned_edge->head == v) continue;
      seen[v] = true;
      queue.push_back(v);
    }
  }
  if (banned_vertex && *banned_vertex < g.num_vertices()) seen[*banned_vertex] = false;
  return seen;
}

SplitGraph split_vertices(const Digraph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<Edge> edges;
  edges.reserve(n + g.num_edges());
  for (Vertex v = 0; v < n; ++v) {
    edges.push_back({SplitGraph::in_copy(v), SplitGraph::out_copy(v)});
  }
  for (const Edge& e : g.edges()) {
    edges.push_back({SplitGraph::out_copy(e.tail), SplitGraph::in_copy(e.head)});
  }
  return {Digraph::from_edges(2 * n, edges)};
}

HatGadget hat_gadget(const Digraph& dag) {
  if (!is_acyclic(dag)) throw PreconditionError("hat gadget requires a DAG");
  const std::size_t n = dag.num_vertices();
  const auto s = static_cast<Vertex>(n);
  const auto t = static_cast<Vertex>(n + 1);
  std::vector<Edge> edges = dag.edges();
  edges.push_back({s, t});
  for (Vertex v = 0; v < n; ++v) {
    edges.push_back({v, s});
    edges.push_back({t, v});
  }
  return {Digraph::from_edges(n + 2, edges), s, t};
}

namespace {

// Parses one unsigned integer token; rejects signs and trailing garbage.
bool parse_uint(const std::string& token, std::uint64_t& out) {
  if (token.empty() || token.size() > 18) return false;
  out = 0;
  for (char ch : token) {
    if (ch < '0' || ch > '9') return false;
    out = out * 10 + static_cast<std::uint64_t>(ch - '0');
  }
  return true;
}

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream ss(line);
  return {std::istream_iterator<std::string>(ss), std::istream_iterator<std::string>()};
}

// Tracks ordered pairs already read so repeats are reported where they occur.
class PairSet {
 public:
  bool insert(Edge e) { return seen_.insert((std::uint64_t{e.tail} << 32) | e.head).second; }

 private:
  std::unordered_set<std::uint64_t> seen_;
};

constexpr std::uint64_t kMaxVertices = 1u << 26;

}  // namespace

Digraph parse_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  bool have_header = false;
  std::vector<Edge> edges;
  PairSet seen;

  while (std::getline(in, line)) {
    ++line_no;
    const auto tokens = split_ws(line);
    if (tokens.empty()) continue;
    if (tokens.size() != 2) throw ParseError(line_no, "expected two integers");
    std::uint64_t a = 0;
    std::uint64_t b = 0;
    if (!parse_uint(tokens[0], a) || !parse_uint(tokens[1], b)) {
      throw ParseError(line_no, "malformed integer");
    }
    if (!have_header) {
      if (a < 1) throw ParseError(line_no, "vertex count must be at least 1");
      if (a > kMaxVertices) throw ParseError(line_no, "vertex count too large");
      n = a;
      m = b;
      have_header = true;
      edges.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(m, 1u << 24)));
      continue;
    }
    if (edges.size() == m) throw ParseError(line_no, "more edge lines than declared");
    if (a < 1 || a > n || b < 1 || b > n) throw ParseError(line_no, "vertex id out of range");
    if (a == b) throw ParseError(line_no, "self-loop");
    const Edge e{static_cast<Vertex>(a - 1), static_cast<Vertex>(b - 1)};
    if (!seen.insert(e)) throw ParseError(line_no, "parallel edge");
    edges.push_back(e);
  }
  if (!have_header) throw ParseError(line_no, "missing header line");
  if (edges.size() != m) {
    throw ParseError(line_no, "expected " + std::to_string(m) + " edges, found " +
                                  std::to_string(edges.size()));
  }
  return Digraph::from_edges(static_cast<std::size_t>(n), edges);
}

Digraph parse_graph_json(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(0, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc["n"].is_number_unsigned()) {
    throw ParseError(0, "JSON graph needs an unsigned integer field \"n\"");
  }
  const auto n = doc["n"].get<std::uint64_t>();
  if (n < 1) throw ParseError(0, "vertex count must be at least 1");
  if (n > kMaxVertices) throw ParseError(0, "vertex count too large");
  std::vector<Edge> edges;
  PairSet seen;
  if (doc.contains("edges")) {
    const auto& list = doc["edges"];
    if (!list.is_array()) throw ParseError(0, "\"edges\" must be an array");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const auto& pair = list[i];
      const std::string where = "edge #" + std::to_string(i + 1);
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_unsigned() ||
          !pair[1].is_number_unsigned()) {
        throw ParseError(0, where + " must be a pair of positive integers");
      }
      const auto a = pair[0].get<std::uint64_t>();
      const auto b = pair[1].get<std::uint64_t>();
      if (a < 1 || a > n || b < 1 || b > n) throw ParseError(0, where + ": vertex id out of range");
      if (a == b) throw ParseError(0, where + ": self-loop");
      const Edge e{static_cast<Vertex>(a - 1), static_cast<Vertex>(b - 1)};
      if (!seen.insert(e)) throw ParseError(0, where + ": parallel edge");
      edges.push_back(e);
    }
  }
  return Digraph::from_edges(static_cast<std::size_t>(n), edges);
}

Digraph parse_graph(std::istream& in) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::istringstream body(text);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') return parse_graph_json(body);
  return parse_edge_list(body);
}

}  // namespace reach2
