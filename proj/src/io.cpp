#include "reach2/io.hpp"

#include <charconv>
#include <istream>
#include <iterator>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "reach2/error.hpp"

namespace reach2 {

namespace {

using json = nlohmann::json;

template <class Matrix, class Fmt>
std::string text_rows(const Matrix& c, Fmt fmt) {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (j != 0) out.push_back(' ');
      out += fmt(c.at(i, j));
    }
    out.push_back('\n');
  }
  return out;
}

template <class Matrix, class Fmt>
json json_rows(const Matrix& c, Fmt fmt) {
  json rows = json::array();
  for (std::size_t i = 0; i < c.size(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < c.size(); ++j) row.push_back(fmt(c.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Vertex parse_id(std::string_view s, std::string_view token) {
  unsigned long long value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size() || value == 0 || value > kNoVertex - 2) {
    throw ParseError(0, "bad vertex id in token '" + std::string(token) + "'");
  }
  return static_cast<Vertex>(value - 1);
}

Edge parse_edge_token(std::string_view s, std::string_view token) {
  const auto gt = s.find('>');
  if (gt == std::string_view::npos) throw ParseError(0, "bad token '" + std::string(token) + "'");
  const Edge e{parse_id(s.substr(0, gt), token), parse_id(s.substr(gt + 1), token)};
  if (e.tail == e.head) throw ParseError(0, "self-loop in token '" + std::string(token) + "'");
  return e;
}

struct RawGrid {
  std::size_t n = 0;
  std::string flavor = "generic";
  std::vector<std::vector<std::string>> rows;
};

RawGrid read_grid(std::istream& in) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  RawGrid grid;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw ParseError(0, "empty closure input");
  if (text[first] == '{') {
    json doc;
    try {
      doc = json::parse(text);
      grid.n = doc.at("n").get<std::size_t>();
      if (doc.contains("flavor")) grid.flavor = doc.at("flavor").get<std::string>();
      grid.rows = doc.at("rows").get<std::vector<std::vector<std::string>>>();
    } catch (const json::exception& e) {
      throw ParseError(0, std::string("closure json: ") + e.what());
    }
    if (grid.rows.size() != grid.n) throw ParseError(0, "closure json: row count differs from n");
  } else {
    std::istringstream lines(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(lines, line)) {
      ++lineno;
      std::istringstream tokens(line);
      std::vector<std::string> row{std::istream_iterator<std::string>(tokens),
                                   std::istream_iterator<std::string>()};
      if (row.empty()) continue;
      if (!grid.rows.empty() && row.size() != grid.rows.front().size()) {
        throw ParseError(lineno, "ragged closure row");
      }
      grid.rows.push_back(std::move(row));
    }
    grid.n = grid.rows.size();
  }
  for (const auto& row : grid.rows) {
    if (row.size() != grid.n) throw ParseError(0, "closure is not square");
  }
  return grid;
}

}  // namespace

TwoReach parse_cell_token(std::string_view token) {
  if (token == "T") return TwoReach::top();
  if (token == "B") return TwoReach::bot();
  return TwoReach::edge(parse_edge_token(token, token));
}

VertexWitness parse_vertex_token(std::string_view token) {
  if (token == "T") return VertexWitness::top();
  if (token == "B") return VertexWitness::bot();
  if (token.starts_with("CUTV:")) return VertexWitness::cut_vertex(parse_id(token.substr(5), token));
  if (token.starts_with("CUTE:")) {
    return VertexWitness::cut_edge(parse_edge_token(token.substr(5), token));
  }
  throw ParseError(0, "bad token '" + std::string(token) + "'");
}

Flavor parse_flavor(std::string_view name) {
  if (name == "generic") return Flavor::Generic;
  if (name == "left") return Flavor::LeftCanonical;
  if (name == "right") return Flavor::RightCanonical;
  throw ParseError(0, "unknown flavor '" + std::string(name) + "'");
}

std::string format_closure_text(const ClosureMatrix& c) {
  return text_rows(c, [](TwoReach v) { return to_string(v); });
}

std::string format_closure_json(const ClosureMatrix& c) {
  json doc;
  doc["n"] = c.size();
  doc["flavor"] = std::string(to_string(c.flavor()));
  doc["rows"] = json_rows(c, [](TwoReach v) { return to_string(v); });
  return doc.dump() + "\n";
}

std::string format_vertex_closure_text(const VertexClosure& c) {
  return text_rows(c, [](VertexWitness v) { return to_string(v); });
}

std::string format_vertex_closure_json(const VertexClosure& c, Flavor flavor) {
  json doc;
  doc["n"] = c.size();
  doc["flavor"] = std::string(to_string(flavor));
  doc["mode"] = "vertex";
  doc["rows"] = json_rows(c, [](VertexWitness v) { return to_string(v); });
  return doc.dump() + "\n";
}

ClosureMatrix parse_closure(std::istream& in) {
  const RawGrid grid = read_grid(in);
  ClosureMatrix c(grid.n, parse_flavor(grid.flavor));
  for (std::size_t i = 0; i < grid.n; ++i) {
    for (std::size_t j = 0; j < grid.n; ++j) {
      const TwoReach cell = parse_cell_token(grid.rows[i][j]);
      if (cell.is_edge() && (cell.edge().tail >= grid.n || cell.edge().head >= grid.n)) {
        throw ParseError(0, "edge token out of range: " + grid.rows[i][j]);
      }
      c.at(i, j) = cell;
    }
  }
  return c;
}

VertexClosure parse_vertex_closure(std::istream& in) {
  const RawGrid grid = read_grid(in);
  VertexClosure c(grid.n);
  for (std::size_t i = 0; i < grid.n; ++i) {
    for (std::size_t j = 0; j < grid.n; ++j) {
      const VertexWitness cell = parse_vertex_token(grid.rows[i][j]);
      if (cell.edge().tail >= grid.n || cell.edge().head >= grid.n) {
        if (cell.kind() == VertexWitness::Kind::CutVertex ||
            cell.kind() == VertexWitness::Kind::CutEdge) {
          throw ParseError(0, "vertex token out of range: " + grid.rows[i][j]);
        }
      }
      c.at(i, j) = cell;
    }
  }
  return c;
}

}  // namespace reach2
