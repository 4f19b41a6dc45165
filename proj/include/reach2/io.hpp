#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "reach2/closure.hpp"
#include "reach2/closure_matrix.hpp"

namespace reach2 {

// Text form: n lines of n space-separated tokens (T, B, x>y with 1-based ids,
// CUTV:x, CUTE:x>y). JSON form: {"n": n, "flavor": "...", "rows": [[...]]}.
std::string format_closure_text(const ClosureMatrix& c);
std::string format_closure_json(const ClosureMatrix& c);
std::string format_vertex_closure_text(const VertexClosure& c);
std::string format_vertex_closure_json(const VertexClosure& c, Flavor flavor);

TwoReach parse_cell_token(std::string_view token);
VertexWitness parse_vertex_token(std::string_view token);
Flavor parse_flavor(std::string_view name);

// Both readers accept either form. Text carries no flavor and yields Generic.
// ParseError on malformed input.
ClosureMatrix parse_closure(std::istream& in);
VertexClosure parse_vertex_closure(std::istream& in);

}  // namespace reach2
