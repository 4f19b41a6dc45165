#include "reach2/closure_matrix.hpp"

#include <utility>
#include <vector>

#include "reach2/error.hpp"

namespace reach2 {

std::string_view to_string(Flavor flavor) noexcept {
  switch (flavor) {
    case Flavor::Generic:
      return "generic";
    case Flavor::LeftCanonical:
      return "left";
    case Flavor::RightCanonical:
      return "right";
  }
  return "generic";
}

ClosureMatrix::ClosureMatrix(TwoReachMatrix cells, Flavor flavor, Vertex origin)
    : cells_(std::move(cells)), flavor_(flavor), origin_(origin) {
  if (cells_.rows() != cells_.cols()) throw PreconditionError("closure matrix must be square");
}

ClosureMatrix recover(const ClosureMatrix& in, Side side) {
  const std::size_t n = in.size();
  const Vertex origin = in.origin();
  enum class State : std::uint8_t { Unset, InProgress, Done };
  std::vector<State> state(n * n, State::Unset);
  ClosureMatrix out(n, side == Side::Left ? Flavor::LeftCanonical : Flavor::RightCanonical,
                    origin);

  auto local = [&](Vertex global) -> std::size_t {
    if (global < origin || global - origin >= n) {
      throw InvariantError("recover: witness edge leaves the closure block");
    }
    return global - origin;
  };

  // Explicit stack of pending cells. A cell whose answer is delegated to a
  // prefix (Left) or suffix (Right) cell waits until that cell is done.
  std::vector<std::pair<std::size_t, std::size_t>> stack;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (state[i * n + j] == State::Done) continue;
      stack.emplace_back(i, j);
      while (!stack.empty()) {
        const auto [u, v] = stack.back();
        State& st = state[u * n + v];
        const TwoReach cell = in.at(u, v);
        if (!cell.is_edge()) {
          out.at(u, v) = cell;
          st = State::Done;
          stack.pop_back();
          continue;
        }
        const Edge e = cell.edge();
        // Left delegates to (u, tail), Right to (head, v).
        const std::size_t du = side == Side::Left ? u : local(e.head);
        const std::size_t dv = side == Side::Left ? local(e.tail) : v;
        const TwoReach link = in.at(du, dv);
        if (link.is_top()) {
          out.at(u, v) = cell;
          st = State::Done;
          stack.pop_back();
          continue;
        }
        if (link.is_bot()) {
          throw InvariantError("recover: separating edge endpoint is unreachable");
        }
        const State dep = state[du * n + dv];
        if (dep == State::Done) {
          out.at(u, v) = out.at(du, dv);
          st = State::Done;
          stack.pop_back();
        } else if (dep == State::InProgress || (du == u && dv == v)) {
          throw InvariantError("recover: cyclic dependency, input is not a valid closure");
        } else {
          st = State::InProgress;
          stack.emplace_back(du, dv);
        }
      }
    }
  }
  return out;
}

TwoReach query(const ClosureMatrix& closure, Vertex u, Vertex v) {
  if (u >= closure.size() || v >= closure.size()) throw QueryError("vertex id out of range");
  return closure.at(u, v);
}

}  // namespace reach2
