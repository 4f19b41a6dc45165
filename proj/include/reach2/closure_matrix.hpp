#pragma once

#include <cstddef>
#include <string_view>

#include "reach2/graph.hpp"
#include "reach2/path_algebra.hpp"

namespace reach2 {

enum class Flavor : std::uint8_t { Generic, LeftCanonical, RightCanonical };

std::string_view to_string(Flavor flavor) noexcept;

// n x n grid of closure cells. Cells name edges by global vertex id; a block
// of a larger instance starts at global id `origin`, so cell (i, j) describes
// the pair (origin + i, origin + j).
class ClosureMatrix {
 public:
  ClosureMatrix() = default;
  ClosureMatrix(std::size_t n, Flavor flavor, Vertex origin = 0)
      : cells_(n, n), flavor_(flavor), origin_(origin) {}
  ClosureMatrix(TwoReachMatrix cells, Flavor flavor, Vertex origin = 0);

  std::size_t size() const noexcept { return cells_.rows(); }
  Flavor flavor() const noexcept { return flavor_; }
  Vertex origin() const noexcept { return origin_; }

  TwoReach at(std::size_t u, std::size_t v) const noexcept { return cells_(u, v); }
  TwoReach& at(std::size_t u, std::size_t v) noexcept { return cells_(u, v); }

  const TwoReachMatrix& cells() const noexcept { return cells_; }

  friend bool operator==(const ClosureMatrix&, const ClosureMatrix&) = default;

 private:
  TwoReachMatrix cells_;
  Flavor flavor_ = Flavor::Generic;
  Vertex origin_ = 0;
};

// Rewrites every edge cell to the first (Left) or last (Right) separating edge
// of its pair in O(n^2) total. Throws InvariantError when the input is not a
// valid closure (a dependency cycle or a Bot prefix cell).
ClosureMatrix recover(const ClosureMatrix& closure, Side side);

// O(1) cell lookup with range checks; throws QueryError.
TwoReach query(const ClosureMatrix& closure, Vertex u, Vertex v);

}  // namespace reach2
