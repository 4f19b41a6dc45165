#include "reach2/generators.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "reach2/error.hpp"

namespace reach2::gen {

namespace {

// Uniform draws built directly on the engine output so sequences do not
// depend on the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  bool coin(double p) { return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p; }
  std::size_t below(std::size_t bound) { return static_cast<std::size_t>(engine_() % bound); }
  std::vector<Vertex> permutation(std::size_t n) {
    std::vector<Vertex> p(n);
    std::iota(p.begin(), p.end(), Vertex{0});
    for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[below(i)]);
    return p;
  }

 private:
  std::mt19937_64 engine_;
};

void require_vertices(std::size_t n) {
  if (n == 0) throw PreconditionError("generator needs at least one vertex");
}

}  // namespace

Digraph random_dag(std::size_t n, double p, std::uint64_t seed) {
  require_vertices(n);
  Rng rng(seed);
  const auto label = rng.permutation(n);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rng.coin(p)) edges.push_back({label[i], label[j]});
    }
  }
  return Digraph::from_edges(n, edges);
}

Digraph random_strongly_connected(std::size_t n, double p, std::uint64_t seed) {
  require_vertices(n);
  Rng rng(seed);
  const auto cycle = rng.permutation(n);
  std::vector<Edge> edges;
  if (n > 1) {
    for (std::size_t i = 0; i < n; ++i) edges.push_back({cycle[i], cycle[(i + 1) % n]});
  }
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = 0; b < n; ++b) {
      if (a != b && rng.coin(p)) edges.push_back({a, b});
    }
  }
  return Digraph::from_edges(n, edges);
}

Digraph random_mixed(std::size_t n, double p, std::uint64_t seed) {
  require_vertices(n);
  Rng rng(seed);
  const auto label = rng.permutation(n);
  // Block boundaries: sizes 1..max(1, n/3).
  std::vector<std::size_t> block(n);
  std::size_t next = 0;
  for (std::size_t b = 0; next < n; ++b) {
    const std::size_t size = std::min(n - next, 1 + rng.below(std::max<std::size_t>(1, n / 3)));
    for (std::size_t i = 0; i < size; ++i) block[next + i] = b;
    next += size;
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    // Cycle through each block.
    std::size_t j = i + 1;
    if (j == n || block[j] != block[i]) {
      j = i;
      while (j > 0 && block[j - 1] == block[i]) --j;
    }
    if (j != i) edges.push_back({label[i], label[j]});
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const bool same = block[i] == block[j];
      if ((same || i < j) && rng.coin(p)) edges.push_back({label[i], label[j]});
    }
  }
  return Digraph::from_edges(n, edges);
}

Digraph random_digraph(std::size_t n, double p, std::uint64_t seed) {
  require_vertices(n);
  Rng rng(seed);
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = 0; b < n; ++b) {
      if (a != b && rng.coin(p)) edges.push_back({a, b});
    }
  }
  return Digraph::from_edges(n, edges);
}

Digraph layered(std::size_t n, std::size_t layers, double p, std::uint64_t seed) {
  require_vertices(n);
  layers = std::clamp<std::size_t>(layers, 1, n);
  Rng rng(seed);
  auto layer_of = [&](std::size_t v) { return v * layers / n; };
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = 0; b < n; ++b) {
      if (layer_of(b) == layer_of(a) + 1 && rng.coin(p)) edges.push_back({a, b});
    }
  }
  return Digraph::from_edges(n, edges);
}

}  // namespace reach2::gen
