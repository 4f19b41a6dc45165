#pragma once

#include <cstdint>

#include "reach2/graph.hpp"

// Seeded random instances. Output depends only on the arguments.
namespace reach2::gen {

// Edges i -> j (i < j in a hidden random order) with probability p.
Digraph random_dag(std::size_t n, double p, std::uint64_t seed);

// Random Hamiltonian cycle plus each other ordered pair with probability p.
Digraph random_strongly_connected(std::size_t n, double p, std::uint64_t seed);

// Random strongly connected blocks joined by forward edges with probability
// p, labels shuffled.
Digraph random_mixed(std::size_t n, double p, std::uint64_t seed);

// Each ordered pair independently with probability p.
Digraph random_digraph(std::size_t n, double p, std::uint64_t seed);

// `layers` layers of near-equal width; edges between consecutive layers with
// probability p.
Digraph layered(std::size_t n, std::size_t layers, double p, std::uint64_t seed);

}  // namespace reach2::gen
