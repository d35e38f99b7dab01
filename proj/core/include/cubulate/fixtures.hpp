#pragma once

#include <cstdint>
#include <vector>

#include "cubulate/bbf.hpp"
#include "cubulate/cube_complex.hpp"
#include "cubulate/graph.hpp"
#include "cubulate/hhs.hpp"
#include "cubulate/rng.hpp"

// Deterministic generators for the standard test and benchmark inputs.
namespace cubulate::fixtures {

UnitGraph path_graph(int n);
UnitGraph cycle_graph(int n);
// Vertex (r, c) is r * cols + c.
UnitGraph grid_graph(int rows, int cols);
UnitGraph hypercube(int d);
UnitGraph complete_bipartite(int a, int b);
UnitGraph star(int leaves);
UnitGraph spider(int legs, int length);
// Uniform random labelled tree via a random Pruefer sequence.
UnitGraph random_tree(int n, SeededRng& rng);
// Cartesian product of small random trees, at most max_size vertices.
UnitGraph random_tree_product(SeededRng& rng, int factors, int max_size);

// Walls of the d-cube: wall i splits the points by bit i.
Wallspace cube_wallspace(int d);

// GRID(n, n) with the two coordinate lines as orthogonal domains; E = 0.
HHSInstance product_lines_instance(int n);

// A finite tree with pairwise disjoint geodesic lines ("axes") as domains
// nested in the tree domain. Projections are nearest points; the ρ of an
// axis in the tree is its middle vertex, so the instance has E = 0.
HHSInstance tree_with_axes(const UnitGraph& tree, const std::vector<std::vector<Vertex>>& axes);
struct TreeAxes {
  UnitGraph tree;
  std::vector<std::vector<Vertex>> axes;
};
// Random tree on n vertices with up to `axes` disjoint axes of length >= 1.
TreeAxes random_tree_axes(int n, int axes, std::uint64_t seed);
HHSInstance random_tree_with_axes(int n, int axes, std::uint64_t seed);
// Axes of length `length` hanging off a hub, each attached near one end, so
// geodesics between far ends have large projections to two axes.
HHSInstance spine_with_axes(int axes, int length);

// Three paths of length 10 where piece j and piece k both see the other two
// far apart: violates (P1) at θ = 1.
ProjectionSystem adversarial_p1_system();
// Pieces A, B, C with dπ_B(A, C) = 10; with K = 5 there is no A-C edge.
ProjectionSystem chain_system();
// Three paths of length `length` with every projection at vertex 0.
ProjectionSystem tripod_system(int length);

}  // namespace cubulate::fixtures
