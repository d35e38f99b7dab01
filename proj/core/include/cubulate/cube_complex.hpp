#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cubulate/graph.hpp"
#include "cubulate/median.hpp"

namespace cubulate {

// A parallelism class of edges and the two halfspaces it bounds. `left` is
// the side containing vertex 0.
struct Hyperplane {
  std::vector<Edge> edges;
  VertexSet left;
  VertexSet right;
};

bool crosses(const Hyperplane& a, const Hyperplane& b);

// Median graph together with its hyperplanes and cube dimension.
class CubeSkeleton {
 public:
  CubeSkeleton(MedianAlgebra median, std::vector<Hyperplane> hyperplanes);

  const MedianAlgebra& median() const noexcept { return median_; }
  const UnitGraph& graph() const noexcept { return median_.graph(); }
  const std::vector<Hyperplane>& hyperplanes() const noexcept { return hyperplanes_; }
  // Hyperplane index of each edge of graph().edges(), in the same order.
  const std::vector<int>& edge_classes() const noexcept { return edge_class_; }
  // Size of the largest pairwise-crossing family of hyperplanes.
  int dimension() const noexcept { return dimension_; }
  bool crossing(int h1, int h2) const { return crossing_[static_cast<std::size_t>(h1) * hyperplanes_.size() + h2]; }

  // Halfspace bitsets: bit v of side(h, 0) is set iff v is in hyperplanes()[h].left.
  const std::vector<std::uint64_t>& side(int h, int which) const { return sides_[2 * h + which]; }

 private:
  MedianAlgebra median_;
  std::vector<Hyperplane> hyperplanes_;
  std::vector<int> edge_class_;
  std::vector<char> crossing_;
  std::vector<std::vector<std::uint64_t>> sides_;
  int dimension_ = 0;
};

// Edges (a,b) and (c,d) are parallel iff they induce the same partition
// {v : d(v,a) < d(v,b)} | rest.
CubeSkeleton hyperplane_decomposition(const MedianAlgebra& m);

// Intersection of all halfspaces containing S.
VertexSet convex_hull(const CubeSkeleton& c, const VertexSet& s);

// Fixpoint of S <- union of I(a,b) over a,b in S.
VertexSet interval_closure(const DistanceMatrix& d, const VertexSet& s);

bool is_convex(const CubeSkeleton& c, const VertexSet& s);

// Closed r-neighbourhood.
VertexSet neighbourhood(const UnitGraph& g, const VertexSet& s, int r);

// Nearest point of a convex set (unique in a median graph).
Vertex gate(const MedianAlgebra& m, const VertexSet& convex, Vertex x);

struct HullNeighbourhoodResult {
  bool holds = true;
  // max over hull vertices of d(v, Z) - dimension * r.
  int max_excess = 0;
  int dimension = 0;
  VertexSet hull;
};

// Tests hull(N_r(Z)) ⊆ N_{d·r}(Z), d the dimension. Throws Error(not_convex)
// if Z is not convex.
HullNeighbourhoodResult hull_neighbourhood_check(const CubeSkeleton& c, const VertexSet& z, int r);

struct HellyResult {
  std::optional<Vertex> point;
  std::optional<std::pair<int, int>> disjoint_pair;
};

// Common vertex of a pairwise-intersecting family of convex sets, or the
// first disjoint pair. Up to three members are scanned exhaustively; larger
// families are resolved by composing gate maps.
HellyResult helly_intersection(const CubeSkeleton& c, const std::vector<VertexSet>& family);

struct Wall {
  VertexSet left;
  VertexSet right;
  friend bool operator==(const Wall&, const Wall&) = default;
};

struct Wallspace {
  int points = 0;
  std::vector<Wall> walls;
  friend bool operator==(const Wallspace&, const Wallspace&) = default;
};

// Checks every wall is a partition of 0..points-1 into two nonempty halves.
void validate_wallspace(const Wallspace& w);

// choice[i] == 0 selects walls[i].left, 1 selects walls[i].right.
using Orientation = std::vector<std::uint8_t>;

bool is_coherent(const Wallspace& w, const Orientation& o);

inline constexpr std::size_t kDefaultOrientationCap = std::size_t{1} << 20;

// All coherent orientations, in lexicographic order. Any pairwise-coherent
// partial orientation extends to a full one, so the depth-first search never
// backtracks out of a dead end and runs in time proportional to its output.
// Throws Error(guard_exceeded) past `cap` orientations.
std::vector<Orientation> coherent_orientations(const Wallspace& w, std::size_t cap = kDefaultOrientationCap);

// Orientation toward a point: every wall oriented to the half containing it.
Orientation principal_orientation(const Wallspace& w, int point);
std::vector<Orientation> principal_orientations(const Wallspace& w);

struct DualComplex {
  CubeSkeleton skeleton;
  // Vertex i of the skeleton is orientations[i].
  std::vector<Orientation> orientations;
};

// Walls are finite here, so the usual "all but finitely many halfspaces"
// condition on vertices holds for every coherent orientation.
DualComplex dual_cube_complex(const Wallspace& w, std::size_t cap = kDefaultOrientationCap);

// Walls of a median graph: one per hyperplane, over its vertex set.
Wallspace hyperplane_wallspace(const CubeSkeleton& c);

// Exact isomorphism search (distance-preserving backtracking). Returns the
// map a-vertex -> b-vertex.
std::optional<std::vector<Vertex>> find_isomorphism(const UnitGraph& a, const UnitGraph& b);
bool is_isomorphism(const UnitGraph& a, const UnitGraph& b, const std::vector<Vertex>& map);

}  // namespace cubulate
