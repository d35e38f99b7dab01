#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cubulate {

using Vertex = int;
// Sorted, duplicate-free list of vertex indices.
using VertexSet = std::vector<Vertex>;
using Edge = std::pair<Vertex, Vertex>;

VertexSet make_vertex_set(std::vector<Vertex> vertices);
bool contains(const VertexSet& set, Vertex v);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
bool is_subset(const VertexSet& a, const VertexSet& b);

// Finite simple graph with unit-length edges. Vertices are 0..size()-1.
// Construction rejects loops, repeated edges and out-of-range endpoints;
// connectivity is checked by the operations that need it.
class UnitGraph {
 public:
  UnitGraph() = default;
  UnitGraph(int vertex_count, std::vector<Edge> edges, std::vector<std::string> labels = {});

  int size() const noexcept { return n_; }
  // Edges normalised to (min, max), sorted.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbours(Vertex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool adjacent(Vertex u, Vertex v) const;
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  friend bool operator==(const UnitGraph& a, const UnitGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_ && a.labels_ == b.labels_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> offsets_{0};
  std::vector<Vertex> adjacency_;
  std::vector<std::string> labels_;
};

// Dense geodesic edge-count matrix.
class DistanceMatrix {
 public:
  static constexpr int unreachable = -1;

  DistanceMatrix() = default;
  explicit DistanceMatrix(int n) : n_(n), d_(static_cast<std::size_t>(n) * n, unreachable) {}

  int size() const noexcept { return n_; }
  int operator()(Vertex a, Vertex b) const { return d_[index(a, b)]; }
  int& at(Vertex a, Vertex b) { return d_[index(a, b)]; }
  std::span<const int> row(Vertex a) const {
    return {d_.data() + static_cast<std::size_t>(a) * n_, static_cast<std::size_t>(n_)};
  }

  friend bool operator==(const DistanceMatrix&, const DistanceMatrix&) = default;

 private:
  std::size_t index(Vertex a, Vertex b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(b);
  }
  int n_ = 0;
  std::vector<int> d_;
};

// Breadth-first distances from a set of sources; unreachable entries are -1.
std::vector<int> bfs_distances(const UnitGraph& g, std::span<const Vertex> sources);

// All-pairs distances. Throws Error(disconnected) naming two vertices with no
// path between them.
DistanceMatrix all_pairs_distances(const UnitGraph& g);

bool is_connected(const UnitGraph& g);
bool is_tree(const UnitGraph& g);

// Connected components of the subgraph induced on `subset` (each sorted;
// components ordered by their least vertex).
std::vector<VertexSet> induced_components(const UnitGraph& g, const VertexSet& subset);

// Induced subgraph; `subset[i]` becomes vertex i. Labels carry over.
UnitGraph induced_subgraph(const UnitGraph& g, const VertexSet& subset);

// Min over pairs; -1 if either set is empty.
int set_distance(const DistanceMatrix& d, const VertexSet& a, const VertexSet& b);
int set_diameter(const DistanceMatrix& d, const VertexSet& a);
int point_to_set(const DistanceMatrix& d, Vertex v, const VertexSet& set);

// Metric interval I(a, b) = {v : d(a,v) + d(v,b) = d(a,b)}.
VertexSet interval(const DistanceMatrix& d, Vertex a, Vertex b);

// Lexicographically least shortest path from a to b by vertex index.
std::vector<Vertex> least_geodesic(const UnitGraph& g, const DistanceMatrix& d, Vertex a, Vertex b);

// Union of all geodesics between points of `set`.
VertexSet geodesic_hull(const DistanceMatrix& d, const VertexSet& set);

}  // namespace cubulate
