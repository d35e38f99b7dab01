#pragma once

#include <array>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "cubulate/graph.hpp"

namespace cubulate {

struct MedianVerdict {
  bool is_median = true;
  // First triple (lexicographic) with zero or several medians.
  std::optional<std::array<Vertex, 3>> witness;
  int witness_median_count = 1;
};

// Exhaustive check over all triples: the triple intersection of metric
// intervals must contain exactly one vertex.
MedianVerdict is_median_graph(const UnitGraph& g);

// The vertex set of a median graph with its median operation. Immutable and
// cheap to copy.
class MedianAlgebra {
 public:
  // Verifies median-ness exhaustively; throws Error(not_median) with the
  // offending triple otherwise.
  static MedianAlgebra verified(UnitGraph g);

  // Cartesian product of trees (each factor checked to be a tree). Vertices
  // are mixed-radix coordinate tuples, last factor varying fastest; medians
  // are computed coordinate-wise.
  static MedianAlgebra product_of_trees(std::vector<UnitGraph> factors);

  // The subgraph induced on a 1-connected median-closed subset, with
  // distances inherited from `m` (vertex i is y[i]). Such a subset is
  // isometrically embedded; this is re-checked, and Error(invariant) thrown
  // if it fails.
  static MedianAlgebra subalgebra(const MedianAlgebra& m, const VertexSet& y);

  const UnitGraph& graph() const noexcept { return impl_->graph; }
  const DistanceMatrix& distances() const noexcept { return impl_->dist; }
  int size() const noexcept { return impl_->graph.size(); }
  int distance(Vertex a, Vertex b) const { return impl_->dist(a, b); }

  Vertex median(Vertex x, Vertex y, Vertex z) const;

  bool is_product() const noexcept { return !impl_->factors.empty(); }
  const std::vector<UnitGraph>& factors() const noexcept { return impl_->factors; }
  std::vector<Vertex> coordinates(Vertex v) const;
  Vertex from_coordinates(std::span<const Vertex> coords) const;

 private:
  struct Impl {
    UnitGraph graph;
    DistanceMatrix dist;
    std::vector<UnitGraph> factors;
    std::vector<DistanceMatrix> factor_dist;
    std::vector<int> strides;
  };
  explicit MedianAlgebra(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  std::shared_ptr<const Impl> impl_;
};

Vertex median_triple(const MedianAlgebra& m, Vertex x, Vertex y, Vertex z);

// Median of a triple in any graph with a distance matrix, by greedy descent
// from x through I(x,y) ∩ I(x,z). Only meaningful on median graphs.
Vertex walk_median(const UnitGraph& g, const DistanceMatrix& d, Vertex x, Vertex y, Vertex z);

// ⟨A⟩: smallest median-closed set containing A (worklist saturation).
VertexSet subalgebra_closure(const MedianAlgebra& m, const VertexSet& a);

bool is_median_closed(const MedianAlgebra& m, const VertexSet& y,
                      std::array<Vertex, 3>* offending = nullptr);

// True iff any two points of A are joined by a C-path inside A.
bool is_c_connected(const MedianAlgebra& m, const VertexSet& a, int c);

struct SubsetReport {
  VertexSet subset;
  int c = 1;
  bool is_c_connected = false;
  int m = 0;
  bool is_m_median = false;
  // Least M for which A is M-median.
  int minimal_m = 0;
  VertexSet closure;
  int hausdorff_to_closure = 0;
};

SubsetReport median_subset_report(const MedianAlgebra& m, const VertexSet& a, int c, int max_median_gap);

struct ConnectifyResult {
  VertexSet augmented;  // A'
  VertexSet closure;    // ⟨A'⟩
  // d_Haus(A, ⟨A'⟩).
  int hausdorff = 0;
  bool one_connected = false;
  // Geodesics added between C-close 1-connected pieces.
  std::vector<std::vector<Vertex>> bridges;
};

// Splits A into maximal 1-connected pieces, joins every pair of pieces at
// distance <= C by the lexicographically least geodesic between their
// lexicographically least closest pair, then closes under the median.
ConnectifyResult connectify_and_close(const MedianAlgebra& m, const VertexSet& a, int c);

struct IsometryVerdict {
  bool isometric = true;
  // A pair whose induced distance exceeds the ambient one.
  std::optional<std::pair<Vertex, Vertex>> witness;
  int induced_distance = 0;
  int ambient_distance = 0;
};

// Requires Y 1-connected and median-closed (throws Error(precondition) with
// the offending pair / triple); then compares induced against ambient
// distances for every pair.
IsometryVerdict check_isometric_subalgebra(const MedianAlgebra& m, const VertexSet& y);

// max over v in `from` of d(v, to), by multi-source BFS from `to`.
int one_sided_hausdorff(const UnitGraph& g, const VertexSet& from, const VertexSet& to);
int hausdorff_distance(const UnitGraph& g, const VertexSet& a, const VertexSet& b);

}  // namespace cubulate
