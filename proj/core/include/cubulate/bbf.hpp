#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "cubulate/graph.hpp"
#include "cubulate/rational.hpp"

namespace cubulate {

// Family of pieces Y_i with projections proj[i][j] = π_{Y_i}(Y_j) ⊆ V(Y_i)
// for i != j (proj[i][i] is unused and kept empty).
struct ProjectionSystem {
  std::vector<UnitGraph> pieces;
  std::vector<std::vector<VertexSet>> proj;
  Rational theta;

  int size() const noexcept { return static_cast<int>(pieces.size()); }
  friend bool operator==(const ProjectionSystem&, const ProjectionSystem&) = default;
};

// Shape checks: square table, every off-diagonal entry nonempty, sorted and
// in range. Throws Error(malformed_input) naming the first bad entry.
void validate_projection_system(const ProjectionSystem& s);

// Projection system with its piece distance matrices cached.
class ProjectionMetrics {
 public:
  explicit ProjectionMetrics(ProjectionSystem s);

  const ProjectionSystem& system() const noexcept { return system_; }
  const DistanceMatrix& piece_distances(int i) const { return dist_[i]; }
  // dπ_{Y_y}(Y_x, Y_z) = diam(π_{Y_y}(Y_x) ∪ π_{Y_y}(Y_z)).
  int projection_distance(int y, int x, int z) const;

 private:
  ProjectionSystem system_;
  std::vector<DistanceMatrix> dist_;
};

struct AxiomTriple {
  int i = 0;
  int j = 0;
  int k = 0;
  // dπ_{Y_j}(Y_i, Y_k) and dπ_{Y_k}(Y_i, Y_j); both exceed the declared ϑ.
  int via_j = 0;
  int via_k = 0;
};

struct AxiomReport {
  // Least integer ϑ for which (P0) and (P1) hold.
  int least_theta = 0;
  int max_projection_diameter = 0;
  // Violations at the declared ϑ.
  std::vector<std::pair<int, int>> p0_violations;
  std::vector<AxiomTriple> p1_violations;
  // p2_counts[i][k] = #{j : dπ_{Y_j}(Y_i, Y_k) > ϑ}, i != k.
  std::vector<std::vector<int>> p2_counts;

  bool holds() const noexcept { return p0_violations.empty() && p1_violations.empty(); }
};

AxiomReport verify_projection_axioms(const ProjectionSystem& s);

// Lines are geodesic vertex paths in `tree`; piece i is lines[i] as a path
// graph (local vertex t = lines[i][t]) and proj(i, j) is the set of
// nearest points on line i of the vertices of line j. ϑ is set to the least
// valid value.
ProjectionSystem axes_in_tree_system(const UnitGraph& tree, const std::vector<std::vector<Vertex>>& lines);

struct AttachmentEdge {
  int a = 0;
  int b = 0;
  friend bool operator==(const AttachmentEdge&, const AttachmentEdge&) = default;
};

// C_K(Y): pieces glued by length-L edges. Global vertex ids are piece-major.
// Distances are exact: every weight is a multiple of 1/scale() with
// scale() = denominator of L.
class QuasiTreeSpace {
 public:
  // Refuses (Error(precondition)) when K is below the least valid ϑ or the
  // declared ϑ fails the axioms.
  QuasiTreeSpace(ProjectionSystem system, Rational k, Rational l);

  const ProjectionSystem& system() const noexcept { return metrics_->system(); }
  const Rational& k() const noexcept { return k_; }
  const Rational& l() const noexcept { return l_; }
  int least_theta() const noexcept { return least_theta_; }

  int size() const noexcept { return static_cast<int>(piece_of_.size()); }
  int piece_of(int v) const { return piece_of_[v]; }
  int local_of(int v) const { return v - offset_[piece_of_[v]]; }
  int global(int piece, Vertex local) const { return offset_[piece] + local; }
  int piece_count() const noexcept { return system().size(); }
  int piece_size(int piece) const { return system().pieces[piece].size(); }

  // Unordered piece pairs (U < V) joined by attachment edges.
  const std::vector<std::pair<int, int>>& attached_pairs() const noexcept { return attached_; }
  const std::vector<AttachmentEdge>& attachments() const noexcept { return attachments_; }

  bool connected() const noexcept { return connected_; }
  std::int64_t scale() const noexcept { return l_.den(); }
  // Scaled distance (multiple of 1/scale()); -1 when unreachable.
  std::int64_t scaled_distance(int a, int b) const { return dist_[static_cast<std::size_t>(a) * size() + b]; }
  // Throws Error(disconnected) when unreachable.
  Rational distance(int a, int b) const;

  const ProjectionMetrics& metrics() const noexcept { return *metrics_; }

 private:
  Rational k_;
  Rational l_;
  int least_theta_ = 0;
  std::vector<int> offset_;
  std::vector<int> piece_of_;
  std::vector<std::pair<int, int>> attached_;
  std::vector<AttachmentEdge> attachments_;
  std::vector<std::int64_t> dist_;
  bool connected_ = false;
  std::shared_ptr<const ProjectionMetrics> metrics_;
};

// π♭_U(x): {x} inside U, otherwise ρ^{piece(x)}_U = π_U(piece(x)); local
// vertex ids of piece U.
VertexSet flat_projection(const QuasiTreeSpace& q, int piece, int x);

// diam(π♭_U(x) ∪ π♭_U(y)).
int flat_distance(const QuasiTreeSpace& q, int piece, int x, int y);

struct DistanceFormulaSample {
  int x = 0;
  int y = 0;
  Rational distance;
  // Σ of flat distances ≥ K′ and ≥ K respectively.
  std::int64_t lower_sum = 0;
  std::int64_t upper_sum = 0;
  bool lower_holds = true;
  bool upper_holds = true;
};

struct DistanceFormulaReport {
  Rational k;
  Rational k_prime;
  std::vector<DistanceFormulaSample> samples;
  int lower_failures = 0;
  int upper_failures = 0;
  // max over samples of d / (6K + 4·Σ) and of (½Σ) / d.
  double max_upper_ratio = 0;
  double max_lower_ratio = 0;
};

// ½·Σ_{f ≥ K′} f ≤ d ≤ 6K + 4·Σ_{f ≥ K} f with f = flat_distance over all
// pieces. Requires K′ > K.
DistanceFormulaReport check_bbf_distance_formula(const QuasiTreeSpace& q, const Rational& k_prime,
                                                 const std::vector<std::pair<int, int>>& samples);

// Least integer K′ in (K, max(20K, ⌊K⌋+1)] for which the lower bound holds on
// every sample, if any.
std::optional<Rational> find_lower_threshold(const QuasiTreeSpace& q, const std::vector<std::pair<int, int>>& samples);

struct PieceEmbeddingVerdict {
  bool isometric = true;
  bool totally_geodesic = true;
  // Local vertices of the first failing pair.
  std::optional<std::pair<Vertex, Vertex>> witness;
};

PieceEmbeddingVerdict piece_embedding_check(const QuasiTreeSpace& q, int piece);

}  // namespace cubulate
