#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "cubulate/bbf.hpp"
#include "cubulate/cube_complex.hpp"
#include "cubulate/hhs.hpp"
#include "cubulate/median.hpp"
#include "cubulate/rational.hpp"

namespace cubulate {

struct EmbeddingParameters {
  Rational d = 1;
  Rational k = 102;
  Rational l = 1;
};

// D = max(100E, 1), K = 101D + 1, L = 1.
EmbeddingParameters default_parameters(const Rational& e);

struct BasePointViolation {
  int colour = 0;
  Vertex g = 0;
  int domain = 0;
  // d_U(g, ρ^{orbit(g)}_U) − E.
  Rational slack;
};

// One projection system and quasitree per colour. Pieces of colour i are the
// domains of colouring.classes[i] in that order, with π_U(V) := ρ^V_U.
struct ColouredSystem {
  Hierarchy hierarchy;
  Colouring colouring;
  EmbeddingParameters parameters;
  std::vector<QuasiTreeSpace> quasitrees;
  // orbit[i][g]: position within class i of the domain standing in for gU_i.
  std::vector<std::vector<int>> orbit;
  std::vector<BasePointViolation> basepoint_violations;
  Rational max_basepoint_slack;

  int colours() const noexcept { return colouring.size(); }
};

ProjectionSystem colour_projection_system(const Hierarchy& h, const std::vector<int>& cls);

// When `orbit` is absent each g is assigned the domain of its class that
// minimises the worst base-point slack (ties to the earlier domain).
// Throws Error(precondition) naming the colour when K is below that
// colour's least valid ϑ.
ColouredSystem build_coloured_system(const Hierarchy& h, const Colouring& colouring, const EmbeddingParameters& parameters,
                                     std::optional<std::vector<std::vector<int>>> orbit = std::nullopt);

// psi[i][g]: global vertex of quasitrees[i].
struct PsiImage {
  std::vector<std::vector<int>> psi;
};

// ψ_i(g) = least vertex of π_{orbit_i(g)}(g), inside piece orbit_i(g).
PsiImage psi_map(const ColouredSystem& cs);

// ℓ¹ distance over colours.
Rational product_distance(const ColouredSystem& cs, const PsiImage& psi, Vertex x, Vertex y);

struct EmbeddingSample {
  Vertex x = 0;
  Vertex y = 0;
  int ambient = 0;
  Rational image;
};

struct EmbeddingReport {
  // Least κ ≥ 1 with (1/κ)d_G − κ ≤ d_Π ≤ κ·d_G + κ on the sample.
  double kappa = 1;
  // Multiplicative constants alone, and the least additive constant that
  // goes with them.
  double kappa_upper = 1;
  double kappa_lower = 1;
  double additive = 0;
  std::vector<EmbeddingSample> samples;
};

EmbeddingReport measure_embedding(const ColouredSystem& cs, const PsiImage& psi, const std::vector<std::pair<Vertex, Vertex>>& samples);

struct QuasimedianReport {
  Rational max_defect;
  std::map<Rational, int> histogram;
  // Per colour: true when the codomain median is exact (quasitree is a tree
  // or a median graph), false when the sum-minimiser stands in for it.
  std::vector<bool> exact_median;
  std::vector<Rational> defects;
};

// Median in a quasitree: least-index minimiser of summed distances (the exact
// median on trees and median graphs).
int quasitree_median(const QuasiTreeSpace& q, int a, int b, int c);
bool quasitree_has_exact_median(const QuasiTreeSpace& q);

QuasimedianReport quasimedian_defect(const ColouredSystem& cs, const PsiImage& psi, const std::vector<std::array<Vertex, 3>>& triples);

struct ColourShadow {
  int mu = 1;
  // Domains of this colour in rel_{100D}(γ(0), γ(T)).
  std::vector<int> relevant;
  int containment_checks = 0;
  int containment_violations = 0;
  Rational max_containment_distance;
};

struct ShadowReport {
  std::vector<ColourShadow> colours;
};

// Throws Error(precondition) unless the path is a D-hierarchy path, D from
// the system parameters.
ShadowReport shadow_path_report(const ColouredSystem& cs, const PsiImage& psi, const std::vector<Vertex>& path);

struct TreeApproximation {
  UnitGraph tree;
  // Quasitree vertex -> tree vertex. Attachment edges of length L are
  // subdivided, so the tree may carry extra vertices.
  std::vector<Vertex> map;
  Vertex root = 0;
  double multiplicative = 1;
  std::int64_t additive = 0;
  // All pairs and all roots were compared (small inputs), or a seeded sample.
  bool exhaustive = true;
};

// Breadth-first spanning tree of the (subdivided) quasitree, from the root
// minimising the worst additive distortion. Requires integer L and a
// connected space.
TreeApproximation tree_approximate(const QuasiTreeSpace& q, std::uint64_t seed = 1);

struct PromotionResult {
  MedianAlgebra product;
  VertexSet points;
  ConnectifyResult connect;
  // Skeleton on ⟨A′⟩; skeleton vertex i is product vertex connect.closure[i].
  CubeSkeleton skeleton;
  int hausdorff = 0;
  bool one_connected = false;
  bool median_closed = false;
  bool isometric = false;
};

// Points are product vertex ids (see MedianAlgebra::from_coordinates).
PromotionResult promote_to_cube_complex(std::vector<UnitGraph> factors, const VertexSet& points, int c);

// Φ: ambient vertex -> product vertex through ψ and the tree approximations.
struct Pipeline {
  std::vector<TreeApproximation> trees;
  std::vector<Vertex> phi;
  int c = 1;
  PromotionResult promotion;
};

Pipeline build_pipeline(const ColouredSystem& cs, const PsiImage& psi, std::uint64_t seed = 1);

struct ConvexCorrespondence {
  // Z′ as product vertex ids and as skeleton vertex ids.
  VertexSet z_prime;
  VertexSet z_prime_skeleton;
  bool convex = false;
  int hausdorff = 0;
  bool hqc_checked = false;
  bool hqc = true;
};

// Z′ = points of ⟨A′⟩ whose every coordinate lies in the tree hull of that
// coordinate of Φ(Z); reports d_Haus(Φ(Z), Z′).
ConvexCorrespondence hqc_convex_correspondence(const ColouredSystem& cs, const Pipeline& p, const VertexSet& z,
                                               std::optional<QuasiconvexityVerdict> hqc = std::nullopt);

struct CoarseHellyResult {
  Vertex center = 0;
  int r = 0;
  int inflation = 0;
  Vertex helly_point = 0;
  // ℓ¹ distance from the Helly point to the chosen Φ-image.
  int pullback_distance = 0;
};

// Throws Error(precondition) naming a pair of sets further than R apart.
CoarseHellyResult coarse_helly_experiment(const ColouredSystem& cs, const Pipeline& p, const std::vector<VertexSet>& sets,
                                          const Rational& r);

struct PackingResult {
  int n = 0;
  std::vector<int> members;
  bool exact = true;
};

PackingResult bounded_packing_count(const Hierarchy& h, const std::vector<VertexSet>& family, const Rational& r);

}  // namespace cubulate
