#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cubulate/graph.hpp"
#include "cubulate/rational.hpp"

namespace cubulate {

// Relation of one domain to another: `nested` means this ⊊ other,
// `contains` means this ⊋ other.
enum class Relation { self, nested, contains, orthogonal, transverse };

const char* to_string(Relation r) noexcept;
Relation relation_from_string(const std::string& text);

struct Domain {
  std::string id;
  UnitGraph space;
  // π_U(x) for each ambient vertex x.
  std::vector<VertexSet> pi;
  // Relation to every domain, by index (self at its own index).
  std::vector<Relation> rel;
  // rho[j] = ρ^{this}_{j} ⊆ 𝒞(domain j), present when this ⋔ j or this ⊊ j.
  std::vector<std::optional<VertexSet>> rho;
  // rho_down[j][v] = ρ^{this}_{j}(v) ⊆ 𝒞(domain j) for j ⊊ this and v a
  // vertex of this space; empty when not supplied.
  std::vector<std::vector<VertexSet>> rho_down;

  friend bool operator==(const Domain&, const Domain&) = default;
};

struct HHSInstance {
  UnitGraph ambient;
  Rational e;
  std::vector<Domain> domains;

  friend bool operator==(const HHSInstance&, const HHSInstance&) = default;
};

// An instance with its metrics cached. Loading checks structure only
// (shapes, ranges, nonempty projections, connected spaces) and throws
// Error(malformed_input); axioms are checked by validate_instance.
class Hierarchy {
 public:
  explicit Hierarchy(HHSInstance instance);

  const HHSInstance& instance() const noexcept { return impl_->instance; }
  const UnitGraph& ambient() const noexcept { return impl_->instance.ambient; }
  const Rational& e() const noexcept { return impl_->instance.e; }
  int domain_count() const noexcept { return static_cast<int>(impl_->instance.domains.size()); }
  const Domain& domain(int u) const { return impl_->instance.domains[u]; }
  const DistanceMatrix& ambient_distances() const noexcept { return impl_->ambient_dist; }
  const DistanceMatrix& space_distances(int u) const { return impl_->space_dist[u]; }
  bool space_is_tree(int u) const { return impl_->space_tree[u]; }
  Relation relation(int u, int v) const { return domain(u).rel[v]; }
  int index_of(const std::string& id) const;

  const VertexSet& pi(int u, Vertex x) const { return domain(u).pi[x]; }
  // d_U(x, y) = diam(π_U(x) ∪ π_U(y)).
  int domain_distance(int u, Vertex x, Vertex y) const;
  // Least distance from π_U(x) to a subset of 𝒞U.
  int to_set(int u, Vertex x, const VertexSet& set) const;
  // ρ^V_U, or nullptr when not stored.
  const VertexSet* rho(int v, int u) const;

 private:
  struct Impl {
    HHSInstance instance;
    DistanceMatrix ambient_dist;
    std::vector<DistanceMatrix> space_dist;
    std::vector<char> space_tree;
  };
  std::shared_ptr<const Impl> impl_;
};

struct Defect {
  std::string axiom;
  std::string message;
  std::vector<int> witness;
  friend bool operator==(const Defect&, const Defect&) = default;
};

struct InstanceDiagnostics {
  std::vector<Defect> defects;
  // Least integer E making the diameter, consistency and coarse-onto checks
  // pass.
  int least_e = 0;
  // Least λ with d_U(x,y) ≤ λ·d_G(x,y) + λ over all pairs and domains.
  int lipschitz_constant = 0;
  bool clean() const noexcept { return defects.empty(); }
};

// Checks the axioms at the declared E. Coarse Lipschitz is checked in the
// form d_U ≤ max(E,1)·d_G + E so that E = 0 instances with 1-Lipschitz
// projections pass.
InstanceDiagnostics validate_instance(const Hierarchy& h);

struct ConsistencyVerdict {
  bool consistent = true;
  int u = -1;
  int v = -1;
  // The min-value of the failing clause, or the worst value seen.
  int value = 0;
};

// b[u] is a nonempty subset of 𝒞U with diameter ≤ κ.
ConsistencyVerdict check_consistent_tuple(const Hierarchy& h, const std::vector<VertexSet>& b, const Rational& kappa);

// rel_s(x, y) = {U : d_U(x,y) > s}, listed so that transverse pairs appear
// in the order U < V iff d_U(y, ρ^V_U) ≤ E (ties and unrelated pairs by
// index). Throws Error(invariant) when the order on a transverse pair is
// not exactly one-sided or has a cycle; Error(precondition) when s < 100E.
std::vector<int> relevant_domains(const Hierarchy& h, Vertex x, Vertex y, const Rational& s);

struct DistanceFormulaFitSample {
  Vertex x = 0;
  Vertex y = 0;
  int distance = 0;
  std::int64_t sum = 0;
  double lower_slack = 0;
  double upper_slack = 0;
};

struct DistanceFormulaFit {
  Rational s;
  double a = 1;
  double b = 0;
  std::vector<DistanceFormulaFitSample> samples;
};

// Fits (1/A)·Σ − B ≤ d_G ≤ A·Σ + B with Σ = Σ_U [d_U ≥ s]·d_U, minimising A + B
// over A ≥ 1.
DistanceFormulaFit distance_formula_fit(const Hierarchy& h, const Rational& s, const std::vector<std::pair<Vertex, Vertex>>& samples);

struct HierarchyPathVerdict {
  bool holds = true;
  bool ambient_quasigeodesic = true;
  int failing_domain = -1;
};

HierarchyPathVerdict is_hierarchy_path(const Hierarchy& h, const std::vector<Vertex>& path, const Rational& d);

// Least vertex of π_U(γ(t)) along a path.
std::vector<Vertex> shadow(const Hierarchy& h, int u, const std::vector<Vertex>& path);

struct ProductRegion {
  VertexSet region;
  bool empty_defect = false;
};

ProductRegion product_region(const Hierarchy& h, int u);

VertexSet theta_hull(const Hierarchy& h, const VertexSet& a, const Rational& theta);

struct QuasiconvexityVerdict {
  bool holds = true;
  // "shadow" (clause on π_U(Z)) or "realisation".
  std::string failed_clause;
  int domain = -1;
  Vertex witness = -1;
  Rational kappa;
};

QuasiconvexityVerdict is_hierarchically_quasiconvex(const Hierarchy& h, const VertexSet& z, const Rational& k0,
                                                    const std::vector<std::pair<Rational, Rational>>& kfun);

struct Colouring {
  std::vector<std::vector<int>> classes;
  std::vector<int> colour_of;
  int size() const noexcept { return static_cast<int>(classes.size()); }
  friend bool operator==(const Colouring&, const Colouring&) = default;
};

// Greedy in index order: each domain joins the first class it is transverse
// to entirely.
Colouring find_bbf_colouring(const Hierarchy& h);
bool is_bbf_colouring(const Hierarchy& h, const Colouring& c);

// Per-domain coarse median of three subsets: exact tree median of their
// least vertices on trees, otherwise the least-index minimiser of the summed
// distances to the three sets.
Vertex domain_median(const Hierarchy& h, int u, const VertexSet& a, const VertexSet& b, const VertexSet& c);

struct HhsMedian {
  Vertex vertex = 0;
  int defect = 0;
};

HhsMedian hhs_median(const Hierarchy& h, Vertex x, Vertex y, Vertex z);

}  // namespace cubulate
