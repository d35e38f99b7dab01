#include <doctest.h>

#include <algorithm>

#include "cubulate/fixtures.hpp"
#include "cubulate/hhs.hpp"
#include "expect_error.hpp"
#include "oracles.hpp"

using namespace cubulate;

namespace {

bool has_defect(const InstanceDiagnostics& d, const std::string& axiom) {
  return std::any_of(d.defects.begin(), d.defects.end(), [&](const Defect& x) { return x.axiom == axiom; });
}

// Two transverse lines of length 10 over an ambient line; ρ's placed so the
// instance validates at E = 0 but a chosen tuple is inconsistent.
HHSInstance two_transverse_lines() {
  HHSInstance inst;
  inst.ambient = fixtures::path_graph(21);
  inst.e = 0;
  Domain u{"U", fixtures::path_graph(11), {}, {Relation::self, Relation::transverse}, {std::nullopt, VertexSet{0}}, {}};
  Domain v{"V", fixtures::path_graph(11), {}, {Relation::transverse, Relation::self}, {VertexSet{10}, std::nullopt}, {}};
  for (int x = 0; x <= 20; ++x) {
    u.pi.push_back({std::min(x, 10)});
    v.pi.push_back({std::max(x - 10, 0)});
  }
  inst.domains = {u, v};
  return inst;
}

}  // namespace

TEST_CASE("relation names round trip") {
  for (Relation r : {Relation::nested, Relation::contains, Relation::orthogonal, Relation::transverse}) {
    CHECK(relation_from_string(to_string(r)) == r);
  }
  CHECK(error_code_of([] { relation_from_string("sideways"); }) == ErrorCode::malformed_input);
}

TEST_CASE("product of lines is a clean instance with E = 0") {
  const Hierarchy h(fixtures::product_lines_instance(9));
  const InstanceDiagnostics d = validate_instance(h);
  CHECK(d.clean());
  CHECK(d.least_e == 0);
  CHECK(d.lipschitz_constant == 1);
  CHECK(h.domain_distance(0, 0, 80) == 8);
  CHECK(h.index_of("V") == 1);
}

TEST_CASE("a missing rho is reported with the pair") {
  HHSInstance inst = fixtures::product_lines_instance(5);
  inst.domains[0].rel[1] = Relation::transverse;
  inst.domains[1].rel[0] = Relation::transverse;
  inst.domains[1].rho[0] = VertexSet{0};
  const InstanceDiagnostics d = validate_instance(Hierarchy(inst));
  const auto it = std::find_if(d.defects.begin(), d.defects.end(), [](const Defect& x) { return x.axiom == "rho-missing"; });
  REQUIRE(it != d.defects.end());
  CHECK(it->witness == std::vector<int>{0, 1});
}

TEST_CASE("structural problems are malformed input") {
  HHSInstance inst = fixtures::product_lines_instance(3);
  inst.domains[0].pi.pop_back();
  CHECK(error_code_of([&] { Hierarchy h(inst); }) == ErrorCode::malformed_input);
  inst = fixtures::product_lines_instance(3);
  inst.domains[0].pi[0] = {};
  CHECK(error_code_of([&] { Hierarchy h(inst); }) == ErrorCode::malformed_input);
}

TEST_CASE("tree with axes validates at E = 0") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const Hierarchy h(fixtures::random_tree_with_axes(40, 4, seed));
    const InstanceDiagnostics d = validate_instance(h);
    CHECK(d.clean());
    CHECK(d.least_e == 0);
  }
  const Hierarchy spine(fixtures::spine_with_axes(3, 40));
  CHECK(validate_instance(spine).clean());
}

TEST_CASE("inflating a projection is caught") {
  HHSInstance inst = fixtures::random_tree_with_axes(30, 3, 2);
  inst.domains[1].pi[0] = {0, static_cast<Vertex>(inst.domains[1].space.size() - 1)};
  const Hierarchy h(inst);
  const InstanceDiagnostics d = validate_instance(h);
  if (inst.domains[1].space.size() > 1) {
    CHECK(has_defect(d, "pi-diameter"));
    CHECK(d.least_e >= inst.domains[1].space.size() - 1);
  }
}

TEST_CASE("consistency of tuples") {
  const Hierarchy h(two_transverse_lines());
  CHECK(validate_instance(h).clean());
  // ρ^V_U = {10} and ρ^U_V = {0}; b_U and b_V both far from them
  const ConsistencyVerdict bad = check_consistent_tuple(h, {{0}, {10}}, 0);
  CHECK_FALSE(bad.consistent);
  CHECK(((bad.u == 0 && bad.v == 1) || (bad.u == 1 && bad.v == 0)));
  CHECK(bad.value == 10);
  CHECK(check_consistent_tuple(h, {{10}, {3}}, 0).consistent);
  // the image of an ambient point is always consistent
  for (int x = 0; x <= 20; ++x) CHECK(check_consistent_tuple(h, {h.pi(0, x), h.pi(1, x)}, 0).consistent);
}

TEST_CASE("relevant domains on the spine") {
  const HHSInstance inst = fixtures::spine_with_axes(3, 150);
  const Hierarchy h(inst);
  // far ends of the first two axes
  const Vertex x = 1 + 150;
  const Vertex y = 1 + 151 + 1 + 150;
  REQUIRE(h.domain(1).pi[x] == VertexSet{150});
  REQUIRE(h.domain(2).pi[y] == VertexSet{150});
  auto rel = relevant_domains(h, x, y, 100);
  std::vector<int> sorted = rel;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == std::vector<int>{0, 1, 2});
  // the axis near x comes before the axis near y
  const auto a = std::find(rel.begin(), rel.end(), 1);
  const auto b = std::find(rel.begin(), rel.end(), 2);
  CHECK(a < b);
  CHECK(relevant_domains(h, x, x, 100).empty());
  HHSInstance copy = inst;
  copy.e = 2;
  CHECK(error_code_of([&] { relevant_domains(Hierarchy(copy), x, y, 100); }) == ErrorCode::precondition);
}

TEST_CASE("distance formula fit on the product of lines is exact") {
  const Hierarchy h(fixtures::product_lines_instance(7));
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (int a = 0; a < 49; a += 3) {
    for (int b = 0; b < 49; b += 5) pairs.emplace_back(a, b);
  }
  const DistanceFormulaFit fit = distance_formula_fit(h, 1, pairs);
  CHECK(fit.a == doctest::Approx(1));
  CHECK(fit.b == doctest::Approx(0));
  const DistanceFormulaFit coarse = distance_formula_fit(h, 3, pairs);
  CHECK(coarse.a + coarse.b >= 1);
  for (const auto& s : coarse.samples) {
    CHECK(s.distance <= coarse.a * static_cast<double>(s.sum) + coarse.b + 1e-9);
    CHECK(static_cast<double>(s.sum) / coarse.a - coarse.b <= s.distance + 1e-9);
  }
}

TEST_CASE("hierarchy paths") {
  const Hierarchy h(fixtures::product_lines_instance(6));
  const DistanceMatrix& d = h.ambient_distances();
  const auto geo = least_geodesic(h.ambient(), d, 0, 35);
  CHECK(is_hierarchy_path(h, geo, 1).holds);
  CHECK(shadow(h, 0, geo) == std::vector<Vertex>{0, 1, 2, 3, 4, 5, 5, 5, 5, 5, 5});
  // a long detour along the bottom row and back is not a 1-path
  std::vector<Vertex> detour{0, 1, 2, 3, 4, 5, 4, 3, 2, 1, 0, 6};
  const HierarchyPathVerdict v = is_hierarchy_path(h, detour, 1);
  CHECK_FALSE(v.holds);
}

TEST_CASE("product regions and hulls") {
  const Hierarchy lines(fixtures::product_lines_instance(5));
  // orthogonal domains impose nothing
  CHECK(product_region(lines, 0).region.size() == 25);
  const Hierarchy h(two_transverse_lines());
  const ProductRegion p = product_region(h, 0);
  CHECK_FALSE(p.empty_defect);
  // points whose V-projection is ρ^U_V = {0}
  CHECK(p.region == VertexSet{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10});
  CHECK(theta_hull(lines, {0, 24}, 0).size() == 25);
  CHECK(theta_hull(lines, {0, 4}, 0) == VertexSet{0, 1, 2, 3, 4});
}

TEST_CASE("hierarchical quasiconvexity") {
  const Hierarchy h(fixtures::product_lines_instance(5));
  VertexSet all;
  for (int v = 0; v < 25; ++v) all.push_back(v);
  CHECK(is_hierarchically_quasiconvex(h, all, 0, {{1, 0}}).holds);
  CHECK(is_hierarchically_quasiconvex(h, {0, 1, 2}, 0, {{0, 0}, {2, 4}}).holds);
  const QuasiconvexityVerdict gap = is_hierarchically_quasiconvex(h, {0, 4}, 0, {});
  CHECK_FALSE(gap.holds);
  CHECK(gap.failed_clause == "shadow");
  // two opposite corners: shadows are fine at k0 = 4 but the square is not realised
  const QuasiconvexityVerdict corners = is_hierarchically_quasiconvex(h, {0, 24}, 4, {{0, 0}});
  CHECK_FALSE(corners.holds);
  CHECK(corners.failed_clause == "realisation");
}

TEST_CASE("colourings") {
  const Hierarchy lines(fixtures::product_lines_instance(4));
  const Colouring c = find_bbf_colouring(lines);
  CHECK(c.classes == std::vector<std::vector<int>>{{0}, {1}});
  CHECK(is_bbf_colouring(lines, c));
  CHECK_FALSE(is_bbf_colouring(lines, Colouring{{{0, 1}}, {0, 0}}));
  const Hierarchy axes(fixtures::random_tree_with_axes(40, 3, 5));
  const Colouring ca = find_bbf_colouring(axes);
  CHECK(ca.classes.front() == std::vector<int>{0});
  CHECK(ca.size() == (axes.domain_count() > 1 ? 2 : 1));
}

TEST_CASE("hhs median on the product of lines is coordinatewise") {
  const Hierarchy h(fixtures::product_lines_instance(6));
  SeededRng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const Vertex x = rng.uniform(0, 35), y = rng.uniform(0, 35), z = rng.uniform(0, 35);
    auto mid = [](int a, int b, int c) { return std::max(std::min(a, b), std::min(std::max(a, b), c)); };
    const Vertex want = mid(x / 6, y / 6, z / 6) * 6 + mid(x % 6, y % 6, z % 6);
    const HhsMedian m = hhs_median(h, x, y, z);
    CHECK(m.vertex == want);
    CHECK(m.defect == 0);
  }
}

TEST_CASE("hhs median in a tree is the tree median") {
  const Hierarchy h(fixtures::random_tree_with_axes(30, 3, 9));
  const oracle::Matrix d = oracle::floyd_warshall(h.ambient());
  SeededRng rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    const Vertex x = rng.uniform(0, 29), y = rng.uniform(0, 29), z = rng.uniform(0, 29);
    CHECK(oracle::medians(d, x, y, z) == std::vector<Vertex>{hhs_median(h, x, y, z).vertex});
  }
}
