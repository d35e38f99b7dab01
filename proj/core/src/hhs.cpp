#include "cubulate/hhs.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <queue>

#include "cubulate/error.hpp"
#include "cubulate/median.hpp"
#include "cubulate/quasigeodesic.hpp"

namespace cubulate {

namespace {

[[noreturn]] void malformed(const std::string& what, std::vector<int> witness = {}) {
  throw Error(ErrorCode::malformed_input, "hhs instance: " + what, std::move(witness));
}

void check_subset(const VertexSet& s, int size, const std::string& what, std::vector<int> witness) {
  if (s.empty()) malformed(what + " is empty", witness);
  if (!std::is_sorted(s.begin(), s.end()) || std::adjacent_find(s.begin(), s.end()) != s.end()) {
    malformed(what + " is not sorted", witness);
  }
  if (s.front() < 0 || s.back() >= size) malformed(what + " is out of range", witness);
}

Relation mirror(Relation r) {
  switch (r) {
    case Relation::nested: return Relation::contains;
    case Relation::contains: return Relation::nested;
    default: return r;
  }
}

// ρ^U_V is required when U ⋔ V or U ⊊ V.
bool needs_rho(Relation r) { return r == Relation::transverse || r == Relation::nested; }

std::string pair_text(int u, int v) { return "(" + std::to_string(u) + "," + std::to_string(v) + ")"; }

}  // namespace

const char* to_string(Relation r) noexcept {
  switch (r) {
    case Relation::self: return "self";
    case Relation::nested: return "nested";
    case Relation::contains: return "contains";
    case Relation::orthogonal: return "orth";
    case Relation::transverse: return "trans";
  }
  return "?";
}

Relation relation_from_string(const std::string& text) {
  if (text == "nested") return Relation::nested;
  if (text == "contains") return Relation::contains;
  if (text == "orth") return Relation::orthogonal;
  if (text == "trans") return Relation::transverse;
  throw Error(ErrorCode::malformed_input, "unknown relation '" + text + "'");
}

Hierarchy::Hierarchy(HHSInstance instance) {
  auto impl = std::make_shared<Impl>();
  const int n = instance.ambient.size();
  const int k = static_cast<int>(instance.domains.size());
  if (n == 0) malformed("empty ambient graph");
  if (instance.e < 0) malformed("negative E");
  if (k == 0) malformed("no domains");
  impl->ambient_dist = all_pairs_distances(instance.ambient);
  for (int u = 0; u < k; ++u) {
    const Domain& d = instance.domains[u];
    const std::string where = "domain " + std::to_string(u) + " ('" + d.id + "')";
    for (int v = 0; v < u; ++v) {
      if (instance.domains[v].id == d.id) malformed("duplicate domain id '" + d.id + "'", {v, u});
    }
    if (d.space.size() == 0) malformed(where + " has an empty space", {u});
    if (static_cast<int>(d.pi.size()) != n) malformed(where + " pi table has the wrong length", {u});
    for (Vertex x = 0; x < n; ++x) check_subset(d.pi[x], d.space.size(), where + " pi of vertex " + std::to_string(x), {u, x});
    if (static_cast<int>(d.rel.size()) != k) malformed(where + " relation row has the wrong length", {u});
    for (int v = 0; v < k; ++v) {
      if ((v == u) != (d.rel[v] == Relation::self)) malformed(where + " relation to " + std::to_string(v) + " is invalid", {u, v});
    }
    if (static_cast<int>(d.rho.size()) != k) malformed(where + " rho row has the wrong length", {u});
    for (int v = 0; v < k; ++v) {
      if (d.rho[v]) check_subset(*d.rho[v], instance.domains[v].space.size(), where + " rho to " + std::to_string(v), {u, v});
    }
    if (!d.rho_down.empty() && static_cast<int>(d.rho_down.size()) != k) malformed(where + " rho_down row has the wrong length", {u});
    for (int v = 0; v < static_cast<int>(d.rho_down.size()); ++v) {
      if (d.rho_down[v].empty()) continue;
      if (static_cast<int>(d.rho_down[v].size()) != d.space.size()) malformed(where + " rho_down to " + std::to_string(v) + " has the wrong length", {u, v});
      for (const VertexSet& s : d.rho_down[v]) check_subset(s, instance.domains[v].space.size(), where + " rho_down entry", {u, v});
    }
    impl->space_dist.push_back(all_pairs_distances(d.space));
    impl->space_tree.push_back(is_tree(d.space) ? 1 : 0);
  }
  impl->instance = std::move(instance);
  impl_ = std::move(impl);
}

int Hierarchy::index_of(const std::string& id) const {
  for (int u = 0; u < domain_count(); ++u) {
    if (domain(u).id == id) return u;
  }
  throw Error(ErrorCode::malformed_input, "unknown domain id '" + id + "'");
}

int Hierarchy::domain_distance(int u, Vertex x, Vertex y) const {
  return set_diameter(space_distances(u), set_union(pi(u, x), pi(u, y)));
}

int Hierarchy::to_set(int u, Vertex x, const VertexSet& set) const {
  return set_distance(space_distances(u), pi(u, x), set);
}

const VertexSet* Hierarchy::rho(int v, int u) const {
  const auto& r = domain(v).rho[u];
  return r ? &*r : nullptr;
}

InstanceDiagnostics validate_instance(const Hierarchy& h) {
  InstanceDiagnostics diag;
  const int n = h.ambient().size();
  const int k = h.domain_count();
  const Rational e = h.e();
  auto measure = [&](int value) { diag.least_e = std::max(diag.least_e, value); };
  auto defect = [&](const std::string& axiom, const std::string& message, std::vector<int> witness) {
    diag.defects.push_back({axiom, message, std::move(witness)});
  };

  for (int u = 0; u < k; ++u) {
    for (int v = u + 1; v < k; ++v) {
      if (h.relation(v, u) != mirror(h.relation(u, v))) {
        defect("relation", "relations between " + pair_text(u, v) + " are not mirror images", {u, v});
      }
    }
    for (int v = 0; v < k; ++v) {
      if (needs_rho(h.relation(u, v)) && !h.rho(u, v)) {
        defect("rho-missing", "rho of " + std::to_string(u) + " in " + std::to_string(v) + " is required but absent", {u, v});
      }
    }
  }

  for (int u = 0; u < k; ++u) {
    const DistanceMatrix& du = h.space_distances(u);
    int worst = 0;
    Vertex at = -1;
    for (Vertex x = 0; x < n; ++x) {
      const int diam = set_diameter(du, h.pi(u, x));
      if (diam > worst) {
        worst = diam;
        at = x;
      }
    }
    measure(worst);
    if (Rational(worst) > e) defect("pi-diameter", "projection to domain " + std::to_string(u) + " has diameter " + std::to_string(worst), {u, at});

    for (int v = 0; v < k; ++v) {
      const VertexSet* r = h.rho(u, v);
      if (!r) continue;
      const int diam = set_diameter(h.space_distances(v), *r);
      measure(diam);
      if (Rational(diam) > e) defect("rho-diameter", "rho " + pair_text(u, v) + " has diameter " + std::to_string(diam), {u, v});
    }

    // Coarse surjectivity: every vertex of 𝒞U near the image.
    VertexSet image;
    for (Vertex x = 0; x < n; ++x) image = set_union(image, h.pi(u, x));
    const std::vector<int> gap = bfs_distances(h.domain(u).space, image);
    const auto far = std::max_element(gap.begin(), gap.end());
    measure(*far);
    if (Rational(*far) > e) {
      defect("coarsely-onto", "domain " + std::to_string(u) + " has a vertex at distance " + std::to_string(*far) + " from the image",
             {u, static_cast<int>(far - gap.begin())});
    }
  }

  for (int u = 0; u < k; ++u) {
    for (int v = 0; v < k; ++v) {
      const Relation r = h.relation(u, v);
      if (r == Relation::transverse && u < v) {
        const VertexSet* vu = h.rho(v, u);
        const VertexSet* uv = h.rho(u, v);
        if (!vu || !uv) continue;
        int worst = 0;
        Vertex at = -1;
        for (Vertex x = 0; x < n; ++x) {
          const int value = std::min(h.to_set(u, x, *vu), h.to_set(v, x, *uv));
          if (value > worst) {
            worst = value;
            at = x;
          }
        }
        measure(worst);
        if (Rational(worst) > e) defect("consistency-transverse", "pair " + pair_text(u, v) + " fails at vertex " + std::to_string(at), {u, v, at});
      } else if (r == Relation::contains) {
        // v ⊊ u.
        const VertexSet* vu = h.rho(v, u);
        if (!vu) continue;
        const auto& down = h.domain(u).rho_down;
        const bool has_down = !down.empty() && !down[v].empty();
        int worst = 0;
        Vertex at = -1;
        for (Vertex x = 0; x < n; ++x) {
          int value = h.to_set(u, x, *vu);
          if (has_down) {
            VertexSet image = h.pi(v, x);
            for (Vertex p : h.pi(u, x)) image = set_union(image, down[v][p]);
            value = std::min(value, set_diameter(h.space_distances(v), image));
          }
          if (value > worst) {
            worst = value;
            at = x;
          }
        }
        measure(worst);
        if (Rational(worst) > e) defect("consistency-nested", "pair " + pair_text(v, u) + " fails at vertex " + std::to_string(at), {v, u, at});
      }
    }
  }

  const Rational slope = max(e, Rational(1));
  const DistanceMatrix& dg = h.ambient_distances();
  for (int u = 0; u < k; ++u) {
    bool reported = false;
    for (Vertex x = 0; x < n; ++x) {
      for (Vertex y = x + 1; y < n; ++y) {
        const int du = h.domain_distance(u, x, y);
        const int dxy = dg(x, y);
        diag.lipschitz_constant = std::max(diag.lipschitz_constant, (du + dxy) / (dxy + 1));
        if (!reported && Rational(du) > slope * dxy + e) {
          defect("coarse-lipschitz", "domain " + std::to_string(u) + " stretches " + pair_text(x, y), {u, x, y});
          reported = true;
        }
      }
    }
  }
  return diag;
}

ConsistencyVerdict check_consistent_tuple(const Hierarchy& h, const std::vector<VertexSet>& b, const Rational& kappa) {
  const int k = h.domain_count();
  if (static_cast<int>(b.size()) != k) throw Error(ErrorCode::malformed_input, "consistent tuple: wrong number of entries");
  for (int u = 0; u < k; ++u) {
    check_subset(b[u], h.domain(u).space.size(), "tuple entry " + std::to_string(u), {u});
    if (Rational(set_diameter(h.space_distances(u), b[u])) > kappa) {
      throw Error(ErrorCode::malformed_input, "consistent tuple: entry " + std::to_string(u) + " has diameter above kappa", {u});
    }
  }
  ConsistencyVerdict verdict;
  auto record = [&](int u, int v, int value) {
    if (Rational(value) > kappa) {
      if (verdict.consistent) {
        verdict = {false, u, v, value};
      }
    } else if (verdict.consistent && value > verdict.value) {
      verdict.u = u;
      verdict.v = v;
      verdict.value = value;
    }
  };
  for (int u = 0; u < k; ++u) {
    for (int v = 0; v < k; ++v) {
      const Relation r = h.relation(u, v);
      if (r == Relation::transverse && u < v) {
        const VertexSet* vu = h.rho(v, u);
        const VertexSet* uv = h.rho(u, v);
        if (!vu || !uv) continue;
        record(u, v, std::min(set_distance(h.space_distances(u), b[u], *vu), set_distance(h.space_distances(v), b[v], *uv)));
      } else if (r == Relation::contains) {
        const VertexSet* vu = h.rho(v, u);
        if (!vu) continue;
        int value = set_distance(h.space_distances(u), b[u], *vu);
        const auto& down = h.domain(u).rho_down;
        if (!down.empty() && !down[v].empty()) {
          VertexSet image = b[v];
          for (Vertex p : b[u]) image = set_union(image, down[v][p]);
          value = std::min(value, set_diameter(h.space_distances(v), image));
        }
        record(v, u, value);
      }
    }
  }
  return verdict;
}

std::vector<int> relevant_domains(const Hierarchy& h, Vertex x, Vertex y, const Rational& s) {
  if (s < Rational(100) * h.e()) throw Error(ErrorCode::precondition, "relevant_domains: s is below 100E");
  const int n = h.ambient().size();
  if (x < 0 || x >= n || y < 0 || y >= n) throw Error(ErrorCode::precondition, "relevant_domains: vertex out of range", {x, y});
  std::vector<int> rel;
  for (int u = 0; u < h.domain_count(); ++u) {
    if (Rational(h.domain_distance(u, x, y)) > s) rel.push_back(u);
  }

  const int m = static_cast<int>(rel.size());
  std::vector<std::vector<int>> after(m);
  std::vector<int> indegree(m, 0);
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      const int u = rel[i];
      const int v = rel[j];
      if (h.relation(u, v) != Relation::transverse) continue;
      const VertexSet* vu = h.rho(v, u);
      const VertexSet* uv = h.rho(u, v);
      if (!vu || !uv) throw Error(ErrorCode::invariant, "relevant_domains: missing rho for " + pair_text(u, v), {u, v});
      const bool u_first = Rational(h.to_set(u, y, *vu)) <= h.e();
      const bool v_first = Rational(h.to_set(v, y, *uv)) <= h.e();
      if (u_first == v_first) {
        throw Error(ErrorCode::invariant, "relevant_domains: order on " + pair_text(u, v) + " is not total", {u, v});
      }
      const int a = u_first ? i : j;
      const int b = u_first ? j : i;
      after[a].push_back(b);
      ++indegree[b];
    }
  }
  std::priority_queue<int, std::vector<int>, std::greater<>> ready;
  for (int i = 0; i < m; ++i) {
    if (indegree[i] == 0) ready.push(i);
  }
  std::vector<int> order;
  while (!ready.empty()) {
    const int i = ready.top();
    ready.pop();
    order.push_back(rel[i]);
    for (int j : after[i]) {
      if (--indegree[j] == 0) ready.push(j);
    }
  }
  if (static_cast<int>(order.size()) != m) throw Error(ErrorCode::invariant, "relevant_domains: order has a cycle", rel);
  return order;
}

DistanceFormulaFit distance_formula_fit(const Hierarchy& h, const Rational& s, const std::vector<std::pair<Vertex, Vertex>>& samples) {
  DistanceFormulaFit fit;
  fit.s = s;
  const int n = h.ambient().size();
  for (const auto& [x, y] : samples) {
    if (x < 0 || x >= n || y < 0 || y >= n) throw Error(ErrorCode::precondition, "distance_formula_fit: vertex out of range", {x, y});
    DistanceFormulaFitSample p;
    p.x = x;
    p.y = y;
    p.distance = h.ambient_distances()(x, y);
    for (int u = 0; u < h.domain_count(); ++u) {
      const int du = h.domain_distance(u, x, y);
      if (Rational(du) >= s) p.sum += du;
    }
    fit.samples.push_back(p);
  }

  auto b_of = [&](double a) {
    double b = 0;
    for (const auto& p : fit.samples) {
      const double sum = static_cast<double>(p.sum);
      b = std::max({b, sum / a - p.distance, p.distance - a * sum});
    }
    return b;
  };
  double hi = 1;
  for (const auto& p : fit.samples) {
    if (p.sum > 0) hi = std::max({hi, static_cast<double>(p.distance) / p.sum, std::sqrt(static_cast<double>(p.sum))});
  }
  double lo = 1;
  double top = hi;
  for (int iter = 0; iter < 200; ++iter) {
    const double m1 = lo + (top - lo) / 3;
    const double m2 = top - (top - lo) / 3;
    if (m1 + b_of(m1) <= m2 + b_of(m2)) {
      top = m2;
    } else {
      lo = m1;
    }
  }
  double a = (lo + top) / 2;
  if (1 + b_of(1) <= a + b_of(a)) a = 1;
  fit.a = a;
  fit.b = b_of(a);
  for (auto& p : fit.samples) {
    const double sum = static_cast<double>(p.sum);
    p.lower_slack = p.distance - (sum / fit.a - fit.b);
    p.upper_slack = fit.a * sum + fit.b - p.distance;
  }
  return fit;
}

std::vector<Vertex> shadow(const Hierarchy& h, int u, const std::vector<Vertex>& path) {
  std::vector<Vertex> out;
  out.reserve(path.size());
  for (Vertex x : path) out.push_back(h.pi(u, x).front());
  return out;
}

HierarchyPathVerdict is_hierarchy_path(const Hierarchy& h, const std::vector<Vertex>& path, const Rational& d) {
  HierarchyPathVerdict verdict;
  for (Vertex x : path) {
    if (x < 0 || x >= h.ambient().size()) throw Error(ErrorCode::precondition, "is_hierarchy_path: vertex out of range", {x});
  }
  if (!is_parametrised_quasigeodesic(h.ambient_distances(), path, d)) {
    verdict.holds = false;
    verdict.ambient_quasigeodesic = false;
    return verdict;
  }
  for (int u = 0; u < h.domain_count(); ++u) {
    if (!is_unparametrised_quasigeodesic(h.space_distances(u), shadow(h, u, path), d)) {
      verdict.holds = false;
      verdict.failing_domain = u;
      return verdict;
    }
  }
  return verdict;
}

ProductRegion product_region(const Hierarchy& h, int u) {
  if (u < 0 || u >= h.domain_count()) throw Error(ErrorCode::precondition, "product_region: unknown domain", {u});
  std::vector<int> constraining;
  for (int v = 0; v < h.domain_count(); ++v) {
    if (!needs_rho(h.relation(u, v))) continue;
    if (!h.rho(u, v)) throw Error(ErrorCode::precondition, "product_region: missing rho " + pair_text(u, v), {u, v});
    constraining.push_back(v);
  }
  ProductRegion out;
  for (Vertex x = 0; x < h.ambient().size(); ++x) {
    const bool inside = std::all_of(constraining.begin(), constraining.end(),
                                    [&](int v) { return Rational(h.to_set(v, x, *h.rho(u, v))) <= h.e(); });
    if (inside) out.region.push_back(x);
  }
  out.empty_defect = out.region.empty();
  return out;
}

namespace {

std::vector<VertexSet> domain_images(const Hierarchy& h, const VertexSet& a) {
  std::vector<VertexSet> out(h.domain_count());
  for (int u = 0; u < h.domain_count(); ++u) {
    for (Vertex x : a) out[u] = set_union(out[u], h.pi(u, x));
  }
  return out;
}

void check_ambient_set(const Hierarchy& h, const VertexSet& a, const char* what) {
  if (a.empty()) throw Error(ErrorCode::precondition, std::string(what) + ": empty set");
  for (Vertex x : a) {
    if (x < 0 || x >= h.ambient().size()) throw Error(ErrorCode::precondition, std::string(what) + ": vertex out of range", {x});
  }
}

}  // namespace

VertexSet theta_hull(const Hierarchy& h, const VertexSet& a, const Rational& theta) {
  check_ambient_set(h, a, "theta_hull");
  std::vector<VertexSet> hulls = domain_images(h, a);
  for (int u = 0; u < h.domain_count(); ++u) hulls[u] = geodesic_hull(h.space_distances(u), hulls[u]);
  VertexSet out;
  for (Vertex x = 0; x < h.ambient().size(); ++x) {
    bool inside = true;
    for (int u = 0; u < h.domain_count() && inside; ++u) inside = Rational(h.to_set(u, x, hulls[u])) <= theta;
    if (inside) out.push_back(x);
  }
  return out;
}

QuasiconvexityVerdict is_hierarchically_quasiconvex(const Hierarchy& h, const VertexSet& z, const Rational& k0,
                                                    const std::vector<std::pair<Rational, Rational>>& kfun) {
  check_ambient_set(h, z, "is_hierarchically_quasiconvex");
  QuasiconvexityVerdict verdict;
  const std::vector<VertexSet> images = domain_images(h, z);
  for (int u = 0; u < h.domain_count(); ++u) {
    const DistanceMatrix& du = h.space_distances(u);
    for (Vertex v : geodesic_hull(du, images[u])) {
      if (Rational(point_to_set(du, v, images[u])) > k0) {
        verdict.holds = false;
        verdict.failed_clause = "shadow";
        verdict.domain = u;
        verdict.witness = v;
        return verdict;
      }
    }
  }
  const std::vector<int> to_z = bfs_distances(h.ambient(), z);
  for (const auto& [kappa, bound] : kfun) {
    for (Vertex x = 0; x < h.ambient().size(); ++x) {
      bool close = true;
      for (int u = 0; u < h.domain_count() && close; ++u) close = Rational(h.to_set(u, x, images[u])) <= kappa;
      if (close && Rational(to_z[x]) > bound) {
        verdict.holds = false;
        verdict.failed_clause = "realisation";
        verdict.witness = x;
        verdict.kappa = kappa;
        return verdict;
      }
    }
  }
  return verdict;
}

Colouring find_bbf_colouring(const Hierarchy& h) {
  Colouring c;
  c.colour_of.assign(h.domain_count(), -1);
  for (int u = 0; u < h.domain_count(); ++u) {
    int chosen = -1;
    for (int i = 0; i < c.size() && chosen < 0; ++i) {
      const auto& cls = c.classes[i];
      if (std::all_of(cls.begin(), cls.end(), [&](int v) { return h.relation(u, v) == Relation::transverse; })) chosen = i;
    }
    if (chosen < 0) {
      chosen = c.size();
      c.classes.emplace_back();
    }
    c.classes[chosen].push_back(u);
    c.colour_of[u] = chosen;
  }
  return c;
}

bool is_bbf_colouring(const Hierarchy& h, const Colouring& c) {
  std::vector<int> seen(h.domain_count(), 0);
  if (static_cast<int>(c.colour_of.size()) != h.domain_count()) return false;
  for (int i = 0; i < c.size(); ++i) {
    const auto& cls = c.classes[i];
    if (cls.empty()) return false;
    for (std::size_t a = 0; a < cls.size(); ++a) {
      const int u = cls[a];
      if (u < 0 || u >= h.domain_count() || c.colour_of[u] != i) return false;
      ++seen[u];
      for (std::size_t b = a + 1; b < cls.size(); ++b) {
        if (h.relation(u, cls[b]) != Relation::transverse) return false;
      }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; });
}

Vertex domain_median(const Hierarchy& h, int u, const VertexSet& a, const VertexSet& b, const VertexSet& c) {
  const DistanceMatrix& d = h.space_distances(u);
  if (h.space_is_tree(u)) return walk_median(h.domain(u).space, d, a.front(), b.front(), c.front());
  Vertex best = 0;
  int best_cost = std::numeric_limits<int>::max();
  for (Vertex v = 0; v < d.size(); ++v) {
    const int cost = point_to_set(d, v, a) + point_to_set(d, v, b) + point_to_set(d, v, c);
    if (cost < best_cost) {
      best_cost = cost;
      best = v;
    }
  }
  return best;
}

HhsMedian hhs_median(const Hierarchy& h, Vertex x, Vertex y, Vertex z) {
  const int n = h.ambient().size();
  for (Vertex v : {x, y, z}) {
    if (v < 0 || v >= n) throw Error(ErrorCode::precondition, "hhs_median: vertex out of range", {v});
  }
  std::vector<Vertex> medians;
  for (int u = 0; u < h.domain_count(); ++u) medians.push_back(domain_median(h, u, h.pi(u, x), h.pi(u, y), h.pi(u, z)));
  HhsMedian best{0, std::numeric_limits<int>::max()};
  for (Vertex g = 0; g < n; ++g) {
    int cost = 0;
    for (int u = 0; u < h.domain_count() && cost < best.defect; ++u) {
      cost = std::max(cost, point_to_set(h.space_distances(u), medians[u], h.pi(u, g)));
    }
    if (cost < best.defect) best = {g, cost};
  }
  return best;
}

}  // namespace cubulate
