#include "cubulate/embedding.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "cubulate/error.hpp"
#include "cubulate/quasigeodesic.hpp"
#include "cubulate/rng.hpp"

namespace cubulate {

EmbeddingParameters default_parameters(const Rational& e) {
  EmbeddingParameters p;
  p.d = max(Rational(100) * e, Rational(1));
  p.k = Rational(101) * p.d + 1;
  p.l = 1;
  return p;
}

ProjectionSystem colour_projection_system(const Hierarchy& h, const std::vector<int>& cls) {
  ProjectionSystem s;
  const int n = static_cast<int>(cls.size());
  for (int u : cls) s.pieces.push_back(h.domain(u).space);
  s.proj.assign(n, std::vector<VertexSet>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      const VertexSet* r = h.rho(cls[b], cls[a]);
      if (!r) {
        throw Error(ErrorCode::precondition, "colour class needs rho of domain " + std::to_string(cls[b]) + " in " + std::to_string(cls[a]),
                    {cls[b], cls[a]});
      }
      s.proj[a][b] = *r;
    }
  }
  s.theta = verify_projection_axioms(s).least_theta;
  return s;
}

namespace {

// Worst base-point slack if g is assigned position a of the class.
Rational basepoint_slack(const Hierarchy& h, const std::vector<int>& cls, int a, Vertex g, int* worst_domain = nullptr) {
  Rational worst = 0;
  bool any = false;
  for (int b = 0; b < static_cast<int>(cls.size()); ++b) {
    if (b == a) continue;
    const Rational slack = Rational(h.to_set(cls[b], g, *h.rho(cls[a], cls[b]))) - h.e();
    if (!any || slack > worst) {
      worst = slack;
      any = true;
      if (worst_domain) *worst_domain = cls[b];
    }
  }
  return any ? worst : Rational(0);
}

}  // namespace

ColouredSystem build_coloured_system(const Hierarchy& h, const Colouring& colouring, const EmbeddingParameters& parameters,
                                     std::optional<std::vector<std::vector<int>>> orbit) {
  if (!is_bbf_colouring(h, colouring)) throw Error(ErrorCode::precondition, "build_coloured_system: not a BBF colouring");
  const int n = h.ambient().size();
  ColouredSystem cs{h, colouring, parameters, {}, {}, {}, 0};
  for (int i = 0; i < colouring.size(); ++i) {
    ProjectionSystem s = colour_projection_system(h, colouring.classes[i]);
    try {
      cs.quasitrees.emplace_back(std::move(s), parameters.k, parameters.l);
    } catch (const Error& err) {
      throw Error(err.code(), "colour " + std::to_string(i) + ": " + err.what(), {i});
    }
  }

  if (orbit) {
    if (static_cast<int>(orbit->size()) != colouring.size()) throw Error(ErrorCode::malformed_input, "orbit table has the wrong number of colours");
    for (int i = 0; i < colouring.size(); ++i) {
      const auto& row = (*orbit)[i];
      if (static_cast<int>(row.size()) != n) throw Error(ErrorCode::malformed_input, "orbit row has the wrong length", {i});
      for (int a : row) {
        if (a < 0 || a >= static_cast<int>(colouring.classes[i].size())) throw Error(ErrorCode::malformed_input, "orbit entry out of range", {i, a});
      }
    }
    cs.orbit = std::move(*orbit);
  } else {
    cs.orbit.assign(colouring.size(), std::vector<int>(n, 0));
    for (int i = 0; i < colouring.size(); ++i) {
      const auto& cls = colouring.classes[i];
      for (Vertex g = 0; g < n; ++g) {
        Rational best = 0;
        for (int a = 0; a < static_cast<int>(cls.size()); ++a) {
          const Rational slack = basepoint_slack(h, cls, a, g);
          if (a == 0 || slack < best) {
            best = slack;
            cs.orbit[i][g] = a;
          }
        }
      }
    }
  }

  for (int i = 0; i < colouring.size(); ++i) {
    const auto& cls = colouring.classes[i];
    for (Vertex g = 0; g < n; ++g) {
      const int a = cs.orbit[i][g];
      for (int b = 0; b < static_cast<int>(cls.size()); ++b) {
        if (b == a) continue;
        const Rational slack = Rational(h.to_set(cls[b], g, *h.rho(cls[a], cls[b]))) - h.e();
        cs.max_basepoint_slack = max(cs.max_basepoint_slack, slack);
        if (slack > 0) cs.basepoint_violations.push_back({i, g, cls[b], slack});
      }
    }
  }
  return cs;
}

PsiImage psi_map(const ColouredSystem& cs) {
  PsiImage out;
  const Hierarchy& h = cs.hierarchy;
  for (int i = 0; i < cs.colours(); ++i) {
    const auto& cls = cs.colouring.classes[i];
    std::vector<int> row;
    row.reserve(h.ambient().size());
    for (Vertex g = 0; g < h.ambient().size(); ++g) {
      const int a = cs.orbit[i][g];
      row.push_back(cs.quasitrees[i].global(a, h.pi(cls[a], g).front()));
    }
    out.psi.push_back(std::move(row));
  }
  return out;
}

Rational product_distance(const ColouredSystem& cs, const PsiImage& psi, Vertex x, Vertex y) {
  Rational total = 0;
  for (int i = 0; i < cs.colours(); ++i) total = total + cs.quasitrees[i].distance(psi.psi[i][x], psi.psi[i][y]);
  return total;
}

EmbeddingReport measure_embedding(const ColouredSystem& cs, const PsiImage& psi, const std::vector<std::pair<Vertex, Vertex>>& samples) {
  const int n = cs.hierarchy.ambient().size();
  EmbeddingReport report;
  for (const auto& [x, y] : samples) {
    if (x < 0 || x >= n || y < 0 || y >= n) throw Error(ErrorCode::precondition, "measure_embedding: vertex out of range", {x, y});
    EmbeddingSample s{x, y, cs.hierarchy.ambient_distances()(x, y), product_distance(cs, psi, x, y)};
    const double dg = s.ambient;
    const double dp = s.image.to_double();
    if (dg > 0) report.kappa_upper = std::max(report.kappa_upper, dp / dg);
    if (dp > 0) report.kappa_lower = std::max(report.kappa_lower, dg / dp);
    report.kappa = std::max({report.kappa, dp / (dg + 1), (-dp + std::sqrt(dp * dp + 4 * dg)) / 2});
    report.samples.push_back(s);
  }
  for (const auto& s : report.samples) {
    const double dg = s.ambient;
    const double dp = s.image.to_double();
    report.additive = std::max({report.additive, dp - report.kappa_upper * dg, dg / report.kappa_lower - dp});
  }
  return report;
}

int quasitree_median(const QuasiTreeSpace& q, int a, int b, int c) {
  int best = 0;
  std::int64_t best_cost = std::numeric_limits<std::int64_t>::max();
  for (int v = 0; v < q.size(); ++v) {
    const std::int64_t cost = q.scaled_distance(a, v) + q.scaled_distance(b, v) + q.scaled_distance(c, v);
    if (cost < best_cost) {
      best_cost = cost;
      best = v;
    }
  }
  return best;
}

namespace {

UnitGraph quasitree_unit_graph(const QuasiTreeSpace& q) {
  std::vector<Edge> edges;
  for (int p = 0; p < q.piece_count(); ++p) {
    for (const Edge& e : q.system().pieces[p].edges()) edges.emplace_back(q.global(p, e.first), q.global(p, e.second));
  }
  for (const AttachmentEdge& e : q.attachments()) edges.emplace_back(e.a, e.b);
  return UnitGraph(q.size(), std::move(edges));
}

std::size_t quasitree_edge_count(const QuasiTreeSpace& q) {
  std::size_t count = q.attachments().size();
  for (const UnitGraph& g : q.system().pieces) count += g.edges().size();
  return count;
}

}  // namespace

bool quasitree_has_exact_median(const QuasiTreeSpace& q) {
  if (!q.connected()) return false;
  if (quasitree_edge_count(q) + 1 == static_cast<std::size_t>(q.size())) return true;
  if (q.l() != 1 || q.size() > 700) return false;
  return is_median_graph(quasitree_unit_graph(q)).is_median;
}

QuasimedianReport quasimedian_defect(const ColouredSystem& cs, const PsiImage& psi, const std::vector<std::array<Vertex, 3>>& triples) {
  QuasimedianReport report;
  for (const auto& q : cs.quasitrees) report.exact_median.push_back(quasitree_has_exact_median(q));
  for (const auto& t : triples) {
    const Vertex m = hhs_median(cs.hierarchy, t[0], t[1], t[2]).vertex;
    Rational defect = 0;
    for (int i = 0; i < cs.colours(); ++i) {
      const auto& row = psi.psi[i];
      const int target = quasitree_median(cs.quasitrees[i], row[t[0]], row[t[1]], row[t[2]]);
      defect = defect + cs.quasitrees[i].distance(row[m], target);
    }
    report.max_defect = max(report.max_defect, defect);
    ++report.histogram[defect];
    report.defects.push_back(defect);
  }
  return report;
}

ShadowReport shadow_path_report(const ColouredSystem& cs, const PsiImage& psi, const std::vector<Vertex>& path) {
  const Hierarchy& h = cs.hierarchy;
  const Rational& d = cs.parameters.d;
  if (path.empty()) throw Error(ErrorCode::precondition, "shadow_path_report: empty path");
  const HierarchyPathVerdict verdict = is_hierarchy_path(h, path, d);
  if (!verdict.holds) {
    throw Error(ErrorCode::precondition, verdict.ambient_quasigeodesic
                                             ? "shadow_path_report: shadow in domain " + std::to_string(verdict.failing_domain) + " is not a quasigeodesic"
                                             : "shadow_path_report: path is not a quasigeodesic",
                {verdict.failing_domain});
  }
  const int points = static_cast<int>(path.size());
  const Vertex start = path.front();
  const Vertex end = path.back();
  const std::vector<int> relevant = relevant_domains(h, start, end, Rational(100) * d);
  const Rational bound = Rational(6) * cs.parameters.k;

  ShadowReport report;
  for (int i = 0; i < cs.colours(); ++i) {
    const QuasiTreeSpace& q = cs.quasitrees[i];
    const auto& row = psi.psi[i];
    const auto& cls = cs.colouring.classes[i];
    ColourShadow out;
    out.mu = least_quasigeodesic_constant(points, [&](int s, int t) { return q.distance(row[path[s]], row[path[t]]); });
    for (int u : relevant) {
      const auto pos = std::find(cls.begin(), cls.end(), u);
      if (pos == cls.end()) continue;
      out.relevant.push_back(u);
      const int piece = static_cast<int>(pos - cls.begin());
      int a = points;
      int b = -1;
      for (int t = 0; t < points; ++t) {
        if (a == points && Rational(h.domain_distance(u, path[t], start)) >= Rational(2) * d) a = t;
        if (Rational(h.domain_distance(u, path[t], end)) >= Rational(2) * d) b = t;
      }
      for (int t = a; t <= b; ++t) {
        Rational nearest = -1;
        for (Vertex p : h.pi(u, path[t])) {
          const Rational dist = q.distance(row[path[t]], q.global(piece, p));
          if (nearest < 0 || dist < nearest) nearest = dist;
        }
        ++out.containment_checks;
        out.max_containment_distance = max(out.max_containment_distance, nearest);
        if (nearest > bound) ++out.containment_violations;
      }
    }
    report.colours.push_back(std::move(out));
  }
  return report;
}

namespace {

// Breadth-first spanning tree, parents chosen as the least-index neighbour
// one level up.
UnitGraph bfs_tree(const UnitGraph& g, Vertex root) {
  const Vertex src[] = {root};
  const std::vector<int> level = bfs_distances(g, src);
  std::vector<Edge> edges;
  for (Vertex v = 0; v < g.size(); ++v) {
    if (v == root) continue;
    for (Vertex w : g.neighbours(v)) {
      if (level[w] == level[v] - 1) {
        edges.emplace_back(std::min(v, w), std::max(v, w));
        break;
      }
    }
  }
  return UnitGraph(g.size(), std::move(edges));
}

}  // namespace

TreeApproximation tree_approximate(const QuasiTreeSpace& q, std::uint64_t seed) {
  if (!q.connected()) throw Error(ErrorCode::disconnected, "tree_approximate: quasitree is disconnected");
  if (!q.l().is_integer()) throw Error(ErrorCode::precondition, "tree_approximate: L must be an integer");
  const int n0 = q.size();
  const int len = static_cast<int>(q.l().num());

  std::vector<Edge> edges;
  for (int p = 0; p < q.piece_count(); ++p) {
    for (const Edge& e : q.system().pieces[p].edges()) edges.emplace_back(q.global(p, e.first), q.global(p, e.second));
  }
  int next = n0;
  for (const AttachmentEdge& e : q.attachments()) {
    int prev = e.a;
    for (int step = 1; step < len; ++step) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
    edges.emplace_back(prev, e.b);
  }
  const UnitGraph g(next, std::move(edges));

  constexpr int kExhaustiveLimit = 300;
  constexpr int kRoots = 48;
  constexpr int kSources = 64;
  constexpr int kTargets = 16;
  const bool exhaustive = next <= kExhaustiveLimit;

  std::vector<Vertex> roots;
  std::vector<std::pair<int, int>> pairs;
  if (exhaustive) {
    for (Vertex v = 0; v < n0; ++v) roots.push_back(v);
    for (int a = 0; a < n0; ++a) {
      for (int b = a + 1; b < n0; ++b) pairs.emplace_back(a, b);
    }
  } else {
    for (int i = 0; i < kRoots; ++i) roots.push_back(static_cast<Vertex>(static_cast<std::int64_t>(i) * n0 / kRoots));
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    SeededRng rng = SeededRng(seed).split("tree_approximate");
    for (int s = 0; s < kSources; ++s) {
      const int a = rng.uniform(0, n0 - 1);
      for (int t = 0; t < kTargets; ++t) pairs.emplace_back(a, rng.uniform(0, n0 - 1));
    }
    std::sort(pairs.begin(), pairs.end());
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  }

  TreeApproximation best;
  best.additive = -1;
  for (Vertex root : roots) {
    UnitGraph tree = bfs_tree(g, root);
    std::int64_t additive = 0;
    double multiplicative = 1;
    std::vector<int> row;
    int row_source = -1;
    for (const auto& [a, b] : pairs) {
      if (a != row_source) {
        const Vertex src[] = {a};
        row = bfs_distances(tree, src);
        row_source = a;
      }
      const std::int64_t dq = q.distance(a, b).num();
      additive = std::max<std::int64_t>(additive, row[b] - dq);
      if (dq > 0) multiplicative = std::max(multiplicative, static_cast<double>(row[b]) / static_cast<double>(dq));
    }
    if (best.additive < 0 || additive < best.additive) {
      best.tree = std::move(tree);
      best.root = root;
      best.additive = additive;
      best.multiplicative = multiplicative;
    }
  }
  best.map.resize(n0);
  for (int v = 0; v < n0; ++v) best.map[v] = v;
  best.exhaustive = exhaustive;
  return best;
}

PromotionResult promote_to_cube_complex(std::vector<UnitGraph> factors, const VertexSet& points, int c) {
  MedianAlgebra product = MedianAlgebra::product_of_trees(std::move(factors));
  if (points.empty()) throw Error(ErrorCode::precondition, "promote_to_cube_complex: no points");
  for (Vertex v : points) {
    if (v < 0 || v >= product.size()) throw Error(ErrorCode::precondition, "promote_to_cube_complex: point out of range", {v});
  }
  const VertexSet a = make_vertex_set(points);
  ConnectifyResult connect = connectify_and_close(product, a, c);
  const bool median_closed = is_median_closed(product, connect.closure);
  bool isometric = false;
  try {
    isometric = check_isometric_subalgebra(product, connect.closure).isometric;
  } catch (const Error&) {
    isometric = false;
  }
  CubeSkeleton skeleton = hyperplane_decomposition(MedianAlgebra::subalgebra(product, connect.closure));
  const int hausdorff = connect.hausdorff;
  const bool one_connected = connect.one_connected;
  return PromotionResult{std::move(product), a,        std::move(connect), std::move(skeleton), hausdorff,
                         one_connected,      median_closed, isometric};
}

Pipeline build_pipeline(const ColouredSystem& cs, const PsiImage& psi, std::uint64_t seed) {
  std::vector<TreeApproximation> trees;
  std::vector<DistanceMatrix> tree_dist;
  std::vector<UnitGraph> factors;
  for (int i = 0; i < cs.colours(); ++i) {
    trees.push_back(tree_approximate(cs.quasitrees[i], seed + static_cast<std::uint64_t>(i)));
    tree_dist.push_back(all_pairs_distances(trees.back().tree));
    factors.push_back(trees.back().tree);
  }
  const UnitGraph& ambient = cs.hierarchy.ambient();
  std::vector<std::vector<Vertex>> coords(ambient.size());
  for (Vertex g = 0; g < ambient.size(); ++g) {
    for (int i = 0; i < cs.colours(); ++i) coords[g].push_back(trees[i].map[psi.psi[i][g]]);
  }
  int c = 1;
  for (const Edge& e : ambient.edges()) {
    int sum = 0;
    for (int i = 0; i < cs.colours(); ++i) sum += tree_dist[i](coords[e.first][i], coords[e.second][i]);
    c = std::max(c, sum);
  }
  std::vector<Vertex> phi(ambient.size());
  std::int64_t stride = 1;
  for (int i = cs.colours() - 1; i >= 0; --i) {
    for (Vertex g = 0; g < ambient.size(); ++g) phi[g] += static_cast<Vertex>(coords[g][i] * stride);
    stride *= factors[i].size();
  }
  PromotionResult promotion = promote_to_cube_complex(factors, make_vertex_set(phi), c);
  return Pipeline{std::move(trees), std::move(phi), c, std::move(promotion)};
}

ConvexCorrespondence hqc_convex_correspondence(const ColouredSystem& cs, const Pipeline& p, const VertexSet& z,
                                               std::optional<QuasiconvexityVerdict> hqc) {
  if (z.empty()) throw Error(ErrorCode::precondition, "hqc_convex_correspondence: empty set");
  const MedianAlgebra& product = p.promotion.product;
  VertexSet image;
  for (Vertex g : z) {
    if (g < 0 || g >= cs.hierarchy.ambient().size()) throw Error(ErrorCode::precondition, "hqc_convex_correspondence: vertex out of range", {g});
    image.push_back(p.phi[g]);
  }
  image = make_vertex_set(std::move(image));

  const int k = static_cast<int>(product.factors().size());
  std::vector<std::vector<char>> in_hull(k);
  for (int i = 0; i < k; ++i) {
    const UnitGraph& tree = product.factors()[i];
    VertexSet coords;
    for (Vertex v : image) coords.push_back(product.coordinates(v)[i]);
    const VertexSet hull = geodesic_hull(all_pairs_distances(tree), make_vertex_set(std::move(coords)));
    in_hull[i].assign(tree.size(), 0);
    for (Vertex v : hull) in_hull[i][v] = 1;
  }

  ConvexCorrespondence out;
  const VertexSet& closure = p.promotion.connect.closure;
  for (std::size_t s = 0; s < closure.size(); ++s) {
    const std::vector<Vertex> c = product.coordinates(closure[s]);
    bool inside = true;
    for (int i = 0; i < k && inside; ++i) inside = in_hull[i][c[i]];
    if (inside) {
      out.z_prime.push_back(closure[s]);
      out.z_prime_skeleton.push_back(static_cast<Vertex>(s));
    }
  }
  out.convex = is_convex(p.promotion.skeleton, out.z_prime_skeleton);
  out.hausdorff = hausdorff_distance(product.graph(), image, out.z_prime);
  if (hqc) {
    out.hqc_checked = true;
    out.hqc = hqc->holds;
  }
  return out;
}

CoarseHellyResult coarse_helly_experiment(const ColouredSystem& cs, const Pipeline& p, const std::vector<VertexSet>& sets, const Rational& r) {
  const Hierarchy& h = cs.hierarchy;
  if (sets.empty()) throw Error(ErrorCode::precondition, "coarse_helly_experiment: no sets");
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (sets[i].empty()) throw Error(ErrorCode::precondition, "coarse_helly_experiment: empty set", {static_cast<int>(i)});
    for (std::size_t j = 0; j < i; ++j) {
      const int d = set_distance(h.ambient_distances(), sets[j], sets[i]);
      if (Rational(d) > r) {
        throw Error(ErrorCode::precondition,
                    "coarse_helly_experiment: sets " + std::to_string(j) + " and " + std::to_string(i) + " are " + std::to_string(d) + " apart",
                    {static_cast<int>(j), static_cast<int>(i)});
      }
    }
  }
  const CubeSkeleton& skeleton = p.promotion.skeleton;
  std::vector<VertexSet> images;
  for (const VertexSet& z : sets) images.push_back(hqc_convex_correspondence(cs, p, make_vertex_set(z)).z_prime_skeleton);
  int r0 = 0;
  for (std::size_t i = 0; i < images.size(); ++i) {
    for (std::size_t j = i + 1; j < images.size(); ++j) r0 = std::max(r0, set_distance(skeleton.median().distances(), images[i], images[j]));
  }
  CoarseHellyResult out;
  out.inflation = (r0 + 1) / 2;
  std::vector<VertexSet> family;
  for (const VertexSet& z : images) family.push_back(convex_hull(skeleton, neighbourhood(skeleton.graph(), z, out.inflation)));
  const HellyResult helly = helly_intersection(skeleton, family);
  if (!helly.point) throw Error(ErrorCode::invariant, "coarse_helly_experiment: inflated hulls are not pairwise intersecting");
  out.helly_point = p.promotion.connect.closure[*helly.point];

  const MedianAlgebra& product = p.promotion.product;
  int best = std::numeric_limits<int>::max();
  for (Vertex g = 0; g < h.ambient().size(); ++g) {
    const int d = product.distance(p.phi[g], out.helly_point);
    if (d < best) {
      best = d;
      out.center = g;
    }
  }
  out.pullback_distance = best;
  for (const VertexSet& z : sets) out.r = std::max(out.r, point_to_set(h.ambient_distances(), out.center, make_vertex_set(z)));
  return out;
}

PackingResult bounded_packing_count(const Hierarchy& h, const std::vector<VertexSet>& family, const Rational& r) {
  const int m = static_cast<int>(family.size());
  PackingResult out;
  if (m == 0) return out;
  std::vector<VertexSet> sets;
  for (int i = 0; i < m; ++i) {
    if (family[i].empty()) throw Error(ErrorCode::precondition, "bounded_packing_count: empty member", {i});
    for (Vertex v : family[i]) {
      if (v < 0 || v >= h.ambient().size()) throw Error(ErrorCode::precondition, "bounded_packing_count: vertex out of range", {i, v});
    }
    sets.push_back(make_vertex_set(family[i]));
  }
  std::vector<std::vector<char>> close(m, std::vector<char>(m, 0));
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (!set_intersection(sets[i], sets[j]).empty()) throw Error(ErrorCode::precondition, "bounded_packing_count: members overlap", {i, j});
      close[i][j] = close[j][i] = Rational(set_distance(h.ambient_distances(), sets[i], sets[j])) <= r;
    }
  }

  constexpr int kExactLimit = 20;
  if (m <= kExactLimit) {
    std::vector<std::uint32_t> adj(m, 0);
    for (int i = 0; i < m; ++i) {
      adj[i] = std::uint32_t{1} << i;
      for (int j = 0; j < m; ++j) {
        if (close[i][j]) adj[i] |= std::uint32_t{1} << j;
      }
    }
    std::uint32_t best = 1;
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << m); ++mask) {
      if (std::popcount(mask) <= std::popcount(best)) continue;
      bool clique = true;
      for (int i = 0; i < m && clique; ++i) {
        if ((mask >> i) & 1U) clique = (mask & ~adj[i]) == 0;
      }
      if (clique) best = mask;
    }
    for (int i = 0; i < m; ++i) {
      if ((best >> i) & 1U) out.members.push_back(i);
    }
  } else {
    out.exact = false;
    std::vector<int> order(m);
    for (int i = 0; i < m; ++i) order[i] = i;
    auto degree = [&](int i) { return std::count(close[i].begin(), close[i].end(), 1); };
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return degree(a) > degree(b); });
    for (int i : order) {
      if (std::all_of(out.members.begin(), out.members.end(), [&](int j) { return close[i][j] != 0; })) out.members.push_back(i);
    }
    std::sort(out.members.begin(), out.members.end());
  }
  out.n = static_cast<int>(out.members.size());
  return out;
}

}  // namespace cubulate
