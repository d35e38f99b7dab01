#include "cubulate/fixtures.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "cubulate/error.hpp"
#include "cubulate/median.hpp"

namespace cubulate::fixtures {

UnitGraph path_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return UnitGraph(n, std::move(edges));
}

UnitGraph cycle_graph(int n) {
  if (n < 3) throw Error(ErrorCode::precondition, "cycle_graph needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return UnitGraph(n, std::move(edges));
}

UnitGraph grid_graph(int rows, int cols) {
  std::vector<Edge> edges;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const int v = r * cols + c;
      if (c + 1 < cols) edges.emplace_back(v, v + 1);
      if (r + 1 < rows) edges.emplace_back(v, v + cols);
    }
  }
  return UnitGraph(rows * cols, std::move(edges));
}

UnitGraph hypercube(int d) {
  const int n = 1 << d;
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) {
    for (int i = 0; i < d; ++i) {
      if (!(v & (1 << i))) edges.emplace_back(v, v | (1 << i));
    }
  }
  return UnitGraph(n, std::move(edges));
}

UnitGraph complete_bipartite(int a, int b) {
  std::vector<Edge> edges;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) edges.emplace_back(i, a + j);
  }
  return UnitGraph(a + b, std::move(edges));
}

UnitGraph star(int leaves) {
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return UnitGraph(leaves + 1, std::move(edges));
}

UnitGraph spider(int legs, int length) {
  std::vector<Edge> edges;
  int next = 1;
  for (int l = 0; l < legs; ++l) {
    int prev = 0;
    for (int s = 0; s < length; ++s) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
  }
  return UnitGraph(next, std::move(edges));
}

UnitGraph random_tree(int n, SeededRng& rng) {
  if (n <= 0) throw Error(ErrorCode::precondition, "random_tree needs n >= 1");
  if (n == 1) return UnitGraph(1, {});
  if (n == 2) return UnitGraph(2, {{0, 1}});
  std::vector<int> code(n - 2);
  for (int& c : code) c = rng.uniform(0, n - 1);
  std::vector<int> degree(n, 1);
  for (int c : code) ++degree[c];
  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (int v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  std::vector<Edge> edges;
  for (int c : code) {
    const int leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, c);
    if (--degree[c] == 1) leaves.push(c);
  }
  const int u = leaves.top();
  leaves.pop();
  edges.emplace_back(u, leaves.top());
  return UnitGraph(n, std::move(edges));
}

UnitGraph random_tree_product(SeededRng& rng, int factors, int max_size) {
  std::vector<UnitGraph> trees;
  int size = 1;
  for (int i = 0; i < factors; ++i) {
    const int room = max_size / size;
    if (room < 2) break;
    const int n = rng.uniform(2, std::min(room, 8));
    trees.push_back(random_tree(n, rng));
    size *= n;
  }
  if (trees.empty()) return UnitGraph(1, {});
  return MedianAlgebra::product_of_trees(std::move(trees)).graph();
}

Wallspace cube_wallspace(int d) {
  Wallspace w;
  w.points = 1 << d;
  for (int i = 0; i < d; ++i) {
    Wall wall;
    for (int v = 0; v < w.points; ++v) ((v >> i) & 1 ? wall.right : wall.left).push_back(v);
    w.walls.push_back(std::move(wall));
  }
  return w;
}

HHSInstance product_lines_instance(int n) {
  if (n < 1) throw Error(ErrorCode::precondition, "product_lines_instance needs n >= 1");
  HHSInstance inst;
  inst.ambient = grid_graph(n, n);
  inst.e = 0;
  Domain h{"H", path_graph(n), {}, {Relation::self, Relation::orthogonal}, {std::nullopt, std::nullopt}, {}};
  Domain v{"V", path_graph(n), {}, {Relation::orthogonal, Relation::self}, {std::nullopt, std::nullopt}, {}};
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      h.pi.push_back({c});
      v.pi.push_back({r});
    }
  }
  inst.domains = {std::move(h), std::move(v)};
  return inst;
}

HHSInstance tree_with_axes(const UnitGraph& tree, const std::vector<std::vector<Vertex>>& axes) {
  if (!is_tree(tree)) throw Error(ErrorCode::precondition, "tree_with_axes: ambient is not a tree");
  const DistanceMatrix d = all_pairs_distances(tree);
  const int n = tree.size();
  const int k = static_cast<int>(axes.size());
  std::vector<int> owner(n, -1);
  for (int a = 0; a < k; ++a) {
    const auto& line = axes[a];
    if (line.empty()) throw Error(ErrorCode::precondition, "tree_with_axes: empty axis", {a});
    if (line != least_geodesic(tree, d, line.front(), line.back())) {
      throw Error(ErrorCode::precondition, "tree_with_axes: axis is not a geodesic", {a});
    }
    for (Vertex v : line) {
      if (owner[v] >= 0) throw Error(ErrorCode::precondition, "tree_with_axes: axes overlap", {owner[v], a});
      owner[v] = a;
    }
  }

  // nearest[a][x] = position on axis a nearest to x (unique in a tree).
  std::vector<std::vector<Vertex>> nearest(k, std::vector<Vertex>(n));
  for (int a = 0; a < k; ++a) {
    for (Vertex x = 0; x < n; ++x) {
      int best = 0;
      for (int t = 1; t < static_cast<int>(axes[a].size()); ++t) {
        if (d(x, axes[a][t]) < d(x, axes[a][best])) best = t;
      }
      nearest[a][x] = best;
    }
  }

  HHSInstance inst;
  inst.ambient = tree;
  inst.e = 0;
  const int m = k + 1;

  Domain top{"T", tree, {}, std::vector<Relation>(m, Relation::contains), std::vector<std::optional<VertexSet>>(m), {}};
  top.rel[0] = Relation::self;
  top.rho_down.assign(m, {});
  for (Vertex x = 0; x < n; ++x) top.pi.push_back({x});
  for (int a = 0; a < k; ++a) {
    for (Vertex x = 0; x < n; ++x) top.rho_down[a + 1].push_back({nearest[a][x]});
  }
  inst.domains.push_back(std::move(top));

  for (int a = 0; a < k; ++a) {
    const int len = static_cast<int>(axes[a].size());
    Domain axis{"A" + std::to_string(a), path_graph(len), {}, std::vector<Relation>(m, Relation::transverse),
                std::vector<std::optional<VertexSet>>(m), {}};
    axis.rel[0] = Relation::nested;
    axis.rel[a + 1] = Relation::self;
    for (Vertex x = 0; x < n; ++x) axis.pi.push_back({nearest[a][x]});
    axis.rho[0] = VertexSet{axes[a][(len - 1) / 2]};
    for (int b = 0; b < k; ++b) {
      if (b == a) continue;
      VertexSet gate;
      for (Vertex v : axes[a]) gate.push_back(nearest[b][v]);
      axis.rho[b + 1] = make_vertex_set(std::move(gate));
    }
    inst.domains.push_back(std::move(axis));
  }
  return inst;
}

TreeAxes random_tree_axes(int n, int axes, std::uint64_t seed) {
  SeededRng rng = SeededRng(seed).split("tree_with_axes");
  const UnitGraph tree = random_tree(n, rng);
  const DistanceMatrix d = all_pairs_distances(tree);
  std::vector<char> used(n, 0);
  std::vector<std::vector<Vertex>> lines;
  for (int attempt = 0; attempt < 50 * axes && static_cast<int>(lines.size()) < axes; ++attempt) {
    const Vertex a = rng.uniform(0, n - 1);
    const Vertex b = rng.uniform(0, n - 1);
    if (a == b) continue;
    std::vector<Vertex> line = least_geodesic(tree, d, a, b);
    if (std::any_of(line.begin(), line.end(), [&](Vertex v) { return used[v] != 0; })) continue;
    for (Vertex v : line) used[v] = 1;
    lines.push_back(std::move(line));
  }
  return {tree, std::move(lines)};
}

HHSInstance random_tree_with_axes(int n, int axes, std::uint64_t seed) {
  const TreeAxes t = random_tree_axes(n, axes, seed);
  return tree_with_axes(t.tree, t.axes);
}

HHSInstance spine_with_axes(int axes, int length) {
  if (axes < 1 || length < 2) throw Error(ErrorCode::precondition, "spine_with_axes: need axes >= 1 and length >= 2");
  std::vector<Edge> edges;
  std::vector<std::vector<Vertex>> lines;
  int next = 1;  // vertex 0 is the hub
  const int attach = std::min(10, length / 10);
  for (int a = 0; a < axes; ++a) {
    std::vector<Vertex> line;
    for (int t = 0; t <= length; ++t) {
      line.push_back(next);
      if (t > 0) edges.emplace_back(next - 1, next);
      ++next;
    }
    int prev = 0;
    for (int s = 0; s < 1 + a; ++s) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
    edges.emplace_back(prev, line[attach]);
    lines.push_back(std::move(line));
  }
  return tree_with_axes(UnitGraph(next, std::move(edges)), lines);
}

namespace {

ProjectionSystem three_paths(int length) {
  ProjectionSystem s;
  s.pieces.assign(3, path_graph(length + 1));
  s.proj.assign(3, std::vector<VertexSet>(3));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      if (i != j) s.proj[i][j] = {0};
    }
  }
  return s;
}

}  // namespace

ProjectionSystem adversarial_p1_system() {
  ProjectionSystem s = three_paths(10);
  s.proj[1][0] = {0};
  s.proj[1][2] = {10};
  s.proj[2][0] = {0};
  s.proj[2][1] = {10};
  s.theta = 1;
  return s;
}

ProjectionSystem chain_system() {
  ProjectionSystem s = three_paths(10);
  s.proj[1][2] = {10};
  s.theta = verify_projection_axioms(s).least_theta;
  return s;
}

ProjectionSystem tripod_system(int length) {
  ProjectionSystem s = three_paths(length);
  s.theta = 0;
  return s;
}

}  // namespace cubulate::fixtures
