#include "cubulate/cube_complex.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <unordered_map>

#include "bitset.hpp"
#include "cubulate/error.hpp"

namespace cubulate {

using detail::Bits;

namespace {

// Largest clique in a graph given by adjacency bitsets (Bron–Kerbosch with
// pivoting).
class CliqueSearch {
 public:
  explicit CliqueSearch(const std::vector<Bits>& adj) : adj_(adj), n_(static_cast<int>(adj.size())) {}

  int run() {
    if (n_ == 0) return 0;
    Bits p = detail::full_bits(n_);
    Bits x = detail::make_bits(n_);
    expand(0, p, x);
    return best_;
  }

 private:
  void expand(int size, Bits& p, Bits& x) {
    const int candidates = detail::popcount(p);
    if (candidates == 0) {
      best_ = std::max(best_, size);
      return;
    }
    if (size + candidates <= best_) return;
    int pivot = -1;
    int pivot_hits = -1;
    for (int u : detail::to_set(p)) {
      int hits = 0;
      for (std::size_t k = 0; k < p.size(); ++k) hits += std::popcount(p[k] & adj_[u][k]);
      if (hits > pivot_hits) {
        pivot_hits = hits;
        pivot = u;
      }
    }
    for (int v : detail::to_set(p)) {
      if (detail::test_bit(adj_[pivot], v)) continue;
      Bits p2 = p;
      Bits x2 = x;
      detail::and_with(p2, adj_[v]);
      detail::and_with(x2, adj_[v]);
      expand(size + 1, p2, x2);
      p[v / 64] &= ~(detail::Word{1} << (v % 64));
      detail::set_bit(x, v);
    }
  }

  const std::vector<Bits>& adj_;
  int n_;
  int best_ = 0;
};

void require_nonempty(const VertexSet& s, const char* what) {
  if (s.empty()) throw Error(ErrorCode::precondition, std::string(what) + ": empty vertex set");
}

void require_in_range(int n, const VertexSet& s, const char* what) {
  for (Vertex v : s) {
    if (v < 0 || v >= n) {
      throw Error(ErrorCode::malformed_input, std::string(what) + ": vertex " + std::to_string(v) + " out of range", {v});
    }
  }
}

}  // namespace

bool crosses(const Hyperplane& a, const Hyperplane& b) {
  return !set_intersection(a.left, b.left).empty() && !set_intersection(a.left, b.right).empty() &&
         !set_intersection(a.right, b.left).empty() && !set_intersection(a.right, b.right).empty();
}

CubeSkeleton::CubeSkeleton(MedianAlgebra median, std::vector<Hyperplane> hyperplanes)
    : median_(std::move(median)), hyperplanes_(std::move(hyperplanes)) {
  const int n = median_.size();
  const int h = static_cast<int>(hyperplanes_.size());
  sides_.reserve(2 * hyperplanes_.size());
  for (const Hyperplane& hp : hyperplanes_) {
    sides_.push_back(detail::to_bits(n, hp.left));
    sides_.push_back(detail::to_bits(n, hp.right));
  }

  std::map<Edge, int> class_of;
  for (int i = 0; i < h; ++i) {
    for (const Edge& e : hyperplanes_[i].edges) class_of[{std::min(e.first, e.second), std::max(e.first, e.second)}] = i;
  }
  edge_class_.reserve(graph().edges().size());
  for (const Edge& e : graph().edges()) {
    auto it = class_of.find(e);
    if (it == class_of.end()) {
      throw Error(ErrorCode::invariant, "edge not covered by any hyperplane", {e.first, e.second});
    }
    edge_class_.push_back(it->second);
  }

  crossing_.assign(static_cast<std::size_t>(h) * h, 0);
  std::vector<Bits> adj(h, detail::make_bits(h));
  for (int i = 0; i < h; ++i) {
    for (int j = i + 1; j < h; ++j) {
      const bool c = detail::intersects(side(i, 0), side(j, 0)) && detail::intersects(side(i, 0), side(j, 1)) &&
                     detail::intersects(side(i, 1), side(j, 0)) && detail::intersects(side(i, 1), side(j, 1));
      if (!c) continue;
      crossing_[static_cast<std::size_t>(i) * h + j] = 1;
      crossing_[static_cast<std::size_t>(j) * h + i] = 1;
      detail::set_bit(adj[i], j);
      detail::set_bit(adj[j], i);
    }
  }
  dimension_ = CliqueSearch(adj).run();
}

CubeSkeleton hyperplane_decomposition(const MedianAlgebra& m) {
  const int n = m.size();
  const DistanceMatrix& d = m.distances();
  std::map<Bits, int> index;
  std::vector<Hyperplane> hyperplanes;
  for (const Edge& e : m.graph().edges()) {
    const auto [a, b] = e;
    Bits near_a = detail::make_bits(n);
    for (Vertex v = 0; v < n; ++v) {
      if (d(v, a) < d(v, b)) detail::set_bit(near_a, v);
    }
    // Key by the side holding vertex 0.
    if (!detail::test_bit(near_a, 0)) {
      for (Vertex v = 0; v < n; ++v) near_a[v / 64] ^= detail::Word{1} << (v % 64);
    }
    auto [it, inserted] = index.try_emplace(near_a, static_cast<int>(hyperplanes.size()));
    if (inserted) {
      Hyperplane hp;
      hp.left = detail::to_set(near_a);
      for (Vertex v = 0; v < n; ++v) {
        if (!detail::test_bit(near_a, v)) hp.right.push_back(v);
      }
      hyperplanes.push_back(std::move(hp));
    }
    hyperplanes[it->second].edges.push_back(e);
  }
  return CubeSkeleton(m, std::move(hyperplanes));
}

VertexSet convex_hull(const CubeSkeleton& c, const VertexSet& s) {
  require_nonempty(s, "convex_hull");
  const int n = c.median().size();
  require_in_range(n, s, "convex_hull");
  const Bits in = detail::to_bits(n, s);
  Bits hull = detail::full_bits(n);
  for (int h = 0; h < static_cast<int>(c.hyperplanes().size()); ++h) {
    if (!detail::intersects(in, c.side(h, 1))) {
      detail::and_with(hull, c.side(h, 0));
    } else if (!detail::intersects(in, c.side(h, 0))) {
      detail::and_with(hull, c.side(h, 1));
    }
  }
  return detail::to_set(hull);
}

VertexSet interval_closure(const DistanceMatrix& d, const VertexSet& s) {
  const int n = d.size();
  std::vector<char> in(n, 0);
  VertexSet members;
  std::vector<Vertex> pending;
  for (Vertex v : s) {
    if (!in[v]) {
      in[v] = 1;
      pending.push_back(v);
    }
  }
  while (!pending.empty()) {
    const Vertex v = pending.back();
    pending.pop_back();
    members.push_back(v);
    for (std::size_t i = 0; i + 1 < members.size(); ++i) {
      for (Vertex w : interval(d, members[i], v)) {
        if (!in[w]) {
          in[w] = 1;
          pending.push_back(w);
        }
      }
    }
  }
  return make_vertex_set(std::move(members));
}

bool is_convex(const CubeSkeleton& c, const VertexSet& s) {
  if (s.empty()) return true;
  return convex_hull(c, s) == s;
}

VertexSet neighbourhood(const UnitGraph& g, const VertexSet& s, int r) {
  const std::vector<int> dist = bfs_distances(g, s);
  VertexSet out;
  for (Vertex v = 0; v < g.size(); ++v) {
    if (dist[v] >= 0 && dist[v] <= r) out.push_back(v);
  }
  return out;
}

Vertex gate(const MedianAlgebra& m, const VertexSet& convex, Vertex x) {
  require_nonempty(convex, "gate");
  Vertex best = convex.front();
  for (Vertex v : convex) {
    if (m.distance(x, v) < m.distance(x, best)) best = v;
  }
  return best;
}

HullNeighbourhoodResult hull_neighbourhood_check(const CubeSkeleton& c, const VertexSet& z, int r) {
  require_nonempty(z, "hull_neighbourhood_check");
  if (r < 0) throw Error(ErrorCode::precondition, "hull_neighbourhood_check: negative radius");
  if (!is_convex(c, z)) throw Error(ErrorCode::not_convex, "hull_neighbourhood_check: Z is not convex", z);

  HullNeighbourhoodResult out;
  out.dimension = c.dimension();
  out.hull = convex_hull(c, neighbourhood(c.graph(), z, r));
  const std::vector<int> to_z = bfs_distances(c.graph(), z);
  int worst = 0;
  for (Vertex v : out.hull) worst = std::max(worst, to_z[v]);
  out.max_excess = worst - out.dimension * r;
  out.holds = out.max_excess <= 0;
  return out;
}

HellyResult helly_intersection(const CubeSkeleton& c, const std::vector<VertexSet>& family) {
  const int n = c.median().size();
  HellyResult out;
  if (family.empty()) {
    out.point = 0;
    return out;
  }
  std::vector<Bits> members;
  members.reserve(family.size());
  for (std::size_t i = 0; i < family.size(); ++i) {
    require_nonempty(family[i], "helly_intersection");
    require_in_range(n, family[i], "helly_intersection");
    if (!is_convex(c, family[i])) {
      throw Error(ErrorCode::not_convex, "helly_intersection: member " + std::to_string(i) + " is not convex",
                  {static_cast<int>(i)});
    }
    members.push_back(detail::to_bits(n, family[i]));
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (!detail::intersects(members[i], members[j])) {
        out.disjoint_pair = {static_cast<int>(i), static_cast<int>(j)};
        return out;
      }
    }
  }

  auto in_all = [&](Vertex v) {
    return std::all_of(members.begin(), members.end(), [v](const Bits& b) { return detail::test_bit(b, v); });
  };

  if (family.size() <= 3) {
    for (Vertex v = 0; v < n; ++v) {
      if (in_all(v)) {
        out.point = v;
        return out;
      }
    }
  } else {
    // With x in F_1 ∩ … ∩ F_k, the gate of x in F_{k+1} lies on a geodesic
    // from x to a point of the total intersection, so it stays in F_1..F_k.
    Vertex x = family.front().front();
    for (std::size_t k = 1; k < family.size(); ++k) x = gate(c.median(), family[k], x);
    if (in_all(x)) {
      out.point = x;
      return out;
    }
  }
  throw Error(ErrorCode::invariant, "helly_intersection: pairwise-intersecting family with empty intersection");
}

void validate_wallspace(const Wallspace& w) {
  if (w.points <= 0) throw Error(ErrorCode::malformed_input, "wallspace: point count must be positive");
  for (std::size_t i = 0; i < w.walls.size(); ++i) {
    const Wall& wall = w.walls[i];
    const std::string where = "wallspace: wall " + std::to_string(i);
    if (wall.left.empty() || wall.right.empty()) throw Error(ErrorCode::malformed_input, where + " has an empty half", {static_cast<int>(i)});
    if (!std::is_sorted(wall.left.begin(), wall.left.end()) || !std::is_sorted(wall.right.begin(), wall.right.end()) ||
        std::adjacent_find(wall.left.begin(), wall.left.end()) != wall.left.end() ||
        std::adjacent_find(wall.right.begin(), wall.right.end()) != wall.right.end()) {
      throw Error(ErrorCode::malformed_input, where + " halves must be sorted without repeats", {static_cast<int>(i)});
    }
    require_in_range(w.points, wall.left, "wallspace");
    require_in_range(w.points, wall.right, "wallspace");
    if (!set_intersection(wall.left, wall.right).empty() ||
        static_cast<int>(wall.left.size() + wall.right.size()) != w.points) {
      throw Error(ErrorCode::malformed_input, where + " is not a partition of the points", {static_cast<int>(i)});
    }
  }
}

namespace {

std::vector<std::array<Bits, 2>> wall_bits(const Wallspace& w) {
  std::vector<std::array<Bits, 2>> out;
  out.reserve(w.walls.size());
  for (const Wall& wall : w.walls) out.push_back({detail::to_bits(w.points, wall.left), detail::to_bits(w.points, wall.right)});
  return out;
}

}  // namespace

bool is_coherent(const Wallspace& w, const Orientation& o) {
  if (o.size() != w.walls.size()) throw Error(ErrorCode::malformed_input, "orientation length differs from wall count");
  const auto bits = wall_bits(w);
  for (std::size_t i = 0; i < o.size(); ++i) {
    for (std::size_t j = i + 1; j < o.size(); ++j) {
      if (!detail::intersects(bits[i][o[i]], bits[j][o[j]])) return false;
    }
  }
  return true;
}

std::vector<Orientation> coherent_orientations(const Wallspace& w, std::size_t cap) {
  validate_wallspace(w);
  const auto bits = wall_bits(w);
  const std::size_t m = w.walls.size();
  std::vector<Orientation> out;
  Orientation current(m, 0);

  auto compatible = [&](std::size_t depth, std::uint8_t side) {
    for (std::size_t j = 0; j < depth; ++j) {
      if (!detail::intersects(bits[depth][side], bits[j][current[j]])) return false;
    }
    return true;
  };
  auto search = [&](auto&& self, std::size_t depth) -> void {
    if (depth == m) {
      if (out.size() == cap) {
        throw Error(ErrorCode::guard_exceeded, "coherent_orientations: more than " + std::to_string(cap) + " orientations");
      }
      out.push_back(current);
      return;
    }
    for (std::uint8_t side = 0; side < 2; ++side) {
      if (!compatible(depth, side)) continue;
      current[depth] = side;
      self(self, depth + 1);
    }
  };
  search(search, 0);
  return out;
}

Orientation principal_orientation(const Wallspace& w, int point) {
  if (point < 0 || point >= w.points) throw Error(ErrorCode::precondition, "principal_orientation: point out of range", {point});
  Orientation o(w.walls.size());
  for (std::size_t i = 0; i < w.walls.size(); ++i) o[i] = contains(w.walls[i].left, point) ? 0 : 1;
  return o;
}

std::vector<Orientation> principal_orientations(const Wallspace& w) {
  validate_wallspace(w);
  std::vector<Orientation> out;
  for (int p = 0; p < w.points; ++p) out.push_back(principal_orientation(w, p));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

DualComplex dual_cube_complex(const Wallspace& w, std::size_t cap) {
  validate_wallspace(w);
  {
    std::vector<std::pair<VertexSet, VertexSet>> seen;
    for (std::size_t i = 0; i < w.walls.size(); ++i) {
      auto key = std::minmax(w.walls[i].left, w.walls[i].right);
      std::pair<VertexSet, VertexSet> k{key.first, key.second};
      auto it = std::find(seen.begin(), seen.end(), k);
      if (it != seen.end()) {
        throw Error(ErrorCode::precondition, "dual_cube_complex: repeated wall",
                    {static_cast<int>(it - seen.begin()), static_cast<int>(i)});
      }
      seen.push_back(std::move(k));
    }
  }
  std::vector<Orientation> orientations = coherent_orientations(w, cap);
  auto key_of = [](const Orientation& o) { return std::string(o.begin(), o.end()); };
  std::unordered_map<std::string, int> index;
  index.reserve(orientations.size());
  for (std::size_t i = 0; i < orientations.size(); ++i) index.emplace(key_of(orientations[i]), static_cast<int>(i));

  std::vector<Edge> edges;
  for (std::size_t i = 0; i < orientations.size(); ++i) {
    std::string key = key_of(orientations[i]);
    for (std::size_t k = 0; k < key.size(); ++k) {
      key[k] ^= 1;
      auto it = index.find(key);
      if (it != index.end() && it->second > static_cast<int>(i)) edges.emplace_back(static_cast<int>(i), it->second);
      key[k] ^= 1;
    }
  }
  UnitGraph g(static_cast<int>(orientations.size()), std::move(edges));
  CubeSkeleton skeleton = hyperplane_decomposition(MedianAlgebra::verified(std::move(g)));
  return DualComplex{std::move(skeleton), std::move(orientations)};
}

Wallspace hyperplane_wallspace(const CubeSkeleton& c) {
  Wallspace w;
  w.points = c.median().size();
  for (const Hyperplane& h : c.hyperplanes()) w.walls.push_back(Wall{h.left, h.right});
  return w;
}

}  // namespace cubulate
