#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace oracle {

using cubulate::Edge;

Matrix floyd_warshall(const UnitGraph& g) {
  const int n = g.size();
  Matrix d(n, std::vector<int>(n, kInf));
  for (int v = 0; v < n; ++v) d[v][v] = 0;
  for (const Edge& e : g.edges()) d[e.first][e.second] = d[e.second][e.first] = 1;
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    }
  }
  return d;
}

bool connected(const Matrix& d) {
  for (const auto& row : d) {
    for (int x : row) {
      if (x >= kInf) return false;
    }
  }
  return true;
}

std::vector<Vertex> medians(const Matrix& d, Vertex x, Vertex y, Vertex z) {
  std::vector<Vertex> out;
  const int n = static_cast<int>(d.size());
  for (int v = 0; v < n; ++v) {
    if (d[x][v] + d[v][y] == d[x][y] && d[y][v] + d[v][z] == d[y][z] && d[x][v] + d[v][z] == d[x][z]) out.push_back(v);
  }
  return out;
}

bool is_median(const UnitGraph& g) {
  const Matrix d = floyd_warshall(g);
  if (!connected(d)) return false;
  const int n = g.size();
  for (int x = 0; x < n; ++x) {
    for (int y = x; y < n; ++y) {
      for (int z = y; z < n; ++z) {
        if (medians(d, x, y, z).size() != 1) return false;
      }
    }
  }
  return true;
}

std::optional<std::vector<int>> djokovic_classes(const UnitGraph& g) {
  const Matrix d = floyd_warshall(g);
  const auto& e = g.edges();
  const int m = static_cast<int>(e.size());
  auto theta = [&](int i, int j) {
    const auto [a, b] = e[i];
    const auto [c, f] = e[j];
    return d[a][c] + d[b][f] != d[a][f] + d[b][c];
  };
  std::vector<int> label(m, -1);
  int next = 0;
  for (int i = 0; i < m; ++i) {
    if (label[i] >= 0) continue;
    for (int j = i; j < m; ++j) {
      if (theta(i, j)) {
        if (label[j] >= 0) return std::nullopt;
        label[j] = next;
      }
    }
    ++next;
  }
  // Transitivity: every pair in one class must be related.
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if ((label[i] == label[j]) != theta(i, j)) return std::nullopt;
    }
  }
  return label;
}

VertexSet convex_hull(const Matrix& d, const VertexSet& s) {
  const int n = static_cast<int>(d.size());
  std::vector<char> in(n, 0);
  for (Vertex v : s) in[v] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < n; ++a) {
      if (!in[a]) continue;
      for (int b = 0; b < n; ++b) {
        if (!in[b]) continue;
        for (int v = 0; v < n; ++v) {
          if (!in[v] && d[a][v] + d[v][b] == d[a][b]) {
            in[v] = 1;
            changed = true;
          }
        }
      }
    }
  }
  VertexSet out;
  for (int v = 0; v < n; ++v) {
    if (in[v]) out.push_back(v);
  }
  return out;
}

bool is_convex(const Matrix& d, const VertexSet& s) { return convex_hull(d, s) == s; }

std::vector<std::vector<std::uint8_t>> consistent_orientations(const cubulate::Wallspace& w) {
  const int k = static_cast<int>(w.walls.size());
  std::vector<std::vector<std::uint8_t>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    std::vector<std::uint8_t> o(k);
    for (int i = 0; i < k; ++i) o[i] = (mask >> i) & 1U;
    bool ok = true;
    for (int i = 0; i < k && ok; ++i) {
      const auto& hi = o[i] ? w.walls[i].right : w.walls[i].left;
      for (int j = i + 1; j < k && ok; ++j) {
        const auto& hj = o[j] ? w.walls[j].right : w.walls[j].left;
        ok = !cubulate::set_intersection(hi, hj).empty();
      }
    }
    if (ok) out.push_back(std::move(o));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool isomorphic(const UnitGraph& a, const UnitGraph& b) {
  if (a.size() != b.size() || a.edges().size() != b.edges().size()) return false;
  std::vector<int> perm(a.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::set<Edge> target(b.edges().begin(), b.edges().end());
  do {
    bool ok = true;
    for (const Edge& e : a.edges()) {
      const int x = perm[e.first];
      const int y = perm[e.second];
      if (!target.count({std::min(x, y), std::max(x, y)})) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

namespace {

int diameter_of_union(const Matrix& d, const VertexSet& a, const VertexSet& b) {
  VertexSet u = a;
  u.insert(u.end(), b.begin(), b.end());
  int out = 0;
  for (Vertex x : u) {
    for (Vertex y : u) out = std::max(out, d[x][y]);
  }
  return out;
}

}  // namespace

int least_theta(const cubulate::ProjectionSystem& s) {
  const int n = s.size();
  std::vector<Matrix> d;
  for (const UnitGraph& g : s.pieces) d.push_back(floyd_warshall(g));
  int theta = 0;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      if (i != j) theta = std::max(theta, diameter_of_union(d[j], s.proj[j][i], s.proj[j][i]));
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (i == j || j == k || i == k) continue;
        theta = std::max(theta, std::min(diameter_of_union(d[j], s.proj[j][i], s.proj[j][k]), diameter_of_union(d[k], s.proj[k][i], s.proj[k][j])));
      }
    }
  }
  return theta;
}

std::vector<std::vector<std::int64_t>> quasitree_distances(const cubulate::ProjectionSystem& s, const Rational& k, const Rational& l) {
  const int pieces = s.size();
  std::vector<Matrix> d;
  std::vector<int> offset{0};
  for (const UnitGraph& g : s.pieces) {
    d.push_back(floyd_warshall(g));
    offset.push_back(offset.back() + g.size());
  }
  const int n = offset.back();
  constexpr std::int64_t inf = std::int64_t{1} << 50;
  std::vector<std::vector<std::int64_t>> w(n, std::vector<std::int64_t>(n, inf));
  for (int v = 0; v < n; ++v) w[v][v] = 0;
  for (int p = 0; p < pieces; ++p) {
    for (const Edge& e : s.pieces[p].edges()) {
      w[offset[p] + e.first][offset[p] + e.second] = w[offset[p] + e.second][offset[p] + e.first] = l.den();
    }
  }
  for (int a = 0; a < pieces; ++a) {
    for (int b = a + 1; b < pieces; ++b) {
      bool attached = true;
      for (int c = 0; c < pieces; ++c) {
        if (c != a && c != b && Rational(diameter_of_union(d[c], s.proj[c][a], s.proj[c][b])) > k) attached = false;
      }
      if (!attached) continue;
      for (Vertex x : s.proj[a][b]) {
        for (Vertex y : s.proj[b][a]) {
          auto& e = w[offset[a] + x][offset[b] + y];
          e = std::min(e, l.num());
          w[offset[b] + y][offset[a] + x] = e;
        }
      }
    }
  }
  for (int m = 0; m < n; ++m) {
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) w[i][j] = std::min(w[i][j], w[i][m] + w[m][j]);
    }
  }
  return w;
}

namespace {

// Bounds on τ_t − τ_s for s < t.
std::pair<Rational, Rational> bounds(const Rational& dist, const Rational& d) {
  return {cubulate::max(Rational(0), (dist - d) / d), d * (dist + d)};
}

}  // namespace

bool reparametrisation_feasible(const std::vector<std::vector<Rational>>& dist, const Rational& d) {
  const int n = static_cast<int>(dist.size());
  std::vector<std::vector<std::optional<Rational>>> w(n, std::vector<std::optional<Rational>>(n));
  for (int i = 0; i < n; ++i) w[i][i] = Rational(0);
  for (int s = 0; s < n; ++s) {
    for (int t = s + 1; t < n; ++t) {
      const auto [lo, hi] = bounds(dist[s][t], d);
      w[s][t] = hi;   // τ_t − τ_s ≤ hi
      w[t][s] = -lo;  // τ_s − τ_t ≤ −lo
    }
  }
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (!w[i][k]) continue;
      for (int j = 0; j < n; ++j) {
        if (!w[k][j]) continue;
        const Rational via = *w[i][k] + *w[k][j];
        if (!w[i][j] || via < *w[i][j]) w[i][j] = via;
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    if (*w[i][i] < 0) return false;
  }
  return true;
}

bool reparametrisation_witness_ok(const std::vector<std::vector<Rational>>& dist, const Rational& d,
                                  const std::vector<std::int64_t>& times, std::int64_t scale) {
  const int n = static_cast<int>(dist.size());
  if (static_cast<int>(times.size()) != n) return false;
  for (int s = 0; s < n; ++s) {
    for (int t = s + 1; t < n; ++t) {
      const auto [lo, hi] = bounds(dist[s][t], d);
      const Rational gap(times[t] - times[s], scale);
      if (gap < lo || gap > hi) return false;
    }
  }
  return true;
}

int max_clique(const std::vector<std::vector<char>>& adj) {
  const int n = static_cast<int>(adj.size());
  int best = 0;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      if (!((mask >> i) & 1U)) continue;
      for (int j = i + 1; j < n && ok; ++j) {
        if ((mask >> j) & 1U) ok = adj[i][j] != 0;
      }
    }
    if (ok) best = std::max(best, __builtin_popcount(mask));
  }
  return best;
}

std::vector<UnitGraph> all_connected_graphs(int n) {
  std::vector<Edge> slots;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) slots.emplace_back(a, b);
  }
  std::vector<UnitGraph> out;
  const int m = static_cast<int>(slots.size());
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i) {
      if ((mask >> i) & 1U) edges.push_back(slots[i]);
    }
    if (static_cast<int>(edges.size()) < n - 1) continue;
    UnitGraph g(n, std::move(edges));
    if (connected(floyd_warshall(g))) out.push_back(std::move(g));
  }
  return out;
}

UnitGraph random_connected_graph(int n, double p, cubulate::SeededRng& rng) {
  for (;;) {
    std::vector<Edge> edges;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (rng.coin(p)) edges.emplace_back(a, b);
      }
    }
    UnitGraph g(n, std::move(edges));
    if (connected(floyd_warshall(g))) return g;
  }
}

}  // namespace oracle
