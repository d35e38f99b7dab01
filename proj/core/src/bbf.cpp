#include "cubulate/bbf.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

#include "cubulate/error.hpp"

namespace cubulate {

namespace {

// Dense distance storage for the assembled space.
constexpr int kQuasiTreeLimit = 3000;

std::string pair_text(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

}  // namespace

void validate_projection_system(const ProjectionSystem& s) {
  const int n = s.size();
  if (n == 0) throw Error(ErrorCode::malformed_input, "projection system: no pieces");
  if (s.theta < 0) throw Error(ErrorCode::malformed_input, "projection system: negative theta");
  if (static_cast<int>(s.proj.size()) != n) throw Error(ErrorCode::malformed_input, "projection system: proj table has wrong size");
  for (int i = 0; i < n; ++i) {
    if (s.pieces[i].size() == 0) throw Error(ErrorCode::malformed_input, "projection system: empty piece " + std::to_string(i), {i});
    if (static_cast<int>(s.proj[i].size()) != n) {
      throw Error(ErrorCode::malformed_input, "projection system: proj row " + std::to_string(i) + " has wrong size", {i});
    }
    for (int j = 0; j < n; ++j) {
      const VertexSet& p = s.proj[i][j];
      if (i == j) continue;
      if (p.empty()) throw Error(ErrorCode::malformed_input, "projection system: missing projection " + pair_text(i, j), {i, j});
      if (!std::is_sorted(p.begin(), p.end()) || std::adjacent_find(p.begin(), p.end()) != p.end()) {
        throw Error(ErrorCode::malformed_input, "projection system: unsorted projection " + pair_text(i, j), {i, j});
      }
      if (p.front() < 0 || p.back() >= s.pieces[i].size()) {
        throw Error(ErrorCode::malformed_input, "projection system: projection " + pair_text(i, j) + " out of range", {i, j});
      }
    }
  }
}

ProjectionMetrics::ProjectionMetrics(ProjectionSystem s) : system_(std::move(s)) {
  validate_projection_system(system_);
  dist_.reserve(system_.pieces.size());
  for (const UnitGraph& g : system_.pieces) dist_.push_back(all_pairs_distances(g));
}

int ProjectionMetrics::projection_distance(int y, int x, int z) const {
  return set_diameter(dist_[y], set_union(system_.proj[y][x], system_.proj[y][z]));
}

AxiomReport verify_projection_axioms(const ProjectionSystem& s) {
  const ProjectionMetrics m(s);
  const int n = s.size();
  AxiomReport report;
  report.p2_counts.assign(n, std::vector<int>(n, 0));

  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const int diam = set_diameter(m.piece_distances(i), s.proj[i][j]);
      report.max_projection_diameter = std::max(report.max_projection_diameter, diam);
      if (Rational(diam) > s.theta) report.p0_violations.emplace_back(i, j);
    }
  }
  report.least_theta = report.max_projection_diameter;

  // dp[j][i][k] = dπ_{Y_j}(Y_i, Y_k).
  std::vector<int> dp(static_cast<std::size_t>(n) * n * n, 0);
  auto at = [&](int j, int i, int k) -> int& { return dp[(static_cast<std::size_t>(j) * n + i) * n + k]; };
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < n; ++k) {
        if (i != j && k != j && i != k) at(j, i, k) = m.projection_distance(j, i, k);
      }
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (i == j || j == k || i == k) continue;
        const int via_j = at(j, i, k);
        const int via_k = at(k, i, j);
        report.least_theta = std::max(report.least_theta, std::min(via_j, via_k));
        if (Rational(via_j) > s.theta) {
          ++report.p2_counts[i][k];
          if (Rational(via_k) > s.theta) report.p1_violations.push_back({i, j, k, via_j, via_k});
        }
      }
    }
  }
  return report;
}

ProjectionSystem axes_in_tree_system(const UnitGraph& tree, const std::vector<std::vector<Vertex>>& lines) {
  if (!is_tree(tree)) throw Error(ErrorCode::precondition, "axes_in_tree_system: input is not a tree");
  const DistanceMatrix d = all_pairs_distances(tree);
  const int n = static_cast<int>(lines.size());
  for (int i = 0; i < n; ++i) {
    const auto& line = lines[i];
    if (line.empty()) throw Error(ErrorCode::precondition, "axes_in_tree_system: empty line " + std::to_string(i), {i});
    for (Vertex v : line) {
      if (v < 0 || v >= tree.size()) throw Error(ErrorCode::malformed_input, "axes_in_tree_system: vertex out of range", {i, v});
    }
    for (std::size_t t = 0; t + 1 < line.size(); ++t) {
      if (!tree.adjacent(line[t], line[t + 1])) {
        throw Error(ErrorCode::precondition, "axes_in_tree_system: line " + std::to_string(i) + " is not a path", {i});
      }
    }
    if (d(line.front(), line.back()) != static_cast<int>(line.size()) - 1) {
      throw Error(ErrorCode::precondition, "axes_in_tree_system: line " + std::to_string(i) + " is not geodesic", {i});
    }
    for (int j = 0; j < i; ++j) {
      if (make_vertex_set(lines[j]) == make_vertex_set(line)) {
        throw Error(ErrorCode::precondition, "axes_in_tree_system: lines " + pair_text(j, i) + " coincide", {j, i});
      }
    }
  }

  ProjectionSystem s;
  for (const auto& line : lines) {
    std::vector<Edge> edges;
    std::vector<std::string> labels;
    for (std::size_t t = 0; t < line.size(); ++t) {
      labels.push_back(std::to_string(line[t]));
      if (t + 1 < line.size()) edges.emplace_back(static_cast<int>(t), static_cast<int>(t + 1));
    }
    s.pieces.emplace_back(static_cast<int>(line.size()), std::move(edges), std::move(labels));
  }
  s.proj.assign(n, std::vector<VertexSet>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      std::vector<Vertex> nearest;
      for (Vertex y : lines[j]) {
        int best = 0;
        for (int t = 1; t < static_cast<int>(lines[i].size()); ++t) {
          if (d(y, lines[i][t]) < d(y, lines[i][best])) best = t;
        }
        nearest.push_back(best);
      }
      s.proj[i][j] = make_vertex_set(std::move(nearest));
    }
  }
  s.theta = verify_projection_axioms(s).least_theta;
  return s;
}

QuasiTreeSpace::QuasiTreeSpace(ProjectionSystem system, Rational k, Rational l) : k_(k), l_(l) {
  if (!(l_ > 0)) throw Error(ErrorCode::precondition, "build_quasitree: L must be positive");
  const AxiomReport axioms = verify_projection_axioms(system);
  least_theta_ = axioms.least_theta;
  if (!axioms.holds()) {
    throw Error(ErrorCode::precondition, "build_quasitree: system fails the projection axioms at its declared theta " +
                                             system.theta.to_string() + " (least valid " + std::to_string(least_theta_) + ")");
  }
  if (k_ < Rational(least_theta_)) {
    throw Error(ErrorCode::precondition, "build_quasitree: K = " + k_.to_string() + " is below the least valid theta " +
                                             std::to_string(least_theta_));
  }
  metrics_ = std::make_shared<const ProjectionMetrics>(std::move(system));
  const ProjectionSystem& s = this->system();
  const int pieces = s.size();

  offset_.assign(pieces + 1, 0);
  for (int i = 0; i < pieces; ++i) offset_[i + 1] = offset_[i] + s.pieces[i].size();
  const int n = offset_[pieces];
  if (n > kQuasiTreeLimit) {
    throw Error(ErrorCode::guard_exceeded, "build_quasitree: " + std::to_string(n) + " vertices exceeds the limit of " +
                                               std::to_string(kQuasiTreeLimit));
  }
  piece_of_.resize(n);
  for (int i = 0; i < pieces; ++i) std::fill(piece_of_.begin() + offset_[i], piece_of_.begin() + offset_[i + 1], i);

  for (int u = 0; u < pieces; ++u) {
    for (int v = u + 1; v < pieces; ++v) {
      bool gate_open = true;
      for (int w = 0; w < pieces && gate_open; ++w) {
        if (w == u || w == v) continue;
        gate_open = Rational(metrics_->projection_distance(w, u, v)) <= k_;
      }
      if (!gate_open) continue;
      attached_.emplace_back(u, v);
      // ρ^U_V = π_V(U) in piece V, ρ^V_U = π_U(V) in piece U.
      for (Vertex a : s.proj[u][v]) {
        for (Vertex b : s.proj[v][u]) attachments_.push_back({global(u, a), global(v, b)});
      }
    }
  }

  const std::int64_t unit = l_.den();
  const std::int64_t attach = l_.num();
  std::vector<std::vector<std::pair<int, std::int64_t>>> adj(n);
  for (int p = 0; p < pieces; ++p) {
    for (const Edge& e : s.pieces[p].edges()) {
      adj[global(p, e.first)].emplace_back(global(p, e.second), unit);
      adj[global(p, e.second)].emplace_back(global(p, e.first), unit);
    }
  }
  for (const AttachmentEdge& e : attachments_) {
    adj[e.a].emplace_back(e.b, attach);
    adj[e.b].emplace_back(e.a, attach);
  }

  dist_.assign(static_cast<std::size_t>(n) * n, -1);
  using Item = std::pair<std::int64_t, int>;
  for (int src = 0; src < n; ++src) {
    std::int64_t* row = dist_.data() + static_cast<std::size_t>(src) * n;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    row[src] = 0;
    heap.emplace(0, src);
    while (!heap.empty()) {
      const auto [du, u] = heap.top();
      heap.pop();
      if (du != row[u]) continue;
      for (const auto& [w, len] : adj[u]) {
        if (row[w] < 0 || du + len < row[w]) {
          row[w] = du + len;
          heap.emplace(row[w], w);
        }
      }
    }
  }
  connected_ = std::none_of(dist_.begin(), dist_.begin() + n, [](std::int64_t x) { return x < 0; });
}

Rational QuasiTreeSpace::distance(int a, int b) const {
  const std::int64_t d = scaled_distance(a, b);
  if (d < 0) throw Error(ErrorCode::disconnected, "quasitree: vertices " + pair_text(a, b) + " are not connected", {a, b});
  return Rational(d, scale());
}

VertexSet flat_projection(const QuasiTreeSpace& q, int piece, int x) {
  if (piece < 0 || piece >= q.piece_count()) throw Error(ErrorCode::precondition, "flat_projection: unknown piece", {piece});
  if (x < 0 || x >= q.size()) throw Error(ErrorCode::precondition, "flat_projection: unknown vertex", {x});
  const int home = q.piece_of(x);
  if (home == piece) return {q.local_of(x)};
  return q.system().proj[piece][home];
}

int flat_distance(const QuasiTreeSpace& q, int piece, int x, int y) {
  return set_diameter(q.metrics().piece_distances(piece), set_union(flat_projection(q, piece, x), flat_projection(q, piece, y)));
}

namespace {

struct FlatProfile {
  Rational distance;
  std::vector<int> flats;
};

FlatProfile flat_profile(const QuasiTreeSpace& q, int x, int y) {
  FlatProfile p{q.distance(x, y), {}};
  for (int u = 0; u < q.piece_count(); ++u) p.flats.push_back(flat_distance(q, u, x, y));
  return p;
}

std::int64_t threshold_sum(const std::vector<int>& flats, const Rational& threshold) {
  std::int64_t sum = 0;
  for (int f : flats) {
    if (Rational(f) >= threshold) sum += f;
  }
  return sum;
}

void check_pair(const QuasiTreeSpace& q, int x, int y) {
  if (x < 0 || x >= q.size() || y < 0 || y >= q.size()) {
    throw Error(ErrorCode::precondition, "distance formula: sample " + pair_text(x, y) + " out of range", {x, y});
  }
}

}  // namespace

DistanceFormulaReport check_bbf_distance_formula(const QuasiTreeSpace& q, const Rational& k_prime,
                                                 const std::vector<std::pair<int, int>>& samples) {
  if (k_prime <= q.k()) {
    throw Error(ErrorCode::precondition, "check_bbf_distance_formula: K' = " + k_prime.to_string() + " must exceed K = " + q.k().to_string());
  }
  DistanceFormulaReport report;
  report.k = q.k();
  report.k_prime = k_prime;
  const Rational upper_offset = Rational(6) * q.k();
  for (const auto& [x, y] : samples) {
    check_pair(q, x, y);
    const FlatProfile p = flat_profile(q, x, y);
    DistanceFormulaSample s;
    s.x = x;
    s.y = y;
    s.distance = p.distance;
    s.lower_sum = threshold_sum(p.flats, k_prime);
    s.upper_sum = threshold_sum(p.flats, q.k());
    s.lower_holds = Rational(s.lower_sum, 2) <= p.distance;
    const Rational upper = upper_offset + Rational(4 * s.upper_sum);
    s.upper_holds = p.distance <= upper;
    if (!s.lower_holds) ++report.lower_failures;
    if (!s.upper_holds) ++report.upper_failures;
    if (upper > 0) {
      report.max_upper_ratio = std::max(report.max_upper_ratio, (p.distance / upper).to_double());
    } else if (p.distance > 0) {
      report.max_upper_ratio = std::numeric_limits<double>::infinity();
    }
    if (p.distance > 0) {
      report.max_lower_ratio = std::max(report.max_lower_ratio, (Rational(s.lower_sum, 2) / p.distance).to_double());
    } else if (s.lower_sum > 0) {
      report.max_lower_ratio = std::numeric_limits<double>::infinity();
    }
    report.samples.push_back(s);
  }
  return report;
}

std::optional<Rational> find_lower_threshold(const QuasiTreeSpace& q, const std::vector<std::pair<int, int>>& samples) {
  const Rational limit = max(Rational(20) * q.k(), Rational(q.k().floor() + 1));
  std::vector<FlatProfile> profiles;
  std::vector<std::int64_t> candidates{q.k().floor() + 1};
  for (const auto& [x, y] : samples) {
    check_pair(q, x, y);
    profiles.push_back(flat_profile(q, x, y));
    for (int f : profiles.back().flats) {
      if (Rational(f + 1) > q.k()) candidates.push_back(f + 1);
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (std::int64_t c : candidates) {
    if (Rational(c) > limit) break;
    const bool ok = std::all_of(profiles.begin(), profiles.end(), [&](const FlatProfile& p) {
      return Rational(threshold_sum(p.flats, c), 2) <= p.distance;
    });
    if (ok) return Rational(c);
  }
  return std::nullopt;
}

PieceEmbeddingVerdict piece_embedding_check(const QuasiTreeSpace& q, int piece) {
  if (piece < 0 || piece >= q.piece_count()) throw Error(ErrorCode::precondition, "piece_embedding_check: unknown piece", {piece});
  PieceEmbeddingVerdict verdict;
  const DistanceMatrix& local = q.metrics().piece_distances(piece);
  const int size = q.piece_size(piece);
  for (Vertex a = 0; a < size && verdict.isometric; ++a) {
    for (Vertex b = a + 1; b < size; ++b) {
      if (q.scaled_distance(q.global(piece, a), q.global(piece, b)) != static_cast<std::int64_t>(local(a, b)) * q.scale()) {
        verdict.isometric = false;
        verdict.witness = {a, b};
        break;
      }
    }
  }
  if (!verdict.isometric) {
    verdict.totally_geodesic = false;
    return verdict;
  }

  // A geodesic leaving the piece has a subpath exiting at some attachment
  // point p and re-entering at q with no piece vertex in between. Search from
  // each exit point without passing through the piece.
  const int n = q.size();
  std::vector<std::vector<std::pair<int, std::int64_t>>> adj(n);
  const ProjectionSystem& s = q.system();
  for (int p = 0; p < q.piece_count(); ++p) {
    for (const Edge& e : s.pieces[p].edges()) {
      adj[q.global(p, e.first)].emplace_back(q.global(p, e.second), q.scale());
      adj[q.global(p, e.second)].emplace_back(q.global(p, e.first), q.scale());
    }
  }
  std::vector<int> exits;
  for (const AttachmentEdge& e : q.attachments()) {
    adj[e.a].emplace_back(e.b, q.l().num());
    adj[e.b].emplace_back(e.a, q.l().num());
    if (q.piece_of(e.a) == piece) exits.push_back(e.a);
    if (q.piece_of(e.b) == piece) exits.push_back(e.b);
  }
  std::sort(exits.begin(), exits.end());
  exits.erase(std::unique(exits.begin(), exits.end()), exits.end());

  using Item = std::pair<std::int64_t, int>;
  std::vector<std::int64_t> dist(n);
  for (int src : exits) {
    std::fill(dist.begin(), dist.end(), -1);
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    dist[src] = 0;
    heap.emplace(0, src);
    while (!heap.empty()) {
      const auto [du, u] = heap.top();
      heap.pop();
      if (du != dist[u]) continue;
      if (u != src && q.piece_of(u) == piece) continue;
      for (const auto& [w, len] : adj[u]) {
        if (u == src && q.piece_of(w) == piece) continue;
        if (dist[w] < 0 || du + len < dist[w]) {
          dist[w] = du + len;
          heap.emplace(dist[w], w);
        }
      }
    }
    for (Vertex b = 0; b < size; ++b) {
      const int g = q.global(piece, b);
      if (g != src && dist[g] >= 0 && dist[g] == q.scaled_distance(src, g)) {
        verdict.totally_geodesic = false;
        verdict.witness = {q.local_of(src), b};
        return verdict;
      }
    }
  }
  return verdict;
}

}  // namespace cubulate
