#include "cubulate/median.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "cubulate/error.hpp"

namespace cubulate {

namespace {

using Word = std::uint64_t;

// Interval bitsets are kept for every pair up to this size; above it the
// check falls back to a per-triple scan.
constexpr int kBitsetLimit = 700;

// Products are stored with a dense distance matrix.
constexpr std::int64_t kProductLimit = 4096;

std::string triple_text(Vertex x, Vertex y, Vertex z) {
  return "(" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + ")";
}

}  // namespace

MedianVerdict is_median_graph(const UnitGraph& g) {
  const DistanceMatrix d = all_pairs_distances(g);
  const int n = g.size();
  MedianVerdict verdict;

  if (n <= kBitsetLimit) {
    const int words = (n + 63) / 64;
    std::vector<Word> bits(static_cast<std::size_t>(n) * n * words, 0);
    auto slot = [&](Vertex a, Vertex b) {
      return bits.data() + (static_cast<std::size_t>(a) * n + b) * words;
    };
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = a; b < n; ++b) {
        Word* w = slot(a, b);
        const int dab = d(a, b);
        for (Vertex v = 0; v < n; ++v) {
          if (d(a, v) + d(v, b) == dab) w[v / 64] |= Word{1} << (v % 64);
        }
        if (b != a) std::copy(w, w + words, slot(b, a));
      }
    }
    for (Vertex x = 0; x < n; ++x) {
      for (Vertex y = x; y < n; ++y) {
        const Word* xy = slot(x, y);
        for (Vertex z = y; z < n; ++z) {
          const Word* yz = slot(y, z);
          const Word* xz = slot(x, z);
          int count = 0;
          for (int k = 0; k < words && count < 2; ++k) {
            count += std::popcount(xy[k] & yz[k] & xz[k]);
          }
          if (count != 1) {
            verdict.is_median = false;
            verdict.witness = std::array<Vertex, 3>{x, y, z};
            verdict.witness_median_count = count;
            return verdict;
          }
        }
      }
    }
    return verdict;
  }

  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x; y < n; ++y) {
      for (Vertex z = y; z < n; ++z) {
        int count = 0;
        for (Vertex v = 0; v < n && count < 2; ++v) {
          if (d(x, v) + d(v, y) == d(x, y) && d(y, v) + d(v, z) == d(y, z) &&
              d(x, v) + d(v, z) == d(x, z)) {
            ++count;
          }
        }
        if (count != 1) {
          verdict.is_median = false;
          verdict.witness = std::array<Vertex, 3>{x, y, z};
          verdict.witness_median_count = count;
          return verdict;
        }
      }
    }
  }
  return verdict;
}

Vertex walk_median(const UnitGraph& g, const DistanceMatrix& d, Vertex x, Vertex y, Vertex z) {
  const int steps = (d(x, y) + d(x, z) - d(y, z)) / 2;
  Vertex cur = x;
  for (int s = 0; s < steps; ++s) {
    Vertex next = -1;
    for (Vertex w : g.neighbours(cur)) {
      if (d(w, y) == d(cur, y) - 1 && d(w, z) == d(cur, z) - 1) {
        next = w;
        break;
      }
    }
    if (next < 0) {
      throw Error(ErrorCode::not_median, "no median for triple " + triple_text(x, y, z), {x, y, z});
    }
    cur = next;
  }
  return cur;
}

MedianAlgebra MedianAlgebra::verified(UnitGraph g) {
  auto verdict = is_median_graph(g);
  if (!verdict.is_median) {
    const auto& w = *verdict.witness;
    throw Error(ErrorCode::not_median,
                "graph is not median: triple " + triple_text(w[0], w[1], w[2]) + " has " +
                    std::to_string(verdict.witness_median_count) + " medians",
                {w[0], w[1], w[2]});
  }
  auto impl = std::make_shared<Impl>();
  impl->dist = all_pairs_distances(g);
  impl->graph = std::move(g);
  return MedianAlgebra(std::move(impl));
}

MedianAlgebra MedianAlgebra::product_of_trees(std::vector<UnitGraph> factors) {
  if (factors.empty()) throw Error(ErrorCode::malformed_input, "product needs at least one factor");
  auto impl = std::make_shared<Impl>();
  std::int64_t total = 1;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (!is_tree(factors[i])) {
      throw Error(ErrorCode::precondition, "product factor " + std::to_string(i) + " is not a tree",
                  {static_cast<int>(i)});
    }
    impl->factor_dist.push_back(all_pairs_distances(factors[i]));
    total *= factors[i].size();
    if (total > kProductLimit) throw Error(ErrorCode::guard_exceeded, "product of trees too large");
  }
  const int k = static_cast<int>(factors.size());
  impl->strides.assign(static_cast<std::size_t>(k), 1);
  for (int i = k - 2; i >= 0; --i) impl->strides[i] = impl->strides[i + 1] * factors[i + 1].size();
  const int n = static_cast<int>(total);

  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) {
    for (int i = 0; i < k; ++i) {
      const int coord = (v / impl->strides[i]) % factors[i].size();
      for (Vertex w : factors[i].neighbours(coord)) {
        if (w > coord) edges.emplace_back(v, v + (w - coord) * impl->strides[i]);
      }
    }
  }
  impl->graph = UnitGraph(n, std::move(edges));
  impl->dist = DistanceMatrix(n);
  std::vector<int> cu(static_cast<std::size_t>(k)), cv(static_cast<std::size_t>(k));
  for (Vertex u = 0; u < n; ++u) {
    for (int i = 0; i < k; ++i) cu[i] = (u / impl->strides[i]) % factors[i].size();
    for (Vertex v = 0; v < n; ++v) {
      int sum = 0;
      for (int i = 0; i < k; ++i) sum += impl->factor_dist[i](cu[i], (v / impl->strides[i]) % factors[i].size());
      impl->dist.at(u, v) = sum;
    }
  }
  impl->factors = std::move(factors);
  return MedianAlgebra(std::move(impl));
}

MedianAlgebra MedianAlgebra::subalgebra(const MedianAlgebra& m, const VertexSet& y) {
  const IsometryVerdict verdict = check_isometric_subalgebra(m, y);
  if (!verdict.isometric) {
    throw Error(ErrorCode::invariant, "median-closed 1-connected subset is not isometric",
                {verdict.witness->first, verdict.witness->second});
  }
  auto impl = std::make_shared<Impl>();
  impl->graph = induced_subgraph(m.graph(), y);
  const int n = static_cast<int>(y.size());
  impl->dist = DistanceMatrix(n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) impl->dist.at(a, b) = m.distance(y[a], y[b]);
  }
  return MedianAlgebra(std::move(impl));
}

Vertex MedianAlgebra::median(Vertex x, Vertex y, Vertex z) const {
  if (!is_product()) return walk_median(impl_->graph, impl_->dist, x, y, z);
  Vertex out = 0;
  for (std::size_t i = 0; i < impl_->factors.size(); ++i) {
    const int stride = impl_->strides[i];
    const int n = impl_->factors[i].size();
    out += stride * walk_median(impl_->factors[i], impl_->factor_dist[i], (x / stride) % n,
                                (y / stride) % n, (z / stride) % n);
  }
  return out;
}

std::vector<Vertex> MedianAlgebra::coordinates(Vertex v) const {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < impl_->factors.size(); ++i) {
    out.push_back((v / impl_->strides[i]) % impl_->factors[i].size());
  }
  return out;
}

Vertex MedianAlgebra::from_coordinates(std::span<const Vertex> coords) const {
  if (coords.size() != impl_->factors.size()) {
    throw Error(ErrorCode::malformed_input, "coordinate tuple has wrong length");
  }
  Vertex v = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] < 0 || coords[i] >= impl_->factors[i].size()) {
      throw Error(ErrorCode::malformed_input, "coordinate out of range");
    }
    v += coords[i] * impl_->strides[i];
  }
  return v;
}

Vertex median_triple(const MedianAlgebra& m, Vertex x, Vertex y, Vertex z) { return m.median(x, y, z); }

VertexSet subalgebra_closure(const MedianAlgebra& m, const VertexSet& a) {
  if (a.empty()) throw Error(ErrorCode::precondition, "closure of an empty set");
  std::vector<char> in(static_cast<std::size_t>(m.size()), 0);
  std::vector<Vertex> pending;
  for (Vertex v : a) {
    if (!in[v]) {
      in[v] = 1;
      pending.push_back(v);
    }
  }
  // Each element, once processed, has been combined with every pair of
  // previously processed elements (itself included).
  std::vector<Vertex> processed;
  for (std::size_t head = 0; head < pending.size(); ++head) {
    const Vertex x = pending[head];
    processed.push_back(x);
    for (std::size_t i = 0; i < processed.size(); ++i) {
      for (std::size_t j = i + 1; j < processed.size(); ++j) {
        const Vertex med = m.median(x, processed[i], processed[j]);
        if (!in[med]) {
          in[med] = 1;
          pending.push_back(med);
        }
      }
    }
  }
  return make_vertex_set(std::move(processed));
}

bool is_median_closed(const MedianAlgebra& m, const VertexSet& y, std::array<Vertex, 3>* offending) {
  std::vector<char> in(static_cast<std::size_t>(m.size()), 0);
  for (Vertex v : y) in[v] = 1;
  for (std::size_t i = 0; i < y.size(); ++i) {
    for (std::size_t j = i + 1; j < y.size(); ++j) {
      for (std::size_t k = j + 1; k < y.size(); ++k) {
        if (!in[m.median(y[i], y[j], y[k])]) {
          if (offending) *offending = {y[i], y[j], y[k]};
          return false;
        }
      }
    }
  }
  return true;
}

bool is_c_connected(const MedianAlgebra& m, const VertexSet& a, int c) {
  if (a.empty()) return true;
  std::vector<char> seen(a.size(), 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t i = stack.back();
    stack.pop_back();
    for (std::size_t j = 0; j < a.size(); ++j) {
      if (!seen[j] && m.distance(a[i], a[j]) <= c) {
        seen[j] = 1;
        ++reached;
        stack.push_back(j);
      }
    }
  }
  return reached == a.size();
}

int one_sided_hausdorff(const UnitGraph& g, const VertexSet& from, const VertexSet& to) {
  const auto dist = bfs_distances(g, to);
  int worst = 0;
  for (Vertex v : from) worst = std::max(worst, dist[v]);
  return worst;
}

int hausdorff_distance(const UnitGraph& g, const VertexSet& a, const VertexSet& b) {
  return std::max(one_sided_hausdorff(g, a, b), one_sided_hausdorff(g, b, a));
}

SubsetReport median_subset_report(const MedianAlgebra& m, const VertexSet& a, int c, int max_median_gap) {
  if (a.empty()) throw Error(ErrorCode::precondition, "subset report on an empty set");
  SubsetReport report;
  report.subset = a;
  report.c = c;
  report.m = max_median_gap;
  report.is_c_connected = is_c_connected(m, a, c);

  const auto to_a = bfs_distances(m.graph(), a);
  int worst = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      for (std::size_t k = j + 1; k < a.size(); ++k) {
        worst = std::max(worst, to_a[m.median(a[i], a[j], a[k])]);
      }
    }
  }
  report.minimal_m = worst;
  report.is_m_median = worst <= max_median_gap;
  report.closure = subalgebra_closure(m, a);
  report.hausdorff_to_closure = hausdorff_distance(m.graph(), a, report.closure);
  return report;
}

ConnectifyResult connectify_and_close(const MedianAlgebra& m, const VertexSet& a, int c) {
  if (a.empty()) throw Error(ErrorCode::precondition, "connectify of an empty set");
  if (c < 1 || !is_c_connected(m, a, c)) {
    throw Error(ErrorCode::precondition, "set is not " + std::to_string(c) + "-connected");
  }
  const auto pieces = induced_components(m.graph(), a);
  ConnectifyResult result;
  VertexSet augmented = a;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    for (std::size_t j = i + 1; j < pieces.size(); ++j) {
      int best = c + 1;
      Vertex from = -1, to = -1;
      for (Vertex x : pieces[i]) {
        for (Vertex y : pieces[j]) {
          const int dxy = m.distance(x, y);
          if (dxy < best) {
            best = dxy;
            from = x;
            to = y;
          }
        }
      }
      if (from < 0) continue;
      auto path = least_geodesic(m.graph(), m.distances(), from, to);
      augmented = set_union(augmented, make_vertex_set(path));
      result.bridges.push_back(std::move(path));
    }
  }
  result.augmented = augmented;
  result.closure = subalgebra_closure(m, augmented);
  result.hausdorff = hausdorff_distance(m.graph(), a, result.closure);
  result.one_connected = induced_components(m.graph(), result.closure).size() == 1;
  return result;
}

IsometryVerdict check_isometric_subalgebra(const MedianAlgebra& m, const VertexSet& y) {
  if (y.empty()) throw Error(ErrorCode::precondition, "empty subalgebra");
  const auto components = induced_components(m.graph(), y);
  if (components.size() > 1) {
    const Vertex u = components[0].front();
    const Vertex v = components[1].front();
    throw Error(ErrorCode::precondition,
                "set is not 1-connected: " + std::to_string(u) + " and " + std::to_string(v) +
                    " lie in different pieces",
                {u, v});
  }
  std::array<Vertex, 3> bad{};
  if (!is_median_closed(m, y, &bad)) {
    throw Error(ErrorCode::precondition,
                "set is not median-closed: median of " + triple_text(bad[0], bad[1], bad[2]) + " missing",
                {bad[0], bad[1], bad[2]});
  }
  const UnitGraph sub = induced_subgraph(m.graph(), y);
  IsometryVerdict verdict;
  for (int i = 0; i < sub.size(); ++i) {
    Vertex src[] = {i};
    const auto local = bfs_distances(sub, src);
    for (int j = i + 1; j < sub.size(); ++j) {
      const int ambient = m.distance(y[i], y[j]);
      if (local[j] != ambient) {
        verdict.isometric = false;
        verdict.witness = std::pair{y[i], y[j]};
        verdict.induced_distance = local[j];
        verdict.ambient_distance = ambient;
        return verdict;
      }
    }
  }
  return verdict;
}

}  // namespace cubulate
